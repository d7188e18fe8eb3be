#ifndef PARTMETER_H
#define PARTMETER_H

/*
 * C interface to the partmeter library: generation of ascending compositions
 * in lexicographic order, exact counting, write metering and identity sweeps.
 *
 * Conventions:
 *  - every fallible call returns a pm_status; PM_OK is zero, failures are
 *    negative; pm_last_error() then holds a message for the calling thread;
 *  - objects are opaque handles created by pm_*_create (or returned through
 *    an out parameter) and released by the matching pm_*_destroy, which
 *    accepts NULL;
 *  - counts are exact unsigned 128-bit values split into two 64-bit halves.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARTMETER_BUILDING)
#    define PM_API __declspec(dllexport)
#  else
#    define PM_API __declspec(dllimport)
#  endif
#else
#  define PM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pm_status {
  PM_OK = 0,
  PM_DONE = 1, /* iterator exhausted; not an error */
  PM_ERR_INVALID_ARGUMENT = -1,
  PM_ERR_INVALID_PARAMS = -2, /* (n, m) outside 1 <= m <= n */
  PM_ERR_EMPTY_COMPOSITION = -3,
  PM_ERR_NONPOSITIVE_PART = -4,
  PM_ERR_DESCENT = -5,
  PM_ERR_NO_SUCCESSOR = -6,
  PM_ERR_OVERFLOW = -7,
  PM_ERR_MEMO_LIMIT = -8,
  PM_ERR_BUFFER_TOO_SMALL = -9,
  PM_ERR_INTERNAL = -10
} pm_status;

typedef struct pm_count {
  uint64_t lo;
  uint64_t hi;
} pm_count;

/* 40 bytes hold any pm_count in decimal plus the terminator. */
#define PM_COUNT_DECIMAL_MAX 40

typedef struct pm_successor_plan {
  size_t prefix_len;
  uint32_t fill_part;
  uint32_t fill_count;
  uint32_t remainder;
  uint32_t transition_sum;
} pm_successor_plan;

typedef struct pm_trace_summary {
  uint64_t initial_writes;
  pm_count total_writes;
  pm_count compositions;
  pm_count amortized_num; /* total_writes / compositions in lowest terms */
  pm_count amortized_den;
  size_t transitions_stored;
  int truncated;
} pm_trace_summary;

#define PM_REPORT_MAX_EXTRA 4

typedef struct pm_report_row {
  uint32_t n;
  uint32_t m;
  pm_count lhs;
  pm_count rhs;
  size_t extra_count;
  pm_count extra[PM_REPORT_MAX_EXTRA];
  int pass;
} pm_report_row;

typedef enum pm_identity {
  PM_IDENTITY_LARGE_PARTS = 0,         /* sum of large-parts terms = 2p(n) - 1 */
  PM_IDENTITY_SUFFIX_LENGTH = 1,       /* sfl(n, m) = 2 nac(n, m) - 1, three ways */
  PM_IDENTITY_GENERAL_M = 2,           /* general-m form, sum over sac(n, m) */
  PM_IDENTITY_GENERAL_M_FULL_SET = 3   /* general-m form, sum over sac(n) */
} pm_identity;

typedef enum pm_diagram_format { PM_DIAGRAM_ASCII = 0, PM_DIAGRAM_SVG = 1 } pm_diagram_format;

typedef struct pm_counter pm_counter;
typedef struct pm_iterator pm_iterator;
typedef struct pm_write_trace pm_write_trace;
typedef struct pm_report pm_report;
typedef struct pm_diagram pm_diagram;

PM_API const char* pm_status_name(pm_status status);
PM_API const char* pm_last_error(void);

PM_API pm_status pm_count_to_decimal(pm_count value, char* buf, size_t cap);

/* Compositions. Output buffers must hold at least n / m parts. */
PM_API pm_status pm_composition_validate(const int64_t* parts, size_t len, size_t* bad_index);
PM_API pm_status pm_lexmin(uint32_t n, uint32_t m, uint32_t* out, size_t cap, size_t* out_len);
PM_API pm_status pm_plan_successor(const uint32_t* parts, size_t len, pm_successor_plan* plan);
PM_API pm_status pm_apply_successor(const uint32_t* parts, size_t len, uint32_t* out, size_t cap,
                                    size_t* out_len);
PM_API pm_status pm_large_parts_term(const uint32_t* parts, size_t len, uint64_t* term);

/* Lexicographic iteration over sac(n, m). Each pm_iterator_next returns
 * PM_OK with the next element, or PM_DONE after [n] has been returned. The
 * parts pointer stays valid until the following call on the same iterator.
 */
PM_API pm_status pm_iterator_create(uint32_t n, uint32_t m, pm_iterator** out);
PM_API pm_status pm_iterator_next(pm_iterator* it, const uint32_t** parts, size_t* len,
                                  size_t* writes);
PM_API void pm_iterator_destroy(pm_iterator* it);

/* Counting. memo_limit caps the number of memo entries per table; 0 means
 * unlimited. A counter must not be used from two threads at once.
 */
PM_API pm_status pm_counter_create(size_t memo_limit, pm_counter** out);
PM_API void pm_counter_destroy(pm_counter* counter);
PM_API pm_status pm_nac(pm_counter* counter, uint32_t n, uint32_t m, pm_count* out);
PM_API pm_status pm_partition_count(pm_counter* counter, uint32_t n, pm_count* out);
PM_API pm_status pm_pentagonal_oracle(uint32_t n, pm_count* out);

/* Suffix length and write metering. */
PM_API pm_status pm_sfl_recurrence(pm_counter* counter, uint32_t n, uint32_t m, pm_count* out);
PM_API pm_status pm_sfl_via_writes(uint32_t n, uint32_t m, pm_count* out);
PM_API pm_status pm_large_parts_sum(uint32_t n, uint32_t m, pm_count* out);
PM_API pm_status pm_sfl_measured(uint32_t n, uint32_t m, size_t transition_cap,
                                 pm_write_trace** out);
PM_API pm_status pm_write_trace_summary(const pm_write_trace* trace, pm_trace_summary* out);
PM_API pm_status pm_write_trace_transitions(const pm_write_trace* trace, const uint64_t** values,
                                            size_t* len);
PM_API void pm_write_trace_destroy(pm_write_trace* trace);

/* Identity sweeps over 1 <= n <= max_n (and 1 <= m <= n where applicable).
 * A failing row is data, not an error: the call still returns PM_OK.
 */
PM_API pm_status pm_verify(pm_counter* counter, pm_identity identity, uint32_t max_n,
                           unsigned jobs, pm_report** out);
PM_API size_t pm_report_row_count(const pm_report* report);
PM_API int pm_report_all_pass(const pm_report* report);
PM_API pm_status pm_report_get_row(const pm_report* report, size_t index, pm_report_row* out);
/* Columns are lhs, rhs, then the extras. */
PM_API size_t pm_report_column_count(const pm_report* report);
PM_API const char* pm_report_column_name(const pm_report* report, size_t index);
PM_API size_t pm_report_note_count(const pm_report* report);
PM_API const char* pm_report_note(const pm_report* report, size_t index);
PM_API void pm_report_destroy(pm_report* report);

/* Adjacency-box diagrams. Rendered text is released with pm_string_free. */
PM_API pm_status pm_diagram_create(uint32_t n, uint32_t m, pm_diagram** out);
PM_API size_t pm_diagram_box_count(const pm_diagram* diagram);
PM_API size_t pm_diagram_row_count(const pm_diagram* diagram);
PM_API pm_status pm_diagram_render(const pm_diagram* diagram, pm_diagram_format format,
                                   const char* caption, char** out);
PM_API void pm_diagram_destroy(pm_diagram* diagram);
PM_API void pm_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif
