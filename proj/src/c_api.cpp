#include "partmeter/partmeter.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "partmeter/composition.hpp"
#include "partmeter/counting.hpp"
#include "partmeter/diagram.hpp"
#include "partmeter/identity.hpp"
#include "partmeter/suffix_metrics.hpp"

using namespace partmeter;

struct pm_counter {
  NacTable nacs;
  SflTable sfls;
  pm_counter(std::size_t limit) : nacs(limit), sfls(limit) {}
};

struct pm_iterator {
  CompositionGenerator gen;
  bool started = false;
  bool done = false;
};

struct pm_write_trace {
  WriteTrace trace;
};

struct pm_report {
  VerificationReport report;
};

struct pm_diagram {
  BoxDiagram diagram;
};

namespace {

thread_local std::string last_error;

pm_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyComposition: return PM_ERR_EMPTY_COMPOSITION;
    case ErrorKind::NonPositivePart: return PM_ERR_NONPOSITIVE_PART;
    case ErrorKind::Descent: return PM_ERR_DESCENT;
    case ErrorKind::InvalidParams: return PM_ERR_INVALID_PARAMS;
    case ErrorKind::NoSuccessor: return PM_ERR_NO_SUCCESSOR;
    case ErrorKind::Overflow: return PM_ERR_OVERFLOW;
    case ErrorKind::MemoLimit: return PM_ERR_MEMO_LIMIT;
    case ErrorKind::InvalidArgument: return PM_ERR_INVALID_ARGUMENT;
  }
  return PM_ERR_INTERNAL;
}

pm_status fail(pm_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body() and converts any exception into a status code.
template <class Body>
pm_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PM_ERR_INTERNAL, "unknown exception");
  }
}

pm_count to_c(CountValue v) {
  return pm_count{static_cast<std::uint64_t>(v.value()),
                  static_cast<std::uint64_t>(v.value() >> 64)};
}

CountValue from_c(pm_count c) {
  return CountValue((static_cast<uint128_t>(c.hi) << 64) | c.lo);
}

AscendingComposition composition_from(const uint32_t* parts, size_t len) {
  if (len == 0) throw Error(ErrorKind::EmptyComposition, "composition must be nonempty");
  if (parts == nullptr) throw Error(ErrorKind::InvalidArgument, "parts is null");
  std::vector<std::int64_t> wide(parts, parts + len);
  return AscendingComposition::from_parts(wide);
}

pm_status copy_parts(std::span<const Part> parts, uint32_t* out, size_t cap, size_t* out_len) {
  if (out_len == nullptr) return fail(PM_ERR_INVALID_ARGUMENT, "out_len is null");
  *out_len = parts.size();
  if (cap < parts.size() || out == nullptr)
    return fail(PM_ERR_BUFFER_TOO_SMALL,
                "output needs " + std::to_string(parts.size()) + " parts");
  std::copy(parts.begin(), parts.end(), out);
  return PM_OK;
}

template <class T>
pm_status require(T* ptr, const char* name) {
  if (ptr == nullptr) return fail(PM_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
  return PM_OK;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* pm_status_name(pm_status status) {
  switch (status) {
    case PM_OK: return "ok";
    case PM_DONE: return "done";
    case PM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PM_ERR_INVALID_PARAMS: return "invalid parameters";
    case PM_ERR_EMPTY_COMPOSITION: return "empty composition";
    case PM_ERR_NONPOSITIVE_PART: return "non-positive part";
    case PM_ERR_DESCENT: return "descent";
    case PM_ERR_NO_SUCCESSOR: return "no successor";
    case PM_ERR_OVERFLOW: return "overflow";
    case PM_ERR_MEMO_LIMIT: return "memo limit exceeded";
    case PM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case PM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pm_last_error(void) { return last_error.c_str(); }

pm_status pm_count_to_decimal(pm_count value, char* buf, size_t cap) {
  return guarded([&] {
    if (auto s = require(buf, "buf")) return s;
    const std::string text = from_c(value).to_string();
    if (cap < text.size() + 1) return fail(PM_ERR_BUFFER_TOO_SMALL, "decimal buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return PM_OK;
  });
}

pm_status pm_composition_validate(const int64_t* parts, size_t len, size_t* bad_index) {
  return guarded([&] {
    if (bad_index != nullptr) *bad_index = 0;
    if (len > 0) {
      if (auto s = require(parts, "parts")) return s;
    }
    try {
      AscendingComposition::from_parts(std::span<const std::int64_t>(parts, len));
    } catch (const Error& e) {
      if (bad_index != nullptr) *bad_index = e.index();
      throw;
    }
    return PM_OK;
  });
}

pm_status pm_lexmin(uint32_t n, uint32_t m, uint32_t* out, size_t cap, size_t* out_len) {
  return guarded([&] { return copy_parts(lexmin(SacParams(n, m)).parts(), out, cap, out_len); });
}

pm_status pm_plan_successor(const uint32_t* parts, size_t len, pm_successor_plan* plan) {
  return guarded([&] {
    if (auto s = require(plan, "plan")) return s;
    const SuccessorPlan p = successor_plan(composition_from(parts, len));
    *plan = pm_successor_plan{p.prefix_len, p.fill_part, p.fill_count, p.remainder,
                              p.transition_sum};
    return PM_OK;
  });
}

pm_status pm_apply_successor(const uint32_t* parts, size_t len, uint32_t* out, size_t cap,
                             size_t* out_len) {
  return guarded([&] {
    return copy_parts(apply_successor(composition_from(parts, len)).parts(), out, cap, out_len);
  });
}

pm_status pm_large_parts_term(const uint32_t* parts, size_t len, uint64_t* term) {
  return guarded([&] {
    if (auto s = require(term, "term")) return s;
    *term = large_parts_term(composition_from(parts, len));
    return PM_OK;
  });
}

pm_status pm_iterator_create(uint32_t n, uint32_t m, pm_iterator** out) {
  return guarded([&] {
    if (auto s = require(out, "out")) return s;
    *out = new pm_iterator{CompositionGenerator(SacParams(n, m))};
    return PM_OK;
  });
}

pm_status pm_iterator_next(pm_iterator* it, const uint32_t** parts, size_t* len, size_t* writes) {
  return guarded([&] {
    if (auto s = require(it, "iterator")) return s;
    if (it->done) return PM_DONE;
    if (!it->started) {
      it->started = true;
    } else if (!it->gen.next()) {
      it->done = true;
      return PM_DONE;
    }
    const auto cur = it->gen.current();
    if (parts != nullptr) *parts = cur.data();
    if (len != nullptr) *len = cur.size();
    if (writes != nullptr) *writes = it->gen.last_writes();
    return PM_OK;
  });
}

void pm_iterator_destroy(pm_iterator* it) { delete it; }

pm_status pm_counter_create(size_t memo_limit, pm_counter** out) {
  return guarded([&] {
    if (auto s = require(out, "out")) return s;
    *out = new pm_counter(memo_limit == 0 ? kUnlimitedMemo : memo_limit);
    return PM_OK;
  });
}

void pm_counter_destroy(pm_counter* counter) { delete counter; }

pm_status pm_nac(pm_counter* counter, uint32_t n, uint32_t m, pm_count* out) {
  return guarded([&] {
    if (auto s = require(counter, "counter")) return s;
    if (auto s = require(out, "out")) return s;
    *out = to_c(nac(counter->nacs, SacParams(n, m)));
    return PM_OK;
  });
}

pm_status pm_partition_count(pm_counter* counter, uint32_t n, pm_count* out) {
  return pm_nac(counter, n, 1, out);
}

pm_status pm_pentagonal_oracle(uint32_t n, pm_count* out) {
  return guarded([&] {
    if (auto s = require(out, "out")) return s;
    *out = to_c(pentagonal_oracle(n));
    return PM_OK;
  });
}

pm_status pm_sfl_recurrence(pm_counter* counter, uint32_t n, uint32_t m, pm_count* out) {
  return guarded([&] {
    if (auto s = require(counter, "counter")) return s;
    if (auto s = require(out, "out")) return s;
    *out = to_c(sfl_recurrence(counter->sfls, SacParams(n, m)));
    return PM_OK;
  });
}

pm_status pm_sfl_via_writes(uint32_t n, uint32_t m, pm_count* out) {
  return guarded([&] {
    if (auto s = require(out, "out")) return s;
    *out = to_c(sfl_via_writes(SacParams(n, m)));
    return PM_OK;
  });
}

pm_status pm_large_parts_sum(uint32_t n, uint32_t m, pm_count* out) {
  return guarded([&] {
    if (auto s = require(out, "out")) return s;
    *out = to_c(large_parts_sum(SacParams(n, m)));
    return PM_OK;
  });
}

pm_status pm_sfl_measured(uint32_t n, uint32_t m, size_t transition_cap, pm_write_trace** out) {
  return guarded([&] {
    if (auto s = require(out, "out")) return s;
    *out = new pm_write_trace{sfl_measured(SacParams(n, m), transition_cap)};
    return PM_OK;
  });
}

pm_status pm_write_trace_summary(const pm_write_trace* trace, pm_trace_summary* out) {
  return guarded([&] {
    if (auto s = require(trace, "trace")) return s;
    if (auto s = require(out, "out")) return s;
    const WriteTrace& t = trace->trace;
    const Ratio r = t.amortized();
    *out = pm_trace_summary{t.initial_writes,
                            to_c(t.total()),
                            to_c(t.compositions_visited),
                            to_c(r.num),
                            to_c(r.den),
                            t.transition_writes.size(),
                            t.truncated() ? 1 : 0};
    return PM_OK;
  });
}

pm_status pm_write_trace_transitions(const pm_write_trace* trace, const uint64_t** values,
                                     size_t* len) {
  return guarded([&] {
    if (auto s = require(trace, "trace")) return s;
    if (auto s = require(values, "values")) return s;
    if (auto s = require(len, "len")) return s;
    *values = trace->trace.transition_writes.data();
    *len = trace->trace.transition_writes.size();
    return PM_OK;
  });
}

void pm_write_trace_destroy(pm_write_trace* trace) { delete trace; }

pm_status pm_verify(pm_counter* counter, pm_identity identity, uint32_t max_n, unsigned jobs,
                    pm_report** out) {
  return guarded([&] {
    if (auto s = require(counter, "counter")) return s;
    if (auto s = require(out, "out")) return s;
    if (max_n < 1) return fail(PM_ERR_INVALID_ARGUMENT, "max_n must be at least 1");
    std::optional<VerificationReport> report;
    switch (identity) {
      case PM_IDENTITY_LARGE_PARTS:
        report = verify_eq1(counter->nacs, max_n, jobs);
        break;
      case PM_IDENTITY_SUFFIX_LENGTH:
        report = check_theorem1(counter->nacs, counter->sfls, max_n, jobs);
        break;
      case PM_IDENTITY_GENERAL_M:
        report = verify_eq6(counter->nacs, max_n, SumDomain::RestrictedSet, jobs);
        break;
      case PM_IDENTITY_GENERAL_M_FULL_SET:
        report = verify_eq6(counter->nacs, max_n, SumDomain::FullSet, jobs);
        break;
      default:
        return fail(PM_ERR_INVALID_ARGUMENT, "unknown identity");
    }
    *out = new pm_report{std::move(*report)};
    return PM_OK;
  });
}

size_t pm_report_row_count(const pm_report* report) {
  return report == nullptr ? 0 : report->report.rows.size();
}

int pm_report_all_pass(const pm_report* report) {
  return report != nullptr && report->report.all_pass() ? 1 : 0;
}

pm_status pm_report_get_row(const pm_report* report, size_t index, pm_report_row* out) {
  return guarded([&] {
    if (auto s = require(report, "report")) return s;
    if (auto s = require(out, "out")) return s;
    if (index >= report->report.rows.size())
      return fail(PM_ERR_INVALID_ARGUMENT, "row index out of range");
    const ReportRow& r = report->report.rows[index];
    pm_report_row row{};
    row.n = r.n;
    row.m = r.m;
    row.lhs = to_c(r.lhs);
    row.rhs = to_c(r.rhs);
    row.extra_count = std::min<size_t>(r.extra.size(), PM_REPORT_MAX_EXTRA);
    for (size_t i = 0; i < row.extra_count; ++i) row.extra[i] = to_c(r.extra[i]);
    row.pass = r.pass ? 1 : 0;
    *out = row;
    return PM_OK;
  });
}

size_t pm_report_column_count(const pm_report* report) {
  return report == nullptr ? 0 : 2 + report->report.extra_columns.size();
}

const char* pm_report_column_name(const pm_report* report, size_t index) {
  if (report == nullptr) return nullptr;
  const VerificationReport& r = report->report;
  if (index == 0) return r.lhs_label.c_str();
  if (index == 1) return r.rhs_label.c_str();
  if (index - 2 < r.extra_columns.size()) return r.extra_columns[index - 2].c_str();
  return nullptr;
}

size_t pm_report_note_count(const pm_report* report) {
  return report == nullptr ? 0 : report->report.notes.size();
}

const char* pm_report_note(const pm_report* report, size_t index) {
  if (report == nullptr || index >= report->report.notes.size()) return nullptr;
  return report->report.notes[index].c_str();
}

void pm_report_destroy(pm_report* report) { delete report; }

pm_status pm_diagram_create(uint32_t n, uint32_t m, pm_diagram** out) {
  return guarded([&] {
    if (auto s = require(out, "out")) return s;
    *out = new pm_diagram{layout_boxes(SacParams(n, m))};
    return PM_OK;
  });
}

size_t pm_diagram_box_count(const pm_diagram* diagram) {
  return diagram == nullptr ? 0 : diagram->diagram.box_count();
}

size_t pm_diagram_row_count(const pm_diagram* diagram) {
  return diagram == nullptr ? 0 : diagram->diagram.rows.size();
}

pm_status pm_diagram_render(const pm_diagram* diagram, pm_diagram_format format,
                            const char* caption, char** out) {
  return guarded([&] {
    if (auto s = require(diagram, "diagram")) return s;
    if (auto s = require(out, "out")) return s;
    switch (format) {
      case PM_DIAGRAM_ASCII:
        *out = duplicate(render_ascii(diagram->diagram));
        return PM_OK;
      case PM_DIAGRAM_SVG:
        *out = duplicate(render_svg(diagram->diagram, caption == nullptr ? "" : caption));
        return PM_OK;
    }
    return fail(PM_ERR_INVALID_ARGUMENT, "unknown diagram format");
  });
}

void pm_diagram_destroy(pm_diagram* diagram) { delete diagram; }

void pm_string_free(char* text) { std::free(text); }

}  // extern "C"
