#ifndef PARTMETER_SUFFIX_METRICS_HPP
#define PARTMETER_SUFFIX_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "partmeter/composition.hpp"
#include "partmeter/count_value.hpp"
#include "partmeter/counting.hpp"
#include "partmeter/report.hpp"

namespace partmeter {

using SflTable = BasicMemoTable<CountValue, 1>;
extern template class BasicMemoTable<CountValue, 1>;

inline constexpr std::size_t kDefaultTransitionCap = 1'000'000;

/* Write counts observed while generating sac(n, m). Per-transition values
 * are kept for the first `transition_cap` steps only; the running totals
 * always cover every step.
 */
struct WriteTrace {
  std::uint64_t initial_writes = 0;
  std::vector<std::uint64_t> transition_writes;
  CountValue transition_total;
  CountValue compositions_visited;
  std::size_t transition_cap = kDefaultTransitionCap;

  CountValue total() const { return CountValue(initial_writes) + transition_total; }
  bool truncated() const {
    return compositions_visited - CountValue(1) > CountValue(transition_writes.size());
  }
  // Exact writes per composition in lowest terms.
  Ratio amortized() const { return Ratio::reduced(total(), compositions_visited); }
};

// Suffix length from the memoized recurrence.
CountValue sfl_recurrence(SflTable& table, SacParams params);
CountValue sfl_recurrence(SacParams params);

/* Suffix length measured on the generated sequence: the first element
 * counts in full and each later one contributes its length minus the
 * longest prefix it shares with its predecessor.
 */
WriteTrace sfl_measured(SacParams params, std::size_t transition_cap = kDefaultTransitionCap);

// floor(n/m) + the large-parts term summed over sac(n, m) without [n].
CountValue sfl_via_writes(SacParams params);

// Length of the longest common prefix of two part sequences.
std::size_t common_prefix_length(std::span<const Part> a, std::span<const Part> b);

/* For all 1 <= m <= n <= max_n compares 2 nac(n, m) - 1 (lhs) against the
 * recurrence (rhs), the measured suffix length and the write decomposition.
 * `jobs` > 1 spreads rows over worker threads; row order is unaffected.
 */
VerificationReport check_theorem1(Part max_n, unsigned jobs = 1);
VerificationReport check_theorem1(NacTable& nac_table, SflTable& sfl_table, Part max_n,
                                  unsigned jobs = 1);

}  // namespace partmeter

#endif
