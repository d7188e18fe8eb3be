#ifndef PARTMETER_COUNTING_HPP
#define PARTMETER_COUNTING_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "partmeter/composition.hpp"
#include "partmeter/count_value.hpp"
#include "partmeter/error.hpp"

namespace partmeter {

inline constexpr std::size_t kUnlimitedMemo = std::numeric_limits<std::size_t>::max();

/* Memo table for recurrences of the shape
 *
 *   V(n, m) = 1 + sum_{x=m}^{floor(n/2)} (V(n - x, x) + Bonus)
 *
 * Bonus = 0 counts ascending compositions, Bonus = 1 gives the suffix
 * length. V(n, m) = 1 for every m > floor(n/2), so keys are clamped to
 * m <= floor(n/2) + 1 and row n stores floor(n/2) + 1 entries.
 *
 * Rows are filled bottom-up through the telescoped form
 * V(n, m) = V(n, m + 1) + V(n - m, m) + Bonus, which needs no recursion.
 * An entry whose value does not fit in Count is stored as empty, and so is
 * every entry depending on it; reading one throws Error(Overflow).
 *
 * Not synchronized. Call ensure() for the largest n first; after that the
 * const accessors are safe to call concurrently.
 */
template <class Count, unsigned Bonus>
class BasicMemoTable {
 public:
  explicit BasicMemoTable(std::size_t entry_limit = kUnlimitedMemo)
      : entry_limit_(entry_limit) {
    rows_.emplace_back();  // row 0 is never used
  }

  static std::size_t clamp_m(Part n, Part m) { return std::min<std::size_t>(m, n / 2 + 1); }

  // Number of entries needed for rows 1..n.
  static std::size_t entries_for(Part n) {
    std::size_t total = 0;
    for (Part r = 1; r <= n; ++r) total += r / 2 + 1;
    return total;
  }

  std::size_t max_n() const { return rows_.size() - 1; }
  std::size_t entries() const { return entries_; }
  std::size_t entry_limit() const { return entry_limit_; }

  // Fills rows up to n. Throws MemoLimit if that would exceed the entry cap.
  void ensure(Part n) {
    if (n <= max_n()) return;
    std::size_t needed = entries_;
    for (std::size_t r = rows_.size(); r <= n; ++r) needed += r / 2 + 1;
    if (needed > entry_limit_)
      throw Error(ErrorKind::MemoLimit, "memo table would need " + std::to_string(needed) +
                                            " entries, limit is " +
                                            std::to_string(entry_limit_));
    rows_.reserve(std::size_t{n} + 1);
    for (std::size_t r = rows_.size(); r <= n; ++r) fill_row(static_cast<Part>(r));
  }

  Count get(SacParams params) {
    ensure(params.n());
    return at(params.n(), params.m());
  }

  // Requires ensure(n) to have been called.
  Count at(Part n, Part m) const {
    if (n == 0 || n > max_n())
      throw Error(ErrorKind::InvalidArgument, "memo row " + std::to_string(n) + " not filled");
    const auto& v = rows_[n][clamp_m(n, m) - 1];
    if (!v)
      throw Error(ErrorKind::Overflow, "value at (" + std::to_string(n) + ", " +
                                           std::to_string(m) + ") exceeds count width");
    return *v;
  }

  std::optional<Count> try_at(Part n, Part m) const { return rows_.at(n)[clamp_m(n, m) - 1]; }

 private:
  void fill_row(Part n) {
    const std::size_t half = n / 2;
    std::vector<std::optional<Count>> row(half + 1);
    row[half] = Count(1);
    for (std::size_t m = half; m >= 1; --m) {
      const auto& tail = row[m];
      const auto& sub = rows_[n - m][clamp_m(static_cast<Part>(n - m), static_cast<Part>(m)) - 1];
      std::optional<Count> v;
      if (tail && sub) {
        v = Count::checked_add(*tail, *sub);
        if (v && Bonus != 0) v = Count::checked_add(*v, Count(Bonus));
      }
      row[m - 1] = v;
    }
    entries_ += row.size();
    rows_.push_back(std::move(row));
  }

  std::vector<std::vector<std::optional<Count>>> rows_;
  std::size_t entries_ = 0;
  std::size_t entry_limit_;
};

template <class Count>
using BasicNacTable = BasicMemoTable<Count, 0>;

using NacTable = BasicNacTable<CountValue>;
using NarrowNacTable = BasicNacTable<NarrowCount>;

extern template class BasicMemoTable<CountValue, 0>;
extern template class BasicMemoTable<NarrowCount, 0>;

CountValue nac(NacTable& table, SacParams params);
CountValue nac(SacParams params);

// p(n) = nac(n, 1).
CountValue partition_count(NacTable& table, Part n);
CountValue partition_count(Part n);

/* Euler's pentagonal-number recurrence for p(0..max_n), kept apart from the
 * memo table so the two can cross-check each other. Entry k is empty when
 * p(k), or an intermediate sum needed for it, overflows Count.
 */
template <class Count>
std::vector<std::optional<Count>> pentagonal_table(std::size_t max_n) {
  std::vector<std::optional<Count>> p(max_n + 1);
  p[0] = Count(1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    // Terms come in sign pairs; summing the positive and negative halves
    // separately keeps everything unsigned.
    std::optional<Count> plus = Count(0), minus = Count(0);
    for (std::size_t j = 1;; ++j) {
      const std::size_t g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = j * (3 * j + 1) / 2;
      auto& acc = (j % 2 == 1) ? plus : minus;
      for (std::size_t g : {g1, g2}) {
        if (g > n) continue;
        if (acc && p[n - g])
          acc = Count::checked_add(*acc, *p[n - g]);
        else
          acc.reset();
      }
    }
    if (plus && minus) p[n] = Count::checked_sub(*plus, *minus);
  }
  return p;
}

template <class Count>
Count basic_pentagonal_oracle(std::size_t n) {
  const auto table = pentagonal_table<Count>(n);
  if (!table[n]) throw Error(ErrorKind::Overflow, "p(" + std::to_string(n) + ") overflows");
  return *table[n];
}

inline CountValue pentagonal_oracle(std::size_t n) {
  return basic_pentagonal_oracle<CountValue>(n);
}

}  // namespace partmeter

#endif
