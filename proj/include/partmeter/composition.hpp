#ifndef PARTMETER_COMPOSITION_HPP
#define PARTMETER_COMPOSITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "partmeter/error.hpp"

namespace partmeter {

using Part = std::uint32_t;

/* The pair (n, m) naming the set of ascending compositions of n whose
 * smallest part is at least m. Construction enforces 1 <= m <= n.
 */
class SacParams {
 public:
  SacParams(std::int64_t n, std::int64_t m = 1);

  Part n() const { return n_; }
  Part m() const { return m_; }

  friend bool operator==(const SacParams&, const SacParams&) = default;

 private:
  Part n_;
  Part m_;
};

/* A sequence a_1 <= a_2 <= ... <= a_k of positive parts. Values are
 * immutable once built; the implicit a_0 = 0 is not stored but surfaces
 * through second_largest() when k = 1.
 *
 * Ordering is element-wise lexicographic, a proper prefix comparing less.
 */
class AscendingComposition {
 public:
  // Validating constructor: rejects empty input, parts <= 0 and descents.
  static AscendingComposition from_parts(std::span<const std::int64_t> parts);
  static AscendingComposition from_parts(std::initializer_list<std::int64_t> parts);

  std::span<const Part> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  Part n() const { return n_; }

  // 0-based.
  Part operator[](std::size_t i) const { return parts_[i]; }

  Part largest() const { return parts_.back(); }
  // a_{k-1}, or 0 for a singleton.
  Part second_largest() const { return parts_.size() > 1 ? parts_[parts_.size() - 2] : 0; }

  bool is_singleton() const { return parts_.size() == 1; }

  friend bool operator==(const AscendingComposition& a, const AscendingComposition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const AscendingComposition& a,
                                          const AscendingComposition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  friend class CompositionGenerator;
  friend AscendingComposition lexmin(SacParams);
  friend AscendingComposition apply_successor(const AscendingComposition&);

  AscendingComposition(std::vector<Part> parts, Part n) : parts_(std::move(parts)), n_(n) {}
  static AscendingComposition trusted(std::span<const Part> parts);

  std::vector<Part> parts_;
  Part n_ = 0;
};

/* How one successor step rewrites a composition: the first prefix_len parts
 * are kept, then fill_count copies of fill_part are written, then the
 * remainder. The tail is the lexicographically least composition of
 * transition_sum with smallest part fill_part.
 */
struct SuccessorPlan {
  std::size_t prefix_len = 0;
  Part fill_part = 0;
  Part fill_count = 0;
  Part remainder = 0;
  Part transition_sum = 0;

  // Parts written by this step.
  std::size_t writes() const { return std::size_t{fill_count} + 1; }

  friend bool operator==(const SuccessorPlan&, const SuccessorPlan&) = default;
};

// Least element of sac(n, m): floor(n/m) - 1 copies of m followed by the rest.
AscendingComposition lexmin(SacParams params);

// Throws NoSuccessor for the singleton [n].
SuccessorPlan successor_plan(const AscendingComposition& c);
AscendingComposition apply_successor(const AscendingComposition& c);

// floor((a_{k-1} + a_k) / (a_{k-1} + 1)) with a_0 = 0.
std::uint64_t large_parts_term(const AscendingComposition& c);
std::uint64_t large_parts_term(std::span<const Part> parts);

/* In-place generator over sac(n, m) in increasing lexicographic order. The
 * buffer is reused; current() is invalidated by next(). Capacity for the
 * longest element is reserved up front so stepping never allocates.
 */
class CompositionGenerator {
 public:
  explicit CompositionGenerator(SacParams params);

  std::span<const Part> current() const { return buffer_; }
  SacParams params() const { return params_; }

  // Parts written to reach current(): the full length for the first element,
  // fill_count + 1 afterwards.
  std::size_t last_writes() const { return last_writes_; }

  // Advances to the successor. Returns false, leaving current() unchanged,
  // once the singleton [n] has been reached.
  bool next();

  AscendingComposition snapshot() const { return AscendingComposition::trusted(buffer_); }

 private:
  SacParams params_;
  std::vector<Part> buffer_;
  std::size_t last_writes_ = 0;
};

// Input range of immutable snapshots, first lexmin(params), last [n].
class CompositionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = AscendingComposition;
    using difference_type = std::ptrdiff_t;
    using pointer = const AscendingComposition*;
    using reference = const AscendingComposition&;

    iterator() = default;

    reference operator*() const { return *value_; }
    pointer operator->() const { return &*value_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.value_.has_value() == b.value_.has_value();
    }

   private:
    friend class CompositionRange;
    explicit iterator(SacParams params) : gen_(params), value_(gen_->snapshot()) {}

    std::optional<CompositionGenerator> gen_;
    std::optional<AscendingComposition> value_;
  };

  explicit CompositionRange(SacParams params) : params_(params) {}

  iterator begin() const { return iterator(params_); }
  iterator end() const { return iterator(); }

 private:
  SacParams params_;
};

inline CompositionRange iterate(SacParams params) { return CompositionRange(params); }

std::vector<AscendingComposition> collect(SacParams params);

/* Calls visit(parts, writes) for every element of sac(n, m) over a reused
 * buffer, without per-step allocation. `writes` is the number of parts
 * written to produce that element.
 */
template <class Visitor>
void visit_compositions(SacParams params, Visitor&& visit) {
  CompositionGenerator gen(params);
  do {
    visit(gen.current(), gen.last_writes());
  } while (gen.next());
}

}  // namespace partmeter

#endif
