#include <random>
#include <set>
#include <vector>

#include "brute_force.hpp"
#include "doctest.h"
#include "partmeter/composition.hpp"

using namespace partmeter;

namespace {

std::vector<Part> parts_of(const AscendingComposition& c) {
  return {c.parts().begin(), c.parts().end()};
}

std::vector<std::vector<Part>> listing(SacParams params) {
  std::vector<std::vector<Part>> out;
  for (const auto& c : iterate(params)) out.push_back(parts_of(c));
  return out;
}

using V = std::vector<Part>;

}  // namespace

TEST_CASE("from_parts validates") {
  const auto c = AscendingComposition::from_parts({1, 1, 3});
  CHECK(parts_of(c) == V{1, 1, 3});
  CHECK(c.n() == 5);
  CHECK(c.size() == 3);

  const auto single = AscendingComposition::from_parts({5});
  CHECK(parts_of(single) == V{5});
  CHECK(single.n() == 5);
  CHECK(single.second_largest() == 0);
  CHECK(single.is_singleton());

  SUBCASE("descent") {
    try {
      AscendingComposition::from_parts({2, 1});
      FAIL("expected descent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Descent);
      CHECK(e.index() == 1);
    }
  }
  SUBCASE("empty") {
    std::vector<std::int64_t> none;
    try {
      AscendingComposition::from_parts(none);
      FAIL("expected empty error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyComposition);
    }
  }
  SUBCASE("non-positive") {
    for (std::int64_t bad : {0, -3}) {
      try {
        AscendingComposition::from_parts({bad, 2});
        FAIL("expected non-positive error");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositivePart);
        CHECK(e.index() == 0);
      }
    }
  }
}

TEST_CASE("SacParams enforces 1 <= m <= n") {
  CHECK_NOTHROW(SacParams(5, 5));
  CHECK_THROWS_AS(SacParams(5, 6), Error);
  CHECK_THROWS_AS(SacParams(0, 1), Error);
  CHECK_THROWS_AS(SacParams(5, 0), Error);
  try {
    SacParams(5, 6);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParams);
  }
}

TEST_CASE("lexicographic order puts a proper prefix first") {
  const auto a = AscendingComposition::from_parts({1, 4});
  const auto b = AscendingComposition::from_parts({2, 3});
  const auto c = AscendingComposition::from_parts({1, 1, 1, 2});
  const auto d = AscendingComposition::from_parts({1, 1, 1, 1, 1});
  CHECK(a < b);
  CHECK(c > d);
  CHECK(AscendingComposition::from_parts({1, 1}) < AscendingComposition::from_parts({1, 1, 1}));
}

TEST_CASE("lexmin") {
  CHECK(parts_of(lexmin(SacParams(5, 1))) == V{1, 1, 1, 1, 1});
  CHECK(parts_of(lexmin(SacParams(5, 2))) == V{2, 3});
  CHECK(parts_of(lexmin(SacParams(7, 2))) == V{2, 2, 3});
  CHECK(parts_of(lexmin(SacParams(5, 5))) == V{5});

  for (Part n = 1; n <= 30; ++n) {
    for (Part m = 1; m <= n; ++m) {
      const auto min = lexmin(SacParams(n, m));
      CHECK(min.size() == n / m);
      CHECK(min.n() == n);
      if (n <= 18) CHECK(parts_of(min) == brute::compositions(n, m).front());
    }
  }
}

TEST_CASE("successor_plan") {
  auto plan = [](std::initializer_list<std::int64_t> p) {
    return successor_plan(AscendingComposition::from_parts(p));
  };
  const auto p1 = plan({1, 1, 1, 1, 1});
  CHECK(p1.prefix_len == 3);
  CHECK(p1.fill_part == 2);
  CHECK(p1.fill_count == 0);
  CHECK(p1.remainder == 2);
  CHECK(p1.transition_sum == 2);

  CHECK(plan({1, 1, 1, 2}) == SuccessorPlan{2, 2, 0, 3, 3});
  CHECK(plan({2, 3}) == SuccessorPlan{0, 3, 0, 5, 5});

  try {
    plan({5});
    FAIL("expected no successor");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSuccessor);
  }
}

TEST_CASE("apply_successor") {
  auto next = [](std::initializer_list<std::int64_t> p) {
    return parts_of(apply_successor(AscendingComposition::from_parts(p)));
  };
  CHECK(next({1, 1, 1, 2}) == V{1, 1, 3});
  CHECK(next({1, 1, 3}) == V{1, 2, 2});
  CHECK(next({2, 3}) == V{5});
  CHECK_THROWS_AS(next({5}), Error);
}

TEST_CASE("iterate examples") {
  CHECK(listing(SacParams(5, 1)) ==
        std::vector<V>{{1, 1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 4}, {2, 3}, {5}});
  CHECK(listing(SacParams(5, 2)) == std::vector<V>{{2, 3}, {5}});
  CHECK(listing(SacParams(1, 1)) == std::vector<V>{{1}});
}

TEST_CASE("large_parts_term") {
  CHECK(large_parts_term(AscendingComposition::from_parts({5})) == 5);
  CHECK(large_parts_term(AscendingComposition::from_parts({1, 4})) == 2);
  CHECK(large_parts_term(AscendingComposition::from_parts({1, 2, 2})) == 1);
}

TEST_CASE("iterate matches naive enumeration for n <= 25") {
  for (Part n = 1; n <= 25; ++n) {
    for (Part m = 1; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto expected = brute::compositions(n, m);
      const auto got = listing(SacParams(n, m));
      REQUIRE(got == expected);  // same elements, same (sorted) order
      for (std::size_t i = 1; i < got.size(); ++i) REQUIRE(got[i - 1] < got[i]);
      REQUIRE(got.front() == parts_of(lexmin(SacParams(n, m))));
      REQUIRE(got.back() == V{n});
    }
  }
}

TEST_CASE("step invariants along every listing for n <= 25") {
  for (Part n = 2; n <= 25; ++n) {
    for (Part m = 1; m <= n; ++m) {
      const auto all = collect(SacParams(n, m));
      for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        const auto& c = all[i];
        const auto plan = successor_plan(c);
        // writes per step equal the large-parts term
        REQUIRE(large_parts_term(c) == plan.fill_count + 1);
        REQUIRE(plan.remainder >= plan.fill_part);
        REQUIRE(plan.fill_count * plan.fill_part + plan.remainder == plan.transition_sum);

        const auto next = apply_successor(c);
        REQUIRE(next == all[i + 1]);
        // the rewritten tail is the least composition of the transition sum
        const auto tail = lexmin(SacParams(plan.transition_sum, plan.fill_part));
        const V got(next.parts().begin() + plan.prefix_len, next.parts().end());
        REQUIRE(got == parts_of(tail));
      }
    }
  }
}

TEST_CASE("apply_successor on random compositions agrees with sorted enumeration") {
  std::mt19937 rng(20240531);
  for (int trial = 0; trial < 500; ++trial) {
    const Part n = std::uniform_int_distribution<Part>(2, 22)(rng);
    const auto all = brute::compositions(n, 1);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, all.size() - 2)(rng);
    std::vector<std::int64_t> wide(all[i].begin(), all[i].end());
    const auto c = AscendingComposition::from_parts(wide);
    CAPTURE(n);
    CAPTURE(i);
    REQUIRE(parts_of(apply_successor(c)) == all[i + 1]);
    REQUIRE(large_parts_term(c) == brute::large_parts_term(all[i]));
  }
}

TEST_CASE("snapshots are independent of later steps") {
  auto range = iterate(SacParams(6, 1));
  auto it = range.begin();
  const AscendingComposition first = *it;
  auto copy = first;
  ++it;
  ++it;
  CHECK(first == copy);
  CHECK(parts_of(first) == V{1, 1, 1, 1, 1, 1});
  { auto dropped = *it; }
  CHECK(parts_of(*it) == V{1, 1, 1, 3});
}

TEST_CASE("generator steps without reallocating") {
  CompositionGenerator gen(SacParams(20, 1));
  const auto* data = gen.current().data();
  CHECK(gen.last_writes() == 20);
  std::size_t steps = 0;
  while (gen.next()) {
    ++steps;
    REQUIRE(gen.current().data() == data);
    REQUIRE(gen.last_writes() >= 1);
  }
  CHECK(steps + 1 == 627);
  CHECK_FALSE(gen.next());
  CHECK(gen.current().size() == 1);
}

TEST_CASE("visit_compositions reports writes") {
  std::vector<std::size_t> writes;
  visit_compositions(SacParams(5, 1),
                     [&](std::span<const Part>, std::size_t w) { writes.push_back(w); });
  CHECK(writes == std::vector<std::size_t>{5, 1, 1, 2, 1, 2, 1});
}
