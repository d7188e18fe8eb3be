#include "brute_force.hpp"
#include "doctest.h"
#include "partmeter/counting.hpp"
#include "partmeter/suffix_metrics.hpp"

using namespace partmeter;

TEST_CASE("sfl_recurrence examples") {
  CHECK(sfl_recurrence(SacParams(5, 1)) == CountValue(13));
  CHECK(sfl_recurrence(SacParams(1, 1)) == CountValue(1));
  CHECK(sfl_recurrence(SacParams(5, 2)) == CountValue(3));
}

TEST_CASE("sfl_measured examples") {
  const auto t51 = sfl_measured(SacParams(5, 1));
  CHECK(t51.total() == CountValue(13));
  CHECK(t51.initial_writes == 5);
  CHECK(t51.transition_writes == std::vector<std::uint64_t>{1, 1, 2, 1, 2, 1});
  CHECK(t51.compositions_visited == CountValue(7));
  CHECK(t51.amortized() == Ratio{CountValue(13), CountValue(7)});
  CHECK_FALSE(t51.truncated());

  const auto t52 = sfl_measured(SacParams(5, 2));
  CHECK(t52.total() == CountValue(3));
  CHECK(t52.initial_writes == 2);
  CHECK(t52.transition_writes == std::vector<std::uint64_t>{1});

  const auto t11 = sfl_measured(SacParams(1, 1));
  CHECK(t11.total() == CountValue(1));
  CHECK(t11.initial_writes == 1);
  CHECK(t11.transition_writes.empty());
  CHECK(t11.compositions_visited == CountValue(1));
}

TEST_CASE("sfl_measured caps stored transitions but not totals") {
  const auto full = sfl_measured(SacParams(20, 1));
  const auto capped = sfl_measured(SacParams(20, 1), 10);
  CHECK(capped.transition_writes.size() == 10);
  CHECK(capped.truncated());
  CHECK_FALSE(full.truncated());
  CHECK(capped.total() == full.total());
  CHECK(std::equal(capped.transition_writes.begin(), capped.transition_writes.end(),
                   full.transition_writes.begin()));
  // total = initial + sum of transitions, one transition per later element
  CountValue sum(full.initial_writes);
  for (auto w : full.transition_writes) sum += CountValue(w);
  CHECK(sum == full.total());
  CHECK(CountValue(full.transition_writes.size() + 1) == full.compositions_visited);
}

TEST_CASE("sfl_via_writes examples") {
  CHECK(sfl_via_writes(SacParams(5, 1)) == CountValue(13));
  CHECK(sfl_via_writes(SacParams(5, 2)) == CountValue(3));
  CHECK(sfl_via_writes(SacParams(1, 1)) == CountValue(1));
}

TEST_CASE("check_theorem1 examples") {
  const auto r5 = check_theorem1(5);
  CHECK(r5.rows.size() == 15);
  CHECK(r5.all_pass());
  const auto& row = r5.rows[10];  // rows run (1,1) (2,1) (2,2) (3,1) ...
  CHECK(row.n == 5);
  CHECK(row.m == 1);
  CHECK(row.lhs == CountValue(13));
  CHECK(row.rhs == CountValue(13));

  const auto r1 = check_theorem1(1);
  REQUIRE(r1.rows.size() == 1);
  CHECK(r1.rows[0].lhs == CountValue(1));
  CHECK(r1.all_pass());

  const auto r12 = check_theorem1(12);
  CHECK(r12.all_pass());
  for (const auto& r : r12.rows) {
    const auto listing = brute::compositions(r.n, r.m);
    REQUIRE(r.rhs == CountValue(brute::box_count(listing)));
    REQUIRE(r.lhs == CountValue(2 * listing.size() - 1));
  }
}

TEST_CASE("parallel sweep matches the serial one") {
  const auto serial = check_theorem1(18, 1);
  const auto parallel = check_theorem1(18, 4);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].n == parallel.rows[i].n);
    CHECK(serial.rows[i].m == parallel.rows[i].m);
    CHECK(serial.rows[i].rhs == parallel.rows[i].rhs);
    CHECK(serial.rows[i].extra == parallel.rows[i].extra);
  }
}

TEST_CASE("three suffix-length routes agree with 2 nac - 1 for n <= 40") {
  NacTable nacs;
  SflTable sfls;
  const auto report = check_theorem1(nacs, sfls, 40, 4);
  CHECK(report.rows.size() == 40 * 41 / 2);
  for (const auto& r : report.rows) {
    CAPTURE(r.n);
    CAPTURE(r.m);
    REQUIRE(r.pass);
  }
}

TEST_CASE("measured writes per transition equal the large-parts term for n <= 25") {
  for (Part n = 1; n <= 25; ++n) {
    for (Part m = 1; m <= n; ++m) {
      const auto listing = brute::compositions(n, m);
      const auto trace = sfl_measured(SacParams(n, m));
      REQUIRE(trace.transition_writes.size() + 1 == listing.size());
      for (std::size_t i = 0; i < trace.transition_writes.size(); ++i)
        REQUIRE(trace.transition_writes[i] == brute::large_parts_term(listing[i]));
    }
  }
}

TEST_CASE("amortized writes are 2 - 1/p(n)") {
  NacTable nacs;
  for (Part n = 1; n <= 45; ++n) {
    const CountValue p = partition_count(nacs, n);
    const auto trace = sfl_measured(SacParams(n, 1), 0);
    const Ratio expected = Ratio::reduced(CountValue(2) * p - CountValue(1), p);
    REQUIRE(trace.amortized() == expected);
    REQUIRE(trace.amortized().approx() < 2.0L);
  }
}

TEST_CASE("common_prefix_length") {
  const std::vector<Part> a{1, 1, 3}, b{1, 2, 2}, c{1, 1, 3, 4};
  CHECK(common_prefix_length(a, b) == 1);
  CHECK(common_prefix_length(a, c) == 3);
  CHECK(common_prefix_length(a, a) == 3);
}
