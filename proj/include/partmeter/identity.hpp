#ifndef PARTMETER_IDENTITY_HPP
#define PARTMETER_IDENTITY_HPP

#include <cstdint>

#include "partmeter/composition.hpp"
#include "partmeter/count_value.hpp"
#include "partmeter/counting.hpp"
#include "partmeter/report.hpp"

namespace partmeter {

// Sum of the large-parts term over every element of sac(n, m).
CountValue large_parts_sum(SacParams params);

// Integer division rounding toward negative infinity. d > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t d) {
  const std::int64_t q = a / d;
  return (a % d != 0 && a < 0) ? q - 1 : q;
}

/* Which set the large-parts sum of the general-m identity runs over.
 * RestrictedSet (sac(n, m)) is the reading that holds; FullSet (sac(n))
 * is the literal text, kept to demonstrate that it fails for m >= 2.
 */
enum class SumDomain { RestrictedSet, FullSet };

// Rows n = 1..max_n: large_parts_sum(n, 1) (lhs) against 2 p(n) - 1 (rhs).
VerificationReport verify_eq1(NacTable& table, Part max_n, unsigned jobs = 1);
VerificationReport verify_eq1(Part max_n, unsigned jobs = 1);

/* Rows 1 <= m <= n <= max_n: 2 nac(n, m) - 1 (lhs) against
 * floor_div(n (1 - m), m) + large_parts_sum over the chosen domain (rhs).
 */
VerificationReport verify_eq6(NacTable& table, Part max_n,
                              SumDomain domain = SumDomain::RestrictedSet, unsigned jobs = 1);
VerificationReport verify_eq6(Part max_n, SumDomain domain = SumDomain::RestrictedSet,
                              unsigned jobs = 1);

// The right-hand side for one (n, m).
CountValue eq6_rhs(SacParams params, SumDomain domain = SumDomain::RestrictedSet);

}  // namespace partmeter

#endif
