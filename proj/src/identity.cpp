#include "partmeter/identity.hpp"


#include "parallel.hpp"

namespace partmeter {

CountValue large_parts_sum(SacParams params) {
  CountValue sum;
  visit_compositions(params, [&](std::span<const Part> parts, std::size_t) {
    sum += CountValue(large_parts_term(parts));
  });
  return sum;
}

CountValue eq6_rhs(SacParams params, SumDomain domain) {
  const auto n = static_cast<std::int64_t>(params.n());
  const auto m = static_cast<std::int64_t>(params.m());
  const std::int64_t offset = floor_div(n * (1 - m), m);  // <= 0
  const SacParams sum_over = domain == SumDomain::RestrictedSet ? params : SacParams(n, 1);
  return large_parts_sum(sum_over) - CountValue(static_cast<std::uint64_t>(-offset));
}

VerificationReport verify_eq1(NacTable& table, Part max_n, unsigned jobs) {
  if (max_n < 1) throw Error(ErrorKind::InvalidArgument, "max_n must be at least 1");
  table.ensure(max_n);

  VerificationReport report;
  report.name = "eq1";
  report.lhs_label = "large_parts_sum";
  report.rhs_label = "2*p-1";
  for (Part n = 1; n <= max_n; ++n) report.rows.push_back(ReportRow{n, 1, {}, {}, {}, false});

  const NacTable& nacs = table;
  detail::parallel_for(report.rows.size(), jobs, [&](std::size_t i) {
    ReportRow& row = report.rows[i];
    row.lhs = large_parts_sum(SacParams(row.n, 1));
    row.rhs = CountValue(2) * nacs.at(row.n, 1) - CountValue(1);
    row.pass = row.lhs == row.rhs;
  });
  return report;
}

VerificationReport verify_eq1(Part max_n, unsigned jobs) {
  NacTable table;
  return verify_eq1(table, max_n, jobs);
}

VerificationReport verify_eq6(NacTable& table, Part max_n, SumDomain domain, unsigned jobs) {
  if (max_n < 1) throw Error(ErrorKind::InvalidArgument, "max_n must be at least 1");
  table.ensure(max_n);

  VerificationReport report;
  report.name = "eq6";
  report.lhs_label = "2*nac-1";
  report.rhs_label = "floor(n(1-m)/m)+sum";
  report.extra_columns = {"large_parts_sum"};
  if (domain == SumDomain::RestrictedSet) {
    report.notes.push_back("sum taken over sac(n,m); equals the sac(n) reading when m = 1");
  } else {
    report.notes.push_back("sum taken over sac(n) as literally written; expected to fail for m >= 2");
  }
  for (Part n = 1; n <= max_n; ++n)
    for (Part m = 1; m <= n; ++m) report.rows.push_back(ReportRow{n, m, {}, {}, {}, false});

  // Each row needs one sum; sac(n) sums are shared by every m for the same n.
  const NacTable& nacs = table;
  std::vector<CountValue> full_sums;
  if (domain == SumDomain::FullSet) {
    full_sums.resize(std::size_t{max_n} + 1);
    detail::parallel_for(max_n, jobs, [&](std::size_t i) {
      full_sums[i + 1] = large_parts_sum(SacParams(static_cast<std::int64_t>(i + 1), 1));
    });
  }
  detail::parallel_for(report.rows.size(), jobs, [&](std::size_t i) {
    ReportRow& row = report.rows[i];
    const auto n = static_cast<std::int64_t>(row.n);
    const auto m = static_cast<std::int64_t>(row.m);
    const CountValue sum = domain == SumDomain::RestrictedSet
                               ? large_parts_sum(SacParams(n, m))
                               : full_sums[row.n];
    const std::int64_t offset = floor_div(n * (1 - m), m);
    row.lhs = CountValue(2) * nacs.at(row.n, row.m) - CountValue(1);
    row.rhs = sum - CountValue(static_cast<std::uint64_t>(-offset));
    row.extra = {sum};
    row.pass = row.lhs == row.rhs;
  });
  return report;
}

VerificationReport verify_eq6(Part max_n, SumDomain domain, unsigned jobs) {
  NacTable table;
  return verify_eq6(table, max_n, domain, jobs);
}

}  // namespace partmeter
