#include "partmeter/composition.hpp"

#include <limits>
#include <string>

namespace partmeter {

namespace {

constexpr std::int64_t kMaxN = std::numeric_limits<std::int32_t>::max();

SuccessorPlan plan_from_tail(std::size_t k, Part second_largest, Part largest) {
  SuccessorPlan plan;
  plan.prefix_len = k - 2;
  plan.fill_part = second_largest + 1;
  plan.transition_sum = second_largest + largest;
  plan.fill_count = plan.transition_sum / plan.fill_part - 1;
  plan.remainder = plan.transition_sum - plan.fill_count * plan.fill_part;
  return plan;
}

// Writes lexmin(total, smallest) at the end of `out`.
void append_lexmin(std::vector<Part>& out, Part total, Part smallest) {
  const Part copies = total / smallest - 1;
  out.insert(out.end(), copies, smallest);
  out.push_back(total - copies * smallest);
}

}  // namespace

SacParams::SacParams(std::int64_t n, std::int64_t m) {
  if (n < 1 || n > kMaxN)
    throw Error(ErrorKind::InvalidParams, "n must be a positive integer");
  if (m < 1 || m > n) throw Error(ErrorKind::InvalidParams, "m must satisfy 1 ≤ m ≤ n");
  n_ = static_cast<Part>(n);
  m_ = static_cast<Part>(m);
}

AscendingComposition AscendingComposition::from_parts(std::span<const std::int64_t> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyComposition, "composition must be nonempty");
  std::vector<Part> out;
  out.reserve(parts.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::int64_t p = parts[i];
    if (p <= 0)
      throw Error(ErrorKind::NonPositivePart,
                  "part " + std::to_string(p) + " at index " + std::to_string(i) +
                      " is not positive",
                  i);
    if (i > 0 && parts[i - 1] > p)
      throw Error(ErrorKind::Descent, "descent at index " + std::to_string(i), i);
    sum += p;
    if (sum > kMaxN) throw Error(ErrorKind::InvalidArgument, "composition sum too large");
    out.push_back(static_cast<Part>(p));
  }
  return AscendingComposition(std::move(out), static_cast<Part>(sum));
}

AscendingComposition AscendingComposition::from_parts(
    std::initializer_list<std::int64_t> parts) {
  return from_parts(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

AscendingComposition AscendingComposition::trusted(std::span<const Part> parts) {
  Part n = 0;
  for (Part p : parts) n += p;
  return AscendingComposition(std::vector<Part>(parts.begin(), parts.end()), n);
}

AscendingComposition lexmin(SacParams params) {
  std::vector<Part> parts;
  parts.reserve(params.n() / params.m());
  append_lexmin(parts, params.n(), params.m());
  return AscendingComposition(std::move(parts), params.n());
}

SuccessorPlan successor_plan(const AscendingComposition& c) {
  if (c.is_singleton())
    throw Error(ErrorKind::NoSuccessor,
                "no successor: [" + std::to_string(c.n()) + "] is the lexicographic maximum");
  return plan_from_tail(c.size(), c.second_largest(), c.largest());
}

AscendingComposition apply_successor(const AscendingComposition& c) {
  const SuccessorPlan plan = successor_plan(c);
  std::vector<Part> parts(c.parts().begin(), c.parts().begin() + plan.prefix_len);
  append_lexmin(parts, plan.transition_sum, plan.fill_part);
  return AscendingComposition(std::move(parts), c.n());
}

std::uint64_t large_parts_term(std::span<const Part> parts) {
  const std::uint64_t last = parts.back();
  const std::uint64_t before = parts.size() > 1 ? parts[parts.size() - 2] : 0;
  return (before + last) / (before + 1);
}

std::uint64_t large_parts_term(const AscendingComposition& c) {
  return large_parts_term(c.parts());
}

CompositionGenerator::CompositionGenerator(SacParams params) : params_(params) {
  buffer_.reserve(params.n() / params.m());
  append_lexmin(buffer_, params.n(), params.m());
  last_writes_ = buffer_.size();
}

bool CompositionGenerator::next() {
  const std::size_t k = buffer_.size();
  if (k == 1) return false;
  const SuccessorPlan plan = plan_from_tail(k, buffer_[k - 2], buffer_[k - 1]);
  buffer_.resize(plan.prefix_len);
  append_lexmin(buffer_, plan.transition_sum, plan.fill_part);
  last_writes_ = plan.writes();
  return true;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  if (gen_ && gen_->next()) {
    value_ = gen_->snapshot();
  } else {
    gen_.reset();
    value_.reset();
  }
  return *this;
}

std::vector<AscendingComposition> collect(SacParams params) {
  std::vector<AscendingComposition> out;
  for (const auto& c : iterate(params)) out.push_back(c);
  return out;
}

}  // namespace partmeter
