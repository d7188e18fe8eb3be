#include "partmeter/count_value.hpp"

namespace partmeter {

Ratio Ratio::reduced(CountValue num, CountValue den) {
  if (den == CountValue(0)) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  const CountValue g = gcd(num, den);
  if (g == CountValue(0)) return Ratio{num, den};
  return Ratio{num / g, den / g};
}

long double Ratio::approx() const {
  return static_cast<long double>(num.value()) / static_cast<long double>(den.value());
}

}  // namespace partmeter
