#include "shiftclass/nat.hpp"

#include "shiftclass/errors.hpp"

namespace shiftclass {

Nat factorial(std::int64_t m) {
  if (m < 0) throw ContractViolation("factorial of a negative number");
  Nat result = 1;
  for (std::int64_t i = 2; i <= m; ++i) result *= i;
  return result;
}

Nat pow(const Nat& base, std::uint64_t exponent) {
  Nat result = 1;
  Nat square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1u;
    if (exponent != 0) square *= square;
  }
  return result;
}

Nat exact_divide(const Nat& numerator, const Nat& denominator, const std::string& what) {
  if (denominator == 0) throw InexactDivision(what + ": division by zero");
  Nat quotient;
  Nat remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw InexactDivision(what + ": " + to_decimal(numerator) + " is not divisible by " +
                          to_decimal(denominator));
  }
  return quotient;
}

std::string to_decimal(const Nat& value) { return value.str(); }

}  // namespace shiftclass
