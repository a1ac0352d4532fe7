#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shiftclass {

/// Exact nonnegative integer used for every count.
using Nat = boost::multiprecision::cpp_int;

Nat factorial(std::int64_t m);

Nat pow(const Nat& base, std::uint64_t exponent);

/// numerator / denominator, throwing InexactDivision on a nonzero remainder.
/// `what` names the quantity in the error message.
Nat exact_divide(const Nat& numerator, const Nat& denominator, const std::string& what);

/// Plain decimal rendering, no separators.
std::string to_decimal(const Nat& value);

}  // namespace shiftclass
