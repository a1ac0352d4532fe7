#pragma once

#include <cstdint>
#include <vector>

namespace shiftclass {

/// Residue of the ring [n] = {1, ..., n}. The zero class is represented by n
/// itself, never by 0.
class ZnElement {
 public:
  /// Any integer is accepted and reduced; a residue of 0 becomes `modulus`.
  ZnElement(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return value_ == modulus_; }

  friend bool operator==(const ZnElement&, const ZnElement&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

/// Reduces x into {1..n}.
std::int64_t zn_normalize(std::int64_t x, std::int64_t n);

ZnElement zn_mul(const ZnElement& a, const ZnElement& b);
ZnElement zn_add(const ZnElement& a, const ZnElement& b);
ZnElement zn_sub(const ZnElement& a, const ZnElement& b);

std::int64_t gcd(std::int64_t s, std::int64_t t);

/// Euler's totient with a precomputed sieve for small arguments. Values above
/// the bound fall back to trial-division factorization.
class TotientSieve {
 public:
  explicit TotientSieve(std::int64_t bound);

  std::int64_t bound() const noexcept { return static_cast<std::int64_t>(phi_.size()) - 1; }
  std::int64_t operator()(std::int64_t m) const;

 private:
  std::vector<std::int64_t> phi_;
};

/// totient(1) == 1.
std::int64_t totient(std::int64_t m);

/// Totient by factorization only; no sieve.
std::int64_t totient_by_factorization(std::int64_t m);

/// Ascending list of all positive divisors of n.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Ascending list of the distinct primes dividing n.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

bool is_prime(std::int64_t n);

}  // namespace shiftclass
