#include "shiftclass/zn_ring.hpp"

#include <numeric>
#include <string>

#include "shiftclass/errors.hpp"

namespace shiftclass {

namespace {

void require_same_modulus(const ZnElement& a, const ZnElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ContractViolation("ring elements have different moduli: " + std::to_string(a.modulus()) +
                            " vs " + std::to_string(b.modulus()));
  }
}

constexpr std::int64_t kDefaultSieveBound = 1 << 16;

}  // namespace

std::int64_t zn_normalize(std::int64_t x, std::int64_t n) {
  if (n < 1) throw ContractViolation("modulus must be >= 1, got " + std::to_string(n));
  std::int64_t r = x % n;
  if (r < 0) r += n;
  return r == 0 ? n : r;
}

ZnElement::ZnElement(std::int64_t value, std::int64_t modulus)
    : value_(zn_normalize(value, modulus)), modulus_(modulus) {}

ZnElement zn_mul(const ZnElement& a, const ZnElement& b) {
  require_same_modulus(a, b);
  __extension__ using wide = unsigned __int128;
  const auto product = static_cast<wide>(a.value()) * static_cast<wide>(b.value()) %
                       static_cast<wide>(a.modulus());
  return ZnElement(static_cast<std::int64_t>(product), a.modulus());
}

ZnElement zn_add(const ZnElement& a, const ZnElement& b) {
  require_same_modulus(a, b);
  return ZnElement(a.value() % a.modulus() + b.value() % b.modulus(), a.modulus());
}

ZnElement zn_sub(const ZnElement& a, const ZnElement& b) {
  require_same_modulus(a, b);
  return ZnElement(a.value() % a.modulus() - b.value() % b.modulus(), a.modulus());
}

std::int64_t gcd(std::int64_t s, std::int64_t t) {
  if (s < 1 || t < 1) {
    throw ContractViolation("gcd expects positive arguments, got " + std::to_string(s) + ", " +
                            std::to_string(t));
  }
  return std::gcd(s, t);
}

TotientSieve::TotientSieve(std::int64_t bound) {
  if (bound < 1) bound = 1;
  phi_.resize(static_cast<std::size_t>(bound) + 1);
  std::iota(phi_.begin(), phi_.end(), std::int64_t{0});
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (phi_[p] != p) continue;  // not prime: already touched by a smaller factor
    for (std::int64_t m = p; m <= bound; m += p) phi_[m] -= phi_[m] / p;
  }
}

std::int64_t TotientSieve::operator()(std::int64_t m) const {
  if (m < 1) throw ContractViolation("totient expects m >= 1, got " + std::to_string(m));
  if (m < static_cast<std::int64_t>(phi_.size())) return phi_[m];
  return totient_by_factorization(m);
}

std::int64_t totient(std::int64_t m) {
  static const TotientSieve sieve(kDefaultSieveBound);
  return sieve(m);
}

std::int64_t totient_by_factorization(std::int64_t m) {
  if (m < 1) throw ContractViolation("totient expects m >= 1, got " + std::to_string(m));
  std::int64_t result = m;
  for (const auto p : prime_divisors(m)) result -= result / p;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw ContractViolation("divisors expects n >= 1, got " + std::to_string(n));
  std::vector<std::int64_t> low;
  std::vector<std::int64_t> high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  if (n < 1) throw ContractViolation("prime_divisors expects n >= 1, got " + std::to_string(n));
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace shiftclass
