#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftclass/class_graph.hpp"
#include "shiftclass/nat.hpp"

namespace shiftclass {

/// One column of the count matrix: a divisor k of n, phi(n/k), h(n,k) and
/// their product.
struct CountColumn {
  std::int64_t k = 0;
  Nat phi;
  Nat h;
  Nat product;
};

/// The 4-row count matrix for one n plus the class count |Q_n|, which is the
/// sum of the product row.
struct CountTable {
  std::int64_t n = 0;
  std::vector<CountColumn> columns;  // one per divisor of n, ascending k
  Nat total;
};

/// Number of solutions of sigma^k xi = xi sigma^l for an admissible (k, l):
/// k! (n/k)^k.
Nat p_count(std::int64_t n, std::int64_t k);

/// Classes attached to one vertex <k, l> of `g`. h(n,1) = 1, and for k > 1
///   h(n,k) = ((k-1)! (n/k)^(k-1) - sum_{r|k, r<k} r tau(n,k,r) h(n,r)) / k
/// with the division required to be exact.
Nat h_count(std::int64_t n, std::int64_t k, const GammaGraph& g);

CountTable count_table(std::int64_t n);
CountTable count_table(const GammaGraph& g);

/// |Q_n|, the number of sigma-equivalence classes of S_n.
Nat q_count(std::int64_t n);

/// ((n-1)! + (n-1)^2) / n for prime n. Throws NotPrime otherwise.
Nat q_prime(std::int64_t n);

/// (n-1)! + 1 == 0 (mod n). Requires n >= 2.
bool wilson_check(std::int64_t n);

/// Big integers become decimal strings:
/// {"n":..,"columns":[{"k":..,"phi":"..","h":"..","product":".."}],"total":".."}
std::string to_json(const CountTable& table);

/// Four right-aligned labelled rows (divisors, phi, h, product) and a total line.
std::string render_text(const CountTable& table);

}  // namespace shiftclass
