#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftclass/permutation.hpp"

namespace shiftclass {

/// sigma^k xi = xi sigma^l over S_n, sigma a full cycle.
struct EquationInstance {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  Permutation sigma = Permutation::identity(1);

  /// Checks degree, full-cycle and exponent ranges; throws ContractViolation.
  static EquationInstance make(std::int64_t n, std::int64_t k, std::int64_t l,
                               const Permutation& sigma);

  /// Same, with the canonical shift.
  static EquationInstance make(std::int64_t n, std::int64_t k, std::int64_t l);
};

/// True iff sigma^k * xi == xi * sigma^l (left-to-right products).
bool satisfies(const Permutation& xi, const Permutation& sigma, std::int64_t k, std::int64_t l);

/// Partition of {1..n} into the k orbits of sigma^k. blocks[i] lists
/// sigma^{tk}(anchors[i]) for t = 0..n/k-1; anchors[0] = 1 and each later
/// anchor is the least point not yet covered.
struct BlockPartition {
  std::int64_t k = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> anchors;
};

/// Requires k | n.
BlockPartition build_block_partition(std::int64_t k, const Permutation& sigma);

/// Why (k, l) fails the admissibility conditions for a minimal exponent pair,
/// or nullopt when admissible. Admissible means 1 <= k <= l < n, k | n, k | l
/// and l = s (.) k for some s < n coprime to n. The pair (n, n) is also
/// accepted and stands for the trivial equation, solved by all of S_n.
std::optional<std::string> admissibility_failure(std::int64_t n, std::int64_t k, std::int64_t l);

inline bool is_admissible(std::int64_t n, std::int64_t k, std::int64_t l) {
  return !admissibility_failure(n, k, l).has_value();
}

/// The unique solution of sigma xi = xi sigma^l with xi(1) = a, built from
/// xi(sigma^t(1)) = sigma^{tl}(a). Throws NoSolution when gcd(l, n) > 1.
Permutation solve_base(std::int64_t n, std::int64_t l, int a, const Permutation& sigma);
Permutation solve_base(std::int64_t n, std::int64_t l, int a);

struct SolutionSet {
  std::vector<Permutation> solutions;
  /// Empty on success; names the failed condition otherwise.
  std::string diagnostic;
};

/// Every solution of the instance's equation, each re-verified by composition.
/// Output order is lexicographic in (block bijection, anchor choice). For an
/// inadmissible (k, l) the set is empty and `diagnostic` is filled in.
SolutionSet enumerate_solutions(const EquationInstance& inst);

struct ExponentPair {
  std::int64_t k = 0;
  std::int64_t l = 0;
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Least k in {1..n-1} such that sigma^k xi = xi sigma^l for some l in
/// {1..n-1}, with that l. nullopt when no such pair exists (class size n^2).
std::optional<ExponentPair> min_left_exponent(const Permutation& xi, const Permutation& sigma);

}  // namespace shiftclass
