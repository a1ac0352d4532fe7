#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftclass/equation_solver.hpp"
#include "shiftclass/nat.hpp"
#include "shiftclass/permutation.hpp"

namespace shiftclass {

inline constexpr std::int64_t kDefaultOracleBound = 8;
inline constexpr std::uint64_t kDefaultOracleSeed = 0x5eed;

struct OracleOptions {
  /// Largest degree the brute force will enumerate.
  std::int64_t bound = kDefaultOracleBound;
  /// Record one ClassDetail per class.
  bool per_class = false;
};

struct ClassDetail {
  Permutation representative;  // least member in lexicographic order
  std::uint64_t size = 0;
  std::optional<ExponentPair> min_exponents;
};

struct ClassReport {
  std::int64_t n = 0;
  Permutation sigma = Permutation::identity(1);
  Nat class_count;
  std::map<std::uint64_t, std::uint64_t> size_histogram;  // class size -> number of classes
  std::vector<ClassDetail> per_class;                      // empty unless requested
};

/// Partitions S_n into the orbits of xi -> sigma^a xi sigma^b by flood fill
/// with the two generators xi -> sigma xi and xi -> xi sigma.
/// Throws BoundExceeded above `options.bound`.
ClassReport enumerate_classes(std::int64_t n, const Permutation& sigma,
                              const OracleOptions& options = {});

/// Number of xi in S_n with sigma^k xi = xi sigma^l, by testing every xi.
Nat count_equation_solutions(std::int64_t n, std::int64_t k, std::int64_t l,
                             const Permutation& sigma,
                             std::int64_t bound = kDefaultOracleBound);

/// The full cycles the independence check samples: the canonical shift, its
/// inverse and three seeded random conjugates of the shift.
std::vector<Permutation> sample_full_cycles(std::int64_t n, std::uint64_t seed);

/// True iff every sampled full cycle yields the same class count and size
/// histogram.
bool sigma_independence_check(std::int64_t n, std::uint64_t seed = kDefaultOracleSeed,
                              std::int64_t bound = kDefaultOracleBound);

std::string to_json(const ClassReport& report);

}  // namespace shiftclass
