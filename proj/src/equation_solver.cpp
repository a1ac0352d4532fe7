#include "shiftclass/equation_solver.hpp"

#include <algorithm>
#include <numeric>

#include "shiftclass/errors.hpp"
#include "shiftclass/zn_ring.hpp"

namespace shiftclass {

namespace {

std::string pair_label(std::int64_t n, std::int64_t k, std::int64_t l) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")";
}

void require_full_cycle(std::int64_t n, const Permutation& sigma) {
  if (sigma.degree() != n) {
    throw ContractViolation("sigma has degree " + std::to_string(sigma.degree()) +
                            ", expected " + std::to_string(n));
  }
  if (!is_full_cycle(sigma)) {
    throw ContractViolation("sigma " + sigma.to_string() + " is not a full cycle");
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Odometer over anchor positions, last block fastest. False once it wraps.
bool next_anchor_choice(std::vector<std::size_t>& pick, std::size_t block_size) {
  for (auto digit = pick.rbegin(); digit != pick.rend(); ++digit) {
    if (++*digit < block_size) return true;
    *digit = 0;
  }
  return false;
}

}  // namespace

EquationInstance EquationInstance::make(std::int64_t n, std::int64_t k, std::int64_t l,
                                        const Permutation& sigma) {
  if (n < 1) throw ContractViolation("n must be >= 1");
  if (k < 1 || k > n || l < 1 || l > n) {
    throw ContractViolation("exponents must lie in {1..n}: " + pair_label(n, k, l));
  }
  require_full_cycle(n, sigma);
  return EquationInstance{n, k, l, sigma};
}

EquationInstance EquationInstance::make(std::int64_t n, std::int64_t k, std::int64_t l) {
  if (n < 1) throw ContractViolation("n must be >= 1");
  return make(n, k, l, canonical_sigma(static_cast<int>(n)));
}

bool satisfies(const Permutation& xi, const Permutation& sigma, std::int64_t k, std::int64_t l) {
  const auto lhs = compose(power(sigma, static_cast<std::uint64_t>(k)), xi);
  const auto rhs = compose(xi, power(sigma, static_cast<std::uint64_t>(l)));
  return lhs == rhs;
}

BlockPartition build_block_partition(std::int64_t k, const Permutation& sigma) {
  const auto n = static_cast<std::int64_t>(sigma.degree());
  if (k < 1 || n % k != 0) {
    throw ContractViolation("block count " + std::to_string(k) + " does not divide " +
                            std::to_string(n));
  }
  const auto step = power(sigma, static_cast<std::uint64_t>(k));
  BlockPartition partition;
  partition.k = k;
  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 0; i < k; ++i) {
    int anchor = 1;
    while (covered[anchor]) ++anchor;
    std::vector<int> block;
    int point = anchor;
    for (std::int64_t t = 0; t < n / k; ++t) {
      covered[point] = true;
      block.push_back(point);
      point = step(point);
    }
    partition.anchors.push_back(anchor);
    partition.blocks.push_back(std::move(block));
  }
  return partition;
}

std::optional<std::string> admissibility_failure(std::int64_t n, std::int64_t k,
                                                 std::int64_t l) {
  if (n < 1) return "n must be >= 1";
  if (k == n && l == n) return std::nullopt;
  if (k < 1 || k >= n || l < k || l >= n) {
    return "condition 1 <= k <= l < n fails for " + pair_label(n, k, l);
  }
  if (n % k != 0) return "k does not divide n for " + pair_label(n, k, l);
  if (l % k != 0) return "k does not divide l for " + pair_label(n, k, l);
  for (std::int64_t s = 1; s < n; ++s) {
    if (gcd(s, n) == 1 && zn_normalize(s * k, n) == l) return std::nullopt;
  }
  return "no s < n coprime to n with l = s*k (mod n) for " + pair_label(n, k, l);
}

Permutation solve_base(std::int64_t n, std::int64_t l, int a, const Permutation& sigma) {
  require_full_cycle(n, sigma);
  if (l < 1 || l > n) throw ContractViolation("exponent l must lie in {1..n}");
  if (a < 1 || a > n) throw ContractViolation("anchor value must lie in {1..n}");
  if (gcd(l, n) != 1) {
    throw NoSolution("sigma xi = xi sigma^" + std::to_string(l) + " has no solution in S_" +
                     std::to_string(n) + ": gcd(l, n) = " + std::to_string(gcd(l, n)));
  }
  const auto sigma_l = power(sigma, static_cast<std::uint64_t>(l));
  std::vector<int> images(static_cast<std::size_t>(n));
  int position = 1;
  int value = a;
  for (std::int64_t t = 0; t < n; ++t) {
    images[position - 1] = value;
    position = sigma(position);
    value = sigma_l(value);
  }
  auto xi = Permutation::from_images(images);
  if (!satisfies(xi, sigma, 1, l)) {
    throw InvariantViolation("constructed " + xi.to_string() + " does not satisfy " +
                             pair_label(n, 1, l));
  }
  return xi;
}

Permutation solve_base(std::int64_t n, std::int64_t l, int a) {
  if (n < 1) throw ContractViolation("n must be >= 1");
  return solve_base(n, l, a, canonical_sigma(static_cast<int>(n)));
}

SolutionSet enumerate_solutions(const EquationInstance& inst) {
  SolutionSet result;
  if (auto failure = admissibility_failure(inst.n, inst.k, inst.l)) {
    result.diagnostic = *std::move(failure);
    return result;
  }
  const auto n = inst.n;
  if (inst.k == n) {
    result.solutions = all_permutations(static_cast<int>(n));
    return result;
  }

  const auto partition = build_block_partition(inst.k, inst.sigma);
  const auto block_count = static_cast<std::size_t>(inst.k);
  const auto block_size = static_cast<std::size_t>(n / inst.k);
  const auto step = power(inst.sigma, static_cast<std::uint64_t>(inst.k));
  const auto sigma_l = power(inst.sigma, static_cast<std::uint64_t>(inst.l));

  std::vector<std::vector<int>> choices = partition.blocks;
  for (auto& block : choices) std::sort(block.begin(), block.end());

  std::vector<std::size_t> target(block_count);
  std::iota(target.begin(), target.end(), std::size_t{0});
  std::vector<int> images(static_cast<std::size_t>(n));
  do {
    std::vector<std::size_t> pick(block_count, 0);
    while (true) {
      for (std::size_t i = 0; i < block_count; ++i) {
        int position = partition.anchors[i];
        int value = choices[target[i]][pick[i]];
        for (std::size_t t = 0; t < block_size; ++t) {
          images[position - 1] = value;
          position = step(position);
          value = sigma_l(value);
        }
      }
      auto xi = Permutation::from_images(images);
      if (!satisfies(xi, inst.sigma, inst.k, inst.l)) {
        throw InvariantViolation("constructed " + xi.to_string() + " does not satisfy " +
                                 pair_label(n, inst.k, inst.l));
      }
      result.solutions.push_back(std::move(xi));

      if (!next_anchor_choice(pick, block_size)) break;
    }
  } while (std::next_permutation(target.begin(), target.end()));
  return result;
}

std::optional<ExponentPair> min_left_exponent(const Permutation& xi, const Permutation& sigma) {
  const auto n = static_cast<std::int64_t>(sigma.degree());
  require_full_cycle(n, sigma);
  if (xi.degree() != n) throw ContractViolation("xi and sigma have different degrees");

  std::vector<Permutation> right;  // xi * sigma^l for l = 1..n-1
  auto sigma_power = sigma;
  for (std::int64_t l = 1; l < n; ++l) {
    right.push_back(compose(xi, sigma_power));
    sigma_power = compose(sigma_power, sigma);
  }
  sigma_power = sigma;
  for (std::int64_t k = 1; k < n; ++k) {
    const auto left = compose(sigma_power, xi);
    for (std::int64_t l = 1; l < n; ++l) {
      if (left == right[static_cast<std::size_t>(l - 1)]) return ExponentPair{k, l};
    }
    sigma_power = compose(sigma_power, sigma);
  }
  return std::nullopt;
}

}  // namespace shiftclass
