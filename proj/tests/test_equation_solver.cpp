#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "shiftclass/counting.hpp"
#include "shiftclass/equation_solver.hpp"
#include "shiftclass/errors.hpp"
#include "shiftclass/oracle.hpp"
#include "shiftclass/zn_ring.hpp"

using namespace shiftclass;

namespace {

// For the shift sigma, sigma^k xi = xi sigma^l reads x_{i+k} = x_i + l on
// residues. Checked on raw vectors, independent of Permutation::compose.
bool shift_equation_holds(const std::vector<int>& x, std::int64_t k, std::int64_t l) {
  const auto n = static_cast<std::int64_t>(x.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const auto lhs = x[static_cast<std::size_t>((i + k) % n)] - 1;
    const auto rhs = (x[static_cast<std::size_t>(i)] - 1 + l) % n;
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<std::vector<int>> brute_force_solutions(std::int64_t n, std::int64_t k,
                                                    std::int64_t l) {
  std::vector<int> x(static_cast<std::size_t>(n));
  std::iota(x.begin(), x.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (shift_equation_holds(x, k, l)) out.push_back(x);
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

std::vector<std::vector<int>> as_images(const std::vector<Permutation>& perms) {
  std::vector<std::vector<int>> out;
  for (const auto& p : perms) out.push_back(p.images());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("solve_base") {
  const auto xi = solve_base(5, 2, 1);
  CHECK(xi == Permutation::from_images({1, 3, 5, 2, 4}));
  CHECK(shift_equation_holds(xi.images(), 1, 2));
  CHECK(solve_base(5, 1, 1).is_identity());
  CHECK_THROWS_AS(solve_base(6, 2, 1), NoSolution);
  CHECK_THROWS_AS(solve_base(5, 2, 0), ContractViolation);
  CHECK_THROWS_AS(solve_base(4, 1, 1, Permutation::from_images({2, 1, 4, 3})),
                  ContractViolation);

  SUBCASE("solvable exactly when gcd(l, n) = 1, n <= 12") {
    for (std::int64_t n = 1; n <= 12; ++n) {
      const auto sigma = canonical_sigma(static_cast<int>(n));
      for (std::int64_t l = 1; l <= n; ++l) {
        if (gcd(l, n) != 1) {
          CHECK_THROWS_AS(solve_base(n, l, 1, sigma), NoSolution);
          continue;
        }
        std::set<Permutation> distinct;
        for (int a = 1; a <= n; ++a) {
          const auto s = solve_base(n, l, a, sigma);
          REQUIRE(s(1) == a);
          REQUIRE(satisfies(s, sigma, 1, l));
          distinct.insert(s);
        }
        REQUIRE(distinct.size() == static_cast<std::size_t>(n));
      }
    }
  }
}

TEST_CASE("block partition") {
  const auto sigma = canonical_sigma(12);
  const auto p = build_block_partition(4, sigma);
  CHECK(p.anchors == std::vector<int>{1, 2, 3, 4});
  CHECK(p.blocks[0] == std::vector<int>{1, 5, 9});
  CHECK(p.blocks[3] == std::vector<int>{4, 8, 12});
  CHECK_THROWS_AS(build_block_partition(5, sigma), ContractViolation);

  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto s = canonical_sigma(static_cast<int>(n));
    for (const auto k : divisors(n)) {
      const auto partition = build_block_partition(k, s);
      REQUIRE(partition.blocks.size() == static_cast<std::size_t>(k));
      std::vector<int> seen;
      for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
        const auto& block = partition.blocks[i];
        REQUIRE(block.size() == static_cast<std::size_t>(n / k));
        REQUIRE(block.front() == partition.anchors[i]);
        seen.insert(seen.end(), block.begin(), block.end());
      }
      // anchors are the least uncovered point at each step
      for (std::size_t i = 0; i < partition.anchors.size(); ++i) {
        int expected = 1;
        auto covered = [&](int x) {
          for (std::size_t j = 0; j < i; ++j) {
            const auto& b = partition.blocks[j];
            if (std::find(b.begin(), b.end(), x) != b.end()) return true;
          }
          return false;
        };
        while (covered(expected)) ++expected;
        REQUIRE(partition.anchors[i] == expected);
      }
      std::sort(seen.begin(), seen.end());
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 1);
      REQUIRE(seen == all);
    }
  }

  // a non-canonical full cycle
  const auto other = Permutation::from_images({3, 1, 4, 6, 2, 5});
  REQUIRE(is_full_cycle(other));
  const auto q = build_block_partition(2, other);
  CHECK(q.anchors == std::vector<int>{1, 2});
  CHECK(q.blocks[0] == std::vector<int>{1, 4, 5});
  CHECK(q.blocks[1] == std::vector<int>{2, 3, 6});
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(12, 2, 2));
  CHECK(is_admissible(12, 2, 10));
  CHECK_FALSE(is_admissible(12, 2, 4));   // 4/2 = 2 shares a factor with 6
  CHECK_FALSE(is_admissible(12, 5, 5));   // 5 does not divide 12
  CHECK_FALSE(is_admissible(12, 2, 3));   // 2 does not divide 3
  CHECK_FALSE(is_admissible(12, 3, 1));
  CHECK(is_admissible(12, 12, 12));
  CHECK(is_admissible(1, 1, 1));
  CHECK(admissibility_failure(12, 2, 3)->find("does not divide l") != std::string::npos);

  SUBCASE("condition on s is gcd(l/k, n/k) = 1 for n <= 60") {
    for (std::int64_t n = 2; n <= 60; ++n) {
      for (const auto k : divisors(n)) {
        if (k == n) continue;
        for (std::int64_t l = k; l < n; l += k) {
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(l);
          REQUIRE(is_admissible(n, k, l) == (std::gcd(l / k, n / k) == 1));
        }
      }
    }
  }
  SUBCASE("admissible pairs are exactly the graph vertices") {
    for (std::int64_t n = 1; n <= 60; ++n) {
      const auto g = build_gamma(n);
      std::size_t admissible = 0;
      for (std::int64_t k = 1; k <= n; ++k) {
        for (std::int64_t l = 1; l <= n; ++l) {
          if (!is_admissible(n, k, l)) continue;
          ++admissible;
          REQUIRE(g.contains({k, l}));
        }
      }
      REQUIRE(admissible == g.vertices().size());
    }
  }
}

TEST_CASE("enumerate_solutions small cases") {
  const auto s42 = enumerate_solutions(EquationInstance::make(4, 2, 2));
  CHECK(s42.diagnostic.empty());
  CHECK(s42.solutions.size() == 8);
  CHECK(as_images(s42.solutions) == brute_force_solutions(4, 2, 2));

  const auto s312 = enumerate_solutions(EquationInstance::make(3, 1, 2));
  CHECK(s312.solutions.size() == 3);
  CHECK(as_images(s312.solutions) == brute_force_solutions(3, 1, 2));

  const auto s222 = enumerate_solutions(EquationInstance::make(2, 2, 2));
  CHECK(s222.solutions.size() == 2);

  const auto bad = enumerate_solutions(EquationInstance::make(6, 1, 2));
  CHECK(bad.solutions.empty());
  CHECK_FALSE(bad.diagnostic.empty());

  CHECK_THROWS_AS(EquationInstance::make(4, 5, 1), ContractViolation);
  CHECK_THROWS_AS(EquationInstance::make(4, 1, 1, Permutation::identity(4)), ContractViolation);

  // deterministic order
  CHECK(enumerate_solutions(EquationInstance::make(6, 2, 2)).solutions ==
        enumerate_solutions(EquationInstance::make(6, 2, 2)).solutions);
}

TEST_CASE("enumerate_solutions equals brute force for every admissible pair, n <= 8") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      for (std::int64_t l = 1; l < n; ++l) {
        if (!is_admissible(n, k, l)) continue;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(l);
        const auto found = enumerate_solutions(EquationInstance::make(n, k, l)).solutions;
        const auto images = as_images(found);
        REQUIRE(std::adjacent_find(images.begin(), images.end()) == images.end());
        REQUIRE(Nat(found.size()) == p_count(n, k));
        REQUIRE(images == brute_force_solutions(n, k, l));
      }
    }
  }
}

TEST_CASE("solutions carry over to multiplied exponents") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    const auto sigma = canonical_sigma(static_cast<int>(n));
    for (std::int64_t k = 1; k < n; ++k) {
      for (std::int64_t l = 1; l < n; ++l) {
        if (!is_admissible(n, k, l)) continue;
        for (const auto& xi : enumerate_solutions(EquationInstance::make(n, k, l)).solutions) {
          for (std::int64_t s = 2; s <= 3; ++s) {
            REQUIRE(satisfies(xi, sigma, (s * k) % n, (s * l) % n));
          }
        }
      }
    }
  }
}

TEST_CASE("distinct right exponents give disjoint solution sets") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      std::set<Permutation> seen;
      std::size_t total = 0;
      for (std::int64_t l = 1; l < n; ++l) {
        if (!is_admissible(n, k, l)) continue;
        const auto found = enumerate_solutions(EquationInstance::make(n, k, l)).solutions;
        total += found.size();
        seen.insert(found.begin(), found.end());
      }
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(seen.size() == total);
    }
  }
}

TEST_CASE("enumeration works for any full cycle") {
  const auto sigma = Permutation::from_images({3, 1, 4, 6, 2, 5});
  for (std::int64_t k = 1; k < 6; ++k) {
    for (std::int64_t l = 1; l < 6; ++l) {
      if (!is_admissible(6, k, l)) continue;
      const auto found = enumerate_solutions(EquationInstance::make(6, k, l, sigma)).solutions;
      CHECK(Nat(found.size()) == p_count(6, k));
      CHECK(Nat(found.size()) == count_equation_solutions(6, k, l, sigma));
      for (const auto& xi : found) CHECK(satisfies(xi, sigma, k, l));
    }
  }
}

TEST_CASE("min_left_exponent") {
  const auto sigma4 = canonical_sigma(4);
  CHECK(min_left_exponent(Permutation::identity(4), sigma4) == ExponentPair{1, 1});
  CHECK(min_left_exponent(Permutation::from_images({1, 3, 5, 2, 4}), canonical_sigma(5)) ==
        ExponentPair{1, 2});
  // [2 1 4 3] already satisfies sigma xi = xi sigma^3
  CHECK(min_left_exponent(Permutation::from_images({2, 1, 4, 3}), sigma4) == ExponentPair{1, 3});
  CHECK_FALSE(min_left_exponent(Permutation::from_images({1, 2, 4, 3}), sigma4).has_value());
  CHECK(min_left_exponent(Permutation::from_images({1, 4, 3, 6, 5, 2}), canonical_sigma(6)) ==
        ExponentPair{2, 2});
  CHECK(min_left_exponent(Permutation::from_images({1, 2, 6, 4, 5, 3}), canonical_sigma(6)) ==
        ExponentPair{3, 3});
  CHECK_FALSE(min_left_exponent(Permutation::from_images({1, 2, 3, 5, 4}), canonical_sigma(5))
                  .has_value());
  CHECK_THROWS_AS(min_left_exponent(Permutation::identity(4), Permutation::identity(4)),
                  ContractViolation);

  SUBCASE("agrees with the raw-vector check on S_6") {
    std::vector<int> x(6);
    std::iota(x.begin(), x.end(), 1);
    do {
      std::optional<ExponentPair> expected;
      for (std::int64_t k = 1; k < 6 && !expected; ++k) {
        for (std::int64_t l = 1; l < 6; ++l) {
          if (shift_equation_holds(x, k, l)) {
            expected = ExponentPair{k, l};
            break;
          }
        }
      }
      REQUIRE(min_left_exponent(Permutation::from_images(x), canonical_sigma(6)) == expected);
    } while (std::next_permutation(x.begin(), x.end()));
  }
}
