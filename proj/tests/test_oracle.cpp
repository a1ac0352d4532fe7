#include <doctest.h>

#include <json.hpp>

#include "shiftclass/counting.hpp"
#include "shiftclass/errors.hpp"
#include "shiftclass/oracle.hpp"
#include "shiftclass/zn_ring.hpp"

using namespace shiftclass;

TEST_CASE("class counts for small n") {
  CHECK(enumerate_classes(4, canonical_sigma(4)).class_count == 3);
  CHECK(enumerate_classes(5, canonical_sigma(5)).class_count == 8);
  const auto two = enumerate_classes(2, canonical_sigma(2));
  CHECK(two.class_count == 1);
  CHECK(two.size_histogram == std::map<std::uint64_t, std::uint64_t>{{2, 1}});
  CHECK(enumerate_classes(1, canonical_sigma(1)).class_count == 1);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_classes(9, canonical_sigma(9)), BoundExceeded);
  CHECK_THROWS_AS(count_equation_solutions(9, 1, 1, canonical_sigma(9)), BoundExceeded);
  CHECK_THROWS_AS(sigma_independence_check(9), BoundExceeded);
  CHECK_THROWS_AS(enumerate_classes(4, Permutation::identity(4)), ContractViolation);
  CHECK_THROWS_AS(enumerate_classes(4, canonical_sigma(5)), ContractViolation);
}

TEST_CASE("oracle agrees with the counting formula and its decomposition, n <= 8") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const auto report = enumerate_classes(n, canonical_sigma(static_cast<int>(n)));
    const auto table = count_table(n);
    CHECK(report.class_count == table.total);

    Nat elements = 0;
    for (const auto& [size, classes] : report.size_histogram) {
      elements += Nat(size) * classes;
      // size is k n for a divisor k of n (k = n being the n^2 case)
      REQUIRE(size % n == 0);
      REQUIRE(n % static_cast<std::int64_t>(size / n) == 0);
    }
    CHECK(elements == factorial(n));

    std::map<std::uint64_t, std::uint64_t> predicted;
    for (const auto& c : table.columns) {
      if (c.product != 0) {
        predicted[static_cast<std::uint64_t>(c.k * n)] = static_cast<std::uint64_t>(c.product);
      }
    }
    CHECK(report.size_histogram == predicted);
  }
}

TEST_CASE("count_equation_solutions") {
  CHECK(count_equation_solutions(4, 2, 2, canonical_sigma(4)) == 8);
  CHECK(count_equation_solutions(5, 1, 2, canonical_sigma(5)) == 5);
  CHECK(count_equation_solutions(6, 1, 2, canonical_sigma(6)) == 0);

  SUBCASE("every exponent pair is explained by the classes' stabilizers, n <= 7") {
    // The pairs (a, b) with sigma^a xi = xi sigma^b form the cyclic group
    // generated by the minimal pair (k, l) of xi's class, or just (0, 0).
    for (std::int64_t n = 1; n <= 7; ++n) {
      const auto sigma = canonical_sigma(static_cast<int>(n));
      const auto report = enumerate_classes(n, sigma, OracleOptions{8, true});
      for (std::int64_t k = 1; k <= n; ++k) {
        for (std::int64_t l = 1; l <= n; ++l) {
          Nat expected = 0;
          for (const auto& c : report.per_class) {
            bool hit = false;
            if (!c.min_exponents) {
              hit = k == n && l == n;
            } else {
              for (std::int64_t s = 1; s <= n && !hit; ++s) {
                hit = (s * c.min_exponents->k - k) % n == 0 &&
                      (s * c.min_exponents->l - l) % n == 0;
              }
            }
            if (hit) expected += c.size;
          }
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(l);
          const auto counted = count_equation_solutions(n, k, l, sigma);
          REQUIRE(counted == expected);
          if (is_admissible(n, k, l)) REQUIRE(counted == p_count(n, k));
          if (k == 1 && gcd(l, n) > 1) REQUIRE(counted == 0);
        }
      }
    }
  }
}

TEST_CASE("per-class detail and the minimal exponent pair, n <= 7") {
  for (std::int64_t n = 2; n <= 7; ++n) {
    const auto sigma = canonical_sigma(static_cast<int>(n));
    const auto report = enumerate_classes(n, sigma, OracleOptions{8, true});
    REQUIRE(Nat(report.per_class.size()) == report.class_count);
    for (const auto& c : report.per_class) {
      CAPTURE(n);
      CAPTURE(c.representative.to_string());
      if (c.min_exponents) {
        REQUIRE(c.size == static_cast<std::uint64_t>(c.min_exponents->k * n));
        REQUIRE(n % c.min_exponents->k == 0);
        REQUIRE(is_admissible(n, c.min_exponents->k, c.min_exponents->l));
      } else {
        REQUIRE(c.size == static_cast<std::uint64_t>(n * n));
      }
      // the minimal pair is the same for every member of the class
      auto left = Permutation::identity(static_cast<int>(n));
      for (std::int64_t a = 0; a < n; ++a) {
        auto member = compose(left, c.representative);
        for (std::int64_t b = 0; b < n; ++b) {
          REQUIRE(min_left_exponent(member, sigma) == c.min_exponents);
          member = compose(member, sigma);
        }
        left = compose(left, sigma);
      }
    }
  }
}

TEST_CASE("sigma independence") {
  CHECK(sigma_independence_check(5));
  CHECK(sigma_independence_check(6));
  CHECK(sigma_independence_check(2));
  CHECK(sigma_independence_check(6, 12345));

  const auto sample = sample_full_cycles(7, kDefaultOracleSeed);
  CHECK(sample.size() == 5);
  for (const auto& s : sample) CHECK(is_full_cycle(s));
  CHECK(sample_full_cycles(7, kDefaultOracleSeed) == sample);
  CHECK(enumerate_classes(6, sample_full_cycles(6, 1)[4]).class_count == 24);
}

TEST_CASE("report JSON") {
  const auto doc =
      nlohmann::json::parse(to_json(enumerate_classes(3, canonical_sigma(3), {8, true})));
  CHECK(doc["n"] == 3);
  CHECK(doc["sigma"] == nlohmann::json::parse("[2,3,1]"));
  CHECK(doc["class_count"] == "2");
  CHECK(doc["size_histogram"] ==
        nlohmann::json::parse(R"([{"size":3,"classes":2}])"));
  REQUIRE(doc["per_class"].size() == 2);
  CHECK(doc["per_class"][0]["representative"] == nlohmann::json::parse("[1,2,3]"));
  CHECK(doc["per_class"][0]["min_left_exponent"] == nlohmann::json::parse("[1,1]"));

  const auto plain = nlohmann::json::parse(to_json(enumerate_classes(3, canonical_sigma(3))));
  CHECK_FALSE(plain.contains("per_class"));
}
