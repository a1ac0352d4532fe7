#include "shiftclass/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <json.hpp>

#include "shiftclass/errors.hpp"

namespace shiftclass {

namespace {

void require_within_bound(std::int64_t n, std::int64_t bound) {
  if (n < 1) throw ContractViolation("n must be >= 1");
  if (n > bound) {
    throw BoundExceeded("brute force over S_" + std::to_string(n) +
                        " exceeds the oracle bound " + std::to_string(bound));
  }
}

void require_sigma(std::int64_t n, const Permutation& sigma) {
  if (sigma.degree() != n || !is_full_cycle(sigma)) {
    throw ContractViolation("sigma " + sigma.to_string() + " is not a full cycle of degree " +
                            std::to_string(n));
  }
}

// All of S_n, index == lexicographic (Lehmer) rank.
std::vector<Permutation> symmetric_group(std::int64_t n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> elements;
  do {
    elements.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return elements;
}

}  // namespace

ClassReport enumerate_classes(std::int64_t n, const Permutation& sigma,
                              const OracleOptions& options) {
  require_within_bound(n, options.bound);
  require_sigma(n, sigma);

  const auto elements = symmetric_group(n);
  std::vector<bool> visited(elements.size(), false);
  ClassReport report;
  report.n = n;
  report.sigma = sigma;
  std::uint64_t classes = 0;

  std::vector<std::uint64_t> frontier;
  for (std::uint64_t start = 0; start < elements.size(); ++start) {
    if (visited[start]) continue;
    ++classes;
    visited[start] = true;
    frontier.assign(1, start);
    std::uint64_t size = 0;
    while (!frontier.empty()) {
      const auto current = frontier.back();
      frontier.pop_back();
      ++size;
      const auto& xi = elements[current];
      for (const auto& next : {compose(sigma, xi), compose(xi, sigma)}) {
        const auto rank = next.lehmer_rank();
        if (!visited[rank]) {
          visited[rank] = true;
          frontier.push_back(rank);
        }
      }
    }
    ++report.size_histogram[size];
    if (options.per_class) {
      report.per_class.push_back({elements[start], size, min_left_exponent(elements[start], sigma)});
    }
  }
  report.class_count = classes;
  return report;
}

Nat count_equation_solutions(std::int64_t n, std::int64_t k, std::int64_t l,
                             const Permutation& sigma, std::int64_t bound) {
  require_within_bound(n, bound);
  require_sigma(n, sigma);
  if (k < 0 || l < 0) throw ContractViolation("exponents must be nonnegative");
  const auto left = power(sigma, static_cast<std::uint64_t>(k));
  const auto right = power(sigma, static_cast<std::uint64_t>(l));
  std::uint64_t count = 0;
  for (const auto& xi : symmetric_group(n)) {
    if (compose(left, xi) == compose(xi, right)) ++count;
  }
  return count;
}

std::vector<Permutation> sample_full_cycles(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("n must be >= 1");
  const auto shift = canonical_sigma(static_cast<int>(n));
  std::vector<Permutation> sample{shift, inverse(shift)};
  std::mt19937_64 rng(seed);
  auto images = shift.images();
  for (int i = 0; i < 3; ++i) {
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    const auto h = Permutation::from_images(images);
    sample.push_back(compose(compose(h, shift), inverse(h)));
  }
  return sample;
}

bool sigma_independence_check(std::int64_t n, std::uint64_t seed, std::int64_t bound) {
  require_within_bound(n, bound);
  std::optional<ClassReport> reference;
  for (const auto& sigma : sample_full_cycles(n, seed)) {
    auto report = enumerate_classes(n, sigma, OracleOptions{bound, false});
    if (!reference) {
      reference = std::move(report);
      continue;
    }
    if (report.class_count != reference->class_count ||
        report.size_histogram != reference->size_histogram) {
      return false;
    }
  }
  return true;
}

std::string to_json(const ClassReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["sigma"] = report.sigma.images();
  doc["class_count"] = to_decimal(report.class_count);
  auto histogram = nlohmann::ordered_json::array();
  for (const auto& [size, count] : report.size_histogram) {
    histogram.push_back({{"size", size}, {"classes", count}});
  }
  doc["size_histogram"] = std::move(histogram);
  if (!report.per_class.empty()) {
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : report.per_class) {
      nlohmann::ordered_json entry;
      entry["representative"] = c.representative.images();
      entry["size"] = c.size;
      if (c.min_exponents) {
        entry["min_left_exponent"] = {c.min_exponents->k, c.min_exponents->l};
      } else {
        entry["min_left_exponent"] = nullptr;
      }
      classes.push_back(std::move(entry));
    }
    doc["per_class"] = std::move(classes);
  }
  return doc.dump();
}

}  // namespace shiftclass
