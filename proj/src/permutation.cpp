#include "shiftclass/permutation.hpp"

#include <numeric>
#include <sstream>

#include "shiftclass/errors.hpp"

namespace shiftclass {

Permutation Permutation::from_images(std::span<const int> images) {
  const auto n = images.size();
  if (n == 0) throw ContractViolation("permutation degree must be >= 1");
  std::vector<int> zero_based(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) {
      throw ContractViolation("images do not form a bijection of {1.." + std::to_string(n) + "}");
    }
    seen[v - 1] = true;
    zero_based[i] = v - 1;
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw ContractViolation("permutation degree must be >= 1");
  std::vector<int> zero_based(static_cast<std::size_t>(degree));
  std::iota(zero_based.begin(), zero_based.end(), 0);
  return Permutation(std::move(zero_based));
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::uint64_t Permutation::lehmer_rank() const {
  const auto n = images_.size();
  if (n > 20) throw ContractViolation("lehmer_rank overflows 64 bits above degree 20");
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_later = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (images_[j] < images_[i]) ++smaller_later;
    }
    rank = rank * (n - i) + smaller_later;
  }
  return rank;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i != 0) out << ' ';
    out << images_[i] + 1;
  }
  out << ']';
  return out.str();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    any = true;
    out << '(';
    auto i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out << ' ';
      out << i + 1;
      first = false;
      i = static_cast<std::size_t>(images_[i]);
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation compose(const Permutation& alpha, const Permutation& beta) {
  if (alpha.degree() != beta.degree()) {
    throw ContractViolation("cannot compose permutations of degree " +
                            std::to_string(alpha.degree()) + " and " +
                            std::to_string(beta.degree()));
  }
  std::vector<int> out(alpha.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = beta.images_[static_cast<std::size_t>(alpha.images_[i])];
  }
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& alpha) {
  std::vector<int> out(alpha.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[static_cast<std::size_t>(alpha.images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(out));
}

Permutation power(const Permutation& alpha, std::uint64_t e) {
  auto result = Permutation::identity(alpha.degree());
  auto square = alpha;
  while (e != 0) {
    if (e & 1u) result = compose(result, square);
    e >>= 1u;
    if (e != 0) square = compose(square, square);
  }
  return result;
}

std::vector<int> cycle_type(const Permutation& alpha) {
  const int n = alpha.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    int length = 0;
    for (int i = start; !seen[i - 1]; i = alpha(i)) {
      seen[i - 1] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  return lengths;
}

std::uint64_t order(const Permutation& alpha) {
  std::uint64_t result = 1;
  for (const int length : cycle_type(alpha)) {
    result = std::lcm(result, static_cast<std::uint64_t>(length));
  }
  return result;
}

bool is_full_cycle(const Permutation& alpha) {
  return cycle_type(alpha).size() == 1;
}

Permutation canonical_sigma(int n) {
  if (n < 1) throw ContractViolation("canonical_sigma expects n >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[i - 1] = i % n + 1;
  return Permutation::from_images(images);
}

}  // namespace shiftclass
