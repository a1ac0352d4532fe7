#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace shiftclass {

/// An element of S_n in one-line notation. The external contract is 1-based:
/// `(*this)(i)` is the image of i for i in {1..n}.
///
/// Products follow the left-to-right convention: `compose(a, b)` applies `a`
/// first, so compose(a, b)(i) == b(a(i)). No other product is provided.
class Permutation {
 public:
  /// Builds from 1-based images; throws ContractViolation unless they form a
  /// bijection of {1..n} with n >= 1.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of the 1-based point i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }

  /// 1-based one-line images.
  std::vector<int> images() const;

  bool is_identity() const noexcept;

  /// Lexicographic rank of the one-line notation among all of S_n (Lehmer code).
  std::uint64_t lehmer_rank() const;

  /// `[i1 i2 ... in]`
  std::string to_string() const;

  /// Disjoint cycles, fixed points omitted, `()` for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {}

  friend Permutation compose(const Permutation& alpha, const Permutation& beta);
  friend Permutation inverse(const Permutation& alpha);

  std::vector<int> images_;  // 0-based
};

/// Left-to-right product: result(i) = beta(alpha(i)).
Permutation compose(const Permutation& alpha, const Permutation& beta);

Permutation inverse(const Permutation& alpha);

/// e-fold product by repeated squaring; power(alpha, 0) is the identity.
Permutation power(const Permutation& alpha, std::uint64_t e);

/// Least m >= 1 with alpha^m = identity.
std::uint64_t order(const Permutation& alpha);

/// Lengths of the disjoint cycles, fixed points included.
std::vector<int> cycle_type(const Permutation& alpha);

/// True iff alpha is a single cycle through all n points. The identity of S_1
/// counts as the (only) full cycle of degree 1.
bool is_full_cycle(const Permutation& alpha);

/// The shift i -> i (+) 1, i.e. [2 3 ... n 1]; identity for n = 1.
Permutation canonical_sigma(int n);

}  // namespace shiftclass
