#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace shiftclass {

/// Vertex <k, l> of the class graph: k is the minimal left exponent of a
/// family of classes and l the matching right exponent, l in {1..n}.
struct Vertex {
  std::int64_t k = 0;
  std::int64_t l = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

using Arc = std::pair<Vertex, Vertex>;

/// The oriented graph Gamma_n. Built once, immutable afterwards; strict
/// reachability is precomputed so order queries are O(1).
class GammaGraph {
 public:
  /// Seeds <1, l> for every l < n coprime to n (just <1, 1> when n == 1),
  /// then saturates with arcs <k, l> -> <kp, l (.) p> for every prime p | n
  /// with kp | n.
  static GammaGraph build(std::int64_t n);

  std::int64_t n() const noexcept { return n_; }

  /// Sorted by (k, l).
  std::span<const Vertex> vertices() const noexcept { return vertices_; }

  /// Sorted lexicographically by (source, target).
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  bool contains(const Vertex& v) const noexcept;

  /// Strict path order: a directed path of length >= 1 from a to b.
  /// Throws ContractViolation if either vertex is absent.
  bool precedes(const Vertex& a, const Vertex& b) const;

  /// Number of vertices <r, s> with <r, s> strictly preceding `target`.
  std::int64_t predecessor_count(const Vertex& target, std::int64_t r) const;

  /// tau(n, k, r): number of vertices <r, s> strictly preceding <k, k>.
  /// Requires k | n, r | k and r < k.
  std::int64_t tau(std::int64_t k, std::int64_t r) const;

  std::size_t in_degree(const Vertex& v) const;
  std::size_t out_degree(const Vertex& v) const;

 private:
  GammaGraph() = default;

  std::size_t index_of(const Vertex& v) const;

  std::int64_t n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::vector<bool>> reach_;  // reach_[a][b]: path a -> b of length >= 1
};

inline GammaGraph build_gamma(std::int64_t n) { return GammaGraph::build(n); }

inline bool precedes(const GammaGraph& g, const Vertex& a, const Vertex& b) {
  return g.precedes(a, b);
}

inline std::int64_t tau(const GammaGraph& g, std::int64_t k, std::int64_t r) { return g.tau(k, r); }

/// Deterministic DOT digraph; nodes and edges in ascending (k, l) order.
std::string export_dot(const GammaGraph& g);

/// {"n": n, "vertices": [[k,l],...], "arcs": [[[k1,l1],[k2,l2]],...]}
std::string export_json(const GammaGraph& g);

}  // namespace shiftclass
