#include "shiftclass/class_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <json.hpp>

#include "shiftclass/errors.hpp"
#include "shiftclass/zn_ring.hpp"

namespace shiftclass {

std::string to_string(const Vertex& v) {
  return "<" + std::to_string(v.k) + "," + std::to_string(v.l) + ">";
}

GammaGraph GammaGraph::build(std::int64_t n) {
  if (n < 1) throw ContractViolation("class graph needs n >= 1, got " + std::to_string(n));

  std::set<Vertex> built;
  std::set<Arc> arcs;
  std::deque<Vertex> worklist;

  if (n == 1) {
    built.insert({1, 1});
  } else {
    for (std::int64_t l = 1; l < n; ++l) {
      if (gcd(l, n) != 1) continue;
      built.insert({1, l});
      worklist.push_back({1, l});
    }
  }

  const auto primes = prime_divisors(n);
  while (!worklist.empty()) {
    const Vertex from = worklist.front();
    worklist.pop_front();
    for (const auto p : primes) {
      if (n % (from.k * p) != 0) continue;
      const Vertex to{from.k * p, zn_mul(ZnElement(from.l, n), ZnElement(p, n)).value()};
      arcs.insert({from, to});
      if (built.insert(to).second) worklist.push_back(to);
    }
  }

  GammaGraph g;
  g.n_ = n;
  g.vertices_.assign(built.begin(), built.end());
  g.arcs_.assign(arcs.begin(), arcs.end());

  const auto count = g.vertices_.size();
  g.successors_.assign(count, {});
  g.in_degree_.assign(count, 0);
  for (const auto& [from, to] : g.arcs_) {
    const auto target = g.index_of(to);
    g.successors_[g.index_of(from)].push_back(target);
    ++g.in_degree_[target];
  }

  g.reach_.assign(count, std::vector<bool>(count, false));
  for (std::size_t start = 0; start < count; ++start) {
    auto& seen = g.reach_[start];
    std::vector<std::size_t> stack(g.successors_[start]);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = true;
      for (const auto w : g.successors_[v]) {
        if (!seen[w]) stack.push_back(w);
      }
    }
  }
  return g;
}

std::size_t GammaGraph::index_of(const Vertex& v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw ContractViolation("vertex " + to_string(v) + " is not in Gamma_" + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool GammaGraph::contains(const Vertex& v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool GammaGraph::precedes(const Vertex& a, const Vertex& b) const {
  return reach_[index_of(a)][index_of(b)];
}

std::int64_t GammaGraph::predecessor_count(const Vertex& target, std::int64_t r) const {
  const auto t = index_of(target);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].k == r && reach_[i][t]) ++count;
  }
  return count;
}

std::int64_t GammaGraph::tau(std::int64_t k, std::int64_t r) const {
  if (k < 1 || r < 1 || n_ % k != 0 || k % r != 0 || r >= k) {
    throw ContractViolation("tau(" + std::to_string(n_) + "," + std::to_string(k) + "," +
                            std::to_string(r) + ") requires k | n, r | k and r < k");
  }
  return predecessor_count({k, k}, r);
}

std::size_t GammaGraph::in_degree(const Vertex& v) const { return in_degree_[index_of(v)]; }

std::size_t GammaGraph::out_degree(const Vertex& v) const {
  return successors_[index_of(v)].size();
}

namespace {

std::string dot_id(const Vertex& v) {
  return "v" + std::to_string(v.k) + "_" + std::to_string(v.l);
}

}  // namespace

std::string export_dot(const GammaGraph& g) {
  std::ostringstream out;
  out << "digraph Gamma_" << g.n() << " {\n";
  for (const auto& v : g.vertices()) {
    out << "  " << dot_id(v) << " [label=\"" << to_string(v) << "\"];\n";
  }
  for (const auto& [from, to] : g.arcs()) {
    out << "  " << dot_id(from) << " -> " << dot_id(to) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const GammaGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  auto vertices = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) vertices.push_back({v.k, v.l});
  doc["vertices"] = std::move(vertices);
  auto arcs = nlohmann::ordered_json::array();
  for (const auto& [from, to] : g.arcs()) {
    arcs.push_back({{from.k, from.l}, {to.k, to.l}});
  }
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

}  // namespace shiftclass
