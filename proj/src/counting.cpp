#include "shiftclass/counting.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "shiftclass/errors.hpp"
#include "shiftclass/zn_ring.hpp"

namespace shiftclass {

namespace {

void require_divisor(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > n || n % k != 0) {
    throw ContractViolation(std::to_string(k) + " is not a divisor of " + std::to_string(n));
  }
}

// h over the divisors of `k`, filled in ascending order so every h(n, r)
// with r | k is available before it is needed.
std::map<std::int64_t, Nat> h_values(std::int64_t n, std::int64_t k, const GammaGraph& g) {
  if (g.n() != n) {
    throw ContractViolation("class graph is for n = " + std::to_string(g.n()) +
                            ", expected n = " + std::to_string(n));
  }
  std::map<std::int64_t, Nat> h;
  for (const auto d : divisors(k)) {
    if (d == 1) {
      h[d] = 1;
      continue;
    }
    Nat subtracted = 0;
    for (const auto& [r, hr] : h) {
      if (d % r != 0) continue;
      subtracted += Nat(r) * g.tau(d, r) * hr;
    }
    const Nat leading = factorial(d - 1) * pow(Nat(n / d), static_cast<std::uint64_t>(d - 1));
    if (leading < subtracted) {
      throw InexactDivision("h(" + std::to_string(n) + "," + std::to_string(d) +
                            ") numerator is negative");
    }
    h[d] = exact_divide(leading - subtracted, Nat(d),
                        "h(" + std::to_string(n) + "," + std::to_string(d) + ")");
  }
  return h;
}

}  // namespace

Nat p_count(std::int64_t n, std::int64_t k) {
  require_divisor(n, k);
  return factorial(k) * pow(Nat(n / k), static_cast<std::uint64_t>(k));
}

Nat h_count(std::int64_t n, std::int64_t k, const GammaGraph& g) {
  require_divisor(n, k);
  return h_values(n, k, g).at(k);
}

CountTable count_table(const GammaGraph& g) {
  const auto n = g.n();
  const auto h = h_values(n, n, g);
  CountTable table;
  table.n = n;
  table.total = 0;
  for (const auto& [k, hk] : h) {
    CountColumn column{k, Nat(totient(n / k)), hk, 0};
    column.product = column.phi * column.h;
    table.total += column.product;
    table.columns.push_back(std::move(column));
  }
  return table;
}

CountTable count_table(std::int64_t n) { return count_table(GammaGraph::build(n)); }

Nat q_count(std::int64_t n) { return count_table(n).total; }

Nat q_prime(std::int64_t n) {
  if (!is_prime(n)) throw NotPrime(std::to_string(n) + " is not prime");
  const Nat m = n - 1;
  return exact_divide(factorial(n - 1) + m * m, Nat(n),
                      "prime closed form at n = " + std::to_string(n));
}

bool wilson_check(std::int64_t n) {
  if (n < 2) throw ContractViolation("wilson_check needs n >= 2, got " + std::to_string(n));
  ZnElement product(1, n);
  for (std::int64_t i = 2; i < n; ++i) product = zn_mul(product, ZnElement(i, n));
  return zn_add(product, ZnElement(1, n)).is_zero();
}

std::string to_json(const CountTable& table) {
  nlohmann::ordered_json doc;
  doc["n"] = table.n;
  auto columns = nlohmann::ordered_json::array();
  for (const auto& c : table.columns) {
    nlohmann::ordered_json column;
    column["k"] = c.k;
    column["phi"] = to_decimal(c.phi);
    column["h"] = to_decimal(c.h);
    column["product"] = to_decimal(c.product);
    columns.push_back(std::move(column));
  }
  doc["columns"] = std::move(columns);
  doc["total"] = to_decimal(table.total);
  return doc.dump();
}

std::string render_text(const CountTable& table) {
  const std::vector<std::string> labels{"k|n", "phi(n/k)", "h(n,k)", "product"};
  std::vector<std::vector<std::string>> rows(4);
  for (const auto& c : table.columns) {
    rows[0].push_back(std::to_string(c.k));
    rows[1].push_back(to_decimal(c.phi));
    rows[2].push_back(to_decimal(c.h));
    rows[3].push_back(to_decimal(c.product));
  }
  std::size_t label_width = 0;
  for (const auto& label : labels) label_width = std::max(label_width, label.size());

  std::ostringstream out;
  for (std::size_t row = 0; row < rows.size(); ++row) {
    out << labels[row] << std::string(label_width - labels[row].size(), ' ');
    for (std::size_t col = 0; col < table.columns.size(); ++col) {
      std::size_t width = 0;
      for (const auto& r : rows) width = std::max(width, r[col].size());
      out << "  " << std::string(width - rows[row][col].size(), ' ') << rows[row][col];
    }
    out << '\n';
  }
  out << "total" << std::string(label_width - 5, ' ') << "  " << to_decimal(table.total) << '\n';
  return out.str();
}

}  // namespace shiftclass
