#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiftclass/class_graph.hpp"
#include "shiftclass/counting.hpp"
#include "shiftclass/equation_solver.hpp"
#include "shiftclass/errors.hpp"
#include "shiftclass/oracle.hpp"
#include "shiftclass/zn_ring.hpp"

namespace shiftclass::cli {

namespace {

constexpr std::uint64_t kMaxListedSolutions = 1'000'000;

class UsageError : public Error {
 public:
  using Error::Error;
};

const char* format_name(Format f) {
  switch (f) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::dot: return "dot";
  }
  return "?";
}

void require_format(const CliConfig& config, std::initializer_list<Format> allowed,
                    const char* command) {
  for (const auto f : allowed) {
    if (f == config.format) return;
  }
  throw UsageError(std::string("format '") + format_name(config.format) +
                   "' is not supported by '" + command + "'");
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw UsageError(std::string(what) + " must be >= 1, got " + std::to_string(n));
}

int cmd_compute(const CliConfig& config, std::ostream& out) {
  require_format(config, {Format::text, Format::json}, "compute");
  const auto n = config.args.at(0);
  require_positive(n, "n");
  const auto q = q_count(n);
  if (config.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["q"] = to_decimal(q);
    out << doc.dump() << '\n';
  } else {
    out << to_decimal(q) << '\n';
  }
  return kExitOk;
}

int cmd_table(const CliConfig& config, std::ostream& out) {
  require_format(config, {Format::text, Format::json, Format::csv}, "table");
  const auto from = config.args.at(0);
  const auto to = config.args.at(1);
  require_positive(from, "range start");
  if (to < from) throw UsageError("empty range " + std::to_string(from) + ".." + std::to_string(to));

  std::vector<std::future<Nat>> rows;
  for (auto n = from; n <= to; ++n) rows.push_back(std::async(std::launch::async, q_count, n));

  if (config.format == Format::json) {
    auto doc = nlohmann::ordered_json::array();
    for (auto n = from; n <= to; ++n) {
      doc.push_back({{"n", n}, {"q", to_decimal(rows[n - from].get())}});
    }
    out << doc.dump() << '\n';
  } else if (config.format == Format::csv) {
    out << "n,q\n";
    for (auto n = from; n <= to; ++n) out << n << ',' << to_decimal(rows[n - from].get()) << '\n';
  } else {
    std::vector<std::string> values;
    std::size_t width = 5;
    for (auto& row : rows) {
      values.push_back(to_decimal(row.get()));
      width = std::max(width, values.back().size());
    }
    const auto n_width = std::max<std::size_t>(2, std::to_string(to).size());
    out << std::string(n_width - 1, ' ') << 'n' << "  " << std::string(width - 5, ' ') << "|Q_n|\n";
    for (auto n = from; n <= to; ++n) {
      const auto label = std::to_string(n);
      const auto& value = values[n - from];
      out << std::string(n_width - label.size(), ' ') << label << "  "
          << std::string(width - value.size(), ' ') << value << '\n';
    }
  }
  return kExitOk;
}

int cmd_matrix(const CliConfig& config, std::ostream& out) {
  require_format(config, {Format::text, Format::json}, "matrix");
  const auto n = config.args.at(0);
  require_positive(n, "n");
  const auto table = count_table(n);
  if (config.format == Format::json) {
    out << to_json(table) << '\n';
  } else {
    out << render_text(table);
  }
  return kExitOk;
}

int cmd_graph(const CliConfig& config, std::ostream& out) {
  require_format(config, {Format::text, Format::json, Format::dot}, "graph");
  const auto n = config.args.at(0);
  require_positive(n, "n");
  const auto g = build_gamma(n);
  switch (config.format) {
    case Format::dot: out << export_dot(g); break;
    case Format::json: out << export_json(g) << '\n'; break;
    default:
      out << "vertices=" << g.vertices().size() << " arcs=" << g.arcs().size() << '\n';
      for (const auto& [from, to] : g.arcs()) {
        out << to_string(from) << " -> " << to_string(to) << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_solve(const CliConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {Format::text, Format::json}, "solve");
  const auto n = config.args.at(0);
  const auto k = config.args.at(1);
  const auto l = config.args.at(2);
  require_positive(n, "n");
  const auto instance = EquationInstance::make(n, k, l);
  if (auto failure = admissibility_failure(n, k, l)) {
    err << "error: inadmissible exponents: " << *failure << '\n';
    return kExitUsage;
  }
  if (p_count(n, k) > kMaxListedSolutions) {
    throw UsageError("more than " + std::to_string(kMaxListedSolutions) +
                     " solutions; refusing to list them");
  }
  const auto solutions = enumerate_solutions(instance).solutions;
  if (config.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["l"] = l;
    doc["count"] = solutions.size();
    auto list = nlohmann::ordered_json::array();
    for (const auto& xi : solutions) list.push_back(xi.images());
    doc["solutions"] = std::move(list);
    out << doc.dump() << '\n';
  } else {
    out << "count=" << solutions.size() << '\n';
    for (const auto& xi : solutions) out << xi.to_string() << '\n';
  }
  return kExitOk;
}

// Everything the brute force can confirm for one n. Empty result means PASS.
std::vector<std::string> verify_one(std::int64_t n, const CliConfig& config) {
  std::vector<std::string> failures;
  const auto sigma = canonical_sigma(static_cast<int>(n));
  const auto graph = build_gamma(n);
  const auto table = count_table(graph);
  const auto report = enumerate_classes(n, sigma, OracleOptions{config.oracle_bound, false});

  if (report.class_count != table.total) {
    failures.push_back("oracle classes " + to_decimal(report.class_count) + " != formula " +
                       to_decimal(table.total));
  }

  std::map<std::uint64_t, std::uint64_t> predicted;
  for (const auto& column : table.columns) {
    // phi(n/n) = 1, so the product row is the class count for k = n as well
    if (column.product != 0) {
      predicted[static_cast<std::uint64_t>(column.k * n)] =
          static_cast<std::uint64_t>(column.product);
    }
  }
  if (predicted != report.size_histogram) failures.push_back("class size histogram mismatch");

  for (const auto& v : graph.vertices()) {
    if (v.k == n) continue;
    const auto expected = p_count(n, v.k);
    const auto brute = count_equation_solutions(n, v.k, v.l, sigma, config.oracle_bound);
    const auto built = enumerate_solutions(EquationInstance::make(n, v.k, v.l)).solutions;
    const std::set<Permutation> distinct(built.begin(), built.end());
    if (brute != expected || Nat(distinct.size()) != expected || distinct.size() != built.size()) {
      failures.push_back("solution count mismatch at " + to_string(v) + ": p=" +
                         to_decimal(expected) + " brute=" + to_decimal(brute) +
                         " constructed=" + std::to_string(distinct.size()));
    }
  }

  if (!sigma_independence_check(n, config.seed, config.oracle_bound)) {
    failures.push_back("class structure depends on the choice of sigma");
  }
  return failures;
}

int cmd_verify(const CliConfig& config, std::ostream& out) {
  require_format(config, {Format::text}, "verify");
  const auto from = config.args.at(0);
  const auto to = config.args.at(1);
  require_positive(from, "range start");
  if (to < from) throw UsageError("empty range " + std::to_string(from) + ".." + std::to_string(to));
  if (to > config.oracle_bound) {
    throw BoundExceeded("verify range ends at " + std::to_string(to) +
                        ", above the oracle bound " + std::to_string(config.oracle_bound));
  }
  bool all_pass = true;
  for (auto n = from; n <= to; ++n) {
    const auto failures = verify_one(n, config);
    if (failures.empty()) {
      out << "n=" << n << " PASS classes=" << to_decimal(q_count(n)) << '\n';
      continue;
    }
    all_pass = false;
    out << "n=" << n << " FAIL";
    for (const auto& f : failures) out << " [" << f << ']';
    out << '\n';
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::compute: return cmd_compute(config, out);
    case Command::table: return cmd_table(config, out);
    case Command::matrix: return cmd_matrix(config, out);
    case Command::graph: return cmd_graph(config, out);
    case Command::solve: return cmd_solve(config, out, err);
    case Command::verify: return cmd_verify(config, out);
  }
  return kExitUsage;
}

std::int64_t bound_from_environment() {
  const char* raw = std::getenv(kBoundEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultOracleBound;
  try {
    std::size_t used = 0;
    const auto value = std::stoll(raw, &used);
    if (used == std::string(raw).size() && value >= 1) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(kBoundEnv) + " must be a positive integer, got '" + raw + "'");
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format == Format::dot && config.command != Command::graph) {
      throw UsageError("format 'dot' is only valid for 'graph'");
    }
    if (config.output.empty()) return dispatch(config, out, err);
    std::ofstream file(config.output);
    if (!file) throw UsageError("cannot open output file '" + config.output + "'");
    return dispatch(config, file, err);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts sigma-equivalence classes of the symmetric group S_n", "shiftclass"};
  app.require_subcommand(1);

  CliConfig config;
  config.seed = kDefaultOracleSeed;
  std::string bound_text;
  app.add_option("-o,--output", config.output, "Write output to this file");

  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}, {"dot", Format::dot}};

  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("-f,--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* compute = app.add_subcommand("compute", "Print |Q_n|");
  compute->add_option("n", a)->required();
  add_format(compute);

  auto* table = app.add_subcommand("table", "Print |Q_n| for a range of n");
  table->add_option("from", a)->required();
  table->add_option("to", b)->required();
  add_format(table);

  auto* matrix = app.add_subcommand("matrix", "Print the divisor/phi/h/product matrix for n");
  matrix->add_option("n", a)->required();
  add_format(matrix);

  auto* graph = app.add_subcommand("graph", "Export the class graph Gamma_n");
  graph->add_option("n", a)->required();
  add_format(graph);

  auto* solve = app.add_subcommand("solve", "List all solutions of sigma^k xi = xi sigma^l");
  solve->add_option("n", a)->required();
  solve->add_option("k", b)->required();
  solve->add_option("l", c)->required();
  add_format(solve);

  auto* verify = app.add_subcommand("verify", "Check formulas against brute force for a range of n");
  verify->add_option("from", a)->required();
  verify->add_option("to", b)->required();
  verify->add_option("--bound", bound_text, "Oracle degree bound (default: $" +
                                                std::string(kBoundEnv) + " or 8)");
  verify->add_option("--seed", config.seed, "Seed for the random full cycles")
      ->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    config.oracle_bound = bound_text.empty() ? bound_from_environment() : std::stoll(bound_text);
  } catch (const std::exception& e) {
    err << "error: invalid oracle bound: " << e.what() << '\n';
    return kExitUsage;
  }

  if (compute->parsed()) {
    config.command = Command::compute;
    config.args = {a};
  } else if (table->parsed()) {
    config.command = Command::table;
    config.args = {a, b};
  } else if (matrix->parsed()) {
    config.command = Command::matrix;
    config.args = {a};
  } else if (graph->parsed()) {
    config.command = Command::graph;
    config.args = {a};
  } else if (solve->parsed()) {
    config.command = Command::solve;
    config.args = {a, b, c};
  } else {
    config.command = Command::verify;
    config.args = {a, b};
  }
  return run(config, out, err);
}

}  // namespace shiftclass::cli
