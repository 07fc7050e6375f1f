// Command-line front end: certificates, inversion, pairing, the corollary
// pipeline and the search harness over cubic-linear maps.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cubelin/druzkowski.hpp"
#include "cubelin/inversion.hpp"
#include "cubelin/io.hpp"
#include "cubelin/pairing.hpp"
#include "cubelin/search.hpp"

namespace {

using namespace cubelin;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitAnomaly = 2;

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A matrix argument is a built-in name, inline JSON, a file path, or "-" for stdin.
ScalarMatrix load_matrix(const std::string& arg) {
  for (const auto& name : builtin_names()) {
    if (arg == name) return builtin_example(arg);
  }
  if (!arg.empty() && arg.front() == '[') return parse_matrix(arg);
  return parse_matrix(read_file(arg));
}

void print_map(const PolyMap& map, const std::string& name) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    std::cout << "  " << name << (i + 1) << " = " << map[i].to_string() << "\n";
  }
}

int cmd_verify(const ScalarMatrix& a, bool json) {
  const RankBoundCertificate cert = rank_bound_certificate(a);
  if (json) {
    std::cout << to_json(cert).dump() << "\n";
  } else {
    std::cout << "n = " << a.rows() << ", delta = " << cert.delta << ", rank = " << cert.rank
              << "\n"
              << "trace condition (A^t D A = 0): " << (cert.trace_condition_holds ? "holds" : "fails")
              << "\n";
    if (cert.trace_condition_holds) {
      std::cout << "rank bound: 2*rank = " << 2 * cert.rank << " <= n + delta = "
                << cert.bound_times_two << " : "
                << (cert.theorem_satisfied ? (cert.tight() ? "satisfied (tight)" : "satisfied")
                                           : "VIOLATED")
                << "\n";
    } else {
      std::cout << "rank bound: not applicable (vacuously satisfied)\n";
    }
  }
  if (!cert.theorem_satisfied) {
    std::cerr << "ANOMALY: rank bound violated under the trace condition\n";
    return kExitAnomaly;
  }
  return kExitOk;
}

int cmd_invert(const ScalarMatrix& a, std::optional<std::uint32_t> bound, bool json) {
  const InverseResult result = decide_automorphism(a, bound);
  const bool keller = is_keller(a);
  if (json) {
    std::cout << to_json(result).dump() << "\n";
  } else {
    std::cout << "status: " << (result.invertible() ? "Invertible" : "NotInvertible")
              << " (degree bound " << result.degree_bound_used << ")\n";
    if (result.inverse) {
      std::cout << "inverse degree: " << *result.inverse_degree << "\n";
      print_map(*result.inverse, "G");
    }
  }
  // Below the automorphism degree bound a failure says nothing about the map.
  const bool full_bound = result.degree_bound_used >= automorphism_degree_bound(expand_map(a));
  if (keller && full_bound && !result.invertible()) {
    std::cerr << "ANOMALY: Keller map not inverted within the degree bound\n";
    return kExitAnomaly;
  }
  return kExitOk;
}

int cmd_reduce(const ScalarMatrix& a, bool json) {
  const GZPair pair = gz_reduce(a);
  if (json) {
    std::cout << to_json(pair).dump() << "\n";
  } else {
    std::cout << "rank r = " << pair.rank << "\n"
              << "B = " << matrix_to_json(pair.b).dump() << "\n"
              << "C = " << matrix_to_json(pair.c).dump() << "\n"
              << "G (in variables x1..x" << pair.rank << "):\n";
    print_map(pair.g, "G");
    std::cout << "intertwining C o F = G o C: holds\n";
  }
  return kExitOk;
}

int cmd_corollary(const ScalarMatrix& a, bool json) {
  const CorollaryReport report = corollary_pipeline(a);
  if (json) {
    std::cout << to_json(report).dump() << "\n";
  } else {
    std::cout << "n = " << report.n << "\n"
              << "nonzero diagonal: " << (report.diag_nonzero ? "yes" : "no") << "\n"
              << "Keller (JH nilpotent): " << (report.keller ? "yes" : "no") << "\n";
    if (!report.applicable()) {
      std::cout << "hypothesis not met; the corollary does not apply\n";
    }
    if (report.rank) std::cout << "rank = " << *report.rank << "\n";
    if (report.pair) {
      std::cout << "paired map G in dimension " << report.pair->rank << ":\n";
      print_map(report.pair->g, "G");
    }
    if (report.g_inverse_degree) std::cout << "G inverse degree: " << *report.g_inverse_degree << "\n";
    if (report.f_inverse_degree) std::cout << "F inverse degree: " << *report.f_inverse_degree << "\n";
    if (report.applicable()) std::cout << "verified: " << (report.verified ? "yes" : "no") << "\n";
  }
  if (report.anomaly) {
    std::cerr << "ANOMALY: " << *report.anomaly << "\n";
    return kExitAnomaly;
  }
  return kExitOk;
}

int cmd_search(const std::string& path, std::optional<unsigned> workers, bool records) {
  const Json raw = [&] {
    try {
      return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
      throw SearchConfigError(std::string("malformed config JSON: ") + e.what());
    }
  }();
  SearchConfig config = parse_search_config(raw);
  if (!raw.contains("ceiling")) config.ceiling = ceiling_from_environment();
  if (workers) config.workers = *workers;
  config.keep_records = records;
  validate(config);
  const SearchReport report = run_search(config);
  for (const auto& rec : report.records) std::cout << to_json(rec).dump() << "\n";
  std::cout << to_json(report).dump() << "\n";
  if (!report.clean()) {
    std::cerr << "ANOMALY: " << report.anomalies.size() << " anomalous candidate(s)\n";
    return kExitAnomaly;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for cubic-linear polynomial maps X + (AX)^{*3}"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string matrix_arg;
  const std::string matrix_help =
      "Matrix: built-in name, inline JSON array of rows, file path, or - for stdin";

  auto* verify = app.add_subcommand("verify", "Rank-bound certificate for a matrix");
  verify->add_option("matrix", matrix_arg, matrix_help)->required();

  std::optional<std::uint32_t> bound;
  auto* invert = app.add_subcommand("invert", "Decide invertibility and print the inverse");
  invert->add_option("matrix", matrix_arg, matrix_help)->required();
  invert->add_option("--bound", bound, "Degree bound (default 3^(n-1))");

  auto* reduce = app.add_subcommand("reduce", "Gorni-Zampieri reduction to dimension rank(A)");
  reduce->add_option("matrix", matrix_arg, matrix_help)->required();

  auto* corollary = app.add_subcommand("corollary", "Run the nonzero-diagonal, n <= 9 pipeline");
  corollary->add_option("matrix", matrix_arg, matrix_help)->required();

  std::string config_path;
  std::optional<unsigned> workers;
  bool records = false;
  auto* search = app.add_subcommand("search", "Enumerate or sample matrices and check them");
  search->add_option("config", config_path, "Search config JSON file")->required();
  search->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--records", records, "Emit one JSON line per selected candidate");

  std::string example_name;
  auto* example = app.add_subcommand("example", "Print a built-in matrix");
  example->add_option("name", example_name, "paper-example, shear-2 or zero-3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*verify) return cmd_verify(load_matrix(matrix_arg), json);
    if (*invert) return cmd_invert(load_matrix(matrix_arg), bound, json);
    if (*reduce) return cmd_reduce(load_matrix(matrix_arg), json);
    if (*corollary) return cmd_corollary(load_matrix(matrix_arg), json);
    if (*search) return cmd_search(config_path, workers, records);
    if (*example) {
      std::cout << matrix_to_json(builtin_example(example_name)).dump() << "\n";
      return kExitOk;
    }
  } catch (const KellerCrossCheckError& e) {
    std::cerr << "ANOMALY: " << e.what() << "\n";
    return kExitAnomaly;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
