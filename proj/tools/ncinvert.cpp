#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncinvert/coefficient.hpp"
#include "ncinvert/composition.hpp"
#include "ncinvert/invert.hpp"
#include "ncinvert/ncsf.hpp"
#include "ncinvert/parking.hpp"
#include "ncinvert/pgraph.hpp"
#include "ncinvert/serialize.hpp"
#include "ncinvert/trees.hpp"
#include "ncinvert/verify.hpp"

namespace {

using ncinvert::Basis;
using ncinvert::Composition;
using ncinvert::NcsfElement;
using ncinvert::ParkingFamily;
using ncinvert::SolverResult;

constexpr int kDefaultDegreeCap = 8;
constexpr int kDefaultBruteCap = 7;
constexpr int kDefaultRowCap = 12;

struct CliCaps {
  int degree = kDefaultDegreeCap;
  int brute = kDefaultBruteCap;
  int rows = kDefaultRowCap;
};

/* The NCINVERT_CAP environment variable and the --cap flag raise every
 * limit to the given value; the flag wins when both are present. */
CliCaps resolve_caps(int flag_cap) {
  CliCaps caps;
  int override_value = 0;
  const char* env = std::getenv("NCINVERT_CAP");
  if (env != nullptr) {
    try {
      override_value = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric NCINVERT_CAP value '" << env << "'\n";
      override_value = 0;
    }
  }
  if (flag_cap > 0) override_value = flag_cap;
  if (override_value > 0) {
    std::cerr << "warning: cap override " << override_value
              << " in effect; large requests can take a long time\n";
    caps.degree = std::max(caps.degree, override_value);
    caps.brute = std::max(caps.brute, override_value);
    caps.rows = std::max(caps.rows, override_value);
  }
  return caps;
}

ncinvert::Caps library_caps(const CliCaps& caps) {
  ncinvert::Caps lib = ncinvert::default_caps();
  lib.nondecreasing = std::max(lib.nondecreasing, caps.degree);
  lib.brute_force = std::max(lib.brute_force, caps.brute);
  return lib;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    values.push_back(std::stoi(item));
  }
  if (values.empty()) throw std::invalid_argument("empty list '" + text + "'");
  return values;
}

ParkingFamily parse_family(const std::string& text) {
  if (text == "classic") return ParkingFamily::classic();
  if (text.rfind("r=", 0) == 0) {
    const int r = std::stoi(text.substr(2));
    if (r < 1) throw std::invalid_argument("family offset must be at least 1");
    return ParkingFamily::shifted(r);
  }
  std::string body = text;
  if (body.rfind("k,l=", 0) == 0) body = body.substr(4);
  if (body.find(',') != std::string::npos) {
    const std::vector<int> kl = parse_int_list(body);
    if (kl.size() != 2 || kl[0] < 1 || kl[1] < 1)
      throw std::invalid_argument("family '" + text + "' is not a valid k,l pair");
    return ParkingFamily::arithmetic(kl[0], kl[1]);
  }
  throw std::invalid_argument("unrecognized family '" + text +
                              "' (expected classic, r=R, or k,l=K,L)");
}

Basis parse_basis(const std::string& text) {
  if (text == "S") return Basis::S;
  if (text == "R") return Basis::R;
  return Basis::L;
}

/* The b-indexed solutions expand over formal letters d_n rather than the
 * complete generators, so rendered keys are relabeled. */
std::string d_letter_text(const NcsfElement& elem) {
  std::string text = elem.to_text();
  std::size_t pos = 0;
  while ((pos = text.find("S[", pos)) != std::string::npos) {
    text.replace(pos, 2, "d[");
    pos += 2;
  }
  return text;
}

void print_series_text(const SolverResult& result, bool d_letters) {
  for (int n = 0; n <= result.order; ++n) {
    std::cout << "[" << n << "] "
              << (d_letters ? d_letter_text(result.at(n)) : result.at(n).to_text()) << "\n";
  }
}

struct CharArgs {
  std::string family = "classic";
  int n = 0;
  bool graded = false;
  std::string basis = "S";
  std::string format = "text";
};

int run_char(const CharArgs& args, const CliCaps& caps) {
  if (args.n < 0 || args.n > caps.degree) {
    std::cerr << "error: size " << args.n << " is outside the cap " << caps.degree
              << " (raise it with --cap or NCINVERT_CAP)\n";
    return 2;
  }
  const ParkingFamily family = parse_family(args.family);
  NcsfElement elem = ncinvert::char_q(family, args.n, library_caps(caps));
  if (!args.graded) elem = elem.eval_q_one();
  const Basis basis = parse_basis(args.basis);
  if (basis != Basis::S) elem = elem.to_basis(basis);
  if (args.format == "json") {
    std::cout << ncinvert::element_to_json(elem) << "\n";
  } else {
    std::cout << elem.to_text() << "\n";
  }
  return 0;
}

struct SolveArgs {
  std::string equation = "g";
  int degree = 0;
  std::string basis = "S";
  std::string format = "text";
};

int run_solve(const SolveArgs& args, const CliCaps& caps) {
  if (args.degree < 0 || args.degree > caps.degree) {
    std::cerr << "error: degree " << args.degree << " is outside the cap " << caps.degree
              << " (raise it with --cap or NCINVERT_CAP)\n";
    return 2;
  }
  const Basis basis = parse_basis(args.basis);
  SolverResult result;
  bool d_letters = false;
  bool basis_convertible = false;
  if (args.equation == "g") {
    result = ncinvert::solve_g(args.degree);
    basis_convertible = true;
  } else if (args.equation == "h") {
    result = ncinvert::solve_h(args.degree);
    basis_convertible = true;
  } else if (args.equation == "f0") {
    result = ncinvert::solve_f0(args.degree);
  } else if (args.equation == "K") {
    const ncinvert::XSeries series = ncinvert::solve_k(args.degree);
    result.equation = "K";
    result.order = args.degree;
    for (int d = 0; d <= args.degree; ++d) result.components.push_back(series.at(d));
    basis_convertible = true;
  } else if (args.equation.rfind("b=", 0) == 0) {
    const int b = std::stoi(args.equation.substr(2));
    if (b < -1) {
      std::cerr << "error: the family index must be at least -1\n";
      return 2;
    }
    result = ncinvert::solve_b_family(b, args.degree);
    d_letters = true;
  } else {
    std::cerr << "error: unknown equation '" << args.equation
              << "' (expected g, h, f0, K, or b=B)\n";
    return 2;
  }
  if (basis != Basis::S) {
    if (!basis_convertible) {
      std::cerr << "error: basis conversion applies to the g, h, and K equations only\n";
      return 2;
    }
    for (NcsfElement& component : result.components) component = component.to_basis(basis);
  }
  if (args.format == "json") {
    std::cout << ncinvert::solver_report_json(result) << "\n";
  } else {
    print_series_text(result, d_letters);
  }
  return 0;
}

struct AbelArgs {
  int n = 0;
  std::string format = "text";
};

int run_abel(const AbelArgs& args, const CliCaps& caps) {
  if (args.n < 0 || args.n > caps.degree) {
    std::cerr << "error: size " << args.n << " is outside the cap " << caps.degree
              << " (raise it with --cap or NCINVERT_CAP)\n";
    return 2;
  }
  const NcsfElement poly = ncinvert::abel_polynomial(args.n);
  if (args.format == "json") {
    std::cout << ncinvert::element_to_json(poly) << "\n";
  } else {
    std::cout << poly.to_text() << "\n";
  }
  return 0;
}

struct TriangleArgs {
  int b = 0;
  int rows = 7;
  std::string kind = "gamma";
  std::string format = "csv";
};

int run_triangle(const TriangleArgs& args, const CliCaps& caps) {
  if (args.rows < 1 || args.rows > caps.rows) {
    std::cerr << "error: rows " << args.rows << " is outside the cap " << caps.rows
              << " (raise it with --cap or NCINVERT_CAP)\n";
    return 2;
  }
  if (args.b < -1) {
    std::cerr << "error: the family index must be at least -1\n";
    return 2;
  }
  const auto rows = (args.kind == "returns")
                        ? ncinvert::motzkin_returns_triangle(args.rows)
                        : ncinvert::gamma_triangle(args.b, args.rows);
  if (args.format == "json") {
    std::cout << ncinvert::triangle_json(rows) << "\n";
  } else {
    std::cout << ncinvert::triangle_csv(rows);
  }
  return 0;
}

struct GammaArgs {
  std::string composition;
  std::string format = "dot";
  bool certify = false;
};

int run_gamma(const GammaArgs& args, const CliCaps& caps) {
  const std::vector<int> parts = parse_int_list(args.composition);
  if (!ncinvert::is_composition(parts)) {
    std::cerr << "error: '" << args.composition << "' is not a composition (parts must be >= 1)\n";
    return 2;
  }
  const long total = ncinvert::weight(parts);
  const int cap = std::max(9, caps.degree);
  if (total > cap) {
    std::cerr << "error: weight " << total << " is outside the cap " << cap
              << " (raise it with --cap or NCINVERT_CAP)\n";
    return 2;
  }
  if (args.certify) {
    const ncinvert::IsoCertificate cert = ncinvert::conjugacy_isomorphism(parts, cap);
    std::cout << ncinvert::certificate_json(parts, cert) << "\n";
    return cert.valid ? 0 : 1;
  }
  const ncinvert::GammaGraph graph = ncinvert::build_gamma(parts, cap);
  if (args.format == "json") {
    std::cout << ncinvert::gamma_json(graph) << "\n";
  } else {
    std::cout << ncinvert::gamma_to_dot(graph);
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_degree = -1;
  int jobs = 1;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  ncinvert::VerifyOptions options;
  options.max_degree = args.max_degree;
  options.jobs = std::max(1, args.jobs);
  const std::vector<ncinvert::CheckResult> results = ncinvert::run_checks(args.suite, options);
  if (results.empty()) {
    std::cerr << "error: no checks matched suite '" << args.suite << "'\n";
    return 2;
  }
  bool all_pass = true;
  if (args.format == "json") {
    nlohmann::json report;
    report["suite"] = args.suite;
    report["max_degree"] = args.max_degree;
    report["checks"] = nlohmann::json::array();
    for (const ncinvert::CheckResult& result : results) {
      all_pass = all_pass && result.pass;
      report["checks"].push_back({{"id", result.id},
                                  {"suite", result.suite},
                                  {"criterion", result.criterion},
                                  {"pass", result.pass},
                                  {"milliseconds", result.milliseconds},
                                  {"detail", result.detail}});
    }
    report["pass"] = all_pass;
    std::cout << report.dump(2) << "\n";
  } else {
    int passed = 0;
    for (const ncinvert::CheckResult& result : results) {
      all_pass = all_pass && result.pass;
      if (result.pass) ++passed;
      std::cout << (result.pass ? "PASS " : "FAIL ") << result.suite << "/" << result.id << " ("
                << std::fixed << std::setprecision(1) << result.milliseconds << " ms)";
      if (!result.detail.empty()) std::cout << " -- " << result.detail;
      std::cout << "\n";
    }
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return all_pass ? 0 : 1;
}

struct SpecializeArgs {
  std::string target = "g";
  int n = 0;
  long alpha = 1;
  std::string format = "text";
};

int run_specialize(const SpecializeArgs& args, const CliCaps& caps) {
  if (args.n < 0 || args.n > caps.degree) {
    std::cerr << "error: size " << args.n << " is outside the cap " << caps.degree
              << " (raise it with --cap or NCINVERT_CAP)\n";
    return 2;
  }
  std::vector<std::pair<std::string, ncinvert::Coefficient>> values;
  if (args.target == "abel") {
    const NcsfElement poly = ncinvert::abel_polynomial(args.n);
    values.emplace_back("one", poly.specialize_one());
    values.emplace_back("closed-form", ncinvert::abel_one_closed_form(args.n));
  } else if (args.target == "g") {
    const NcsfElement component = ncinvert::solve_g(args.n).at(args.n);
    values.emplace_back("one", component.specialize_one());
    values.emplace_back("exp", component.specialize_exp());
    values.emplace_back("binomial[alpha=" + std::to_string(args.alpha) + "]",
                        component.specialize_binomial(args.alpha));
  } else {
    std::cerr << "error: unknown target '" << args.target << "' (expected g or abel)\n";
    return 2;
  }
  if (args.format == "json") {
    nlohmann::json report;
    for (const auto& [label, value] : values)
      report[label] = nlohmann::json::parse(ncinvert::coefficient_to_json(value));
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& [label, value] : values)
      std::cout << label << " = " << value.to_text() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for free-algebra inversion series and parking-word characteristics"};
  app.require_subcommand(1);
  int cap_flag = 0;
  app.add_option("--cap", cap_flag, "Raise all size/degree caps to this value (with a warning)");

  CharArgs char_args;
  CLI::App* char_cmd = app.add_subcommand("char", "Characteristic of a parking-word family");
  char_cmd->fallthrough();
  char_cmd->add_option("--family", char_args.family, "classic, r=R, or k,l=K,L");
  char_cmd->add_option("--n", char_args.n, "Word size")->required();
  char_cmd->add_flag("--q", char_args.graded, "Keep the q-grading (default: evaluate q=1)");
  char_cmd->add_option("--basis", char_args.basis, "Output basis")
      ->check(CLI::IsMember({"S", "R", "L"}));
  char_cmd->add_option("--format", char_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a functional equation degree by degree");
  solve_cmd->fallthrough();
  solve_cmd->add_option("--eq", solve_args.equation, "g, h, f0, K, or b=B")->required();
  solve_cmd->add_option("--degree", solve_args.degree, "Truncation order")->required();
  solve_cmd->add_option("--basis", solve_args.basis, "Output basis (g, h, K only)")
      ->check(CLI::IsMember({"S", "R", "L"}));
  solve_cmd->add_option("--format", solve_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  AbelArgs abel_args;
  CLI::App* abel_cmd = app.add_subcommand("abel", "Binomial-tower polynomial of a given size");
  abel_cmd->fallthrough();
  abel_cmd->add_option("--n", abel_args.n, "Size")->required();
  abel_cmd->add_option("--format", abel_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  TriangleArgs triangle_args;
  CLI::App* triangle_cmd = app.add_subcommand("triangle", "Coefficient triangles of tree families");
  triangle_cmd->fallthrough();
  triangle_cmd->add_option("--b", triangle_args.b, "Family index (>= -1)");
  triangle_cmd->add_option("--rows", triangle_args.rows, "Number of rows");
  triangle_cmd->add_option("--kind", triangle_args.kind, "gamma or returns")
      ->check(CLI::IsMember({"gamma", "returns"}));
  triangle_cmd->add_option("--format", triangle_args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  GammaArgs gamma_args;
  CLI::App* gamma_cmd = app.add_subcommand("gamma", "Swap graph of a composition");
  gamma_cmd->fallthrough();
  gamma_cmd->add_option("--composition", gamma_args.composition, "Comma-separated parts")
      ->required();
  gamma_cmd->add_flag("--certify", gamma_args.certify,
                      "Emit the conjugate-isomorphism certificate instead of the graph");
  gamma_cmd->add_option("--format", gamma_args.format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", verify_args.suite, "all, paper-tables, oracles, involutions")
      ->check(CLI::IsMember({"all", "paper-tables", "oracles", "involutions"}));
  verify_cmd->add_option("--max-degree", verify_args.max_degree,
                         "Clamp every sweep to this degree (-1 = native depths)");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Accepted for interface stability");
  verify_cmd->add_option("--format", verify_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  SpecializeArgs specialize_args;
  CLI::App* specialize_cmd =
      app.add_subcommand("specialize", "Scalar images of series components");
  specialize_cmd->fallthrough();
  specialize_cmd->add_option("--target", specialize_args.target, "g or abel");
  specialize_cmd->add_option("--n", specialize_args.n, "Size")->required();
  specialize_cmd->add_option("--alpha", specialize_args.alpha, "Binomial parameter");
  specialize_cmd->add_option("--format", specialize_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  const CliCaps caps = resolve_caps(cap_flag);
  try {
    if (char_cmd->parsed()) return run_char(char_args, caps);
    if (solve_cmd->parsed()) return run_solve(solve_args, caps);
    if (abel_cmd->parsed()) return run_abel(abel_args, caps);
    if (triangle_cmd->parsed()) return run_triangle(triangle_args, caps);
    if (gamma_cmd->parsed()) return run_gamma(gamma_args, caps);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (specialize_cmd->parsed()) return run_specialize(specialize_args, caps);
  } catch (const ncinvert::CapExceeded& error) {
    std::cerr << "error: " << error.what() << " (raise caps with --cap or NCINVERT_CAP)\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 2;
}
