#include "feynman_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "feynman/divergence.hpp"
#include "feynman/galois.hpp"
#include "feynman/graph_io.hpp"
#include "feynman/mzv.hpp"
#include "feynman/period.hpp"
#include "feynman/symanzik.hpp"

namespace feynman::cli {
namespace {

using nlohmann::json;

// Bad input that is not a parse error of the command line itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int precision = 12) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string edge_set(const EdgeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<unsigned> parse_indices(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit) || part.size() > 4) {
      throw UsageError("invalid index list '" + text + "'");
    }
    out.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

std::string index_label(const std::vector<unsigned>& idx) {
  std::string s = "zeta(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

// Accepts "1000000" or "1e6".
std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v >= 0) || v != std::floor(v) || v > 9.0e18) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("invalid rational for ") + what + ": '" + text + "'");
  }
}

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json diagnostics = json::array();
  std::ostringstream text;
};

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << json{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"diagnostics", r.diagnostics}}
               .dump(2)
        << "\n";
  } else {
    out << r.text.str();
  }
}

void do_symanzik(const std::string& path, Report& r) {
  const FeynmanGraph g = load_graph_file(path);
  r.inputs["graph"] = path;
  const auto s = symanzik(g);
  const auto trees = spanning_trees(g).size();
  r.results = {{"N_G", g.num_edges()},         {"h_G", loop_number(g)}, {"spanning_trees", trees},
               {"psi", to_string(s.psi)},       {"phi", to_string(s.phi)}, {"xi", to_string(s.xi)}};
  r.text << "N_G = " << g.num_edges() << "\n"
         << "h_G = " << loop_number(g) << "\n"
         << "spanning trees = " << trees << "\n"
         << "Psi = " << to_string(s.psi) << "\n"
         << "Phi = " << to_string(s.phi) << "\n"
         << "Xi = " << to_string(s.xi) << "\n";
}

void do_divergence(const std::string& path, Report& r) {
  const FeynmanGraph g = load_graph_file(path);
  r.inputs["graph"] = path;
  const auto n = static_cast<long long>(g.num_edges());
  const auto h = static_cast<long long>(loop_number(g));
  const auto prim = is_primitive(g);
  const bool phi4 = is_phi4(g);
  r.results = {{"N_G", n},          {"h_G", h},       {"N_G_minus_2h_G", n - 2 * h},
               {"primitive", prim.primitive}, {"witness", prim.witness ? json(*prim.witness) : json(nullptr)},
               {"phi4", phi4},      {"weight_bound", weight_bound(g)}};
  r.text << "N_G = " << n << "\n"
         << "h_G = " << h << "\n"
         << "N_G - 2h_G = " << n - 2 * h << "\n"
         << "primitive = " << (prim.primitive ? "yes" : "no");
  if (prim.witness) {
    const auto hw = loop_number(edge_subgraph(g, *prim.witness));
    r.text << " (witness " << edge_set(*prim.witness) << ": N = " << prim.witness->size() << ", h = " << hw << ")";
  }
  r.text << "\n"
         << "phi4 = " << (phi4 ? "yes" : "no") << "\n"
         << "weight_bound = " << weight_bound(g) << " (informational)\n";
}

struct PeriodArgs {
  std::string graph;
  std::string samples = "1e6";
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string numerator = "1";
  int psi_power = 2;
  int xi_power = 0;
  std::string expect;
  std::string sampler = "uniform";
  std::string chart = "simplex";
};

void do_period(const PeriodArgs& a, Report& r) {
  IntegrandSpec spec;
  try {
    spec.numerator = parse_polynomial(a.numerator);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--numerator: ") + e.what());
  }
  spec.psi_power = a.psi_power;
  spec.xi_power = a.xi_power;
  IntegrationOptions o;
  o.samples = parse_count(a.samples, "sample count");
  o.seed = a.seed;
  o.workers = a.workers;
  o.sampler = a.sampler == "tropical" ? Sampler::kTropical : Sampler::kUniform;
  o.chart = a.chart == "affine" ? Chart::kAffine : Chart::kSimplex;
  std::optional<double> expected;
  if (!a.expect.empty()) {
    try {
      expected = evaluate_expression(a.expect);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--expect: ") + e.what());
    }
  }

  const FeynmanGraph g = load_graph_file(a.graph);
  r.inputs = {{"graph", a.graph},       {"samples", o.samples},     {"seed", o.seed},
              {"workers", o.workers},   {"numerator", to_string(spec.numerator)},
              {"psi_power", a.psi_power}, {"xi_power", a.xi_power}, {"sampler", a.sampler},
              {"chart", a.chart}};
  const PeriodEstimate e = integrate(g, spec, o);
  r.results = {{"value", e.value}, {"std_error", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
  r.text << "value = " << fmt(e.value) << "\n"
         << "std_error = " << fmt(e.std_error, 6) << "\n"
         << "samples = " << e.samples << "\n"
         << "seed = " << e.seed << "\n";
  if (expected) {
    const double dev = e.value - *expected;
    const double sigmas = e.std_error > 0 ? std::abs(dev) / e.std_error : (dev == 0 ? 0.0 : INFINITY);
    const bool pass = std::abs(dev) <= 3 * e.std_error + 1e-12 * std::abs(*expected);
    r.inputs["expect"] = a.expect;
    r.results["expected"] = *expected;
    r.results["relative_deviation"] = *expected != 0 ? dev / *expected : dev;
    r.results["check"] = pass ? "PASS" : "FAIL";
    if (std::isfinite(sigmas)) r.results["deviation_sigmas"] = sigmas;
    r.text << "expected = " << fmt(*expected) << " (" << a.expect << ")\n"
           << "deviation = " << fmt(dev, 6) << " (" << fmt(sigmas, 3) << " sigma)\n"
           << "check = " << (pass ? "PASS" : "FAIL") << " (within 3 sigma)\n";
  }
}

void do_zeta(const std::string& indices, unsigned digits, bool word, Report& r) {
  const auto idx = parse_indices(indices);
  const MzvIndex m(idx);
  r.inputs = {{"indices", idx}};
  if (word) {
    const auto w = iterated_integral_word(m);
    std::string letters;
    for (int l : w.letters) letters += static_cast<char>('0' + l);
    r.results = {{"sign", w.sign}, {"letters", w.letters}, {"weight", m.weight()}, {"depth", m.depth()}};
    r.text << index_label(idx) << " = " << (w.sign > 0 ? "+" : "-") << " I(" << letters << ")\n"
           << "weight = " << m.weight() << ", depth = " << m.depth() << "\n";
    return;
  }
  r.inputs["digits"] = digits;
  const ZetaValue v = idx.size() == 1 ? zeta(idx[0], digits) : mzv(m, digits);
  r.results = {{"value", v.text}, {"error_bound", v.error_bound}};
  r.text << index_label(idx) << " = " << v.text << "\n"
         << "error_bound = " << fmt(v.error_bound, 3) << "\n";
}

struct GaloisArgs {
  std::string name;
  std::string lambda = "1";
  std::string nu = "0";
  std::map<unsigned, std::string> sigma;
  std::string sigma35 = "0";
  std::string c1;
  std::string c2;
};

RepMatrix rep_by_name(const std::string& name, const GaloisElement& g) {
  if (name == "2pi_i") return rep_2pi_i(g);
  if (name == "log2") return rep_log2(g);
  if (name == "zeta35" || name == "zeta(3,5)") return rep_zeta35(g);
  std::string digits = name.substr(0, 4) == "zeta" ? name.substr(4) : "";
  if (digits.size() > 2 && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
  if (!digits.empty() && digits.size() < 5 && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    const unsigned n = static_cast<unsigned>(std::stoul(digits));
    if (n >= 2 && n % 2 == 0) return rep_zeta_even(g, n / 2);
    if (n >= 3) return rep_zeta_odd(g, n / 2);
  }
  throw UsageError("unknown representation '" + name + "' (expected 2pi_i, log2, zetaN or zeta35)");
}

json matrix_json(const RepMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.entries) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(to_string(x));
    rows.push_back(jr);
  }
  return rows;
}

void do_galois_rep(const GaloisArgs& a, Report& r) {
  std::map<unsigned, Rational> sigma;
  for (const auto& [n, text] : a.sigma) sigma[n] = rational_arg(text, ("--sigma" + std::to_string(n)).c_str());
  const Rational lambda = rational_arg(a.lambda, "--lambda");
  if (lambda == 0) throw UsageError("--lambda must be nonzero");
  const GaloisElement g(lambda, rational_arg(a.nu, "--nu"), sigma, rational_arg(a.sigma35, "--sigma35"));
  const RepMatrix m = rep_by_name(a.name, g);
  r.inputs = {{"representation", a.name}, {"lambda", a.lambda}, {"nu", a.nu}, {"sigma35", a.sigma35}};
  for (const auto& [n, text] : a.sigma) r.inputs["sigma" + std::to_string(n)] = text;
  r.results = {{"basis", m.basis}, {"matrix", matrix_json(m)}};
  r.text << "basis: ";
  for (std::size_t i = 0; i < m.basis.size(); ++i) r.text << (i ? ", " : "") << m.basis[i];
  r.text << "\n";
  std::size_t width = 1;
  for (const auto& row : m.entries) {
    for (const auto& x : row) width = std::max(width, to_string(x).size());
  }
  for (const auto& row : m.entries) {
    r.text << "[";
    for (std::size_t j = 0; j < row.size(); ++j) r.text << (j ? "  " : "") << std::setw(static_cast<int>(width)) << to_string(row[j]);
    r.text << "]\n";
  }
}

void do_check_ratio(const GaloisArgs& a, Report& r) {
  const Rational c1 = rational_arg(a.c1, "c_zeta3_zeta35");
  const Rational c2 = rational_arg(a.c2, "c_zeta3_zeta8");
  const RatioCheck c = check_ratio_constraint(c1, c2);
  r.inputs = {{"c_zeta3_zeta35", to_string(c1)}, {"c_zeta3_zeta8", to_string(c2)}};
  r.results = {{"holds", c.holds},
               {"observed_ratio", to_string(c.observed_ratio)},
               {"expected_ratio", to_string(c.expected_ratio)},
               {"observed_sign", c.observed_sign},
               {"expected_sign", c.expected_sign}};
  r.text << (c.holds ? "PASS" : "FAIL") << "\n"
         << "|c1/c2| = " << to_string(c.observed_ratio) << " (sign " << (c.observed_sign < 0 ? "-" : "+") << ")\n"
         << "expected = " << to_string(c.expected_ratio) << " (sign " << (c.expected_sign < 0 ? "-" : "+") << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feynman graph polynomials, parametric periods and zeta values", "feynman"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON document {command, inputs, results, diagnostics}");

  std::string graph_path;
  auto* sym = app.add_subcommand("symanzik", "Psi, Phi and Xi of a graph");
  sym->add_option("graph", graph_path, "Graph JSON file")->required();

  auto* div = app.add_subcommand("divergence", "Power counting, primitivity and phi^4 check");
  div->add_option("graph", graph_path, "Graph JSON file")->required();

  PeriodArgs pa;
  auto* per = app.add_subcommand("period", "Monte Carlo estimate of a projective period integral");
  per->add_option("graph", pa.graph, "Graph JSON file")->required();
  per->add_option("--samples", pa.samples, "Number of samples, e.g. 1e6")->capture_default_str();
  per->add_option("--seed", pa.seed, "Random seed")->capture_default_str();
  per->add_option("--workers", pa.workers, "Worker threads (part of the reproducibility key)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  per->add_option("--numerator", pa.numerator, "Numerator polynomial P, e.g. \"a1*a2\"")->capture_default_str();
  per->add_option("--psi-power", pa.psi_power, "Exponent A of Psi")->capture_default_str();
  per->add_option("--xi-power", pa.xi_power, "Exponent B of Xi")->capture_default_str();
  per->add_option("--expect", pa.expect, "Known value, e.g. \"6*zeta(3)\"; reports PASS within 3 sigma");
  per->add_option("--sampler", pa.sampler, "uniform or tropical")
      ->check(CLI::IsMember({"uniform", "tropical"}))
      ->capture_default_str();
  per->add_option("--chart", pa.chart, "simplex or affine (uniform sampler only)")
      ->check(CLI::IsMember({"simplex", "affine"}))
      ->capture_default_str();

  std::string indices;
  unsigned digits = 10;
  bool word = false;
  auto* zet = app.add_subcommand("zeta", "Zeta and multiple zeta values");
  zet->add_option("indices", indices, "Comma separated index list, e.g. 3,5")->required();
  zet->add_option("--digits", digits, "Decimal digits")->check(CLI::Range(1u, kMaxZetaDigits))->capture_default_str();
  zet->add_flag("--word", word, "Print the iterated integral word instead of the value");

  GaloisArgs ga;
  auto* gal = app.add_subcommand("galois", "Matrix representations and the coefficient ratio check");
  gal->require_subcommand(1);
  auto* rep = gal->add_subcommand("rep", "Matrix of a group element on a period");
  rep->add_option("name", ga.name, "2pi_i, log2, zetaN or zeta35")->required();
  rep->add_option("--lambda", ga.lambda, "lambda (nonzero rational)")->capture_default_str();
  rep->add_option("--nu", ga.nu, "nu")->capture_default_str();
  for (unsigned n = 3; n <= 15; n += 2) {
    rep->add_option_function<std::string>("--sigma" + std::to_string(n),
                                          [&ga, n](const std::string& v) { ga.sigma[n] = v; },
                                          "sigma^(" + std::to_string(n) + ")");
  }
  rep->add_option("--sigma35", ga.sigma35, "sigma^(3,5)")->capture_default_str();
  auto* ratio = gal->add_subcommand("check-ratio", "Check |c1/c2| == 216/522 for c1 zeta(3)zeta(3,5) + c2 zeta(3)zeta(8)");
  ratio->add_option("c1", ga.c1, "Coefficient of zeta(3) zeta(3,5)")->required();
  ratio->add_option("c2", ga.c2, "Coefficient of zeta(3) zeta(8)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // help and version requests are "errors" with exit code 0
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  Report r;
  try {
    if (*sym) {
      r.command = "symanzik";
      do_symanzik(graph_path, r);
    } else if (*div) {
      r.command = "divergence";
      do_divergence(graph_path, r);
    } else if (*per) {
      r.command = "period";
      do_period(pa, r);
    } else if (*zet) {
      r.command = "zeta";
      do_zeta(indices, digits, word, r);
    } else if (*rep) {
      r.command = "galois rep";
      do_galois_rep(ga, r);
    } else if (*ratio) {
      r.command = "galois check-ratio";
      do_check_ratio(ga, r);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::string message = e.what();
    // name the file as well as the JSON path inside it
    if (dynamic_cast<const GraphFormatError*>(&e) != nullptr) {
      message = (graph_path.empty() ? pa.graph : graph_path) + ": " + message;
    }
    err << "error: " << message << "\n";
    if (as_json) {
      r.diagnostics.push_back(json{{"level", "error"}, {"message", message}});
      r.results = nullptr;
      emit(r, true, out);
    }
    return 1;
  }
  emit(r, as_json, out);
  return 0;
}

}  // namespace feynman::cli
