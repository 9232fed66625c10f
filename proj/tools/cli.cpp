#include "polarcsm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <regex>

#include "polarcsm/arrangements.hpp"
#include "polarcsm/classcalc.hpp"
#include "polarcsm/gring.hpp"
#include "polarcsm/io.hpp"
#include "polarcsm/parse.hpp"
#include "polarcsm/polar.hpp"

namespace polarcsm {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 42;
  std::uint64_t prime = kDefaultPrime;
  int trials = 3;
  bool json = false;
  std::string saturation = "generators";
  unsigned threads = 1;
  std::size_t max_reductions = GroebnerLimits{}.max_reductions;
};

TrialConfig config_of(const Options& o) {
  TrialConfig cfg;
  cfg.seed = Seed{o.seed};
  cfg.prime = o.prime;
  cfg.trials = o.trials;
  cfg.threads = o.threads;
  cfg.limits.max_reductions = o.max_reductions;
  cfg.saturation = o.saturation == "generic" ? SaturationMethod::kGenericElement : SaturationMethod::kByGenerators;
  return cfg;
}

Json envelope(const std::string& command, const Options& o, Json result) {
  Json j;
  j["command"] = command;
  j["params"] = {{"seed", o.seed}, {"prime", o.prime}, {"trials", o.trials}};
  j["result"] = std::move(result);
  return j;
}

void print_params(std::ostream& out, const Options& o) {
  out << "seed: " << o.seed << "  prime: " << o.prime << "  trials: " << o.trials << '\n';
}

template <class P>
Json coeffs_json(const P& p) {
  return Json(p.coeffs());
}

std::string join_indices(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string vector_string(const std::vector<std::int64_t>& v) {
  return DegreeVector(static_cast<int>(v.size()) - 1, v).to_string();
}

int cmd_polar(const std::string& path, const Options& o, std::ostream& out) {
  PolyFile file = read_poly_file(path);
  TrialConfig cfg = config_of(o);
  RingPtr ring = make_ring(file.n_vars, cfg.prime);
  std::vector<MPoly> gens = parse_generators(file, ring);
  SchemePolarDegrees result = polar_degrees_scheme_detailed(gens, cfg);
  const GPoly g = g_poly(result.total);
  const bool single = gens.size() == 1;
  const bool homaloidal = result.total.g.back() == 1;

  if (o.json) {
    Json subsets = Json::array();
    for (const auto& s : result.subsets) subsets.push_back({{"generators", s.generators}, {"g", s.degrees.g}});
    Json r;
    r["n"] = result.total.n;
    r["g"] = result.total.g;
    r["g_poly"] = coeffs_json(g);
    r["subsets"] = std::move(subsets);
    if (single) r["homaloidal"] = homaloidal;
    out << envelope("polar", o, std::move(r)).dump(2) << '\n';
    return kExitOk;
  }
  out << "vars: " << file.n_vars << " (P^" << file.n_vars - 1 << ")\n";
  print_params(out, o);
  for (std::size_t i = 0; i < gens.size(); ++i) out << "F" << i + 1 << " = " << gens[i].to_string() << '\n';
  for (const auto& s : result.subsets) out << "g" << join_indices(s.generators) << " = " << s.degrees.to_string() << '\n';
  out << "g_S(t) = " << g.poly().to_string() << '\n';
  if (single) out << "homaloidal: " << (homaloidal ? "true" : "false") << '\n';
  out << "g = " << result.total.to_string() << '\n';
  return kExitOk;
}

int cmd_csm(const std::string& path, const Options& o, std::ostream& out) {
  PolyFile file = read_poly_file(path);
  TrialConfig cfg = config_of(o);
  RingPtr ring = make_ring(file.n_vars, cfg.prime);
  std::vector<MPoly> gens = parse_generators(file, ring);
  CsmResult r = csm_subscheme(gens, cfg);
  const auto sections = sectional_euler(r.chi);
  const auto huh = huh_numbers(r.chi_complement);
  const bool huh_ok = huh == r.g.g;

  if (o.json) {
    Json j;
    j["n"] = r.g.n;
    j["g"] = r.g.g;
    j["gamma_S"] = coeffs_json(r.gamma);
    j["gamma_complement"] = coeffs_json(r.gamma_complement);
    j["chi_S"] = coeffs_json(r.chi);
    j["chi_complement"] = coeffs_json(r.chi_complement);
    j["sectional_euler"] = sections;
    j["euler_characteristic"] = euler_characteristic(r.gamma);
    j["huh_numbers"] = huh;
    j["huh_match"] = huh_ok;
    out << envelope("csm", o, std::move(j)).dump(2) << '\n';
    return kExitOk;
  }
  out << "vars: " << file.n_vars << " (P^" << file.n_vars - 1 << ")\n";
  print_params(out, o);
  out << "g = " << r.g.to_string() << '\n';
  out << "gamma_S = " << r.gamma.poly().to_string() << '\n';
  out << "gamma_complement = " << r.gamma_complement.poly().to_string() << '\n';
  out << "chi_S = " << r.chi.poly().to_string() << '\n';
  out << "sectional:";
  for (std::size_t i = 0; i < sections.size(); ++i) out << (i ? ", " : " ") << "chi_" << i << " = " << sections[i];
  out << '\n';
  out << "chi(S) = " << euler_characteristic(r.gamma) << '\n';
  out << "huh numbers = " << vector_string(huh) << " match: " << (huh_ok ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_involute(const std::string& text, const Options& o, std::ostream& out) {
  IntPoly p = IntPoly::parse(text);
  IntPoly q = involute(p);
  if (o.json) {
    out << envelope("involute", o, {{"input", p.coeffs()}, {"output", q.coeffs()}}).dump(2) << '\n';
  } else {
    out << q.to_string() << '\n';
  }
  return kExitOk;
}

GClass class_of(const std::string& token) {
  static const std::regex named(R"(([PA])(\d{1,2}))");
  std::smatch m;
  if (std::regex_match(token, m, named)) {
    int n = std::stoi(m[2]);
    return m[1] == "P" ? class_Pn(n) : class_An(n);
  }
  if (token == "T") return class_T();
  if (token == "pt") return class_point();
  return GClass(IntPoly::parse(token), token);
}

int cmd_gring(const std::string& op, const std::vector<std::string>& operands, const Options& o, std::ostream& out) {
  const bool binary = op == "star" || op == "dot" || op == "join";
  const bool unary = op == "cone" || op == "sigma";
  if (!binary && !unary) throw std::invalid_argument("unknown gring operation '" + op + "'");
  if (operands.size() != (binary ? 2u : 1u)) {
    throw std::invalid_argument("gring " + op + " takes " + (binary ? "two operands" : "one operand"));
  }
  GClass a = class_of(operands[0]);
  Json result;
  std::string text;
  if (op == "sigma") {
    RatPoly s = sigma(a.gamma);
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    result = {{"operands", {a.gamma.coeffs()}}, {"output", coeffs}};
    text = s.to_string();
  } else {
    GClass r;
    if (op == "cone") {
      r = cone_gamma(a);
    } else {
      GClass b = class_of(operands[1]);
      r = op == "star" ? star(a, b) : op == "dot" ? dot(a, b) : join_gamma(a, b);
      result["operands"] = {a.gamma.coeffs(), b.gamma.coeffs()};
    }
    if (op == "cone") result["operands"] = {a.gamma.coeffs()};
    result["output"] = r.gamma.coeffs();
    text = r.gamma.to_string();
  }
  if (o.json) {
    out << envelope("gring " + op, o, std::move(result)).dump(2) << '\n';
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

int cmd_arrangement(const std::string& path, const std::string& method, const Options& o, std::ostream& out) {
  PolyFile file = read_poly_file(path);
  Arrangement arrangement = Arrangement::from_text(file.n_vars - 1, file.polys);
  const bool want_oracle = method != "algebraic";
  const bool want_algebraic = method != "oracle";

  std::optional<IntPoly> full, oracle, algebraic;
  if (want_oracle) {
    full = char_poly(arrangement);
    oracle = reduced_char_poly(*full);
  }
  if (want_algebraic) algebraic = charpoly_algebraic(arrangement, config_of(o));
  const IntPoly& reduced = oracle ? *oracle : *algebraic;
  const ChiPoly chi = chi_from_charpoly(reduced, arrangement.n());
  const bool both = oracle && algebraic;
  const bool match = both && *oracle == *algebraic;

  if (o.json) {
    Json r;
    r["n"] = arrangement.n();
    r["hyperplanes"] = arrangement.size();
    if (full) r["P"] = full->coeffs();
    if (oracle) r["P_reduced_oracle"] = oracle->coeffs();
    if (algebraic) r["P_reduced_algebraic"] = algebraic->coeffs();
    r["chi_complement"] = chi.coeffs();
    if (both) r["match"] = match;
    out << envelope("arrangement", o, std::move(r)).dump(2) << '\n';
    return kExitOk;
  }
  out << "hyperplanes: " << arrangement.size() << " in P^" << arrangement.n() << '\n';
  if (want_algebraic) print_params(out, o);
  if (full) out << "P = " << full->to_string() << '\n';
  if (oracle) out << "P_reduced (oracle) = " << oracle->to_string() << '\n';
  if (algebraic) out << "P_reduced (algebraic) = " << algebraic->to_string() << '\n';
  out << "chi_complement = " << chi.poly().to_string() << '\n';
  if (both) {
    if (match) out << "P_reduced = " << reduced.to_string() << '\n';
    out << "match: " << (match ? "true" : "false") << '\n';
  } else {
    out << "P_reduced = " << reduced.to_string() << '\n';
  }
  return kExitOk;
}

void add_pipeline_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  cmd->add_option("--prime", o.prime, "prime modulus for the generic computations")->capture_default_str();
  cmd->add_option("--trials", o.trials, "independent trials that must agree")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--saturation", o.saturation, "base-locus removal: generators | generic")
      ->capture_default_str()
      ->check(CLI::IsMember({"generators", "generic"}));
  cmd->add_option("--threads", o.threads, "worker threads for inclusion-exclusion subsets")->capture_default_str();
  cmd->add_option("--max-reductions", o.max_reductions, "S-pair reduction budget per Groebner basis")
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar degrees, CSM class polynomials and sectional Euler characteristics"};
  app.require_subcommand(1);
  Options o;
  std::string path, poly_text, method = "both", op;
  std::vector<std::string> operands;

  auto* polar = app.add_subcommand("polar", "polar degrees of the subscheme defined by an ideal file");
  polar->add_option("file", path, "ideal file")->required();
  add_pipeline_flags(polar, o);
  auto* csm = app.add_subcommand("csm", "CSM class, chi polynomial and sectional Euler characteristics");
  csm->add_option("file", path, "ideal file")->required();
  add_pipeline_flags(csm, o);
  auto* inv = app.add_subcommand("involute", "apply the gamma/chi involution to a polynomial in t");
  inv->add_option("poly", poly_text, "polynomial in t, e.g. 4-2t+2t^2")->required();
  auto* gr = app.add_subcommand("gring", "Grothendieck-ring operations on gamma polynomials");
  gr->add_option("op", op, "star | dot | join | cone | sigma")->required();
  gr->add_option("operands", operands, "polynomials in t or class names P<n>, A<n>, T, pt")->required();
  auto* arr = app.add_subcommand("arrangement", "characteristic polynomial of a hyperplane arrangement");
  arr->add_option("file", path, "arrangement file")->required();
  arr->add_option("--method", method, "oracle | algebraic | both")
      ->capture_default_str()
      ->check(CLI::IsMember({"oracle", "algebraic", "both"}));
  add_pipeline_flags(arr, o);
  for (auto* sub : {polar, csm, inv, gr, arr}) sub->add_flag("--json", o.json, "machine-readable output");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*polar) return cmd_polar(path, o, out);
    if (*csm) return cmd_csm(path, o, out);
    if (*inv) return cmd_involute(poly_text, o, out);
    if (*gr) return cmd_gring(op, operands, o, out);
    if (*arr) return cmd_arrangement(path, method, o, out);
  } catch (const ResourceLimitExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const TrialDisagreement& e) {
    err << "genericity check failed: " << e.what() << '\n';
    return kExitTrialDisagreement;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InexactDivision& e) {
    err << "error: " << e.what() << '\n';
    return kExitPipelineFailure;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPipelineFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polarcsm
