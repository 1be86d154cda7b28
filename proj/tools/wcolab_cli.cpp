#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wcolab/axioms.hpp"
#include "wcolab/characterization.hpp"
#include "wcolab/errors.hpp"
#include "wcolab/operators.hpp"
#include "wcolab/parse.hpp"
#include "wcolab/report_json.hpp"

using namespace wcolab;

namespace {

constexpr int kExitUsage = 64;

struct Options {
  std::string space = "bloch:1";
  std::string fn, F, phi;
  int N = 16;
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> ntheta, nradial;
  std::optional<double> rmax;
  std::string json_path, csv_path;
};

GridConfig grid_from(const Options& o) {
  GridConfig cfg;
  if (o.rmax) cfg = cfg.with_r_max(*o.rmax);
  if (const char* preset = std::getenv("WCOLAB_GRID_PRESET")) {
    std::string p = preset;
    if (p == "fast")
      cfg = cfg.scaled(0.5);
    else if (p == "fine")
      cfg = cfg.scaled(2.0);
    else if (p != "default" && !p.empty())
      throw ParameterError("WCOLAB_GRID_PRESET must be fast, default or fine");
  }
  if (o.ntheta) cfg.n_theta = *o.ntheta;
  if (o.nradial) cfg.n_radial = *o.nradial;
  cfg.validate();
  return cfg;
}

Expr expression(const std::string& text, const char* flag, const GridConfig& cfg) {
  if (text.empty()) throw ParameterError(std::string("missing ") + flag);
  Expr e = parse_expression(text);
  validate_expression(e, cfg);
  return e;
}

void emit(const Options& o, const Json& j) {
  std::string text = dump(j);
  std::cout << text;
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) throw ParameterError("cannot write " + o.json_path);
    out << text;
  }
}

int run(const std::string& command, const Options& o) {
  const GridConfig cfg = grid_from(o);
  Json inputs;
  inputs["grid"] = to_json(cfg);

  if (command == "norm" || command == "seminorm") {
    SpaceSpec space = SpaceSpec::parse(o.space);
    Expr f = expression(o.fn, "--fn", cfg);
    inputs["fn"] = f.to_string();
    Json result;
    if (command == "norm")
      result = to_json(norm(space, f, cfg));
    else
      result = Json{{"seminorm", seminorm(space, f, cfg)}};
    emit(o, envelope(command, space.to_string(), inputs, result));
    return 0;
  }

  if (command == "axioms") {
    SpaceSpec space = SpaceSpec::parse(o.space);
    inputs["seed"] = o.seed;
    auto reports = run_all(space, cfg, o.seed);
    emit(o, envelope(command, space.to_string(), inputs, to_json(reports)));
    for (const AxiomReport& r : reports)
      if (!r.passed && !r.unsupported) return 1;
    return 0;
  }

  Expr F = expression(o.F, "--F", cfg);
  Expr phi = expression(o.phi, "--phi", cfg);
  inputs["F"] = F.to_string();
  inputs["phi"] = phi.to_string();
  WcoSymbols w = make_wco(F, phi, cfg);

  if (command == "check-invertible") {
    SpaceSpec space = SpaceSpec::parse(o.space);
    InvertibilityReport rep = check_invertible(w, space, cfg);
    emit(o, envelope(command, space.to_string(), inputs, to_json(rep)));
    switch (rep.verdict) {
      case Verdict::Invertible:
        return 0;
      case Verdict::NotInvertible:
        return 1;
      case Verdict::Inconclusive:
        return 2;
    }
  }

  if (command == "check-isometry") {
    SpaceSpec space = SpaceSpec::parse(o.space);
    IsometryReport rep = check_isometry(w, space, cfg);
    emit(o, envelope(command, space.to_string(), inputs, to_json(rep)));
    return rep.surjective_isometry ? 0 : 1;
  }

  if (command == "invert") {
    AutomorphismFit fit = detect_automorphism(w.phi, cfg);
    Json result;
    result["automorphism"] = to_json(fit);
    if (!fit.found) {
      result["inverse_symbols"] = nullptr;
      emit(o, envelope(command, "", inputs, result));
      return 1;
    }
    auto [G, psi] = inverse_symbols(w, fit, cfg);
    WcoSymbols inverse{G, psi};
    result["inverse_symbols"] = Json{{"G", G.to_string()}, {"psi", psi.to_string()}};
    result["roundtrip_residual"] = roundtrip_residual(w, inverse, default_defect_family(o.seed), cfg);
    emit(o, envelope(command, "", inputs, result));
    return 0;
  }

  // section
  inputs["N"] = o.N;
  FiniteSection s = finite_section(w, o.N, cfg);
  Json result{{"dimension", s.dimension}, {"radius", s.radius}, {"ill_conditioned", s.ill_conditioned}};
  try {
    result["condition_number"] = condition_number(s);
  } catch (const SingularMatrix&) {
    result["condition_number"] = nullptr;
  }
  if (!o.csv_path.empty()) {
    std::ofstream out(o.csv_path);
    if (!out) throw ParameterError("cannot write " + o.csv_path);
    out << section_csv(s);
    result["csv"] = o.csv_path;
  } else {
    Json rows = Json::array();
    for (int j = 0; j < s.dimension; ++j) {
      Json row = Json::array();
      for (int k = 0; k < s.dimension; ++k) row.push_back(to_json(s.entries(j, k)));
      rows.push_back(std::move(row));
    }
    result["entries"] = std::move(rows);
  }
  emit(o, envelope(command, "", inputs, result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for weighted composition operators on spaces of analytic functions"};
  app.require_subcommand(1);
  Options o;

  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed of the random test family");
    sub->add_option("--ntheta", o.ntheta, "angular nodes (power of two >= 64)");
    sub->add_option("--nradial", o.nradial, "radial Gauss-Legendre nodes");
    sub->add_option("--rmax", o.rmax, "radius of the closed grid disk");
    sub->add_option("--json", o.json_path, "also write the JSON document here");
  };
  auto add_space = [&](CLI::App* sub) { sub->add_option("--space", o.space, "space, e.g. bloch:1, hardy:2, b1"); };
  auto add_symbols = [&](CLI::App* sub) {
    sub->add_option("--F", o.F, "multiplication symbol")->required();
    sub->add_option("--phi", o.phi, "composition symbol")->required();
  };

  for (const char* name : {"norm", "seminorm"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " of --fn in --space");
    add_space(sub);
    sub->add_option("--fn", o.fn, "function in the expression language")->required();
    add_grid(sub);
  }
  for (auto [name, what] : {std::pair{"check-invertible", "is W_{F,phi} invertible on --space"},
                             std::pair{"check-isometry", "is W_{F,phi} a surjective isometry of --space"}}) {
    auto* sub = app.add_subcommand(name, what);
    add_space(sub);
    add_symbols(sub);
    add_grid(sub);
  }
  {
    auto* sub = app.add_subcommand("invert", "inverse symbols (G, psi) of W_{F,phi}");
    add_symbols(sub);
    add_grid(sub);
  }
  {
    auto* sub = app.add_subcommand("axioms", "run the axiom suite on --space");
    add_space(sub);
    add_grid(sub);
  }
  {
    auto* sub = app.add_subcommand("section", "leading N x N block of the coefficient matrix");
    add_symbols(sub);
    sub->add_option("--N", o.N, "section dimension")->check(CLI::PositiveNumber);
    sub->add_option("--csv", o.csv_path, "write the matrix as CSV");
    add_grid(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
