// xell: command-line front end.  JSON report on stdout, summary on stderr.
// Exit 0 all checks pass, 1 a check failed, 2 usage or constraint error.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xell/suite.hpp"

using namespace xell;

namespace {

struct SystemArgs {
  std::string system;
  int ell = 0;
  std::string g;
  std::string h;
};

struct Globals {
  int jobs = 0;
  unsigned rng_seed = 0;
  std::string inject;
};

void add_system_flags(CLI::App* cmd, SystemArgs& a) {
  cmd->add_option("--system", a.system, "radial | trig-dpt | hyp-dpt")->required();
  cmd->add_option("--ell", a.ell, "deformation degree ell >= 0")->required();
  cmd->add_option("--g", a.g, "parameter g (rational or decimal)")->required();
  cmd->add_option("--h", a.h, "parameter h, required for the DPT systems");
}

SystemKind kind_of(const SystemArgs& a) { return parse_system_kind(a.system); }

Params params_of(const SystemArgs& a) {
  const SystemKind kind = kind_of(a);
  Params p{Rational::parse(a.g), Rational(0)};
  if (kind != SystemKind::RadialOscillator) {
    if (a.h.empty()) throw std::invalid_argument("--h is required for " + a.system);
    p.h = Rational::parse(a.h);
  } else if (!a.h.empty()) {
    p.h = Rational::parse(a.h);
  }
  if (a.ell < 0) throw std::invalid_argument("--ell must be >= 0");
  check_admissible(kind, p, a.ell);
  return p;
}

void record_system(Report& r, const SystemArgs& a) {
  r.inputs["system"] = a.system;
  r.inputs["ell"] = std::to_string(a.ell);
  r.inputs["g"] = a.g;
  if (!a.h.empty()) r.inputs["h"] = a.h;
}

std::string rational_pair(const Rational& q) { return q.numerator_str() + "/" + q.denominator_str(); }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Grid parse_grid(const std::string& text) {
  std::stringstream ss(text);
  std::string lo, hi, n;
  if (!std::getline(ss, lo, ',') || !std::getline(ss, hi, ',') || !std::getline(ss, n) || n.find(',') != std::string::npos)
    throw std::invalid_argument("--grid expects lo,hi,N");
  Grid g{Rational::parse(lo).to_double(), Rational::parse(hi).to_double(), std::stoi(n)};
  if (g.points < 3) throw std::invalid_argument("--grid needs N >= 3");
  return g;
}

enum class Output { Json, Csv };

struct Outcome {
  Report report;
  Output output = Output::Json;
  std::string csv;
};

int emit(Outcome& o, const Globals& globals, std::chrono::steady_clock::time_point t0) {
  auto& r = o.report;
  if (!globals.inject.empty()) {
    inject_failure(r.checks, globals.inject);
    r.inputs["inject-failure"] = globals.inject;
  }
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (o.output == Output::Csv && !r.error) std::cout << o.csv;
  else std::cout << to_json(r).dump(2) << "\n";
  std::cerr << summary(r);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Exceptional Laguerre and Jacobi polynomials: construction and verification"};
  // --h is a parameter flag, so help gets only the long form
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--jobs", globals.jobs, "worker threads (default: XELL_JOBS, else logical cores)");
  app.add_option("--rng-seed", globals.rng_seed, "seed for parameter sampling")->default_val(0);
  app.add_option("--inject-failure", globals.inject, "mark checks whose name contains this text as failed");

  Outcome outcome;
  std::function<void()> action;

  // verify ...
  auto* verify = app.add_subcommand("verify", "run identity and numerical checks");
  verify->require_subcommand(1);

  auto* lemmas = verify->add_subcommand("lemmas", "Laguerre and Jacobi lemmas A-D");
  int lemma_n = 0;
  std::string lemma_family = "all";
  lemmas->add_option("--n-max", lemma_n, "largest degree")->required();
  lemmas->add_option("--family", lemma_family, "laguerre | jacobi | all")
      ->check(CLI::IsMember({"laguerre", "jacobi", "all"}));
  lemmas->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "verify lemmas";
      o.report.inputs = {{"n-max", std::to_string(lemma_n)}, {"family", lemma_family}};
      if (lemma_n < 0) throw std::invalid_argument("--n-max must be >= 0");
      o.report.checks = run_tasks(lemma_tasks(lemma_n, parse_family(lemma_family)), globals.jobs);
    };
  });

  auto* cubic = verify->add_subcommand("cubic", "cubic identities in three classical polynomials");
  std::string cubic_family, cubic_mode = "symbolic";
  int cubic_ell = 0;
  cubic->add_option("--family", cubic_family, "laguerre | jacobi")
      ->required()
      ->check(CLI::IsMember({"laguerre", "jacobi"}));
  cubic->add_option("--ell-max", cubic_ell, "largest ell")->required();
  cubic->add_option("--mode", cubic_mode, "symbolic | grid | both")
      ->check(CLI::IsMember({"symbolic", "grid", "both"}));
  cubic->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "verify cubic";
      o.report.inputs = {{"family", cubic_family}, {"ell-max", std::to_string(cubic_ell)}, {"mode", cubic_mode}};
      if (cubic_ell < 0) throw std::invalid_argument("--ell-max must be >= 0");
      o.report.checks = run_tasks(cubic_tasks(parse_family(cubic_family), cubic_ell, parse_cubic_mode(cubic_mode)),
                                  globals.jobs);
    };
  });

  auto* shape = verify->add_subcommand("shape", "shape invariance of the deformed system");
  SystemArgs shape_args;
  int seeds = 0;
  add_system_flags(shape, shape_args);
  shape->add_option("--seeds", seeds, "additional admissible parameter draws");
  shape->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "verify shape";
      record_system(o.report, shape_args);
      o.report.inputs["seeds"] = std::to_string(seeds);
      o.report.inputs["rng-seed"] = std::to_string(globals.rng_seed);
      const Params p = params_of(shape_args);
      if (shape_args.ell < 1) throw std::invalid_argument("--ell must be >= 1 for shape invariance");
      if (seeds < 0) throw std::invalid_argument("--seeds must be >= 0");
      o.report.checks = run_tasks(shape_tasks(kind_of(shape_args), shape_args.ell, p, seeds, globals.rng_seed),
                                  globals.jobs);
    };
  });

  auto* ortho = verify->add_subcommand("orthogonality", "Gram matrix of P_{ell,n} under psi_ell^2");
  SystemArgs ortho_args;
  int ortho_n = 0;
  add_system_flags(ortho, ortho_args);
  ortho->add_option("--n-max", ortho_n, "largest n")->required();
  ortho->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "verify orthogonality";
      record_system(o.report, ortho_args);
      o.report.inputs["n-max"] = std::to_string(ortho_n);
      const Params p = params_of(ortho_args);
      if (ortho_n < 0) throw std::invalid_argument("--n-max must be >= 0");
      if (kind_of(ortho_args) == SystemKind::HypDPT &&
          !(Rational(ortho_n) < (p.h - p.g) / Rational(2) - Rational(ortho_args.ell)))
        throw ConstraintViolation("n-max: need n < (h-g)/2 - ell");
      o.report.checks = run_tasks(orthogonality_tasks(kind_of(ortho_args), ortho_args.ell, ortho_n, p), globals.jobs);
    };
  });

  auto* zeros = verify->add_subcommand("zeros", "root counts of P_{ell,n} in the domain");
  SystemArgs zero_args;
  int zero_n = 0;
  add_system_flags(zeros, zero_args);
  zeros->add_option("--n-max", zero_n, "largest n")->required();
  zeros->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "verify zeros";
      record_system(o.report, zero_args);
      o.report.inputs["n-max"] = std::to_string(zero_n);
      const Params p = params_of(zero_args);
      if (zero_n < 0) throw std::invalid_argument("--n-max must be >= 0");
      if (kind_of(zero_args) == SystemKind::HypDPT &&
          !(Rational(zero_n) < (p.h - p.g) / Rational(2) - Rational(zero_args.ell)))
        throw ConstraintViolation("n-max: need n < (h-g)/2 - ell");
      o.report.checks = run_tasks(zero_tasks(kind_of(zero_args), zero_args.ell, zero_n, p), globals.jobs);
    };
  });

  auto* ode = verify->add_subcommand("ode", "second-order ODE satisfied by xi_ell");
  SystemArgs ode_args;
  add_system_flags(ode, ode_args);
  ode->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "verify ode";
      record_system(o.report, ode_args);
      const Params p = params_of(ode_args);
      o.report.checks = run_tasks(ode_tasks(kind_of(ode_args), ode_args.ell, p), globals.jobs);
    };
  });

  auto* limit = verify->add_subcommand("limit", "Jacobi to Laguerre limit, first-order convergence");
  int limit_n = 0;
  std::string limit_alpha, limit_beta;
  limit->add_option("--n", limit_n, "degree")->required();
  limit->add_option("--alpha", limit_alpha, "alpha (rational or decimal)")->required();
  limit->add_option("--beta-start", limit_beta, "first beta; the second is twice this")->required();
  limit->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "verify limit";
      o.report.inputs = {{"n", std::to_string(limit_n)}, {"alpha", limit_alpha}, {"beta-start", limit_beta}};
      const Rational alpha = Rational::parse(limit_alpha);
      const Rational beta = Rational::parse(limit_beta);
      if (limit_n < 0) throw std::invalid_argument("--n must be >= 0");
      if (beta.sign() <= 0) throw std::invalid_argument("--beta-start must be positive");
      o.report.checks = run_tasks(limit_tasks(limit_n, alpha, beta.to_double()), globals.jobs);
    };
  });

  auto* all = verify->add_subcommand("all", "acceptance suite");
  bool quick = false;
  all->add_flag("--quick", quick, "smaller ranges");
  all->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "verify all";
      o.report.inputs = {{"quick", quick ? "true" : "false"}};
      o.report.data["criteria"] = nlohmann::json::array();
      for (const auto& c : acceptance_criteria()) {
        const auto r = run_criterion(c, quick, globals.jobs);
        o.report.checks.insert(o.report.checks.end(), r.checks.begin(), r.checks.end());
        o.report.data["criteria"].push_back(
            {{"id", c.id}, {"title", c.title}, {"passed", r.passed()}, {"seconds", r.seconds}});
        std::fprintf(stderr, "[%s] criterion %2d: %s (%.2f s)\n", r.passed() ? "PASS" : "FAIL", c.id,
                     c.title.c_str(), r.seconds);
      }
      std::stable_sort(o.report.checks.begin(), o.report.checks.end(),
                       [](const Check& a, const Check& b) { return a.name < b.name; });
    };
  });

  // poly xell
  auto* poly = app.add_subcommand("poly", "emit polynomials");
  poly->require_subcommand(1);
  auto* xell_cmd = poly->add_subcommand("xell", "coefficients of P_{ell,n} in eta");
  SystemArgs poly_args;
  int poly_n = 0;
  std::string poly_format = "json";
  add_system_flags(xell_cmd, poly_args);
  xell_cmd->add_option("--n", poly_n, "index n")->required();
  xell_cmd->add_option("--format", poly_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  xell_cmd->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "poly xell";
      record_system(o.report, poly_args);
      o.report.inputs["n"] = std::to_string(poly_n);
      o.report.inputs["format"] = poly_format;
      const Params p = params_of(poly_args);
      if (poly_n < 0) throw std::invalid_argument("--n must be >= 0");
      const SystemKind kind = kind_of(poly_args);
      const auto xp = xell_poly(kind, poly_args.ell, poly_n, p);
      const auto deg = xp.poly.degree();
      o.report.checks.push_back(predicate_check("degree", deg && static_cast<int>(*deg) == poly_args.ell + poly_n,
                                                "degree " + std::to_string(deg ? static_cast<long>(*deg) : -1L)));
      nlohmann::json coeffs = nlohmann::json::array();
      std::ostringstream csv;
      csv << "power,numerator,denominator\n";
      for (std::size_t k = 0; k < xp.poly.coeffs().size(); ++k) {
        const auto& q = xp.poly.coeffs()[k];
        coeffs.push_back(rational_pair(q));
        csv << k << "," << q.numerator_str() << "," << q.denominator_str() << "\n";
      }
      o.report.data = {{"variable", "eta"}, {"degree", deg ? static_cast<long>(*deg) : -1L}, {"coefficients", coeffs}};
      if (poly_format == "csv") {
        o.output = Output::Csv;
        o.csv = csv.str();
      }
    };
  });

  // potential
  auto* potential = app.add_subcommand("potential", "plot-ready samples of U_ell(x) as CSV");
  SystemArgs pot_args;
  int samples = 0;
  add_system_flags(potential, pot_args);
  potential->add_option("--samples", samples, "number of x samples")->required();
  potential->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "potential";
      record_system(o.report, pot_args);
      o.report.inputs["samples"] = std::to_string(samples);
      const Params p = params_of(pot_args);
      if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
      const SystemKind kind = kind_of(pot_args);
      std::ostringstream csv;
      csv << "x,U\n";
      bool finite = true;
      for (double x : interior_samples(kind, samples)) {
        const double u = deformed_potential(kind, pot_args.ell, p, x);
        finite = finite && std::isfinite(u);
        csv << num(x) << "," << num(u) << "\n";
      }
      o.report.checks.push_back(predicate_check("finite", finite, std::to_string(samples) + " samples"));
      o.output = Output::Csv;
      o.csv = csv.str();
    };
  });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "finite-difference levels against closed forms");
  SystemArgs spec_args;
  int levels = 0;
  std::string grid_text;
  add_system_flags(spectrum, spec_args);
  spectrum->add_option("--levels", levels, "number of lowest levels")->required();
  spectrum->add_option("--grid", grid_text, "lo,hi,N (N points including the Dirichlet ends)");
  spectrum->callback([&] {
    action = [&] {
      Outcome& o = outcome;
      o.report.command = "spectrum";
      record_system(o.report, spec_args);
      o.report.inputs["levels"] = std::to_string(levels);
      const Params p = params_of(spec_args);
      const SystemKind kind = kind_of(spec_args);
      if (levels < 1) throw std::invalid_argument("--levels must be >= 1");
      const Grid grid = grid_text.empty() ? default_grid(kind) : parse_grid(grid_text);
      o.report.inputs["grid"] = num(grid.x_lo) + "," + num(grid.x_hi) + "," + std::to_string(grid.points);
      const auto s = spectrum_report(kind, spec_args.ell, p, levels, grid);
      o.report.checks = s.checks;
      nlohmann::json table = nlohmann::json::array();
      for (const auto& row : s.rows)
        table.push_back({{"n", row.n},
                         {"numeric", row.numeric},
                         {"half_spacing", row.refined},
                         {"closed_form", row.closed_form},
                         {"abs_error", std::fabs(row.numeric - row.closed_form)}});
      o.report.data = {{"levels", table}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (globals.jobs <= 0) globals.jobs = default_jobs();

  try {
    action();
  } catch (const std::exception& e) {
    // inputs that violate a stated constraint; the partial report names them
    outcome.report.error = e.what();
  }
  if (outcome.report.command.empty()) {
    std::vector<std::string> words;
    for (const auto* sub = app.get_subcommands().front(); sub != nullptr;
         sub = sub->get_subcommands().empty() ? nullptr : sub->get_subcommands().front())
      words.push_back(sub->get_name());
    for (const auto& w : words) outcome.report.command += (outcome.report.command.empty() ? "" : " ") + w;
  }
  return emit(outcome, globals, t0);
}
