#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "rieszlab/report.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/transference.hpp"

using namespace rieszlab;

namespace {

struct RunConfig {
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.5;
  std::vector<double> lambda_list = {100.0, 1000.0, 10000.0};
  std::vector<double> beta_list = {100.0, 1000.0, 10000.0};
  int degree = 12;
  int quad_order = 0;  // 0: derive as 4*degree
  double p = 2.0;
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 20240901;
  std::string target = "hermite";
  int n = 2;
  int trials = 8;
  int k_radius = 3;

  int effective_quad() const { return quad_order > 0 ? quad_order : 4 * degree; }
};

ConvergenceReport ortho_family(const FamilySpec& fam, int degree, int order) {
  ConvergenceReport rep;
  rep.experiment = "orthogonality";
  rep.family = fam.name();
  const auto rule = build_rule(fam, order);
  const auto gram = gram_matrix(fam, degree, rule);
  const int dim = degree + 1;
  for (int n = 0; n <= degree; ++n) {
    const double href = norm_sq(fam, n);
    const double diag = gram[n * dim + n];
    double offdiag = 0.0;
    for (int m = 0; m <= degree; ++m)
      if (m != n) offdiag = std::max(offdiag, std::abs(gram[n * dim + m]));
    const double scale = href > 0.0 ? href : 1.0;
    const bool pass =
        std::abs(diag - href) <= 1e-10 * scale && offdiag <= 1e-10 * scale;
    double param = fam.kind == FamilyKind::Gegenbauer ? fam.lambda : fam.alpha;
    rep.rows.push_back(make_row(param, n, diag, href, pass));
  }
  return rep;
}

std::vector<FamilySpec> default_families(const RunConfig& cfg) {
  return {FamilySpec::jacobi(cfg.alpha, cfg.beta),
          FamilySpec::gegenbauer(cfg.lambda), FamilySpec::hermite(),
          FamilySpec::laguerre(cfg.alpha)};
}

std::vector<ConvergenceReport> run_ortho(const RunConfig& cfg) {
  std::vector<ConvergenceReport> out;
  for (const auto& fam : default_families(cfg))
    out.push_back(ortho_family(fam, cfg.degree, cfg.effective_quad()));
  return out;
}

std::vector<ConvergenceReport> run_riesz(const RunConfig& cfg) {
  // Mean-zero random polynomials: the transform must preserve the L2 norm,
  // and the quadrature image norm must match the coefficient formula.
  std::vector<ConvergenceReport> out;
  const int order = cfg.effective_quad();
  for (const auto& fam : default_families(cfg)) {
    ConvergenceReport rep = operator_norm_sweep({fam}, 2.0, cfg.degree,
                                                cfg.trials, cfg.seed, order,
                                                /*mean_zero=*/true);
    rep.experiment = "riesz_isometry";
    rep.family = fam.name();
    out.push_back(rep);
  }
  return out;
}

std::vector<ConvergenceReport> run_transfer_gauss(const RunConfig& cfg) {
  const int order = cfg.effective_quad();
  std::vector<ConvergenceReport> out;
  out.push_back(norm_relation([](double y) { return y; }, "y", Direction::Gauss,
                              cfg.p, cfg.lambda_list, order));
  out.push_back(norm_relation([](double y) { return y * y; }, "y^2",
                              Direction::Gauss, cfg.p, cfg.lambda_list, order));
  out.push_back(norm_relation([](double y) { return std::exp(-0.25 * y * y); },
                              "gauss_bump", Direction::Gauss, cfg.p,
                              cfg.lambda_list, order));
  out.push_back(inner_product_relation([](double y) { return 2.0 * y; }, "H1",
                                       Direction::Gauss, 1, cfg.lambda_list,
                                       order));
  out.push_back(inner_product_relation(
      [](double y) { return 4.0 * y * y - 2.0; }, "H2", Direction::Gauss, 2,
      cfg.lambda_list, order));
  return out;
}

std::vector<ConvergenceReport> run_transfer_laguerre(const RunConfig& cfg) {
  const int order = cfg.effective_quad();
  const double a = cfg.alpha;
  std::vector<ConvergenceReport> out;
  out.push_back(norm_relation([a](double t) { return 1.0 + a - t; }, "L1",
                              Direction::Laguerre, cfg.p, cfg.beta_list, order,
                              a));
  out.push_back(norm_relation([](double t) { return t; }, "t",
                              Direction::Laguerre, cfg.p, cfg.beta_list, order,
                              a));
  out.push_back(inner_product_relation([](double) { return 1.0; }, "one",
                                       Direction::Laguerre, 0, cfg.beta_list,
                                       order, a));
  out.push_back(inner_product_relation([a](double t) { return 1.0 + a - t; },
                                       "L1", Direction::Laguerre, 1,
                                       cfg.beta_list, order, a));
  return out;
}

std::vector<ConvergenceReport> run_asymptotics(const RunConfig& cfg) {
  ConvergenceReport rep;
  rep.experiment = "asymptotic_error:" + cfg.target + ":n=" + std::to_string(cfg.n);
  std::vector<double> errs;
  if (cfg.target == "hermite") {
    rep.family = "gegenbauer";
    for (double l : cfg.lambda_list) {
      const double e = asymptotic_error(Direction::Gauss, cfg.n, l, -1.0, 1.0, 201);
      bool pass = cfg.n == 1 ? e == 0.0 : true;
      rep.rows.push_back(make_row(l, cfg.n, e, 0.0, pass));
    }
  } else {
    rep.family = "jacobi";
    for (double b : cfg.beta_list) {
      const double e =
          asymptotic_error(Direction::Laguerre, cfg.n, b, 0.0, 2.0, 201, cfg.alpha);
      rep.rows.push_back(make_row(b, cfg.n, e, 0.0, true));
    }
  }
  if (cfg.n >= 2) {
    for (size_t i = 1; i < rep.rows.size(); ++i)
      if (!(rep.rows[i].value < rep.rows[i - 1].value + 1e-13))
        rep.rows[i].pass = false;
  }
  return {rep};
}

std::vector<ConvergenceReport> run_tail_bounds(const RunConfig& cfg) {
  const int order = std::max(cfg.effective_quad(), 160);
  const int cap = 48;
  std::vector<ConvergenceReport> out;

  ConvergenceReport gauss;
  gauss.experiment = "tail_energy:gauss_bump";
  gauss.family = "gegenbauer";
  for (double l : cfg.lambda_list) {
    for (int N : {4, 8, 16, 32}) {
      const double v = tail_energy(Direction::Gauss,
                                   [](double y) { return std::exp(-0.25 * y * y); },
                                   l, cfg.k_radius, N, order, cap);
      gauss.rows.push_back(make_row(l, N, v, 0.0, v >= 0.0));
    }
  }
  out.push_back(gauss);

  ConvergenceReport lag;
  lag.experiment = "tail_energy:exp_decay";
  lag.family = "jacobi";
  for (double b : cfg.beta_list) {
    for (int N : {4, 8, 16, 32}) {
      const double v = tail_energy(Direction::Laguerre,
                                   [](double t) { return std::exp(-0.5 * t); }, b,
                                   cfg.k_radius, N, order, cap, cfg.alpha);
      lag.rows.push_back(make_row(b, N, v, 0.0, v >= 0.0));
    }
  }
  out.push_back(lag);
  return out;
}

std::vector<ConvergenceReport> run_sweep(const RunConfig& cfg) {
  std::vector<FamilySpec> fams;
  fams.push_back(FamilySpec::jacobi(cfg.alpha, cfg.beta));
  for (double l : cfg.lambda_list) fams.push_back(FamilySpec::gegenbauer(l));
  fams.push_back(FamilySpec::hermite());
  fams.push_back(FamilySpec::laguerre(cfg.alpha));
  return {operator_norm_sweep(fams, cfg.p, cfg.degree, cfg.trials, cfg.seed,
                              cfg.effective_quad())};
}

const char* anchor_for(const std::string& experiment) {
  if (experiment.rfind("norm_relation", 0) == 0) return "norm relations";
  if (experiment.rfind("inner_product_relation", 0) == 0)
    return "inner product relations";
  if (experiment.rfind("asymptotic_error", 0) == 0)
    return "polynomial asymptotics";
  if (experiment.rfind("tail_energy", 0) == 0) return "O(1/N) tail bound";
  if (experiment == "orthogonality") return "orthogonality and norm formulas";
  if (experiment == "riesz_isometry") return "L2 isometry of the transform";
  if (experiment == "operator_norm_sweep") return "Lp boundedness sweep";
  return "identity suite";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz transference experiment runner"};
  app.require_subcommand(1);

  RunConfig cfg;
  for (const char* name :
       {"ortho-check", "riesz-check", "transfer-gauss", "transfer-laguerre",
        "asymptotics", "tail-bounds", "sweep"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--alpha", cfg.alpha);
    sub->add_option("--beta", cfg.beta);
    sub->add_option("--lambda", cfg.lambda);
    sub->add_option("--lambda-list", cfg.lambda_list)->delimiter(',');
    sub->add_option("--beta-list", cfg.beta_list)->delimiter(',');
    sub->add_option("--degree", cfg.degree)->check(CLI::PositiveNumber);
    sub->add_option("--quad-order", cfg.quad_order)->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p)->check(CLI::Range(1.0, 64.0));
    sub->add_option("--output", cfg.output);
    sub->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed);
    sub->add_option("--target", cfg.target)
        ->check(CLI::IsMember({"hermite", "laguerre"}));
    sub->add_option("--n", cfg.n)->check(CLI::PositiveNumber);
    sub->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
    sub->add_option("--k-radius", cfg.k_radius)->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

#ifdef _OPENMP
  if (const char* t = std::getenv("RIESZ_THREADS")) {
    const int nt = std::atoi(t);
    if (nt > 0) omp_set_num_threads(nt);
  }
#endif

  const std::string command = app.get_subcommands().front()->get_name();
  std::vector<ConvergenceReport> reports;
  try {
    if (command == "ortho-check") reports = run_ortho(cfg);
    else if (command == "riesz-check") reports = run_riesz(cfg);
    else if (command == "transfer-gauss") reports = run_transfer_gauss(cfg);
    else if (command == "transfer-laguerre") reports = run_transfer_laguerre(cfg);
    else if (command == "asymptotics") reports = run_asymptotics(cfg);
    else if (command == "tail-bounds") reports = run_tail_bounds(cfg);
    else if (command == "sweep") reports = run_sweep(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  bool all_pass = true;
  for (const auto& rep : reports) {
    std::printf("%-44s [%s] %s\n", rep.experiment.c_str(), rep.family.c_str(),
                anchor_for(rep.experiment));
    for (const auto& r : rep.rows) {
      if (r.pass) continue;
      all_pass = false;
      std::printf("  FAIL param=%s k_or_n=%d value=%s reference=%s abs_err=%s\n",
                  format_double(r.param).c_str(), r.k_or_n,
                  format_double(r.value).c_str(),
                  format_double(r.reference).c_str(),
                  format_double(r.abs_err).c_str());
    }
  }

  std::string path = cfg.output;
  if (path.empty()) path = "riesz_report." + cfg.format;
  try {
    if (cfg.format == "json") {
      std::map<std::string, std::string> meta = {
          {"command", command},
          {"alpha", format_double(cfg.alpha)},
          {"beta", format_double(cfg.beta)},
          {"degree", std::to_string(cfg.degree)},
          {"quad_order", std::to_string(cfg.effective_quad())},
          {"p", format_double(cfg.p)},
          {"seed", std::to_string(cfg.seed)},
          {"version", "1.0.0"}};
      write_file(path, to_json(reports, meta));
    } else {
      write_file(path, to_csv(reports));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  std::printf("%s: %s -> %s\n", command.c_str(),
              all_pass ? "all rows pass" : "FAILURES", path.c_str());
  return all_pass ? 0 : 1;
}
