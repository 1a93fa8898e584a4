#include "rieszlab/transference.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace rieszlab {

namespace {

constexpr double kMonotoneSlack = 1e-13;

double rel_of(double abs_err, double reference) {
  const double d = std::abs(reference);
  return d > 0.0 ? abs_err / d : abs_err;
}

// Marks row i failing when its error is not below the previous row's error
// plus slack. Row 0 always passes.
void enforce_decreasing(std::vector<ReportRow>& rows) {
  for (size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].abs_err < rows[i - 1].abs_err + kMonotoneSlack))
      rows[i].pass = false;
  }
}

FamilySpec scaled_family(Direction direction, double param, double alpha) {
  if (direction == Direction::Gauss) return FamilySpec::gegenbauer(param);
  return FamilySpec::jacobi(alpha, param);
}

FamilySpec limit_family(Direction direction, double alpha) {
  if (direction == Direction::Gauss) return FamilySpec::hermite();
  return FamilySpec::laguerre(alpha);
}

void require_scaling_param(Direction direction, double param) {
  if (!(param > 0.0))
    throw std::invalid_argument("scaling parameter must be positive");
  (void)direction;
}

}  // namespace

double ScaledFunction::operator()(double x) const {
  if (x < -1.0 || x > 1.0) return 0.0;
  if (direction == Direction::Gauss) return base(std::sqrt(parameter) * x);
  return base(parameter * (1.0 - x) / 2.0);
}

bool ConvergenceReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

ReportRow make_row(double param, int k_or_n, double value, double reference,
                   bool pass) {
  ReportRow r;
  r.param = param;
  r.k_or_n = k_or_n;
  r.value = value;
  r.reference = reference;
  r.abs_err = std::abs(value - reference);
  r.rel_err = rel_of(r.abs_err, reference);
  r.pass = pass;
  return r;
}

ConvergenceReport norm_relation(const Evaluator& f, const std::string& f_id,
                                Direction direction, double p,
                                const std::vector<double>& params, int quad_order,
                                double alpha) {
  if (!(p >= 1.0)) throw std::invalid_argument("norm_relation: p must be >= 1");
  ConvergenceReport rep;
  rep.experiment = "norm_relation:" + f_id;
  rep.family = direction == Direction::Gauss ? "gegenbauer" : "jacobi";

  const auto limit_rule = build_rule(limit_family(direction, alpha), quad_order);
  const double reference = lp_norm(f, limit_rule, p);

  for (double param : params) {
    require_scaling_param(direction, param);
    const auto rule = build_rule(scaled_family(direction, param, alpha), quad_order);
    const ScaledFunction g{f, direction, param};
    const double value = lp_norm([&g](double x) { return g(x); }, rule, p);
    rep.rows.push_back(make_row(param, 0, value, reference, true));
  }
  if (p == 2.0) enforce_decreasing(rep.rows);
  return rep;
}

ConvergenceReport inner_product_relation(const Evaluator& f,
                                         const std::string& f_id,
                                         Direction direction, int k,
                                         const std::vector<double>& params,
                                         int quad_order, double alpha) {
  if (k < 0) throw std::invalid_argument("inner_product_relation: k must be >= 0");
  ConvergenceReport rep;
  rep.experiment = "inner_product_relation:" + f_id;
  rep.family = direction == Direction::Gauss ? "gegenbauer" : "jacobi";

  const auto limit_rule = build_rule(limit_family(direction, alpha), quad_order);
  double reference;
  if (direction == Direction::Gauss) {
    const double kfact = std::tgamma(static_cast<double>(k) + 1.0);
    reference = inner_product(
        f, [k, kfact](double y) { return eval_one(FamilySpec::hermite(), k, y) / kfact; },
        limit_rule);
  } else {
    reference = inner_product(
        f,
        [k, alpha](double t) { return eval_one(FamilySpec::laguerre(alpha), k, t); },
        limit_rule);
  }

  for (double param : params) {
    require_scaling_param(direction, param);
    const auto rule = build_rule(scaled_family(direction, param, alpha), quad_order);
    const ScaledFunction g{f, direction, param};
    double value;
    if (direction == Direction::Gauss) {
      const double root = std::sqrt(param);
      value = inner_product(
          [&g](double x) { return g(x); },
          [k, param, root](double x) { return gegenbauer_scaled(k, param, x, root); },
          rule);
    } else {
      const FamilySpec jac = FamilySpec::jacobi(alpha, param);
      value = inner_product([&g](double x) { return g(x); },
                            [&jac, k](double x) { return eval_one(jac, k, x); },
                            rule);
    }
    rep.rows.push_back(make_row(param, k, value, reference, true));
  }
  enforce_decreasing(rep.rows);
  return rep;
}

double asymptotic_error(Direction target, int n, double param, double lo,
                        double hi, int points, double alpha) {
  if (points < 2) throw std::invalid_argument("asymptotic_error: points must be >= 2");
  require_scaling_param(target, param);
  if (target == Direction::Gauss && !(std::sqrt(param) > std::max(std::abs(lo), std::abs(hi))))
    throw std::invalid_argument("asymptotic_error: need sqrt(lambda) > |grid|");
  if (target == Direction::Laguerre && !(lo >= 0.0 && hi <= param))
    throw std::invalid_argument("asymptotic_error: grid must sit inside [0, beta]");

  const double kfact = std::tgamma(static_cast<double>(n) + 1.0);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    double err;
    if (target == Direction::Gauss) {
      err = std::abs(scaled_gegenbauer(n, param, x) -
                     eval_one(FamilySpec::hermite(), n, x) / kfact);
    } else {
      err = std::abs(shifted_jacobi(n, alpha, param, x) -
                     eval_one(FamilySpec::laguerre(alpha), n, x));
    }
    worst = std::max(worst, err);
  }
  return worst;
}

DesigResult desig_check(const Evaluator& f, double lambda, int degree_cap,
                        int quad_order) {
  if (!(lambda > 0.0)) throw std::invalid_argument("desig_check: lambda must be > 0");
  const FamilySpec geg = FamilySpec::gegenbauer(lambda);
  const auto rule = build_rule(geg, quad_order);
  const ScaledFunction g{f, Direction::Gauss, lambda};
  const double root = std::sqrt(lambda);

  DesigResult out;
  double product = 1.0;  // (2 + 1/lambda) ... (2 + (k-1)/lambda)
  double kfact = 1.0;
  for (int k = 1; k <= degree_cap; ++k) {
    kfact *= k;
    const double s = inner_product(
        [&g](double x) { return g(x); },
        [k, lambda, root](double x) { return gegenbauer_scaled(k, lambda, x, root); },
        rule);
    out.lhs += s * s * (k / lambda + 1.0) * kfact /
               (2.0 * std::sqrt(M_PI) * product);
    product *= 2.0 + k / lambda;
  }

  const Expansion e = expand([&g](double x) { return g(x); }, geg, degree_cap, rule);
  out.rhs = riesz_l2_norm_sq(e, NormMode::PaperFormula);
  return out;
}

namespace {

// Coefficient of the (n-1)-th scaled image basis function in the re-weighted
// Riesz series of f_lambda: <f_lambda, lambda^{-n/2} C_n^lambda> times the
// image factor times lambda^{(2n-1)/2}, assembled in log domain.
std::vector<double> gauss_image_coeffs(const Evaluator& f, double lambda,
                                       int n_max, const QuadratureRule& rule) {
  const double root = std::sqrt(lambda);
  std::vector<double> s(static_cast<size_t>(n_max) + 1, 0.0);
  const ScaledFunction g{f, Direction::Gauss, lambda};
  for (int i = 0; i < rule.order(); ++i) {
    const double fx = g(rule.nodes[i]);
    if (fx == 0.0) continue;
    const auto basis = gegenbauer_scaled_all(n_max, lambda, rule.nodes[i], root);
    for (int n = 0; n <= n_max; ++n) s[n] += rule.weights[i] * fx * basis[n];
  }

  std::vector<double> coeffs(static_cast<size_t>(n_max) + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) {
    const double dn = n;
    // d_n = 4 Gamma(2l)(n+l) n! / Gamma(n+2l+1)
    const LogValue d = LogValue::from(4.0) * gamma_signed(2.0 * lambda) *
                       LogValue::from(dn + lambda) * gamma_signed(dn + 1.0) /
                       gamma_signed(dn + 2.0 * lambda + 1.0);
    const LogValue amp =
        LogValue{(dn - 0.5) * std::log(lambda) +
                     0.5 * std::log((dn + 2.0 * lambda) / dn) - std::log(2.0),
                 1} *
        d;
    coeffs[n] = (LogValue::from(s[n]) * amp).value();
  }
  return coeffs;
}

// Envelope carrying the Gegenbauer measure and the sqrt(1-x^2) image weight
// over to the Gaussian side: (1 - y^2/lambda)^(lambda/2 + 1/4) e^(y^2/2).
double gauss_envelope(double y, double lambda) {
  return std::exp((0.5 * lambda + 0.25) * std::log1p(-y * y / lambda) +
                  0.5 * y * y);
}

double gauss_series_eval(const std::vector<double>& coeffs, int from, int to,
                         double y, double lambda) {
  const double root = std::sqrt(lambda);
  const auto g = gegenbauer_scaled_all(to - 1, lambda + 1.0, y / root, root);
  double acc = 0.0;
  for (int n = from; n <= to; ++n) acc += coeffs[n] * g[n - 1];
  return gauss_envelope(y, lambda) * acc;
}

// Laguerre-side analogue: u_n = <f_beta, P_n^(a,b)> times 2x the Jacobi image
// factor; the shifted Jacobi values at 1 - 2y/beta stay O(1) on (0, k].
std::vector<double> laguerre_image_coeffs(const Evaluator& f, double alpha,
                                          double beta, int n_max,
                                          const QuadratureRule& rule) {
  const FamilySpec jac = FamilySpec::jacobi(alpha, beta);
  std::vector<double> u(static_cast<size_t>(n_max) + 1, 0.0);
  const ScaledFunction g{f, Direction::Laguerre, beta};
  for (int i = 0; i < rule.order(); ++i) {
    const double fx = g(rule.nodes[i]);
    if (fx == 0.0) continue;
    const auto basis = eval_all(jac, n_max, rule.nodes[i]);
    for (int n = 0; n <= n_max; ++n) u[n] += rule.weights[i] * fx * basis[n];
  }

  std::vector<double> coeffs(static_cast<size_t>(n_max) + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) {
    const double dn = n;
    const LogValue h = norm_sq_log(jac, n);
    const LogValue b =
        LogValue{0.5 * std::log((dn + alpha + beta + 1.0) / dn), 1} / h;
    coeffs[n] = -(LogValue::from(u[n]) * b).value();
  }
  return coeffs;
}

double laguerre_envelope(double y, double beta) {
  if (y <= 0.0) return 0.0;
  return std::sqrt(y / beta) *
         std::exp(0.5 * (beta + 1.0) * std::log1p(-y / beta) + 0.5 * y);
}

double laguerre_series_eval(const std::vector<double>& coeffs, int from, int to,
                            double y, double alpha, double beta) {
  const auto p =
      eval_all(FamilySpec::jacobi(alpha + 1.0, beta + 1.0), to - 1, 1.0 - 2.0 * y / beta);
  double acc = 0.0;
  for (int n = from; n <= to; ++n) acc += coeffs[n] * p[n - 1];
  return laguerre_envelope(y, beta) * acc;
}

}  // namespace

double tail_energy(Direction direction, const Evaluator& phi, double param,
                   int k_radius, int tail_start, int quad_order,
                   int series_cap, double alpha) {
  require_scaling_param(direction, param);
  if (tail_start < 1) throw std::invalid_argument("tail_energy: N must be >= 1");
  if (series_cap <= tail_start)
    throw std::invalid_argument("tail_energy: series cap must exceed N");
  if (direction == Direction::Gauss && !(std::sqrt(param) > k_radius))
    throw std::invalid_argument("tail_energy: need sqrt(lambda) > k");
  if (direction == Direction::Laguerre && !(param > k_radius))
    throw std::invalid_argument("tail_energy: need beta > k");

  const auto rule = build_rule(scaled_family(direction, param, alpha), quad_order);
  if (direction == Direction::Gauss) {
    const auto coeffs = gauss_image_coeffs(phi, param, series_cap, rule);
    // integral over [-k, k] against e^(-y^2)/sqrt(pi) dy via a mapped
    // Legendre rule; the normalized Jacobi(0,0) weights carry du/2.
    const auto leg = build_rule(FamilySpec::jacobi(0.0, 0.0), quad_order);
    double acc = 0.0;
    for (int i = 0; i < leg.order(); ++i) {
      const double y = k_radius * leg.nodes[i];
      const double h = gauss_series_eval(coeffs, tail_start + 1, series_cap, y, param);
      acc += leg.weights[i] * h * h * std::exp(-y * y);
    }
    return 2.0 * k_radius * acc / std::sqrt(M_PI);
  }

  const auto coeffs = laguerre_image_coeffs(phi, alpha, param, series_cap, rule);
  // integral over (0, k) against y^a e^(-y)/Gamma(a+1) dy, mapped onto the
  // normalized Jacobi(0, a) rule by y = k(1+u)/2.
  const auto map_rule = build_rule(FamilySpec::jacobi(0.0, alpha), quad_order);
  const double mass = std::exp((alpha + 1.0) * std::log(static_cast<double>(k_radius)) -
                               std::log(alpha + 1.0) - log_gamma(alpha + 1.0));
  double acc = 0.0;
  for (int i = 0; i < map_rule.order(); ++i) {
    const double y = k_radius * (1.0 + map_rule.nodes[i]) / 2.0;
    const double h =
        laguerre_series_eval(coeffs, tail_start + 1, series_cap, y, alpha, param);
    acc += map_rule.weights[i] * h * h * std::exp(-y);
  }
  return mass * acc;
}

ConvergenceReport riesz_limit_identity(const Evaluator& phi,
                                       const std::string& f_id,
                                       Direction direction,
                                       const std::vector<double>& params,
                                       int degree_cap, int quad_order,
                                       double k_radius, int grid_points,
                                       double alpha) {
  if (grid_points < 2)
    throw std::invalid_argument("riesz_limit_identity: need >= 2 grid points");
  ConvergenceReport rep;
  rep.experiment = "riesz_limit_identity:" + f_id;
  rep.family = direction == Direction::Gauss ? "gegenbauer" : "jacobi";

  const FamilySpec lim = limit_family(direction, alpha);
  const auto lim_rule = build_rule(lim, quad_order);
  const RieszImage limit_image =
      riesz_apply(expand(phi, lim, degree_cap, lim_rule));

  for (double param : params) {
    require_scaling_param(direction, param);
    if (direction == Direction::Gauss && !(std::sqrt(param) > k_radius))
      throw std::invalid_argument("riesz_limit_identity: need sqrt(lambda) > k");
    if (direction == Direction::Laguerre && !(param > k_radius))
      throw std::invalid_argument("riesz_limit_identity: need beta > k");
    const auto rule = build_rule(scaled_family(direction, param, alpha), quad_order);

    double worst = 0.0;
    if (direction == Direction::Gauss) {
      const auto coeffs = gauss_image_coeffs(phi, param, degree_cap, rule);
      for (int i = 0; i < grid_points; ++i) {
        const double y = -k_radius + 2.0 * k_radius * i / (grid_points - 1);
        const double finite =
            gauss_series_eval(coeffs, 1, degree_cap, y, param);
        worst = std::max(worst, std::abs(finite - limit_image.evaluate(y)));
      }
    } else {
      const auto coeffs = laguerre_image_coeffs(phi, alpha, param, degree_cap, rule);
      for (int i = 1; i <= grid_points; ++i) {
        const double y = k_radius * i / grid_points;
        const double finite =
            laguerre_series_eval(coeffs, 1, degree_cap, y, alpha, param);
        worst = std::max(worst, std::abs(finite - limit_image.evaluate(y)));
      }
    }
    rep.rows.push_back(make_row(param, degree_cap, worst, 0.0, true));
  }
  enforce_decreasing(rep.rows);
  return rep;
}

ConvergenceReport operator_norm_sweep(const std::vector<FamilySpec>& families,
                                      double p, int degree_cap, int trials,
                                      std::uint64_t seed, int quad_order,
                                      bool mean_zero) {
  if (!(p > 1.0)) throw std::invalid_argument("operator_norm_sweep: p must be > 1");
  if (degree_cap < 1 || trials < 1)
    throw std::invalid_argument("operator_norm_sweep: need degree >= 1, trials >= 1");
  ConvergenceReport rep;
  rep.experiment = "operator_norm_sweep";
  rep.family = families.size() == 1 ? families.front().name() : "mixed";

  for (size_t idx = 0; idx < families.size(); ++idx) {
    const FamilySpec& fam = families[idx];
    require_valid(fam);
    const auto rule = build_rule(fam, quad_order);
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (idx + 1));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
      Expansion e;
      e.family = fam;
      e.raw_coeffs.assign(static_cast<size_t>(degree_cap) + 1, 0.0);
      for (int k = 0; k <= degree_cap; ++k) {
        const double a = unit(rng);
        if (k == 0 && mean_zero) continue;
        e.raw_coeffs[k] = a * norm_sq(fam, k);
      }
      const double denom =
          lp_norm([&e](double x) { return e.evaluate(x); }, rule, p);
      if (!(denom > 0.0)) continue;
      const RieszImage img = riesz_apply(e);
      const double numer =
          lp_norm([&img](double x) { return img.evaluate(x); }, rule, p);
      best = std::max(best, numer / denom);
    }

    double param = 0.0;
    switch (fam.kind) {
      case FamilyKind::Jacobi:
      case FamilyKind::Laguerre:
        param = fam.alpha;
        break;
      case FamilyKind::Gegenbauer:
        param = fam.lambda;
        break;
      case FamilyKind::Hermite:
        param = 0.0;
        break;
    }
    const bool pass =
        p == 2.0 ? best <= 1.0 + 1e-9 : std::isfinite(best) && best < 100.0;
    rep.rows.push_back(make_row(param, degree_cap, best, 1.0, pass));
  }
  return rep;
}

}  // namespace rieszlab
