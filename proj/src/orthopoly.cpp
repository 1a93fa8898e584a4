#include "rieszlab/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace rieszlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> jacobi_eval_all(double a, double b, int n_max, double x) {
  std::vector<double> p(static_cast<size_t>(n_max) + 1);
  p[0] = 1.0;
  if (n_max == 0) return p;
  p[1] = 0.5 * ((a + b + 2.0) * x + (a - b));
  for (int n = 2; n <= n_max; ++n) {
    const double s = 2.0 * n + a + b;
    const double c1 = 2.0 * n * (n + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
    p[n] = (c2 * p[n - 1] - c3 * p[n - 2]) / c1;
  }
  return p;
}

std::vector<double> gegenbauer_eval_all(double l, int n_max, double x) {
  std::vector<double> c(static_cast<size_t>(n_max) + 1);
  c[0] = 1.0;
  if (n_max == 0) return c;
  c[1] = 2.0 * l * x;
  for (int n = 2; n <= n_max; ++n) {
    c[n] = (2.0 * (n + l - 1.0) * x * c[n - 1] - (n + 2.0 * l - 2.0) * c[n - 2]) / n;
  }
  return c;
}

std::vector<double> hermite_eval_all(int n_max, double x) {
  std::vector<double> h(static_cast<size_t>(n_max) + 1);
  h[0] = 1.0;
  if (n_max == 0) return h;
  h[1] = 2.0 * x;
  for (int n = 2; n <= n_max; ++n)
    h[n] = 2.0 * x * h[n - 1] - 2.0 * (n - 1.0) * h[n - 2];
  return h;
}

std::vector<double> laguerre_eval_all(double a, int n_max, double x) {
  std::vector<double> lg(static_cast<size_t>(n_max) + 1);
  lg[0] = 1.0;
  if (n_max == 0) return lg;
  lg[1] = 1.0 + a - x;
  for (int n = 2; n <= n_max; ++n) {
    lg[n] = ((2.0 * n - 1.0 + a - x) * lg[n - 1] - (n - 1.0 + a) * lg[n - 2]) / n;
  }
  return lg;
}

}  // namespace

bool FamilySpec::valid() const {
  switch (kind) {
    case FamilyKind::Jacobi:
      return alpha > -1.0 && beta > -1.0;
    case FamilyKind::Gegenbauer:
      return lambda > -0.5;
    case FamilyKind::Hermite:
      return true;
    case FamilyKind::Laguerre:
      return alpha > -1.0;
  }
  return false;
}

SupportInterval FamilySpec::support() const {
  switch (kind) {
    case FamilyKind::Jacobi:
    case FamilyKind::Gegenbauer:
      return {-1.0, 1.0};
    case FamilyKind::Hermite:
      return {-kInf, kInf};
    case FamilyKind::Laguerre:
      return {0.0, kInf};
  }
  return {0.0, 0.0};
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::Jacobi:
      return "jacobi";
    case FamilyKind::Gegenbauer:
      return "gegenbauer";
    case FamilyKind::Hermite:
      return "hermite";
    case FamilyKind::Laguerre:
      return "laguerre";
  }
  return "?";
}

void require_valid(const FamilySpec& family) {
  if (!family.valid())
    throw std::invalid_argument("invalid family parameters for " + family.name());
}

std::vector<double> eval_all(const FamilySpec& family, int n_max, double x) {
  require_valid(family);
  if (n_max < 0) throw std::invalid_argument("eval_all: n_max must be >= 0");
  if (!family.support().contains(x))
    throw std::domain_error("eval_all: x outside the support interval");
  switch (family.kind) {
    case FamilyKind::Jacobi:
      return jacobi_eval_all(family.alpha, family.beta, n_max, x);
    case FamilyKind::Gegenbauer:
      return gegenbauer_eval_all(family.lambda, n_max, x);
    case FamilyKind::Hermite:
      return hermite_eval_all(n_max, x);
    case FamilyKind::Laguerre:
      return laguerre_eval_all(family.alpha, n_max, x);
  }
  throw std::logic_error("eval_all: unreachable");
}

double eval_one(const FamilySpec& family, int n, double x) {
  return eval_all(family, n, x)[static_cast<size_t>(n)];
}

LogValue norm_sq_log(const FamilySpec& family, int n) {
  require_valid(family);
  if (n < 0) throw std::invalid_argument("norm_sq: n must be >= 0");
  if (n == 0) return LogValue::one();  // phi_0 = 1 against a probability measure
  const double dn = static_cast<double>(n);
  switch (family.kind) {
    case FamilyKind::Jacobi: {
      const double a = family.alpha, b = family.beta;
      const double lg = log_gamma(a + b + 2.0) + log_gamma(dn + a + 1.0) +
                        log_gamma(dn + b + 1.0) - std::log(2.0 * dn + a + b + 1.0) -
                        log_gamma(a + 1.0) - log_gamma(b + 1.0) - log_gamma(dn + 1.0) -
                        log_gamma(dn + a + b + 1.0);
      return {lg, 1};
    }
    case FamilyKind::Gegenbauer: {
      const double l = family.lambda;
      if (l == 0.0) return LogValue::zero();  // C_n^0 vanishes for n >= 1
      // lambda Gamma(n+2l) / (Gamma(2l) (n+l) n!)
      LogValue v = LogValue::from(l) * gamma_signed(dn + 2.0 * l) /
                   (gamma_signed(2.0 * l) * LogValue::from(dn + l) *
                    gamma_signed(dn + 1.0));
      return v;
    }
    case FamilyKind::Hermite:
      return {dn * std::log(2.0) + log_gamma(dn + 1.0), 1};
    case FamilyKind::Laguerre: {
      const double a = family.alpha;
      return {log_gamma(dn + a + 1.0) - log_gamma(a + 1.0) - log_gamma(dn + 1.0), 1};
    }
  }
  throw std::logic_error("norm_sq: unreachable");
}

double norm_sq(const FamilySpec& family, int n) {
  return norm_sq_log(family, n).value();
}

double jacobi_derivative(int n, double a, double b, double x) {
  if (n < 0) throw std::invalid_argument("jacobi_derivative: n must be >= 0");
  if (n == 0) return 0.0;
  return 0.5 * (n + a + b + 1.0) *
         eval_one(FamilySpec::jacobi(a + 1.0, b + 1.0), n - 1, x);
}

double rodrigues_residual(int n, double a, double b, double x) {
  if (n < 1) throw std::invalid_argument("rodrigues_residual: n must be >= 1");
  if (!(x > -1.0 && x < 1.0))
    throw std::domain_error("rodrigues_residual: x must lie in (-1,1)");
  const double wa = std::pow(1.0 - x, a);
  const double wb = std::pow(1.0 + x, b);
  const double p_inner = eval_one(FamilySpec::jacobi(a + 1.0, b + 1.0), n - 1, x);
  // Product rule on (1-x)^(a+1)(1+x)^(b+1) P_{n-1}^(a+1,b+1); the inner
  // derivative lowers degree once more via the same identity.
  const double dp_inner =
      (n >= 2) ? 0.5 * (n + a + b + 2.0) *
                     eval_one(FamilySpec::jacobi(a + 2.0, b + 2.0), n - 2, x)
               : 0.0;
  const double lhs =
      wa * wb *
      ((-(a + 1.0) * (1.0 + x) + (b + 1.0) * (1.0 - x)) * p_inner +
       (1.0 - x) * (1.0 + x) * dp_inner);
  const double rhs =
      -2.0 * n * wa * wb * eval_one(FamilySpec::jacobi(a, b), n, x);
  return lhs - rhs;
}

std::vector<double> gegenbauer_scaled_all(int n_max, double l, double t, double s) {
  if (n_max < 0) throw std::invalid_argument("gegenbauer_scaled_all: n_max must be >= 0");
  std::vector<double> q(static_cast<size_t>(n_max) + 1);
  q[0] = 1.0;
  if (n_max == 0) return q;
  q[1] = 2.0 * l * t / s;
  const double ts = t / s;
  const double s2 = s * s;
  for (int k = 2; k <= n_max; ++k) {
    q[k] = (2.0 * (k + l - 1.0) * ts * q[k - 1] -
            (k + 2.0 * l - 2.0) / s2 * q[k - 2]) /
           k;
  }
  return q;
}

double gegenbauer_scaled(int n, double l, double t, double s) {
  return gegenbauer_scaled_all(n, l, t, s)[static_cast<size_t>(n)];
}

double scaled_gegenbauer(int n, double lambda, double x) {
  if (!(lambda > 0.0))
    throw std::domain_error("scaled_gegenbauer: lambda must be positive");
  if (!(x * x <= lambda))
    throw std::domain_error("scaled_gegenbauer: x/sqrt(lambda) outside [-1,1]");
  if (n < 0) throw std::invalid_argument("scaled_gegenbauer: n must be >= 0");
  // Recurrence run in the Gaussian variable; at k = 1 the coefficient
  // 2 lambda / lambda is exactly 2, so q_1 = 2x without rounding.
  double qm2 = 0.0, qm1 = 1.0, q = 1.0;
  for (int k = 1; k <= n; ++k) {
    q = k == 1 ? 2.0 * x
               : (2.0 * (k + lambda - 1.0) / lambda * x * qm1 -
                  (k + 2.0 * lambda - 2.0) / lambda * qm2) /
                     k;
    qm2 = qm1;
    qm1 = q;
  }
  return q;
}

double shifted_jacobi(int n, double a, double b, double t) {
  if (!(t >= 0.0 && t <= b))
    throw std::domain_error("shifted_jacobi: t must lie in [0, beta]");
  return eval_one(FamilySpec::jacobi(a, b), n, 1.0 - 2.0 * t / b);
}

LogValue gegenbauer_conversion(int n, double l) {
  if (l == 0.0) return LogValue::zero();
  // Gamma(l+1/2) Gamma(n+2l) / (Gamma(2l) Gamma(n+l+1/2))
  return gamma_signed(l + 0.5) * gamma_signed(n + 2.0 * l) /
         (gamma_signed(2.0 * l) * gamma_signed(n + l + 0.5));
}

}  // namespace rieszlab
