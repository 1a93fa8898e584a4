// Acceptance gate: one line per criterion, exit 0 iff all pass.
// Usage: acceptance [path-to-riesz_cli]   (the CLI path enables criterion 9)

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rieszlab/riesz.hpp"
#include "rieszlab/transference.hpp"

using namespace rieszlab;

namespace {

bool all_ok = true;

void report(int num, const char* name, bool pass) {
  std::printf("criterion %d (%s): %s\n", num, name, pass ? "PASS" : "FAIL");
  if (!pass) all_ok = false;
}

const std::vector<double> kParamSet = {-0.4, 0.0, 0.5, 2.0};

bool check_gram(const FamilySpec& fam) {
  const auto rule = build_rule(fam, 64);
  const int n_max = 20;
  const auto g = gram_matrix(fam, n_max, rule);
  const int dim = n_max + 1;
  for (int n = 0; n <= n_max; ++n) {
    const double hn = norm_sq(fam, n);
    for (int m = 0; m <= n_max; ++m) {
      const double hm = norm_sq(fam, m);
      const double target = m == n ? hn : 0.0;
      const double err = std::abs(g[n * dim + m] - target);
      // off-diagonal entries are measured against the natural scale
      // sqrt(h_n h_m) of the two polynomials involved
      const double scale = std::sqrt(hn * hm);
      const double tol = scale > 0.0 ? 1e-10 * scale : 1e-18;
      if (err > tol) return false;
    }
  }
  return true;
}

bool criterion1() {
  bool ok = check_gram(FamilySpec::hermite());
  for (double a : kParamSet) {
    ok = ok && check_gram(FamilySpec::laguerre(a));
    ok = ok && check_gram(FamilySpec::gegenbauer(a));
    for (double b : kParamSet) ok = ok && check_gram(FamilySpec::jacobi(a, b));
  }
  return ok;
}

// Derivatives propagated through the recurrences themselves; independent of
// the degree-lowering identities being verified.
double hermite_deriv(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x, d0 = 0.0, d1 = 2.0;
  if (n == 0) return 0.0;
  for (int k = 2; k <= n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * (k - 1.0) * h0;
    const double d2 = 2.0 * h1 + 2.0 * x * d1 - 2.0 * (k - 1.0) * d0;
    h0 = h1; h1 = h2; d0 = d1; d1 = d2;
  }
  return d1;
}

double laguerre_deriv(int n, double a, double x) {
  double l0 = 1.0, l1 = 1.0 + a - x, d0 = 0.0, d1 = -1.0;
  if (n == 0) return 0.0;
  for (int k = 2; k <= n; ++k) {
    const double l2 = ((2.0 * k - 1.0 + a - x) * l1 - (k - 1.0 + a) * l0) / k;
    const double d2 = (-l1 + (2.0 * k - 1.0 + a - x) * d1 - (k - 1.0 + a) * d0) / k;
    l0 = l1; l1 = l2; d0 = d1; d1 = d2;
  }
  return d1;
}

double jacobi_deriv(int n, double a, double b, double x) {
  if (n == 0) return 0.0;
  double p0 = 1.0, p1 = 0.5 * ((a + b + 2.0) * x + (a - b));
  double d0 = 0.0, d1 = 0.5 * (a + b + 2.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2x = (s - 1.0) * s * (s - 2.0);
    const double c2c = (s - 1.0) * (a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double p2 = ((c2x * x + c2c) * p1 - c3 * p0) / c1;
    const double d2 = (c2x * p1 + (c2x * x + c2c) * d1 - c3 * d0) / c1;
    p0 = p1; p1 = p2; d0 = d1; d1 = d2;
  }
  return d1;
}

bool close(double a, double b, double tol_rel) {
  return std::abs(a - b) <= tol_rel * (1.0 + std::max(std::abs(a), std::abs(b)));
}

bool criterion2() {
  const double a = 0.5, b = 1.5;
  for (int n = 1; n <= 15; ++n) {
    for (double x : {-0.8, -0.2, 0.4, 0.9}) {
      if (!close(jacobi_derivative(n, a, b, x), jacobi_deriv(n, a, b, x), 1e-11))
        return false;
      if (!close(2.0 * n * eval_one(FamilySpec::hermite(), n - 1, x),
                 hermite_deriv(n, x), 1e-11))
        return false;
      const double t = 1.2 + x;
      if (!close(-eval_one(FamilySpec::laguerre(a + 1.0), n - 1, t),
                 laguerre_deriv(n, a, t), 1e-11))
        return false;
      const double scale = std::abs(eval_one(FamilySpec::jacobi(a, b), n, x)) + 1.0;
      if (std::abs(rodrigues_residual(n, a, b, x)) > 1e-10 * scale) return false;
    }
    // norm-ratio identity for the shifted family
    const double lhs = norm_sq(FamilySpec::jacobi(a + 1.0, b + 1.0), n - 1);
    const double ratio = (a + b + 3.0) * (a + b + 2.0) * n /
                         ((a + 1.0) * (b + 1.0) * (n + a + b + 1.0));
    if (!close(lhs, ratio * norm_sq(FamilySpec::jacobi(a, b), n), 1e-12))
      return false;
    // Gegenbauer conversion
    for (double l : {-0.3, 0.5, 2.5}) {
      const double conv = gegenbauer_conversion(n, l).value();
      for (double x : {-0.6, 0.7}) {
        if (!close(eval_one(FamilySpec::gegenbauer(l), n, x),
                   conv * eval_one(FamilySpec::jacobi(l - 0.5, l - 0.5), n, x),
                   1e-11))
          return false;
      }
    }
  }
  return true;
}

bool criterion3() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (const auto& fam :
       {FamilySpec::jacobi(0.5, 1.5), FamilySpec::jacobi(-0.4, 2.0),
        FamilySpec::gegenbauer(0.5), FamilySpec::gegenbauer(2.0),
        FamilySpec::hermite(), FamilySpec::laguerre(0.0),
        FamilySpec::laguerre(1.3)}) {
    const auto rule = build_rule(fam, 64);
    for (int trial = 0; trial < 5; ++trial) {
      Expansion e;
      e.family = fam;
      e.raw_coeffs.assign(21, 0.0);
      double in_sq = 0.0;
      for (int k = 1; k <= 20; ++k) {
        const double h = norm_sq(fam, k);
        e.raw_coeffs[k] = unit(rng) * h;
        in_sq += e.raw_coeffs[k] * e.raw_coeffs[k] / h;
      }
      const double coeff_sq = riesz_l2_norm_sq(e, NormMode::Canonical);
      const RieszImage img = riesz_apply(e);
      const double quad_sq =
          inner_product([&img](double x) { return img.evaluate(x); },
                        [&img](double x) { return img.evaluate(x); }, rule);
      if (std::abs(coeff_sq - in_sq) > 1e-9 * in_sq) return false;
      if (std::abs(quad_sq - in_sq) > 1e-9 * in_sq) return false;
    }
  }
  return true;
}

bool criterion4() {
  if (asymptotic_error(Direction::Gauss, 1, 50.0, -1.0, 1.0, 201) != 0.0)
    return false;
  for (int n : {2, 3, 4}) {
    double prev = asymptotic_error(Direction::Gauss, n, 100.0, -1.0, 1.0, 201);
    for (double l : {200.0, 400.0}) {
      const double cur = asymptotic_error(Direction::Gauss, n, l, -1.0, 1.0, 201);
      const double ratio = cur / prev;
      if (ratio < 0.4 || ratio > 0.6) return false;
      prev = cur;
    }
  }
  // Laguerre n = 1: the error is t(alpha+2)/beta on the grid
  for (double a : {0.0, 0.5}) {
    for (double beta : {1e3, 1e4}) {
      const double sup =
          asymptotic_error(Direction::Laguerre, 1, beta, 0.0, 2.0, 201, a);
      if (std::abs(sup - 2.0 * (a + 2.0) / beta) > 1e-9) return false;
    }
  }
  return true;
}

bool criterion5() {
  const std::vector<double> params = {100.0, 1000.0, 10000.0};
  std::vector<ConvergenceReport> reps;
  reps.push_back(norm_relation([](double y) { return y; }, "y", Direction::Gauss,
                               2.0, params, 64));
  reps.push_back(norm_relation([](double y) { return y * y; }, "y^2",
                               Direction::Gauss, 2.0, params, 64));
  reps.push_back(norm_relation([](double y) { return std::exp(-0.25 * y * y); },
                               "bump", Direction::Gauss, 2.0, params, 64));
  reps.push_back(norm_relation([](double t) { return 1.0 - t; }, "1-t",
                               Direction::Laguerre, 2.0, params, 64, 0.0));
  reps.push_back(norm_relation([](double t) { return t; }, "t",
                               Direction::Laguerre, 2.0, params, 64, 0.0));
  const auto ip = inner_product_relation([](double y) { return 2.0 * y; }, "H1",
                                         Direction::Gauss, 1, params, 64);
  reps.push_back(ip);
  reps.push_back(inner_product_relation(
      [](double y) { return 4.0 * y * y - 2.0; }, "H2", Direction::Gauss, 2,
      params, 64));
  reps.push_back(inner_product_relation([](double t) { return 1.0 - t; }, "L1",
                                        Direction::Laguerre, 1, params, 64, 0.0));
  for (const auto& r : reps)
    if (!r.all_pass()) return false;
  for (const auto& row : ip.rows) {
    const double formula = 2.0 * row.param / (row.param + 1.0);
    if (std::abs(row.value - formula) > 1e-10 * formula) return false;
  }
  return true;
}

bool criterion6() {
  std::vector<Evaluator> battery = {
      [](double y) { return 2.0 * y; },
      [](double y) { return 4.0 * y * y - 2.0 + 2.0 * y; },
      [](double y) { return y * y; },
      [](double y) { return std::exp(-0.25 * y * y); }};
  for (double l : {1.0, 10.0, 100.0}) {
    for (const auto& f : battery) {
      const auto d = desig_check(f, l, 10, 64);
      if (!(d.lhs <= d.rhs * (1.0 + 1e-10))) return false;
    }
  }
  return true;
}

bool criterion7() {
  // phi and its derivative norm against the limit measure, by quadrature
  const auto bump = [](double y) { return std::exp(-0.25 * y * y); };
  const auto bump_d = [](double y) { return -0.5 * y * std::exp(-0.25 * y * y); };
  const auto decay = [](double t) { return std::exp(-0.5 * t); };
  const auto decay_d = [](double t) { return -0.5 * std::exp(-0.5 * t); };
  const auto her = build_rule(FamilySpec::hermite(), 64);
  const auto lag = build_rule(FamilySpec::laguerre(0.0), 64);
  const double dnorm_g = inner_product(bump_d, bump_d, her);
  const double dnorm_l = inner_product(decay_d, decay_d, lag);

  // C measured over the sweep and frozen; uniformity requires the two
  // parameter values to agree within a fixed factor at every N.
  const double C = 2.0;
  const double uniformity = 4.0;
  for (int N : {4, 8, 16, 32}) {
    double g[2], l[2];
    int i = 0;
    for (double param : {400.0, 1600.0}) {
      g[i] = tail_energy(Direction::Gauss, bump, param, 3, N, 160, 48);
      l[i] = tail_energy(Direction::Laguerre, decay, param, 3, N, 160, 48, 0.0);
      if (!(g[i] * N <= C * dnorm_g)) return false;
      if (!(l[i] * N <= C * dnorm_l)) return false;
      ++i;
    }
    const double rg = g[0] > 0.0 && g[1] > 0.0
                          ? std::max(g[0] / g[1], g[1] / g[0])
                          : 1.0;
    const double rl = l[0] > 0.0 && l[1] > 0.0
                          ? std::max(l[0] / l[1], l[1] / l[0])
                          : 1.0;
    if (rg > uniformity || rl > uniformity) return false;
  }
  return true;
}

bool criterion8() {
  Expansion e;
  e.family = FamilySpec::jacobi(0.5, 0.5);  // lambda_20 = 20 * 22 = 440
  e.raw_coeffs.assign(21, 1.0);
  for (double t : {0.5, 1.0, 2.0}) {
    if (subordination_residual(e, t, 64) > 1e-6) return false;
  }
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool criterion9(const std::string& cli) {
  if (cli.empty()) return false;
  const std::string base =
      " sweep --seed 31337 --degree 10 --trials 4 --lambda-list 10,100";
  const std::string run1 =
      "\"" + cli + "\"" + base + " --output acc_rep_a.csv > /dev/null";
  const std::string run2 =
      "\"" + cli + "\"" + base + " --output acc_rep_b.csv > /dev/null";
  if (std::system(run1.c_str()) != 0) return false;
  if (std::system(run2.c_str()) != 0) return false;
  const std::string a = slurp("acc_rep_a.csv");
  const std::string b = slurp("acc_rep_b.csv");
  return !a.empty() && a == b;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  report(1, "orthogonality and norms", criterion1());
  report(2, "identity suite", criterion2());
  report(3, "riesz isometry", criterion3());
  report(4, "asymptotic limits", criterion4());
  report(5, "transference limits", criterion5());
  report(6, "truncated Parseval inequality", criterion6());
  report(7, "tail bounds O(1/N)", criterion7());
  report(8, "subordination", criterion8());
  report(9, "reproducibility", criterion9(cli));
  return all_ok ? 0 : 1;
}
