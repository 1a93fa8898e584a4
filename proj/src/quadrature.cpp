#include "rieszlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rieszlab {

namespace {

// Monic three-term recurrence x p_k = p_{k+1} + a_k p_k + b_k p_{k-1} for the
// normalized measure of each family. The coefficients are rational in the
// parameters, so they stay O(1) even for lambda, beta ~ 1e8.
void recurrence_coeffs(const FamilySpec& family, int n, std::vector<double>& diag,
                       std::vector<double>& offsq) {
  diag.assign(n, 0.0);
  offsq.assign(n, 0.0);  // offsq[k] = b_k, used from k = 1
  double a, b;
  switch (family.kind) {
    case FamilyKind::Hermite:
      for (int k = 1; k < n; ++k) offsq[k] = 0.5 * k;
      return;
    case FamilyKind::Laguerre:
      a = family.alpha;
      for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + a + 1.0;
      for (int k = 1; k < n; ++k) offsq[k] = k * (k + a);
      return;
    case FamilyKind::Gegenbauer:
      a = b = family.lambda - 0.5;
      break;
    case FamilyKind::Jacobi:
      a = family.alpha;
      b = family.beta;
      break;
    default:
      throw std::logic_error("recurrence_coeffs: unreachable");
  }
  const double ab = a + b;
  diag[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
    if (k == 1) {
      offsq[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      offsq[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                 (s * s * (s + 1.0) * (s - 1.0));
    }
  }
}

// QL with implicit shifts on a symmetric tridiagonal matrix, tracking only the
// first component of each eigenvector (all that Golub-Welsch needs).
bool tql_first_components(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  z.assign(n, 0.0);
  z[0] = 1.0;
  if (n == 1) return true;
  e[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) return false;
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double bb = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * bb;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - bb;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  return true;
}

}  // namespace

QuadratureRule build_rule(const FamilySpec& family, int n_points) {
  require_valid(family);
  if (n_points < 1) throw std::invalid_argument("build_rule: N must be >= 1");

  std::vector<double> diag, offsq;
  recurrence_coeffs(family, n_points, diag, offsq);

  std::vector<double> e(n_points, 0.0);
  for (int k = 1; k < n_points; ++k) e[k - 1] = std::sqrt(offsq[k]);

  std::vector<double> z;
  if (!tql_first_components(diag, e, z))
    throw std::runtime_error("build_rule: tridiagonal eigensolver failed to converge");

  std::vector<int> idx(n_points);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return diag[i] < diag[j]; });

  QuadratureRule rule;
  rule.family = family;
  rule.nodes.resize(n_points);
  rule.weights.resize(n_points);
  double wsum = 0.0;
  for (int i = 0; i < n_points; ++i) {
    rule.nodes[i] = diag[idx[i]];
    rule.weights[i] = z[idx[i]] * z[idx[i]];
    wsum += rule.weights[i];
  }
  // The measure has total mass 1; renormalizing absorbs eigensolver rounding.
  for (double& w : rule.weights) w /= wsum;
  return rule;
}

double inner_product(const Evaluator& f, const Evaluator& g,
                     const QuadratureRule& rule) {
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double fv = f(rule.nodes[i]);
    const double gv = g(rule.nodes[i]);
    if (!std::isfinite(fv) || !std::isfinite(gv))
      throw std::domain_error("inner_product: non-finite sample at node x = " +
                              std::to_string(rule.nodes[i]));
    acc += rule.weights[i] * fv * gv;
  }
  return acc;
}

double lp_norm(const Evaluator& f, const QuadratureRule& rule, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double fv = f(rule.nodes[i]);
    if (!std::isfinite(fv))
      throw std::domain_error("lp_norm: non-finite sample at node x = " +
                              std::to_string(rule.nodes[i]));
    acc += rule.weights[i] * std::pow(std::abs(fv), p);
  }
  return std::pow(acc, 1.0 / p);
}

double Expansion::normalized_coeff(int k) const {
  const double h = norm_sq(family, k);
  if (h == 0.0) return 0.0;  // degenerate family member (lambda = 0 Gegenbauer)
  return raw_coeffs[static_cast<size_t>(k)] / h;
}

double Expansion::evaluate(double x) const {
  const auto basis = eval_all(family, degree(), x);
  double acc = 0.0;
  for (int k = 0; k <= degree(); ++k) acc += normalized_coeff(k) * basis[k];
  return acc;
}

std::vector<std::vector<double>> node_basis(const FamilySpec& family, int degree,
                                            const QuadratureRule& rule,
                                            bool parallel) {
  const int n = rule.order();
  std::vector<std::vector<double>> basis(static_cast<size_t>(n));
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
      basis[i] = eval_all(family, degree, rule.nodes[i]);
  } else {
    for (int i = 0; i < n; ++i)
      basis[i] = eval_all(family, degree, rule.nodes[i]);
  }
  return basis;
}

namespace {

Expansion expand_impl(const Evaluator& f, const FamilySpec& family, int degree,
                      const QuadratureRule& rule, bool parallel) {
  if (degree < 0) throw std::invalid_argument("expand: degree must be >= 0");
  const int n = rule.order();
  std::vector<double> fv(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    fv[i] = f(rule.nodes[i]);
    if (!std::isfinite(fv[i]))
      throw std::domain_error("expand: non-finite sample at node x = " +
                              std::to_string(rule.nodes[i]));
  }
  const auto basis = node_basis(family, degree, rule, parallel);
  Expansion e{family, std::vector<double>(static_cast<size_t>(degree) + 1, 0.0)};
  // Each coefficient accumulates over nodes in index order regardless of the
  // thread count, so parallel and serial results are bit-identical.
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k <= degree; ++k) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += rule.weights[i] * fv[i] * basis[i][k];
      e.raw_coeffs[k] = acc;
    }
  } else {
    for (int k = 0; k <= degree; ++k) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += rule.weights[i] * fv[i] * basis[i][k];
      e.raw_coeffs[k] = acc;
    }
  }
  return e;
}

std::vector<double> gram_impl(const FamilySpec& family, int n_max,
                              const QuadratureRule& rule, bool parallel) {
  const int dim = n_max + 1;
  const int n = rule.order();
  const auto basis = node_basis(family, n_max, rule, parallel);
  std::vector<double> g(static_cast<size_t>(dim) * dim, 0.0);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int nm = 0; nm < dim * dim; ++nm) {
      const int r = nm / dim, c = nm % dim;
      if (c < r) continue;
      double acc = 0.0;
      for (int i = 0; i < n; ++i)
        acc += rule.weights[i] * basis[i][r] * basis[i][c];
      g[nm] = acc;
    }
  } else {
    for (int nm = 0; nm < dim * dim; ++nm) {
      const int r = nm / dim, c = nm % dim;
      if (c < r) continue;
      double acc = 0.0;
      for (int i = 0; i < n; ++i)
        acc += rule.weights[i] * basis[i][r] * basis[i][c];
      g[nm] = acc;
    }
  }
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < r; ++c) g[r * dim + c] = g[c * dim + r];
  return g;
}

}  // namespace

Expansion expand(const Evaluator& f, const FamilySpec& family, int degree,
                 const QuadratureRule& rule) {
  return expand_impl(f, family, degree, rule, true);
}

Expansion expand_serial(const Evaluator& f, const FamilySpec& family, int degree,
                        const QuadratureRule& rule) {
  return expand_impl(f, family, degree, rule, false);
}

std::vector<double> gram_matrix(const FamilySpec& family, int n_max,
                                const QuadratureRule& rule) {
  return gram_impl(family, n_max, rule, true);
}

std::vector<double> gram_matrix_serial(const FamilySpec& family, int n_max,
                                       const QuadratureRule& rule) {
  return gram_impl(family, n_max, rule, false);
}

}  // namespace rieszlab
