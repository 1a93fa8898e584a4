#pragma once

#include <functional>
#include <vector>

#include "rieszlab/orthopoly.hpp"

namespace rieszlab {

using Evaluator = std::function<double(double)>;

// Gauss rule exact for polynomials of degree <= 2N-1 against the family's
// normalized measure. Weights sum to 1.
struct QuadratureRule {
  FamilySpec family;
  std::vector<double> nodes;    // ascending, strictly inside the support
  std::vector<double> weights;  // positive

  int order() const { return static_cast<int>(nodes.size()); }
};

// Golub-Welsch construction from the symmetric tridiagonal recurrence matrix.
// Throws std::runtime_error if the eigensolver fails to converge.
QuadratureRule build_rule(const FamilySpec& family, int n_points);

// sum_i w_i f(x_i) g(x_i). Throws std::domain_error naming the node when a
// sample is non-finite.
double inner_product(const Evaluator& f, const Evaluator& g,
                     const QuadratureRule& rule);

// (sum_i w_i |f(x_i)|^p)^(1/p), p >= 1.
double lp_norm(const Evaluator& f, const QuadratureRule& rule, double p);

// Finite Fourier expansion of f: raw coefficients c_k = <f, phi_k>.
struct Expansion {
  FamilySpec family;
  std::vector<double> raw_coeffs;  // c_k, k = 0..K

  int degree() const { return static_cast<int>(raw_coeffs.size()) - 1; }
  // c_k / ||phi_k||^2, the reconstruction coefficient.
  double normalized_coeff(int k) const;
  // sum_k (c_k/||phi_k||^2) phi_k(x)
  double evaluate(double x) const;
};

// c_k = inner_product(f, phi_k, rule), k = 0..degree. Exact for polynomial f
// of degree <= degree when rule.order() >= degree+1; lower orders alias.
Expansion expand(const Evaluator& f, const FamilySpec& family, int degree,
                 const QuadratureRule& rule);
Expansion expand_serial(const Evaluator& f, const FamilySpec& family, int degree,
                        const QuadratureRule& rule);

// G[n*(n_max+1)+m] = <phi_n, phi_m> by quadrature, n,m = 0..n_max.
std::vector<double> gram_matrix(const FamilySpec& family, int n_max,
                                const QuadratureRule& rule);
std::vector<double> gram_matrix_serial(const FamilySpec& family, int n_max,
                                       const QuadratureRule& rule);

// Basis values phi_k(x_i) for k = 0..degree at every node; row i holds the
// values at node i. Shared kernel of expand/gram_matrix.
std::vector<std::vector<double>> node_basis(const FamilySpec& family, int degree,
                                            const QuadratureRule& rule,
                                            bool parallel);

}  // namespace rieszlab
