#pragma once

#include "rieszlab/quadrature.hpp"

// Riesz transforms, Riesz potentials and heat/Poisson semigroups as
// coefficient multipliers on finite expansions.

namespace rieszlab {

enum class WeightKind { SqrtOneMinusXSq, SqrtX, ConstantOne };

// Output of a Riesz transform: weight(x) * sum_j image_coeffs[j] phi_j(x)
// over the parameter-shifted family; image_coeffs[k-1] comes from input
// degree k.
struct RieszImage {
  WeightKind weight_kind = WeightKind::ConstantOne;
  FamilySpec image_family;
  std::vector<double> image_coeffs;

  double weight(double x) const;
  double evaluate(double x) const;
};

enum class NormMode { PaperFormula, Canonical };

// Generator eigenvalue attached to degree k: k(k+alpha+beta+1) for Jacobi,
// k(k+2lambda) for Gegenbauer, k for Hermite and Laguerre.
double eigenvalue(const FamilySpec& family, int k);

// The parameter shift the transform applies to the polynomial family.
FamilySpec riesz_image_family(const FamilySpec& family);

RieszImage riesz_apply(const Expansion& e);

// PaperFormula evaluates the literal displayed Parseval sums (including the
// Hermite 1/sqrt(pi) factor); Canonical returns sum_{k>=1} c_k^2/||phi_k||^2.
double riesz_l2_norm_sq(const Expansion& e, NormMode mode);

// c_k <- c_k * lambda_k^(-nu/2) for k >= 1; the constant term is dropped.
Expansion riesz_potential(const Expansion& e, double nu);

enum class SemigroupKind { Heat, Poisson };

// c_k <- c_k e^(-lambda_k t) (heat) or c_k e^(-sqrt(lambda_k) t) (Poisson).
Expansion apply_semigroup(const Expansion& e, double t, SemigroupKind kind);

// max over k <= degree of |e^(-sqrt(lambda_k) t) - Bochner integral|, the
// integral evaluated by an M-point generalized Gauss-Laguerre rule (a=-1/2).
double subordination_residual(const Expansion& e, double t, int m_points);

}  // namespace rieszlab
