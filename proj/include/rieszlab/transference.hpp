#pragma once

#include <cstdint>
#include <string>

#include "rieszlab/riesz.hpp"

// Finite-parameter transference experiments: the scaling maps
// f_lambda(x) = f(sqrt(lambda) x) and f_beta(x) = f(beta(1-x)/2), their norm
// and inner-product limits, the asymptotic polynomial errors, the truncated
// Parseval inequality on the Gegenbauer side, and the O(1/N) tail-energy
// bounds behind the L^p argument.

namespace rieszlab {

enum class Direction { Gauss, Laguerre };

// Restriction of a function on the limit space to [-1,1] through the scaling
// map. Outside [-1,1] the value is zero by definition.
struct ScaledFunction {
  Evaluator base;
  Direction direction = Direction::Gauss;
  double parameter = 1.0;  // lambda (gauss) or beta (laguerre)

  double operator()(double x) const;
};

struct ReportRow {
  double param = 0.0;
  int k_or_n = 0;
  double value = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = true;
};

struct ConvergenceReport {
  std::string experiment;
  std::string family;
  std::vector<ReportRow> rows;

  bool all_pass() const;
};

ReportRow make_row(double param, int k_or_n, double value, double reference,
                   bool pass);

// ||f_param||_p against the scaled measure vs ||f||_p against the limit
// measure, one row per parameter. For p = 2 the rows are marked failing
// unless the errors are non-increasing along the parameter list.
ConvergenceReport norm_relation(const Evaluator& f, const std::string& f_id,
                                Direction direction, double p,
                                const std::vector<double>& params, int quad_order,
                                double alpha = 0.0);

// <f_lambda, lambda^{-k/2} C_k^lambda> vs <f, H_k/k!>  (gauss), or
// <f_beta, P_k^(alpha,beta)> vs <f, L_k^alpha>          (laguerre).
ConvergenceReport inner_product_relation(const Evaluator& f,
                                         const std::string& f_id,
                                         Direction direction, int k,
                                         const std::vector<double>& params,
                                         int quad_order, double alpha = 0.0);

// sup over a uniform grid of the distance between the scaled polynomial and
// its Hermite/Laguerre limit.
double asymptotic_error(Direction target, int n, double param, double lo,
                        double hi, int points, double alpha = 0.0);

struct DesigResult {
  double lhs = 0.0;  // the displayed truncated sum, with its 2 sqrt(pi) factor
  double rhs = 0.0;  // the Gegenbauer-Riesz Parseval norm, same truncation
};

// Both sides of the truncated Parseval inequality for R^lambda applied to
// f_lambda; callers assert lhs <= rhs (1 + 1e-10).
DesigResult desig_check(const Evaluator& f, double lambda, int degree_cap,
                        int quad_order);

// Squared L^2(limit measure) norm of the degree > N tail of the re-weighted
// Riesz-image series of the scaled test function, restricted to |y| <= k
// (gauss) or (0, k) (laguerre). The series is truncated at series_cap.
double tail_energy(Direction direction, const Evaluator& phi, double param,
                   int k_radius, int tail_start, int quad_order,
                   int series_cap = 48, double alpha = 0.0);

// Sup distance on the window between the finite-degree re-weighted Riesz
// image of the scaled function and the limit Riesz partial sum of the same
// length; one row per parameter, distances must decrease.
ConvergenceReport riesz_limit_identity(const Evaluator& phi,
                                       const std::string& f_id,
                                       Direction direction,
                                       const std::vector<double>& params,
                                       int degree_cap, int quad_order,
                                       double k_radius, int grid_points,
                                       double alpha = 0.0);

// Lower-bound estimate of ||R||_{p->p} from random polynomials of bounded
// degree, one row per family. For p = 2 rows must satisfy contractivity.
ConvergenceReport operator_norm_sweep(const std::vector<FamilySpec>& families,
                                      double p, int degree_cap, int trials,
                                      std::uint64_t seed, int quad_order,
                                      bool mean_zero = false);

}  // namespace rieszlab
