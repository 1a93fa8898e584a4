#pragma once

#include <limits>
#include <string>
#include <vector>

#include "rieszlab/gammakit.hpp"

// The four classical orthogonal systems in the Szego normalization, each
// attached to a probability measure:
//   Jacobi     P_n^(a,b)   on (-1,1),   (1-x)^a (1+x)^b, a,b > -1
//   Gegenbauer C_n^l       on (-1,1),   (1-x^2)^(l-1/2),  l > -1/2
//   Hermite    H_n         on R,        e^(-x^2)/sqrt(pi)
//   Laguerre   L_n^a       on (0,inf),  x^a e^(-x)/Gamma(a+1), a > -1

namespace rieszlab {

enum class FamilyKind { Jacobi, Gegenbauer, Hermite, Laguerre };

struct SupportInterval {
  double lo;
  double hi;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Hermite;
  double alpha = 0.0;   // Jacobi alpha / Laguerre alpha
  double beta = 0.0;    // Jacobi beta
  double lambda = 0.0;  // Gegenbauer lambda

  static FamilySpec jacobi(double a, double b) {
    return {FamilyKind::Jacobi, a, b, 0.0};
  }
  static FamilySpec gegenbauer(double l) {
    return {FamilyKind::Gegenbauer, 0.0, 0.0, l};
  }
  static FamilySpec hermite() { return {FamilyKind::Hermite, 0.0, 0.0, 0.0}; }
  static FamilySpec laguerre(double a) {
    return {FamilyKind::Laguerre, a, 0.0, 0.0};
  }

  bool valid() const;
  SupportInterval support() const;
  std::string name() const;
};

// Throws std::invalid_argument when the parameter constraints are violated.
void require_valid(const FamilySpec& family);

// phi_0(x), ..., phi_{n_max}(x) by the three-term recurrence.
std::vector<double> eval_all(const FamilySpec& family, int n_max, double x);

double eval_one(const FamilySpec& family, int n, double x);

// ||phi_n||^2 against the normalized measure, assembled in log domain.
double norm_sq(const FamilySpec& family, int n);
LogValue norm_sq_log(const FamilySpec& family, int n);

// d/dx P_n^(a,b)(x) = ((n+a+b+1)/2) P_{n-1}^(a+1,b+1)(x); 0 for n = 0.
double jacobi_derivative(int n, double a, double b, double x);

// LHS - RHS of the degree-lowering Rodrigues identity
//   d/dx{(1-x)^(a+1)(1+x)^(b+1) P_{n-1}^(a+1,b+1)} = -2n (1-x)^a (1+x)^b P_n^(a,b),
// with the derivative expanded analytically.
double rodrigues_residual(int n, double a, double b, double x);

// s^-n C_n^l(t), recurrence run on the pre-scaled values so intermediates
// stay O(1) when C_n^l(t) ~ s^n.
double gegenbauer_scaled(int n, double l, double t, double s);

// s^-k C_k^l(t) for k = 0..n_max in one recurrence pass.
std::vector<double> gegenbauer_scaled_all(int n_max, double l, double t, double s);

// lambda^(-n/2) C_n^lambda(x / sqrt(lambda)); the Hermite-limit scaling.
double scaled_gegenbauer(int n, double lambda, double x);

// P_n^(a,b)(1 - 2t/b) for t in [0, b]; the Laguerre-limit scaling.
double shifted_jacobi(int n, double a, double b, double t);

// Gegenbauer <-> Jacobi conversion constant from the defining Gamma ratio:
// C_n^l = conv * P_n^(l-1/2, l-1/2).
LogValue gegenbauer_conversion(int n, double l);

}  // namespace rieszlab
