#pragma once

#include <cmath>
#include <stdexcept>

// Log-domain Gamma/Beta/Pochhammer arithmetic. Every norm constant in the
// library is assembled from these and exponentiated last, so that parameters
// up to 1e8 never overflow a double.

namespace rieszlab {

// A real number stored as (sign, ln|value|).
struct LogValue {
  double log_mag = 0.0;  // natural log of |value|; ignored when sign == 0
  int sign = 1;          // -1, 0, +1

  static LogValue zero() { return {0.0, 0}; }
  static LogValue one() { return {0.0, 1}; }

  static LogValue from(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
  }

  double value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_mag);
  }

  LogValue operator*(const LogValue& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {log_mag + o.log_mag, sign * o.sign};
  }

  LogValue operator/(const LogValue& o) const {
    if (o.sign == 0) throw std::domain_error("LogValue: division by zero");
    if (sign == 0) return zero();
    return {log_mag - o.log_mag, sign * o.sign};
  }
};

// ln Gamma(x) for x > 0. Relative error <= 1e-13 for x >= 0.5.
double log_gamma(double x);

// Gamma(x) as a LogValue for x > -1, x != 0 (the window the Gegenbauer
// constants need: Gamma is negative on (-1, 0)).
LogValue gamma_signed(double x);

// Gamma(a)/Gamma(b) for a, b > 0, stable for large common shifts.
LogValue gamma_ratio(double a, double b);

// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

// Pochhammer symbol (a)_k = Gamma(a+k)/Gamma(a) for a > 0, k >= 0.
LogValue pochhammer_log(double a, long k);

}  // namespace rieszlab
