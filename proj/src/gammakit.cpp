#include "rieszlab/gammakit.hpp"

namespace rieszlab {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  return std::lgamma(x);
}

LogValue gamma_signed(double x) {
  if (x > 0.0) return {std::lgamma(x), 1};
  if (x > -1.0 && x != 0.0) {
    // Gamma is negative on (-1, 0); lgamma returns ln|Gamma|.
    return {std::lgamma(x), -1};
  }
  throw std::domain_error("gamma_signed: argument outside (-1, 0) U (0, inf)");
}

namespace {

// Stirling correction ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2].
double stirling_tail(double x) {
  const double r = 1.0 / x;
  const double r2 = r * r;
  return r / 12.0 * (1.0 + r2 * (-1.0 / 30.0 + r2 * (1.0 / 105.0 - r2 / 140.0)));
}

}  // namespace

LogValue gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("gamma_ratio: arguments must be positive");
  if (a < 16.0 || b < 16.0) return {std::lgamma(a) - std::lgamma(b), 1};
  // Rearranged Stirling form avoids the cancellation of two huge lgamma
  // values when a and b are large and close.
  const double d = a - b;
  const double log_ratio = (b - 0.5) * std::log1p(d / b) + d * std::log(a) - d +
                           stirling_tail(a) - stirling_tail(b);
  return {log_ratio, 1};
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("log_beta: arguments must be positive");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

LogValue pochhammer_log(double a, long k) {
  if (!(a > 0.0)) throw std::domain_error("pochhammer_log: base must be positive");
  if (k < 0) throw std::domain_error("pochhammer_log: k must be nonnegative");
  if (k == 0) return LogValue::one();
  return {std::lgamma(a + static_cast<double>(k)) - std::lgamma(a), 1};
}

}  // namespace rieszlab
