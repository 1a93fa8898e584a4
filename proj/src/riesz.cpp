#include "rieszlab/riesz.hpp"

#include <cmath>
#include <stdexcept>

namespace rieszlab {

double RieszImage::weight(double x) const {
  switch (weight_kind) {
    case WeightKind::SqrtOneMinusXSq:
      return std::sqrt(std::max(0.0, 1.0 - x * x));
    case WeightKind::SqrtX:
      return std::sqrt(std::max(0.0, x));
    case WeightKind::ConstantOne:
      return 1.0;
  }
  return 1.0;
}

double RieszImage::evaluate(double x) const {
  if (image_coeffs.empty()) return 0.0;
  const auto basis =
      eval_all(image_family, static_cast<int>(image_coeffs.size()) - 1, x);
  double acc = 0.0;
  for (size_t j = 0; j < image_coeffs.size(); ++j) acc += image_coeffs[j] * basis[j];
  return weight(x) * acc;
}

double eigenvalue(const FamilySpec& family, int k) {
  const double dk = static_cast<double>(k);
  switch (family.kind) {
    case FamilyKind::Jacobi:
      return dk * (dk + family.alpha + family.beta + 1.0);
    case FamilyKind::Gegenbauer:
      return dk * (dk + 2.0 * family.lambda);
    case FamilyKind::Hermite:
    case FamilyKind::Laguerre:
      return dk;
  }
  throw std::logic_error("eigenvalue: unreachable");
}

FamilySpec riesz_image_family(const FamilySpec& family) {
  switch (family.kind) {
    case FamilyKind::Jacobi:
      return FamilySpec::jacobi(family.alpha + 1.0, family.beta + 1.0);
    case FamilyKind::Gegenbauer:
      return FamilySpec::gegenbauer(family.lambda + 1.0);
    case FamilyKind::Hermite:
      return FamilySpec::hermite();
    case FamilyKind::Laguerre:
      return FamilySpec::laguerre(family.alpha + 1.0);
  }
  throw std::logic_error("riesz_image_family: unreachable");
}

namespace {

// Multiplicative factor carrying c_k to the image coefficient of
// phi_{k-1}^shifted, k >= 1.
LogValue riesz_coeff_factor(const FamilySpec& family, int k) {
  const double dk = static_cast<double>(k);
  switch (family.kind) {
    case FamilyKind::Jacobi: {
      // (1/h_k) lambda_k^{-1/2} (k+a+b+1)/2
      const LogValue h = norm_sq_log(family, k);
      const double s = dk + family.alpha + family.beta + 1.0;
      return LogValue{std::log(s / 2.0) - 0.5 * std::log(dk * s), 1} / h;
    }
    case FamilyKind::Gegenbauer: {
      const double l = family.lambda;
      if (l == 0.0) return LogValue::zero();
      // (1/2) d_k ((k+2l)/k)^{1/2}, d_k = 4 Gamma(2l)(k+l)k!/Gamma(k+2l+1)
      const LogValue d = LogValue::from(4.0) * gamma_signed(2.0 * l) *
                         LogValue::from(dk + l) * gamma_signed(dk + 1.0) /
                         gamma_signed(dk + 2.0 * l + 1.0);
      return LogValue{0.5 * std::log((dk + 2.0 * l) / dk) - std::log(2.0), 1} * d;
    }
    case FamilyKind::Hermite:
      // sqrt(2k) / (2^k k!)
      return LogValue{0.5 * std::log(2.0 * dk) - dk * std::log(2.0) -
                          log_gamma(dk + 1.0),
                      1};
    case FamilyKind::Laguerre: {
      const double a = family.alpha;
      // -Gamma(a+1) k! / (Gamma(k+a+1) sqrt(k))
      return LogValue{log_gamma(a + 1.0) + log_gamma(dk + 1.0) -
                          log_gamma(dk + a + 1.0) - 0.5 * std::log(dk),
                      -1};
    }
  }
  throw std::logic_error("riesz_coeff_factor: unreachable");
}

WeightKind riesz_weight_kind(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Jacobi:
    case FamilyKind::Gegenbauer:
      return WeightKind::SqrtOneMinusXSq;
    case FamilyKind::Laguerre:
      return WeightKind::SqrtX;
    case FamilyKind::Hermite:
      return WeightKind::ConstantOne;
  }
  return WeightKind::ConstantOne;
}

// The literal Parseval weight of |c_k|^2 in the displayed norm chains.
LogValue paper_parseval_weight(const FamilySpec& family, int k) {
  const double dk = static_cast<double>(k);
  switch (family.kind) {
    case FamilyKind::Jacobi: {
      const double a = family.alpha, b = family.beta;
      return LogValue{std::log(2.0 * dk + a + b + 1.0) + log_gamma(a + 1.0) +
                          log_gamma(b + 1.0) + log_gamma(dk + 1.0) +
                          log_gamma(dk + a + b + 1.0) - log_gamma(a + b + 2.0) -
                          log_gamma(dk + a + 1.0) - log_gamma(dk + b + 1.0),
                      1};
    }
    case FamilyKind::Gegenbauer: {
      const double l = family.lambda;
      if (l == 0.0) return LogValue::zero();
      // (k+l) k! / (l (2l)_k)
      const LogValue poch =
          gamma_signed(2.0 * l + dk) / gamma_signed(2.0 * l);
      return LogValue::from(dk + l) * gamma_signed(dk + 1.0) /
             (LogValue::from(l) * poch);
    }
    case FamilyKind::Hermite:
      // 1 / (k! 2^k sqrt(pi))
      return LogValue{-log_gamma(dk + 1.0) - dk * std::log(2.0) -
                          0.5 * std::log(M_PI),
                      1};
    case FamilyKind::Laguerre: {
      const double a = family.alpha;
      return LogValue{log_gamma(a + 1.0) + log_gamma(dk + 1.0) -
                          log_gamma(dk + a + 1.0),
                      1};
    }
  }
  throw std::logic_error("paper_parseval_weight: unreachable");
}

}  // namespace

RieszImage riesz_apply(const Expansion& e) {
  require_valid(e.family);
  RieszImage img;
  img.weight_kind = riesz_weight_kind(e.family.kind);
  img.image_family = riesz_image_family(e.family);
  const int deg = e.degree();
  img.image_coeffs.assign(deg >= 1 ? static_cast<size_t>(deg) : 0, 0.0);
  for (int k = 1; k <= deg; ++k) {
    img.image_coeffs[k - 1] =
        e.raw_coeffs[k] * riesz_coeff_factor(e.family, k).value();
  }
  return img;
}

double riesz_l2_norm_sq(const Expansion& e, NormMode mode) {
  double acc = 0.0;
  for (int k = 1; k <= e.degree(); ++k) {
    const double c = e.raw_coeffs[k];
    if (c == 0.0) continue;
    if (mode == NormMode::Canonical) {
      const LogValue h = norm_sq_log(e.family, k);
      if (h.sign == 0) continue;
      acc += c * c / h.value();
    } else {
      acc += c * c * paper_parseval_weight(e.family, k).value();
    }
  }
  return acc;
}

Expansion riesz_potential(const Expansion& e, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("riesz_potential: nu must be > 0");
  Expansion out = e;
  out.raw_coeffs[0] = 0.0;
  for (int k = 1; k <= e.degree(); ++k)
    out.raw_coeffs[k] *= std::pow(eigenvalue(e.family, k), -0.5 * nu);
  return out;
}

Expansion apply_semigroup(const Expansion& e, double t, SemigroupKind kind) {
  if (t < 0.0) throw std::invalid_argument("apply_semigroup: t must be >= 0");
  Expansion out = e;
  for (int k = 0; k <= e.degree(); ++k) {
    const double lk = eigenvalue(e.family, k);
    const double rate = kind == SemigroupKind::Heat ? lk : std::sqrt(lk);
    out.raw_coeffs[k] *= std::exp(-rate * t);
  }
  return out;
}

double subordination_residual(const Expansion& e, double t, int m_points) {
  if (!(t > 0.0)) throw std::invalid_argument("subordination_residual: t must be > 0");
  // Against the normalized Gamma(a=-1/2) measure the 1/sqrt(pi) prefactor and
  // the Gamma(1/2) mass cancel. The integrand e^(-c/u) has an essential
  // singularity at u = 0 that defeats the rule in the raw variable, so the
  // integral is folded through the saddle substitution v = u + c/u - 2 sqrt(c);
  // the two branches u_+-(v) carry a combined Jacobian with exactly the
  // v^(-1/2) singularity the a = -1/2 weight absorbs.
  const auto rule = build_rule(FamilySpec::laguerre(-0.5), m_points);
  double worst = 0.0;
  for (int k = 0; k <= e.degree(); ++k) {
    const double lk = eigenvalue(e.family, k);
    double integral;
    if (lk == 0.0) {
      integral = 1.0;  // weights sum to 1
    } else {
      const double c = lk * t * t / 4.0;
      const double rc = std::sqrt(c);
      integral = 0.0;
      for (int i = 0; i < rule.order(); ++i) {
        const double v = rule.nodes[i];
        const double y = v + 2.0 * rc;
        const double ab = std::sqrt(v * (v + 4.0 * rc));
        const double up = 0.5 * (y + ab);
        const double um = c / up;
        // du_+/dv = (1 + y/ab)/2, |du_-/dv| = (y - ab)/(2 ab) with
        // y - ab = 4c/(y + ab) evaluated cancellation-free.
        const double jac = 0.5 * ((1.0 + y / ab) / std::sqrt(up) +
                                  4.0 * c / ((y + ab) * ab * std::sqrt(um)));
        integral += rule.weights[i] * std::sqrt(v) * jac *
                    std::exp(v - up - c / up);
      }
    }
    worst = std::max(worst, std::abs(std::exp(-std::sqrt(lk) * t) - integral));
  }
  return worst;
}

}  // namespace rieszlab
