#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rieszlab/quadrature.hpp"

using namespace rieszlab;

// The OpenMP kernels split work across independent cells and accumulate each
// cell serially in index order, so their output must match the serial
// reference bit for bit, whatever the thread count.

TEST_CASE("expand: parallel output is bit-identical to serial") {
  const FamilySpec fam = FamilySpec::jacobi(0.3, 0.7);
  const auto rule = build_rule(fam, 256);
  const auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  const auto par = expand(f, fam, 80, rule);
  const auto ser = expand_serial(f, fam, 80, rule);
  REQUIRE(par.raw_coeffs.size() == ser.raw_coeffs.size());
  for (size_t k = 0; k < par.raw_coeffs.size(); ++k)
    CHECK(par.raw_coeffs[k] == ser.raw_coeffs[k]);
}

TEST_CASE("gram matrix: parallel output is bit-identical to serial") {
  for (const auto& fam : {FamilySpec::gegenbauer(2.0), FamilySpec::hermite(),
                          FamilySpec::laguerre(0.5)}) {
    const auto rule = build_rule(fam, 128);
    const auto par = gram_matrix(fam, 40, rule);
    const auto ser = gram_matrix_serial(fam, 40, rule);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
  }
}
