#include <doctest.h>

#include <cmath>
#include <random>

#include "regpair/circle.hpp"
#include "regpair/selftest.hpp"

using namespace regpair;

namespace {
const std::size_t G = 256;

CircleFunction cosine(std::size_t g) {
  return CircleFunction::sampled(g, [](double t) { return std::cos(t); });
}
}  // namespace

TEST_CASE("fourier coefficients of elementary functions") {
  const CircleFunction two = CircleFunction::constant(G, 2.0);
  CHECK(std::abs(two.coeff(0) - 2.0) < 1e-14);
  CHECK(std::abs(two.coeff(1)) < 1e-14);
  CHECK(std::abs(two.coeff(-5)) < 1e-14);

  const CircleFunction mode = CircleFunction::harmonic(G, 1);
  CHECK(std::abs(mode.coeff(1) - 1.0) < 1e-13);
  CHECK(std::abs(mode.coeff(0)) < 1e-13);

  // cos = (e^{i t} + e^{-i t})/2
  const CircleFunction c = cosine(G);
  CHECK(std::abs(c.coeff(1) - 0.5) < 1e-13);
  CHECK(std::abs(c.coeff(-1) - 0.5) < 1e-13);
  CHECK(std::abs(c.coeff(2)) < 1e-13);
}

TEST_CASE("winding numbers") {
  CHECK(winding_number(CircleFunction::harmonic(G, 3)) == 3);
  CHECK(winding_number(CircleFunction::constant(G, 2.0)) == 0);
  const CircleFunction around3 = CircleFunction::sampled(
      G, [](double t) { return std::polar(1.0, t) + 3.0; });
  CHECK(winding_number(around3) == 0);
}

TEST_CASE("winding guards") {
  // k = 5 on a 16-point grid steps the argument by 5*2pi/16 > pi/2
  CHECK_THROWS_AS(winding_number(CircleFunction::harmonic(16, 5)), AliasedArgument);
  CHECK_THROWS_AS(winding_number(cosine(G)), NearZeroSymbol);  // vanishes at pi/2
}

TEST_CASE("continuous log") {
  const double c = 0.7;
  const CircleFunction p = CircleFunction::harmonic(G, 1, std::exp(c));
  const LogDecomposition d = continuous_log(p);
  CHECK(d.winding == 1);
  for (std::size_t j = 0; j < G; ++j)
    CHECK(std::abs(d.log_part.sample(j) - c) < 1e-12);

  const LogDecomposition two = continuous_log(CircleFunction::constant(G, 2.0));
  CHECK(two.winding == 0);
  CHECK(std::abs(two.mean() - std::log(2.0)) < 1e-13);

  const LogDecomposition e_cos = continuous_log(
      CircleFunction::sampled(G, [](double t) { return std::exp(std::cos(t)); }));
  CHECK(e_cos.winding == 0);
  CHECK(std::abs(e_cos.log_part.coeff(1) - 0.5) < 1e-12);
  CHECK(std::abs(e_cos.log_part.coeff(-1) - 0.5) < 1e-12);
}

TEST_CASE("continuous log reconstructs the symbol") {
  std::mt19937_64 rng(5);
  const CircleFunction p = selftest::random_symbol(rng, G, 2, 6, 0.6);
  const LogDecomposition d = continuous_log(p);
  for (std::size_t j = 0; j < G; ++j) {
    const cplx rebuilt = std::exp(d.log_part.sample(j)) *
                         std::polar(1.0, d.winding * p.theta(j));
    CHECK(std::abs(rebuilt - p.sample(j)) / std::abs(p.sample(j)) < 1e-10);
  }
  // periodicity of the log: no branch jump across the seam
  const cplx seam = d.log_part.sample(G - 1) - d.log_part.sample(0);
  CHECK(std::abs(seam.imag()) < pi);
}

TEST_CASE("spectral derivative") {
  const CircleFunction mode = CircleFunction::harmonic(G, 1);
  const CircleFunction dmode = spectral_derivative(mode);
  for (std::size_t j = 0; j < G; ++j)
    CHECK(std::abs(dmode.sample(j) - iu * mode.sample(j)) < 1e-12);

  const CircleFunction dconst = spectral_derivative(CircleFunction::constant(G, 3.0));
  CHECK(dconst.max_abs() < 1e-13);

  const CircleFunction dcos = spectral_derivative(cosine(G));
  for (std::size_t j = 0; j < G; ++j)
    CHECK(std::abs(dcos.sample(j) - (-std::sin(dcos.theta(j)))) < 1e-12);
}

TEST_CASE("periodic integral") {
  CHECK(std::abs(periodic_integral(CircleFunction::constant(G, 1.0)) - two_pi) < 1e-13);
  CHECK(std::abs(periodic_integral(CircleFunction::harmonic(G, 7))) < 1e-13);
  const CircleFunction cos_sq = cosine(G) * cosine(G);
  CHECK(std::abs(periodic_integral(cos_sq) - pi) < 1e-12);
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(CircleFunction(std::vector<cplx>(100, 1.0)), Error);  // not a power of two
  CHECK_THROWS_AS(CircleFunction(std::vector<cplx>(8, 1.0)), Error);    // too small
  CHECK_THROWS_AS(CircleFunction::constant(64, 1.0) * CircleFunction::constant(128, 1.0),
                  GridMismatch);
}

TEST_CASE("resolved check catches Nyquist energy") {
  const CircleFunction bad = CircleFunction::from_coefficients(16, {{-8, 1.0}, {0, 2.0}});
  CHECK_FALSE(bad.resolved());
  CHECK_THROWS_AS(bad.require_resolved(), UnderResolved);
  CHECK(CircleFunction::constant(16, 2.0).resolved());
}

TEST_CASE("round trip and calculus properties") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const CircleFunction f = selftest::random_log(rng, G, 20, 1.0);
    // coefficients reproduce samples
    std::vector<std::pair<int, cplx>> coeffs;
    for (int k = -static_cast<int>(G) / 2; k < static_cast<int>(G) / 2; ++k)
      coeffs.emplace_back(k, f.coeff(k));
    const CircleFunction back = CircleFunction::from_coefficients(G, coeffs);
    for (std::size_t j = 0; j < G; ++j)
      CHECK(std::abs(back.sample(j) - f.sample(j)) < 1e-12 * f.max_abs());
    // integral of a derivative vanishes
    CHECK(std::abs(periodic_integral(spectral_derivative(f))) < 1e-12);
  }
}

TEST_CASE("winding additivity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const CircleFunction p = selftest::random_symbol(rng, G, 3, 5, 0.5);
    const CircleFunction q = selftest::random_symbol(rng, G, 3, 5, 0.5);
    CHECK(winding_number(p * q) == winding_number(p) + winding_number(q));
  }
}

TEST_CASE("branch shift moves the mean by 2 pi i and nothing observable") {
  std::mt19937_64 rng(29);
  const CircleFunction p = selftest::random_symbol(rng, G, 2, 5, 0.5);
  const LogDecomposition a = continuous_log(p, 0);
  const LogDecomposition b = continuous_log(p, 1);
  CHECK(std::abs(b.mean() - a.mean() - two_pi * iu) < 1e-11);
  for (int n = -3; n <= 3; ++n) {
    const cplx lhs = std::exp(static_cast<double>(n) * a.mean());
    const cplx rhs = std::exp(static_cast<double>(n) * b.mean());
    CHECK(std::abs(lhs / rhs - 1.0) < 1e-12);
  }
}
