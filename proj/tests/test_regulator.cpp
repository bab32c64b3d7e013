#include <doctest.h>

#include <cmath>
#include <random>

#include "regpair/parser.hpp"
#include "regpair/regulator.hpp"
#include "regpair/selftest.hpp"

using namespace regpair;

namespace {
const std::size_t G = 1024;

CircleFunction harmonic_exp(int k, double amp) {
  return CircleFunction::harmonic(G, k, amp).exp();
}

// Independent Mahler oracle: log|lead| + sum over roots of log max(1, |r|).
double jensen_measure(const Poly& p) {
  double out = std::log(std::abs(p.back()));
  for (cplx r : poly::roots(p)) out += std::log(std::max(1.0, std::abs(r)));
  return out;
}
}  // namespace

TEST_CASE("symbol decomposition") {
  const CircleFunction z = CircleFunction::harmonic(G, 1);
  const SymbolDecomposition d1 = decompose_symbol({z, z});
  CHECK(d1.p_log.winding == 1);
  CHECK(d1.q_log.winding == 1);
  CHECK(d1.p_log.log_part.max_abs() < 1e-11);

  const SymbolDecomposition d2 =
      decompose_symbol({CircleFunction::harmonic(G, 1, 2.0), CircleFunction::constant(G, 3.0)});
  CHECK(d2.p_log.winding == 1);
  CHECK(d2.q_log.winding == 0);
  CHECK(std::abs(d2.p_log.mean() - std::log(2.0)) < 1e-12);
  CHECK(std::abs(d2.q_log.mean() - std::log(3.0)) < 1e-12);

  const CircleFunction p3 = CircleFunction::sampled(
      G, [](double t) { return std::polar(1.0, t) * std::exp(std::cos(t)); });
  const SymbolDecomposition d3 = decompose_symbol({p3, z});
  CHECK(d3.p_log.winding == 1);
  CHECK(std::abs(d3.p_log.log_part.coeff(1) - 0.5) < 1e-11);
  CHECK(std::abs(d3.p_log.log_part.coeff(-1) - 0.5) < 1e-11);
}

TEST_CASE("closed form pinned values") {
  const CircleFunction z = CircleFunction::harmonic(G, 1);
  CHECK(std::abs(regulator_fourier({z, z}).value - cplx(-1.0)) < 1e-12);
  CHECK(std::abs(regulator_fourier({z, CircleFunction::constant(G, 2.0)}).value - cplx(0.5)) <
        1e-12);
  const cplx hh = regulator_fourier({harmonic_exp(1, 0.3), harmonic_exp(-1, 0.2)}).value;
  CHECK(std::abs(hh - std::exp(-0.06)) < 1e-12);
}

TEST_CASE("contour integral pinned values") {
  const CircleFunction z = CircleFunction::harmonic(G, 1);
  CHECK(std::abs(regulator_integral({z, z}).value - cplx(-1.0)) < 1e-12);
  CHECK(std::abs(regulator_integral({z, CircleFunction::constant(G, 2.0)}).value - cplx(0.5)) <
        1e-12);
}

TEST_CASE("closed form vs contour integral on random symbols") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const SteinbergSymbol s{selftest::random_symbol(rng, G, 2, 8, 0.4),
                            selftest::random_symbol(rng, G, 2, 8, 0.4)};
    const cplx a = regulator_fourier(s).value;
    const cplx b = regulator_integral(s).value;
    CHECK(std::abs(a / b - 1.0) < 1e-9);
  }
}

TEST_CASE("algebraic identities") {
  std::mt19937_64 rng(7);
  const CircleFunction p1 = selftest::random_symbol(rng, G, 2, 6, 0.4);
  const CircleFunction p2 = selftest::random_symbol(rng, G, 2, 6, 0.4);
  const CircleFunction q = selftest::random_symbol(rng, G, 2, 6, 0.4);

  const cplx skew = regulator_fourier({p1, q}).value * regulator_fourier({q, p1}).value;
  CHECK(std::abs(skew - 1.0) < 1e-9);

  const cplx prod = regulator_fourier({p1 * p2, q}).value;
  const cplx split = regulator_fourier({p1, q}).value * regulator_fourier({p2, q}).value;
  CHECK(std::abs(prod / split - 1.0) < 1e-9);

  // Steinberg relation for p = 1/2 + (1/4) e^{i theta}
  const CircleFunction p = CircleFunction::sampled(
      G, [](double t) { return 0.5 + 0.25 * std::polar(1.0, t); });
  const CircleFunction one = CircleFunction::constant(G, 1.0);
  CHECK(std::abs(regulator_fourier({p, one - p}).value - 1.0) < 1e-9);

  // branch invariance
  const cplx base = regulator_fourier({p1, q}, 0, 0).value;
  CHECK(std::abs(regulator_fourier({p1, q}, 1, 0).value / base - 1.0) < 1e-12);
  CHECK(std::abs(regulator_fourier({p1, q}, 0, -1).value / base - 1.0) < 1e-12);
  CHECK(std::abs(regulator_integral({p1, q}, 1, -2).value /
                     regulator_integral({p1, q}).value - 1.0) < 1e-12);
}

TEST_CASE("monodromy pairing over loops") {
  const Loop unit = Loop::circle(0.0, 1.0);
  const RationalFunction z = RationalFunction::z();
  CHECK(std::abs(beilinson_pairing(z, RationalFunction::constant(2.0), unit, G).value -
                 cplx(0.5)) < 1e-10);
  CHECK(std::abs(beilinson_pairing(z, z, unit, G).value - cplx(-1.0)) < 1e-10);

  // contractible loop far from every divisor point
  const Loop far = Loop::circle(5.0, 0.1);
  const cplx triv = beilinson_pairing(z, parse_rational("z-1"), far, G).value;
  CHECK(std::abs(triv - 1.0) < 1e-10);
}

TEST_CASE("pairing geometry invariances") {
  const RationalFunction f = parse_rational("z");
  const RationalFunction g = parse_rational("z-3");
  const Loop unit = Loop::circle(0.0, 1.0);
  const cplx base = beilinson_pairing(f, g, unit, G).value;

  const Loop bump = Loop::fourier({{2, cplx(0.3, 0.1)}, {-1, 0.2}});
  for (double t : {0.05, 0.1, 0.2}) {
    const cplx moved = beilinson_pairing(f, g, unit.deformed(bump, t), G).value;
    CHECK(std::abs(moved / base - 1.0) < 1e-7);
  }

  const Loop warped = unit.reparameterized({{1, cplx(0.0, -0.15)}, {-1, cplx(0.0, 0.15)}});
  CHECK(std::abs(beilinson_pairing(f, g, warped, G).value / base - 1.0) < 1e-9);

  const Loop rotated = unit.reparameterized({{0, 0.8}});
  CHECK(std::abs(beilinson_pairing(f, g, rotated, G).value / base - 1.0) < 1e-9);
}

TEST_CASE("small-circle monodromy approaches the tame symbol") {
  const RationalFunction f = parse_rational("z-2");
  const RationalFunction g = parse_rational("z");
  const cplx tame = tame_symbol(f, g, Point::at(0.0));
  double prev = 1e9;
  for (double eps : {0.1, 0.05, 0.025}) {
    const cplx loop_val = beilinson_pairing(f, g, Loop::circle(0.0, eps), G).value;
    const double err = std::abs(loop_val - tame);
    CHECK(err < prev * 0.75 + 1e-12);  // O(eps) decrease
    prev = err;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("real regulator") {
  const Loop unit = Loop::circle(0.0, 1.0);
  const RationalFunction z = RationalFunction::z();
  CHECK(std::abs(real_regulator(z, RationalFunction::constant(2.0), unit, G) -
                 (-std::log(2.0))) < 1e-10);
  CHECK(std::abs(real_regulator(z, z, unit, G)) < 1e-10);
  CHECK(std::abs(real_regulator(parse_rational("z-2"), z, unit, G) - std::log(2.0)) < 1e-10);

  // matches log|pairing| for a generic pair
  const RationalFunction f = parse_rational("(z-4)/(z+2)");
  const RationalFunction g = parse_rational("z-3");
  const double lhs = real_regulator(f, g, unit, G);
  const double rhs = std::log(std::abs(beilinson_pairing(f, g, unit, G).value));
  CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("mahler measure") {
  CHECK(std::abs(mahler_measure(parse_rational("z"), G).value) < 1e-12);
  const MahlerResult m2 = mahler_measure(parse_rational("z-2"), G);
  CHECK(std::abs(m2.value - std::log(2.0)) < 1e-12);
  CHECK(std::abs(m2.value - m2.regulator_log_abs) < 1e-9);
  CHECK(std::abs(mahler_measure(parse_rational("(z-2)*(z-3)"), G).value - std::log(6.0)) <
        1e-11);

  CHECK_THROWS_AS(mahler_measure(parse_rational("z-1"), G), RootOnContour);
  CHECK_THROWS_AS(mahler_measure(parse_rational("1/(z-2)"), G), Error);  // not a polynomial
}

TEST_CASE("mahler measure matches the Jensen oracle on random polynomials") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    Poly p;
    for (int i = 0; i < 4; ++i) p.emplace_back(re(rng), re(rng));
    p.push_back(1.0);
    const RationalFunction poly_fn(p, Poly{1.0});
    double min_dist = 1e9;
    for (cplx r : poly::roots(p)) min_dist = std::min(min_dist, std::abs(std::abs(r) - 1.0));
    if (min_dist < 0.05) continue;  // keep quadrature error well under tolerance
    const MahlerResult m = mahler_measure(poly_fn, 4096);
    CHECK(std::abs(m.value - jensen_measure(p)) < 1e-9);
    CHECK(std::abs(m.value - m.regulator_log_abs) < 1e-8);
  }
}

TEST_CASE("continuity under sample perturbation") {
  std::mt19937_64 rng(55);
  const SteinbergSymbol s{selftest::random_symbol(rng, G, 1, 5, 0.3),
                          selftest::random_symbol(rng, G, 1, 5, 0.3)};
  const cplx base = regulator_fourier(s).value;
  double prev_delta = 1e9;
  for (double eps : {1e-3, 1e-4, 1e-5}) {
    const CircleFunction wiggle = CircleFunction::harmonic(G, 3, eps);
    const cplx moved = regulator_fourier({s.p * wiggle.exp(), s.q}).value;
    const double delta = std::abs(moved / base - 1.0);
    CHECK(delta < prev_delta);
    prev_delta = delta;
  }
  CHECK(prev_delta < 1e-4);
}
