#include "regpair/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "regpair/parser.hpp"

namespace regpair::selftest {

namespace {

double rel_dev(cplx a, cplx b) { return std::abs(a / b - 1.0); }

cplx random_unit_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const cplx z{u(rng), u(rng)};
    if (std::abs(z) <= 1.0) return z;
  }
}

struct Recorder {
  PropertyResult result;

  explicit Recorder(std::string id) { result.id = std::move(id); result.pass = true; }

  void check(double dev, double tol) {
    result.worst = std::max(result.worst, dev);
    if (!(dev <= tol)) result.pass = false;
  }

  void require(bool ok, const std::string& note = "") {
    if (!ok) {
      result.pass = false;
      if (!note.empty()) result.note = note;
    }
  }
};

}  // namespace

CircleFunction random_log(std::mt19937_64& rng, std::size_t grid, int bandwidth,
                          double amplitude) {
  std::vector<std::pair<int, cplx>> coeffs;
  for (int k = -bandwidth; k <= bandwidth; ++k)
    coeffs.emplace_back(k, amplitude / (1.0 + std::abs(k)) * random_unit_disk(rng));
  return CircleFunction::from_coefficients(grid, coeffs);
}

CircleFunction random_symbol(std::mt19937_64& rng, std::size_t grid,
                             int max_winding, int bandwidth, double amplitude) {
  std::uniform_int_distribution<int> mw(-max_winding, max_winding);
  const int m = mw(rng);
  return CircleFunction::harmonic(grid, m) * random_log(rng, grid, bandwidth, amplitude).exp();
}

std::vector<std::pair<CircleFunction, CircleFunction>> standard_symbol_suite(
    std::size_t grid, std::uint64_t seed) {
  std::vector<std::pair<CircleFunction, CircleFunction>> suite;
  const CircleFunction z = CircleFunction::harmonic(grid, 1);
  suite.emplace_back(z, z);
  suite.emplace_back(CircleFunction::constant(grid, 2.0), z);
  suite.emplace_back(
      z, CircleFunction::sampled(grid, [](double t) { return std::exp(std::cos(t)); }));
  std::mt19937_64 rng(seed);
  while (suite.size() < 20) {
    CircleFunction p = random_symbol(rng, grid, 2, 8, 0.4);
    CircleFunction q = random_symbol(rng, grid, 2, 8, 0.4);
    suite.emplace_back(std::move(p), std::move(q));
  }
  return suite;
}

namespace {

// ---- circle-fourier ----

PropertyResult circle_fft_roundtrip(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("circle.fft_roundtrip");
  for (int trial = 0; trial < 10; ++trial) {
    const CircleFunction f = random_log(rng, cfg.grid, 32, 1.0);
    std::vector<std::pair<int, cplx>> coeffs;
    const int g = static_cast<int>(cfg.grid);
    for (int k = -g / 2; k < g / 2; ++k) coeffs.emplace_back(k, f.coeff(k));
    const CircleFunction back = CircleFunction::from_coefficients(cfg.grid, coeffs);
    const double scale = f.max_abs();
    for (std::size_t j = 0; j < cfg.grid; ++j)
      rec.check(std::abs(back.sample(j) - f.sample(j)) / scale, 1e-12);
  }
  return rec.result;
}

PropertyResult circle_winding_additivity(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("circle.winding_additivity");
  for (int trial = 0; trial < 20; ++trial) {
    const CircleFunction p = random_symbol(rng, cfg.grid, 3, 8, 0.5);
    const CircleFunction q = random_symbol(rng, cfg.grid, 3, 8, 0.5);
    const int sum = winding_number(p) + winding_number(q);
    rec.require(winding_number(p * q) == sum, "winding not additive");
  }
  return rec.result;
}

PropertyResult circle_branch_invariance(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("circle.branch_exp_invariance");
  for (int trial = 0; trial < 5; ++trial) {
    const CircleFunction p = random_symbol(rng, cfg.grid, 2, 6, 0.5);
    const LogDecomposition base = continuous_log(p, 0);
    const LogDecomposition shifted = continuous_log(p, 1);
    rec.check(std::abs(shifted.mean() - base.mean() - two_pi * iu), 1e-10);
    for (int n = -3; n <= 3; ++n) {
      const cplx a = std::exp(static_cast<double>(n) * base.mean());
      const cplx b = std::exp(static_cast<double>(n) * shifted.mean());
      rec.check(rel_dev(a, b), 1e-12);
    }
  }
  return rec.result;
}

PropertyResult circle_derivative_integral(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("circle.derivative_integral_zero");
  for (int trial = 0; trial < 10; ++trial) {
    const CircleFunction f = random_log(rng, cfg.grid, 64, 1.0);
    rec.check(std::abs(periodic_integral(spectral_derivative(f))), 1e-12);
  }
  return rec.result;
}

// ---- symbols-geometry ----

RationalFunction random_rational(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  auto rand_poly = [&](int d) {
    Poly p(static_cast<std::size_t>(d) + 1);
    for (auto& c : p) c = random_unit_disk(rng) + cplx{0.1, 0.1};
    if (std::abs(p.back()) < 0.2) p.back() += 0.5;
    return p;
  };
  return RationalFunction(rand_poly(deg(rng)), rand_poly(deg(rng)));
}

PropertyResult symbols_divisor_degree(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)cfg;
  Recorder rec("symbols.divisor_degree_zero");
  for (int trial = 0; trial < 20; ++trial) {
    const RationalFunction f = random_rational(rng, 3);
    rec.require(f.divisor().total_degree() == 0, "divisor degree nonzero");
  }
  return rec.result;
}

std::vector<Point> support_points(const RationalFunction& f, const RationalFunction& g) {
  std::vector<Point> pts;
  for (const auto& e : f.divisor().finite) pts.push_back(Point::at(e.point));
  for (const auto& e : g.divisor().finite) pts.push_back(Point::at(e.point));
  pts.push_back(Point::infinity());
  return pts;
}

PropertyResult symbols_tame_bimultiplicative(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)cfg;
  Recorder rec("symbols.tame_bimultiplicative");
  for (int trial = 0; trial < 15; ++trial) {
    const RationalFunction f1 = random_rational(rng, 2);
    const RationalFunction f2 = random_rational(rng, 2);
    const RationalFunction g = random_rational(rng, 2);
    for (const Point& x : support_points(f1 * f2, g)) {
      const cplx lhs = tame_symbol(f1 * f2, g, x);
      const cplx rhs = tame_symbol(f1, g, x) * tame_symbol(f2, g, x);
      rec.check(rel_dev(lhs, rhs), 1e-8);
    }
  }
  return rec.result;
}

PropertyResult symbols_tame_skew(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)cfg;
  Recorder rec("symbols.tame_skew");
  for (int trial = 0; trial < 15; ++trial) {
    const RationalFunction f = random_rational(rng, 2);
    const RationalFunction g = random_rational(rng, 2);
    for (const Point& x : support_points(f, g))
      rec.check(std::abs(tame_symbol(f, g, x) * tame_symbol(g, f, x) - 1.0), 1e-8);
  }
  return rec.result;
}

PropertyResult symbols_compose_homomorphism(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("symbols.compose_homomorphism");
  const Loop gamma = Loop::circle(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    // keep divisors off the unit circle
    const RationalFunction f =
        parse_rational("(z-2)/(z+3)") * RationalFunction::constant(random_unit_disk(rng) + 2.0);
    const RationalFunction g = parse_rational("z^2+5") * random_rational(rng, 0);
    const CircleFunction lhs = compose(f * g, gamma, cfg.grid);
    const CircleFunction rhs = compose(f, gamma, cfg.grid) * compose(g, gamma, cfg.grid);
    const double scale = lhs.max_abs();
    for (std::size_t j = 0; j < cfg.grid; ++j)
      rec.check(std::abs(lhs.sample(j) - rhs.sample(j)) / scale, 1e-12);
  }
  return rec.result;
}

// ---- regulator-closed-form ----

SteinbergSymbol random_pair(std::mt19937_64& rng, std::size_t grid) {
  return SteinbergSymbol{random_symbol(rng, grid, 2, 8, 0.5),
                         random_symbol(rng, grid, 2, 8, 0.5)};
}

PropertyResult regulator_oracle_agreement(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("regulator.oracle_agreement");
  for (int trial = 0; trial < 100; ++trial) {
    const SteinbergSymbol s = random_pair(rng, cfg.grid);
    rec.check(rel_dev(regulator_fourier(s).value, regulator_integral(s).value),
              cfg.tol_analytic);
  }
  return rec.result;
}

PropertyResult regulator_skew(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("regulator.skew_symmetry");
  for (int trial = 0; trial < 20; ++trial) {
    const SteinbergSymbol s = random_pair(rng, cfg.grid);
    const SteinbergSymbol swapped{s.q, s.p};
    rec.check(std::abs(regulator_fourier(s).value * regulator_fourier(swapped).value - 1.0),
              cfg.tol_analytic);
  }
  return rec.result;
}

PropertyResult regulator_bimultiplicative(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("regulator.bimultiplicative");
  for (int trial = 0; trial < 20; ++trial) {
    const CircleFunction p1 = random_symbol(rng, cfg.grid, 2, 8, 0.5);
    const CircleFunction p2 = random_symbol(rng, cfg.grid, 2, 8, 0.5);
    const CircleFunction q = random_symbol(rng, cfg.grid, 2, 8, 0.5);
    const cplx lhs = regulator_fourier(SteinbergSymbol{p1 * p2, q}).value;
    const cplx rhs = regulator_fourier(SteinbergSymbol{p1, q}).value *
                     regulator_fourier(SteinbergSymbol{p2, q}).value;
    rec.check(rel_dev(lhs, rhs), cfg.tol_analytic);
  }
  return rec.result;
}

PropertyResult regulator_steinberg_relation(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)rng;
  Recorder rec("regulator.steinberg_relation");
  std::vector<CircleFunction> cases;
  cases.push_back(CircleFunction::from_coefficients(cfg.grid, {{0, 0.5}, {1, 0.25}}));
  cases.push_back(CircleFunction::from_coefficients(
      cfg.grid, {{0, 0.4}, {1, 0.1}, {-2, 0.05}}));
  cases.push_back(CircleFunction::from_coefficients(
      cfg.grid, {{0, cplx{0.5, 0.3}}, {-1, cplx{0.0, 0.1}}, {2, 0.08}}));
  for (const auto& p : cases) {
    const CircleFunction one_minus_p = CircleFunction::constant(cfg.grid, 1.0) - p;
    const cplx r = regulator_fourier(SteinbergSymbol{p, one_minus_p}).value;
    rec.check(std::abs(r - 1.0), cfg.tol_analytic);
  }
  return rec.result;
}

PropertyResult regulator_homotopy_invariance(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)rng;
  Recorder rec("regulator.homotopy_invariance");
  const Loop gamma = Loop::circle(0.0, 1.0);
  const Loop direction = Loop::fourier({{2, 0.3}, {-1, cplx{0.0, 0.2}}});
  const std::vector<std::pair<RationalFunction, RationalFunction>> cases = {
      {parse_rational("z"), parse_rational("z-3")},
      {parse_rational("(z-2)/(z+3)"), parse_rational("z")},
  };
  for (const auto& [f, g] : cases) {
    const cplx base = beilinson_pairing(f, g, gamma, cfg.grid).value;
    for (double t : {0.05, -0.1, 0.2}) {
      const cplx moved = beilinson_pairing(f, g, gamma.deformed(direction, t), cfg.grid).value;
      rec.check(std::abs(moved - base), 1e-7);
    }
  }
  return rec.result;
}

PropertyResult regulator_reparameterization(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)rng;
  Recorder rec("regulator.reparameterization_invariance");
  const Loop gamma = Loop::circle(0.0, 1.0);
  // 0.3 sin(theta) and a rotation
  const std::vector<std::pair<int, cplx>> wiggle = {{1, cplx{0.0, -0.15}},
                                                    {-1, cplx{0.0, 0.15}}};
  const std::vector<std::pair<int, cplx>> rotate = {{0, 0.7}};
  const std::vector<std::pair<RationalFunction, RationalFunction>> cases = {
      {parse_rational("z"), parse_rational("z-3")},
      {parse_rational("z-2"), parse_rational("z")},
  };
  for (const auto& [f, g] : cases) {
    const cplx base = beilinson_pairing(f, g, gamma, cfg.grid).value;
    rec.check(rel_dev(beilinson_pairing(f, g, gamma.reparameterized(wiggle), cfg.grid).value,
                      base),
              cfg.tol_analytic);
    rec.check(rel_dev(beilinson_pairing(f, g, gamma.reparameterized(rotate), cfg.grid).value,
                      base),
              cfg.tol_analytic);
  }
  return rec.result;
}

PropertyResult regulator_tame_monodromy(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)rng;
  Recorder rec("regulator.tame_monodromy");
  struct Case {
    RationalFunction f, g;
    cplx center;
  };
  const std::vector<Case> cases = {
      {parse_rational("z-2"), parse_rational("z"), 0.0},
      {parse_rational("z"), parse_rational("2"), 0.0},
      {parse_rational("z"), parse_rational("1-z"), 1.0},
  };
  for (const auto& c : cases) {
    const cplx tau = tame_symbol(c.f, c.g, Point::at(c.center));
    std::vector<double> errs;
    for (double eps : {0.1, 0.05, 0.025}) {
      const cplx v = beilinson_pairing(c.f, c.g, Loop::circle(c.center, eps), cfg.grid).value;
      errs.push_back(std::abs(v / tau - 1.0));
    }
    // O(eps): each halving of the radius must at least halve-ish the error,
    // unless already at the floor
    const double floor = 1e-10;
    for (std::size_t i = 1; i < errs.size(); ++i)
      rec.require(errs[i] <= std::max(0.75 * errs[i - 1], floor),
                  "monodromy error not O(eps)");
    rec.check(errs.back(), std::max(2.0 * errs.front() / 0.1 * 0.025, floor));
  }
  return rec.result;
}

PropertyResult regulator_continuity(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("regulator.continuity");
  const SteinbergSymbol s = random_pair(rng, cfg.grid);
  const CircleFunction delta = random_log(rng, cfg.grid, 8, 1.0);
  const cplx base = regulator_fourier(s).value;
  double prev = 1e300;
  for (double eps : {1e-3, 1e-4, 1e-5}) {
    const CircleFunction p_eps = s.p * delta.scaled(eps).exp();
    const cplx moved = regulator_fourier(SteinbergSymbol{p_eps, s.q}).value;
    const double d = std::abs(moved - base);
    rec.require(d < prev, "pairing delta not decreasing with perturbation size");
    prev = d;
  }
  return rec.result;
}

PropertyResult regulator_branch_invariance(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("regulator.branch_invariance");
  for (int trial = 0; trial < 10; ++trial) {
    const SteinbergSymbol s = random_pair(rng, cfg.grid);
    const cplx base_f = regulator_fourier(s).value;
    const cplx base_i = regulator_integral(s).value;
    rec.check(rel_dev(regulator_fourier(s, 1, 0).value, base_f), 1e-12);
    rec.check(rel_dev(regulator_fourier(s, 0, -1).value, base_f), 1e-12);
    rec.check(rel_dev(regulator_integral(s, 1, -2).value, base_i), 1e-12);
  }
  return rec.result;
}

// ---- toeplitz-operators ----

PropertyResult toeplitz_shift_identities(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)rng;
  Recorder rec("toeplitz.shift_identities");
  const int n = 64;
  const CircleFunction z = CircleFunction::harmonic(cfg.grid, 1);
  const Mat s = toeplitz_matrix(z, n).matrix;
  const Mat s_star = toeplitz_matrix(CircleFunction::harmonic(cfg.grid, -1), n).matrix;
  const Mat id = Mat::Identity(n, n);
  Mat p0 = Mat::Zero(n, n), p1 = Mat::Zero(n, n);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  // edge rows (indices >= n-2) excluded: truncation corrupts them
  const int keep = n - 2;
  auto max_err = [&](const Mat& x) {
    return x.topLeftCorner(keep, keep).cwiseAbs().maxCoeff();
  };
  rec.check(max_err(s_star * s - id), 1e-12);
  rec.check(max_err(s * s_star - (id - p0)), 1e-12);
  rec.check(max_err(s * s * s_star * s_star - (id - p0 - p1)), 1e-12);
  return rec.result;
}

PropertyResult toeplitz_pitfall_guard(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)rng;
  Recorder rec("toeplitz.pitfall_guard");
  const CircleFunction alpha = CircleFunction::harmonic(cfg.grid, 1, 0.3);
  const CircleFunction beta = CircleFunction::harmonic(cfg.grid, -1, 0.2);
  const DeterminantResult d =
      commutator_determinant(alpha, beta, cfg.dim_n, cfg.trunc_m);
  // det of the multiplicative commutator of two truncations is identically 1;
  // the converged block determinant must not be that object
  rec.require(std::abs(d.value - 1.0) > 0.05,
              "block determinant collapsed to the trivial value 1");
  rec.result.worst = std::abs(d.value - 1.0);
  return rec.result;
}

PropertyResult toeplitz_commutator_vs_hh(const RunConfig& cfg, std::mt19937_64& rng) {
  Recorder rec("toeplitz.commutator_vs_helton_howe");
  const CircleFunction a0 = CircleFunction::harmonic(cfg.grid, 1, 0.3);
  const CircleFunction b0 = CircleFunction::harmonic(cfg.grid, -1, 0.2);
  rec.check(rel_dev(commutator_determinant(a0, b0, cfg.dim_n, cfg.trunc_m).value,
                    helton_howe_value(a0, b0)),
            1e-6);
  for (int trial = 0; trial < 4; ++trial) {
    const CircleFunction a = random_log(rng, cfg.grid, 8, 0.4);
    const CircleFunction b = random_log(rng, cfg.grid, 8, 0.4);
    rec.check(rel_dev(commutator_determinant(a, b, cfg.dim_n, cfg.trunc_m).value,
                      helton_howe_value(a, b)),
              1e-6);
  }
  return rec.result;
}

PropertyResult toeplitz_steinberg_vs_closed(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)rng;
  Recorder rec("toeplitz.steinberg_vs_closed_form");
  const auto suite = standard_symbol_suite(cfg.grid, cfg.seed);
  for (const auto& [p, q] : suite) {
    const cplx oracle = regulator_fourier(SteinbergSymbol{p, q}).value;
    const DeterminantResult d =
        steinberg_operator_determinant(p, q, cfg.dim_n, cfg.trunc_m);
    rec.check(rel_dev(d.value, oracle), cfg.tol_operator);
    // history must improve monotonically toward the oracle
    std::vector<double> errs;
    for (const auto& [mi, v] : d.convergence_history) errs.push_back(rel_dev(v, oracle));
    for (std::size_t i = 1; i < errs.size(); ++i)
      rec.require(errs[i] <= errs[i - 1] || errs[i] < 1e-10,
                  "convergence history not improving");
    if (!errs.empty())
      rec.require(errs.back() < errs.front() || errs.front() < 1e-10,
                  "no strict improvement across the history");
  }
  return rec.result;
}

PropertyResult toeplitz_grothendieck(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)cfg;
  Recorder rec("toeplitz.grothendieck_vs_lu");
  std::uniform_int_distribution<int> dim(2, 12);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = dim(rng);
    Mat k(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) k(i, j) = 0.5 * random_unit_disk(rng);
    const cplx series = grothendieck_det(k, n);
    const cplx direct = determinant_lu(Mat::Identity(n, n) + k);
    rec.check(std::abs(series - direct), 1e-10);
  }
  return rec.result;
}

PropertyResult toeplitz_hs_two_routes(const RunConfig& cfg, std::mt19937_64& rng) {
  (void)cfg;
  (void)rng;
  Recorder rec("toeplitz.hs_two_routes");
  const std::size_t g = 1024;
  const int n = 256;
  const std::vector<CircleFunction> fs = {
      CircleFunction::harmonic(g, 1), CircleFunction::harmonic(g, 2),
      CircleFunction::sampled(g, [](double t) { return std::exp(std::cos(t)); })};
  for (const auto& f : fs) {
    const double a = hs_commutator_norm_sq(f, HsRoute::integral, n);
    const double b = hs_commutator_norm_sq(f, HsRoute::matrix, n);
    rec.check(std::abs(a / b - 1.0), 0.01);
  }
  return rec.result;
}

}  // namespace

std::vector<PropertyResult> run_all(const RunConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::vector<PropertyResult> out;
  out.push_back(circle_fft_roundtrip(config, rng));
  out.push_back(circle_winding_additivity(config, rng));
  out.push_back(circle_branch_invariance(config, rng));
  out.push_back(circle_derivative_integral(config, rng));
  out.push_back(symbols_divisor_degree(config, rng));
  out.push_back(symbols_tame_bimultiplicative(config, rng));
  out.push_back(symbols_tame_skew(config, rng));
  out.push_back(symbols_compose_homomorphism(config, rng));
  out.push_back(regulator_oracle_agreement(config, rng));
  out.push_back(regulator_skew(config, rng));
  out.push_back(regulator_bimultiplicative(config, rng));
  out.push_back(regulator_steinberg_relation(config, rng));
  out.push_back(regulator_homotopy_invariance(config, rng));
  out.push_back(regulator_reparameterization(config, rng));
  out.push_back(regulator_tame_monodromy(config, rng));
  out.push_back(regulator_continuity(config, rng));
  out.push_back(regulator_branch_invariance(config, rng));
  out.push_back(toeplitz_shift_identities(config, rng));
  out.push_back(toeplitz_pitfall_guard(config, rng));
  out.push_back(toeplitz_commutator_vs_hh(config, rng));
  out.push_back(toeplitz_steinberg_vs_closed(config, rng));
  out.push_back(toeplitz_grothendieck(config, rng));
  out.push_back(toeplitz_hs_two_routes(config, rng));
  std::sort(out.begin(), out.end(),
            [](const PropertyResult& a, const PropertyResult& b) { return a.id < b.id; });
  return out;
}

std::string summarize(const std::vector<PropertyResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " worst=" << r.worst;
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
  }
  return out.str();
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace regpair::selftest
