#include "regpair/regulator.hpp"

#include <cmath>

namespace regpair {

const char* method_name(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::contour_integral: return "contour_integral";
    case Method::operator_determinant: return "operator_determinant";
  }
  return "?";
}

SteinbergSymbol::SteinbergSymbol(CircleFunction p_in, CircleFunction q_in)
    : p(std::move(p_in)), q(std::move(q_in)) {
  require_same_grid(p, q);
  p.require_nonvanishing();
  q.require_nonvanishing();
  p.require_resolved();
  q.require_resolved();
}

SymbolDecomposition decompose_symbol(const SteinbergSymbol& s, int branch_p,
                                     int branch_q) {
  return {continuous_log(s.p, branch_p), continuous_log(s.q, branch_q)};
}

namespace {

double sign_pow(long long e) { return (e % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

RegulatorValue regulator_fourier(const SteinbergSymbol& s, int branch_p, int branch_q) {
  const SymbolDecomposition d = decompose_symbol(s, branch_p, branch_q);
  const int m = d.p_log.winding;
  const int n = d.q_log.winding;
  const CircleFunction& alpha = d.p_log.log_part;
  const CircleFunction& beta = d.q_log.log_part;
  const int kmax = static_cast<int>(s.p.grid()) / 2 - 1;

  cplx sum = 0.0;
  for (int k = -kmax; k <= kmax; ++k)
    sum += static_cast<double>(k) * alpha.coeff(-k) * beta.coeff(k);

  const cplx exponent = static_cast<double>(n) * alpha.coeff(0) -
                        static_cast<double>(m) * beta.coeff(0) + sum;
  const cplx value =
      sign_pow(static_cast<long long>(m) * n) * std::exp(exponent);

  RegulatorValue out{value, Method::closed_form, {}};
  out.diagnostics["grid"] = static_cast<double>(s.p.grid());
  out.diagnostics["winding_m"] = m;
  out.diagnostics["winding_n"] = n;
  // tail bound of the truncated k-sum
  const double tail = static_cast<double>(kmax) *
                      std::max(std::abs(alpha.coeff(kmax)) * std::abs(beta.coeff(-kmax)),
                               std::abs(alpha.coeff(-kmax)) * std::abs(beta.coeff(kmax)));
  out.diagnostics["tail_bound"] = tail;
  return out;
}

RegulatorValue regulator_integral(const SteinbergSymbol& s, int branch_p, int branch_q) {
  const SymbolDecomposition d = decompose_symbol(s, branch_p, branch_q);
  const int m = d.p_log.winding;
  const int n = d.q_log.winding;
  const CircleFunction& alpha = d.p_log.log_part;
  const CircleFunction& beta = d.q_log.log_part;

  // With L_p = im theta + alpha and L_q' = in + beta', the integrand
  // L_p L_q' splits into a part that is exactly integrable and a periodic
  // remainder.  The theta-linear terms integrate to
  //   (im)(in) * 2 pi^2 + im (2 pi beta(0) - int beta),
  // and - log q(1) int dlog p contributes -beta(0) * 2 pi i m; after division
  // by 2 pi i the beta(0) terms cancel, leaving
  //   i pi m n - (m / 2 pi) int beta + (1/2 pi i) int alpha (in + beta').
  const CircleFunction beta_prime = spectral_derivative(beta);
  const CircleFunction in_plus_bp =
      CircleFunction::constant(s.p.grid(), iu * static_cast<double>(n)) + beta_prime;
  const cplx periodic_part = periodic_integral(alpha * in_plus_bp);
  const cplx int_beta = periodic_integral(beta);

  const cplx exponent = iu * pi * static_cast<double>(m) * static_cast<double>(n) -
                        static_cast<double>(m) / two_pi * int_beta +
                        periodic_part / (two_pi * iu);

  RegulatorValue out{std::exp(exponent), Method::contour_integral, {}};
  out.diagnostics["grid"] = static_cast<double>(s.p.grid());
  out.diagnostics["winding_m"] = m;
  out.diagnostics["winding_n"] = n;
  return out;
}

RegulatorValue beilinson_pairing(const RationalFunction& f, const RationalFunction& g,
                                 const Loop& gamma, std::size_t grid) {
  SteinbergSymbol s{compose(f, gamma, grid), compose(g, gamma, grid)};
  RegulatorValue out = regulator_integral(s);
  out.diagnostics["basepoint_re"] = gamma.basepoint().real();
  out.diagnostics["basepoint_im"] = gamma.basepoint().imag();
  return out;
}

double real_regulator(const RationalFunction& f, const RationalFunction& g,
                      const Loop& gamma, std::size_t grid) {
  SteinbergSymbol s{compose(f, gamma, grid), compose(g, gamma, grid)};
  const SymbolDecomposition d = decompose_symbol(s);
  const int m = d.p_log.winding;
  const int n = d.q_log.winding;
  const CircleFunction& alpha = d.p_log.log_part;
  const CircleFunction& beta = d.q_log.log_part;
  const CircleFunction alpha_prime = spectral_derivative(alpha);
  const CircleFunction beta_prime = spectral_derivative(beta);

  // log|f| = Re alpha and d(arg g)/dtheta = n + Im beta' are both periodic,
  // so plain periodic quadrature applies.
  double total = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    const double log_abs_f = alpha.sample(j).real();
    const double log_abs_g = beta.sample(j).real();
    const double darg_g = static_cast<double>(n) + beta_prime.sample(j).imag();
    const double darg_f = static_cast<double>(m) + alpha_prime.sample(j).imag();
    total += log_abs_f * darg_g - log_abs_g * darg_f;
  }
  return total / static_cast<double>(grid);  // (1/2 pi) * (2 pi / G) * sum
}

MahlerResult mahler_measure(const RationalFunction& P, std::size_t grid) {
  if (!P.is_polynomial()) throw Error("Mahler measure expects a polynomial");
  for (const auto& r : poly::roots(P.numerator()))
    if (std::abs(std::abs(r) - 1.0) <= vanish_tol)
      throw RootOnContour("root at |z| = " + std::to_string(std::abs(r)));

  const Loop unit = Loop::circle(0.0, 1.0);
  const CircleFunction samples = compose(P, unit, grid);
  samples.require_nonvanishing();

  double total = 0.0;
  for (std::size_t j = 0; j < grid; ++j)
    total += std::log(std::abs(samples.sample(j)));
  const double value = total / static_cast<double>(grid);

  SteinbergSymbol s{samples, CircleFunction::harmonic(grid, 1)};
  const RegulatorValue r = regulator_fourier(s);
  return {value, std::log(std::abs(r.value))};
}

}  // namespace regpair
