#pragma once

#include <map>
#include <string>

#include "regpair/circle.hpp"
#include "regpair/loop.hpp"
#include "regpair/rational.hpp"

namespace regpair {

enum class Method { closed_form, contour_integral, operator_determinant };

const char* method_name(Method m);

/// A nonzero complex pairing value with per-method provenance.
struct RegulatorValue {
  cplx value;
  Method method;
  std::map<std::string, double> diagnostics;
};

/// The concrete symbol pair fed to the character: two nowhere-vanishing,
/// resolved circle functions on a shared grid.
struct SteinbergSymbol {
  CircleFunction p, q;

  SteinbergSymbol(CircleFunction p_in, CircleFunction q_in);
};

/// Winding numbers m, n and continuous logs with e^alpha = p/z^m,
/// e^beta = q/z^n.  The branch arguments shift alpha(0), beta(0) by
/// 2*pi*i*branch; every consumer below is invariant under that shift.
struct SymbolDecomposition {
  LogDecomposition p_log;  // m, alpha
  LogDecomposition q_log;  // n, beta
};

SymbolDecomposition decompose_symbol(const SteinbergSymbol& s, int branch_p = 0,
                                     int branch_q = 0);

/// Exact Fourier closed form
///   (-1)^{mn} exp( n alpha_hat(0) - m beta_hat(0) + sum_k k alpha_hat(-k) beta_hat(k) ),
/// the k-sum truncated at the grid band limit.  This is the reference oracle
/// for the other two evaluation routes.
RegulatorValue regulator_fourier(const SteinbergSymbol& s, int branch_p = 0,
                                 int branch_q = 0);

/// Contour-integral evaluation exp{(1/2 pi i)(int log p dlog q - log q(1) int dlog p)}
/// with continuous logs, spectral differentiation, and periodic quadrature.
/// The winding cross terms, which make the raw integrand non-periodic, are
/// integrated in closed form; the periodic remainder goes through
/// periodic_integral.
RegulatorValue regulator_integral(const SteinbergSymbol& s, int branch_p = 0,
                                  int branch_q = 0);

/// Beilinson's monodromy pairing <r{f,g},[gamma]>: compose both symbols with
/// the loop, then evaluate the contour integral with x0 = gamma(0).
RegulatorValue beilinson_pairing(const RationalFunction& f, const RationalFunction& g,
                                 const Loop& gamma, std::size_t grid);

/// (1/2 pi) int_gamma log|f| d(arg g) - log|g| d(arg f); equals
/// log|beilinson_pairing(f,g,gamma)|.
double real_regulator(const RationalFunction& f, const RationalFunction& g,
                      const Loop& gamma, std::size_t grid);

struct MahlerResult {
  double value;                  // (1/2 pi) int log|P(e^{i theta})| dtheta
  double regulator_log_abs;      // log |R{P o circle, z}|, for cross-checking
};

/// Logarithmic Mahler measure of a polynomial with no roots on the unit
/// circle.  Throws RootOnContour otherwise.
MahlerResult mahler_measure(const RationalFunction& P, std::size_t grid);

}  // namespace regpair
