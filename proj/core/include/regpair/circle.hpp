#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "regpair/errors.hpp"

namespace regpair {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr cplx iu{0.0, 1.0};

// Zeros on the contour are an input error; anything below this is treated as
// a genuine zero rather than floating-point noise.
inline constexpr double vanish_tol = 1e-9;

// A function is "resolved" on its grid when the Nyquist coefficient is below
// this magnitude.
inline constexpr double resolved_tol = 1e-10;

/// A smooth complex-valued function on the circle, held as uniform samples
/// at theta_j = 2*pi*j/G together with its discrete Fourier coefficients.
/// G must be a power of two, G >= 16.  Values are immutable; coefficients
/// are computed at construction, so instances are safe to share across
/// threads.
class CircleFunction {
 public:
  explicit CircleFunction(std::vector<cplx> samples);

  static CircleFunction constant(std::size_t grid, cplx c);

  /// amplitude * e^{i k theta}
  static CircleFunction harmonic(std::size_t grid, int k, cplx amplitude = 1.0);

  static CircleFunction sampled(std::size_t grid, const std::function<cplx(double)>& f);

  /// Builds sum c_k e^{i k theta} from a sparse coefficient list.
  static CircleFunction from_coefficients(std::size_t grid,
                                          const std::vector<std::pair<int, cplx>>& coeffs);

  std::size_t grid() const { return samples_.size(); }
  double theta(std::size_t j) const { return two_pi * static_cast<double>(j) / static_cast<double>(grid()); }

  const std::vector<cplx>& samples() const { return samples_; }
  cplx sample(std::size_t j) const { return samples_[j]; }

  /// Fourier coefficient c_hat(k) = (1/G) sum_j f(theta_j) e^{-ik theta_j},
  /// for -G/2 <= k < G/2; zero outside that window.
  cplx coeff(int k) const;

  /// Coefficients in natural order k = -G/2 .. G/2-1.
  std::vector<cplx> spectrum() const;

  double min_abs() const;
  double max_abs() const;

  /// Largest |k| carrying a coefficient above tol.
  int bandwidth(double tol = resolved_tol) const;

  bool resolved() const { return std::abs(coeff(-static_cast<int>(grid()) / 2)) < resolved_tol; }
  void require_resolved() const;
  void require_nonvanishing() const;

  CircleFunction reciprocal() const;
  CircleFunction exp() const;
  CircleFunction scaled(cplx factor) const;

  friend CircleFunction operator+(const CircleFunction& a, const CircleFunction& b);
  friend CircleFunction operator-(const CircleFunction& a, const CircleFunction& b);
  friend CircleFunction operator*(const CircleFunction& a, const CircleFunction& b);
  friend CircleFunction operator-(const CircleFunction& a);

 private:
  CircleFunction(std::vector<cplx> samples, std::vector<cplx> dft);

  std::vector<cplx> samples_;
  std::vector<cplx> coeffs_;  // DFT/G, index j holds frequency j mod G
};

/// Winding number m and a continuous logarithm alpha with
/// e^{alpha(theta)} = p(theta) e^{-i m theta} at every sample.
struct LogDecomposition {
  int winding;
  CircleFunction log_part;

  cplx mean() const { return log_part.coeff(0); }
};

void require_same_grid(const CircleFunction& a, const CircleFunction& b);

/// Total increment of arg p around the circle divided by 2*pi.  Throws
/// AliasedArgument when any single-step increment reaches pi/2 in magnitude
/// and NearZeroSymbol when min |p| <= vanish_tol.
int winding_number(const CircleFunction& p);

/// Continuous logarithm of a nowhere-vanishing p.  The value at theta = 0 is
/// on the principal branch (imaginary part in (-pi, pi]), shifted by
/// 2*pi*i*branch; the rest accumulates argument increments of p e^{-im theta}.
LogDecomposition continuous_log(const CircleFunction& p, int branch = 0);

/// d/dtheta via multiplication of coefficients by ik.  The Nyquist mode is
/// dropped (it carries no usable phase information on this grid).
CircleFunction spectral_derivative(const CircleFunction& f);

/// (2*pi/G) sum_j f(theta_j): the trapezoid rule on a uniform periodic grid,
/// spectrally accurate for smooth periodic f.
cplx periodic_integral(const CircleFunction& f);

}  // namespace regpair
