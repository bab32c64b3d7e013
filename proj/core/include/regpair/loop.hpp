#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regpair/circle.hpp"
#include "regpair/rational.hpp"

namespace regpair {

/// A parametrized smooth closed curve in the plane, held as a finite Fourier
/// series gamma(theta) = sum c_k e^{ik theta}.  Circles are the special case
/// {c_0 = center, c_1 = radius}; sampled curves are converted by trig
/// interpolation.  Closedness is automatic from the representation.
class Loop {
 public:
  static Loop circle(cplx center, double radius);
  static Loop fourier(std::vector<std::pair<int, cplx>> coeffs);
  static Loop from_samples(const std::vector<cplx>& samples);

  cplx operator()(double theta) const;
  cplx basepoint() const { return (*this)(0.0); }

  std::vector<cplx> sample(std::size_t grid) const;

  const std::vector<std::pair<int, cplx>>& coefficients() const { return coeffs_; }

  /// Additive homotopy gamma_t(theta) = gamma(theta) + t * direction(theta).
  Loop deformed(const Loop& direction, double t) const;

  /// gamma(phi(theta)) for phi(theta) = theta + sum s_k e^{ik theta}, an
  /// orientation-preserving circle diffeomorphism.  Throws NotDiffeomorphism
  /// when phi' <= 0 anywhere on a fine check grid.
  Loop reparameterized(const std::vector<std::pair<int, cplx>>& shift_coeffs) const;

  const std::string& label() const { return label_; }

 private:
  Loop(std::vector<std::pair<int, cplx>> coeffs, std::string label);

  std::vector<std::pair<int, cplx>> coeffs_;
  std::string label_;
};

/// Samples f along gamma into a CircleFunction.  Throws DivisorCollision when
/// gamma comes within vanish_tol of a zero or pole of f, UnderResolved when
/// the resulting samples fail the Nyquist check.
CircleFunction compose(const RationalFunction& f, const Loop& gamma, std::size_t grid);

}  // namespace regpair
