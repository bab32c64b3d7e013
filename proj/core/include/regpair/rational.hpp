#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "regpair/circle.hpp"
#include "regpair/errors.hpp"

namespace regpair {

/// Complex polynomial as coefficients in ascending degree.
using Poly = std::vector<cplx>;

namespace poly {

Poly trim(Poly p, double tol = 0.0);
int degree(const Poly& p);
cplx eval(const Poly& p, cplx z);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, cplx c);

/// Euclidean division; returns (quotient, remainder).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd by the Euclidean algorithm, coefficients below cutoff treated
/// as zero.  Numeric polynomials need the explicit tie-break.
Poly gcd(Poly a, Poly b, double cutoff = 1e-10);

/// Synthetic division by (z - root), remainder discarded.
Poly deflate(const Poly& p, cplx root);

/// Multiplicity of x as a root; 0 when p(x) != 0 relative to the
/// coefficient scale.
int order_at(const Poly& p, cplx x, double tol = 1e-9);

/// All roots via the companion matrix, with multiplicity (one entry each).
std::vector<cplx> roots(const Poly& p);

}  // namespace poly

/// Point of the Riemann sphere.
class Point {
 public:
  static Point at(cplx z) { return Point(false, z); }
  static Point infinity() { return Point(true, 0.0); }

  bool is_infinity() const { return infinite_; }
  cplx value() const { return value_; }

 private:
  Point(bool inf, cplx z) : infinite_(inf), value_(z) {}
  bool infinite_;
  cplx value_;
};

struct DivisorEntry {
  cplx point;
  int order;  // nonzero: positive for zeros, negative for poles
};

/// Zero/pole divisor of a rational function on P^1.  Orders, including the
/// one at infinity, sum to zero.
struct Divisor {
  std::vector<DivisorEntry> finite;
  int at_infinity = 0;

  int total_degree() const;
};

/// Quotient of complex polynomials, kept in reduced form (constant gcd)
/// with monic denominator.
class RationalFunction {
 public:
  RationalFunction(Poly numerator, Poly denominator);

  static RationalFunction constant(cplx c);
  static RationalFunction z();

  cplx operator()(cplx z) const;

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.size() == 1; }

  RationalFunction operator*(const RationalFunction& other) const;
  RationalFunction inverse() const;

  Divisor divisor() const;

 private:
  Poly num_, den_;
};

int order_at(const RationalFunction& f, const Point& x);

/// Tame symbol tau_x{f,g} = (-1)^{ord_x f ord_x g} (f^{ord_x g}/g^{ord_x f})(x),
/// with the leading (z-x)-powers cancelled analytically before evaluation.
cplx tame_symbol(const RationalFunction& f, const RationalFunction& g, const Point& x);

}  // namespace regpair
