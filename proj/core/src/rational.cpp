#include "regpair/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace regpair {

namespace poly {

Poly trim(Poly p, double tol) {
  double scale = 0.0;
  for (const auto& c : p) scale = std::max(scale, std::abs(c));
  const double cut = tol * scale;
  while (p.size() > 1 && std::abs(p.back()) <= cut) p.pop_back();
  if (p.empty()) p.push_back(0.0);
  return p;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

cplx eval(const Poly& p, cplx z) {
  cplx v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
  return v;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

Poly scale(const Poly& a, cplx c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly rem = a;
  const int db = degree(b);
  const int da = degree(a);
  if (da < db) return {Poly{0.0}, rem};
  Poly quot(static_cast<std::size_t>(da - db) + 1, 0.0);
  for (int k = da - db; k >= 0; --k) {
    const cplx c = rem[static_cast<std::size_t>(k + db)] / b[static_cast<std::size_t>(db)];
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(db, 1)));
  return {trim(std::move(quot)), trim(std::move(rem))};
}

namespace {

double max_abs_coeff(const Poly& p) {
  double m = 0.0;
  for (const auto& c : p) m = std::max(m, std::abs(c));
  return m;
}

// Strip trailing coefficients below an absolute cutoff.
Poly trim_abs(Poly p, double cutoff) {
  while (p.size() > 1 && std::abs(p.back()) <= cutoff) p.pop_back();
  if (p.empty()) p.push_back(0.0);
  return p;
}

}  // namespace

Poly gcd(Poly a, Poly b, double cutoff) {
  // Work with monic polynomials so the absolute cutoff is meaningful.
  a = trim(std::move(a), 1e-14);
  b = trim(std::move(b), 1e-14);
  if (max_abs_coeff(a) > 0.0) a = scale(a, 1.0 / a.back());
  if (max_abs_coeff(b) > 0.0) b = scale(b, 1.0 / b.back());
  if (degree(a) < degree(b)) std::swap(a, b);
  while (max_abs_coeff(b) > cutoff) {
    b = scale(b, 1.0 / b.back());
    Poly r = trim_abs(divmod(a, b).second, cutoff);
    a = std::move(b);
    b = (max_abs_coeff(r) <= cutoff) ? Poly{0.0} : std::move(r);
  }
  return scale(a, 1.0 / a.back());
}

Poly deflate(const Poly& p, cplx root) {
  if (p.size() <= 1) return Poly{0.0};
  Poly q(p.size() - 1);
  cplx carry = p.back();
  for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
    q[static_cast<std::size_t>(i)] = carry;
    carry = p[static_cast<std::size_t>(i)] + carry * root;
  }
  return q;  // remainder (== p(root)) discarded
}

int order_at(const Poly& p, cplx x, double tol) {
  double scale = 0.0;
  double xp = 1.0;
  for (const auto& c : p) {
    scale += std::abs(c) * xp;
    xp *= std::max(1.0, std::abs(x));
  }
  scale = std::max(scale, 1.0);
  Poly q = p;
  int k = 0;
  while (degree(q) >= 0 && std::abs(eval(q, x)) <= tol * scale && k <= degree(p)) {
    if (degree(q) == 0) break;
    q = deflate(q, x);
    ++k;
  }
  return k;
}

std::vector<cplx> roots(const Poly& p_in) {
  const Poly p = trim(p_in, 1e-14);
  const int n = degree(p);
  if (n <= 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i)
    comp(i, n - 1) = -p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(n)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return out;
}

}  // namespace poly

int Divisor::total_degree() const {
  int total = at_infinity;
  for (const auto& e : finite) total += e.order;
  return total;
}

namespace {

bool is_zero_poly(const Poly& p) {
  for (const auto& c : p)
    if (std::abs(c) > 0.0) return false;
  return true;
}

cplx ipow(cplx base, int e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  cplx r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

RationalFunction::RationalFunction(Poly numerator, Poly denominator)
    : num_(poly::trim(std::move(numerator))), den_(poly::trim(std::move(denominator))) {
  if (is_zero_poly(num_)) throw Error("zero numerator");
  if (is_zero_poly(den_)) throw Error("zero denominator");
  const Poly g = poly::gcd(num_, den_);
  if (poly::degree(g) > 0) {
    num_ = poly::divmod(num_, g).first;
    den_ = poly::divmod(den_, g).first;
  }
  const cplx lead = den_.back();
  num_ = poly::scale(num_, 1.0 / lead);
  den_ = poly::scale(den_, 1.0 / lead);
}

RationalFunction RationalFunction::constant(cplx c) {
  return RationalFunction(Poly{c}, Poly{1.0});
}

RationalFunction RationalFunction::z() {
  return RationalFunction(Poly{0.0, 1.0}, Poly{1.0});
}

cplx RationalFunction::operator()(cplx z) const {
  return poly::eval(num_, z) / poly::eval(den_, z);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  return RationalFunction(poly::mul(num_, other.num_), poly::mul(den_, other.den_));
}

RationalFunction RationalFunction::inverse() const {
  return RationalFunction(den_, num_);
}

namespace {

// Distinct root locations of p, clustered within tol.
std::vector<cplx> distinct_roots(const Poly& p, double tol = 1e-6) {
  std::vector<cplx> all = poly::roots(p);
  std::vector<cplx> out;
  std::vector<int> count;
  for (const auto& r : all) {
    bool merged = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (std::abs(out[i] - r) < tol) {
        // running mean keeps multiple roots centered
        out[i] = (out[i] * static_cast<double>(count[i]) + r) /
                 static_cast<double>(count[i] + 1);
        ++count[i];
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.push_back(r);
      count.push_back(1);
    }
  }
  return out;
}

}  // namespace

Divisor RationalFunction::divisor() const {
  Divisor d;
  for (const auto& r : distinct_roots(num_)) {
    const int k = poly::order_at(num_, r, 1e-8);
    if (k > 0) d.finite.push_back({r, k});
  }
  for (const auto& r : distinct_roots(den_)) {
    const int k = poly::order_at(den_, r, 1e-8);
    if (k > 0) d.finite.push_back({r, -k});
  }
  d.at_infinity = poly::degree(den_) - poly::degree(num_);
  return d;
}

int order_at(const RationalFunction& f, const Point& x) {
  if (x.is_infinity())
    return poly::degree(f.denominator()) - poly::degree(f.numerator());
  return poly::order_at(f.numerator(), x.value()) -
         poly::order_at(f.denominator(), x.value());
}

namespace {

// f = (z-x)^k u(z) with u(x) finite and nonzero; returns (k, u(x)).
std::pair<int, cplx> leading_part(const RationalFunction& f, const Point& x) {
  if (x.is_infinity()) {
    const int k = poly::degree(f.denominator()) - poly::degree(f.numerator());
    const cplx lead = f.numerator().back() / f.denominator().back();
    return {k, lead};
  }
  const cplx z = x.value();
  Poly num = f.numerator();
  Poly den = f.denominator();
  const int kn = poly::order_at(num, z);
  const int kd = poly::order_at(den, z);
  for (int i = 0; i < kn; ++i) num = poly::deflate(num, z);
  for (int i = 0; i < kd; ++i) den = poly::deflate(den, z);
  return {kn - kd, poly::eval(num, z) / poly::eval(den, z)};
}

}  // namespace

cplx tame_symbol(const RationalFunction& f, const RationalFunction& g, const Point& x) {
  const auto [a, cf] = leading_part(f, x);
  const auto [b, cg] = leading_part(g, x);
  const double sign = (static_cast<long long>(a) * b) % 2 == 0 ? 1.0 : -1.0;
  return sign * ipow(cf, b) / ipow(cg, a);
}

}  // namespace regpair
