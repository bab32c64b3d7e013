#include "regpair/loop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace regpair {

namespace {

std::vector<std::pair<int, cplx>> merge_coeffs(
    const std::vector<std::pair<int, cplx>>& a,
    const std::vector<std::pair<int, cplx>>& b, cplx b_factor) {
  std::vector<std::pair<int, cplx>> out = a;
  for (const auto& [k, c] : b) {
    bool found = false;
    for (auto& [k2, c2] : out) {
      if (k2 == k) {
        c2 += b_factor * c;
        found = true;
        break;
      }
    }
    if (!found) out.emplace_back(k, b_factor * c);
  }
  std::erase_if(out, [](const auto& e) { return std::abs(e.second) == 0.0; });
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace

Loop::Loop(std::vector<std::pair<int, cplx>> coeffs, std::string label)
    : coeffs_(std::move(coeffs)), label_(std::move(label)) {}

Loop Loop::circle(cplx center, double radius) {
  if (radius <= 0.0) throw Error("circle radius must be positive");
  std::ostringstream label;
  label << "circle(" << center.real() << "," << center.imag() << "," << radius << ")";
  return Loop({{0, center}, {1, radius}}, label.str());
}

Loop Loop::fourier(std::vector<std::pair<int, cplx>> coeffs) {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return Loop(std::move(coeffs), "fourier");
}

Loop Loop::from_samples(const std::vector<cplx>& samples) {
  CircleFunction f{samples};
  const int g = static_cast<int>(f.grid());
  std::vector<std::pair<int, cplx>> coeffs;
  for (int k = -g / 2; k < g / 2; ++k) {
    const cplx c = f.coeff(k);
    if (std::abs(c) > 1e-15) coeffs.emplace_back(k, c);
  }
  return Loop(std::move(coeffs), "sampled");
}

cplx Loop::operator()(double theta) const {
  cplx z = 0.0;
  for (const auto& [k, c] : coeffs_) z += c * std::polar(1.0, k * theta);
  return z;
}

std::vector<cplx> Loop::sample(std::size_t grid) const {
  std::vector<cplx> s(grid);
  for (std::size_t j = 0; j < grid; ++j)
    s[j] = (*this)(two_pi * static_cast<double>(j) / static_cast<double>(grid));
  return s;
}

Loop Loop::deformed(const Loop& direction, double t) const {
  if (t == 0.0) return *this;
  return Loop(merge_coeffs(coeffs_, direction.coeffs_, t), label_ + "+deform");
}

Loop Loop::reparameterized(const std::vector<std::pair<int, cplx>>& shift_coeffs) const {
  const std::size_t check_grid = 4096;
  auto shift = [&](double theta) {
    cplx s = 0.0;
    for (const auto& [k, c] : shift_coeffs) s += c * std::polar(1.0, k * theta);
    return s;
  };
  // phi' = 1 + sum ik s_k e^{ik theta} must stay positive.
  for (std::size_t j = 0; j < check_grid; ++j) {
    const double theta = two_pi * static_cast<double>(j) / static_cast<double>(check_grid);
    cplx d = 1.0;
    for (const auto& [k, c] : shift_coeffs)
      d += iu * static_cast<double>(k) * c * std::polar(1.0, k * theta);
    if (d.real() <= 0.0)
      throw NotDiffeomorphism("phi' = " + std::to_string(d.real()) +
                              " at theta = " + std::to_string(theta));
  }
  std::vector<cplx> s(check_grid);
  for (std::size_t j = 0; j < check_grid; ++j) {
    const double theta = two_pi * static_cast<double>(j) / static_cast<double>(check_grid);
    const double phi = theta + shift(theta).real();
    s[j] = (*this)(phi);
  }
  Loop out = from_samples(s);
  out.label_ = label_ + "+reparam";
  return out;
}

CircleFunction compose(const RationalFunction& f, const Loop& gamma, std::size_t grid) {
  const std::vector<cplx> pts = gamma.sample(grid);

  const Divisor div = f.divisor();
  std::vector<cplx> colliding;
  for (const auto& entry : div.finite) {
    double dist = std::abs(pts[0] - entry.point);
    for (const auto& z : pts) dist = std::min(dist, std::abs(z - entry.point));
    if (dist <= vanish_tol) colliding.push_back(entry.point);
  }
  if (!colliding.empty())
    throw DivisorCollision("loop meets the divisor of the symbol at " +
                               std::to_string(colliding.size()) + " point(s)",
                           colliding);

  std::vector<cplx> s(grid);
  for (std::size_t j = 0; j < grid; ++j) s[j] = f(pts[j]);
  CircleFunction out{std::move(s)};
  out.require_resolved();
  return out;
}

}  // namespace regpair
