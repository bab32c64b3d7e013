#include "regpair/circle.hpp"

#include <algorithm>
#include <cmath>

namespace regpair {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT; sign = -1 for the forward transform
// (e^{-ik theta} kernel), +1 for the inverse.  Unnormalized.
void fft(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * two_pi / static_cast<double>(len);
    const cplx wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

std::vector<cplx> forward_dft(const std::vector<cplx>& samples) {
  std::vector<cplx> c = samples;
  fft(c, -1);
  const double inv = 1.0 / static_cast<double>(c.size());
  for (auto& x : c) x *= inv;
  return c;
}

}  // namespace

CircleFunction::CircleFunction(std::vector<cplx> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 16 || !is_pow2(samples_.size()))
    throw Error("grid size must be a power of two >= 16, got " +
                std::to_string(samples_.size()));
  coeffs_ = forward_dft(samples_);
}

CircleFunction::CircleFunction(std::vector<cplx> samples, std::vector<cplx> dft)
    : samples_(std::move(samples)), coeffs_(std::move(dft)) {}

CircleFunction CircleFunction::constant(std::size_t grid, cplx c) {
  return CircleFunction(std::vector<cplx>(grid, c));
}

CircleFunction CircleFunction::harmonic(std::size_t grid, int k, cplx amplitude) {
  std::vector<cplx> s(grid);
  for (std::size_t j = 0; j < grid; ++j)
    s[j] = amplitude * std::polar(1.0, k * two_pi * static_cast<double>(j) / static_cast<double>(grid));
  return CircleFunction(std::move(s));
}

CircleFunction CircleFunction::sampled(std::size_t grid, const std::function<cplx(double)>& f) {
  std::vector<cplx> s(grid);
  for (std::size_t j = 0; j < grid; ++j)
    s[j] = f(two_pi * static_cast<double>(j) / static_cast<double>(grid));
  return CircleFunction(std::move(s));
}

CircleFunction CircleFunction::from_coefficients(
    std::size_t grid, const std::vector<std::pair<int, cplx>>& coeffs) {
  if (grid < 16 || !is_pow2(grid))
    throw Error("grid size must be a power of two >= 16");
  const int g = static_cast<int>(grid);
  std::vector<cplx> dft(grid, 0.0);
  for (const auto& [k, c] : coeffs) {
    if (k < -g / 2 || k >= g / 2)
      throw Error("coefficient index " + std::to_string(k) + " outside grid band");
    dft[static_cast<std::size_t>((k % g + g) % g)] += c;
  }
  std::vector<cplx> s = dft;
  fft(s, +1);  // inverse of the normalized forward transform needs no 1/G
  return CircleFunction(std::move(s), std::move(dft));
}

cplx CircleFunction::coeff(int k) const {
  const int g = static_cast<int>(grid());
  if (k < -g / 2 || k >= g / 2) return 0.0;
  return coeffs_[static_cast<std::size_t>((k % g + g) % g)];
}

std::vector<cplx> CircleFunction::spectrum() const {
  const int g = static_cast<int>(grid());
  std::vector<cplx> out;
  out.reserve(grid());
  for (int k = -g / 2; k < g / 2; ++k) out.push_back(coeff(k));
  return out;
}

double CircleFunction::min_abs() const {
  double m = std::abs(samples_[0]);
  for (const auto& s : samples_) m = std::min(m, std::abs(s));
  return m;
}

double CircleFunction::max_abs() const {
  double m = 0.0;
  for (const auto& s : samples_) m = std::max(m, std::abs(s));
  return m;
}

int CircleFunction::bandwidth(double tol) const {
  const int g = static_cast<int>(grid());
  int bw = 0;
  for (int k = -g / 2; k < g / 2; ++k)
    if (std::abs(coeff(k)) > tol) bw = std::max(bw, std::abs(k));
  return bw;
}

void CircleFunction::require_resolved() const {
  const int g = static_cast<int>(grid());
  const double nyq = std::abs(coeff(-g / 2));
  if (nyq >= resolved_tol)
    throw UnderResolved("Nyquist coefficient " + std::to_string(nyq) +
                        " at grid " + std::to_string(grid()));
}

void CircleFunction::require_nonvanishing() const {
  if (min_abs() <= vanish_tol)
    throw NearZeroSymbol("min |f| = " + std::to_string(min_abs()) +
                         " on the grid");
}

CircleFunction CircleFunction::reciprocal() const {
  require_nonvanishing();
  std::vector<cplx> s(grid());
  for (std::size_t j = 0; j < grid(); ++j) s[j] = 1.0 / samples_[j];
  return CircleFunction(std::move(s));
}

CircleFunction CircleFunction::exp() const {
  std::vector<cplx> s(grid());
  for (std::size_t j = 0; j < grid(); ++j) s[j] = std::exp(samples_[j]);
  return CircleFunction(std::move(s));
}

CircleFunction CircleFunction::scaled(cplx factor) const {
  std::vector<cplx> s(grid());
  for (std::size_t j = 0; j < grid(); ++j) s[j] = factor * samples_[j];
  return CircleFunction(std::move(s));
}

void require_same_grid(const CircleFunction& a, const CircleFunction& b) {
  if (a.grid() != b.grid())
    throw GridMismatch("grids " + std::to_string(a.grid()) + " and " +
                       std::to_string(b.grid()) + "; resample first");
}

CircleFunction operator+(const CircleFunction& a, const CircleFunction& b) {
  require_same_grid(a, b);
  std::vector<cplx> s(a.grid());
  for (std::size_t j = 0; j < a.grid(); ++j) s[j] = a.samples_[j] + b.samples_[j];
  return CircleFunction(std::move(s));
}

CircleFunction operator-(const CircleFunction& a, const CircleFunction& b) {
  require_same_grid(a, b);
  std::vector<cplx> s(a.grid());
  for (std::size_t j = 0; j < a.grid(); ++j) s[j] = a.samples_[j] - b.samples_[j];
  return CircleFunction(std::move(s));
}

CircleFunction operator*(const CircleFunction& a, const CircleFunction& b) {
  require_same_grid(a, b);
  std::vector<cplx> s(a.grid());
  for (std::size_t j = 0; j < a.grid(); ++j) s[j] = a.samples_[j] * b.samples_[j];
  return CircleFunction(std::move(s));
}

CircleFunction operator-(const CircleFunction& a) { return a.scaled(-1.0); }

int winding_number(const CircleFunction& p) {
  p.require_nonvanishing();
  const std::size_t g = p.grid();
  double total = 0.0;
  for (std::size_t j = 0; j < g; ++j) {
    const cplx ratio = p.sample((j + 1) % g) / p.sample(j);
    const double d = std::arg(ratio);
    if (std::abs(d) >= pi / 2.0)
      throw AliasedArgument("argument step " + std::to_string(d) +
                            " at sample " + std::to_string(j) +
                            "; grid too coarse");
    total += d;
  }
  return static_cast<int>(std::lround(total / two_pi));
}

LogDecomposition continuous_log(const CircleFunction& p, int branch) {
  const int m = winding_number(p);
  const std::size_t g = p.grid();

  // r = p e^{-im theta} has winding zero; accumulate its argument.
  std::vector<cplx> r(g);
  for (std::size_t j = 0; j < g; ++j)
    r[j] = p.sample(j) * std::polar(1.0, -m * two_pi * static_cast<double>(j) / static_cast<double>(g));

  std::vector<cplx> log_samples(g);
  double phase = std::arg(r[0]) + two_pi * branch;
  log_samples[0] = cplx(std::log(std::abs(r[0])), phase);
  for (std::size_t j = 1; j < g; ++j) {
    phase += std::arg(r[j] / r[j - 1]);
    log_samples[j] = cplx(std::log(std::abs(r[j])), phase);
  }
  return LogDecomposition{m, CircleFunction(std::move(log_samples))};
}

CircleFunction spectral_derivative(const CircleFunction& f) {
  const int g = static_cast<int>(f.grid());
  std::vector<std::pair<int, cplx>> dc;
  dc.reserve(f.grid());
  for (int k = -g / 2 + 1; k < g / 2; ++k) {
    const cplx c = f.coeff(k);
    if (c != 0.0) dc.emplace_back(k, iu * static_cast<double>(k) * c);
  }
  return CircleFunction::from_coefficients(f.grid(), dc);
}

cplx periodic_integral(const CircleFunction& f) {
  cplx total = 0.0;
  for (const auto& s : f.samples()) total += s;
  return total * two_pi / static_cast<double>(f.grid());
}

}  // namespace regpair
