#include "regpair/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace regpair {

namespace {

void check_pivots(const Eigen::PartialPivLU<Mat>& lu) {
  const auto diag = lu.matrixLU().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i)
    if (std::abs(diag(i)) < 1e-13)
      throw SingularTruncation("LU pivot " + std::to_string(std::abs(diag(i))) +
                               " at index " + std::to_string(i));
}

// Leading 2M x 2M principal block of a 2N x 2N block operator: M rows and
// columns from each N x N block.
Mat principal_block2(const Mat& full, int n, int m) {
  Mat out(2 * m, 2 * m);
  out.topLeftCorner(m, m) = full.block(0, 0, m, m);
  out.topRightCorner(m, m) = full.block(0, n, m, m);
  out.bottomLeftCorner(m, m) = full.block(n, 0, m, m);
  out.bottomRightCorner(m, m) = full.block(n, n, m, m);
  return out;
}

std::vector<int> truncation_ladder(int m) {
  std::vector<int> out;
  for (int mi : {m / 4, m / 2, m})
    if (mi >= 1 && (out.empty() || mi > out.back())) out.push_back(mi);
  return out;
}

}  // namespace

ToeplitzTruncation toeplitz_matrix(const CircleFunction& f, int n) {
  f.require_resolved();
  const int g = static_cast<int>(f.grid());
  if (n < 1 || n > g / 2)
    throw Error("Toeplitz dimension " + std::to_string(n) +
                " exceeds band capacity of grid " + std::to_string(g));
  Mat t(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) t(j, k) = f.coeff(j - k);
  return {n, std::move(t)};
}

Mat BlockOperator::dense() const {
  Mat out(2 * dim, 2 * dim);
  out.topLeftCorner(dim, dim) = a;
  out.topRightCorner(dim, dim) = b;
  out.bottomLeftCorner(dim, dim) = c;
  out.bottomRightCorner(dim, dim) = d;
  return out;
}

BlockOperator h_block(const CircleFunction& p, int n) {
  p.require_nonvanishing();
  const Mat tp = toeplitz_matrix(p, n).matrix;
  const Mat tq = toeplitz_matrix(p.reciprocal(), n).matrix;
  const Mat id = Mat::Identity(n, n);
  const Mat x = tp * tq;  // T(p) T(1/p)
  BlockOperator h;
  h.dim = n;
  h.a = (2.0 * id - x) * tp;
  h.b = -id + x;
  h.c = id - tq * tp;
  h.d = tq;
  return h;
}

BlockOperator j_conjugate(const BlockOperator& x) {
  return {-x.d, x.c, x.b, -x.a, x.dim};
}

DeterminantResult steinberg_operator_determinant(const CircleFunction& p,
                                                 const CircleFunction& q, int n,
                                                 int m) {
  require_same_grid(p, q);
  const CircleFunction pq = p * q;
  int bw = std::max({p.bandwidth(), q.bandwidth(), pq.bandwidth(),
                     p.reciprocal().bandwidth(), q.reciprocal().bandwidth(),
                     pq.reciprocal().bandwidth()});
  if (n < m + 4 * bw)
    throw PaddingTooSmall("need N >= M + 4*bandwidth = " +
                          std::to_string(m + 4 * bw) + ", got N = " +
                          std::to_string(n));

  const Mat jhj = j_conjugate(h_block(-pq, n)).dense();
  const Mat hp = h_block(p, n).dense();
  const Mat hq = h_block(q, n).dense();
  const Mat full = jhj * hp * hq;

  DeterminantResult result;
  result.inner = n;
  result.outer = m;
  for (int mi : truncation_ladder(m)) {
    const cplx d = determinant_lu(principal_block2(full, n, mi));
    result.convergence_history.emplace_back(mi, d);
  }
  result.value = result.convergence_history.back().second;
  return result;
}

DeterminantResult commutator_determinant(const CircleFunction& alpha,
                                         const CircleFunction& beta, int n, int m) {
  require_same_grid(alpha, beta);
  if (m > n) throw PaddingTooSmall("outer truncation exceeds internal dimension");
  const Mat ta = toeplitz_matrix(alpha.exp(), n).matrix;
  const Mat tb = toeplitz_matrix(beta.exp(), n).matrix;
  Eigen::PartialPivLU<Mat> lu_a(ta), lu_b(tb);
  check_pivots(lu_a);
  check_pivots(lu_b);
  const Mat k = ta * tb * lu_a.inverse() * lu_b.inverse() - Mat::Identity(n, n);

  DeterminantResult result;
  result.inner = n;
  result.outer = m;
  for (int mi : truncation_ladder(m)) {
    const Mat block = Mat::Identity(mi, mi) + k.topLeftCorner(mi, mi);
    result.convergence_history.emplace_back(mi, determinant_lu(block));
  }
  result.value = result.convergence_history.back().second;
  return result;
}

cplx helton_howe_value(const CircleFunction& alpha, const CircleFunction& beta) {
  require_same_grid(alpha, beta);
  alpha.require_resolved();
  beta.require_resolved();
  const int kmax = static_cast<int>(alpha.grid()) / 2 - 1;
  cplx sum = 0.0;
  for (int k = -kmax; k <= kmax; ++k)
    sum += static_cast<double>(k) * alpha.coeff(-k) * beta.coeff(k);
  return std::exp(sum);
}

cplx grothendieck_det(const Mat& k, int terms) {
  const int n = static_cast<int>(k.rows());
  if (terms < 1) throw Error("need at least one exterior-power term");
  Eigen::ComplexEigenSolver<Mat> es(k, false);
  const auto& lambda = es.eigenvalues();

  const int t = std::min(terms, n);
  // power sums p_j = sum lambda_i^j
  std::vector<cplx> power(static_cast<std::size_t>(t) + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    cplx acc = 1.0;
    for (int j = 1; j <= t; ++j) {
      acc *= lambda(i);
      power[static_cast<std::size_t>(j)] += acc;
    }
  }
  // Newton's identities: e_j = (1/j) sum_{i=1..j} (-1)^{i-1} p_i e_{j-i}
  std::vector<cplx> elem(static_cast<std::size_t>(t) + 1, 0.0);
  elem[0] = 1.0;
  cplx total = 1.0;
  for (int j = 1; j <= t; ++j) {
    cplx e = 0.0;
    double sign = 1.0;
    for (int i = 1; i <= j; ++i) {
      e += sign * power[static_cast<std::size_t>(i)] * elem[static_cast<std::size_t>(j - i)];
      sign = -sign;
    }
    elem[static_cast<std::size_t>(j)] = e / static_cast<double>(j);
    total += elem[static_cast<std::size_t>(j)];
  }
  return total;
}

double hs_commutator_norm_sq(const CircleFunction& f, HsRoute route, int n) {
  if (route == HsRoute::matrix) {
    // [M_f, F] is twice the two anti-diagonal blocks of M_f in the
    // Hardy-space splitting; both blocks contribute.
    double sum = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = 1; k <= n; ++k) {
        const double cp = std::abs(f.coeff(j + k));
        const double cm = std::abs(f.coeff(-(j + k)));
        sum += 4.0 * (cp * cp + cm * cm);
      }
    return sum;
  }

  const std::size_t g = f.grid();
  const CircleFunction df = spectral_derivative(f);
  double sum = 0.0;
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t l = 0; l < g; ++l) {
      if (j == l) {
        const double d = std::abs(df.sample(j));
        sum += 4.0 * d * d;  // removable-singularity limit on the diagonal
      } else {
        const double diff = std::abs(f.sample(j) - f.sample(l));
        const double s = std::sin(0.5 * (f.theta(j) - f.theta(l)));
        sum += diff * diff / (s * s);
      }
    }
  }
  return sum / (static_cast<double>(g) * static_cast<double>(g));
}

cplx determinant_lu(const Mat& a) {
  Eigen::PartialPivLU<Mat> lu(a);
  check_pivots(lu);
  const auto diag = lu.matrixLU().diagonal();
  double log_mag = 0.0;
  double phase = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    log_mag += std::log(std::abs(diag(i)));
    phase += std::arg(diag(i));
  }
  const double perm_sign = static_cast<double>(lu.permutationP().determinant());
  cplx value = std::exp(cplx(log_mag, phase));
  return perm_sign * value;
}

}  // namespace regpair
