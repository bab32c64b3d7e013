#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "regpair/circle.hpp"

namespace regpair {

using Mat = Eigen::MatrixXcd;

/// Finite section of the Toeplitz operator T(f) on H_+ = span{1, z, z^2, ...}:
/// matrix[j][k] = f_hat(j - k).
struct ToeplitzTruncation {
  int dim;
  Mat matrix;
};

/// Entries f_hat(j-k), j,k in [0,N).  Throws UnderResolved when the symbol
/// fails the Nyquist check and Error when N exceeds the grid band capacity.
ToeplitzTruncation toeplitz_matrix(const CircleFunction& f, int n);

/// 2x2 grid of N x N blocks.
struct BlockOperator {
  Mat a, b, c, d;
  int dim;

  Mat dense() const;
};

/// H(p) = ( (2 - T(p)T(1/p)) T(p) , -1 + T(p)T(1/p) ; 1 - T(1/p)T(p) , T(1/p) ).
BlockOperator h_block(const CircleFunction& p, int n);

/// J X J for J = (0 1; -1 0): ( -d, c ; b, -a ).
BlockOperator j_conjugate(const BlockOperator& x);

struct DeterminantResult {
  cplx value;     // at the largest truncation
  int outer;      // M
  int inner;      // N
  std::vector<std::pair<int, cplx>> convergence_history;  // (M_i, value_i)
};

/// det(J H(-pq) J H(p) H(q)) by finite sections: the product is assembled at
/// internal dimension N and the determinant taken of the leading 2M x 2M
/// principal block (M rows/cols of each N x N block).  History covers
/// M/4, M/2, M.  Requires N >= M + 4 * bandwidth so edge corruption from the
/// matrix products cannot reach the retained block.
DeterminantResult steinberg_operator_determinant(const CircleFunction& p,
                                                 const CircleFunction& q, int n,
                                                 int m);

/// det of the leading M x M block of
/// T_N(e^alpha) T_N(e^beta) T_N(e^alpha)^{-1} T_N(e^beta)^{-1}.
/// Taking the determinant at the full internal dimension would give exactly 1
/// for any truncation, which is the wrong object; the block compression is
/// what converges to the Fredholm determinant.
DeterminantResult commutator_determinant(const CircleFunction& alpha,
                                         const CircleFunction& beta, int n, int m);

/// exp tr(T_{e^alpha} T_{e^beta} - T_{e^beta} T_{e^alpha})
///   = exp( sum_k k alpha_hat(-k) beta_hat(k) ), summed over the grid band.
cplx helton_howe_value(const CircleFunction& alpha, const CircleFunction& beta);

/// det(1 + K) as the partial sum 1 + tr(^1 K) + tr(^2 K) + ... of
/// exterior-power traces, from eigenvalue power sums via Newton's identities.
cplx grothendieck_det(const Mat& k, int terms);

enum class HsRoute { integral, matrix };

/// Squared Hilbert-Schmidt norm of [M_f, F], F the Hardy-space sign operator.
/// route integral: (1/4 pi^2) double trapezoid of
///   |f(theta)-f(phi)|^2 / sin^2((theta-phi)/2),
/// the removable diagonal filled with its limit 4|f'(theta)|^2.
/// route matrix: 4 sum_{j>=0, k<0} |f_hat(j-k)|^2 truncated at N.
double hs_commutator_norm_sq(const CircleFunction& f, HsRoute route, int n);

/// Determinant via partial-pivot LU, accumulated as log-magnitude plus phase.
/// Throws SingularTruncation when a pivot falls below 1e-13.
cplx determinant_lu(const Mat& a);

}  // namespace regpair
