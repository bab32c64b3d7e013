#include <doctest.h>

#include <cmath>
#include <random>

#include "regpair/regulator.hpp"
#include "regpair/selftest.hpp"
#include "regpair/toeplitz.hpp"

using namespace regpair;

namespace {
const std::size_t G = 1024;
}

TEST_CASE("toeplitz truncations of elementary symbols") {
  const ToeplitzTruncation shift = toeplitz_matrix(CircleFunction::harmonic(G, 1), 3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(shift.matrix(j, k) - (j - k == 1 ? 1.0 : 0.0)) < 1e-13);

  const ToeplitzTruncation scalar = toeplitz_matrix(CircleFunction::constant(G, cplx(2.0, 1.0)), 4);
  CHECK((scalar.matrix - cplx(2.0, 1.0) * Mat::Identity(4, 4)).norm() < 1e-12);

  const CircleFunction two_sided =
      CircleFunction::harmonic(G, 1) + CircleFunction::harmonic(G, -1);
  const ToeplitzTruncation tri = toeplitz_matrix(two_sided, 5);
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k)
      CHECK(std::abs(tri.matrix(j, k) - (std::abs(j - k) == 1 ? 1.0 : 0.0)) < 1e-13);
}

TEST_CASE("truncated shift identities away from the edge") {
  const int n = 32;
  const Mat s = toeplitz_matrix(CircleFunction::harmonic(G, 1), n).matrix;
  const Mat sa = s.adjoint();
  const int keep = n - 2;  // edge rows excluded

  const Mat ss = sa * s;  // S*S = I
  CHECK((ss.topLeftCorner(keep, keep) - Mat::Identity(keep, keep)).norm() < 1e-12);

  Mat proj0 = Mat::Zero(n, n);
  proj0(0, 0) = 1.0;
  const Mat sss = s * sa;  // SS* = I - P0
  CHECK((sss - (Mat::Identity(n, n) - proj0)).topLeftCorner(keep, keep).norm() < 1e-12);

  Mat proj01 = proj0;
  proj01(1, 1) = 1.0;
  const Mat s2 = (s * s) * (sa * sa);  // S^2 S*^2 = I - P0 - P1
  CHECK((s2 - (Mat::Identity(n, n) - proj01)).topLeftCorner(keep, keep).norm() < 1e-12);
}

TEST_CASE("toeplitz guards") {
  const CircleFunction bad = CircleFunction::from_coefficients(16, {{-8, 1.0}, {0, 2.0}});
  CHECK_THROWS_AS(toeplitz_matrix(bad, 4), UnderResolved);
  CHECK_THROWS_AS(toeplitz_matrix(CircleFunction::constant(16, 1.0), 9), Error);
}

TEST_CASE("block operator special cases") {
  const int n = 16;
  const BlockOperator id = h_block(CircleFunction::constant(G, 1.0), n);
  CHECK((id.a - Mat::Identity(n, n)).norm() < 1e-12);
  CHECK(id.b.norm() < 1e-12);
  CHECK(id.c.norm() < 1e-12);
  CHECK((id.d - Mat::Identity(n, n)).norm() < 1e-12);

  const cplx c(3.0, 0.0);
  const BlockOperator scalar = h_block(CircleFunction::constant(G, c), n);
  CHECK((scalar.a - c * Mat::Identity(n, n)).norm() < 1e-12);
  CHECK(scalar.b.norm() < 1e-12);
  CHECK(scalar.c.norm() < 1e-12);
  CHECK((scalar.d - (1.0 / c) * Mat::Identity(n, n)).norm() < 1e-12);

  // H(z) = (S, -P0; 0, S*) away from the edge rows
  const BlockOperator hz = h_block(CircleFunction::harmonic(G, 1), n);
  const Mat s = toeplitz_matrix(CircleFunction::harmonic(G, 1), n).matrix;
  const int keep = n - 2;
  CHECK((hz.a - s).topLeftCorner(keep, keep).norm() < 1e-12);
  Mat proj0 = Mat::Zero(n, n);
  proj0(0, 0) = 1.0;
  CHECK((hz.b + proj0).topLeftCorner(keep, keep).norm() < 1e-12);
  CHECK(hz.c.topLeftCorner(keep, keep).norm() < 1e-12);
  CHECK((hz.d - s.adjoint()).topLeftCorner(keep, keep).norm() < 1e-12);
}

TEST_CASE("j conjugation") {
  const int n = 4;
  BlockOperator x{Mat::Random(n, n), Mat::Random(n, n), Mat::Random(n, n), Mat::Random(n, n), n};
  const BlockOperator jxj = j_conjugate(x);
  Mat j = Mat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = Mat::Identity(n, n);
  j.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  CHECK((jxj.dense() - j * x.dense() * j).norm() < 1e-12);
}

TEST_CASE("steinberg operator determinant pinned values") {
  const CircleFunction z = CircleFunction::harmonic(G, 1);
  const DeterminantResult zz = steinberg_operator_determinant(z, z, 192, 32);
  CHECK(std::abs(zz.value - cplx(-1.0)) < 1e-6);

  const DeterminantResult cz =
      steinberg_operator_determinant(CircleFunction::constant(G, 2.0), z, 192, 32);
  CHECK(std::abs(cz.value - cplx(2.0)) < 1e-6);

  const CircleFunction ecos =
      CircleFunction::sampled(G, [](double t) { return std::exp(std::cos(t)); });
  const DeterminantResult ze = steinberg_operator_determinant(z, ecos, 192, 32);
  CHECK(std::abs(ze.value - cplx(1.0)) < 1e-5);
  CHECK(ze.convergence_history.size() == 3);
}

TEST_CASE("steinberg operator determinant vs closed form") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    const CircleFunction p = selftest::random_symbol(rng, G, 2, 6, 0.4);
    const CircleFunction q = selftest::random_symbol(rng, G, 2, 6, 0.4);
    const cplx oracle = regulator_fourier({p, q}).value;
    const cplx det = steinberg_operator_determinant(p, q, 256, 48).value;
    CHECK(std::abs(det / oracle - 1.0) < 1e-4);
  }
}

TEST_CASE("padding rule enforced") {
  std::mt19937_64 rng(32);
  const CircleFunction p = selftest::random_symbol(rng, G, 1, 8, 0.4);
  const CircleFunction q = selftest::random_symbol(rng, G, 1, 8, 0.4);
  CHECK_THROWS_AS(steinberg_operator_determinant(p, q, 40, 32), PaddingTooSmall);
}

TEST_CASE("multiplicative commutator determinant") {
  const CircleFunction a = CircleFunction::harmonic(G, 1, 0.3);
  const CircleFunction b = CircleFunction::harmonic(G, -1, 0.2);
  const DeterminantResult d = commutator_determinant(a, b, 256, 48);
  CHECK(std::abs(d.value - std::exp(-0.06)) < 1e-6);
  // guard against the full-truncation pitfall: det of the whole commutator is 1
  CHECK(std::abs(d.value - 1.0) > 0.05);

  CHECK(std::abs(commutator_determinant(a, a, 128, 32).value - 1.0) < 1e-10);
  const CircleFunction c = CircleFunction::constant(G, cplx(0.4, 0.1));
  CHECK(std::abs(commutator_determinant(a, c, 128, 32).value - 1.0) < 1e-10);
}

TEST_CASE("helton howe closed form") {
  const CircleFunction a = CircleFunction::harmonic(G, 1, 0.3);
  const CircleFunction b = CircleFunction::harmonic(G, -1, 0.2);
  CHECK(std::abs(helton_howe_value(a, b) - std::exp(-0.06)) < 1e-13);
  CHECK(std::abs(helton_howe_value(a, a) - 1.0) < 1e-13);
  CHECK(std::abs(helton_howe_value(a, CircleFunction::constant(G, 5.0)) - 1.0) < 1e-13);
}

TEST_CASE("commutator determinant matches helton howe on random logs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 3; ++trial) {
    const CircleFunction a = selftest::random_log(rng, G, 8, 0.4);
    const CircleFunction b = selftest::random_log(rng, G, 8, 0.4);
    const cplx want = helton_howe_value(a, b);
    const cplx got = commutator_determinant(a, b, 320, 64).value;
    CHECK(std::abs(got / want - 1.0) < 1e-6);
  }
}

TEST_CASE("grothendieck determinant series") {
  CHECK(std::abs(grothendieck_det(Mat::Zero(3, 3), 3) - 1.0) < 1e-14);

  Mat diag = Mat::Zero(2, 2);
  diag(0, 0) = cplx(0.2, 0.1);
  diag(1, 1) = cplx(-0.3, 0.4);
  CHECK(std::abs(grothendieck_det(diag, 2) - (1.0 + diag(0, 0)) * (1.0 + diag(1, 1))) < 1e-14);

  // rank 1: one term is exact
  Eigen::VectorXcd u = Eigen::VectorXcd::Random(5);
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(5);
  const Mat rank1 = u * v.transpose();
  CHECK(std::abs(grothendieck_det(rank1, 1) - (1.0 + (u.transpose() * v).value())) < 1e-12);

  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  for (int n : {3, 6, 9, 12}) {
    Mat k(n, n);
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) k(j, l) = cplx(re(rng), re(rng));
    const cplx direct = determinant_lu(Mat::Identity(n, n) + k);
    CHECK(std::abs(grothendieck_det(k, n) - direct) < 1e-10);
  }
}

TEST_CASE("singular truncation is reported") {
  Mat m = Mat::Zero(3, 3);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;  // third row/column identically zero
  CHECK_THROWS_AS(determinant_lu(m), SingularTruncation);
}

TEST_CASE("hilbert schmidt commutator norm") {
  const CircleFunction mode1 = CircleFunction::harmonic(G, 1);
  CHECK(std::abs(hs_commutator_norm_sq(mode1, HsRoute::integral, 256) - 4.0) < 1e-9);
  CHECK(std::abs(hs_commutator_norm_sq(mode1, HsRoute::matrix, 256) - 4.0) < 1e-9);

  const CircleFunction mode2 = CircleFunction::harmonic(G, 2);
  CHECK(std::abs(hs_commutator_norm_sq(mode2, HsRoute::integral, 256) - 8.0) < 1e-9);
  CHECK(std::abs(hs_commutator_norm_sq(mode2, HsRoute::matrix, 256) - 8.0) < 1e-9);

  CHECK(std::abs(hs_commutator_norm_sq(CircleFunction::constant(G, 3.0), HsRoute::integral, 256)) <
        1e-12);

  const CircleFunction ecos =
      CircleFunction::sampled(G, [](double t) { return std::exp(std::cos(t)); });
  const double via_integral = hs_commutator_norm_sq(ecos, HsRoute::integral, 256);
  const double via_matrix = hs_commutator_norm_sq(ecos, HsRoute::matrix, 256);
  CHECK(std::abs(via_integral / via_matrix - 1.0) < 0.01);
}
