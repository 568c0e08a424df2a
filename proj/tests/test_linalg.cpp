#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

#include "privnet/error.hpp"
#include "privnet/linalg.hpp"
#include "privnet/random.hpp"
#include "privnet/states.hpp"

using namespace privnet;

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  return out;
}

CMatrix ginibre(std::size_t n, Rng& rng) {
  CMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.complex_normal();
  return m;
}

CMatrix random_hermitian(std::size_t n, Rng& rng) {
  const CMatrix g = ginibre(n, rng);
  return (g + g.adjoint()) * Complex(0.5);
}

std::size_t index_of(std::initializer_list<std::size_t> digits, const TensorStructure& s) {
  const std::vector<std::size_t> d(digits);
  return s.index(d);
}

}  // namespace

TEST(CMatrix, BasicArithmetic) {
  const CMatrix a{{1.0, Complex(0, 2)}, {3.0, 4.0}};
  const CMatrix b = CMatrix::identity(2);
  EXPECT_EQ(a * b, a);
  EXPECT_EQ(a.trace(), Complex(5.0));
  EXPECT_EQ(a.adjoint()(0, 1), 3.0);
  EXPECT_EQ(a.adjoint()(1, 0), Complex(0, -2));
  EXPECT_EQ(a.transpose()(1, 0), Complex(0, 2));
  EXPECT_EQ((a - a), CMatrix(2));
  EXPECT_EQ(CMatrix::diagonal({1.0, 2.0})(1, 1), 2.0);
  EXPECT_DOUBLE_EQ(frobenius_norm(b), std::sqrt(2.0));
}

TEST(CMatrix, HermitianAndUnitaryPredicates) {
  EXPECT_TRUE(is_hermitian(CMatrix{{1.0, Complex(0, 1)}, {Complex(0, -1), 2.0}}));
  EXPECT_FALSE(is_hermitian(CMatrix{{1.0, 1.0}, {0.0, 2.0}}));
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_TRUE(is_unitary(CMatrix{{s, s}, {s, -s}}));
  EXPECT_FALSE(is_unitary(CMatrix{{1.0, 1.0}, {0.0, 1.0}}));
}

TEST(TensorStructure, MixedRadixFirstFactorMostSignificant) {
  const TensorStructure s{2, 3, 4};
  EXPECT_EQ(s.total_dim(), 24u);
  EXPECT_EQ(index_of({1, 2, 3}, s), 1u * 12 + 2u * 4 + 3u);
  EXPECT_EQ(s.digits(23), (std::vector<std::size_t>{1, 2, 3}));
  for (std::size_t i = 0; i < s.total_dim(); ++i) EXPECT_EQ(s.index(s.digits(i)), i);
  const std::vector<std::size_t> f{0, 2};
  EXPECT_EQ(s.subspace_dim(f), 8u);
}

TEST(HermEig, DiagonalInputKeepsValuesSortedDescending) {
  const auto eig = herm_eig(CMatrix::diagonal({0.25, 1.0, -3.0}));
  EXPECT_EQ(eig.values, (std::vector<double>{1.0, 0.25, -3.0}));
}

TEST(HermEig, PauliY) {
  const CMatrix y{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
  const auto v = herm_eigenvalues(y);
  EXPECT_NEAR(v[0], 1.0, 1e-14);
  EXPECT_NEAR(v[1], -1.0, 1e-14);
}

TEST(HermEig, MatchesEigenOnRandomHermitian) {
  Rng rng(101);
  for (std::size_t n : {1u, 2u, 5u, 8u, 16u, 36u}) {
    const CMatrix h = random_hermitian(n, rng);
    const auto eig = herm_eig(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(h));
    std::vector<double> expected(ref.eigenvalues().data(), ref.eigenvalues().data() + n);
    std::sort(expected.rbegin(), expected.rend());
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(eig.values[k], expected[k], 1e-10) << "n=" << n;
    // Reconstruction V diag V^dagger.
    std::vector<double> vals = eig.values;
    const CMatrix rebuilt = eig.vectors * CMatrix::diagonal(vals) * eig.vectors.adjoint();
    EXPECT_LT(max_abs_diff(rebuilt, h), 1e-10);
    EXPECT_TRUE(is_unitary(eig.vectors, 1e-10));
  }
}

TEST(HermEig, DegenerateSpectrum) {
  Rng rng(5);
  const CMatrix u = random_unitary(6, rng);
  const CMatrix h = u * CMatrix::diagonal({2.0, 2.0, 2.0, -1.0, -1.0, 0.0}) * u.adjoint();
  const auto v = herm_eigenvalues(h);
  const std::vector<double> expected{2.0, 2.0, 2.0, 0.0, -1.0, -1.0};
  for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(v[k], expected[k], 1e-12);
}

TEST(HermEig, RejectsNonHermitianAndBadShape) {
  try {
    herm_eig(CMatrix{{1.0, 1.0}, {0.0, 1.0}});
    FAIL() << "expected NotHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
  try {
    herm_eig(CMatrix());
    FAIL() << "expected StructureMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StructureMismatch);
  }
}

TEST(TraceNorm, SimpleCases) {
  EXPECT_NEAR(trace_norm(CMatrix{{0.0, 1.0}, {0.0, 0.0}}), 1.0, 1e-15);
  EXPECT_NEAR(trace_norm(CMatrix::diagonal({0.5, -0.25, 0.0})), 0.75, 1e-15);
  EXPECT_EQ(trace_norm(CMatrix(3)), 0.0);
  // Swap operator on 2x2 has eigenvalues {1, 1, 1, -1}.
  EXPECT_NEAR(trace_norm(swap_operator(2)), 4.0, 1e-14);
}

TEST(TraceNorm, MatchesEigenSvdOnRandomMatrices) {
  Rng rng(202);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(12);
    const CMatrix m = ginibre(n, rng);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    EXPECT_NEAR(trace_norm(m), svd.singularValues().sum(), 1e-10 * n);
    const auto sv = singular_values(m);
    EXPECT_TRUE(std::is_sorted(sv.rbegin(), sv.rend()));
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(sv[k], svd.singularValues()(k), 1e-10);
  }
}

TEST(TraceNorm, SmallSingularValuesStayAccurate) {
  Rng rng(9);
  const CMatrix u = random_unitary(6, rng);
  const CMatrix v = random_unitary(6, rng);
  const CMatrix m = u * CMatrix::diagonal({1.0, 0.5, 1e-6, 1e-9, 1e-12, 0.0}) * v;
  const auto sv = singular_values(m);
  EXPECT_NEAR(sv[2], 1e-6, 1e-14);
  EXPECT_NEAR(sv[3], 1e-9, 1e-14);
  EXPECT_LT(sv[5], 1e-14);
}

TEST(Kron, DimensionsAndEntries) {
  const CMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const CMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const CMatrix k = kron(a, b);
  ASSERT_EQ(k.dim(), 4u);
  EXPECT_EQ(k(0, 1), 1.0);
  EXPECT_EQ(k(1, 2), 2.0);
  EXPECT_EQ(k(2, 3), 4.0);
  EXPECT_EQ(k(3, 2), 4.0);
  EXPECT_EQ(k(1, 3), 0.0);
}

TEST(PartialTrace, ProductStates) {
  Rng rng(3);
  const CMatrix a = random_density(2, rng);
  const CMatrix b = random_density(3, rng);
  const CMatrix c = random_density(2, rng);
  const CMatrix abc = kron(kron(a, b), c);
  const TensorStructure s{2, 3, 2};
  EXPECT_LT(max_abs_diff(partial_trace(abc, s, {1}), b), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(abc, s, {0, 2}), kron(a, c)), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(abc, s, {2, 0}), kron(a, c)), 1e-14);
  EXPECT_NEAR(partial_trace(abc, s, {})(0, 0).real(), 1.0, 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(abc, s, {0, 1, 2}), abc), 1e-15);
}

TEST(PartialTrace, RejectsBadFactors) {
  const TensorStructure s{2, 2};
  EXPECT_THROW(partial_trace(CMatrix::identity(4), s, {2}), Error);
  EXPECT_THROW(partial_trace(CMatrix::identity(3), s, {0}), Error);
}

TEST(PartialTranspose, ProductOperatorsTransposeOnlySelectedFactors) {
  Rng rng(4);
  const CMatrix a = ginibre(2, rng);
  const CMatrix b = ginibre(3, rng);
  const TensorStructure s{2, 3};
  EXPECT_EQ(partial_transpose(kron(a, b), s, {1}), kron(a, b.transpose()));
  EXPECT_EQ(partial_transpose(kron(a, b), s, {0}), kron(a.transpose(), b));
  EXPECT_EQ(partial_transpose(kron(a, b), s, {0, 1}), kron(a, b).transpose());
  EXPECT_EQ(partial_transpose(kron(a, b), s, {}), kron(a, b));
}

TEST(PartialTranspose, MaximallyEntangledGivesSwapOverD) {
  for (std::size_t d : {2u, 3u}) {
    const CMatrix phi = max_entangled(d).matrix();
    const CMatrix pt = partial_transpose(phi, TensorStructure{d, d}, {1});
    EXPECT_LT(max_abs_diff(pt, swap_operator(d) * Complex(1.0 / d)), 1e-15);
    EXPECT_NEAR(trace_norm(pt), static_cast<double>(d), 1e-12);
  }
}

TEST(PermuteFactors, SwapsProductOrder) {
  Rng rng(6);
  const CMatrix a = ginibre(2, rng);
  const CMatrix b = ginibre(3, rng);
  const CMatrix c = ginibre(2, rng);
  const TensorStructure s{2, 3, 2};
  const std::vector<std::size_t> order{2, 0, 1};
  EXPECT_LT(max_abs_diff(permute_factors(kron(kron(a, b), c), s, order), kron(kron(c, a), b)), 1e-14);
}

TEST(Psd, Classification) {
  EXPECT_TRUE(is_psd(CMatrix::diagonal({1.0, 0.0})));
  EXPECT_TRUE(is_psd(CMatrix::diagonal({1.0, -1e-12})));
  EXPECT_FALSE(is_psd(CMatrix::diagonal({1.0, -1e-6})));
  EXPECT_NEAR(min_eigenvalue(CMatrix::diagonal({3.0, -2.0, 1.0})), -2.0, 1e-15);
  EXPECT_THROW(is_psd(CMatrix{{1.0, 1.0}, {0.0, 1.0}}), Error);
}

TEST(HermApply, SquareRootSquaresBack) {
  Rng rng(8);
  const CMatrix rho = random_density(5, rng);
  const CMatrix root = herm_apply(rho, [](double x) { return std::sqrt(std::max(x, 0.0)); });
  EXPECT_LT(max_abs_diff(root * root, rho), 1e-12);
}

TEST(Rng, DeterministicStreams) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform(), b.uniform());
  EXPECT_EQ(stream_seed(1, "obs1", 3), stream_seed(1, "obs1", 3));
  EXPECT_NE(stream_seed(1, "obs1", 3), stream_seed(1, "obs1", 4));
  EXPECT_NE(stream_seed(1, "obs1", 3), stream_seed(1, "obs3", 3));
  EXPECT_NE(stream_seed(1, "obs1", 3), stream_seed(2, "obs1", 3));
}

TEST(Rng, UniformRangeAndMoments) {
  Rng rng(11);
  double sum = 0.0;
  double sq = 0.0;
  constexpr int kN = 20000;
  for (int i = 0; i < kN; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / kN, 0.0, 0.05);
  EXPECT_NEAR(sq / kN, 1.0, 0.05);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(7), 7u);
}
