#include <gtest/gtest.h>

#include <random>

#include "cvq/error.hpp"
#include "cvq/hilbert.hpp"
#include "oracles.hpp"

using namespace cvq;

namespace {

ComplexMatrix random_hermitian(std::mt19937& rng, Eigen::Index n) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
    }
    return (m + m.adjoint()) / 2.0;
}

ComplexMatrix random_unitary(std::mt19937& rng, Eigen::Index n) {
    return eigh(random_hermitian(rng, n)).eigenvectors;
}

}  // namespace

TEST(Eigh, DiagonalAndPauliX) {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d.diagonal() << 2.0, -1.0, 0.5;
    auto s = eigh(d);
    EXPECT_NEAR(s.eigenvalues(0), -1.0, 1e-12);
    EXPECT_NEAR(s.eigenvalues(1), 0.5, 1e-12);
    EXPECT_NEAR(s.eigenvalues(2), 2.0, 1e-12);
    EXPECT_TRUE(s.nondegenerate());

    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    auto sx = eigh(x);
    EXPECT_NEAR(sx.eigenvalues(0), -1.0, 1e-12);
    // Phase convention: first non-negligible entry real and positive.
    EXPECT_NEAR(sx.eigenvectors(0, 0).real(), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(sx.eigenvectors(1, 0).real(), -1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(sx.eigenvectors(0, 1).imag(), 0.0, 1e-12);
}

TEST(Eigh, ClustersDegenerateEigenvalues) {
    ComplexMatrix d = ComplexMatrix::Zero(4, 4);
    d.diagonal() << 1.0, 1.0, 1.0 + 1e-10, 3.0;
    auto s = eigh(d);
    ASSERT_EQ(s.clusters.size(), 2u);
    EXPECT_EQ(s.clusters[0].multiplicity, 3u);
    EXPECT_NEAR(s.clusters[0].projector.trace().real(), 3.0, 1e-12);
    EXPECT_FALSE(s.nondegenerate());
}

TEST(Eigh, RejectsNonHermitianAndNonSquare) {
    ComplexMatrix a(2, 2);
    a << 0, 1, 0, 0;
    EXPECT_THROW(eigh(a), PreconditionError);
    EXPECT_THROW(eigh(ComplexMatrix::Zero(2, 3)), PreconditionError);
}

TEST(EighProperties, RoundTripOnRandomHermitian) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 16);
        auto a = random_hermitian(rng, n);
        auto s = eigh(a);
        EXPECT_LT(s.reconstruction_error(a), 1e-10);
        EXPECT_LT(unitarity_residual(s.eigenvectors), 1e-10);
        for (Eigen::Index i = 1; i < n; ++i) EXPECT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
        ComplexMatrix sum = ComplexMatrix::Zero(n, n);
        for (const auto& c : s.clusters) sum += c.projector;
        EXPECT_LT(max_abs(sum - ComplexMatrix::Identity(n, n)), 1e-10);
    }
}

TEST(EighProperties, AgreesWithJacobiOnRealSymmetric) {
    std::mt19937 rng(6);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        oracle::RealMatrix r(n, std::vector<double>(n));
        ComplexMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                r[i][j] = r[j][i] = normal(rng);
                a(i, j) = a(j, i) = r[i][j];
            }
        }
        auto expected = oracle::jacobi_eigenvalues(r);
        auto s = eigh(a);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(s.eigenvalues(i), expected[i], 1e-9);
    }
}

TEST(Tensor, MixedProductLaw) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_hermitian(rng, 2), b = random_hermitian(rng, 3);
        auto c = random_hermitian(rng, 2), d = random_hermitian(rng, 3);
        EXPECT_LT(max_abs(tensor(a, b) * tensor(c, d) - tensor(ComplexMatrix(a * c), ComplexMatrix(b * d))), 1e-10);
    }
    StateVector u(2), v(2);
    u << 1, 0;
    v << 0, 1;
    StateVector uv = tensor(u, v);
    EXPECT_EQ(uv.size(), 4);
    EXPECT_NEAR(std::abs(uv(1) - 1.0), 0.0, 1e-15);
}

TEST(Unitarity, RandomUnitariesAndFailures) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 30; ++trial) EXPECT_TRUE(is_unitary(random_unitary(rng, 1 + rng() % 8)));
    ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 2.0;
    EXPECT_FALSE(is_unitary(m));
}

TEST(FixPhase, FirstSignificantEntryRealPositive) {
    StateVector v(3);
    v << Complex(0, 0), Complex(0, -2), Complex(1, 1);
    fix_phase(v);
    EXPECT_NEAR(v(1).real(), 2.0, 1e-12);
    EXPECT_NEAR(v(1).imag(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(v(2)), std::sqrt(2.0), 1e-12);
}

TEST(SpanProjector, RankDeficientColumns) {
    ComplexMatrix cols(3, 2);
    cols << 1, 2, 0, 0, 0, 0;
    auto p = span_projector(cols);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(inner(StateVector::Unit(3, 0), cvq::apply(p, StateVector::Unit(3, 0)))), 1.0, 1e-12);
}
