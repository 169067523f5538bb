#include <gtest/gtest.h>

#include <random>

#include "cvq/action.hpp"
#include "cvq/error.hpp"
#include "cvq/operator.hpp"
#include "cvq/spin.hpp"

using namespace cvq;

namespace {

StateVector e(Eigen::Index n, Eigen::Index i) { return StateVector::Unit(n, i); }

ConceptualVariable z4_identity(const SpaceRef& s) { return ConceptualVariable("theta", s, {"0", "1", "2", "3"}, {0, 1, 2, 3}); }

ComplexMatrix diag(std::initializer_list<double> d) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double x : d) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

}  // namespace

TEST(BuildOperator, QubitIsSigmaZ) {
    auto rep = qubit_rep();
    auto theta = ConceptualVariable("theta", rep.group->space(), {"+1", "-1"}, {0, 1});
    auto family = CoherentFamily::make(rep, e(2, 0));
    auto bundle = build_operator(theta, family, 0);
    EXPECT_LT(max_abs(bundle.op - diag({1, -1})), 1e-12);
    ASSERT_EQ(bundle.qa.size(), 2u);
    EXPECT_DOUBLE_EQ(bundle.qa[0].value, -1.0);
    EXPECT_EQ(bundle.qa[1].multiplicity, 1u);
    EXPECT_TRUE(compare_spectrum_to_values(bundle, theta, family, 0).matches);
}

TEST(BuildOperator, CyclicIdentityAndParity) {
    auto rep = cyclic_dft_rep(4);
    const auto& s = rep.group->space();
    auto family = CoherentFamily::make(rep, e(4, 0));
    auto bundle = build_operator(z4_identity(s), family, 0);
    EXPECT_LT(max_abs(bundle.op - diag({0, 1, 2, 3})), 1e-12);
    EXPECT_TRUE(bundle.nondegenerate());

    auto parity = ConceptualVariable("parity", s, {"0", "1"}, {0, 1, 0, 1});
    auto pb = build_operator(parity, family, 0);
    EXPECT_LT(max_abs(pb.op - diag({0, 1, 0, 1})), 1e-12);
    EXPECT_FALSE(pb.nondegenerate());
    EXPECT_EQ(pb.qa[0].multiplicity, 2u);
    EXPECT_THROW(pb.eigenvector(0), PreconditionError);
}

TEST(BuildOperator, RefinementGivesCoarserOperator) {
    auto rep = cyclic_dft_rep(4);
    const auto& s = rep.group->space();
    auto family = CoherentFamily::make(rep, e(4, 0));
    auto fine = build_operator(z4_identity(s), family, 0);
    auto parity = ConceptualVariable("parity", s, {"0", "1"}, {0, 1, 0, 1});
    auto coarse = operator_from_refinement(parity, fine);
    EXPECT_LT(max_abs(coarse.op - diag({0, 1, 0, 1})), 1e-12);
    auto crossed = ConceptualVariable("c", s, {"0", "1"}, {0, 0, 1, 1});
    EXPECT_NO_THROW(operator_from_refinement(crossed, fine));
    EXPECT_THROW(operator_from_refinement(z4_identity(s), coarse), PreconditionError);
}

TEST(BuildOperator, NonOrthogonalStatesAreOutOfScope) {
    auto rep = qubit_rep();
    auto theta = ConceptualVariable("theta", rep.group->space(), {"+1", "-1"}, {0, 1});
    StateVector base(2);
    base << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    try {
        build_operator(theta, CoherentFamily::make(rep, base), 0);
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& err) {
        EXPECT_NE(std::string(err.what()).find("outside orthogonal-coherent scope"), std::string::npos);
    }
}

TEST(Conjugation, ShiftedCyclicOperator) {
    auto rep = cyclic_dft_rep(4);
    const auto& s = rep.group->space();
    auto family = CoherentFamily::make(rep, e(4, 0));
    auto theta = z4_identity(s);
    const auto shift = *rep.group->index_of(Permutation({1, 2, 3, 0}));
    auto shifted = build_operator(compose(theta, rep.group->element(shift)), family, 0);
    EXPECT_LT(max_abs(shifted.op - diag({1, 2, 3, 0})), 1e-12);
    for (std::size_t t = 0; t < rep.group->order(); ++t) {
        auto r = conjugation_check(rep, t, theta, family, 0);
        EXPECT_TRUE(r.pass);
        EXPECT_LT(r.residual, 1e-12);
    }
}

TEST(Conjugation, QubitSwap) {
    auto rep = qubit_rep();
    auto theta = ConceptualVariable("theta", rep.group->space(), {"+1", "-1"}, {0, 1});
    auto family = CoherentFamily::make(rep, e(2, 0));
    for (std::size_t t = 0; t < 2; ++t) EXPECT_TRUE(conjugation_check(rep, t, theta, family, 0).pass);
}

TEST(ConjugationProperties, PhaseFreedomLeavesOperatorUnchanged) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    const Complex i(0, 1);
    for (std::size_t n : {2u, 3u, 4u, 6u}) {
        auto rep = cyclic_dft_rep(n);
        const auto& s = rep.group->space();
        std::vector<std::string> labels;
        std::vector<std::size_t> ids;
        for (std::size_t k = 0; k < n; ++k) {
            labels.push_back(std::to_string(k));
            ids.push_back(k);
        }
        ConceptualVariable theta("theta", s, labels, ids);
        auto plain = build_operator(theta, CoherentFamily::make(rep, e(n, 0)), 0);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Complex> phases;
            for (std::size_t k = 0; k < rep.group->order(); ++k) phases.push_back(std::exp(i * angle(rng)));
            auto family = CoherentFamily::make(rephase(rep, phases), e(n, 0) * std::exp(i * angle(rng)));
            EXPECT_LT(max_abs(build_operator(theta, family, 0).op - plain.op), 1e-10);
            const std::size_t t = rng() % rep.group->order();
            EXPECT_TRUE(conjugation_check(family.rep, t, theta, family, 0).pass);
        }
    }
}

TEST(Expansion, SpinXInSpinZBasis) {
    auto x = spin_component_bundle(SpinDirection(1, 0, 0), "x");
    auto z = spin_component_bundle(SpinDirection(0, 0, 1), "z");
    const double r = 1.0 / std::sqrt(2.0);
    auto plus = expand_in_basis(x, 1, z);
    ASSERT_EQ(plus.amplitudes.size(), 2u);
    EXPECT_EQ(plus.basis_values, (std::vector<double>{-1.0, 1.0}));
    EXPECT_NEAR(std::abs(plus.amplitudes[0] - r), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(plus.amplitudes[1] - r), 0.0, 1e-12);
    auto minus = expand_in_basis(x, 0, z);
    EXPECT_NEAR(std::abs(minus.amplitudes[0] + r), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(minus.amplitudes[1] - r), 0.0, 1e-12);
    EXPECT_NEAR(minus.norm_sum, 1.0, 1e-12);
    EXPECT_LT(minus.reconstruction_error, 1e-12);
}

TEST(Expansion, RejectsDegenerateOrMismatched) {
    auto z = spin_component_bundle(SpinDirection(0, 0, 1), "z");
    auto d = delta_operator();
    EXPECT_THROW(expand_in_basis(d, 0, z), PreconditionError);
    auto parity = bundle_from_operator("p", diag({0, 1, 2}));
    EXPECT_THROW(expand_in_basis(parity, 0, z), DomainError);
}
