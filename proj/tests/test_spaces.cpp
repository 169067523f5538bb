#include <gtest/gtest.h>

#include <random>

#include "cvq/error.hpp"
#include "cvq/spaces.hpp"
#include "oracles.hpp"

using namespace cvq;

namespace {

SpaceRef four() { return PointSpace::range("omega", 4); }

ConceptualVariable var(const std::string& name, const SpaceRef& s, std::vector<std::vector<std::size_t>> blocks) {
    return ConceptualVariable::from_blocks(name, s, blocks);
}

ConceptualVariable from_ids(const std::string& name, const SpaceRef& s, const std::vector<std::size_t>& ids) {
    std::size_t count = *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<std::string> values;
    for (std::size_t v = 0; v < count; ++v) values.push_back(std::to_string(v));
    return ConceptualVariable(name, s, values, ids);
}

}  // namespace

TEST(PointSpace, RejectsDuplicateAndEmptyLabels) {
    EXPECT_THROW(PointSpace("s", {"a", "a"}), DomainError);
    EXPECT_THROW(PointSpace("s", {}), DomainError);
    EXPECT_EQ(PointSpace::range("r", 3)->labels(), (std::vector<std::string>{"0", "1", "2"}));
}

TEST(ConceptualVariable, ValidatesTotalityAndSurjectivity) {
    auto s = four();
    EXPECT_THROW(ConceptualVariable("t", s, {"a", "b"}, {0, 0, 0}), DomainError);
    EXPECT_THROW(ConceptualVariable("t", s, {"a", "b", "c"}, {0, 0, 1, 1}), DomainError);
    EXPECT_THROW(ConceptualVariable("t", s, {"a"}, {0, 0, 0, 1}), DomainError);
    EXPECT_THROW(var("t", s, {{0, 1}, {1, 2, 3}}), DomainError);
    EXPECT_THROW(var("t", s, {{0, 1}, {2}}), DomainError);
}

TEST(ConceptualVariable, EqualityIsPartitionEquality) {
    auto s = four();
    auto a = ConceptualVariable("a", s, {"x", "y"}, {0, 0, 1, 1});
    auto b = ConceptualVariable("b", s, {"p", "q"}, {1, 1, 0, 0});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.partition(), (std::vector<std::size_t>{0, 0, 1, 1}));
    EXPECT_EQ(b.partition(), (std::vector<std::size_t>{0, 0, 1, 1}));
    EXPECT_NE(a, var("c", s, {{0, 2}, {1, 3}}));
}

TEST(ConceptualVariable, NumericValuesFromLabels) {
    auto s = PointSpace::range("s", 3);
    auto signs = ConceptualVariable("t", s, {"+1", "-1", "2.5"}, {0, 1, 2});
    EXPECT_DOUBLE_EQ(signs.numeric(0), 1.0);
    EXPECT_DOUBLE_EQ(signs.numeric(1), -1.0);
    EXPECT_DOUBLE_EQ(signs.numeric(2), 2.5);
    auto words = ConceptualVariable("w", s, {"even", "odd", "x"}, {0, 1, 2});
    EXPECT_DOUBLE_EQ(words.numeric(2), 2.0);
}

TEST(Dominates, ConstantAndSelf) {
    auto s = four();
    auto theta = var("t", s, {{0, 1}, {2, 3}});
    EXPECT_TRUE(dominates(ConceptualVariable::constant("c", s), theta));
    EXPECT_TRUE(dominates(theta, theta));
    EXPECT_TRUE(dominates(theta, ConceptualVariable::identity("phi", s)));
}

TEST(Dominates, CrossedPairsAreIncomparable) {
    auto s = four();
    auto theta = var("t", s, {{0, 1}, {2, 3}});
    auto lambda = var("l", s, {{0, 2}, {1, 3}});
    EXPECT_FALSE(dominates(theta, lambda));
    EXPECT_FALSE(dominates(lambda, theta));
}

TEST(Dominates, RejectsDifferentDomains) {
    auto a = ConceptualVariable::constant("a", four());
    auto b = ConceptualVariable::constant("b", PointSpace::range("other", 4));
    EXPECT_THROW(dominates(a, b), DomainError);
}

TEST(Accessibility, GeneratorsConstantsAndTotal) {
    auto s = four();
    auto theta = var("t", s, {{0, 1}, {2, 3}});
    VariableFamily family({theta});
    EXPECT_TRUE(is_accessible(theta, family));
    EXPECT_TRUE(is_accessible(ConceptualVariable::constant("c", s), family));
    EXPECT_FALSE(is_accessible(ConceptualVariable::identity("phi", s), family));
    EXPECT_THROW(VariableFamily({ConceptualVariable::identity("phi", s)}), DomainError);
    EXPECT_NO_THROW(VariableFamily({ConceptualVariable::identity("phi", s)}, false));
}

TEST(MaximalAccessible, CrossedPairWithConstant) {
    auto s = four();
    auto theta = var("t", s, {{0, 1}, {2, 3}});
    auto eta = var("e", s, {{0, 2}, {1, 3}});
    auto xi = ConceptualVariable::constant("x", s);
    auto maximal = maximal_accessible(VariableFamily({theta, eta, xi}));
    ASSERT_EQ(maximal.size(), 2u);
    EXPECT_EQ(maximal[0], theta);
    EXPECT_EQ(maximal[1], eta);
}

TEST(MaximalAccessible, SingletonAndMergedValues) {
    auto s = four();
    auto theta = var("t", s, {{0}, {1}, {2, 3}});
    EXPECT_EQ(maximal_accessible(VariableFamily({theta})).size(), 1u);
    std::vector<std::size_t> merge{0, 0, 1};
    auto coarse = push_forward(theta, merge, "f(t)");
    auto maximal = maximal_accessible(VariableFamily({theta, coarse}));
    ASSERT_EQ(maximal.size(), 1u);
    EXPECT_EQ(maximal[0], theta);
    EXPECT_THROW(maximal_accessible(VariableFamily({})), PreconditionError);
}

TEST(MaximalAccessible, ConstantOnlyFamily) {
    auto c = ConceptualVariable::constant("c", four());
    auto maximal = maximal_accessible(VariableFamily({c}));
    ASSERT_EQ(maximal.size(), 1u);
    EXPECT_TRUE(maximal[0].is_constant());
}

TEST(DominationProperties, AgreesWithValueMapSearch) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + rng() % 8;
        auto s = PointSpace::range("s", n);
        auto a = oracle::random_labelling(rng, n, 1 + rng() % n);
        auto b = oracle::random_labelling(rng, n, 1 + rng() % n);
        auto ta = from_ids("a", s, a), tb = from_ids("b", s, b);
        ASSERT_EQ(dominates(ta, tb), oracle::dominates_by_value_maps(a, b)) << "trial " << trial;
    }
}

TEST(DominationProperties, ReflexiveTransitiveAntisymmetric) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 8;
        auto s = PointSpace::range("s", n);
        auto a = from_ids("a", s, oracle::random_labelling(rng, n, 1 + rng() % n));
        auto b = from_ids("b", s, oracle::random_labelling(rng, n, 1 + rng() % n));
        auto c = from_ids("c", s, oracle::random_labelling(rng, n, n));
        EXPECT_TRUE(dominates(a, a));
        if (dominates(a, b) && dominates(b, c)) EXPECT_TRUE(dominates(a, c));
        // A chain built by merging values of c.
        std::vector<std::size_t> f(c.value_count()), g;
        for (auto& x : f) x = rng() % c.value_count();
        auto mid = push_forward(c, f, "f(c)");
        g.resize(mid.value_count());
        for (auto& x : g) x = rng() % mid.value_count();
        auto low = push_forward(mid, g, "g(f(c))");
        EXPECT_TRUE(dominates(low, mid) && dominates(mid, c) && dominates(low, c));
        EXPECT_EQ(dominates(a, b) && dominates(b, a), a.partition() == b.partition());
    }
}

TEST(DominationProperties, AccessibilityClosedDownward) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng() % 7;
        auto s = PointSpace::range("s", n);
        std::vector<ConceptualVariable> gens;
        for (int g = 0; g < 3; ++g) gens.push_back(from_ids("g" + std::to_string(g), s, oracle::random_labelling(rng, n, n - 1)));
        VariableFamily family(gens, false);
        const auto& theta = gens[rng() % gens.size()];
        ASSERT_TRUE(is_accessible(theta, family));
        std::vector<std::size_t> f(theta.value_count());
        for (auto& x : f) x = rng() % theta.value_count();
        auto merged = push_forward(theta, f, "f");
        EXPECT_TRUE(dominates(merged, theta));
        EXPECT_TRUE(is_accessible(merged, family));
    }
}

TEST(DominationProperties, MaximalMembersAreAccessibleAndUndominated) {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng() % 7;
        auto s = PointSpace::range("s", n);
        std::vector<ConceptualVariable> gens;
        std::size_t count = 1 + rng() % 5;
        for (std::size_t g = 0; g < count; ++g) {
            gens.push_back(from_ids("g" + std::to_string(g), s, oracle::random_labelling(rng, n, 1 + rng() % n)));
        }
        VariableFamily family(gens, false);
        auto maximal = maximal_accessible(family);
        ASSERT_FALSE(maximal.empty());
        for (const auto& m : maximal) {
            EXPECT_TRUE(is_accessible(m, family));
            for (const auto& g : gens) EXPECT_FALSE(strictly_dominated(m, g));
        }
        // Every generator is below some maximal member.
        for (const auto& g : gens) {
            EXPECT_TRUE(std::any_of(maximal.begin(), maximal.end(), [&](const auto& m) { return dominates(g, m); }));
        }
    }
}
