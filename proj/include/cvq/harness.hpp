#pragma once

// Brute-force checks of the relatedness theorems for finite "thoughts":
// classification of a family into relatedness classes, the search for a
// variable related to one member but essentially different from another, the
// permutation-group construction used in the proof, and an exhaustive sweep.

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cvq/action.hpp"
#include "cvq/group.hpp"
#include "cvq/spaces.hpp"

namespace cvq {

/// Maximal thoughts on a common total space, with the group acting on it.
struct ThoughtScenario {
    SpaceRef space;
    std::vector<ConceptualVariable> family;
    GroupRef K;
    std::optional<ProductStructure> product;

    /// Shared domain, equal value-space sizes, members maximal within the family.
    void validate() const;
};

enum class Verdict { AllRelated, AllEssentiallyDifferent, Mixed };
std::string to_string(Verdict v);

struct PairRecord {
    std::size_t first = 0;
    std::size_t second = 0;
    std::optional<Permutation> witness;  // relating element, verified pointwise
    std::size_t candidates_checked = 0;  // elements exhausted when no witness exists
};

struct HypothesisCheck {
    bool transitive = false;
    bool trivial_isotropy = false;
    std::vector<PermissibilityResult> permissible;  // per family member
    std::optional<bool> trivial_exchange;           // set only with a product structure
};

struct ClassificationResult {
    std::vector<std::vector<std::size_t>> classes;  // indices into the family
    Verdict verdict = Verdict::AllEssentiallyDifferent;
    std::vector<PairRecord> pairs;
    HypothesisCheck hypotheses;
    /// For a mixed verdict: (theta, lambda, xi) with theta ~ lambda and theta !~ xi,
    /// preferring a triple whose pivot theta is permissible.
    std::optional<std::array<std::size_t, 3>> mixed_triple;
    /// A mixed verdict whose triple meets every hypothesis: a theorem counterexample.
    bool counterexample = false;
};

/// Requires at least three members with pairwise distinct partitions.
ClassificationResult classify_thoughts(const ThoughtScenario& s,
                                       RelatednessSearch mode = RelatednessSearch::Group);

/// Direct pointwise check that eta(phi) = b(theta(k phi)) for one value bijection b.
bool verify_relating(const ConceptualVariable& theta, const ConceptualVariable& eta, const Permutation& k);

enum class SearchStatus { Pass, Fail, NotApplicable };
std::string to_string(SearchStatus s);

struct A1SearchResult {
    SearchStatus status = SearchStatus::NotApplicable;
    std::string reason;
    std::optional<Permutation> relating;  // k with eta = theta o k
    std::optional<PermissibilityWitness> permissibility_witness;
    std::vector<ConceptualVariable> falsifiers;
    std::size_t candidates_examined = 0;
};

/// Look for a maximal lambda related to theta but essentially different from
/// eta. Hypothesis failures yield NotApplicable. With `all_shapes`, every
/// partition shaped like theta joins the candidates (at most 6 points).
A1SearchResult theorem_a1_search(const ConceptualVariable& theta, const ConceptualVariable& eta,
                                 const ThoughtScenario& s, bool all_shapes = false);

/// Every variable on theta's domain whose block sizes match theta's.
std::vector<ConceptualVariable> same_shape_variables(const ConceptualVariable& theta);

struct ProofGroupResult {
    bool found = false;
    GroupRef group;
    bool transitive = false;
    bool trivial_isotropy = false;
    bool permissible = false;
    std::optional<Permutation> relating;  // element of the group relating theta and lambda
    std::size_t candidates_examined = 0;
    std::string note;
};

/// Search the permutations that permute theta's blocks for a transitive,
/// free subgroup (order at most `max_order`) containing an element relating
/// theta and lambda. Throws PreconditionError when a variable is not maximal.
ProofGroupResult proof_group_construction(const ConceptualVariable& theta, const ConceptualVariable& lambda,
                                          const ConceptualVariable& xi, const ThoughtScenario& s,
                                          std::size_t max_order = 24);

struct FalsifierCounterexample {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> family;  // restricted-growth strings
    std::vector<Permutation> generators;
    std::array<std::size_t, 3> triple{};
};

struct FalsifierDegreeStats {
    std::size_t n = 0;
    std::size_t subgroup_classes = 0;
    std::size_t families = 0;
    std::size_t instances = 0;
    std::size_t mixed = 0;
};

struct FalsifierReport {
    std::size_t max_n = 0;
    std::size_t instances = 0;
    std::size_t mixed = 0;                 // mixed verdicts with some hypothesis failing
    std::size_t counterexamples = 0;       // mixed verdicts with all hypotheses holding
    std::vector<FalsifierDegreeStats> per_degree;
    std::vector<FalsifierCounterexample> witnesses;
    bool complete = true;
};

/// All triples of distinct equal-shape balanced partitions (r blocks of n/r
/// points, 1 < r < n) on n <= max_n points, against every subgroup class of
/// S_n. A mixed family contains a mixed triple, so triples suffice.
/// Stops and reports incomplete once `budget` elapses.
FalsifierReport exhaustive_falsifier(std::size_t max_n,
                                     std::chrono::milliseconds budget = std::chrono::minutes(10));

}  // namespace cvq
