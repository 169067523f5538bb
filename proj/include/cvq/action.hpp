#pragma once

// How a permutation group on the total space interacts with conceptual
// variables: permissibility, the induced action on values, and relatedness.

#include <cstddef>
#include <optional>
#include <vector>

#include "cvq/error.hpp"
#include "cvq/group.hpp"
#include "cvq/spaces.hpp"

namespace cvq {

/// theta o k, i.e. the variable phi -> theta(k phi). Keeps theta's value labels.
ConceptualVariable compose(const ConceptualVariable& theta, const Permutation& k);

/// A pair of points with equal theta-values whose images under k have different values.
struct PermissibilityWitness {
    Permutation k;
    std::size_t phi1 = 0;
    std::size_t phi2 = 0;
};

struct PermissibilityResult {
    bool permissible = true;
    std::optional<PermissibilityWitness> witness;

    explicit operator bool() const { return permissible; }
};

/// theta(phi1) = theta(phi2) implies theta(k phi1) = theta(k phi2) for all k in K.
/// On failure the witness uses the first failing element in K's element order and
/// the lexicographically first failing pair phi1 < phi2.
PermissibilityResult is_permissible(const ConceptualVariable& theta, const PermutationGroup& K);

/// Raised by induced_group for a non-permissible variable.
class NotPermissibleError : public PreconditionError {
public:
    explicit NotPermissibleError(PermissibilityWitness witness);
    const PermissibilityWitness& witness() const { return witness_; }

private:
    PermissibilityWitness witness_;
};

/// The group G on theta's value space with g_k(theta(phi)) = theta(k phi), and k -> g_k.
struct InducedAction {
    GroupRef group;
    GroupHomomorphism hom;
};

InducedAction induced_group(const ConceptualVariable& theta, const GroupRef& K);

/// The value permutation g_k for one element; nullopt when theta(k .) is not
/// well defined on theta's fibres.
std::optional<Permutation> induced_value_map(const ConceptualVariable& theta, const Permutation& k);

enum class RelatednessSearch {
    Group,      // only the supplied group
    Symmetric,  // every permutation of the domain (at most 8 points)
};

inline constexpr std::size_t kMaxExhaustiveDegree = 8;

/// Some k with eta(phi) = theta(k phi) up to relabelling of values; the
/// lexicographically smallest image sequence when several exist.
/// Throws DomainError when the value spaces differ in size.
std::optional<Permutation> are_related(const ConceptualVariable& theta, const ConceptualVariable& eta,
                                       const PermutationGroup& K,
                                       RelatednessSearch mode = RelatednessSearch::Group);

/// Every relating element of K, in K's element order.
std::vector<Permutation> relating_elements(const ConceptualVariable& theta, const ConceptualVariable& eta,
                                           const PermutationGroup& K);

/// Identification of the total space with a product of two coordinate sets.
/// Point p corresponds to (first[p], second[p]); the map must be a bijection
/// onto {0..a-1} x {0..b-1}.
struct ProductStructure {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;

    std::size_t first_size() const;
    std::size_t second_size() const;
    /// The permutation (x, y) -> (y, x); requires equal factor sizes.
    Permutation coordinate_exchange() const;
    void validate(std::size_t n) const;
};

/// True iff theta and eta are related in K and every relating element is the
/// plain coordinate exchange of `product`. Throws PreconditionError
/// ("not applicable") without a product structure.
bool flag_trivial_exchange(const ConceptualVariable& theta, const ConceptualVariable& eta,
                           const PermutationGroup& K, const std::optional<ProductStructure>& product);

}  // namespace cvq
