#pragma once

// Unitary (projective) representations of enumerated permutation groups and
// the coherent-state families they generate.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cvq/group.hpp"
#include "cvq/hilbert.hpp"
#include "cvq/tolerances.hpp"

namespace cvq {

/// One unitary matrix per group element, indexed like `group->elements()`.
struct UnitaryRep {
    GroupRef group;
    std::size_t dim = 0;
    std::vector<ComplexMatrix> matrices;

    const ComplexMatrix& operator()(std::size_t element) const { return matrices.at(element); }
    const ComplexMatrix& of(const Permutation& g) const;
};

struct RepValidation {
    double unitarity = 0.0;   // worst max|U^dagger U - I|
    double identity = 0.0;    // max|U(e) - I|
    double projective = 0.0;  // worst distance of U(a)U(b) from the phase line of U(ab)
    std::optional<std::pair<std::size_t, std::size_t>> worst_pair;

    bool ok(const Tolerances& tol) const {
        return unitarity <= tol.unitary && identity <= tol.unitary && projective <= tol.projective;
    }
};

/// Checks unitarity, identity -> I, and the homomorphism law up to a global
/// phase per pair (exhaustive over all element pairs).
RepValidation validate(const UnitaryRep& rep);

/// The two-element value swap on {+1, -1} with U(g)|t> = exp(-i t)|g t>,
/// basis |+1> = (1, 0), |-1> = (0, 1).
UnitaryRep qubit_rep();

/// Z_N by shifts, U(shift by s) = F^dagger D^s F with the unitary DFT matrix F
/// and D = diag(exp(2 pi i k / N)). Throws PreconditionError for N < 2.
UnitaryRep cyclic_dft_rep(std::size_t n);

/// Permutation matrices: U(g)|x> = |g x>.
UnitaryRep permutation_rep(GroupRef group);

/// The same matrices re-indexed by a group with identical element set (e.g. the
/// scenario's own copy of the group). Throws DomainError if the sets differ.
UnitaryRep rebind(const UnitaryRep& rep, GroupRef group);

/// Multiply every matrix by the given phases (one per element).
UnitaryRep rephase(const UnitaryRep& rep, const std::vector<Complex>& phases);

/// Dimension of the space of matrices commuting with every U(g); 1 means irreducible.
std::size_t commutant_dimension(const UnitaryRep& rep, double tol = 1e-8);

/// The states U(g)|base> for every element g.
struct CoherentFamily {
    UnitaryRep rep;
    StateVector base;
    std::vector<StateVector> states;

    /// Throws PreconditionError for a zero or wrongly sized base vector.
    static CoherentFamily make(UnitaryRep rep, StateVector base);
};

struct InjectivityResult {
    bool injective = true;
    std::optional<std::pair<std::size_t, std::size_t>> collision;  // element indices
    double min_distance = 0.0;
    double max_overlap = 0.0;  // largest normalised |<g|h>| over distinct pairs
};

/// g -> U(g)|base> is one-to-one, also up to global phase.
InjectivityResult check_coherent_injectivity(const CoherentFamily& family, const Tolerances& tol = {});

}  // namespace cvq
