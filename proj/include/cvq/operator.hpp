#pragma once

// Operators attached to conceptual variables: construction from coherent
// states, the conjugation law under the group, and basis expansions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cvq/group.hpp"
#include "cvq/hilbert.hpp"
#include "cvq/representation.hpp"
#include "cvq/spaces.hpp"
#include "cvq/tolerances.hpp"

namespace cvq {

/// "What is theta?" with the sharp answer "theta = u", attached to one eigenspace.
struct QuestionAnswer {
    std::string question;
    std::string answer;
    double value = 0.0;
    std::size_t multiplicity = 0;
};

struct OperatorBundle {
    std::string name;
    std::optional<ConceptualVariable> variable;
    ComplexMatrix op;
    SpectralData spectral;
    std::vector<QuestionAnswer> qa;  // one per eigen-cluster, ascending
    /// Projector for each value index of `variable`, when built from a variable.
    std::vector<ComplexMatrix> value_projectors;

    bool nondegenerate() const { return spectral.nondegenerate(); }
    /// Eigenvector of the i-th (ascending) simple eigenvalue.
    StateVector eigenvector(std::size_t i) const;
};

/// Wrap an explicit Hermitian matrix.
OperatorBundle bundle_from_operator(std::string name, ComplexMatrix op, const Tolerances& tol = {},
                                    std::optional<ConceptualVariable> variable = std::nullopt);

/// Which value each coherent state carries: theta(g . base_point) for element g.
std::vector<std::size_t> coherent_values(const ConceptualVariable& theta, const CoherentFamily& family,
                                         std::size_t base_point);

/// A^theta = sum_u u P_u, with P_u the projector onto the coherent states whose
/// value is u. Requires an injective family whose value groups span mutually
/// orthogonal subspaces covering the whole space.
OperatorBundle build_operator(const ConceptualVariable& theta, const CoherentFamily& family,
                              std::size_t base_point, const Tolerances& tol = {});

/// Operator of a coarser variable xi = f(theta), from the value projectors of a
/// bundle built for the finer variable theta.
OperatorBundle operator_from_refinement(const ConceptualVariable& xi, const OperatorBundle& refinement,
                                        const Tolerances& tol = {});

/// Eigenvalue multiset against the value multiset (one entry per coherent state).
struct ValueSpectrumCheck {
    bool matches = false;
    std::vector<double> eigenvalues;
    std::vector<double> expected;
    double max_deviation = 0.0;
};
ValueSpectrumCheck compare_spectrum_to_values(const OperatorBundle& bundle, const ConceptualVariable& theta,
                                              const CoherentFamily& family, std::size_t base_point,
                                              const Tolerances& tol = {});

struct ConjugationResult {
    double residual = 0.0;
    bool pass = false;
    std::size_t element = 0;
};

/// || T(t)^dagger A^theta T(t) - A^{theta o t} ||_max, with both operators built
/// through `build_operator` on `family`.
ConjugationResult conjugation_check(const UnitaryRep& T, std::size_t t, const ConceptualVariable& theta,
                                    const CoherentFamily& family, std::size_t base_point,
                                    const Tolerances& tol = {});

struct Expansion {
    std::vector<Complex> amplitudes;   // <a;j|b;i>, j ascending in the basis eigenvalues
    std::vector<double> basis_values;
    double reconstruction_error = 0.0;
    double norm_sum = 0.0;             // sum_j |<a;j|b;i>|^2
};

/// Resolve eigenvector i of `target` in the eigenbasis of `basis`. Both bundles
/// must be nondegenerate and of the same dimension.
Expansion expand_in_basis(const OperatorBundle& target, std::size_t i, const OperatorBundle& basis);

}  // namespace cvq
