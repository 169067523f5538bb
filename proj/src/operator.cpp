#include "cvq/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cvq/action.hpp"
#include "cvq/error.hpp"

namespace cvq {

namespace {

std::string format_value(double v) {
    if (std::abs(v) < 5e-13) v = 0.0;
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

/// Label of the value whose numeric reading is `v`, or the number itself.
std::string answer_label(const std::optional<ConceptualVariable>& variable, double v, double tol) {
    if (variable) {
        for (std::size_t u = 0; u < variable->value_count(); ++u) {
            if (std::abs(variable->numeric(u) - v) <= tol) return variable->values()[u];
        }
    }
    return format_value(v);
}

void attach_questions(OperatorBundle& bundle, double tol) {
    bundle.qa.clear();
    for (const auto& cluster : bundle.spectral.clusters) {
        bundle.qa.push_back(QuestionAnswer{"What is " + bundle.name + "?",
                                           bundle.name + " = " + answer_label(bundle.variable, cluster.value, tol),
                                           cluster.value, cluster.multiplicity});
    }
}

}  // namespace

StateVector OperatorBundle::eigenvector(std::size_t i) const {
    if (!nondegenerate()) {
        throw PreconditionError("operator '" + name + "' is degenerate; use its eigenprojectors");
    }
    return spectral.eigenvectors.col(static_cast<Eigen::Index>(i));
}

OperatorBundle bundle_from_operator(std::string name, ComplexMatrix op, const Tolerances& tol,
                                    std::optional<ConceptualVariable> variable) {
    OperatorBundle bundle;
    bundle.name = std::move(name);
    bundle.variable = std::move(variable);
    bundle.spectral = eigh(op, tol.hermitian, tol.degeneracy_gap);
    bundle.op = std::move(op);
    attach_questions(bundle, tol.eigenvalue);
    return bundle;
}

std::vector<std::size_t> coherent_values(const ConceptualVariable& theta, const CoherentFamily& family,
                                         std::size_t base_point) {
    const auto& group = *family.rep.group;
    if (!same_space(theta.domain(), group.space())) {
        throw DomainError("variable '" + theta.name() + "' does not live on the represented group's space");
    }
    if (base_point >= theta.domain_size()) throw DomainError("base point out of range");
    std::vector<std::size_t> values;
    values.reserve(group.order());
    for (const auto& g : group.elements()) values.push_back(theta(g(base_point)));
    return values;
}

OperatorBundle build_operator(const ConceptualVariable& theta, const CoherentFamily& family,
                              std::size_t base_point, const Tolerances& tol) {
    auto values = coherent_values(theta, family, base_point);
    auto injectivity = check_coherent_injectivity(family, tol);
    if (!injectivity.injective) {
        throw PreconditionError("coherent states are not in one-to-one correspondence with group elements (elements " +
                                std::to_string(injectivity.collision->first) + " and " +
                                std::to_string(injectivity.collision->second) + ")");
    }
    const auto& states = family.states;
    for (std::size_t g = 0; g < states.size(); ++g) {
        for (std::size_t h = g + 1; h < states.size(); ++h) {
            if (values[g] == values[h]) continue;
            double overlap = std::abs(inner(states[g], states[h])) / (states[g].norm() * states[h].norm());
            if (overlap > tol.orthogonality) {
                throw PreconditionError("outside orthogonal-coherent scope: states for elements " + std::to_string(g) +
                                        " and " + std::to_string(h) + " carry different values but overlap by " +
                                        format_value(overlap));
            }
        }
    }

    const auto dim = static_cast<Eigen::Index>(family.rep.dim);
    std::vector<ComplexMatrix> projectors;
    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix op = ComplexMatrix::Zero(dim, dim);
    for (std::size_t u = 0; u < theta.value_count(); ++u) {
        std::vector<Eigen::Index> members;
        for (std::size_t g = 0; g < values.size(); ++g) {
            if (values[g] == u) members.push_back(static_cast<Eigen::Index>(g));
        }
        ComplexMatrix columns(dim, static_cast<Eigen::Index>(members.size()));
        for (std::size_t c = 0; c < members.size(); ++c) {
            columns.col(static_cast<Eigen::Index>(c)) = states[members[c]].normalized();
        }
        projectors.push_back(span_projector(columns));
        total += projectors.back();
        op += theta.numeric(u) * projectors.back();
    }
    double completeness = max_abs(total - ComplexMatrix::Identity(dim, dim));
    if (completeness > tol.reconstruction) {
        throw PreconditionError("coherent value projectors of '" + theta.name() +
                                "' do not resolve the identity (residual " + format_value(completeness) + ")");
    }
    auto bundle = bundle_from_operator(theta.name(), std::move(op), tol, theta);
    bundle.value_projectors = std::move(projectors);
    return bundle;
}

OperatorBundle operator_from_refinement(const ConceptualVariable& xi, const OperatorBundle& refinement,
                                        const Tolerances& tol) {
    if (!refinement.variable || refinement.value_projectors.empty()) {
        throw PreconditionError("refinement bundle '" + refinement.name + "' carries no value projectors");
    }
    const auto& theta = *refinement.variable;
    if (!dominates(xi, theta)) {
        throw PreconditionError("'" + xi.name() + "' is not a function of '" + theta.name() + "'");
    }
    std::vector<std::size_t> f(theta.value_count());
    for (std::size_t p = 0; p < theta.domain_size(); ++p) f[theta(p)] = xi(p);
    ComplexMatrix op = ComplexMatrix::Zero(refinement.op.rows(), refinement.op.cols());
    std::vector<ComplexMatrix> projectors(xi.value_count(), ComplexMatrix::Zero(op.rows(), op.cols()));
    for (std::size_t v = 0; v < f.size(); ++v) {
        op += xi.numeric(f[v]) * refinement.value_projectors[v];
        projectors[f[v]] += refinement.value_projectors[v];
    }
    auto bundle = bundle_from_operator(xi.name(), std::move(op), tol, xi);
    bundle.value_projectors = std::move(projectors);
    return bundle;
}

ValueSpectrumCheck compare_spectrum_to_values(const OperatorBundle& bundle, const ConceptualVariable& theta,
                                              const CoherentFamily& family, std::size_t base_point,
                                              const Tolerances& tol) {
    ValueSpectrumCheck out;
    for (Eigen::Index k = 0; k < bundle.spectral.eigenvalues.size(); ++k) {
        out.eigenvalues.push_back(bundle.spectral.eigenvalues(k));
    }
    for (std::size_t u : coherent_values(theta, family, base_point)) out.expected.push_back(theta.numeric(u));
    std::sort(out.expected.begin(), out.expected.end());
    out.matches = out.eigenvalues.size() == out.expected.size();
    if (!out.matches) {
        out.max_deviation = std::numeric_limits<double>::infinity();
        return out;
    }
    for (std::size_t k = 0; k < out.expected.size(); ++k) {
        out.max_deviation = std::max(out.max_deviation, std::abs(out.eigenvalues[k] - out.expected[k]));
    }
    out.matches = out.max_deviation <= tol.eigenvalue;
    return out;
}

ConjugationResult conjugation_check(const UnitaryRep& T, std::size_t t, const ConceptualVariable& theta,
                                    const CoherentFamily& family, std::size_t base_point, const Tolerances& tol) {
    if (t >= T.group->order()) throw DomainError("conjugation_check: element index out of range");
    const auto& element = T.group->element(t);
    auto original = build_operator(theta, family, base_point, tol);
    auto transformed = build_operator(compose(theta, element), family, base_point, tol);
    const ComplexMatrix& u = T(t);
    ConjugationResult out;
    out.element = t;
    out.residual = max_abs(u.adjoint() * original.op * u - transformed.op);
    out.pass = out.residual <= tol.conjugation;
    return out;
}

Expansion expand_in_basis(const OperatorBundle& target, std::size_t i, const OperatorBundle& basis) {
    if (!target.nondegenerate() || !basis.nondegenerate()) {
        throw PreconditionError("expand_in_basis: degenerate operator; expand with eigenprojectors instead");
    }
    if (target.op.rows() != basis.op.rows()) throw DomainError("expand_in_basis: dimension mismatch");
    const StateVector vector = target.eigenvector(i);
    Expansion out;
    StateVector rebuilt = StateVector::Zero(vector.size());
    for (Eigen::Index j = 0; j < basis.spectral.eigenvectors.cols(); ++j) {
        const StateVector a = basis.spectral.eigenvectors.col(j);
        Complex amplitude = inner(a, vector);
        out.amplitudes.push_back(amplitude);
        out.basis_values.push_back(basis.spectral.eigenvalues(j));
        out.norm_sum += std::norm(amplitude);
        rebuilt += amplitude * a;
    }
    out.reconstruction_error = (rebuilt - vector).norm();
    return out;
}

}  // namespace cvq
