#include "cvq/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cvq/error.hpp"

namespace cvq {

namespace {

/// Distance of `m` from the line {c * n : |c| = 1}, after fitting the phase.
double projective_distance(const ComplexMatrix& m, const ComplexMatrix& n) {
    Complex overlap = (n.adjoint() * m).trace();  // <n, m> in the Frobenius product
    double magnitude = std::abs(overlap);
    Complex phase = magnitude > 0.0 ? overlap / magnitude : Complex(1.0, 0.0);
    return max_abs(m - phase * n);
}

}  // namespace

const ComplexMatrix& UnitaryRep::of(const Permutation& g) const {
    auto index = group->index_of(g);
    if (!index) throw DomainError("element " + g.to_string() + " is not in the represented group");
    return matrices.at(*index);
}

RepValidation validate(const UnitaryRep& rep) {
    if (rep.matrices.size() != rep.group->order()) {
        throw DomainError("representation has " + std::to_string(rep.matrices.size()) + " matrices for a group of order " +
                          std::to_string(rep.group->order()));
    }
    RepValidation out;
    const auto dim = static_cast<Eigen::Index>(rep.dim);
    for (const auto& m : rep.matrices) {
        if (m.rows() != dim || m.cols() != dim) throw DomainError("representation matrix has wrong dimension");
        out.unitarity = std::max(out.unitarity, unitarity_residual(m));
    }
    out.identity = max_abs(rep(PermutationGroup::identity_index()) - ComplexMatrix::Identity(dim, dim));
    const std::size_t order = rep.group->order();
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            double d = projective_distance(rep(a) * rep(b), rep(rep.group->multiply(a, b)));
            if (!out.worst_pair || d > out.projective) {
                out.projective = d;
                out.worst_pair = std::pair{a, b};
            }
        }
    }
    return out;
}

UnitaryRep qubit_rep() {
    auto space = std::make_shared<const PointSpace>("qubit-values", std::vector<std::string>{"+1", "-1"});
    auto group = make_group(space, {Permutation({1, 0})});
    const Complex i(0.0, 1.0);
    ComplexMatrix g(2, 2);
    // Column t holds U(g)|t> = exp(-i t)|g t>.
    g << 0.0, std::exp(i * 1.0),
         std::exp(-i * 1.0), 0.0;
    UnitaryRep rep{group, 2, {}};
    rep.matrices.resize(group->order());
    rep.matrices[*group->index_of(Permutation::identity(2))] = ComplexMatrix::Identity(2, 2);
    rep.matrices[*group->index_of(Permutation({1, 0}))] = g;
    return rep;
}

UnitaryRep cyclic_dft_rep(std::size_t n) {
    if (n < 2) throw PreconditionError("cyclic_dft_rep: N must be at least 2");
    auto group = std::make_shared<const PermutationGroup>(cyclic_shift_group(PointSpace::range("Z" + std::to_string(n), n)));
    const auto dim = static_cast<Eigen::Index>(n);
    const double two_pi_over_n = 2.0 * std::numbers::pi / static_cast<double>(n);
    const Complex i(0.0, 1.0);
    ComplexMatrix fourier(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index k = 0; k < dim; ++k) {
            fourier(j, k) = std::exp(i * two_pi_over_n * static_cast<double>(j * k)) / std::sqrt(static_cast<double>(n));
        }
    }
    UnitaryRep rep{group, n, {}};
    rep.matrices.reserve(group->order());
    for (const auto& element : group->elements()) {
        const auto shift = static_cast<double>(element(0));
        Eigen::VectorXcd phases(dim);
        for (Eigen::Index k = 0; k < dim; ++k) phases(k) = std::exp(i * two_pi_over_n * shift * static_cast<double>(k));
        rep.matrices.push_back(fourier.adjoint() * phases.asDiagonal() * fourier);
    }
    return rep;
}

UnitaryRep permutation_rep(GroupRef group) {
    const std::size_t n = group->degree();
    UnitaryRep rep{group, n, {}};
    rep.matrices.reserve(group->order());
    for (const auto& g : group->elements()) {
        ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t x = 0; x < n; ++x) m(g(x), static_cast<Eigen::Index>(x)) = 1.0;
        rep.matrices.push_back(std::move(m));
    }
    return rep;
}

UnitaryRep rebind(const UnitaryRep& rep, GroupRef group) {
    if (group->order() != rep.group->order() || group->degree() != rep.group->degree()) {
        throw DomainError("rebind: groups have different order or degree");
    }
    UnitaryRep out{group, rep.dim, {}};
    out.matrices.reserve(group->order());
    for (const auto& g : group->elements()) {
        auto index = rep.group->index_of(g);
        if (!index) throw DomainError("rebind: element " + g.to_string() + " is not in the represented group");
        out.matrices.push_back(rep.matrices[*index]);
    }
    return out;
}

UnitaryRep rephase(const UnitaryRep& rep, const std::vector<Complex>& phases) {
    if (phases.size() != rep.matrices.size()) throw DomainError("rephase: one phase per element required");
    UnitaryRep out = rep;
    for (std::size_t i = 0; i < phases.size(); ++i) out.matrices[i] *= phases[i];
    return out;
}

std::size_t commutant_dimension(const UnitaryRep& rep, double tol) {
    const auto d = static_cast<Eigen::Index>(rep.dim);
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const auto& gens = rep.group->generators();
    if (gens.empty()) return static_cast<std::size_t>(d * d);
    // U X - X U = 0  <=>  (I (x) U - U^T (x) I) vec(X) = 0 for column-major vec.
    ComplexMatrix system(d * d * static_cast<Eigen::Index>(gens.size()), d * d);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const ComplexMatrix& u = rep.of(gens[g]);
        system.middleRows(static_cast<Eigen::Index>(g) * d * d, d * d) = tensor(id, u) - tensor(u.transpose(), id);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(system);
    const auto& sigma = svd.singularValues();
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); ++k) {
        if (sigma(k) > tol) ++rank;
    }
    return static_cast<std::size_t>(d * d) - rank;
}

CoherentFamily CoherentFamily::make(UnitaryRep rep, StateVector base) {
    if (base.size() != static_cast<Eigen::Index>(rep.dim)) {
        throw PreconditionError("coherent family: base vector has dimension " + std::to_string(base.size()) +
                                ", representation has " + std::to_string(rep.dim));
    }
    if (base.norm() == 0.0) throw PreconditionError("coherent family: base vector is zero");
    CoherentFamily family{std::move(rep), std::move(base), {}};
    family.states.reserve(family.rep.matrices.size());
    for (const auto& m : family.rep.matrices) family.states.push_back(m * family.base);
    return family;
}

InjectivityResult check_coherent_injectivity(const CoherentFamily& family, const Tolerances& tol) {
    if (family.base.norm() == 0.0) throw PreconditionError("coherent family: base vector is zero");
    InjectivityResult out;
    out.min_distance = std::numeric_limits<double>::infinity();
    const auto& states = family.states;
    for (std::size_t g = 0; g < states.size(); ++g) {
        for (std::size_t h = g + 1; h < states.size(); ++h) {
            double distance = (states[g] - states[h]).norm();
            double overlap = std::abs(inner(states[g], states[h])) / (states[g].norm() * states[h].norm());
            out.min_distance = std::min(out.min_distance, distance);
            out.max_overlap = std::max(out.max_overlap, overlap);
            bool collides = distance <= tol.distinct_states || overlap >= 1.0 - tol.overlap;
            if (collides && out.injective) {
                out.injective = false;
                out.collision = std::pair{g, h};
            }
        }
    }
    if (states.size() < 2) out.min_distance = 0.0;
    return out;
}

}  // namespace cvq
