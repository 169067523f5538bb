#include "cvq/spin.hpp"

#include <cmath>

#include "cvq/error.hpp"

namespace cvq {

SpinDirection::SpinDirection(double x, double y, double z) : x_(x), y_(y), z_(z) {
    double norm = std::sqrt(x * x + y * y + z * z);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw DomainError("spin direction is not a unit vector (norm " + std::to_string(norm) + ")");
    }
}

SpinDirection SpinDirection::normalized(double x, double y, double z) {
    double norm = std::sqrt(x * x + y * y + z * z);
    if (norm == 0.0) throw DomainError("spin direction cannot be the zero vector");
    return SpinDirection(x / norm, y / norm, z / norm);
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = [] {
        ComplexMatrix s(2, 2);
        s << 0.0, 1.0, 1.0, 0.0;
        return s;
    }();
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = [] {
        const Complex i(0.0, 1.0);
        ComplexMatrix s(2, 2);
        s << 0.0, -i, i, 0.0;
        return s;
    }();
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = [] {
        ComplexMatrix s(2, 2);
        s << 1.0, 0.0, 0.0, -1.0;
        return s;
    }();
    return m;
}

ComplexMatrix spin_component_operator(const SpinDirection& a) {
    return a.x() * pauli_x() + a.y() * pauli_y() + a.z() * pauli_z();
}

OperatorBundle spin_component_bundle(const SpinDirection& a, std::string name, const Tolerances& tol) {
    auto space = std::make_shared<const PointSpace>(name + "-outcomes", std::vector<std::string>{"+1", "-1"});
    auto variable = ConceptualVariable::identity(name, space);
    return bundle_from_operator(std::move(name), spin_component_operator(a), tol, std::move(variable));
}

StateVector singlet() {
    StateVector psi = StateVector::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    return psi;
}

ComplexMatrix qubit_swap() {
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    // |ab> -> |ba> with index 2a + b.
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) s(2 * b + a, 2 * a + b) = 1.0;
    }
    return s;
}

ComplexMatrix delta_matrix() {
    return tensor(pauli_x(), pauli_x()) + tensor(pauli_y(), pauli_y()) + tensor(pauli_z(), pauli_z());
}

OperatorBundle delta_operator(const Tolerances& tol) {
    return bundle_from_operator("delta", delta_matrix(), tol);
}

AnticorrelationResult anticorrelation_check(const SpinDirection& a, const Tolerances& tol) {
    const ComplexMatrix s = spin_component_operator(a);
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix total = tensor(s, id) + tensor(id, s);
    AnticorrelationResult out;
    out.residual = cvq::apply(total, singlet()).norm();
    out.pass = out.residual <= tol.singlet;
    return out;
}

}  // namespace cvq
