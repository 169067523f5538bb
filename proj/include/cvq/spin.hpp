#pragma once

// Spin-1/2 components and the two-qubit singlet.
//
// Two-qubit vectors use the lexicographic product basis
// |++>, |+->, |-+>, |-->, with |+> = (1, 0) and |-> = (0, 1).

#include "cvq/hilbert.hpp"
#include "cvq/operator.hpp"
#include "cvq/tolerances.hpp"

namespace cvq {

/// A unit vector in R^3.
class SpinDirection {
public:
    /// Throws DomainError unless |(x, y, z)| = 1 within 1e-12.
    SpinDirection(double x, double y, double z);
    /// Normalises (x, y, z); throws DomainError for the zero vector.
    static SpinDirection normalized(double x, double y, double z);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

private:
    double x_, y_, z_;
};

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

/// a_x sigma_x + a_y sigma_y + a_z sigma_z.
ComplexMatrix spin_component_operator(const SpinDirection& a);

/// Bundle for the sign of the spin component along `a`, values {-1, +1}.
OperatorBundle spin_component_bundle(const SpinDirection& a, std::string name, const Tolerances& tol = {});

/// (|+-> - |-+>) / sqrt(2).
StateVector singlet();

/// The four-dimensional swap of the two factors.
ComplexMatrix qubit_swap();

/// sigma_x (x) sigma_x + sigma_y (x) sigma_y + sigma_z (x) sigma_z.
ComplexMatrix delta_matrix();
OperatorBundle delta_operator(const Tolerances& tol = {});

struct AnticorrelationResult {
    double residual = 0.0;  // || (a.sigma (x) I + I (x) a.sigma) singlet ||
    bool pass = false;
};
AnticorrelationResult anticorrelation_check(const SpinDirection& a, const Tolerances& tol = {});

}  // namespace cvq
