#pragma once

// Small dense complex linear algebra on top of Eigen.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cvq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Eigenvalues closer than the degeneracy gap, reported as one subspace.
struct EigenCluster {
    double value = 0.0;          // mean of the member eigenvalues
    std::size_t multiplicity = 0;
    std::size_t first = 0;       // column range [first, first + multiplicity) in the eigenvector matrix
    ComplexMatrix projector;
};

struct SpectralData {
    Eigen::VectorXd eigenvalues;  // ascending
    ComplexMatrix eigenvectors;   // columns, each with first non-negligible entry real positive
    std::vector<EigenCluster> clusters;

    bool nondegenerate() const { return clusters.size() == static_cast<std::size_t>(eigenvalues.size()); }
    /// Max-entry error of sum_c value_c P_c against `a`.
    double reconstruction_error(const ComplexMatrix& a) const;
};

double max_abs(const ComplexMatrix& a);
double hermitian_residual(const ComplexMatrix& a);

/// Hermitian eigendecomposition. Throws PreconditionError when `a` is not
/// square or deviates from its adjoint by more than `hermitian_tol`.
SpectralData eigh(const ComplexMatrix& a, double hermitian_tol = 1e-10, double degeneracy_gap = 1e-8);

/// Multiply `v` by the phase that makes its first entry above `threshold` real and positive.
void fix_phase(Eigen::Ref<StateVector> v, double threshold = 1e-9);

double unitarity_residual(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

StateVector apply(const ComplexMatrix& a, const StateVector& v);
/// Conjugate-linear in the first argument.
Complex inner(const StateVector& u, const StateVector& v);

/// Orthogonal projector onto the column span of `columns`; rank decided by `rank_tol`.
ComplexMatrix span_projector(const ComplexMatrix& columns, double rank_tol = 1e-9);

}  // namespace cvq
