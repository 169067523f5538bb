#include "cvq/hilbert.hpp"

#include <algorithm>
#include <cmath>

#include "cvq/error.hpp"

namespace cvq {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
    if (a.rows() != a.cols()) throw DomainError(std::string(what) + ": matrix is not square");
}

}  // namespace

double max_abs(const ComplexMatrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermitian_residual(const ComplexMatrix& a) {
    require_square(a, "hermitian_residual");
    return max_abs(a - a.adjoint());
}

void fix_phase(Eigen::Ref<StateVector> v, double threshold) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double magnitude = std::abs(v(i));
        if (magnitude > threshold) {
            v *= std::conj(v(i)) / magnitude;
            v(i) = Complex(magnitude, 0.0);
            return;
        }
    }
}

SpectralData eigh(const ComplexMatrix& a, double hermitian_tol, double degeneracy_gap) {
    if (a.rows() != a.cols()) throw PreconditionError("eigh: matrix is not square");
    double residual = hermitian_residual(a);
    if (residual > hermitian_tol) {
        throw PreconditionError("eigh: matrix is not Hermitian (residual " + std::to_string(residual) + ")");
    }
    // Symmetrise so the solver sees an exactly Hermitian input.
    ComplexMatrix h = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) throw Error("eigh: eigen solver did not converge");

    SpectralData out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    for (Eigen::Index j = 0; j < out.eigenvectors.cols(); ++j) fix_phase(out.eigenvectors.col(j));

    const auto n = static_cast<std::size_t>(out.eigenvalues.size());
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && out.eigenvalues(end) - out.eigenvalues(end - 1) < degeneracy_gap) ++end;
        EigenCluster cluster;
        cluster.first = start;
        cluster.multiplicity = end - start;
        cluster.value = out.eigenvalues.segment(start, end - start).mean();
        auto block = out.eigenvectors.middleCols(start, end - start);
        cluster.projector = block * block.adjoint();
        out.clusters.push_back(std::move(cluster));
        start = end;
    }
    return out;
}

double SpectralData::reconstruction_error(const ComplexMatrix& a) const {
    ComplexMatrix sum = ComplexMatrix::Zero(a.rows(), a.cols());
    for (const auto& c : clusters) sum += c.value * c.projector;
    return max_abs(sum - a);
}

double unitarity_residual(const ComplexMatrix& u) {
    require_square(u, "unitarity_residual");
    return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    return u.rows() == u.cols() && unitarity_residual(u) <= tol;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

StateVector apply(const ComplexMatrix& a, const StateVector& v) {
    if (a.cols() != v.size()) throw DomainError("apply: dimension mismatch");
    return a * v;
}

Complex inner(const StateVector& u, const StateVector& v) {
    if (u.size() != v.size()) throw DomainError("inner: dimension mismatch");
    return u.dot(v);  // Eigen's dot conjugates the left operand
}

ComplexMatrix span_projector(const ComplexMatrix& columns, double rank_tol) {
    const Eigen::Index dim = columns.rows();
    if (columns.cols() == 0) return ComplexMatrix::Zero(dim, dim);
    Eigen::JacobiSVD<ComplexMatrix> svd(columns, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    const double scale = sigma.size() > 0 ? sigma(0) : 0.0;
    Eigen::Index rank = 0;
    while (rank < sigma.size() && sigma(rank) > rank_tol * std::max(1.0, scale)) ++rank;
    auto basis = svd.matrixU().leftCols(rank);
    return basis * basis.adjoint();
}

}  // namespace cvq
