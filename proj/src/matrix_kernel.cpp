#include "hblock/matrix_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "hblock/errors.hpp"

namespace hblock {

const char* to_string(PsdClass c) {
    switch (c) {
        case PsdClass::not_square: return "not_square";
        case PsdClass::not_hermitian: return "not_hermitian";
        case PsdClass::not_psd: return "not_psd";
        case PsdClass::psd: return "psd";
    }
    return "unknown";
}

void require_finite(const ComplexMatrix& m, const char* what) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                std::ostringstream msg;
                msg << what << " has a non-finite entry at (" << i << ", " << j << ")";
                throw InputError(msg.str());
            }
        }
    }
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix zeros(Eigen::Index rows, Eigen::Index cols) { return ComplexMatrix::Zero(rows, cols); }

double hermitian_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("hermitian_defect: matrix is not square");
    return (m - m.adjoint()).norm();
}

double isometry_defect(const ComplexMatrix& v) {
    return (v.adjoint() * v - ComplexMatrix::Identity(v.cols(), v.cols())).norm();
}

double unitarity_defect(const ComplexMatrix& q) {
    if (q.rows() != q.cols()) throw InputError("unitarity_defect: matrix is not square");
    const auto eye = ComplexMatrix::Identity(q.rows(), q.cols());
    return std::max((q.adjoint() * q - eye).norm(), (q * q.adjoint() - eye).norm());
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

PsdClass validate_hermitian_psd(const ComplexMatrix& m, const Tolerance& tol) {
    require_finite(m);
    if (m.rows() != m.cols()) return PsdClass::not_square;
    const double scale = m.norm();
    if (!tol.accepts(hermitian_defect(m), scale)) return PsdClass::not_hermitian;
    if (m.rows() == 0) return PsdClass::psd;
    const RealVector values = eigenvalues(m);
    if (values.back() < -tol.slack(scale)) return PsdClass::not_psd;
    return PsdClass::psd;
}

Spectrum hermitian_eig(const ComplexMatrix& m, bool with_vectors) {
    require_finite(m);
    if (m.rows() != m.cols()) throw InputError("hermitian_eig: matrix is not square");
    const Eigen::Index n = m.rows();
    Spectrum out;
    if (n == 0) {
        if (with_vectors) out.vectors = ComplexMatrix(0, 0);
        return out;
    }

    const ComplexMatrix h = hermitian_part(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        h, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "hermitian_eig: QL iteration failed to converge on a " << n << "x" << n << " matrix"
            << " (Frobenius norm " << h.norm() << ")";
        throw NumericalError(msg.str());
    }

    // Eigen returns ascending order.
    const auto& ev = solver.eigenvalues();
    out.values.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = ev(n - 1 - i);

    if (with_vectors) {
        ComplexMatrix vectors = solver.eigenvectors().rowwise().reverse();
        const double scale = 1.0 + h.norm();
        const double contract = 1e-10 * static_cast<double>(n) * scale;
        ComplexMatrix lambda = ComplexMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) lambda(i, i) = out.values[static_cast<std::size_t>(i)];
        const double residual = (h * vectors - vectors * lambda).norm();
        const double orth = isometry_defect(vectors);
        if (residual > contract || orth > 1e-10 * static_cast<double>(n)) {
            std::ostringstream msg;
            msg << "hermitian_eig: residual " << residual << " / orthonormality " << orth
                << " outside contract " << contract;
            throw NumericalError(msg.str());
        }
        out.vectors = std::move(vectors);
    }
    return out;
}

RealVector eigenvalues(const ComplexMatrix& m) { return hermitian_eig(m, false).values; }

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerance& tol) {
    const Spectrum spec = hermitian_eig(m, true);
    const double floor = -tol.slack(m.norm());
    const Eigen::Index n = m.rows();
    Eigen::VectorXd roots(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double lambda = spec.values[static_cast<std::size_t>(i)];
        if (lambda < floor) {
            std::ostringstream msg;
            msg << "psd_sqrt: eigenvalue " << lambda << " is below the clamping floor " << floor;
            throw DomainError(msg.str());
        }
        roots(i) = std::sqrt(std::max(lambda, 0.0));
    }
    const ComplexMatrix& v = *spec.vectors;
    const ComplexMatrix s = v * roots.asDiagonal() * v.adjoint();
    return hermitian_part(s);
}

RealVector singular_values(const ComplexMatrix& m) {
    require_finite(m);
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    return RealVector(s.data(), s.data() + s.size());
}

FullSvd full_svd(const ComplexMatrix& m) {
    require_finite(m);
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    return {svd.matrixU(), RealVector(s.data(), s.data() + s.size()), svd.matrixV()};
}

ComplexMatrix unitary_completion(const ComplexMatrix& v, const Tolerance& tol) {
    require_finite(v);
    const Eigen::Index rows = v.rows();
    const Eigen::Index cols = v.cols();
    if (rows < cols) throw InputError("unitary_completion: more columns than rows");
    const double defect = isometry_defect(v);
    if (!tol.accepts(defect, 1.0)) {
        std::ostringstream msg;
        msg << "unitary_completion: input is not an isometry (defect " << defect << ")";
        throw DomainError(msg.str());
    }

    ComplexMatrix q(rows, rows);
    q.leftCols(cols) = v;
    if (cols == rows) return q;

    Eigen::HouseholderQR<ComplexMatrix> qr(v);
    ComplexMatrix basis = qr.householderQ();
    ComplexMatrix complement = basis.rightCols(rows - cols);
    // One extra projection pass so the complement is orthogonal to V itself,
    // not just to the Householder image of V.
    complement -= v * (v.adjoint() * complement);
    Eigen::HouseholderQR<ComplexMatrix> qr2(complement);
    ComplexMatrix reortho = qr2.householderQ() * ComplexMatrix::Identity(rows, rows - cols);
    q.rightCols(rows - cols) = reortho;
    return q;
}

}  // namespace hblock
