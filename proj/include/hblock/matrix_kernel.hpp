#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace hblock {

using Complex = std::complex<double>;

// Dense complex matrix. Every matrix in the library (blocks, unitaries,
// isometries, targets) is carried in this type, even for real inputs.
using ComplexMatrix = Eigen::MatrixXcd;

using RealVector = std::vector<double>;

// Absolute + relative slack. A defect d measured on a quantity of scale s
// passes iff d <= atol + rtol * s.
struct Tolerance {
    double atol = 1e-10;
    double rtol = 1e-8;

    double slack(double scale) const { return atol + rtol * scale; }
    bool accepts(double defect, double scale) const { return defect <= slack(scale); }
};

// Eigenvalues of a Hermitian matrix in non-increasing order, optionally with
// the matching orthonormal eigenvectors as columns.
struct Spectrum {
    RealVector values;
    std::optional<ComplexMatrix> vectors;

    // lambda_j with 1-based j; zero for j beyond the spectrum.
    double lambda(std::size_t j) const { return j >= 1 && j <= values.size() ? values[j - 1] : 0.0; }
};

enum class PsdClass { not_square, not_hermitian, not_psd, psd };

const char* to_string(PsdClass c);

// Throws InputError when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what = "matrix");

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix zeros(Eigen::Index rows, Eigen::Index cols);

// Frobenius norm of M - M*. Requires a square matrix.
double hermitian_defect(const ComplexMatrix& m);

// Frobenius norm of V*V - I.
double isometry_defect(const ComplexMatrix& v);

// Frobenius norm of Q*Q - I and QQ* - I, whichever is larger.
double unitarity_defect(const ComplexMatrix& q);

ComplexMatrix hermitian_part(const ComplexMatrix& m);

PsdClass validate_hermitian_psd(const ComplexMatrix& m, const Tolerance& tol = {});

// Eigendecomposition of a Hermitian matrix. Only the Hermitian part is read.
// Throws NumericalError if the solver does not converge or the residual
// contract is broken.
Spectrum hermitian_eig(const ComplexMatrix& m, bool with_vectors = true);

// Eigenvalues only, non-increasing.
RealVector eigenvalues(const ComplexMatrix& m);

// Hermitian PSD square root. Eigenvalues in [-(atol + rtol*||M||_F), 0) are
// clamped to zero; anything more negative raises DomainError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerance& tol = {});

// Singular values, non-increasing, length min(rows, cols).
RealVector singular_values(const ComplexMatrix& m);

// Extends an isometry V (rows >= cols) to a square unitary whose leading
// columns are V. Throws DomainError if V is not an isometry within tol.
ComplexMatrix unitary_completion(const ComplexMatrix& v, const Tolerance& tol = {});

// Full SVD M = P * diag(sigma) * Q*, with P and Q square unitaries.
struct FullSvd {
    ComplexMatrix left;
    RealVector sigma;
    ComplexMatrix right;
};
FullSvd full_svd(const ComplexMatrix& m);

}  // namespace hblock
