#pragma once

#include <string>
#include <vector>

#include "hblock/block_matrix.hpp"
#include "hblock/check_report.hpp"
#include "hblock/matrix_kernel.hpp"

namespace hblock {

enum class CertificateKind { two_corner, corner_general, two_block_isometry, quaternion };

const char* to_string(CertificateKind kind);
CertificateKind certificate_kind_from_string(const std::string& s);

// Exact rational reconstruction weight (1, 1/2 or 1/4 in practice).
struct Weight {
    int num = 1;
    int den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    static Weight parse(const std::string& s);
    friend bool operator==(const Weight&, const Weight&) = default;
};

struct CertificateDefects {
    double reconstruction = 0.0;
    std::vector<double> isometry;
};

// target = weight * sum_k F_k C_k F_k^*, with C_k = cores[k] when one core per
// factor is stored (corner kinds) or cores[0] for every k (isometry kinds).
struct DecompositionCertificate {
    CertificateKind kind = CertificateKind::two_corner;
    ComplexMatrix target;
    Weight weight;
    std::vector<ComplexMatrix> cores;
    std::vector<ComplexMatrix> factors;
    CertificateDefects defects;

    bool shared_core() const { return cores.size() == 1; }
    const ComplexMatrix& core_for(std::size_t k) const { return shared_core() ? cores.front() : cores.at(k); }
};

// Throws MalformedCertificate when the parts have inconsistent shapes.
void check_certificate_shape(const DecompositionCertificate& cert);

ComplexMatrix reconstruct(const DecompositionCertificate& cert);

// Recomputes reconstruction and isometry defects from scratch.
CertificateDefects measure_defects(const DecompositionCertificate& cert);

// Checks "reconstruction" (scale 1 + ||target||_F) and "isometry_k" for every
// factor (scale 1) under tol.
CheckReport verify_certificate(const DecompositionCertificate& cert, const Tolerance& tol = {});

// For tall M (p x q, q <= p) returns a p x p unitary U with
//   M M^* = U * embed(M^* M at rows/cols [offset, offset + q)) * U^*.
// With the SVD M = P S Q^*, U = P C where C sends the slot coordinates,
// rotated by Q, onto the leading q coordinates.
ComplexMatrix corner_unitary(const ComplexMatrix& m, Eigen::Index offset);

// Slot form: the p coordinates split into `slots` equal slots of width q; 1-based slot.
ComplexMatrix corner_unitary(const ComplexMatrix& m, Eigen::Index slot, Eigen::Index slots);

// [[A, X], [X^*, B]] = U (A (+) 0) U^* + V (0 (+) B) V^*, A n x n, B m x m.
// Needs only H PSD.
DecompositionCertificate two_corner_decomposition(const ComplexMatrix& h, Eigen::Index n, Eigen::Index m,
                                                  const Tolerance& tol = {});

// H = sum_s U_s embed(A_ss, slot s) U_s^* for any block count. Needs only H PSD.
DecompositionCertificate corner_decomposition_general(const BlockMatrix& h, const Tolerance& tol = {});

struct TwoBlockResult {
    DecompositionCertificate certificate;
    ComplexMatrix congruence;  // W = (1/sqrt 2) [[-iI, iI], [I, I]]
    ComplexMatrix congruent;   // W^* H W, whose diagonal blocks both equal (A+B)/2
};

// H = 1/2 { U (A+B) U^* + V (A+B) V^* } with 2n x n isometries U, V.
// Requires block_count 2, Hermitian blocks (HypothesisError) and H PSD (DomainError).
TwoBlockResult two_block_isometries(const BlockMatrix& h, const Tolerance& tol = {});

ComplexMatrix two_block_congruence(Eigen::Index n);

struct QuaternionStageTrace {
    ComplexMatrix G;      // duplicated blocks A_st (+) A_st, block size 2n
    ComplexMatrix W;      // E_1 (+) E_2 (+) E_3 (+) E_4
    ComplexMatrix Omega;  // W G W^*
    ComplexMatrix R2;     // (1/2) sign matrix (x) I_2n
    ComplexMatrix Phi;    // R2 Omega R2^*
    ComplexMatrix D;      // (1/4) (Delta (+) Delta)
    Eigen::Index block_dim = 0;  // n
};

// max_{s != t} ||Omega_st + Omega_st^*||_F.
double omega_skew_defect(const QuaternionStageTrace& trace);
// max_k ||Phi_kk - D||_F.
double phi_diagonal_defect(const QuaternionStageTrace& trace);

struct QuaternionResult {
    QuaternionStageTrace trace;
    DecompositionCertificate certificate;
};

// H (+) H = 1/4 sum_{k=1..4} V_k (Delta (+) Delta) V_k^*, V_k of size 2 beta n x 2n.
// beta == block_count, or beta = 4 with a 3-block H (zero padded, target H' (+) H'
// for the padded H'). For beta = 3 the padded rows are dropped from each factor.
QuaternionResult quaternion_pipeline(const BlockMatrix& h, int beta, const Tolerance& tol = {});

}  // namespace hblock
