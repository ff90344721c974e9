#include "hblock/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hblock/errors.hpp"
#include "hblock/quaternion.hpp"

namespace hblock {

namespace {

void require_psd(const ComplexMatrix& h, const Tolerance& tol, const char* who) {
    const PsdClass c = validate_hermitian_psd(h, tol);
    if (c != PsdClass::psd) {
        std::ostringstream msg;
        msg << who << ": input is " << to_string(c);
        throw DomainError(msg.str());
    }
}

void require_hermitian_blocks(const BlockMatrix& h, const Tolerance& tol, const char* who) {
    const HermitianBlockReport report = validate_hermitian_blocks(h, tol);
    if (!report.ok) {
        const BlockDefect& b = report.offending.front();
        std::ostringstream msg;
        msg << who << ": block (" << b.s << ", " << b.t << ") is not Hermitian (defect " << b.defect << ")";
        throw HypothesisError(msg.str());
    }
}

}  // namespace

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::two_corner: return "two_corner";
        case CertificateKind::corner_general: return "corner_general";
        case CertificateKind::two_block_isometry: return "two_block_isometry";
        case CertificateKind::quaternion: return "quaternion";
    }
    return "unknown";
}

CertificateKind certificate_kind_from_string(const std::string& s) {
    for (auto k : {CertificateKind::two_corner, CertificateKind::corner_general, CertificateKind::two_block_isometry,
                   CertificateKind::quaternion})
        if (s == to_string(k)) return k;
    throw MalformedCertificate("unknown certificate kind '" + s + "'");
}

std::string Weight::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Weight Weight::parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        Weight w;
        if (slash == std::string::npos) {
            w.num = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            w.den = 1;
        } else {
            const std::string a = s.substr(0, slash);
            const std::string b = s.substr(slash + 1);
            w.num = std::stoi(a, &used);
            if (used != a.size()) throw std::invalid_argument(s);
            w.den = std::stoi(b, &used);
            if (used != b.size()) throw std::invalid_argument(s);
        }
        if (w.den <= 0) throw std::invalid_argument(s);
        return w;
    } catch (const std::logic_error&) {
        throw MalformedCertificate("weight '" + s + "' is not a fraction p/q");
    }
}

void check_certificate_shape(const DecompositionCertificate& cert) {
    const auto side = cert.target.rows();
    if (cert.target.cols() != side || side == 0) throw MalformedCertificate("certificate target must be square and non-empty");
    if (cert.factors.empty()) throw MalformedCertificate("certificate has no factors");
    if (cert.cores.size() != 1 && cert.cores.size() != cert.factors.size())
        throw MalformedCertificate("certificate needs one shared core or one core per factor");
    if (cert.weight.den <= 0) throw MalformedCertificate("certificate weight has a non-positive denominator");
    for (std::size_t k = 0; k < cert.factors.size(); ++k) {
        const ComplexMatrix& f = cert.factors[k];
        const ComplexMatrix& c = cert.core_for(k);
        if (f.rows() != side) throw MalformedCertificate("factor " + std::to_string(k) + " row count differs from target");
        if (c.rows() != c.cols() || c.rows() != f.cols())
            throw MalformedCertificate("core for factor " + std::to_string(k) + " does not match factor columns");
        if (f.rows() < f.cols()) throw MalformedCertificate("factor " + std::to_string(k) + " is wider than tall");
    }
}

ComplexMatrix reconstruct(const DecompositionCertificate& cert) {
    check_certificate_shape(cert);
    ComplexMatrix sum = ComplexMatrix::Zero(cert.target.rows(), cert.target.cols());
    for (std::size_t k = 0; k < cert.factors.size(); ++k) {
        const ComplexMatrix& f = cert.factors[k];
        sum += f * cert.core_for(k) * f.adjoint();
    }
    return cert.weight.value() * sum;
}

CertificateDefects measure_defects(const DecompositionCertificate& cert) {
    CertificateDefects d;
    d.reconstruction = (cert.target - reconstruct(cert)).norm();
    for (const auto& f : cert.factors) d.isometry.push_back(isometry_defect(f));
    return d;
}

CheckReport verify_certificate(const DecompositionCertificate& cert, const Tolerance& tol) {
    const CertificateDefects d = measure_defects(cert);
    CheckReport report;
    report.tolerance = tol;
    report.checks.push_back(make_defect("reconstruction", d.reconstruction, 1.0 + cert.target.norm(), tol));
    for (std::size_t k = 0; k < d.isometry.size(); ++k)
        report.checks.push_back(make_defect("isometry_" + std::to_string(k + 1), d.isometry[k], 1.0, tol));
    return report;
}

ComplexMatrix corner_unitary(const ComplexMatrix& m, Eigen::Index offset) {
    const Eigen::Index p = m.rows();
    const Eigen::Index q = m.cols();
    if (q > p || offset < 0 || offset + q > p) throw InputError("corner_unitary: slot does not fit inside the matrix");

    const FullSvd svd = full_svd(m);
    ComplexMatrix c = ComplexMatrix::Zero(p, p);
    c.block(0, offset, q, q) = svd.right.adjoint();
    Eigen::Index next = q;
    for (Eigen::Index col = 0; col < p; ++col) {
        if (col >= offset && col < offset + q) continue;
        c(next++, col) = 1.0;
    }
    return svd.left * c;
}

ComplexMatrix corner_unitary(const ComplexMatrix& m, Eigen::Index slot, Eigen::Index slots) {
    if (slots < 1 || slot < 1 || slot > slots || slots * m.cols() != m.rows())
        throw InputError("corner_unitary: slot layout does not match the matrix shape");
    return corner_unitary(m, (slot - 1) * m.cols());
}

DecompositionCertificate two_corner_decomposition(const ComplexMatrix& h, Eigen::Index n, Eigen::Index m,
                                                  const Tolerance& tol) {
    if (n < 1 || m < 1 || h.rows() != n + m || h.cols() != n + m)
        throw InputError("two_corner_decomposition: matrix side must equal n + m");
    require_psd(h, tol, "two_corner_decomposition");

    const ComplexMatrix root = psd_sqrt(h, tol);
    const ComplexMatrix left = root.leftCols(n);
    const ComplexMatrix right = root.rightCols(m);

    DecompositionCertificate cert;
    cert.kind = CertificateKind::two_corner;
    cert.target = h;
    cert.weight = {1, 1};
    cert.factors = {corner_unitary(left, 0), corner_unitary(right, n)};
    cert.cores = {embed_diagonal(hermitian_part(h.topLeftCorner(n, n)), 0, n + m),
                  embed_diagonal(hermitian_part(h.bottomRightCorner(m, m)), n, n + m)};
    cert.defects = measure_defects(cert);
    return cert;
}

DecompositionCertificate corner_decomposition_general(const BlockMatrix& h, const Tolerance& tol) {
    require_psd(h.data(), tol, "corner_decomposition_general");
    const Eigen::Index n = h.block_dim();
    const Eigen::Index side = h.side();
    const ComplexMatrix root = psd_sqrt(h.data(), tol);

    DecompositionCertificate cert;
    cert.kind = CertificateKind::corner_general;
    cert.target = h.data();
    cert.weight = {1, 1};
    for (Eigen::Index s = 0; s < h.block_count(); ++s) {
        const ComplexMatrix column_block = root.middleCols(s * n, n);
        cert.factors.push_back(corner_unitary(column_block, s * n));
        cert.cores.push_back(embed_diagonal(hermitian_part(h.block(s + 1, s + 1)), s * n, side));
    }
    cert.defects = measure_defects(cert);
    return cert;
}

ComplexMatrix two_block_congruence(Eigen::Index n) {
    const Complex i(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix w = ComplexMatrix::Zero(2 * n, 2 * n);
    w.topLeftCorner(n, n).diagonal().setConstant(-i * r);
    w.topRightCorner(n, n).diagonal().setConstant(i * r);
    w.bottomLeftCorner(n, n).diagonal().setConstant(r);
    w.bottomRightCorner(n, n).diagonal().setConstant(r);
    return w;
}

TwoBlockResult two_block_isometries(const BlockMatrix& h, const Tolerance& tol) {
    if (h.block_count() != 2) throw InputError("two_block_isometries: expected a 2x2 block partition");
    require_hermitian_blocks(h, tol, "two_block_isometries");
    require_psd(h.data(), tol, "two_block_isometries");

    const Eigen::Index n = h.block_dim();
    TwoBlockResult out;
    out.congruence = two_block_congruence(n);
    out.congruent = hermitian_part(out.congruence.adjoint() * h.data() * out.congruence);

    // W^* H W has both diagonal blocks equal to (A+B)/2; the corner
    // decomposition then puts each of them in one block column.
    const DecompositionCertificate corners = two_corner_decomposition(out.congruent, n, n, tol);
    const ComplexMatrix u = out.congruence * corners.factors[0].leftCols(n);
    const ComplexMatrix v = out.congruence * corners.factors[1].rightCols(n);

    DecompositionCertificate& cert = out.certificate;
    cert.kind = CertificateKind::two_block_isometry;
    cert.target = h.data();
    cert.weight = {1, 2};
    cert.cores = {hermitian_part(partial_trace(h))};
    cert.factors = {u, v};
    cert.defects = measure_defects(cert);
    return out;
}

double omega_skew_defect(const QuaternionStageTrace& trace) {
    const Eigen::Index b = 2 * trace.block_dim;
    double worst = 0.0;
    for (Eigen::Index s = 0; s < 4; ++s)
        for (Eigen::Index t = 0; t < 4; ++t) {
            if (s == t) continue;
            const auto blk = trace.Omega.block(s * b, t * b, b, b);
            worst = std::max(worst, (blk + blk.adjoint()).norm());
        }
    return worst;
}

double phi_diagonal_defect(const QuaternionStageTrace& trace) {
    const Eigen::Index b = 2 * trace.block_dim;
    double worst = 0.0;
    for (Eigen::Index k = 0; k < 4; ++k) worst = std::max(worst, (trace.Phi.block(k * b, k * b, b, b) - trace.D).norm());
    return worst;
}

QuaternionResult quaternion_pipeline(const BlockMatrix& h, int beta, const Tolerance& tol) {
    const Eigen::Index alpha = h.block_count();
    if (beta != 3 && beta != 4) throw InputError("quaternion_pipeline: beta must be 3 or 4");
    if (!(alpha == beta || (beta == 4 && alpha == 3))) {
        std::ostringstream msg;
        msg << "quaternion_pipeline: block count " << alpha << " is incompatible with beta " << beta;
        throw InputError(msg.str());
    }
    require_hermitian_blocks(h, tol, "quaternion_pipeline");
    require_psd(h.data(), tol, "quaternion_pipeline");

    const Eigen::Index n = h.block_dim();
    const BlockMatrix h4 = alpha == 4 ? h : pad_blocks(h, 4);
    const ComplexMatrix delta = hermitian_part(partial_trace(h));
    const ComplexMatrix delta2 = direct_sum(delta, delta);

    QuaternionResult out;
    QuaternionStageTrace& tr = out.trace;
    tr.block_dim = n;
    tr.G = duplicate_blocks(h4).data();
    tr.W = quaternion_congruence(n);
    tr.Omega = hermitian_part(tr.W * tr.G * tr.W.adjoint());
    tr.R2 = sign_mixing(2 * n);
    tr.Phi = hermitian_part(tr.R2 * tr.Omega * tr.R2.adjoint());
    tr.D = 0.25 * delta2;

    const DecompositionCertificate corners = corner_decomposition_general(BlockMatrix(tr.Phi, 2 * n, 4), tol);

    // H' (+) H' = P^T G P with P the interleaving permutation, G = W^* Omega W
    // and Omega = R2^* Phi R2.
    const PermutationMap perm = interleave_permutation(4, n);
    const ComplexMatrix back = tr.W.adjoint() * tr.R2.adjoint();

    DecompositionCertificate& cert = out.certificate;
    cert.kind = CertificateKind::quaternion;
    cert.weight = {1, 4};
    cert.cores = {delta2};

    if (beta == 4) {
        cert.target = direct_sum(h4.data(), h4.data());
        for (Eigen::Index k = 0; k < 4; ++k) {
            const ComplexMatrix slot_columns = corners.factors[static_cast<std::size_t>(k)].middleCols(k * 2 * n, 2 * n);
            cert.factors.push_back(perm.pull_rows(back * slot_columns));
        }
    } else {
        cert.target = direct_sum(h.data(), h.data());
        const ComplexMatrix root = psd_sqrt(delta2, tol);
        for (Eigen::Index k = 0; k < 4; ++k) {
            const ComplexMatrix slot_columns = corners.factors[static_cast<std::size_t>(k)].middleCols(k * 2 * n, 2 * n);
            const ComplexMatrix full = perm.pull_rows(back * slot_columns);
            // Rows 3n..4n and 7n..8n belong to the zero padding.
            ComplexMatrix restricted(6 * n, 2 * n);
            restricted.topRows(3 * n) = full.topRows(3 * n);
            restricted.bottomRows(3 * n) = full.middleRows(4 * n, 3 * n);

            // The dropped rows vanish on range(Delta (+) Delta). If Delta is
            // singular they can be nonzero on its kernel; the isometric polar
            // factor of restricted * (Delta (+) Delta)^{1/2} keeps the action on
            // the range and is an isometry on the kernel.
            if (isometry_defect(restricted) > 1e-12) {
                const FullSvd svd = full_svd(restricted * root);
                restricted = svd.left.leftCols(2 * n) * svd.right.adjoint();
            }
            cert.factors.push_back(std::move(restricted));
        }
    }
    cert.defects = measure_defects(cert);
    return out;
}

}  // namespace hblock
