#include "hblock/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "hblock/errors.hpp"

namespace hblock {

namespace {

RealVector sorted_desc(RealVector v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

void pad_to(RealVector& v, std::size_t n) {
    if (v.size() < n) v.resize(n, 0.0);
}

RealVector partial_sums(const RealVector& v) {
    RealVector out(v.size());
    std::partial_sum(v.begin(), v.end(), out.begin());
    return out;
}

// lambda_j with the zero convention past the end (1-based j).
double lambda_at(const RealVector& desc, std::size_t j) { return j >= 1 && j <= desc.size() ? desc[j - 1] : 0.0; }

double det_identity_plus(const ComplexMatrix& m) {
    double d = 1.0;
    for (double lambda : eigenvalues(m)) d *= 1.0 + lambda;
    return d;
}

void add_hypothesis_warnings(const BlockMatrix& h, const Tolerance& tol, CheckReport& report) {
    const HermitianBlockReport blocks = validate_hermitian_blocks(h, tol);
    for (const BlockDefect& b : blocks.offending) {
        std::ostringstream msg;
        msg << "hypothesis: block (" << b.s << ", " << b.t << ") is not Hermitian (defect " << b.defect << ")";
        report.warnings.push_back(msg.str());
    }
    const PsdClass c = validate_hermitian_psd(h.data(), tol);
    if (c != PsdClass::psd) report.warnings.push_back(std::string("hypothesis: matrix is ") + to_string(c));
}

void require_hermitian(const ComplexMatrix& m, const Tolerance& tol, const char* what) {
    if (m.rows() != m.cols() || !tol.accepts(hermitian_defect(m), m.norm()))
        throw HypothesisError(std::string(what) + " must be a square Hermitian matrix");
}

}  // namespace

double ky_fan_norm(const ComplexMatrix& m, Eigen::Index k) {
    const Eigen::Index limit = std::min(m.rows(), m.cols());
    if (k < 1 || k > limit) {
        std::ostringstream msg;
        msg << "ky_fan_norm: k = " << k << " outside 1.." << limit;
        throw InputError(msg.str());
    }
    const RealVector sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.begin() + k, 0.0);
}

CheckReport weak_majorization(RealVector s, RealVector t, const Tolerance& tol) {
    s = sorted_desc(std::move(s));
    t = sorted_desc(std::move(t));
    const std::size_t len = std::max(s.size(), t.size());
    pad_to(s, len);
    pad_to(t, len);
    CheckReport report;
    report.tolerance = tol;
    report.checks.push_back(make_inequality("weak_majorization", partial_sums(s), partial_sums(t), tol));
    return report;
}

CheckReport hiroshima_check(const BlockMatrix& h, const Tolerance& tol) {
    CheckReport report;
    report.tolerance = tol;
    add_hypothesis_warnings(h, tol, report);

    const ComplexMatrix delta = partial_trace(h);
    CheckReport maj = weak_majorization(eigenvalues(h.data()), eigenvalues(delta), tol);
    maj.checks.front().name = "hiroshima_majorization";
    report.append(maj);

    const double tr_h = h.data().trace().real();
    const double tr_delta = delta.trace().real();
    report.checks.push_back(make_equality("trace_equality", {tr_h}, {tr_delta}, tol, true));
    return report;
}

CheckReport eigen_step_check(const BlockMatrix& h, int step, const Tolerance& tol) {
    const Eigen::Index alpha = h.block_count();
    const bool ok = (step == 2 && alpha == 2) || (step == 4 && (alpha == 3 || alpha == 4));
    if (!ok) {
        std::ostringstream msg;
        msg << "eigen_step_check: step " << step << " does not apply to " << alpha << " blocks";
        throw InputError(msg.str());
    }
    CheckReport report;
    report.tolerance = tol;
    add_hypothesis_warnings(h, tol, report);

    const RealVector eig_h = eigenvalues(h.data());
    const RealVector eig_delta = eigenvalues(partial_trace(h));
    RealVector lhs;
    RealVector rhs;
    for (Eigen::Index k = 0; k < h.block_dim(); ++k) {
        lhs.push_back(lambda_at(eig_h, static_cast<std::size_t>(1 + step * k)));
        rhs.push_back(lambda_at(eig_delta, static_cast<std::size_t>(1 + k)));
    }
    report.checks.push_back(make_inequality("eigen_step_" + std::to_string(step), lhs, rhs, tol));
    return report;
}

CheckReport det_sandwich(const BlockMatrix& h, const Tolerance& tol) {
    CheckReport report;
    report.tolerance = tol;
    add_hypothesis_warnings(h, tol, report);

    double block_product = 1.0;
    for (Eigen::Index s = 1; s <= h.block_count(); ++s) block_product *= det_identity_plus(get_block(h, s, s));
    const double det_h = det_identity_plus(h.data());
    const double det_delta = det_identity_plus(partial_trace(h));

    report.checks.push_back(make_inequality("det_fisher", det_h, block_product, tol));
    report.checks.push_back(make_inequality("det_partial_trace", det_delta, det_h, tol));
    return report;
}

double ConcaveFunction::operator()(double t) const {
    t = std::max(t, 0.0);
    switch (kind) {
        case Kind::log1p: return std::log1p(t);
        case Kind::sqrt: return std::sqrt(t);
        case Kind::power: return std::pow(t, param);
        case Kind::min_c: return std::min(t, param);
    }
    return 0.0;
}

std::string ConcaveFunction::id() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::log1p: return "log1p";
        case Kind::sqrt: return "sqrt";
        case Kind::power: out << "pow:" << param; return out.str();
        case Kind::min_c: out << "min:" << param; return out.str();
    }
    return "unknown";
}

ConcaveFunction ConcaveFunction::parse(const std::string& id) {
    if (id == "log1p") return {Kind::log1p, 0.0};
    if (id == "sqrt") return {Kind::sqrt, 0.5};
    if (id == "pow:0.25") return {Kind::power, 0.25};
    if (id == "pow:0.5") return {Kind::power, 0.5};
    if (id == "pow:0.75") return {Kind::power, 0.75};
    if (id.rfind("min:", 0) == 0) {
        const std::string tail = id.substr(4);
        try {
            std::size_t used = 0;
            const double c = std::stod(tail, &used);
            if (used == tail.size() && c > 0.0 && std::isfinite(c)) return {Kind::min_c, c};
        } catch (const std::logic_error&) {
        }
    }
    throw InputError("unknown concave function id '" + id + "'");
}

std::vector<ConcaveFunction> concave_catalog() {
    return {ConcaveFunction::parse("log1p"), ConcaveFunction::parse("sqrt"), ConcaveFunction::parse("pow:0.25"),
            ConcaveFunction::parse("pow:0.5"), ConcaveFunction::parse("pow:0.75"), ConcaveFunction::parse("min:1")};
}

CheckReport trace_concave_check(const ComplexMatrix& s, const ComplexMatrix& t, const ConcaveFunction& f,
                                const Tolerance& tol) {
    CheckReport report;
    report.tolerance = tol;

    RealVector eig_s = eigenvalues(s);
    RealVector eig_t = eigenvalues(t);
    const std::size_t len = std::max(eig_s.size(), eig_t.size());
    pad_to(eig_s, len);
    pad_to(eig_t, len);

    const CheckReport maj = weak_majorization(eig_s, eig_t, tol);
    const double sum_s = std::accumulate(eig_s.begin(), eig_s.end(), 0.0);
    const double sum_t = std::accumulate(eig_t.begin(), eig_t.end(), 0.0);
    const bool equal_totals = tol.accepts(std::abs(sum_s - sum_t), std::max(std::abs(sum_s), std::abs(sum_t)));
    if (!maj.passed())
        report.warnings.push_back("advisory: eig(S) is not weakly majorized by eig(T)");
    else if (!equal_totals)
        report.warnings.push_back("advisory: eig(S) is only weakly majorized by eig(T) (traces differ)");

    double tr_fs = 0.0;
    double tr_ft = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        tr_fs += f(eig_s[i]);
        tr_ft += f(eig_t[i]);
    }
    report.checks.push_back(make_inequality("trace_concave[" + f.id() + "]", tr_ft, tr_fs, tol));
    return report;
}

CheckReport weyl_check(const ComplexMatrix& y, const ComplexMatrix& z, Eigen::Index r, Eigen::Index s,
                       const Tolerance& tol) {
    if (y.rows() != y.cols() || z.rows() != z.cols() || y.rows() != z.rows())
        throw InputError("weyl_check: Y and Z must be square of the same side");
    const Eigen::Index m = y.rows();
    if (r < 0 || s < 0 || r + s > m - 1) {
        std::ostringstream msg;
        msg << "weyl_check: indices r = " << r << ", s = " << s << " need r, s >= 0 and r + s <= " << m - 1;
        throw InputError(msg.str());
    }
    require_hermitian(y, tol, "weyl_check: Y");
    require_hermitian(z, tol, "weyl_check: Z");

    const RealVector eig_sum = eigenvalues(y + z);
    const RealVector eig_y = eigenvalues(y);
    const RealVector eig_z = eigenvalues(z);
    const auto ru = static_cast<std::size_t>(r);
    const auto su = static_cast<std::size_t>(s);
    CheckReport report;
    report.tolerance = tol;
    report.checks.push_back(make_inequality("weyl", lambda_at(eig_sum, ru + su + 1),
                                            lambda_at(eig_y, ru + 1) + lambda_at(eig_z, su + 1), tol));
    return report;
}

OperatorPair build_operator_pair(const ComplexMatrix& t, const std::vector<ComplexMatrix>& s_list, int beta,
                                 const Tolerance& tol) {
    if (beta < 2 || beta > 4) throw InputError("operator_pair_check: beta must be 2, 3 or 4");
    require_hermitian(t, tol, "operator_pair_check: T");
    const Eigen::Index n = t.rows();

    std::vector<ComplexMatrix> family;
    if (beta == 2) {
        if (s_list.size() != 1) throw InputError("operator_pair_check: beta = 2 takes exactly one S");
        family = {identity(n), s_list.front()};
    } else {
        if (s_list.empty() || s_list.size() > static_cast<std::size_t>(beta))
            throw InputError("operator_pair_check: expected between 1 and beta commuting matrices");
        family = s_list;
    }
    for (const auto& s : family) {
        if (s.rows() != n || s.cols() != n) throw InputError("operator_pair_check: S and T sides differ");
        require_hermitian(s, tol, "operator_pair_check: S");
    }
    if (beta > 2) {
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                const double comm = (family[i] * family[j] - family[j] * family[i]).norm();
                if (!tol.accepts(comm, family[i].norm() * family[j].norm())) {
                    std::ostringstream msg;
                    msg << "operator_pair_check: S_" << i + 1 << " and S_" << j + 1
                        << " do not commute (commutator " << comm << ")";
                    throw HypothesisError(msg.str());
                }
            }
    }

    OperatorPair out;
    const ComplexMatrix t2 = t * t;
    out.lhs = ComplexMatrix::Zero(n, n);
    out.rhs = ComplexMatrix::Zero(n, n);
    out.gram_factor.resize(static_cast<Eigen::Index>(family.size()) * n, n);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const ComplexMatrix& s = family[i];
        out.lhs += s * t2 * s;
        out.rhs += t * s * s * t;
        out.gram_factor.middleRows(static_cast<Eigen::Index>(i) * n, n) = t * s;
    }
    out.lhs = hermitian_part(out.lhs);
    out.rhs = hermitian_part(out.rhs);
    return out;
}

CheckReport operator_pair_check(const ComplexMatrix& t, const std::vector<ComplexMatrix>& s_list, int beta,
                                const Tolerance& tol) {
    const OperatorPair pair = build_operator_pair(t, s_list, beta, tol);
    const Eigen::Index n = t.rows();
    const int step = beta == 2 ? 2 : 4;

    const RealVector eig_l = eigenvalues(pair.lhs);
    const RealVector eig_r = eigenvalues(pair.rhs);

    CheckReport report;
    report.tolerance = tol;
    CheckReport maj = weak_majorization(eig_l, eig_r, tol);
    maj.checks.front().name = "ky_fan_dominance";
    report.append(maj);

    RealVector lhs;
    RealVector rhs;
    for (Eigen::Index k = 0; k < n; ++k) {
        lhs.push_back(lambda_at(eig_l, static_cast<std::size_t>(1 + step * k)));
        rhs.push_back(lambda_at(eig_r, static_cast<std::size_t>(1 + k)));
    }
    report.checks.push_back(make_inequality("eigen_step_" + std::to_string(step), lhs, rhs, tol));

    // X X^* is the Hermitian-block Gram matrix; its nonzero spectrum is that of X^* X = lhs.
    const ComplexMatrix& x = pair.gram_factor;
    RealVector outer = eigenvalues(hermitian_part(x * x.adjoint()));
    RealVector inner = eigenvalues(hermitian_part(x.adjoint() * x));
    pad_to(inner, outer.size());
    const double spectral_scale = outer.empty() ? 0.0 : std::max(std::abs(outer.front()), std::abs(outer.back()));
    report.checks.push_back(make_equality("gram_identity", outer, inner, spectral_scale, tol));
    return report;
}

CheckReport full_inequality_suite(const BlockMatrix& h, const Tolerance& tol) {
    CheckReport report = hiroshima_check(h, tol);
    const Eigen::Index alpha = h.block_count();
    if (alpha == 2 || alpha == 3 || alpha == 4) {
        CheckReport step = eigen_step_check(h, alpha == 2 ? 2 : 4, tol);
        step.warnings.clear();
        report.append(step);
    }
    CheckReport det = det_sandwich(h, tol);
    det.warnings.clear();
    report.append(det);

    const ComplexMatrix delta = partial_trace(h);
    const ComplexMatrix padded = direct_sum(delta, zeros(h.side() - delta.rows(), h.side() - delta.rows()));
    report.append(trace_concave_check(h.data(), padded, ConcaveFunction::parse("log1p"), tol));
    return report;
}

}  // namespace hblock
