#pragma once

#include <string>
#include <vector>

#include "hblock/block_matrix.hpp"
#include "hblock/check_report.hpp"
#include "hblock/matrix_kernel.hpp"

namespace hblock {

// Sum of the k largest singular values, 1 <= k <= min(rows, cols).
double ky_fan_norm(const ComplexMatrix& m, Eigen::Index k);

// Partial sums of the descending-sorted s against those of t, both zero padded
// to the longer length. One check "weak_majorization" with lhs/rhs the partial
// sums.
CheckReport weak_majorization(RealVector s, RealVector t, const Tolerance& tol = {});

// ||H|| <= ||Delta|| for all symmetric norms, as weak majorization of eig(H) by
// eig(Delta), plus tr H = tr Delta. Runs for any block count; a failed
// Hermitian-block validation is reported as a warning, not an error.
CheckReport hiroshima_check(const BlockMatrix& h, const Tolerance& tol = {});

// lambda_{1 + step k}(H) <= lambda_{1 + k}(Delta), k = 0..n-1.
// step 2 needs 2 blocks, step 4 needs 3 or 4 blocks.
CheckReport eigen_step_check(const BlockMatrix& h, int step, const Tolerance& tol = {});

// prod_s det(I + A_ss) >= det(I + H) >= det(I + Delta), via spectra.
CheckReport det_sandwich(const BlockMatrix& h, const Tolerance& tol = {});

// Concave functions on [0, inf) used by trace_concave_check.
struct ConcaveFunction {
    enum class Kind { log1p, sqrt, power, min_c };
    Kind kind = Kind::log1p;
    double param = 0.0;  // exponent for power, cap for min_c

    double operator()(double t) const;
    std::string id() const;
    // Accepted ids: "log1p", "sqrt", "pow:0.25", "pow:0.5", "pow:0.75", "min:<c>" (c > 0).
    static ConcaveFunction parse(const std::string& id);
};

std::vector<ConcaveFunction> concave_catalog();

// Tr f(S) >= Tr f(T) for S majorized by T. If the majorization does not hold
// (or holds only weakly) a warning marks the result as advisory.
CheckReport trace_concave_check(const ComplexMatrix& s, const ComplexMatrix& t, const ConcaveFunction& f,
                                const Tolerance& tol = {});

// lambda_{r+s+1}(Y+Z) <= lambda_{r+1}(Y) + lambda_{s+1}(Z), r + s <= side - 1.
CheckReport weyl_check(const ComplexMatrix& y, const ComplexMatrix& z, Eigen::Index r, Eigen::Index s,
                       const Tolerance& tol = {});

struct OperatorPair {
    ComplexMatrix lhs;  // sum_i S_i T^2 S_i
    ComplexMatrix rhs;  // sum_i T S_i^2 T
    ComplexMatrix gram_factor;  // X = [T S_1; ...; T S_beta], X^* X = lhs
};

// beta = 2 takes a single S (family {I, S}); beta in {3, 4} takes beta
// pairwise commuting Hermitian matrices (HypothesisError otherwise).
OperatorPair build_operator_pair(const ComplexMatrix& t, const std::vector<ComplexMatrix>& s_list, int beta,
                                 const Tolerance& tol = {});

// Ky Fan dominance of eig(lhs) by eig(rhs), stepped eigenvalue inequalities
// (step 2 for beta = 2, step 4 otherwise) and the Gram identity between the
// nonzero spectra of X X^* and X^* X.
CheckReport operator_pair_check(const ComplexMatrix& t, const std::vector<ComplexMatrix>& s_list, int beta,
                                const Tolerance& tol = {});

// hiroshima_check, eigen_step_check (when the block count allows one),
// det_sandwich and trace_concave_check(eig(H), Delta (+) 0, log1p).
CheckReport full_inequality_suite(const BlockMatrix& h, const Tolerance& tol = {});

}  // namespace hblock
