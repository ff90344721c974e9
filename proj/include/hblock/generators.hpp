#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "hblock/block_matrix.hpp"
#include "hblock/matrix_kernel.hpp"

namespace hblock {

struct GeneratorSpec {
    std::uint64_t seed = 0;
    Eigen::Index alpha = 2;  // block count
    Eigen::Index n = 2;      // block dimension
    Eigen::Index rank = 1;   // number of Gram summands
    double scale = 1.0;
};

// Deterministic random stream derived from (seed, label). The bits come from
// std::mt19937_64, whose output sequence is fixed by the standard; the
// conversions to doubles are done here rather than through <random>
// distributions, whose algorithms are implementation-defined.
class Stream {
public:
    Stream(std::uint64_t seed, std::string_view label);

    double uniform();            // [0, 1)
    double symmetric();          // [-1, 1)
    double gaussian();           // standard normal, Box-Muller
    Complex complex_gaussian();  // real and imaginary parts N(0, 1/2)

private:
    std::mt19937_64 engine_;
};

// Hermitian with entries of modulus <= scale, so ||M||_2 <= scale * n.
ComplexMatrix random_hermitian(Eigen::Index n, std::uint64_t seed, double scale = 1.0);
ComplexMatrix random_hermitian(Eigen::Index n, Stream& stream, double scale = 1.0);

// Gram-Schmidt (fixed column order) of a complex Gaussian matrix.
ComplexMatrix random_unitary(Eigen::Index n, Stream& stream);

// q diag(d_i) q^* for one shared random unitary q.
std::vector<ComplexMatrix> random_commuting_family(Eigen::Index count, Eigen::Index n, std::uint64_t seed,
                                                   double scale = 1.0);
std::vector<ComplexMatrix> random_commuting_family(Eigen::Index count, Eigen::Index n, Stream& stream,
                                                   double scale = 1.0);

// H = scale * sum_{r=1..rank} X_r X_r^*, X_r = [T_r S_r1; ...; T_r S_r,alpha]
// with T_r random Hermitian and {S_rs} a commuting Hermitian family. Every
// block T S_s S_t T is Hermitian; blocks are symmetrized so that holds exactly.
BlockMatrix random_block_psd(const GeneratorSpec& spec);

// G G^* with G of size side x rank (complex Gaussian). Off-diagonal blocks are
// not Hermitian in general.
ComplexMatrix random_psd(Eigen::Index side, Eigen::Index rank, std::uint64_t seed, double scale = 1.0);

// Commuting PSD A, B with X = A^{1/2} B^{1/2}: [[A, X], [X, B]] attains
// det(I + H) = det(I + A + B).
BlockMatrix equality_case_instance(Eigen::Index n, std::uint64_t seed);

// Same construction from given commuting PSD A and B (HypothesisError if they
// do not commute).
BlockMatrix equality_case_from(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});

// H = v v^* with v = (1, 0, 0, 1), n = 2: the off-diagonal block [[0,1],[0,0]]
// is not Hermitian and lambda_1(H) = 2 > lambda_1(Delta) = 1.
BlockMatrix nonhermitian_counterexample();

}  // namespace hblock
