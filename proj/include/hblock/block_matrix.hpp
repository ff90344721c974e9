#pragma once

#include <cstddef>
#include <vector>

#include "hblock/matrix_kernel.hpp"

namespace hblock {

using ConstBlockView = Eigen::Block<const ComplexMatrix>;

// A square matrix of side block_count * block_dim viewed as a
// block_count x block_count grid of block_dim x block_dim blocks.
// Block indices on the public surface are 1-based.
class BlockMatrix {
public:
    BlockMatrix(ComplexMatrix data, Eigen::Index block_dim, Eigen::Index block_count);

    const ComplexMatrix& data() const { return data_; }
    Eigen::Index block_dim() const { return block_dim_; }
    Eigen::Index block_count() const { return block_count_; }
    Eigen::Index side() const { return data_.rows(); }

    // Read-only view of block (s, t), 1 <= s, t <= block_count.
    ConstBlockView block(Eigen::Index s, Eigen::Index t) const;

private:
    ComplexMatrix data_;
    Eigen::Index block_dim_;
    Eigen::Index block_count_;
};

// Copy of block (s, t); 1-based indices, InputError when out of range.
ComplexMatrix get_block(const BlockMatrix& h, Eigen::Index s, Eigen::Index t);

// Sum of the diagonal blocks.
ComplexMatrix partial_trace(const BlockMatrix& h);

struct BlockDefect {
    Eigen::Index s;  // 1-based
    Eigen::Index t;
    double defect;   // ||A_st - A_st*||_F
};

struct HermitianBlockReport {
    bool ok = true;
    double max_defect = 0.0;
    std::vector<BlockDefect> offending;  // only upper-triangle positions s <= t
};

// ok iff every block is Hermitian within tol, scaled by ||H||_F.
HermitianBlockReport validate_hermitian_blocks(const BlockMatrix& h, const Tolerance& tol = {});

// Bijection on {0, ..., size-1}; coordinate i moves to image[i].
struct PermutationMap {
    std::vector<std::size_t> image;

    std::size_t size() const { return image.size(); }
    bool is_bijection() const;
    // Returns P M P^T, i.e. result(image[i], image[j]) = m(i, j).
    ComplexMatrix conjugate(const ComplexMatrix& m) const;
    // Returns P^T M P, the inverse relabelling.
    ComplexMatrix conjugate_inverse(const ComplexMatrix& m) const;
    // Returns P^T M: row image[i] of m becomes row i.
    ComplexMatrix pull_rows(const ComplexMatrix& m) const;
    ComplexMatrix matrix() const;
};

// Maps H (+) H, laid out as (copy c, block s, inner j) at c*alpha*n + s*n + j,
// onto the duplicated layout s*2n + c*n + j.
PermutationMap interleave_permutation(Eigen::Index alpha, Eigen::Index n);

// G = [A_st (+) A_st], block_dim 2n, same block count.
BlockMatrix duplicate_blocks(const BlockMatrix& h);

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

// Pads H with zero block rows/columns up to block_count.
BlockMatrix pad_blocks(const BlockMatrix& h, Eigen::Index block_count);

// Embeds m into a zero matrix of side `side` with its top-left corner at (offset, offset).
ComplexMatrix embed_diagonal(const ComplexMatrix& m, Eigen::Index offset, Eigen::Index side);

}  // namespace hblock
