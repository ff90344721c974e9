#include "hblock/block_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "hblock/errors.hpp"

namespace hblock {

BlockMatrix::BlockMatrix(ComplexMatrix data, Eigen::Index block_dim, Eigen::Index block_count)
    : data_(std::move(data)), block_dim_(block_dim), block_count_(block_count) {
    if (block_dim_ < 1 || block_count_ < 1) throw InputError("BlockMatrix: block_dim and block_count must be positive");
    if (data_.rows() != data_.cols()) throw InputError("BlockMatrix: data must be square");
    if (data_.rows() != block_dim_ * block_count_) {
        std::ostringstream msg;
        msg << "BlockMatrix: side " << data_.rows() << " != block_count " << block_count_ << " * block_dim "
            << block_dim_;
        throw InputError(msg.str());
    }
    require_finite(data_, "BlockMatrix data");
}

ConstBlockView BlockMatrix::block(Eigen::Index s, Eigen::Index t) const {
    if (s < 1 || s > block_count_ || t < 1 || t > block_count_) {
        std::ostringstream msg;
        msg << "block index (" << s << ", " << t << ") outside 1.." << block_count_;
        throw InputError(msg.str());
    }
    return data_.block((s - 1) * block_dim_, (t - 1) * block_dim_, block_dim_, block_dim_);
}

ComplexMatrix get_block(const BlockMatrix& h, Eigen::Index s, Eigen::Index t) { return h.block(s, t); }

ComplexMatrix partial_trace(const BlockMatrix& h) {
    ComplexMatrix delta = ComplexMatrix::Zero(h.block_dim(), h.block_dim());
    for (Eigen::Index s = 1; s <= h.block_count(); ++s) delta += h.block(s, s);
    return delta;
}

HermitianBlockReport validate_hermitian_blocks(const BlockMatrix& h, const Tolerance& tol) {
    HermitianBlockReport report;
    const double scale = h.data().norm();
    for (Eigen::Index s = 1; s <= h.block_count(); ++s) {
        for (Eigen::Index t = s; t <= h.block_count(); ++t) {
            const auto blk = h.block(s, t);
            const double d = (blk - blk.adjoint()).norm();
            report.max_defect = std::max(report.max_defect, d);
            if (!tol.accepts(d, scale)) report.offending.push_back({s, t, d});
        }
    }
    report.ok = report.offending.empty();
    return report;
}

bool PermutationMap::is_bijection() const {
    std::vector<bool> seen(image.size(), false);
    for (std::size_t k : image) {
        if (k >= image.size() || seen[k]) return false;
        seen[k] = true;
    }
    return true;
}

ComplexMatrix PermutationMap::conjugate(const ComplexMatrix& m) const {
    const auto n = static_cast<Eigen::Index>(size());
    if (m.rows() != n || m.cols() != n) throw InputError("PermutationMap::conjugate: size mismatch");
    ComplexMatrix out(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            out(static_cast<Eigen::Index>(image[i]), static_cast<Eigen::Index>(image[j])) = m(i, j);
    return out;
}

ComplexMatrix PermutationMap::conjugate_inverse(const ComplexMatrix& m) const {
    const auto n = static_cast<Eigen::Index>(size());
    if (m.rows() != n || m.cols() != n) throw InputError("PermutationMap::conjugate_inverse: size mismatch");
    ComplexMatrix out(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            out(i, j) = m(static_cast<Eigen::Index>(image[i]), static_cast<Eigen::Index>(image[j]));
    return out;
}

ComplexMatrix PermutationMap::pull_rows(const ComplexMatrix& m) const {
    const auto n = static_cast<Eigen::Index>(size());
    if (m.rows() != n) throw InputError("PermutationMap::pull_rows: size mismatch");
    ComplexMatrix out(n, m.cols());
    for (Eigen::Index i = 0; i < n; ++i) out.row(i) = m.row(static_cast<Eigen::Index>(image[i]));
    return out;
}

ComplexMatrix PermutationMap::matrix() const {
    const auto n = static_cast<Eigen::Index>(size());
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) p(static_cast<Eigen::Index>(image[i]), i) = 1.0;
    return p;
}

PermutationMap interleave_permutation(Eigen::Index alpha, Eigen::Index n) {
    if (alpha < 1 || n < 1) throw InputError("interleave_permutation: alpha and n must be positive");
    PermutationMap p;
    p.image.resize(static_cast<std::size_t>(2 * alpha * n));
    for (Eigen::Index c = 0; c < 2; ++c)
        for (Eigen::Index s = 0; s < alpha; ++s)
            for (Eigen::Index j = 0; j < n; ++j)
                p.image[static_cast<std::size_t>(c * alpha * n + s * n + j)] =
                    static_cast<std::size_t>(s * 2 * n + c * n + j);
    return p;
}

BlockMatrix duplicate_blocks(const BlockMatrix& h) {
    const Eigen::Index n = h.block_dim();
    const Eigen::Index alpha = h.block_count();
    ComplexMatrix g = ComplexMatrix::Zero(2 * alpha * n, 2 * alpha * n);
    for (Eigen::Index s = 0; s < alpha; ++s) {
        for (Eigen::Index t = 0; t < alpha; ++t) {
            const auto blk = h.block(s + 1, t + 1);
            g.block(s * 2 * n, t * 2 * n, n, n) = blk;
            g.block(s * 2 * n + n, t * 2 * n + n, n, n) = blk;
        }
    }
    return BlockMatrix(std::move(g), 2 * n, alpha);
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

BlockMatrix pad_blocks(const BlockMatrix& h, Eigen::Index block_count) {
    if (block_count < h.block_count()) throw InputError("pad_blocks: cannot shrink the block count");
    const Eigen::Index side = block_count * h.block_dim();
    ComplexMatrix padded = ComplexMatrix::Zero(side, side);
    padded.topLeftCorner(h.side(), h.side()) = h.data();
    return BlockMatrix(std::move(padded), h.block_dim(), block_count);
}

ComplexMatrix embed_diagonal(const ComplexMatrix& m, Eigen::Index offset, Eigen::Index side) {
    if (m.rows() != m.cols() || offset < 0 || offset + m.rows() > side)
        throw InputError("embed_diagonal: block does not fit");
    ComplexMatrix out = ComplexMatrix::Zero(side, side);
    out.block(offset, offset, m.rows(), m.cols()) = m;
    return out;
}

}  // namespace hblock
