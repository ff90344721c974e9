#include <gtest/gtest.h>

#include "hblock/block_matrix.hpp"
#include "hblock/errors.hpp"
#include "hblock/generators.hpp"

using namespace hblock;

namespace {

ComplexMatrix diag(std::initializer_list<double> d) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double x : d) m(i, i) = x, ++i;
    return m;
}

ComplexMatrix two_by_two_blocks(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b) {
    const Eigen::Index n = a.rows();
    ComplexMatrix h(2 * n, 2 * n);
    h << a, x, x.adjoint(), b;
    return h;
}

GeneratorSpec spec(std::uint64_t seed, Eigen::Index alpha, Eigen::Index n, Eigen::Index rank = 2) {
    return {seed, alpha, n, rank, 1.0};
}

}  // namespace

TEST(BlockMatrix, RejectsInconsistentShape) {
    EXPECT_THROW(BlockMatrix(identity(5), 2, 2), InputError);
    EXPECT_THROW(BlockMatrix(ComplexMatrix::Zero(4, 3), 2, 2), InputError);
    EXPECT_THROW(BlockMatrix(identity(4), 0, 4), InputError);
}

TEST(GetBlock, Examples) {
    const BlockMatrix id(identity(4), 2, 2);
    EXPECT_EQ(get_block(id, 1, 2), ComplexMatrix::Zero(2, 2));

    ComplexMatrix x(2, 2);
    x << Complex(1, 1), 2.0, 3.0, Complex(0, -4);
    const BlockMatrix h(two_by_two_blocks(diag({5, 6}), x, diag({7, 8})), 2, 2);
    EXPECT_EQ(get_block(h, 1, 2), x);
    EXPECT_EQ(get_block(h, 2, 1), x.adjoint());
    EXPECT_EQ(ComplexMatrix(h.block(2, 2)), diag({7, 8}));
}

TEST(GetBlock, AdjointSymmetryOnRandomInstances) {
    const BlockMatrix h = random_block_psd(spec(3, 3, 3));
    for (Eigen::Index s = 1; s <= 3; ++s)
        for (Eigen::Index t = 1; t <= 3; ++t) EXPECT_EQ(get_block(h, s, t), get_block(h, t, s).adjoint());
}

TEST(GetBlock, IndexOutOfRange) {
    const BlockMatrix h(identity(4), 2, 2);
    EXPECT_THROW(get_block(h, 0, 1), InputError);
    EXPECT_THROW(get_block(h, 1, 3), InputError);
}

TEST(PartialTrace, Examples) {
    for (Eigen::Index alpha = 1; alpha <= 4; ++alpha) {
        const BlockMatrix id(identity(alpha * 3), 3, alpha);
        EXPECT_EQ(partial_trace(id), static_cast<double>(alpha) * identity(3));
    }
    ComplexMatrix x(2, 2);
    x << 0.3, Complex(0.1, 0.2), 0.0, 0.4;
    const BlockMatrix h(two_by_two_blocks(diag({1, 2}), x, diag({3, 4})), 2, 2);
    EXPECT_EQ(partial_trace(h), diag({4, 6}));
}

TEST(PartialTrace, TracePreservedOnRandomInstances) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Eigen::Index alpha = 2 + static_cast<Eigen::Index>(seed % 5);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(seed % 4);
        const BlockMatrix h = random_block_psd(spec(seed, alpha, n));
        const ComplexMatrix delta = partial_trace(h);
        EXPECT_NEAR(std::abs(delta.trace() - h.data().trace()), 0.0, 1e-9);
        EXPECT_LE(hermitian_defect(delta), 1e-12);
        EXPECT_GE(eigenvalues(delta).back(), -1e-10);
    }
}

TEST(PartialTrace, Linear) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BlockMatrix h1 = random_block_psd(spec(seed, 3, 2));
        const BlockMatrix h2 = random_block_psd(spec(seed + 1000, 3, 2));
        const BlockMatrix sum(h1.data() + h2.data(), 2, 3);
        EXPECT_LE((partial_trace(sum) - partial_trace(h1) - partial_trace(h2)).norm(), 1e-12);
    }
}

TEST(ValidateHermitianBlocks, Examples) {
    ComplexMatrix x(2, 2);
    x << 1.0, Complex(0, 2), Complex(0, -2), 3.0;
    const BlockMatrix ok(two_by_two_blocks(diag({5, 5}), x, diag({5, 5})), 2, 2);
    EXPECT_TRUE(validate_hermitian_blocks(ok).ok);

    const HermitianBlockReport bad = validate_hermitian_blocks(nonhermitian_counterexample());
    EXPECT_FALSE(bad.ok);
    ASSERT_EQ(bad.offending.size(), 1u);
    EXPECT_EQ(bad.offending[0].s, 1);
    EXPECT_EQ(bad.offending[0].t, 2);
    EXPECT_NEAR(bad.offending[0].defect, std::sqrt(2.0), 1e-15);

    EXPECT_TRUE(validate_hermitian_blocks(BlockMatrix(ComplexMatrix::Zero(6, 6), 2, 3)).ok);
}

TEST(ValidateHermitianBlocks, PassesOnGeneratorOutput) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const BlockMatrix h = random_block_psd(spec(seed, 2 + static_cast<Eigen::Index>(seed % 5), 3, 3));
        EXPECT_TRUE(validate_hermitian_blocks(h).ok) << "seed " << seed;
    }
}

TEST(InterleavePermutation, Examples) {
    EXPECT_EQ(interleave_permutation(1, 1).image, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(interleave_permutation(2, 1).image, (std::vector<std::size_t>{0, 2, 1, 3}));
    for (Eigen::Index a = 1; a <= 4; ++a)
        for (Eigen::Index n = 1; n <= 4; ++n) EXPECT_TRUE(interleave_permutation(a, n).is_bijection());
}

// Independent oracle: evaluate the (c, s, j) -> (s, c, j) relabelling entry
// by entry on H (+) H.
TEST(InterleavePermutation, ConjugationEqualsDuplication) {
    for (Eigen::Index alpha = 1; alpha <= 4; ++alpha) {
        for (Eigen::Index n = 1; n <= 4; ++n) {
            const BlockMatrix h = random_block_psd(spec(static_cast<std::uint64_t>(10 * alpha + n), alpha, n));
            const ComplexMatrix hh = direct_sum(h.data(), h.data());
            const PermutationMap p = interleave_permutation(alpha, n);
            const ComplexMatrix g = duplicate_blocks(h).data();
            EXPECT_EQ(p.conjugate(hh), g);
            EXPECT_EQ(p.matrix() * hh * p.matrix().transpose(), g);
            EXPECT_EQ(p.conjugate_inverse(g), hh);

            const Eigen::Index side = 2 * alpha * n;
            ComplexMatrix oracle = ComplexMatrix::Zero(side, side);
            auto pos = [&](Eigen::Index c, Eigen::Index s, Eigen::Index j) { return s * 2 * n + c * n + j; };
            for (Eigen::Index c = 0; c < 2; ++c)
                for (Eigen::Index s = 0; s < alpha; ++s)
                    for (Eigen::Index t = 0; t < alpha; ++t)
                        for (Eigen::Index i = 0; i < n; ++i)
                            for (Eigen::Index j = 0; j < n; ++j)
                                oracle(pos(c, s, i), pos(c, t, j)) = h.data()(s * n + i, t * n + j);
            EXPECT_EQ(g, oracle);
        }
    }
}

TEST(PermutationMap, PullRowsInvertsConjugation) {
    const PermutationMap p = interleave_permutation(3, 2);
    const ComplexMatrix m = random_hermitian(12, 5);
    EXPECT_EQ(p.pull_rows(p.matrix() * m), m);
    PermutationMap broken{{0, 0, 1}};
    EXPECT_FALSE(broken.is_bijection());
}

TEST(DuplicateBlocks, Examples) {
    EXPECT_EQ(duplicate_blocks(BlockMatrix(identity(4), 1, 4)).data(), identity(8));

    ComplexMatrix h = ComplexMatrix::Zero(4, 4);
    h(0, 1) = Complex(0.5, 0.25);
    h(1, 0) = std::conj(h(0, 1));
    const BlockMatrix g = duplicate_blocks(BlockMatrix(h, 1, 4));
    EXPECT_EQ(g.block_dim(), 2);
    EXPECT_EQ(g.block_count(), 4);
    ComplexMatrix want = ComplexMatrix::Zero(2, 2);
    want(0, 0) = want(1, 1) = h(0, 1);
    EXPECT_EQ(get_block(g, 1, 2), want);
}

TEST(DuplicateBlocks, PreservesPsd) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BlockMatrix h = random_block_psd(spec(seed, 4, 2, 1));
        const RealVector ev = eigenvalues(duplicate_blocks(h).data());
        EXPECT_GE(ev.back(), -1e-10);
    }
}

TEST(DirectSum, Examples) {
    EXPECT_EQ(direct_sum(diag({1}), diag({2})), diag({1, 2}));
    EXPECT_EQ(direct_sum(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(1, 1)), ComplexMatrix::Zero(3, 3));

    const ComplexMatrix a = random_hermitian(3, 1);
    const ComplexMatrix b = random_hermitian(2, 2);
    RealVector want = eigenvalues(a);
    const RealVector eb = eigenvalues(b);
    want.insert(want.end(), eb.begin(), eb.end());
    std::sort(want.rbegin(), want.rend());
    const RealVector got = eigenvalues(direct_sum(a, b));
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
}

TEST(PadBlocks, ZeroBorder) {
    const BlockMatrix h = random_block_psd(spec(1, 3, 2));
    const BlockMatrix padded = pad_blocks(h, 4);
    EXPECT_EQ(padded.block_count(), 4);
    EXPECT_EQ(padded.data().topLeftCorner(6, 6), h.data());
    EXPECT_EQ(padded.data().rightCols(2).norm(), 0.0);
    EXPECT_EQ(padded.data().bottomRows(2).norm(), 0.0);
    EXPECT_EQ(partial_trace(padded), partial_trace(h));
}

TEST(EmbedDiagonal, Placement) {
    const ComplexMatrix e = embed_diagonal(diag({1, 2}), 1, 4);
    EXPECT_EQ(e, diag({0, 1, 2, 0}));
}
