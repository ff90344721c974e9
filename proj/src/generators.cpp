#include "hblock/generators.hpp"

#include <cmath>
#include <numbers>

#include "hblock/errors.hpp"

namespace hblock {

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Makes every block exactly Hermitian while keeping the whole matrix Hermitian.
ComplexMatrix symmetrize_blocks(ComplexMatrix h, Eigen::Index n, Eigen::Index alpha) {
    h = hermitian_part(h);
    for (Eigen::Index s = 0; s < alpha; ++s)
        for (Eigen::Index t = s; t < alpha; ++t) {
            const ComplexMatrix blk = h.block(s * n, t * n, n, n);
            const ComplexMatrix sym = hermitian_part(blk);
            h.block(s * n, t * n, n, n) = sym;
            h.block(t * n, s * n, n, n) = sym;
        }
    return h;
}

}  // namespace

Stream::Stream(std::uint64_t seed, std::string_view label) : engine_(splitmix64(seed ^ fnv1a(label))) {}

double Stream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Stream::symmetric() { return 2.0 * uniform() - 1.0; }

double Stream::gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Stream::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix random_hermitian(Eigen::Index n, Stream& stream, double scale) {
    if (n < 1) throw InputError("random_hermitian: n must be positive");
    ComplexMatrix m(n, n);
    const double r = std::numbers::sqrt2 / 2.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = stream.symmetric();
            const double im = stream.symmetric();
            m(i, j) = Complex(re * r, im * r);
        }
    return scale * hermitian_part(m);
}

ComplexMatrix random_hermitian(Eigen::Index n, std::uint64_t seed, double scale) {
    Stream stream(seed, "random_hermitian");
    return random_hermitian(n, stream, scale);
}

ComplexMatrix random_unitary(Eigen::Index n, Stream& stream) {
    if (n < 1) throw InputError("random_unitary: n must be positive");
    ComplexMatrix q(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) q(i, j) = stream.complex_gaussian();
    // Modified Gram-Schmidt, two passes for orthogonality at working precision.
    for (Eigen::Index j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index k = 0; k < j; ++k) {
                const Complex proj = q.col(k).dot(q.col(j));
                q.col(j) -= proj * q.col(k);
            }
        const double norm = q.col(j).norm();
        if (norm == 0.0) throw NumericalError("random_unitary: degenerate Gaussian sample");
        q.col(j) /= norm;
    }
    return q;
}

std::vector<ComplexMatrix> random_commuting_family(Eigen::Index count, Eigen::Index n, Stream& stream,
                                                   double scale) {
    if (count < 1) throw InputError("random_commuting_family: count must be positive");
    const ComplexMatrix q = random_unitary(n, stream);
    std::vector<ComplexMatrix> family;
    family.reserve(static_cast<std::size_t>(count));
    for (Eigen::Index c = 0; c < count; ++c) {
        Eigen::VectorXcd d(n);
        for (Eigen::Index i = 0; i < n; ++i) d(i) = scale * stream.symmetric();
        family.push_back(hermitian_part(q * d.asDiagonal() * q.adjoint()));
    }
    return family;
}

std::vector<ComplexMatrix> random_commuting_family(Eigen::Index count, Eigen::Index n, std::uint64_t seed,
                                                   double scale) {
    Stream stream(seed, "random_commuting_family");
    return random_commuting_family(count, n, stream, scale);
}

BlockMatrix random_block_psd(const GeneratorSpec& spec) {
    if (spec.alpha < 1 || spec.n < 1 || spec.rank < 0 || !(spec.scale > 0.0))
        throw InputError("random_block_psd: need alpha, n >= 1, rank >= 0, scale > 0");
    const Eigen::Index n = spec.n;
    const Eigen::Index alpha = spec.alpha;
    Stream stream(spec.seed, "random_block_psd");

    ComplexMatrix h = ComplexMatrix::Zero(alpha * n, alpha * n);
    for (Eigen::Index r = 0; r < spec.rank; ++r) {
        const ComplexMatrix t = random_hermitian(n, stream);
        const auto family = random_commuting_family(alpha, n, stream);
        ComplexMatrix x(alpha * n, n);
        for (Eigen::Index s = 0; s < alpha; ++s) x.middleRows(s * n, n) = t * family[static_cast<std::size_t>(s)];
        h += x * x.adjoint();
    }
    h = symmetrize_blocks(h, n, alpha);
    h *= spec.scale;
    return BlockMatrix(std::move(h), n, alpha);
}

ComplexMatrix random_psd(Eigen::Index side, Eigen::Index rank, std::uint64_t seed, double scale) {
    if (side < 1 || rank < 0) throw InputError("random_psd: need side >= 1 and rank >= 0");
    Stream stream(seed, "random_psd");
    ComplexMatrix g(side, rank);
    for (Eigen::Index j = 0; j < rank; ++j)
        for (Eigen::Index i = 0; i < side; ++i) g(i, j) = stream.complex_gaussian();
    return scale * hermitian_part(g * g.adjoint());
}

BlockMatrix equality_case_instance(Eigen::Index n, std::uint64_t seed) {
    if (n < 1) throw InputError("equality_case_instance: n must be positive");
    Stream stream(seed, "equality_case_instance");
    const ComplexMatrix q = random_unitary(n, stream);
    Eigen::VectorXcd a(n), b(n), x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ai = 0.1 + 2.0 * stream.uniform();
        const double bi = 0.1 + 2.0 * stream.uniform();
        a(i) = ai;
        b(i) = bi;
        x(i) = std::sqrt(ai * bi);
    }
    ComplexMatrix h(2 * n, 2 * n);
    h.topLeftCorner(n, n) = q * a.asDiagonal() * q.adjoint();
    h.bottomRightCorner(n, n) = q * b.asDiagonal() * q.adjoint();
    h.topRightCorner(n, n) = q * x.asDiagonal() * q.adjoint();
    h.bottomLeftCorner(n, n) = h.topRightCorner(n, n);
    return BlockMatrix(symmetrize_blocks(h, n, 2), n, 2);
}

BlockMatrix equality_case_from(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw InputError("equality_case_from: A and B must be square of the same side");
    const double comm = (a * b - b * a).norm();
    if (!tol.accepts(comm, a.norm() * b.norm())) throw HypothesisError("equality_case_from: A and B do not commute");
    const Eigen::Index n = a.rows();
    ComplexMatrix h(2 * n, 2 * n);
    const ComplexMatrix x = hermitian_part(psd_sqrt(a, tol) * psd_sqrt(b, tol));
    h.topLeftCorner(n, n) = a;
    h.bottomRightCorner(n, n) = b;
    h.topRightCorner(n, n) = x;
    h.bottomLeftCorner(n, n) = x;
    return BlockMatrix(symmetrize_blocks(h, n, 2), n, 2);
}

BlockMatrix nonhermitian_counterexample() {
    Eigen::VectorXcd v(4);
    v << 1.0, 0.0, 0.0, 1.0;
    return BlockMatrix(v * v.adjoint(), 2, 2);
}

}  // namespace hblock
