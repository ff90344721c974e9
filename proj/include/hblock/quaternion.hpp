#pragma once

#include <array>
#include <cstdint>

#include "hblock/matrix_kernel.hpp"

namespace hblock {

// Gaussian integer a + bi, for exact checks on the quaternion unit matrices.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr GaussianInt operator-(GaussianInt a) { return {-a.re, -a.im}; }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr bool operator==(GaussianInt, GaussianInt) = default;
    constexpr GaussianInt conj() const { return {re, -im}; }
};

// Row-major 2x2 matrix over the Gaussian integers.
struct ExactUnit {
    std::array<GaussianInt, 4> e{};

    constexpr GaussianInt operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }

    friend constexpr ExactUnit operator*(const ExactUnit& a, const ExactUnit& b) {
        ExactUnit c;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                c.e[static_cast<std::size_t>(2 * i + j)] = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
        return c;
    }
    friend constexpr ExactUnit operator+(const ExactUnit& a, const ExactUnit& b) {
        ExactUnit c;
        for (std::size_t k = 0; k < 4; ++k) c.e[k] = a.e[k] + b.e[k];
        return c;
    }
    friend constexpr ExactUnit operator-(const ExactUnit& a) {
        ExactUnit c;
        for (std::size_t k = 0; k < 4; ++k) c.e[k] = -a.e[k];
        return c;
    }
    friend constexpr bool operator==(const ExactUnit&, const ExactUnit&) = default;

    constexpr ExactUnit adjoint() const {
        ExactUnit c;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) c.e[static_cast<std::size_t>(2 * i + j)] = (*this)(j, i).conj();
        return c;
    }
};

// The matrices representing 1, i, j, k:
//   [[1,0],[0,1]], [[i,0],[0,-i]], [[0,i],[i,0]], [[0,-1],[1,0]]
constexpr std::array<ExactUnit, 4> quaternion_units_exact() {
    return {{
        ExactUnit{{{{1, 0}, {0, 0}, {0, 0}, {1, 0}}}},
        ExactUnit{{{{0, 1}, {0, 0}, {0, 0}, {0, -1}}}},
        ExactUnit{{{{0, 0}, {0, 1}, {0, 1}, {0, 0}}}},
        ExactUnit{{{{0, 0}, {-1, 0}, {1, 0}, {0, 0}}}},
    }};
}

std::array<ComplexMatrix, 4> quaternion_units();

// Unit u inflated by the n x n identity: [[u00 I, u01 I], [u10 I, u11 I]].
ComplexMatrix inflate_unit(const ComplexMatrix& unit, Eigen::Index n);

// E_1 (+) E_2 (+) E_3 (+) E_4 with each E_s = inflate_unit(unit_s, n); side 8n.
ComplexMatrix quaternion_congruence(Eigen::Index n);

// (1/2) * 4x4 sign matrix (x) I_{block}; side 4 * block.
ComplexMatrix sign_mixing(Eigen::Index block);

}  // namespace hblock
