#include <gtest/gtest.h>

#include "hblock/quaternion.hpp"

using namespace hblock;

namespace {

constexpr auto units = quaternion_units_exact();
constexpr ExactUnit one = units[0];
constexpr ExactUnit qi = units[1];
constexpr ExactUnit qj = units[2];
constexpr ExactUnit qk = units[3];

}  // namespace

// The identities hold at compile time; the runtime expectations keep them visible in test output.
static_assert(qi * qi == -one);
static_assert(qj * qj == -one);
static_assert(qk * qk == -one);
static_assert(qi * qj * qk == -one);

TEST(QuaternionUnits, HamiltonRelations) {
    EXPECT_EQ(qi * qi, -one);
    EXPECT_EQ(qj * qj, -one);
    EXPECT_EQ(qk * qk, -one);
    EXPECT_EQ(qi * qj * qk, -one);
    EXPECT_EQ(qi * qj, qk);
    EXPECT_EQ(qj * qi, -qk);
}

TEST(QuaternionUnits, UnitaryExactly) {
    for (const ExactUnit& u : units) EXPECT_EQ(u * u.adjoint(), one);
}

TEST(QuaternionUnits, MixedProductsSkewHermitian) {
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t t = 0; t < 4; ++t) {
            if (s == t) continue;
            const ExactUnit p = units[s] * units[t].adjoint();
            EXPECT_EQ(p + p.adjoint(), ExactUnit{}) << s << "," << t;
        }
}

TEST(QuaternionUnits, FloatingMatchesExact) {
    const auto fl = quaternion_units();
    for (std::size_t u = 0; u < 4; ++u)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const GaussianInt g = units[u](i, j);
                EXPECT_EQ(fl[u](i, j), Complex(static_cast<double>(g.re), static_cast<double>(g.im)));
            }
    EXPECT_EQ(fl[0], identity(2));
}

TEST(InflateUnit, KroneckerWithIdentity) {
    const auto fl = quaternion_units();
    const ComplexMatrix e = inflate_unit(fl[2], 3);
    ASSERT_EQ(e.rows(), 6);
    EXPECT_EQ(e.topLeftCorner(3, 3).norm(), 0.0);
    EXPECT_EQ(e.topRightCorner(3, 3), Complex(0, 1) * identity(3));
    EXPECT_EQ(e.bottomLeftCorner(3, 3), Complex(0, 1) * identity(3));
    EXPECT_EQ(unitarity_defect(e), 0.0);
}

TEST(QuaternionCongruence, BlockDiagonalOfInflatedUnits) {
    const Eigen::Index n = 2;
    const ComplexMatrix w = quaternion_congruence(n);
    ASSERT_EQ(w.rows(), 8 * n);
    const auto fl = quaternion_units();
    for (Eigen::Index s = 0; s < 4; ++s)
        EXPECT_EQ(w.block(s * 2 * n, s * 2 * n, 2 * n, 2 * n), inflate_unit(fl[static_cast<std::size_t>(s)], n));
    EXPECT_LE(unitarity_defect(w), 1e-12);
}

TEST(SignMixing, UnitaryWithSignPattern) {
    const ComplexMatrix r = sign_mixing(1);
    ASSERT_EQ(r.rows(), 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_EQ(std::abs(r(i, j)), 0.5);
    EXPECT_EQ(r.row(0), ComplexMatrix::Constant(1, 4, 0.5));
    EXPECT_LE(unitarity_defect(sign_mixing(3)), 1e-12);
}
