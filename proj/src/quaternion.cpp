#include "hblock/quaternion.hpp"

#include "hblock/errors.hpp"

namespace hblock {

std::array<ComplexMatrix, 4> quaternion_units() {
    std::array<ComplexMatrix, 4> units;
    const auto exact = quaternion_units_exact();
    for (std::size_t k = 0; k < 4; ++k) {
        units[k].resize(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const GaussianInt z = exact[k](i, j);
                units[k](i, j) = Complex(static_cast<double>(z.re), static_cast<double>(z.im));
            }
    }
    return units;
}

ComplexMatrix inflate_unit(const ComplexMatrix& unit, Eigen::Index n) {
    if (unit.rows() != 2 || unit.cols() != 2) throw InputError("inflate_unit: expected a 2x2 unit");
    ComplexMatrix e = ComplexMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            e.block(i * n, j * n, n, n).diagonal().setConstant(unit(i, j));
    return e;
}

ComplexMatrix quaternion_congruence(Eigen::Index n) {
    const auto units = quaternion_units();
    ComplexMatrix w = ComplexMatrix::Zero(8 * n, 8 * n);
    for (Eigen::Index s = 0; s < 4; ++s)
        w.block(s * 2 * n, s * 2 * n, 2 * n, 2 * n) = inflate_unit(units[static_cast<std::size_t>(s)], n);
    return w;
}

ComplexMatrix sign_mixing(Eigen::Index block) {
    static constexpr int signs[4][4] = {
        {1, 1, 1, 1},
        {1, -1, 1, -1},
        {1, 1, -1, -1},
        {1, -1, -1, 1},
    };
    ComplexMatrix r = ComplexMatrix::Zero(4 * block, 4 * block);
    for (Eigen::Index s = 0; s < 4; ++s)
        for (Eigen::Index t = 0; t < 4; ++t)
            r.block(s * block, t * block, block, block).diagonal().setConstant(0.5 * signs[s][t]);
    return r;
}

}  // namespace hblock
