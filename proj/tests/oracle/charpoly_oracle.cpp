#include "charpoly_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

#include <gmpxx.h>

namespace hblock::oracle {

namespace {

constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2.0;

struct GaussZ {
    mpz_class re = 0;
    mpz_class im = 0;
    bool is_zero() const { return re == 0 && im == 0; }
};

// All values v of the matrix, scaled by a common 2^-shift, are integers.
struct ExactScale {
    long shift = 0;  // value = integer * 2^shift

    void include(double v) {
        if (v == 0.0) return;
        int e = 0;
        std::frexp(v, &e);
        shift = std::min(shift, static_cast<long>(e) - 53);
    }

    mpz_class to_integer(double v) const {
        if (v == 0.0) return 0;
        int e = 0;
        const double f = std::frexp(v, &e);
        const auto mantissa = static_cast<std::int64_t>(std::ldexp(f, 53));
        mpz_class z(static_cast<long>(mantissa));
        mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(static_cast<long>(e) - 53 - shift));
        return z;
    }
};

int checked_side(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("oracle: matrix must be square");
    if (m.rows() > 12) throw std::invalid_argument("oracle: side limited to 12");
    return static_cast<int>(m.rows());
}

// Leading principal minors D_1..D_m of m - x I, exactly. Returns their signs.
std::vector<int> exact_minor_signs(const ComplexMatrix& m, double x) {
    const int side = checked_side(m);
    ExactScale scale;
    scale.shift = 0;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            scale.include(m(i, j).real());
            scale.include(m(i, j).imag());
        }
    scale.include(x);

    std::vector<GaussZ> a(static_cast<std::size_t>(side * side));
    const mpz_class xi = scale.to_integer(x);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            GaussZ& z = a[static_cast<std::size_t>(i * side + j)];
            z.re = scale.to_integer(m(i, j).real());
            z.im = scale.to_integer(m(i, j).imag());
            if (i == j) z.re -= xi;
        }

    const std::size_t masks = std::size_t{1} << side;
    std::vector<GaussZ> f(masks);
    f[0].re = 1;
    mpz_class t1, t2;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        const int row = std::popcount(mask);
        if (row >= side || f[mask].is_zero()) continue;
        for (int j = 0; j < side; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            const bool negative = std::popcount(mask >> (j + 1)) % 2 == 1;
            const GaussZ& entry = a[static_cast<std::size_t>(row * side + j)];
            GaussZ& dst = f[mask | (std::size_t{1} << j)];
            t1 = entry.re * f[mask].re - entry.im * f[mask].im;
            t2 = entry.re * f[mask].im + entry.im * f[mask].re;
            if (negative) {
                dst.re -= t1;
                dst.im -= t2;
            } else {
                dst.re += t1;
                dst.im += t2;
            }
        }
    }
    std::vector<int> signs(static_cast<std::size_t>(side));
    for (int k = 1; k <= side; ++k) signs[static_cast<std::size_t>(k - 1)] = sgn(f[(std::size_t{1} << k) - 1].re);
    return signs;
}

// Same expansion in floating point; returns nullopt when some sign cannot be
// certified by the a-priori error bound.
std::optional<std::vector<int>> float_minor_signs(const ComplexMatrix& m, double x) {
    const int side = checked_side(m);
    const std::size_t masks = std::size_t{1} << side;
    std::vector<Complex> f(masks, Complex(0.0, 0.0));
    std::vector<double> g(masks, 0.0);  // same recursion on |entries|: bounds every term
    f[0] = 1.0;
    g[0] = 1.0;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        const int row = std::popcount(mask);
        if (row >= side || g[mask] == 0.0) continue;
        for (int j = 0; j < side; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            const bool negative = std::popcount(mask >> (j + 1)) % 2 == 1;
            Complex entry = m(row, j);
            if (row == j) entry -= x;
            const std::size_t next = mask | (std::size_t{1} << j);
            const Complex term = entry * f[mask];
            f[next] += negative ? -term : term;
            g[next] += std::abs(entry) * g[mask];
        }
    }
    std::vector<int> signs(static_cast<std::size_t>(side));
    for (int k = 1; k <= side; ++k) {
        const std::size_t full = (std::size_t{1} << k) - 1;
        const double bound = 32.0 * (k + 1) * unit_roundoff * g[full];
        const double value = f[full].real();
        if (std::abs(value) <= bound) return std::nullopt;
        signs[static_cast<std::size_t>(k - 1)] = value > 0.0 ? 1 : -1;
    }
    return signs;
}

std::optional<int> try_count(const ComplexMatrix& m, double x) {
    std::vector<int> signs;
    if (auto fast = float_minor_signs(m, x))
        signs = std::move(*fast);
    else
        signs = exact_minor_signs(m, x);
    int changes = 0;
    int previous = 1;
    for (int s : signs) {
        if (s == 0) return std::nullopt;
        if (s != previous) ++changes;
        previous = s;
    }
    return changes;
}

int robust_count(const ComplexMatrix& m, double x, double nudge) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        if (auto c = try_count(m, x)) return *c;
        x = std::max(x + nudge, std::nextafter(x, std::numeric_limits<double>::infinity()));
    }
    throw std::runtime_error("oracle: could not avoid a vanishing leading minor");
}

}  // namespace

int count_below(const ComplexMatrix& m, double x) {
    const ComplexMatrix h = hermitian_part(m);
    return robust_count(h, x, 1e-15 * (1.0 + h.cwiseAbs().rowwise().sum().maxCoeff()));
}

std::vector<double> charpoly_eigenvalues(const ComplexMatrix& m, double width) {
    const int side = checked_side(m);
    if (side == 0) return {};
    const ComplexMatrix h = hermitian_part(m);
    const double radius = h.cwiseAbs().rowwise().sum().maxCoeff();
    const double stop = width * (1.0 + radius);
    const double nudge = 1e-3 * stop;

    std::vector<double> ascending;
    for (int j = 1; j <= side; ++j) {
        double lo = -radius - 1.0;  // count(lo) = 0 < j
        double hi = radius + 1.0;   // count(hi) = side >= j
        while (hi - lo > stop) {
            const double mid = 0.5 * (lo + hi);
            if (robust_count(h, mid, nudge) >= j)
                hi = mid;
            else
                lo = mid;
        }
        ascending.push_back(0.5 * (lo + hi));
    }
    std::reverse(ascending.begin(), ascending.end());
    return ascending;
}

Complex exact_determinant(const ComplexMatrix& m) {
    const int side = checked_side(m);
    ExactScale scale;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            scale.include(m(i, j).real());
            scale.include(m(i, j).imag());
        }
    std::vector<GaussZ> a(static_cast<std::size_t>(side * side));
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            a[static_cast<std::size_t>(i * side + j)].re = scale.to_integer(m(i, j).real());
            a[static_cast<std::size_t>(i * side + j)].im = scale.to_integer(m(i, j).imag());
        }
    const std::size_t masks = std::size_t{1} << side;
    std::vector<GaussZ> f(masks);
    f[0].re = 1;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        const int row = std::popcount(mask);
        if (row >= side || f[mask].is_zero()) continue;
        for (int j = 0; j < side; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            const bool negative = std::popcount(mask >> (j + 1)) % 2 == 1;
            const GaussZ& e = a[static_cast<std::size_t>(row * side + j)];
            GaussZ& dst = f[mask | (std::size_t{1} << j)];
            mpz_class re = e.re * f[mask].re - e.im * f[mask].im;
            mpz_class im = e.re * f[mask].im + e.im * f[mask].re;
            if (negative) {
                dst.re -= re;
                dst.im -= im;
            } else {
                dst.re += re;
                dst.im += im;
            }
        }
    }
    const GaussZ& det = f[masks - 1];
    auto to_double = [&](const mpz_class& z) {
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
        return std::ldexp(mant, static_cast<int>(exp + scale.shift * side));
    };
    return {to_double(det.re), to_double(det.im)};
}

}  // namespace hblock::oracle
