#include "hblock/check_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hblock/errors.hpp"

namespace hblock {

namespace {

void finalize(Check& c, const Tolerance& tol, bool two_sided) {
    c.margin = std::numeric_limits<double>::infinity();
    c.passed = true;
    c.first_failure.reset();
    for (std::size_t i = 0; i < c.lhs.size(); ++i) {
        const double gap = two_sided ? -std::abs(c.rhs[i] - c.lhs[i]) : c.rhs[i] - c.lhs[i];
        c.margin = std::min(c.margin, gap);
        if (gap < -tol.slack(c.scale[i]) || std::isnan(gap)) {
            c.passed = false;
            if (!c.first_failure) c.first_failure = i;
        }
    }
    if (c.lhs.empty()) c.margin = 0.0;
}

RealVector max_abs(const RealVector& a, const RealVector& b) {
    RealVector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = std::max(std::abs(a[i]), std::abs(b[i]));
    return s;
}

}  // namespace

bool CheckReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* CheckReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const Check& CheckReport::at(const std::string& name) const {
    const Check* c = find(name);
    if (!c) throw InputError("CheckReport: no check named '" + name + "'");
    return *c;
}

void CheckReport::append(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

Check make_inequality(std::string name, RealVector lhs, RealVector rhs, const Tolerance& tol, bool scalar) {
    if (lhs.size() != rhs.size()) throw InputError("make_inequality: side length mismatch");
    Check c;
    c.name = std::move(name);
    c.scale = max_abs(lhs, rhs);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.scalar = scalar;
    finalize(c, tol, false);
    return c;
}

Check make_inequality(std::string name, double lhs, double rhs, const Tolerance& tol) {
    return make_inequality(std::move(name), RealVector{lhs}, RealVector{rhs}, tol, true);
}

Check make_defect(std::string name, double defect, double scale, const Tolerance& tol) {
    Check c;
    c.name = std::move(name);
    c.lhs = {defect};
    c.rhs = {0.0};
    c.scale = {scale};
    c.scalar = true;
    finalize(c, tol, false);
    return c;
}

Check make_equality(std::string name, RealVector lhs, RealVector rhs, const Tolerance& tol, bool scalar) {
    if (lhs.size() != rhs.size()) throw InputError("make_equality: side length mismatch");
    Check c;
    c.name = std::move(name);
    c.scale = max_abs(lhs, rhs);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.scalar = scalar;
    finalize(c, tol, true);
    return c;
}

Check make_equality(std::string name, RealVector lhs, RealVector rhs, double scale, const Tolerance& tol) {
    Check c = make_equality(std::move(name), std::move(lhs), std::move(rhs), tol);
    std::fill(c.scale.begin(), c.scale.end(), scale);
    finalize(c, tol, true);
    return c;
}

}  // namespace hblock
