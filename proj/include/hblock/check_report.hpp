#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hblock/matrix_kernel.hpp"

namespace hblock {

// One named inequality lhs_i <= rhs_i (i over sub-inequalities). Sub-inequality
// i passes iff rhs_i - lhs_i >= -(atol + rtol * scale_i).
struct Check {
    std::string name;
    RealVector lhs;
    RealVector rhs;
    RealVector scale;
    bool scalar = true;  // serialize lhs/rhs as numbers rather than arrays
    double margin = 0.0;  // min_i (rhs_i - lhs_i)
    bool passed = true;
    std::optional<std::size_t> first_failure;  // 0-based sub-inequality index
};

struct CheckReport {
    Tolerance tolerance;
    std::vector<Check> checks;
    std::vector<std::string> warnings;

    bool passed() const;
    const Check* find(const std::string& name) const;
    const Check& at(const std::string& name) const;
    void append(const CheckReport& other);
};

// lhs_i <= rhs_i with scale_i = max(|lhs_i|, |rhs_i|).
Check make_inequality(std::string name, RealVector lhs, RealVector rhs, const Tolerance& tol, bool scalar = false);
Check make_inequality(std::string name, double lhs, double rhs, const Tolerance& tol);

// A defect that should vanish: lhs = defect, rhs = 0, judged on `scale`.
Check make_defect(std::string name, double defect, double scale, const Tolerance& tol);

// Two-sided equality |lhs - rhs| <= slack, scale max(|lhs|, |rhs|).
Check make_equality(std::string name, RealVector lhs, RealVector rhs, const Tolerance& tol, bool scalar = false);

// Equality with one common scale for every entry, for spectra whose rounding
// error is proportional to the matrix norm rather than to each eigenvalue.
Check make_equality(std::string name, RealVector lhs, RealVector rhs, double scale, const Tolerance& tol);

}  // namespace hblock
