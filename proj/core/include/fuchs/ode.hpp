#pragma once

#include "fuchs/poly.hpp"

#include <string>
#include <vector>

namespace fuchs {

/// Linear ODE sum a_i(w) y^(i) = 0 with polynomial coefficients over Q.
/// Normal form: coefficients share no common polynomial factor, integer
/// coefficients with content 1, and the leading polynomial has a positive
/// leading coefficient.
class FuchsianODE {
public:
    FuchsianODE() = default;
    /// coeffs = a_0 .. a_n ascending; a_n must be nonzero.
    FuchsianODE(std::vector<Poly> coeffs, std::string var = "w");

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const Poly& coeff(size_t i) const { return c_[i]; }
    const std::vector<Poly>& coeffs() const { return c_; }
    const Poly& leading() const { return c_.back(); }
    const std::string& variable() const { return var_; }

    bool operator==(const FuchsianODE& o) const { return c_ == o.c_; }

    /// Coefficients recentered at p: b_i(x) = a_i(x + p).
    std::vector<Poly> shifted_coeffs(const Rat& p) const;
    /// Equation transported through w = 1/t, cleared to polynomial form in t.
    FuchsianODE at_infinity() const;

    /// Apply the operator to a truncated power series sum s_k w^k given by
    /// `series` (index = power). Result is reliable through index
    /// series.size()-1-order(); entries beyond are not returned.
    std::vector<Rat> apply_to_series(const std::vector<Rat>& series) const;

    std::string str() const;

private:
    std::vector<Poly> c_;
    std::string var_ = "w";
};

}  // namespace fuchs
