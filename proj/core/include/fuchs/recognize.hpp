#pragma once

#include "fuchs/cmatrix.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fuchs {
namespace recognize {

/// Integer relation for the real vector v (|v| <= 12): integers a, not all
/// zero, with |sum a_i v_i| < 10^{-P/2} and max |a_i| < 10^{P/4}, or nullopt.
/// Inputs must carry at least P digits; P < 30 throws.
std::optional<std::vector<Int>> pslq(const std::vector<BigFloat>& v, long digits);

/// A named, reusable constant basis evaluated at some working precision.
/// Construction verifies that no small relation exists among the basis
/// values themselves. Members are either registry tokens or caller-supplied
/// evaluators (precision -> value), so every member can be re-evaluated at
/// a higher precision for the verification pass.
class ConstantBasis {
public:
    using Evaluator = std::function<BigFloat(long)>;

    ConstantBasis(std::vector<std::string> names, long digits);
    ConstantBasis(std::vector<std::string> names, std::vector<Evaluator> evals, long digits);

    const std::vector<std::string>& names() const { return names_; }
    long digits() const { return digits_; }
    const std::vector<BigFloat>& values() const { return values_; }
    /// Re-evaluate every member at a different precision.
    std::vector<BigFloat> values_at(long digits) const;

    /// Evaluate one registered basis token (throws on unknown token).
    static BigFloat eval_token(const std::string& name, long digits);
    static std::vector<std::string> registry();

private:
    void check_independence();
    std::vector<std::string> names_;
    std::vector<Evaluator> evals_;
    std::vector<BigFloat> values_;
    long digits_;
};

struct Recognition {
    bool resolved = false;
    std::vector<Rat> coeffs;  // x = sum coeffs[i] * basis[i] when resolved
};

/// Express x over the basis with rational coefficients; accepted only when
/// the PSLQ relation re-verifies at P+20 digits and the denominators stay
/// below 10^{P/8}. Unresolved is a value, not an error.
Recognition recognize_value(const BigComplex& x, const ConstantBasis& basis, long digits);

struct MatrixRecognition {
    std::vector<std::vector<Recognition>> cells;
    std::vector<std::pair<size_t, size_t>> unresolved;
    std::string render(const ConstantBasis& basis) const;
};

/// Cellwise recognition; entries below 10^{-(P-10)} count as exact zeros.
MatrixRecognition recognize_matrix(const CMatrix& M, const ConstantBasis& basis, long digits);

}  // namespace recognize
}  // namespace fuchs
