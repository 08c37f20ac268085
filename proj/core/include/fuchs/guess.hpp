#pragma once

#include "fuchs/ode.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fuchs {
namespace guess {

struct SeriesData {
    std::vector<Rat> coefficients;  // index = power of w
    std::string origin;

    long top_index() const { return static_cast<long>(coefficients.size()) - 1; }
};

SeriesData load_series(const std::string& path);
void save_series(const SeriesData& s, const std::string& path);

enum class Method { Modular, Exact };

struct GuessOptions {
    unsigned max_order = 12;
    unsigned max_degree = 60;
    Method method = Method::Modular;
    unsigned holdout = 10;  // coefficients reserved for the overfit gate
};

struct GuessResult {
    FuchsianODE ode;
    unsigned order = 0, degree = 0;
    bool minimal_order_certificate = false;  // false: possibly non-minimal, term-limited
    long verified_through = 0;               // annihilation order against the input
};

/// Scan candidate shapes (r, d) by ascending unknown count (r+1)(d+1), ties
/// to smaller r. For each shape solve sum_i p_i(w) y^(i) = 0 mod w^(N-9)
/// (modular images + rational reconstruction, or exact elimination), keep a
/// shape whose nullspace is one-dimensional and whose relation annihilates
/// the held-out coefficients. Returns nullopt when no shape fits.
/// Throws std::runtime_error("need more terms") on an ambiguous shape.
std::optional<GuessResult> guess_ode(const SeriesData& s, const GuessOptions& opt = {});

/// Largest M such that the operator applied to the truncated series vanishes
/// through w^M (exact arithmetic). Returns -1 if already order 0 fails.
long verify_annihilation(const FuchsianODE& ode, const SeriesData& s);

}  // namespace guess
}  // namespace fuchs
