#pragma once

#include "fuchs/bigfloat.hpp"

#include <vector>

namespace fuchs {

using QVec = std::vector<Rat>;
using QMatrix = std::vector<QVec>;

/// Basis of the right nullspace {v : M v = 0}, computed by fraction-free
/// (Bareiss) elimination over the integers after clearing row denominators.
/// Each basis vector is scaled to coprime integer entries with the first
/// nonzero entry positive. Empty result iff M has full column rank.
std::vector<QVec> rational_nullspace(const QMatrix& M);

long rational_rank(const QMatrix& M);

/// Scale a rational vector to coprime integers, first nonzero entry > 0.
QVec canonicalize_vector(QVec v);

QVec mat_vec(const QMatrix& M, const QVec& v);

}  // namespace fuchs
