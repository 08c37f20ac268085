#include "fuchs/linalg.hpp"

#include <stdexcept>

namespace fuchs {

namespace {

using ZMatrix = std::vector<std::vector<Int>>;

// Clear denominators row by row; row scaling preserves the nullspace.
ZMatrix to_integer_rows(const QMatrix& M) {
    ZMatrix Z(M.size());
    for (size_t i = 0; i < M.size(); ++i) {
        Int den(1);
        for (const Rat& q : M[i]) den = lcm(den, Int(q.get_den()));
        Z[i].reserve(M[i].size());
        for (const Rat& q : M[i])
            Z[i].push_back(Int(q.get_num()) * den / Int(q.get_den()));
    }
    return Z;
}

// Bareiss fraction-free elimination to row echelon form.
// Returns pivot column indices; Z is modified in place.
std::vector<size_t> bareiss_echelon(ZMatrix& Z) {
    std::vector<size_t> pivots;
    if (Z.empty()) return pivots;
    const size_t rows = Z.size(), cols = Z[0].size();
    Int denom(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && Z[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(Z[r], Z[sel]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Int t = Z[r][c] * Z[i][j] - Z[i][c] * Z[r][j];
                Z[i][j] = t / denom;  // exact by the Bareiss identity
            }
            Z[i][c] = 0;
        }
        denom = Z[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

QVec canonicalize_vector(QVec v) {
    Int den(1);
    for (const Rat& q : v) den = lcm(den, Int(q.get_den()));
    Int content(0);
    std::vector<Int> z(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        z[i] = Int(v[i].get_num()) * den / Int(v[i].get_den());
        content = gcd(content, z[i]);
    }
    if (content == 0) return v;  // zero vector
    for (size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) {
            if (z[i] < 0) content = -content;
            break;
        }
    for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(z[i]) / Rat(content);
    return v;
}

std::vector<QVec> rational_nullspace(const QMatrix& M) {
    if (M.empty() || M[0].empty())
        throw std::invalid_argument("rational_nullspace: empty matrix");
    const size_t cols = M[0].size();
    for (const auto& row : M)
        if (row.size() != cols)
            throw std::invalid_argument("rational_nullspace: ragged matrix");

    ZMatrix Z = to_integer_rows(M);
    std::vector<size_t> pivots = bareiss_echelon(Z);

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<QVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = Rat(1);
        // back-substitute through the echelon rows
        for (size_t k = pivots.size(); k-- > 0;) {
            const size_t pc = pivots[k];
            if (pc > f) continue;
            Rat acc(0);
            for (size_t j = pc + 1; j < cols; ++j)
                if (v[j] != 0) acc += Rat(Z[k][j]) * v[j];
            v[pc] = -acc / Rat(Z[k][pc]);
        }
        basis.push_back(canonicalize_vector(std::move(v)));
    }
    return basis;
}

long rational_rank(const QMatrix& M) {
    if (M.empty() || M[0].empty()) return 0;
    ZMatrix Z = to_integer_rows(M);
    return static_cast<long>(bareiss_echelon(Z).size());
}

QVec mat_vec(const QMatrix& M, const QVec& v) {
    QVec r(M.size(), Rat(0));
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (M[i][j] != 0 && v[j] != 0) r[i] += M[i][j] * v[j];
    return r;
}

}  // namespace fuchs
