#pragma once

#include <vector>

#include "rational.hpp"

namespace mdlab {

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns the pivot column of each
// surviving row, in order.
inline std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

inline bool is_invertible(const std::vector<std::vector<Integer>>& m) {
    Matrix q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) q[i].push_back(Rational(x));
    return rank(std::move(q)) == static_cast<int>(m.size());
}

}  // namespace mdlab
