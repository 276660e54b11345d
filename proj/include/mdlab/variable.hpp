#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace mdlab {

// Reserved row labels. Grid variables x(i,j) live at row >= 0, where row 0 is
// the homogenizing row of column j.
inline constexpr int kZRow = -1;       // Z(j): coordinates of invariant polynomials
inline constexpr int kElimRow = -2;    // t(j): auxiliary elimination variables
inline constexpr int kScalarRow = -3;  // a(j): symbolic scalar parameters

// A variable of the ambient ring, identified by (row, col). The default
// ordering (row, then col) doubles as the default term-order priority,
// highest first: within a column, x(0,j) > x(1,j) > ...; across the grid it
// is row-major, which makes the default lex order a diagonal order on
// matrices of variables.
struct Variable {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable xvar(int i, int j) {
    if (i < 0 || j < 1) throw std::invalid_argument("xvar: need row >= 0, col >= 1");
    return {i, j};
}
inline Variable zvar(int j) {
    if (j < 1) throw std::invalid_argument("zvar: need col >= 1");
    return {kZRow, j};
}
inline Variable elim_var(int j = 1) { return {kElimRow, j}; }
inline Variable scalar_var(int j) { return {kScalarRow, j}; }

inline std::string to_string(const Variable& v) {
    switch (v.row) {
        case kZRow: return "Z(" + std::to_string(v.col) + ")";
        case kElimRow: return "t(" + std::to_string(v.col) + ")";
        case kScalarRow: return "a(" + std::to_string(v.col) + ")";
        default:
            return "x(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
    }
}

}  // namespace mdlab
