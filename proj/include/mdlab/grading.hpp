#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "monomial.hpp"
#include "polynomial.hpp"
#include "variable.hpp"

namespace mdlab {

// The standard Z^n grading deg x(i,j) = e_j over an explicit variable grid.
// The grid doubles as the ring context: which rows exist in which column.
class Grading {
public:
    Grading() = default;

    // Columns 1..ncols, each with rows first_row..first_row+nrows-1.
    static Grading grid(int nrows, int ncols, int first_row = 1) {
        if (nrows < 1 || ncols < 1) throw std::invalid_argument("Grading::grid: empty grid");
        Grading g;
        g.rows_.assign(ncols, {});
        for (int j = 0; j < ncols; ++j)
            for (int i = 0; i < nrows; ++i) g.rows_[j].push_back(first_row + i);
        return g;
    }

    // Adds the homogenizing row 0 to every column.
    Grading with_homogenizing_row() const {
        Grading g = *this;
        for (auto& rows : g.rows_) {
            if (std::find(rows.begin(), rows.end(), 0) == rows.end())
                rows.insert(rows.begin(), 0);
        }
        return g;
    }

    int ncols() const { return static_cast<int>(rows_.size()); }

    const std::vector<int>& rows(int col) const {
        check_col(col);
        return rows_[col - 1];
    }

    bool contains(Variable v) const {
        if (v.col < 1 || v.col > ncols() || v.row < 0) return false;
        const auto& r = rows_[v.col - 1];
        return std::find(r.begin(), r.end(), v.row) != r.end();
    }

    std::vector<Variable> variables() const {
        std::vector<Variable> out;
        for (int j = 1; j <= ncols(); ++j)
            for (int i : rows(j)) out.push_back({i, j});
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> degree_of(Variable v) const {
        if (!contains(v)) throw std::invalid_argument("Grading: unknown variable " + to_string(v));
        std::vector<int> d(ncols(), 0);
        d[v.col - 1] = 1;
        return d;
    }

    std::vector<int> degree(const Monomial& m) const {
        std::vector<int> d(ncols(), 0);
        for (const auto& [v, e] : m.exponents()) {
            if (!contains(v)) throw std::invalid_argument("Grading: unknown variable " + to_string(v));
            d[v.col - 1] += e;
        }
        return d;
    }

    bool is_homogeneous(const Polynomial& p) const {
        if (p.is_zero()) return true;
        auto d0 = degree(p.terms().begin()->first);
        for (const auto& [m, c] : p.terms())
            if (degree(m) != d0) return false;
        return true;
    }

    // Degree of a nonzero multigraded polynomial.
    std::vector<int> degree(const Polynomial& p) const {
        if (p.is_zero()) throw std::invalid_argument("Grading: degree of zero");
        if (!is_homogeneous(p)) throw std::invalid_argument("Grading: polynomial not multigraded");
        return degree(p.terms().begin()->first);
    }

    // All monomials of multidegree a, column by column.
    std::vector<Monomial> monomials_of_degree(const std::vector<int>& a) const {
        if (static_cast<int>(a.size()) != ncols())
            throw std::invalid_argument("Grading: degree vector length mismatch");
        std::vector<Monomial> acc{Monomial()};
        for (int j = 1; j <= ncols(); ++j) {
            if (a[j - 1] < 0) return {};
            std::vector<Monomial> col = column_monomials(j, a[j - 1]);
            std::vector<Monomial> next;
            next.reserve(acc.size() * col.size());
            for (const auto& base : acc)
                for (const auto& cm : col) next.push_back(base * cm);
            acc = std::move(next);
        }
        return acc;
    }

private:
    // Degree-d monomials in the variables of one column.
    std::vector<Monomial> column_monomials(int col, int d) const {
        const auto& r = rows(col);
        std::vector<Monomial> out;
        std::vector<int> exps(r.size(), 0);
        auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
            if (idx + 1 == r.size()) {
                exps[idx] = left;
                Monomial::Exps e;
                for (std::size_t k = 0; k < r.size(); ++k)
                    if (exps[k]) e.emplace_back(Variable{r[k], col}, exps[k]);
                out.push_back(Monomial(std::move(e)));
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exps[idx] = e;
                self(self, idx + 1, left - e);
            }
        };
        rec(rec, 0, d);
        return out;
    }

    void check_col(int col) const {
        if (col < 1 || col > ncols()) throw std::invalid_argument("Grading: column out of range");
    }

    std::vector<std::vector<int>> rows_;  // rows_[j-1]: sorted row labels of column j
};

}  // namespace mdlab
