#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "groebner.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace mdlab {

// Homogenization context: the base grid T (rows >= 1) and its extension S by
// the homogenizing row 0, one x(0,j) per column.
struct HomogenizationContext {
    Grading base;
    Grading extended;

    static HomogenizationContext over(const Grading& baseGrading) {
        for (int j = 1; j <= baseGrading.ncols(); ++j)
            if (baseGrading.contains(xvar(0, j)))
                throw std::invalid_argument("HomogenizationContext: base grid already has row 0");
        return {baseGrading, baseGrading.with_homogenizing_row()};
    }

    Monomial hom_product() const {
        Monomial m;
        for (int j = 1; j <= base.ncols(); ++j) m = m * Monomial::var(xvar(0, j));
        return m;
    }
};

// Z^n-homogenization: pad each term up to the componentwise-maximal degree d
// with homogenizing variables. Setting every x(0,j) = 1 recovers f.
inline Polynomial homogenize_poly(const Polynomial& f, const HomogenizationContext& ctx) {
    if (f.is_zero()) throw std::invalid_argument("homogenize_poly: zero polynomial");
    const int n = ctx.base.ncols();
    std::vector<int> d(n, 0);
    for (const auto& [m, c] : f.terms()) {
        for (Variable v : m.support())
            if (v.row == 0)
                throw std::invalid_argument("homogenize_poly: input contains homogenizing variables");
        auto b = ctx.base.degree(m);
        for (int j = 0; j < n; ++j) d[j] = std::max(d[j], b[j]);
    }
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        auto b = ctx.base.degree(m);
        Monomial::Exps pad;
        for (int j = 0; j < n; ++j)
            if (d[j] > b[j]) pad.emplace_back(xvar(0, j + 1), d[j] - b[j]);
        out.add_term(m * Monomial(std::move(pad)), c);
    }
    return out;
}

// Substitute x(0,j) = 1.
inline Polynomial dehomogenize(const Polynomial& f, const HomogenizationContext& ctx) {
    std::map<Variable, Polynomial> ones;
    for (int j = 1; j <= ctx.base.ncols(); ++j) ones.emplace(xvar(0, j), Polynomial::one());
    return f.substitute(ones);
}

// I^hom: homogenize the generators, then saturate by the product of the
// homogenizing variables (one variable at a time).
inline IdealPresentation homogenize_ideal(const std::vector<Polynomial>& gens,
                                          const HomogenizationContext& ctx,
                                          const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    std::vector<Polynomial> hom;
    hom.reserve(gens.size());
    for (const auto& g : gens) hom.push_back(homogenize_poly(g, ctx));
    IdealPresentation cur(std::move(hom), ctx.extended, true);
    for (int j = 1; j <= ctx.base.ncols(); ++j)
        cur = ideal_saturation(cur, Polynomial::variable(xvar(0, j)), cfg);
    return cur;
}

// All monomials of total Z-degree k in the grid.
inline std::vector<Monomial> monomials_of_z_degree(const Grading& g, int k) {
    std::vector<Monomial> out;
    const int n = g.ncols();
    std::vector<int> acc(n, 0);
    auto rec = [&](auto&& self, int col, int left) -> void {
        if (col == n) {
            if (left == 0)
                for (const auto& m : g.monomials_of_degree(acc)) out.push_back(m);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            acc[col] = v;
            self(self, col + 1, left - v);
            acc[col] = 0;
        }
    };
    rec(rec, 0, k);
    return out;
}

// The largest Z^n-graded subideal of a Z-graded linear ideal J of T. Since
// that subideal is generated in multidegrees <= (1,...,1), it suffices to
// intersect each piece J_{|d|} with the span of the multidegree-d monomials,
// for d in {0,1}^n, by exact linear algebra.
inline IdealPresentation zstar_linear(const IdealPresentation& J) {
    const Grading& g = J.grading;
    const int n = g.ncols();
    for (const auto& p : J.generators) {
        if (p.is_zero()) continue;
        for (const auto& [m, c] : p.terms())
            if (m.total_degree() != 1)
                throw std::invalid_argument("zstar_linear: generators must be Z-graded linear forms");
    }

    std::vector<Polynomial> stars;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> d(n, 0);
        int total = 0;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) d[j] = 1, ++total;

        // monomials of Z-degree `total`, bad (multidegree != d) columns first
        std::vector<Monomial> bad, good;
        for (const auto& m : monomials_of_z_degree(g, total))
            (g.degree(m) == d ? good : bad).push_back(m);
        if (good.empty()) continue;
        std::map<Monomial, int> index;
        for (const auto& m : bad) index.emplace(m, static_cast<int>(index.size()));
        for (const auto& m : good) index.emplace(m, static_cast<int>(index.size()));

        // rows spanning J_total: generator times monomial of degree total-1
        Matrix rows;
        for (const auto& gen : J.generators) {
            for (const auto& m : monomials_of_z_degree(g, total - 1)) {
                Polynomial p = gen.mul_term(m, 1);
                std::vector<Rational> row(index.size(), Rational(0));
                for (const auto& [mm, cc] : p.terms()) row[index.at(mm)] = cc;
                rows.push_back(std::move(row));
            }
        }
        auto pivots = rref(rows);
        const int nbad = static_cast<int>(bad.size());
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < nbad) continue;  // echelon rows with bad pivots have bad support
            Polynomial p;
            for (std::size_t k = 0; k < good.size(); ++k)
                if (rows[r][nbad + k] != 0) p.add_term(good[k], rows[r][nbad + k]);
            if (!p.is_zero()) stars.push_back(p.primitive_part());
        }
    }
    return IdealPresentation(std::move(stars), g, true);
}

// Multigraded Hilbert functions of A and B agree for every a with |a| <= cap.
inline bool verify_equality_hf(const IdealPresentation& A, const IdealPresentation& B, int cap,
                               const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    MonomialIdeal inA = buchberger(A, TermOrder::lex(), cfg).initial();
    MonomialIdeal inB = buchberger(B, TermOrder::lex(), cfg).initial();
    const Grading& g = A.grading;
    const int n = g.ncols();
    std::vector<int> a(n, 0);
    auto rec = [&](auto&& self, int col, int left) -> bool {
        if (col == n)
            return multigraded_hf(inA, g, a) == multigraded_hf(inB, g, a);
        for (int v = 0; v <= left; ++v) {
            a[col] = v;
            bool ok = self(self, col + 1, left - v);
            a[col] = 0;
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0, cap);
}

}  // namespace mdlab
