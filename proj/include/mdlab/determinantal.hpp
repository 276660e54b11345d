#pragma once

#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "hilbert.hpp"
#include "latticepaths.hpp"
#include "symfunc.hpp"

namespace mdlab {

// The ideal I_t(X) of t-minors of an m x n matrix of variables, graded by
// columns. Derived data: ell = m+1-t and the rectangular shape ell^(t-1).
struct DetSpec {
    int m = 0, n = 0, t = 0;

    DetSpec(int m_, int n_, int t_) : m(m_), n(n_), t(t_) {
        if (t < 1 || t > std::min(m, n))
            throw std::invalid_argument("DetSpec: need 1 <= t <= min(m,n)");
    }

    int ell() const { return m + 1 - t; }
    Partition lambda() const { return Partition::rectangle(ell(), t - 1); }

    std::vector<GridPoint> path_starts() const {
        std::vector<GridPoint> s;
        for (int k = 1; k <= t - 1; ++k) s.push_back({k, n});
        return s;
    }
    std::vector<GridPoint> path_ends() const {
        std::vector<GridPoint> e;
        for (int k = 1; k <= t - 1; ++k) e.push_back({m, k});
        return e;
    }

    Grading grading() const { return Grading::grid(m, n); }
};

// The complex of the squarefree diagonal initial ideal of I_t(X): facets are
// the vertex sets of non-intersecting path families from (k,n) to (m,k).
inline SimplicialComplex pipe_complex(const DetSpec& spec) {
    if (spec.t < 2) throw std::invalid_argument("pipe_complex: needs t >= 2");
    auto families = enumerate_nonintersecting(spec.path_starts(), spec.path_ends());
    std::vector<std::vector<Variable>> facets;
    facets.reserve(families.size());
    for (const auto& fam : families) {
        std::vector<Variable> f;
        for (const auto& path : fam.paths)
            for (const auto& pt : path.points) f.push_back(xvar(pt.row, pt.col));
        facets.push_back(std::move(f));
    }
    auto c = SimplicialComplex::from_facets(spec.grading().variables(), std::move(facets));
    if (c.facets().size() != families.size())
        throw std::logic_error("pipe_complex: families do not biject with facets");
    return c;
}

enum class DetRoute { closed, schur, paths };

// Multidegree of S/I_t(X) for t >= 2, by three independent routes that must
// agree:
//   closed: (Z_1...Z_n)^(t-2) det( h_{m+1-t-i+j}(Z_1..Z_n) )_{i,j=1..t-1}
//   schur:  (Z_1...Z_n)^(t-2) s_{ell^(t-1)}(Z_1..Z_n)
//   paths:  (Z_1...Z_n)^(-1) W(facets of Pi_t)
// The paths route enumerates families and is capped at m,n <= 5, t <= 4.
inline MultidegreeData det_multidegree(const DetSpec& spec, DetRoute route) {
    if (spec.t < 2) throw std::invalid_argument("det_multidegree: needs t >= 2");
    const int n = spec.n, t = spec.t;
    Polynomial result;
    switch (route) {
        case DetRoute::closed: {
            const int r = t - 1;
            std::vector<std::vector<Polynomial>> h(r, std::vector<Polynomial>(r));
            for (int i = 1; i <= r; ++i)
                for (int j = 1; j <= r; ++j)
                    h[i - 1][j - 1] = complete_homogeneous(spec.ell() - i + j, 1, n);
            result = determinant(h);
            break;
        }
        case DetRoute::schur:
            result = schur(spec.lambda(), n);
            break;
        case DetRoute::paths: {
            if (spec.m > 5 || spec.n > 5 || t > 4)
                throw DeskScaleExceeded("det_multidegree: paths route capped at m,n <= 5, t <= 4");
            Polynomial w = family_genfun(spec.path_starts(), spec.path_ends(), n);
            // every family meets every column, so dividing by Z_1...Z_n is exact
            Monomial all;
            for (int j = 1; j <= n; ++j) all = all * Monomial::var(zvar(j));
            Polynomial shifted;
            for (const auto& [m, c] : w.terms()) shifted.add_term(m.divide_exact(all), c);
            return MultidegreeData::from_poly(std::move(shifted), n);
        }
    }
    if (t > 2) {
        Monomial pre;
        for (int j = 1; j <= n; ++j) pre = pre * Monomial::var(zvar(j), t - 2);
        result = result.mul_term(pre, 1);
    }
    return MultidegreeData::from_poly(std::move(result), n);
}

// e_b(S/I_t(X)) as the Kostka number K_{lambda, mu} with mu_i = b_i - (t-2).
inline long det_e_b(const DetSpec& spec, const std::vector<int>& b) {
    if (spec.t < 2) throw std::invalid_argument("det_e_b: needs t >= 2");
    if (static_cast<int>(b.size()) != spec.n)
        throw std::invalid_argument("det_e_b: degree vector length mismatch");
    const int t = spec.t;
    int total = 0;
    for (int bi : b) total += bi;
    if (total != (t - 1) * spec.ell() + spec.n * (t - 2))
        throw std::invalid_argument("det_e_b: |b| is not the multidegree total degree");
    std::vector<int> mu;
    mu.reserve(b.size());
    for (int bi : b) {
        if (bi < t - 2) return 0;
        mu.push_back(bi - (t - 2));
    }
    return kostka(spec.lambda(), mu);
}

// Cartwright-Sturmfels classification of I_t(X): exactly t = 1, 2 or
// t = min(m,n).
inline bool classify_cs(const DetSpec& spec) {
    return spec.t == 1 || spec.t == 2 || spec.t == std::min(spec.m, spec.n);
}

}  // namespace mdlab
