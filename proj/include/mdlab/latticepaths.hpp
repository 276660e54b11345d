#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "symfunc.hpp"

namespace mdlab {

struct GridPoint {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Monotone path in the grid: consecutive points differ by (+1,0) or (0,-1),
// i.e. the row increases or the column decreases. A path from p=(a,b) to
// q=(c,d) needs a<=c, b>=d and has (c-a)+(b-d)+1 points.
struct LatticePath {
    std::vector<GridPoint> points;

    // c_j(P): number of points on column j, for j=1..n.
    std::vector<int> column_counts(int n) const {
        std::vector<int> c(n, 0);
        for (const auto& p : points) ++c[p.col - 1];
        return c;
    }

    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

// Family of pairwise vertex-disjoint paths.
struct PathFamily {
    std::vector<LatticePath> paths;

    std::vector<int> column_counts(int n) const {
        std::vector<int> c(n, 0);
        for (const auto& p : paths)
            for (const auto& pt : p.points) ++c[pt.col - 1];
        return c;
    }

    friend auto operator<=>(const PathFamily&, const PathFamily&) = default;
};

inline bool path_endpoint_reachable(GridPoint p, GridPoint q) {
    return p.row <= q.row && p.col >= q.col;
}

// All monotone paths from p to q. Column moves are explored first, which
// orders the output by descending column-count vectors; deterministic.
inline std::vector<LatticePath> enumerate_paths(GridPoint p, GridPoint q) {
    if (!path_endpoint_reachable(p, q))
        throw std::invalid_argument("enumerate_paths: endpoint not reachable");
    std::vector<LatticePath> out;
    std::vector<GridPoint> cur{p};
    auto rec = [&](auto&& self, GridPoint at) -> void {
        if (at == q) {
            out.push_back(LatticePath{cur});
            return;
        }
        if (at.col > q.col) {
            cur.push_back({at.row, at.col - 1});
            self(self, cur.back());
            cur.pop_back();
        }
        if (at.row < q.row) {
            cur.push_back({at.row + 1, at.col});
            self(self, cur.back());
            cur.pop_back();
        }
    };
    rec(rec, p);
    return out;
}

// Weight of one path set: W = sum over paths of Z^{c(P)}. Closed form
// (prod_{i=d}^{b} Z_i) * h_{c-a}(Z_d..Z_b): a path meets exactly the columns
// d..b, once each plus c-a extra points freely distributed.
inline Polynomial path_genfun(GridPoint p, GridPoint q) {
    if (!path_endpoint_reachable(p, q))
        throw std::invalid_argument("path_genfun: endpoint not reachable");
    Monomial::Exps base;
    for (int j = q.col; j <= p.col; ++j) base.emplace_back(zvar(j), 1);
    return complete_homogeneous(q.row - p.row, q.col, p.col).mul_term(Monomial(std::move(base)), 1);
}

// Brute-force companion of path_genfun, used as a cross-oracle.
inline Polynomial path_genfun_bruteforce(GridPoint p, GridPoint q, int n) {
    Polynomial out;
    for (const auto& path : enumerate_paths(p, q)) {
        auto c = path.column_counts(n);
        Monomial::Exps e;
        for (int j = 0; j < n; ++j)
            if (c[j]) e.emplace_back(zvar(j + 1), c[j]);
        out.add_term(Monomial(std::move(e)), 1);
    }
    return out;
}

// All vertex-disjoint families with paths[k] running from starts[k] to
// ends[k]. Families are ordered lexicographically by column-count vectors.
inline std::vector<PathFamily> enumerate_nonintersecting(const std::vector<GridPoint>& starts,
                                                         const std::vector<GridPoint>& ends) {
    if (starts.size() != ends.size())
        throw std::invalid_argument("enumerate_nonintersecting: start/end count mismatch");
    const std::size_t k = starts.size();
    std::vector<std::vector<LatticePath>> choices(k);
    for (std::size_t i = 0; i < k; ++i) choices[i] = enumerate_paths(starts[i], ends[i]);

    std::vector<PathFamily> out;
    std::set<GridPoint> occupied;
    PathFamily cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (const auto& path : choices[i]) {
            bool free = true;
            for (const auto& pt : path.points)
                if (occupied.count(pt)) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (const auto& pt : path.points) occupied.insert(pt);
            cur.paths.push_back(path);
            self(self, i + 1);
            cur.paths.pop_back();
            for (const auto& pt : path.points) occupied.erase(pt);
        }
    };
    rec(rec, 0);
    return out;
}

// W(U, Z) summed over an explicit family list.
inline Polynomial family_genfun(const std::vector<PathFamily>& families, int n) {
    Polynomial out;
    for (const auto& f : families) {
        auto c = f.column_counts(n);
        Monomial::Exps e;
        for (int j = 0; j < n; ++j)
            if (c[j]) e.emplace_back(zvar(j + 1), c[j]);
        out.add_term(Monomial(std::move(e)), 1);
    }
    return out;
}

inline Polynomial family_genfun(const std::vector<GridPoint>& starts,
                                const std::vector<GridPoint>& ends, int n) {
    return family_genfun(enumerate_nonintersecting(starts, ends), n);
}

// Gessel-Viennot: the weight sum over non-intersecting families equals
// det( W(Paths(p_i, q_j)) )_{i,j}. Unreachable pairs contribute 0 entries.
inline Polynomial gv_genfun(const std::vector<GridPoint>& starts,
                            const std::vector<GridPoint>& ends, int /*n*/) {
    if (starts.size() != ends.size())
        throw std::invalid_argument("gv_genfun: start/end count mismatch");
    const std::size_t k = starts.size();
    if (k == 0) return Polynomial::one();
    std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m[i][j] = path_endpoint_reachable(starts[i], ends[j])
                          ? path_genfun(starts[i], ends[j])
                          : Polynomial::zero();
    return determinant(m);
}

}  // namespace mdlab
