#pragma once

#include <istream>
#include <set>
#include <stdexcept>
#include <vector>

#include "groebner.hpp"
#include "polynomial.hpp"

namespace mdlab {

// Binomial edge ideals live in K[x_1..x_n, y_1..y_n] with deg x_i = deg y_i
// = e_i. On the grid: x_i = x(1,i), y_i = x(2,i); the default row-major lex
// order gives x_1 > ... > x_n > y_1 > ... > y_n, so x_i > y_i as required.
inline Variable bx(int i) { return xvar(1, i); }
inline Variable by(int i) { return xvar(2, i); }

// Simple graph on vertices 1..n.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
        if (n < 1) throw std::invalid_argument("Graph: need at least one vertex");
        for (auto [a, b] : edges) {
            if (a == b || a < 1 || b < 1 || a > n || b > n)
                throw std::invalid_argument("Graph: bad edge");
            edges_.insert({std::min(a, b), std::max(a, b)});
        }
    }

    int size() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int a, int b) const {
        return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 1; u <= n_; ++u)
            if (u != v && has_edge(u, v)) out.push_back(u);
        return out;
    }

    bool connected() const {
        std::vector<bool> seen(n_ + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == n_;
    }

    Grading grading() const { return Grading::grid(2, n_); }

    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    int n_;
    std::set<std::pair<int, int>> edges_;
};

// Graph file: first line the vertex count, then one edge "i j" per line.
inline Graph parse_graph_file(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("graph file: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int a, b;
    while (in >> a >> b) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

// All labeled connected graphs on exactly nverts vertices.
inline std::vector<Graph> all_connected_graphs(int nverts) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 1; a <= nverts; ++a)
        for (int b = a + 1; b <= nverts; ++b) slots.push_back({a, b});
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask & (1u << k)) edges.push_back(slots[k]);
        Graph g(nverts, std::move(edges));
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

// Simple path between two vertices, recorded as its interior vertex list.
// Two traversal orders with the same interior set produce the same monomial,
// so paths are deduplicated by (endpoints, interior set).
struct EdgePath {
    int from, to;               // from < to
    std::vector<int> interior;  // in traversal order of the first DFS hit

    Monomial monomial() const {
        Monomial::Exps e;
        e.emplace_back(bx(from), 1);
        e.emplace_back(bx(to), 1);
        for (int a : interior) e.emplace_back(by(a), 1);
        return Monomial(std::move(e));
    }

    std::vector<int> interior_set() const {
        auto s = interior;
        std::sort(s.begin(), s.end());
        return s;
    }
};

// All simple paths from i to j, deduplicated by interior set.
inline std::vector<EdgePath> enumerate_paths_graph(const Graph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("enumerate_paths_graph: endpoints must differ");
    int from = std::min(i, j), to = std::max(i, j);
    std::vector<EdgePath> out;
    std::set<std::vector<int>> seen;
    std::vector<int> interior;
    std::vector<bool> used(g.size() + 1, false);
    used[from] = true;
    auto rec = [&](auto&& self, int at) -> void {
        if (at == to) {
            auto key = interior;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) out.push_back({from, to, interior});
            return;
        }
        for (int u : g.neighbors(at)) {
            if (used[u]) continue;
            if (u != to) {
                used[u] = true;
                interior.push_back(u);
                self(self, u);
                interior.pop_back();
                used[u] = false;
            } else {
                self(self, u);
            }
        }
    };
    rec(rec, from);
    return out;
}

// Predicted multigraded gin of the binomial edge ideal: the path monomials
// y_{a_1}...y_{a_v} x_i x_j, minimalized. Squarefree by construction.
inline MonomialIdeal predicted_gin(const Graph& g) {
    std::vector<Monomial> gens;
    for (int i = 1; i <= g.size(); ++i)
        for (int j = i + 1; j <= g.size(); ++j)
            for (const auto& p : enumerate_paths_graph(g, i, j)) gens.push_back(p.monomial());
    return MonomialIdeal(std::move(gens));
}

// 2-minor of the 2 x n variable matrix on columns i, j.
inline Polynomial edge_minor(int i, int j) {
    return Polynomial::variable(bx(i)) * Polynomial::variable(by(j)) -
           Polynomial::variable(bx(j)) * Polynomial::variable(by(i));
}

inline IdealPresentation binomial_edge_ideal(const Graph& g) {
    std::vector<Polynomial> gens;
    for (auto [i, j] : g.edges()) gens.push_back(edge_minor(i, j));
    return IdealPresentation(std::move(gens), g.grading());
}

namespace detail {
inline void check_scalars(const std::vector<Rational>& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[i] == alpha[j])
                throw std::invalid_argument("binedge: scalars must be pairwise distinct");
}
}  // namespace detail

inline Rational lambda_of(const std::vector<Rational>& alpha, int i, int j) {
    return Rational(1) / (alpha[i - 1] - alpha[j - 1]);
}

// F_ij = x_i x_j - lambda_ij Delta_ij with lambda_ij = (alpha_i - alpha_j)^{-1};
// monic with leading term x_i x_j under any order with x > y.
inline Polynomial f_generator(const std::vector<Rational>& alpha, int i, int j) {
    return Polynomial::variable(bx(i)) * Polynomial::variable(bx(j)) -
           lambda_of(alpha, i, j) * edge_minor(i, j);
}

// One F per edge: the image of the edge ideal under the upper-triangular
// change y_i -> alpha_i x_i + y_i, rescaled monic.
inline std::vector<Polynomial> f_generators(const Graph& g, const std::vector<Rational>& alpha) {
    if (static_cast<int>(alpha.size()) != g.size())
        throw std::invalid_argument("f_generators: need one scalar per vertex");
    detail::check_scalars(alpha);
    std::vector<Polynomial> out;
    for (auto [i, j] : g.edges()) out.push_back(f_generator(alpha, i, j));
    return out;
}

// The full set { y_a F_ij : i,a,j a path }, one element per deduplicated
// path. F is formed for the endpoint pair even when it is not an edge.
inline std::vector<Polynomial> f_set(const Graph& g, const std::vector<Rational>& alpha) {
    if (static_cast<int>(alpha.size()) != g.size())
        throw std::invalid_argument("f_set: need one scalar per vertex");
    detail::check_scalars(alpha);
    std::vector<Polynomial> out;
    for (int i = 1; i <= g.size(); ++i)
        for (int j = i + 1; j <= g.size(); ++j)
            for (const auto& p : enumerate_paths_graph(g, i, j)) {
                Monomial::Exps ya;
                for (int a : p.interior) ya.emplace_back(by(a), 1);
                out.push_back(f_generator(alpha, i, j).mul_term(Monomial(std::move(ya)), 1));
            }
    return out;
}

// Groebner-basis verification of the F-set: every S-pair reduces to zero,
// the leading terms are exactly the predicted gin generators, and every
// element lies in phi(J_G).
inline bool verify_gb(const Graph& g, const std::vector<Rational>& alpha, const TermOrder& order,
                      const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    for (int i = 1; i <= g.size(); ++i)
        if (!order.greater(Monomial::var(bx(i)), Monomial::var(by(i))))
            throw std::invalid_argument("verify_gb: order must satisfy x_i > y_i");
    std::vector<Polynomial> F = f_set(g, alpha);
    if (F.empty()) return true;

    std::vector<Monomial> leads;
    for (const auto& f : F) leads.push_back(f.leading_monomial(order));
    if (!(MonomialIdeal(leads) == predicted_gin(g))) return false;

    if (!all_spairs_reduce(F, order, cfg)) return false;

    GroebnerBasis phi = buchberger(IdealPresentation(f_generators(g, alpha), g.grading()), order, cfg);
    if (!(phi.initial() == predicted_gin(g))) return false;
    for (const auto& f : F)
        if (!reduces_to_zero(f, phi.basis(), order, cfg)) return false;
    return true;
}

// ---- the scalar identities used in the S-pair reduction ----------------------

// -lambda_jk lambda_ik + lambda_jk lambda_ij - lambda_ik lambda_ij = 0.
inline bool lambda_identity_check(const std::vector<Rational>& alpha, int i, int j, int k) {
    detail::check_scalars({alpha[i - 1], alpha[j - 1], alpha[k - 1]});
    Rational lij = lambda_of(alpha, i, j), lik = lambda_of(alpha, i, k),
             ljk = lambda_of(alpha, j, k);
    return -ljk * lik + ljk * lij - lik * lij == 0;
}

// The same identity cleared of denominators, over symbolic scalars:
// -(a_i - a_j) + (a_i - a_k) - (a_j - a_k) = 0 identically.
inline bool lambda_identity_symbolic() {
    Polynomial ai = Polynomial::variable(scalar_var(1));
    Polynomial aj = Polynomial::variable(scalar_var(2));
    Polynomial ak = Polynomial::variable(scalar_var(3));
    return (-(ai - aj) + (ai - ak) - (aj - ak)).is_zero();
}

// Syzygy among the 2-minors: y_i Delta_jk - y_j Delta_ik + y_k Delta_ij = 0.
inline bool minor_syzygy_check(int i, int j, int k) {
    Polynomial yi = Polynomial::variable(by(i)), yj = Polynomial::variable(by(j)),
               yk = Polynomial::variable(by(k));
    return (yi * edge_minor(j, k) - yj * edge_minor(i, k) + yk * edge_minor(i, j)).is_zero();
}

// The explicit division of S(F_ik, F_jk) used to prove the F-set is a
// Groebner basis:
//   S(F_ik, F_jk) = -lambda_jk y_j F_ik + lambda_ik y_i F_jk
//                   + (lambda_jk - lambda_ik) y_k F_ij,
// an exact identity once the minor syzygy holds.
inline bool spoly_reduction_check(const std::vector<Rational>& alpha, int i, int j, int k) {
    if (!(i < j && j < k)) throw std::invalid_argument("spoly_reduction_check: need i < j < k");
    detail::check_scalars({alpha[i - 1], alpha[j - 1], alpha[k - 1]});
    if (!minor_syzygy_check(i, j, k)) return false;
    Rational lij = lambda_of(alpha, i, j), lik = lambda_of(alpha, i, k),
             ljk = lambda_of(alpha, j, k);
    Polynomial fik = f_generator(alpha, i, k), fjk = f_generator(alpha, j, k),
               fij = f_generator(alpha, i, j);
    // S(F_ik, F_jk) = x_j F_ik - x_i F_jk
    Polynomial s = Polynomial::variable(bx(j)) * fik - Polynomial::variable(bx(i)) * fjk;
    Polynomial rhs = -ljk * (Polynomial::variable(by(j)) * fik) +
                     lik * (Polynomial::variable(by(i)) * fjk) +
                     (ljk - lik) * (Polynomial::variable(by(k)) * fij);
    return s == rhs;
}

}  // namespace mdlab
