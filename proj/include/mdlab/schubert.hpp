#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "variable.hpp"

namespace mdlab {

// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        std::vector<bool> seen(word_.size(), false);
        for (int w : word_) {
            if (w < 1 || w > static_cast<int>(word_.size()) || seen[w - 1])
                throw std::invalid_argument("Permutation: not a bijection on 1..n");
            seen[w - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return Permutation(std::move(w));
    }

    static Permutation longest(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    int operator()(int i) const { return word_.at(i - 1); }  // 1-based

    Permutation inverse() const {
        std::vector<int> inv(word_.size());
        for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
        return Permutation(std::move(inv));
    }

    int inversions() const {
        int c = 0;
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                if (word_[a] > word_[b]) ++c;
        return c;
    }

    // Right multiplication by the adjacent transposition s_i (swap positions
    // i, i+1; 1-based).
    Permutation swap_positions(int i) const {
        auto w = word_;
        std::swap(w.at(i - 1), w.at(i));
        return Permutation(std::move(w));
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

inline std::string to_string(const Permutation& p) {
    std::string s;
    bool digits = p.size() <= 9;
    for (int i = 1; i <= p.size(); ++i) {
        if (!digits && i > 1) s += ",";
        s += std::to_string(p(i));
    }
    return s;
}

// Accepts a digit string (n <= 9) or a comma-separated word.
inline Permutation parse_permutation(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            w.push_back(std::stoi(text.substr(pos, next - pos)));
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("parse_permutation: expected digits 1-9");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::vector<Permutation> out;
    do out.push_back(Permutation(w));
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// ---- rank function, diagram, essential set ---------------------------------
// Conventions are transposed from the common ones: the permutation matrix has
// its ones at (omega_j, j), and the rank function counts ones in the
// northwest i x j submatrix. This matches the column grading deg x(i,j) = e_j.

using Cell = std::pair<int, int>;  // (row, col)

inline int rank_function(const Permutation& w, int i, int j) {
    if (i < 1 || i > w.size() || j < 1 || j > w.size())
        throw std::invalid_argument("rank_function: index out of range");
    int c = 0;
    for (int l = 1; l <= j; ++l)
        if (w(l) <= i) ++c;
    return c;
}

inline std::set<Cell> rothe_diagram(const Permutation& w) {
    Permutation inv = w.inverse();
    std::set<Cell> d;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j <= w.size(); ++j)
            if (w(j) > i && inv(i) > j) d.insert({i, j});
    return d;
}

inline std::set<Cell> essential_set(const Permutation& w) {
    auto d = rothe_diagram(w);
    std::set<Cell> ess;
    for (const auto& [i, j] : d)
        if (!d.count({i + 1, j}) && !d.count({i, j + 1})) ess.insert({i, j});
    return ess;
}

// ---- pattern containment ----------------------------------------------------

// True iff some subsequence of w is order-isomorphic to pat.
inline bool contains_pattern(const Permutation& w, const Permutation& pat) {
    const int n = w.size(), m = pat.size();
    if (m > n) throw std::invalid_argument("contains_pattern: pattern longer than word");
    std::vector<int> picked;
    auto rec = [&](auto&& self, int from) -> bool {
        const int k = static_cast<int>(picked.size());
        if (k == m) return true;
        for (int i = from; i <= n - (m - k) + 1; ++i) {
            bool ok = true;
            for (int a = 0; a < k && ok; ++a) {
                // order isomorphism with all previously picked entries
                if ((pat(a + 1) < pat(k + 1)) != (w(picked[a]) < w(i))) ok = false;
            }
            if (!ok) continue;
            picked.push_back(i);
            if (self(self, i + 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    return rec(rec, 1);
}

inline bool avoids(const Permutation& w, const Permutation& pat) {
    if (pat.size() > w.size()) return true;
    return !contains_pattern(w, pat);
}

inline bool is_vexillary(const Permutation& w) { return avoids(w, parse_permutation("2143")); }

// The 12 patterns whose avoidance characterizes multiplicity-free Schubert
// polynomials, hence the Cartwright-Sturmfels Schubert determinantal ideals.
inline const std::vector<Permutation>& cs_pattern_list() {
    static const std::vector<Permutation> pats = [] {
        std::vector<Permutation> v;
        for (const char* s : {"12543", "13254", "13524", "13542", "21543", "125364", "125634",
                              "215364", "215634", "315264", "315624", "315642"})
            v.push_back(parse_permutation(s));
        return v;
    }();
    return pats;
}

// The 8 patterns whose avoidance characterizes when the CDG generators are a
// diagonal Groebner basis.
inline const std::vector<Permutation>& cdg_pattern_list() {
    static const std::vector<Permutation> pats = [] {
        std::vector<Permutation> v;
        for (const char* s : {"13254", "21543", "214635", "215364", "215634", "241635",
                              "315264", "4261735"})
            v.push_back(parse_permutation(s));
        return v;
    }();
    return pats;
}

inline bool is_cs_schubert(const Permutation& w) {
    for (const auto& p : cs_pattern_list())
        if (!avoids(w, p)) return false;
    return true;
}

inline bool cdg_diagonal_gb_predicted(const Permutation& w) {
    for (const auto& p : cdg_pattern_list())
        if (!avoids(w, p)) return false;
    return true;
}

// ---- Schubert determinantal ideals -------------------------------------------

namespace detail {

// All size-k subsets of {1..limit}.
inline std::vector<std::vector<int>> subsets(int limit, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= limit; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline Polynomial minor_of(const std::vector<int>& rows, const std::vector<int>& cols,
                           const std::set<Cell>& zeroed) {
    const std::size_t k = rows.size();
    std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            m[a][b] = zeroed.count({rows[a], cols[b]})
                          ? Polynomial::zero()
                          : Polynomial::variable(xvar(rows[a], cols[b]));
    return determinant(m);
}

}  // namespace detail

// Generators of I_omega: for each essential cell (i,j), the
// (r_omega(i,j)+1)-minors of the northwest i x j submatrix of X,
// deduplicated across cells.
inline std::vector<Polynomial> schubert_ideal_generators(const Permutation& w) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<Polynomial> gens;
    for (const auto& [i, j] : essential_set(w)) {
        int r = rank_function(w, i, j);
        if (r + 1 > std::min(i, j)) continue;
        for (const auto& rows : detail::subsets(i, r + 1))
            for (const auto& cols : detail::subsets(j, r + 1))
                if (seen.insert({rows, cols}).second)
                    gens.push_back(detail::minor_of(rows, cols, {}));
    }
    return gens;
}

// The zero region: cells where the rank function vanishes.
inline std::set<Cell> rank_zero_region(const Permutation& w) {
    std::set<Cell> z;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j <= w.size(); ++j)
            if (rank_function(w, i, j) == 0) z.insert({i, j});
    return z;
}

// CDG generators: the zero-region variables together with the essential
// minors of the matrix X' obtained by specializing those variables to 0.
// Minors that vanish identically under the specialization are dropped.
inline std::vector<Polynomial> cdg_generators(const Permutation& w) {
    std::set<Cell> zeroed = rank_zero_region(w);
    std::vector<Polynomial> gens;
    for (const auto& [i, j] : zeroed) gens.push_back(Polynomial::variable(xvar(i, j)));
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& [i, j] : essential_set(w)) {
        int r = rank_function(w, i, j);
        if (r + 1 > std::min(i, j)) continue;
        for (const auto& rows : detail::subsets(i, r + 1))
            for (const auto& cols : detail::subsets(j, r + 1)) {
                if (!seen.insert({rows, cols}).second) continue;
                Polynomial m = detail::minor_of(rows, cols, zeroed);
                if (!m.is_zero()) gens.push_back(std::move(m));
            }
    }
    return gens;
}

// ---- Schubert polynomials ----------------------------------------------------

// Divided difference: (p - s_i p) / (Z_i - Z_{i+1}), computed termwise (the
// quotient of a monomial antisymmetrization is a geometric sum, so no
// polynomial division is needed).
inline Polynomial divided_difference(const Polynomial& p, int i) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        int a = m.exponent(zvar(i)), b = m.exponent(zvar(i + 1));
        if (a == b) continue;
        Monomial::Exps rest;
        for (const auto& [v, e] : m.exponents())
            if (v != zvar(i) && v != zvar(i + 1)) rest.emplace_back(v, e);
        Monomial base(rest);
        int lo = std::min(a, b), hi = std::max(a, b);
        Rational sign = (a > b) ? c : -c;
        for (int k = lo; k <= hi - 1; ++k) {
            Monomial::Exps e;
            if (k) e.emplace_back(zvar(i), k);
            if (hi + lo - 1 - k) e.emplace_back(zvar(i + 1), hi + lo - 1 - k);
            out.add_term(base * Monomial(e), sign);
        }
    }
    return out;
}

// Schubert polynomial in Z(1..n): Z^delta for the longest element, descending
// by divided differences at ascents. With the transposed rank convention
// used throughout, this polynomial equals the dual multidegree of S/I_omega
// for omega itself (calibrated against the Groebner route over all of S_4).
inline Polynomial schubert_polynomial(const Permutation& w) {
    const int n = w.size();
    if (w == Permutation::longest(n)) {
        Monomial::Exps e;
        for (int j = 1; j < n; ++j) e.emplace_back(zvar(j), n - j);
        return Polynomial::term(Monomial(std::move(e)), 1);
    }
    int i = 1;
    while (i < n && w(i) > w(i + 1)) ++i;  // first ascent
    return divided_difference(schubert_polynomial(w.swap_positions(i)), i);
}

}  // namespace mdlab
