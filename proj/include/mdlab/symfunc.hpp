#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "variable.hpp"

namespace mdlab {

// Weakly decreasing list of nonnegative integers; trailing zeros normalized
// away, so the empty partition is ().
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must weakly decrease");
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("Partition: negative part");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    // k copies of part (e.g. the rectangle ell^(t-1)).
    static Partition rectangle(int part, int copies) {
        return Partition(std::vector<int>(copies, part));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, padded
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Dominance: every prefix sum of *this >= that of mu. Only meaningful for
    // equal weights.
    bool dominates(const Partition& mu) const {
        int sa = 0, sb = 0;
        int len = std::max(length(), mu.length());
        for (int i = 0; i < len; ++i) {
            sa += part(i);
            sb += mu.part(i);
            if (sa < sb) return false;
        }
        return true;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
    if (p.length() == 0) return "0";
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        parts.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

// Sorts a composition (content vector) into a partition.
inline Partition sorted_partition(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

// All partitions of weight exactly w.
inline std::vector<Partition> partitions_of(int w) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, w, w);
    return out;
}

// Semistandard tableau: weakly increasing rows, strictly increasing columns.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        std::vector<int> s;
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return Partition(std::move(s));
    }

    // content()[k-1] counts entries equal to k.
    std::vector<int> content(int max_entry) const {
        std::vector<int> c(max_entry, 0);
        for (const auto& r : rows)
            for (int e : r) ++c[e - 1];
        return c;
    }

    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

inline std::string to_string(const Tableau& t) {
    std::string s;
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
        s += "\n";
    }
    return s;
}

// ---- generators of the symmetric-function toolbox --------------------------

// Complete homogeneous polynomial h_v on the window Z(first)..Z(last).
// h_0 = 1 and h_v = 0 for v < 0 (the Jacobi-Trudi matrix may ask for
// negative indices).
inline Polynomial complete_homogeneous(int v, int first, int last) {
    if (first > last) throw std::invalid_argument("complete_homogeneous: empty window");
    if (v < 0) return Polynomial::zero();
    Polynomial out;
    Monomial::Exps cur;
    auto rec = [&](auto&& self, int col, int left) -> void {
        if (col == last) {
            if (left) cur.emplace_back(zvar(col), left);
            out.add_term(Monomial(cur), 1);
            if (left) cur.pop_back();
            return;
        }
        for (int e = 0; e <= left; ++e) {
            if (e) cur.emplace_back(zvar(col), e);
            self(self, col + 1, left - e);
            if (e) cur.pop_back();
        }
    };
    rec(rec, first, v);
    return out;
}

// Monomial symmetric polynomial m_mu in Z(1)..Z(n): the orbit of Z^mu, each
// monomial once.
inline Polynomial monomial_symmetric(const Partition& mu, int n) {
    if (mu.length() > n)
        throw std::invalid_argument("monomial_symmetric: partition longer than variable count");
    std::vector<int> exps(n, 0);
    for (int i = 0; i < mu.length(); ++i) exps[i] = mu.parts()[i];
    std::sort(exps.begin(), exps.end());
    Polynomial out;
    do {
        Monomial::Exps e;
        for (int j = 0; j < n; ++j)
            if (exps[j]) e.emplace_back(zvar(j + 1), exps[j]);
        out.add_term(Monomial(std::move(e)), 1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

// Schur polynomial via the Jacobi-Trudi determinant
// s_lambda = det( h_{lambda_i - i + j} )_{i,j=1..r} over Z(1)..Z(n).
inline Polynomial schur(const Partition& lambda, int n) {
    const int r = lambda.length();
    if (r == 0) return Polynomial::one();
    std::vector<std::vector<Polynomial>> jt(r, std::vector<Polynomial>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            jt[i][j] = complete_homogeneous(lambda.parts()[i] - i + j, 1, n);
    return determinant(jt);
}

// All semistandard tableaux of the given shape with entries 1..max_entry and
// the given content (content[k-1] entries equal to k). Cells are filled in
// row-major order with column-strictness pruning.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape,
                                           const std::vector<int>& content) {
    const int max_entry = static_cast<int>(content.size());
    int total = std::accumulate(content.begin(), content.end(), 0);
    if (total != shape.weight())
        throw std::invalid_argument("enumerate_ssyt: content weight differs from shape");

    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(shape.length());
    for (int i = 0; i < shape.length(); ++i) rows[i].reserve(shape.parts()[i]);
    std::vector<int> left = content;

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.length()) {
            out.push_back(Tableau{rows});
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.parts()[r]) nr = r + 1, nc = 0;
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);            // weak along the row
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);        // strict down the column
        for (int e = lo; e <= max_entry; ++e) {
            if (left[e - 1] == 0) continue;
            --left[e - 1];
            rows[r].push_back(e);
            self(self, nr, nc);
            rows[r].pop_back();
            ++left[e - 1];
        }
    };
    if (shape.length() == 0)
        out.push_back(Tableau{});
    else
        rec(rec, 0, 0);
    return out;
}

// Kostka number K_{lambda,mu}: SSYT count of shape lambda and content mu.
// mu may be any composition; the count depends only on its multiset.
inline long kostka(const Partition& lambda, const std::vector<int>& mu) {
    int total = std::accumulate(mu.begin(), mu.end(), 0);
    if (total != lambda.weight())
        throw std::invalid_argument("kostka: |mu| != |lambda|");
    return static_cast<long>(enumerate_ssyt(lambda, mu).size());
}

inline long kostka(const Partition& lambda, const Partition& mu) {
    return kostka(lambda, mu.parts());
}

// ---- the monomial-symmetric basis ------------------------------------------

inline bool is_symmetric(const Polynomial& p, int n) {
    for (int i = 1; i < n; ++i) {
        if (p.rename({{zvar(i), zvar(i + 1)}, {zvar(i + 1), zvar(i)}}) != p) return false;
    }
    return true;
}

// Exact expansion of a symmetric polynomial in the m_mu basis; rebuilding
// from the map reproduces the input.
inline std::map<Partition, Rational> expand_monomial_basis(const Polynomial& p, int n) {
    if (!is_symmetric(p, n))
        throw std::invalid_argument("expand_monomial_basis: polynomial is not symmetric");
    std::map<Partition, Rational> out;
    Polynomial rest = p;
    while (!rest.is_zero()) {
        const auto& [m, c] = *rest.terms().begin();
        std::vector<int> exps(n, 0);
        for (const auto& [v, e] : m.exponents()) {
            if (v.row != kZRow || v.col < 1 || v.col > n)
                throw std::invalid_argument("expand_monomial_basis: non-Z variable present");
            exps[v.col - 1] = e;
        }
        Partition mu = sorted_partition(exps);
        out[mu] = c;
        rest -= c * monomial_symmetric(mu, n);
    }
    return out;
}

}  // namespace mdlab
