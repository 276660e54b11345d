#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"
#include "term_order.hpp"
#include "variable.hpp"

namespace mdlab {

// Exact sparse polynomial: monomial -> nonzero rational coefficient.
// The zero polynomial is the empty map. All arithmetic is exact.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c) {
        Polynomial p;
        p.add_term(Monomial(), c);
        return p;
    }
    static Polynomial one() { return constant(1); }
    static Polynomial variable(Variable v) { return term(Monomial::var(v), 1); }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& q) {
        for (const auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& q) {
        for (const auto& [m, c] : q.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& [m, c] : p.terms_) c = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
        return p;
    }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial p;
        if (c == 0) return p;
        p.terms_ = a.terms_;
        for (auto& [m, cc] : p.terms_) cc *= c;
        return p;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    Polynomial mul_term(const Monomial& m, const Rational& c) const {
        Polynomial p;
        if (c == 0) return p;
        for (const auto& [mm, cc] : terms_) p.terms_.emplace(mm * m, cc * c);
        return p;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
        Polynomial r = one();
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    // container ordering only, unrelated to any term order
    friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

    // Max total degree over terms; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    Polynomial homogeneous_component(int d) const {
        Polynomial p;
        for (const auto& [m, c] : terms_)
            if (m.total_degree() == d) p.terms_.emplace(m, c);
        return p;
    }

    // Nonzero homogeneous component of smallest total degree.
    Polynomial lowest_component() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int t = m.total_degree();
            if (d < 0 || t < d) d = t;
        }
        return d < 0 ? zero() : homogeneous_component(d);
    }

    std::vector<Variable> support() const {
        std::vector<Variable> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.exponents()) out.push_back(v);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Simultaneous substitution; variables not in the map stay fixed.
    Polynomial substitute(const std::map<Variable, Polynomial>& images) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(c);
            Monomial::Exps fixed;
            for (const auto& [v, e] : m.exponents()) {
                auto it = images.find(v);
                if (it == images.end())
                    fixed.emplace_back(v, e);
                else
                    t *= it->second.pow(e);
            }
            out += t.mul_term(Monomial(fixed), 1);
        }
        return out;
    }

    // Simultaneous variable renaming (must stay injective on each monomial).
    Polynomial rename(const std::map<Variable, Variable>& names) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Monomial::Exps e2;
            for (const auto& [v, e] : m.exponents()) {
                auto it = names.find(v);
                e2.emplace_back(it == names.end() ? v : it->second, e);
            }
            out.add_term(Monomial(std::move(e2)), c);
        }
        return out;
    }

    const Monomial& leading_monomial(const TermOrder& ord) const {
        if (is_zero()) throw std::logic_error("leading_monomial of zero");
        const Monomial* best = nullptr;
        for (const auto& [m, c] : terms_)
            if (!best || ord.greater(m, *best)) best = &m;
        return *best;
    }

    Rational leading_coefficient(const TermOrder& ord) const {
        return terms_.at(leading_monomial(ord));
    }

    Polynomial monic(const TermOrder& ord) const {
        if (is_zero()) return *this;
        Rational lc = leading_coefficient(ord);
        return *this * (Rational(1) / lc);
    }

    // gcd of numerators / lcm of denominators, sign of an arbitrary fixed
    // term; primitive_part() has integer coefficients with content 1.
    Rational content() const {
        if (is_zero()) return 0;
        Integer num = 0, den = 1;
        for (const auto& [m, c] : terms_) {
            num = gcd(num, c.get_num());
            den = lcm(den, c.get_den());
        }
        Rational r(num, den);
        r.canonicalize();
        if (terms_.begin()->second < 0) r = -r;
        return r;
    }

    Polynomial primitive_part() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / content());
    }

private:
    Terms terms_;
};

// Determinant by cofactor expansion memoized on column subsets (sizes <= 6
// at desk scale). Rejects empty matrices.
inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: not square");
    if (n > 20) throw std::invalid_argument("determinant: size beyond desk scale");

    std::map<unsigned, Polynomial> memo;  // column subset -> minor over top rows
    // d(row, cols): determinant of m[row..][cols]; row count == popcount(cols).
    auto rec = [&](auto&& self, unsigned cols) -> const Polynomial& {
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
        Polynomial det;
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            const Polynomial& sub = self(self, cols & ~(1u << j));
            det += (sign > 0 ? m[row][j] : -m[row][j]) * sub;
            sign = -sign;
        }
        return memo.emplace(cols, std::move(det)).first->second;
    };
    memo.emplace(0u, Polynomial::one());
    return rec(rec, (n == 32 ? ~0u : (1u << n) - 1));
}

}  // namespace mdlab
