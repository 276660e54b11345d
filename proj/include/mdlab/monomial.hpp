#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "variable.hpp"

namespace mdlab {

// Sparse monomial: exponent list sorted by variable, no zero exponents.
// The empty list is the monomial 1.
class Monomial {
public:
    using Exps = std::vector<std::pair<Variable, int>>;

    Monomial() = default;

    explicit Monomial(Exps exps) {
        std::sort(exps.begin(), exps.end());
        for (const auto& [v, e] : exps) {
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
            if (e == 0) continue;
            if (!exps_.empty() && exps_.back().first == v)
                exps_.back().second += e;
            else
                exps_.emplace_back(v, e);
        }
    }

    static Monomial var(Variable v, int e = 1) { return Monomial(Exps{{v, e}}); }

    const Exps& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    int exponent(Variable v) const {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                                   [](const auto& p, Variable w) { return p.first < w; });
        return (it != exps_.end() && it->first == v) ? it->second : 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    bool is_squarefree() const {
        for (const auto& [v, e] : exps_)
            if (e > 1) return false;
        return true;
    }

    std::vector<Variable> support() const {
        std::vector<Variable> s;
        s.reserve(exps_.size());
        for (const auto& [v, e] : exps_) s.push_back(v);
        return s;
    }

    bool divides(const Monomial& m) const {
        auto it = m.exps_.begin();
        for (const auto& [v, e] : exps_) {
            while (it != m.exps_.end() && it->first < v) ++it;
            if (it == m.exps_.end() || it->first != v || it->second < e) return false;
        }
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        return merge(m, [](int a, int b) { return a + b; });
    }

    // Requires m | *this.
    Monomial divide_exact(const Monomial& m) const {
        Exps out;
        auto it = exps_.begin();
        for (const auto& [v, e] : m.exps_) {
            while (it != exps_.end() && it->first < v) out.push_back(*it++);
            if (it == exps_.end() || it->first != v || it->second < e)
                throw std::invalid_argument("Monomial: inexact division");
            if (it->second > e) out.emplace_back(v, it->second - e);
            ++it;
        }
        out.insert(out.end(), it, exps_.end());
        Monomial r;
        r.exps_ = std::move(out);
        return r;
    }

    Monomial lcm(const Monomial& m) const {
        return merge(m, [](int a, int b) { return std::max(a, b); });
    }

    Monomial gcd(const Monomial& m) const {
        Exps out;
        auto it = exps_.begin();
        for (const auto& [v, e] : m.exps_) {
            while (it != exps_.end() && it->first < v) ++it;
            if (it != exps_.end() && it->first == v && std::min(it->second, e) > 0)
                out.emplace_back(v, std::min(it->second, e));
        }
        Monomial r;
        r.exps_ = std::move(out);
        return r;
    }

    bool coprime_with(const Monomial& m) const { return gcd(m).is_one(); }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    friend std::string to_string(const Monomial& m) {
        if (m.is_one()) return "1";
        std::string s;
        for (const auto& [v, e] : m.exps_) {
            if (!s.empty()) s += "*";
            s += to_string(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    template <class Combine>
    Monomial merge(const Monomial& m, Combine f) const {
        Exps out;
        auto a = exps_.begin(), b = m.exps_.begin();
        while (a != exps_.end() || b != m.exps_.end()) {
            if (b == m.exps_.end() || (a != exps_.end() && a->first < b->first)) {
                int e = f(a->second, 0);
                if (e) out.emplace_back(a->first, e);
                ++a;
            } else if (a == exps_.end() || b->first < a->first) {
                int e = f(0, b->second);
                if (e) out.emplace_back(b->first, e);
                ++b;
            } else {
                int e = f(a->second, b->second);
                if (e) out.emplace_back(a->first, e);
                ++a, ++b;
            }
        }
        Monomial r;
        r.exps_ = std::move(out);
        return r;
    }

    Exps exps_;
};

}  // namespace mdlab
