#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "monomial.hpp"
#include "variable.hpp"

namespace mdlab {

// Monomial orders. Variable priority is the default (row, col) order unless
// an explicit descending priority list is given; listed variables outrank
// unlisted ones. Every order here is multiplicative with 1 minimal, and the
// default priority satisfies x(0,j) > x(1,j) > ... within each column.
class TermOrder {
public:
    enum class Kind { lex, degrevlex, weighted };

    static TermOrder lex() { return TermOrder(Kind::lex); }
    static TermOrder degrevlex() { return TermOrder(Kind::degrevlex); }

    // Weight vector first, degrevlex tiebreak. With a 0/1 weight vector this
    // is a block elimination order for the weight-1 variables.
    static TermOrder weighted(std::map<Variable, long> weights) {
        TermOrder t(Kind::weighted);
        t.weights_ = std::move(weights);
        return t;
    }

    TermOrder with_priority(std::vector<Variable> priority) const {
        TermOrder t = *this;
        t.priority_ = std::move(priority);
        return t;
    }

    Kind kind() const { return kind_; }
    const std::vector<Variable>& priority() const { return priority_; }
    const std::map<Variable, long>& weights() const { return weights_; }

    // Rank of a variable: position in the explicit priority list, or past it
    // in default order. Smaller rank = higher priority.
    bool precedes(Variable u, Variable v) const {
        if (!priority_.empty()) {
            auto pu = std::find(priority_.begin(), priority_.end(), u);
            auto pv = std::find(priority_.begin(), priority_.end(), v);
            if (pu != priority_.end() || pv != priority_.end()) {
                if (pu == priority_.end()) return false;
                if (pv == priority_.end()) return true;
                return pu < pv;
            }
        }
        return u < v;
    }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::weighted) {
            long wa = weight_of(a), wb = weight_of(b);
            if (wa != wb) return wa < wb ? -1 : 1;
            return tie_degrevlex(a, b);
        }
        if (kind_ == Kind::degrevlex) return tie_degrevlex(a, b);
        // lex: first variable (highest priority) with differing exponent wins.
        auto sup = merged_support(a, b);
        for (Variable v : sup) {
            int ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    explicit TermOrder(Kind k) : kind_(k) {}

    long weight_of(const Monomial& m) const {
        long w = 0;
        for (const auto& [v, e] : m.exponents()) {
            auto it = weights_.find(v);
            if (it != weights_.end()) w += it->second * e;
        }
        return w;
    }

    int tie_degrevlex(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        // reverse scan: at the lowest-priority variable with differing
        // exponent, the smaller exponent wins.
        auto sup = merged_support(a, b);
        for (auto it = sup.rbegin(); it != sup.rend(); ++it) {
            int ea = a.exponent(*it), eb = b.exponent(*it);
            if (ea != eb) return ea > eb ? -1 : 1;
        }
        return 0;
    }

    std::vector<Variable> merged_support(const Monomial& a, const Monomial& b) const {
        std::vector<Variable> sup = a.support();
        for (const auto& [v, e] : b.exponents()) sup.push_back(v);
        std::sort(sup.begin(), sup.end(),
                  [this](Variable u, Variable v) { return precedes(u, v); });
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        return sup;
    }

    Kind kind_;
    std::vector<Variable> priority_;
    std::map<Variable, long> weights_;
};

}  // namespace mdlab
