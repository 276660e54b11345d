#pragma once

#include <array>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grading.hpp"
#include "hilbert.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "term_order.hpp"

namespace mdlab {

// Desk-scale limits for Groebner runs. The wall-clock budget can be
// overridden with MDLAB_BUDGET_SECS.
struct GroebnerConfig {
    int max_vars = 24;
    int max_gen_degree = 4;
    double budget_secs = 300.0;

    static GroebnerConfig from_env() {
        GroebnerConfig cfg;
        if (const char* s = std::getenv("MDLAB_BUDGET_SECS")) {
            double v = std::atof(s);
            if (v > 0) cfg.budget_secs = v;
        }
        return cfg;
    }
};

// Generators plus the ambient grading; when flagged multigraded, every
// generator must be homogeneous for it.
struct IdealPresentation {
    std::vector<Polynomial> generators;
    Grading grading;
    bool multigraded = true;

    IdealPresentation(std::vector<Polynomial> gens, Grading g, bool multi = true)
        : generators(std::move(gens)), grading(std::move(g)), multigraded(multi) {
        for (auto it = generators.begin(); it != generators.end();)
            it = it->is_zero() ? generators.erase(it) : it + 1;
        if (multigraded)
            for (const auto& p : generators)
                if (!grading.is_homogeneous(p))
                    throw std::invalid_argument("IdealPresentation: generator not multigraded");
    }
};

// ---- the Buchberger engine ---------------------------------------------------
// Internal dense representation: exponent vectors over a fixed variable table
// ordered by descending term-order priority, integer coefficients kept
// primitive (content stripped after every reduction).

namespace engine {

constexpr int kMaxVars = 24;

struct Exp {
    std::array<std::int16_t, kMaxVars> e{};
    int deg = 0;
};

inline Exp exp_mul(const Exp& a, const Exp& b, int nv) {
    Exp r;
    for (int i = 0; i < nv; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
    r.deg = a.deg + b.deg;
    return r;
}

inline bool exp_divides(const Exp& a, const Exp& b, int nv) {  // a | b
    if (a.deg > b.deg) return false;
    for (int i = 0; i < nv; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Exp exp_div(const Exp& a, const Exp& b, int nv) {  // a / b
    Exp r;
    for (int i = 0; i < nv; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
    r.deg = a.deg - b.deg;
    return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b, int nv) {
    Exp r;
    for (int i = 0; i < nv; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

inline bool exp_coprime(const Exp& a, const Exp& b, int nv) {
    for (int i = 0; i < nv; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

inline bool exp_equal(const Exp& a, const Exp& b, int nv) {
    if (a.deg != b.deg) return false;
    for (int i = 0; i < nv; ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

struct Term {
    Exp m;
    Integer c;
};

using EPoly = std::vector<Term>;  // terms sorted descending

class Ctx {
public:
    Ctx(std::vector<Variable> vars, const TermOrder& order, GroebnerConfig cfg)
        : vars_(std::move(vars)), kind_(order.kind()), cfg_(cfg) {
        if (static_cast<int>(vars_.size()) > cfg_.max_vars ||
            static_cast<int>(vars_.size()) > kMaxVars)
            throw DeskScaleExceeded("groebner: more than " + std::to_string(cfg_.max_vars) +
                                    " variables");
        std::stable_sort(vars_.begin(), vars_.end(),
                         [&order](Variable a, Variable b) { return order.precedes(a, b); });
        if (kind_ == TermOrder::Kind::weighted) {
            weights_.assign(vars_.size(), 0);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                auto it = order.weights().find(vars_[i]);
                if (it != order.weights().end()) weights_[i] = it->second;
            }
        }
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(cfg_.budget_secs));
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<Variable>& vars() const { return vars_; }

    // -1, 0, +1 comparing monomials in the chosen order.
    int compare(const Exp& a, const Exp& b) const {
        const int nv = nvars();
        if (kind_ == TermOrder::Kind::weighted) {
            long wa = 0, wb = 0;
            for (int i = 0; i < nv; ++i) {
                wa += weights_[i] * a.e[i];
                wb += weights_[i] * b.e[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            return degrevlex_tie(a, b);
        }
        if (kind_ == TermOrder::Kind::degrevlex) return degrevlex_tie(a, b);
        for (int i = 0; i < nv; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }

    bool greater(const Exp& a, const Exp& b) const { return compare(a, b) > 0; }

    void check_budget() const {
        if (std::chrono::steady_clock::now() > deadline_)
            throw DeskScaleExceeded("groebner: wall-clock budget exceeded (" +
                                    std::to_string(cfg_.budget_secs) + "s)");
    }

    Exp to_exp(const Monomial& m) const {
        Exp r;
        for (const auto& [v, e] : m.exponents()) {
            auto it = std::find(vars_.begin(), vars_.end(), v);
            if (it == vars_.end()) throw std::logic_error("groebner: variable outside context");
            r.e[it - vars_.begin()] = static_cast<std::int16_t>(e);
            r.deg += e;
        }
        return r;
    }

    Monomial to_monomial(const Exp& x) const {
        Monomial::Exps e;
        for (int i = 0; i < nvars(); ++i)
            if (x.e[i]) e.emplace_back(vars_[i], x.e[i]);
        return Monomial(std::move(e));
    }

    // Converts, sorts descending, clears denominators, strips content.
    EPoly to_epoly(const Polynomial& p) const {
        EPoly out;
        Integer den = 1;
        for (const auto& [m, c] : p.terms()) den = lcm(den, c.get_den());
        for (const auto& [m, c] : p.terms()) {
            Term t;
            t.m = to_exp(m);
            t.c = c.get_num() * (den / c.get_den());
            out.push_back(std::move(t));
        }
        std::sort(out.begin(), out.end(),
                  [this](const Term& a, const Term& b) { return greater(a.m, b.m); });
        strip_content(out);
        return out;
    }

    Polynomial to_polynomial(const EPoly& p) const {
        Polynomial out;
        for (const auto& t : p) out.add_term(to_monomial(t.m), Rational(t.c));
        return out;
    }

    static void strip_content(EPoly& p) {
        if (p.empty()) return;
        Integer g = 0;
        for (const auto& t : p) {
            g = gcd(g, t.c);
            if (g == 1) break;
        }
        if (p.front().c < 0) g = -g;
        if (g != 1)
            for (auto& t : p) t.c /= g;
    }

    // a*f - b*(x^shift * g), merged; result NOT content-stripped.
    EPoly axpy(const Integer& a, const EPoly& f, const Integer& b, const Exp& shift,
               const EPoly& g) const {
        EPoly out;
        out.reserve(f.size() + g.size());
        const int nv = nvars();
        std::size_t i = 0, j = 0;
        while (i < f.size() || j < g.size()) {
            if (j == g.size()) {
                out.push_back({f[i].m, a * f[i].c});
                ++i;
                continue;
            }
            Exp gm = exp_mul(g[j].m, shift, nv);
            if (i == f.size()) {
                out.push_back({gm, -b * g[j].c});
                ++j;
                continue;
            }
            int cmp = compare(f[i].m, gm);
            if (cmp > 0) {
                out.push_back({f[i].m, a * f[i].c});
                ++i;
            } else if (cmp < 0) {
                out.push_back({std::move(gm), -b * g[j].c});
                ++j;
            } else {
                Integer c = a * f[i].c - b * g[j].c;
                if (c != 0) out.push_back({f[i].m, std::move(c)});
                ++i, ++j;
            }
        }
        return out;
    }

    EPoly spoly(const EPoly& f, const EPoly& g) const {
        const int nv = nvars();
        Exp l = exp_lcm(f.front().m, g.front().m, nv);
        Integer d = gcd(f.front().c, g.front().c);
        EPoly s = axpy(g.front().c / d, mul_exp(f, exp_div(l, f.front().m, nv)), f.front().c / d,
                       exp_div(l, g.front().m, nv), g);
        strip_content(s);
        return s;
    }

    EPoly mul_exp(const EPoly& f, const Exp& shift) const {
        EPoly out = f;
        const int nv = nvars();
        for (auto& t : out) t.m = exp_mul(t.m, shift, nv);
        return out;
    }

private:
    int degrevlex_tie(const Exp& a, const Exp& b) const {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        for (int i = nvars() - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }

    std::vector<Variable> vars_;
    TermOrder::Kind kind_;
    std::vector<long> weights_;
    GroebnerConfig cfg_;
    std::chrono::steady_clock::time_point deadline_;
};

// Top-reduction to a normal form whose leading monomial no reducer divides.
// Tail terms are left alone; membership tests only need the lead.
inline EPoly top_reduce(EPoly cur, const std::vector<EPoly>& basis, const Ctx& ctx) {
    const int nv = ctx.nvars();
    int steps = 0;
    while (!cur.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty() || !exp_divides(g.front().m, cur.front().m, nv)) continue;
            Integer d = gcd(cur.front().c, g.front().c);
            cur = ctx.axpy(g.front().c / d, cur, cur.front().c / d,
                           exp_div(cur.front().m, g.front().m, nv), g);
            Ctx::strip_content(cur);
            reduced = true;
            break;
        }
        if (!reduced) break;
        if ((++steps & 63) == 0) ctx.check_budget();
    }
    return cur;
}

// Full normal form: every term irreducible. Scales already-emitted terms
// along with the remainder so the integer pseudo-division stays exact.
inline EPoly full_reduce(EPoly cur, const std::vector<EPoly>& basis, const Ctx& ctx) {
    const int nv = ctx.nvars();
    EPoly done;
    int steps = 0;
    while (!cur.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty() || !exp_divides(g.front().m, cur.front().m, nv)) continue;
            Integer d = gcd(cur.front().c, g.front().c);
            Integer a = g.front().c / d, b = cur.front().c / d;
            cur = ctx.axpy(a, cur, b, exp_div(cur.front().m, g.front().m, nv), g);
            for (auto& t : done) t.c *= a;
            reduced = true;
            break;
        }
        if (!reduced) {
            done.push_back(cur.front());
            cur.erase(cur.begin());
        }
        if ((++steps & 63) == 0) ctx.check_budget();
    }
    Ctx::strip_content(done);
    return done;
}

struct Pair {
    int i, j;
    Exp lcm;
};

// Buchberger with the Gebauer-Moeller update and normal (smallest-lcm-first)
// selection. Returns the reduced basis, monic over Q.
inline std::vector<EPoly> buchberger_loop(std::vector<EPoly> gens, const Ctx& ctx) {
    const int nv = ctx.nvars();
    std::vector<EPoly> basis;
    std::vector<Pair> pairs;

    auto add_element = [&](EPoly h) {
        const int t = static_cast<int>(basis.size());
        const Exp& ht = h.front().m;
        // new pairs against the existing basis, pruned by Gebauer-Moeller
        struct Cand {
            int i;
            Exp l;
            bool keep = true;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < t; ++i)
            if (!basis[i].empty()) cands.push_back({i, exp_lcm(basis[i].front().m, ht, nv)});
        // M criterion: drop candidates whose lcm is strictly divisible by another
        for (auto& c : cands)
            for (const auto& d : cands) {
                if (&c == &d || !d.keep) continue;
                if (exp_divides(d.l, c.l, nv) && !exp_equal(d.l, c.l, nv)) {
                    c.keep = false;
                    break;
                }
            }
        // F criterion: keep one candidate per lcm class, none if any is coprime
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!cands[a].keep) continue;
            bool class_coprime = exp_coprime(basis[cands[a].i].front().m, ht, nv);
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (!cands[b].keep || !exp_equal(cands[a].l, cands[b].l, nv)) continue;
                cands[b].keep = false;
                if (exp_coprime(basis[cands[b].i].front().m, ht, nv)) class_coprime = true;
            }
            if (class_coprime) cands[a].keep = false;
        }
        // B criterion on old pairs
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (const auto& p : pairs) {
            bool drop = exp_divides(ht, p.lcm, nv) &&
                        !exp_equal(exp_lcm(basis[p.i].front().m, ht, nv), p.lcm, nv) &&
                        !exp_equal(exp_lcm(basis[p.j].front().m, ht, nv), p.lcm, nv);
            if (!drop) kept.push_back(p);
        }
        pairs = std::move(kept);
        for (const auto& c : cands)
            if (c.keep) pairs.push_back({c.i, t, c.l});
        basis.push_back(std::move(h));
    };

    for (auto& g : gens) {
        if (g.empty()) continue;
        add_element(std::move(g));
    }

    while (!pairs.empty()) {
        ctx.check_budget();
        // normal selection: smallest lcm by (total degree, order)
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Exp &a = pairs[k].lcm, &b = pairs[best].lcm;
            if (a.deg < b.deg || (a.deg == b.deg && ctx.compare(a, b) < 0)) best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);
        EPoly s = ctx.spoly(basis[p.i], basis[p.j]);
        s = top_reduce(std::move(s), basis, ctx);
        if (!s.empty()) add_element(std::move(s));
    }
    return basis;
}

}  // namespace engine

// Reduced Groebner basis with its initial monomial ideal.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial> basis, TermOrder order, std::vector<Monomial> leads)
        : basis_(std::move(basis)), order_(std::move(order)), initial_(std::move(leads)) {}

    const std::vector<Polynomial>& basis() const { return basis_; }
    const TermOrder& order() const { return order_; }
    const MonomialIdeal& initial() const { return initial_; }

private:
    std::vector<Polynomial> basis_;
    TermOrder order_;
    MonomialIdeal initial_;
};

inline MonomialIdeal initial_ideal(const GroebnerBasis& gb) { return gb.initial(); }

namespace detail {

inline engine::Ctx make_ctx(const std::vector<Polynomial>& polys, const TermOrder& order,
                            const GroebnerConfig& cfg, int degree_cap_slack = 0) {
    std::vector<Variable> vars;
    int maxdeg = 0;
    for (const auto& p : polys) {
        for (Variable v : p.support()) vars.push_back(v);
        maxdeg = std::max(maxdeg, p.total_degree());
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (maxdeg > cfg.max_gen_degree + degree_cap_slack)
        throw DeskScaleExceeded("groebner: generator degree " + std::to_string(maxdeg) +
                                " beyond desk scale");
    return engine::Ctx(std::move(vars), order, cfg);
}

}  // namespace detail

// Reduced Groebner basis of I: Buchberger, then minimalization and full
// inter-reduction; each input generator is verified to reduce to zero.
inline GroebnerBasis buchberger(const IdealPresentation& I, const TermOrder& order,
                                const GroebnerConfig& cfg = GroebnerConfig::from_env(),
                                int degree_cap_slack = 0) {
    using namespace engine;
    if (I.generators.empty()) return GroebnerBasis({}, order, {});
    Ctx ctx = detail::make_ctx(I.generators, order, cfg, degree_cap_slack);
    std::vector<EPoly> gens;
    for (const auto& g : I.generators) gens.push_back(ctx.to_epoly(g));
    std::vector<EPoly> raw = buchberger_loop(std::move(gens), ctx);

    // minimal leads only
    const int nv = ctx.nvars();
    std::vector<EPoly> minimal;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < raw.size() && !redundant; ++j) {
            if (i == j) continue;
            if (exp_divides(raw[j].front().m, raw[i].front().m, nv) &&
                (!exp_equal(raw[j].front().m, raw[i].front().m, nv) || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(raw[i]);
    }
    // inter-reduce tails
    std::vector<EPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<EPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(full_reduce(minimal[i], others, ctx));
    }
    std::sort(reduced.begin(), reduced.end(), [&ctx](const EPoly& a, const EPoly& b) {
        return ctx.compare(a.front().m, b.front().m) < 0;
    });

    std::vector<Polynomial> basis;
    std::vector<Monomial> leads;
    for (const auto& g : reduced) {
        Polynomial p = ctx.to_polynomial(g);
        basis.push_back(p.monic(order));
        leads.push_back(ctx.to_monomial(g.front().m));
    }
    GroebnerBasis gb(std::move(basis), order, std::move(leads));

    // sanity: every input generator reduces to zero
    for (const auto& g : I.generators) {
        EPoly r = top_reduce(ctx.to_epoly(g), reduced, ctx);
        if (!r.empty()) throw std::logic_error("buchberger: input generator does not reduce to zero");
    }
    return gb;
}

// Remainder of p on division by the basis (full reduction, monic-normalized
// leading coefficient untouched: the remainder is content-normalized).
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                              const TermOrder& order,
                              const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    if (p.is_zero()) return p;
    std::vector<Polynomial> all = basis;
    all.push_back(p);
    engine::Ctx ctx = detail::make_ctx(all, order, cfg, 1 << 10);
    std::vector<engine::EPoly> eb;
    for (const auto& b : basis)
        if (!b.is_zero()) eb.push_back(ctx.to_epoly(b));
    return ctx.to_polynomial(engine::full_reduce(ctx.to_epoly(p), eb, ctx));
}

inline bool reduces_to_zero(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const TermOrder& order,
                            const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    if (p.is_zero()) return true;
    std::vector<Polynomial> all = basis;
    all.push_back(p);
    engine::Ctx ctx = detail::make_ctx(all, order, cfg, 1 << 10);
    std::vector<engine::EPoly> eb;
    for (const auto& b : basis)
        if (!b.is_zero()) eb.push_back(ctx.to_epoly(b));
    return engine::top_reduce(ctx.to_epoly(p), eb, ctx).empty();
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
    const Monomial lf = f.leading_monomial(ord), lg = g.leading_monomial(ord);
    Monomial l = lf.lcm(lg);
    return f.mul_term(l.divide_exact(lf), Rational(1) / f.leading_coefficient(ord)) -
           g.mul_term(l.divide_exact(lg), Rational(1) / g.leading_coefficient(ord));
}

// Reduces every pairwise S-polynomial of the set against the whole set; no
// pair is skipped. True iff all remainders vanish (Buchberger's criterion).
inline bool all_spairs_reduce(const std::vector<Polynomial>& set, const TermOrder& order,
                              const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    std::vector<Polynomial> nonzero;
    for (const auto& p : set)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.size() < 2) return true;
    engine::Ctx ctx = detail::make_ctx(nonzero, order, cfg, 1 << 10);
    std::vector<engine::EPoly> eb;
    eb.reserve(nonzero.size());
    for (const auto& p : nonzero) eb.push_back(ctx.to_epoly(p));
    for (std::size_t i = 0; i < eb.size(); ++i)
        for (std::size_t j = i + 1; j < eb.size(); ++j) {
            if (!engine::top_reduce(ctx.spoly(eb[i], eb[j]), eb, ctx).empty()) return false;
        }
    return true;
}

// ---- coordinate changes and the multigraded gin ------------------------------

// Block change of coordinates, one invertible matrix per column acting on
// that column's variables (rows in priority order).
struct CoordinateChange {
    std::map<int, std::vector<std::vector<Integer>>> blocks;  // col -> matrix

    Polynomial apply(const Polynomial& p, const Grading& g) const {
        std::map<Variable, Polynomial> images;
        for (int j = 1; j <= g.ncols(); ++j) {
            const auto& rows = g.rows(j);
            const auto& m = blocks.at(j);
            for (std::size_t a = 0; a < rows.size(); ++a) {
                Polynomial img;
                for (std::size_t b = 0; b < rows.size(); ++b)
                    if (m[a][b] != 0)
                        img += Polynomial::term(Monomial::var({rows[b], j}), Rational(m[a][b]));
                images.emplace(Variable{rows[a], j}, std::move(img));
            }
        }
        return p.substitute(images);
    }

    IdealPresentation apply(const IdealPresentation& I) const {
        std::vector<Polynomial> gens;
        gens.reserve(I.generators.size());
        for (const auto& p : I.generators) gens.push_back(apply(p, I.grading));
        return IdealPresentation(std::move(gens), I.grading, I.multigraded);
    }
};

// Entries uniform in [-10^6, 10^6], resampled until every block is
// invertible. Seed 0 is reserved for the identity change.
inline CoordinateChange random_coordinate_change(const Grading& g, std::uint64_t seed) {
    CoordinateChange cc;
    if (seed == 0) {
        for (int j = 1; j <= g.ncols(); ++j) {
            std::size_t k = g.rows(j).size();
            std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k, 0));
            for (std::size_t a = 0; a < k; ++a) m[a][a] = 1;
            cc.blocks.emplace(j, std::move(m));
        }
        return cc;
    }
    Rng rng(seed);
    for (int j = 1; j <= g.ncols(); ++j) {
        std::size_t k = g.rows(j).size();
        std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
        do {
            for (auto& row : m)
                for (auto& x : row) x = Integer(rng.uniform(-1000000, 1000000));
        } while (!is_invertible(m));
        cc.blocks.emplace(j, std::move(m));
    }
    return cc;
}

// Strong-stability check within each column: for every minimal generator
// divisible by x(i,j), replacing x(i,j) by any higher-priority x(i',j) of the
// same column stays in the ideal.
inline bool is_borel_fixed(const MonomialIdeal& J, const Grading& g) {
    for (const auto& u : J.generators()) {
        for (const auto& [v, e] : u.exponents()) {
            const auto& rows = g.rows(v.col);
            for (int r : rows) {
                if (r >= v.row) break;
                Monomial swapped = u.divide_exact(Monomial::var(v)) * Monomial::var({r, v.col});
                if (!J.contains(swapped)) return false;
            }
        }
    }
    return true;
}

// Multigraded generic initial ideal: computes in(g I) for `trials`
// independent random changes and returns the common value. Disagreement or a
// failed Borel-fixedness check raises NonGenericError (retry with a fresh
// seed).
inline MonomialIdeal gin(const IdealPresentation& I, const TermOrder& order, int trials,
                         std::uint64_t seed,
                         const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    if (!I.multigraded) throw std::invalid_argument("gin: ideal must be multigraded");
    if (trials < 1) throw std::invalid_argument("gin: need at least one trial");
    std::optional<MonomialIdeal> result;
    Rng rng(seed);
    for (int k = 0; k < trials; ++k) {
        std::uint64_t sub = rng.fork(k + 1);
        if (sub == 0) sub = 1;
        CoordinateChange g = random_coordinate_change(I.grading, sub);
        MonomialIdeal J = buchberger(g.apply(I), order, cfg).initial();
        if (!result)
            result = std::move(J);
        else if (!(*result == J))
            throw NonGenericError("gin: trials disagree; retry with a fresh seed");
    }
    if (!is_borel_fixed(*result, I.grading))
        throw NonGenericError("gin: result not Borel-fixed; retry with a fresh seed");
    return *result;
}

inline bool is_squarefree(const MonomialIdeal& J) { return J.is_squarefree(); }

// Cartwright-Sturmfels witness: is the multigraded gin squarefree?
inline bool cs_witness(const IdealPresentation& I, const TermOrder& order, std::uint64_t seed,
                       const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    return gin(I, order, 2, seed, cfg).is_squarefree();
}

// Every basis element has multidegree <= (1,...,1) componentwise.
inline bool gb_degree_bound_check(const GroebnerBasis& gb, const Grading& g) {
    for (const auto& p : gb.basis()) {
        if (!g.is_homogeneous(p)) return false;
        for (int d : g.degree(p))
            if (d > 1) return false;
    }
    return true;
}

// For every sampled order: the claimed set is a Groebner basis of the ideal
// it generates, and it generates I (checked by reduction both ways).
inline bool universal_gb_sample_check(const IdealPresentation& I,
                                      const std::vector<Polynomial>& claimed,
                                      const std::vector<TermOrder>& orders,
                                      const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    GroebnerBasis ref = buchberger(I, TermOrder::lex(), cfg);
    for (const auto& c : claimed)
        if (!reduces_to_zero(c, ref.basis(), TermOrder::lex(), cfg)) return false;  // claimed in I
    for (const auto& ord : orders) {
        IdealPresentation claimedIdeal(claimed, I.grading, I.multigraded);
        GroebnerBasis gb = buchberger(claimedIdeal, ord, cfg);
        // leading terms of the claimed set must already generate the initial ideal
        std::vector<Monomial> claimedLeads;
        for (const auto& c : claimed) claimedLeads.push_back(c.leading_monomial(ord));
        if (!(MonomialIdeal(claimedLeads) == gb.initial())) return false;
        for (const auto& g : I.generators)
            if (!reduces_to_zero(g, gb.basis(), ord, cfg)) return false;  // I in (claimed)
    }
    return true;
}

// Deterministic sample of term orders: shuffled-priority lex and random
// weight orders with a degrevlex tiebreak.
inline std::vector<TermOrder> sample_term_orders(const Grading& g, int count, std::uint64_t seed) {
    std::vector<TermOrder> out;
    Rng rng(seed);
    auto vars = g.variables();
    for (int k = 0; k < count; ++k) {
        auto shuffled = vars;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.uniform(0, static_cast<long>(i - 1))]);
        if (k % 2 == 0) {
            out.push_back(TermOrder::lex().with_priority(shuffled));
        } else {
            std::map<Variable, long> w;
            for (const auto& v : vars) w[v] = rng.uniform(0, 20);
            out.push_back(TermOrder::weighted(std::move(w)).with_priority(shuffled));
        }
    }
    return out;
}

// ---- quotients and saturation -----------------------------------------------

// Exact division by a single polynomial; throws if the division leaves a
// remainder.
inline Polynomial divide_exact_poly(const Polynomial& p, const Polynomial& f,
                                    const TermOrder& order) {
    if (f.is_zero()) throw std::invalid_argument("divide_exact_poly: zero divisor");
    Polynomial q, r = p;
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial(order);
        const Monomial& lf = f.leading_monomial(order);
        if (!lf.divides(lr)) throw std::invalid_argument("divide_exact_poly: not divisible");
        Rational c = r.leading_coefficient(order) / f.leading_coefficient(order);
        Monomial m = lr.divide_exact(lf);
        q.add_term(m, c);
        r -= f.mul_term(m, c);
    }
    return q;
}

// Ideal quotient I : f via the elimination form of I cap (f), then exact
// division by f. Quotients of capped inputs can have generators above the
// input-degree cap, so the internal runs carry slack.
inline IdealPresentation ideal_quotient(const IdealPresentation& I, const Polynomial& f,
                                        const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    if (f.is_zero()) throw std::invalid_argument("ideal_quotient: zero divisor");
    if (I.generators.empty()) return I;
    Variable t = elim_var(1);
    Polynomial tp = Polynomial::variable(t);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) gens.push_back(tp * g);
    gens.push_back((Polynomial::one() - tp) * f);
    TermOrder elim = TermOrder::weighted({{t, 1}});
    IdealPresentation aux(std::move(gens), I.grading, false);
    GroebnerBasis gb = buchberger(aux, elim, cfg, /*degree_cap_slack=*/5);
    std::vector<Polynomial> quot;
    for (const auto& b : gb.basis()) {
        bool has_t = false;
        for (Variable v : b.support())
            if (v == t) has_t = true;
        if (!has_t) quot.push_back(divide_exact_poly(b, f, TermOrder::lex()));
    }
    return IdealPresentation(std::move(quot), I.grading, I.multigraded);
}

// I : f^infinity by iterating the quotient until the reduced bases stabilize.
inline IdealPresentation ideal_saturation(const IdealPresentation& I, const Polynomial& f,
                                          const GroebnerConfig& cfg = GroebnerConfig::from_env()) {
    IdealPresentation cur = I;
    std::vector<Polynomial> basis = buchberger(cur, TermOrder::lex(), cfg, 4).basis();
    for (int iter = 0; iter < 64; ++iter) {
        IdealPresentation next = ideal_quotient(cur, f, cfg);
        std::vector<Polynomial> nextBasis = buchberger(next, TermOrder::lex(), cfg, 4).basis();
        if (nextBasis == basis) return IdealPresentation(std::move(basis), I.grading, I.multigraded);
        cur = std::move(next);
        basis = std::move(nextBasis);
    }
    throw DeskScaleExceeded("ideal_saturation: did not stabilize");
}

// ---- multigraded Hilbert functions -------------------------------------------

// Standard monomials of multidegree a modulo the monomial ideal J.
inline long long multigraded_hf(const MonomialIdeal& J, const Grading& g,
                                const std::vector<int>& a) {
    long long c = 0;
    for (const auto& m : g.monomials_of_degree(a))
        if (!J.contains(m)) ++c;
    return c;
}

// Rank-based oracle: HF(S/I, a) = #monomials(a) - dim span{ m*g : deg = a }.
// Independent of any Groebner computation.
inline long long hf_linear_algebra(const IdealPresentation& I, const std::vector<int>& a) {
    auto monos = I.grading.monomials_of_degree(a);
    std::map<Monomial, int> index;
    for (const auto& m : monos) index.emplace(m, static_cast<int>(index.size()));
    Matrix rows;
    for (const auto& g : I.generators) {
        auto d = I.grading.degree(g);
        std::vector<int> rest(a.size());
        bool ok = true;
        for (std::size_t j = 0; j < a.size(); ++j) {
            rest[j] = a[j] - d[j];
            if (rest[j] < 0) ok = false;
        }
        if (!ok) continue;
        for (const auto& m : I.grading.monomials_of_degree(rest)) {
            Polynomial p = g.mul_term(m, 1);
            std::vector<Rational> row(monos.size(), Rational(0));
            for (const auto& [mm, cc] : p.terms()) row[index.at(mm)] = cc;
            rows.push_back(std::move(row));
        }
    }
    return static_cast<long long>(monos.size()) - rank(std::move(rows));
}

}  // namespace mdlab
