#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "grading.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace mdlab {

// Monomial ideal kept as its unique minimal generating set.
class MonomialIdeal {
public:
    MonomialIdeal() = default;  // zero ideal

    explicit MonomialIdeal(std::vector<Monomial> gens) : gens_(std::move(gens)) { minimalize(); }

    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    bool is_squarefree() const {
        for (const auto& g : gens_)
            if (!g.is_squarefree()) return false;
        return true;
    }

    MonomialIdeal plus(const Monomial& m) const {
        auto g = gens_;
        g.push_back(m);
        return MonomialIdeal(std::move(g));
    }

    // Monomial ideal quotient (J : m) = ( g / gcd(g, m) ).
    MonomialIdeal quotient(const Monomial& m) const {
        std::vector<Monomial> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) out.push_back(g.divide_exact(g.gcd(m)));
        return MonomialIdeal(std::move(out));
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    void minimalize() {
        std::sort(gens_.begin(), gens_.end(),
                  [](const Monomial& a, const Monomial& b) {
                      if (a.total_degree() != b.total_degree())
                          return a.total_degree() < b.total_degree();
                      return a < b;
                  });
        std::vector<Monomial> kept;
        for (const auto& g : gens_) {
            bool divisible = false;
            for (const auto& k : kept)
                if (k.divides(g)) {
                    divisible = true;
                    break;
                }
            if (!divisible) kept.push_back(g);
        }
        gens_ = std::move(kept);
    }

    std::vector<Monomial> gens_;
};

// Simplicial complex on grid vertices, stored by its facets.
class SimplicialComplex {
public:
    // Normalizes: sorts faces, drops faces contained in other faces. The
    // empty list of facets is the complex {emptyset}.
    static SimplicialComplex from_facets(std::vector<Variable> vertices,
                                         std::vector<std::vector<Variable>> facets) {
        SimplicialComplex c;
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        c.vertices_ = std::move(vertices);
        for (auto& f : facets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (Variable v : f)
                if (!std::binary_search(c.vertices_.begin(), c.vertices_.end(), v))
                    throw std::invalid_argument("SimplicialComplex: facet vertex outside vertex set");
        }
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        for (std::size_t i = 0; i < facets.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < facets.size() && maximal; ++j)
                if (i != j && std::includes(facets[j].begin(), facets[j].end(),
                                            facets[i].begin(), facets[i].end()))
                    maximal = false;
            if (maximal) c.facets_.push_back(facets[i]);
        }
        return c;
    }

    const std::vector<Variable>& vertices() const { return vertices_; }
    const std::vector<std::vector<Variable>>& facets() const { return facets_; }

    bool is_pure() const {
        if (facets_.empty()) return true;
        for (const auto& f : facets_)
            if (f.size() != facets_.front().size()) return false;
        return true;
    }

    bool contains_face(std::vector<Variable> f) const {
        std::sort(f.begin(), f.end());
        for (const auto& g : facets_)
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) return true;
        return false;
    }

    // Every face, deduplicated across facets. Exponential in facet size;
    // meant for desk-scale complexes only.
    std::vector<std::vector<Variable>> all_faces() const {
        std::set<std::vector<Variable>> faces;
        faces.insert({});
        for (const auto& f : facets_) {
            if (f.size() > 20) throw std::invalid_argument("all_faces: facet beyond desk scale");
            const std::size_t k = f.size();
            for (std::size_t mask = 1; mask < (1u << k); ++mask) {
                std::vector<Variable> face;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1u << i)) face.push_back(f[i]);
                faces.insert(std::move(face));
            }
        }
        return {faces.begin(), faces.end()};
    }

private:
    std::vector<Variable> vertices_;
    std::vector<std::vector<Variable>> facets_;
};

// Stanley-Reisner: faces of the complex of a squarefree ideal J are the
// squarefree monomials outside J.
inline SimplicialComplex complex_of(const MonomialIdeal& J, const Grading& g) {
    if (!J.is_squarefree()) throw std::invalid_argument("complex_of: ideal is not squarefree");
    auto vars = g.variables();
    const std::size_t nv = vars.size();
    if (nv > 22) throw std::invalid_argument("complex_of: grid beyond desk scale");
    std::vector<std::uint32_t> genmasks;
    for (const auto& gen : J.generators()) {
        std::uint32_t m = 0;
        for (const auto& [v, e] : gen.exponents()) {
            auto it = std::lower_bound(vars.begin(), vars.end(), v);
            if (it == vars.end() || *it != v)
                throw std::invalid_argument("complex_of: generator variable outside grid");
            m |= 1u << (it - vars.begin());
        }
        genmasks.push_back(m);
    }
    // faces = subsets containing no generator support; collect the maximal ones
    std::vector<std::uint32_t> faces;
    for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
        bool ok = true;
        for (std::uint32_t gm : genmasks)
            if ((gm & mask) == gm) {
                ok = false;
                break;
            }
        if (ok) faces.push_back(mask);
    }
    std::vector<std::vector<Variable>> facets;
    for (std::uint32_t f : faces) {
        bool maximal = true;
        for (std::uint32_t h : faces)
            if (h != f && (f & h) == f) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<Variable> fv;
        for (std::size_t i = 0; i < nv; ++i)
            if (f & (1u << i)) fv.push_back(vars[i]);
        facets.push_back(std::move(fv));
    }
    return SimplicialComplex::from_facets(vars, facets);
}

// Inverse map: the squarefree ideal of minimal non-faces.
inline MonomialIdeal ideal_of(const SimplicialComplex& c) {
    const auto& vars = c.vertices();
    const std::size_t nv = vars.size();
    if (nv > 22) throw std::invalid_argument("ideal_of: vertex set beyond desk scale");
    std::vector<Monomial> gens;
    for (std::uint32_t mask = 1; mask < (1u << nv); ++mask) {
        std::vector<Variable> sub;
        for (std::size_t i = 0; i < nv; ++i)
            if (mask & (1u << i)) sub.push_back(vars[i]);
        if (c.contains_face(sub)) continue;
        // minimal non-face: every proper subset is a face
        bool minimal = true;
        for (std::size_t i = 0; i < sub.size() && minimal; ++i) {
            std::vector<Variable> prop = sub;
            prop.erase(prop.begin() + i);
            if (!c.contains_face(prop)) minimal = false;
        }
        if (!minimal) continue;
        Monomial::Exps e;
        for (Variable v : sub) e.emplace_back(v, 1);
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(std::move(gens));
}

// ---- multigraded Hilbert functions of radical monomial ideals -------------

// c(F): per-column vertex counts of a face.
inline std::vector<int> column_counts(const std::vector<Variable>& face, const Grading& g) {
    std::vector<int> c(g.ncols(), 0);
    for (Variable v : face) {
        if (!g.contains(v)) throw std::invalid_argument("column_counts: vertex outside grid");
        ++c[v.col - 1];
    }
    return c;
}

// Faces whose column counts are strictly positive in every coordinate.
inline std::vector<std::vector<Variable>> relevant_faces(const SimplicialComplex& c,
                                                         const Grading& g) {
    std::vector<std::vector<Variable>> out;
    for (auto& f : c.all_faces()) {
        auto cc = column_counts(f, g);
        bool rel = true;
        for (int x : cc)
            if (x == 0) {
                rel = false;
                break;
            }
        if (rel) out.push_back(std::move(f));
    }
    return out;
}

namespace detail {
inline long long binom_ll(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;  // C(x,-1) = 0 by convention
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace detail

// HF(S/J, a) for the radical monomial ideal with complex c, all a_j >= 1:
// the count of degree-a monomials outside J, summed over relevant faces as
// prod_j C(a_j - 1, c_j(F) - 1).
inline long long hf_complex(const SimplicialComplex& c, const Grading& g,
                            const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != g.ncols())
        throw std::invalid_argument("hf_complex: degree vector length mismatch");
    for (int aj : a)
        if (aj <= 0) throw std::invalid_argument("hf_complex: needs strictly positive degrees");
    long long total = 0;
    for (const auto& f : relevant_faces(c, g)) {
        auto cc = column_counts(f, g);
        long long prod = 1;
        for (int j = 0; j < g.ncols(); ++j) {
            prod *= detail::binom_ll(a[j] - 1, cc[j] - 1);
            if (prod == 0) break;
        }
        total += prod;
    }
    return total;
}

// ---- multidegrees ----------------------------------------------------------

// Multidegree as polynomial data: Deg = sum_b e_b Z^b, homogeneous of total
// degree d, with nonnegative integer coefficients.
class MultidegreeData {
public:
    static MultidegreeData from_poly(Polynomial p, int ncols) {
        MultidegreeData d;
        d.ncols_ = ncols;
        d.degree_ = p.is_zero() ? 0 : p.total_degree();
        for (const auto& [m, c] : p.terms()) {
            if (m.total_degree() != d.degree_)
                throw std::invalid_argument("MultidegreeData: polynomial not homogeneous");
            if (c <= 0 || c.get_den() != 1)
                throw std::invalid_argument("MultidegreeData: coefficients must be positive integers");
            for (const auto& [v, e] : m.exponents())
                if (v.row != kZRow || v.col < 1 || v.col > ncols)
                    throw std::invalid_argument("MultidegreeData: non-Z variable");
        }
        d.poly_ = std::move(p);
        return d;
    }

    const Polynomial& poly() const { return poly_; }
    int ncols() const { return ncols_; }
    int total_degree() const { return degree_; }

    long e(const std::vector<int>& b) const {
        Monomial::Exps exps;
        for (int j = 0; j < ncols_; ++j)
            if (b[j]) exps.emplace_back(zvar(j + 1), b[j]);
        return static_cast<long>(poly_.coefficient(Monomial(std::move(exps))).get_num().get_si());
    }

    std::map<std::vector<int>, long> coefficients() const {
        std::map<std::vector<int>, long> out;
        for (const auto& [m, c] : poly_.terms()) {
            std::vector<int> b(ncols_, 0);
            for (const auto& [v, e] : m.exponents()) b[v.col - 1] = e;
            out[b] = static_cast<long>(c.get_num().get_si());
        }
        return out;
    }

    long ordinary_multiplicity() const {
        long s = 0;
        for (const auto& [m, c] : poly_.terms()) s += static_cast<long>(c.get_num().get_si());
        return s;
    }

    bool is_multiplicity_free() const {
        for (const auto& [m, c] : poly_.terms())
            if (c != 1) return false;
        return true;
    }

private:
    Polynomial poly_;
    int ncols_ = 0;
    int degree_ = 0;
};

// Deg_{S/J} for a pure complex with at least one relevant facet:
// sum over relevant facets of Z^{c(F) - (1,...,1)}.
inline MultidegreeData multidegree_complex(const SimplicialComplex& c, const Grading& g) {
    if (!c.is_pure()) throw std::invalid_argument("multidegree_complex: complex not pure");
    Polynomial deg;
    for (const auto& f : c.facets()) {
        auto cc = column_counts(f, g);
        bool relevant = true;
        Monomial::Exps e;
        for (int j = 0; j < g.ncols(); ++j) {
            if (cc[j] == 0) {
                relevant = false;
                break;
            }
            if (cc[j] > 1) e.emplace_back(zvar(j + 1), cc[j] - 1);
        }
        if (relevant) deg.add_term(Monomial(std::move(e)), 1);
    }
    if (deg.is_zero()) throw std::invalid_argument("multidegree_complex: no relevant facets");
    return MultidegreeData::from_poly(std::move(deg), g.ncols());
}

// ---- K-polynomials ---------------------------------------------------------

namespace detail {
inline Monomial z_monomial(const std::vector<int>& d) {
    Monomial::Exps e;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j]) e.emplace_back(zvar(static_cast<int>(j + 1)), d[j]);
    return Monomial(std::move(e));
}
}  // namespace detail

// Numerator K_{S/J} of the multigraded Hilbert series of S/J over the
// standard denominator prod_j (1-Z_j)^(m_j+1), by the generator-splitting
// recursion K(S/(J'+(m))) = K(S/J') - Z^{deg m} K(S/(J':m)).
inline Polynomial hs_numerator(const MonomialIdeal& J, const Grading& g) {
    std::map<std::vector<Monomial>, Polynomial> memo;
    auto rec = [&](auto&& self, const MonomialIdeal& ideal) -> Polynomial {
        if (ideal.is_zero()) return Polynomial::one();
        if (ideal.is_unit()) return Polynomial::zero();
        auto key = ideal.generators();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Monomial m = key.back();
        std::vector<Monomial> rest(key.begin(), key.end() - 1);
        MonomialIdeal head(rest);
        Polynomial k = self(self, head) -
                       Polynomial::term(detail::z_monomial(g.degree(m)), 1) *
                           self(self, head.quotient(m));
        memo.emplace(std::move(key), k);
        return k;
    };
    return rec(rec, J);
}

// Dual multidegree from a K-polynomial: substitute Z_i <- 1-Z_i and take the
// lowest nonzero homogeneous component. Coefficients must be nonnegative.
inline Polynomial dual_multidegree(const Polynomial& k, int ncols) {
    if (k.is_zero()) throw std::invalid_argument("dual_multidegree: zero K-polynomial");
    std::map<Variable, Polynomial> sub;
    for (int j = 1; j <= ncols; ++j)
        sub.emplace(zvar(j), Polynomial::one() - Polynomial::variable(zvar(j)));
    Polynomial low = k.substitute(sub).lowest_component();
    for (const auto& [m, c] : low.terms())
        if (c < 0)
            throw std::logic_error("dual_multidegree: negative coefficient " + rat_str(c));
    return low;
}

}  // namespace mdlab
