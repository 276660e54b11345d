#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mdlab/groebner.hpp>

using namespace mdlab;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

// The three 2-minors of the 2x3 matrix of variables.
std::vector<Polynomial> minors2x3() {
    return {P("x(1,1)*x(2,2) - x(1,2)*x(2,1)"), P("x(1,1)*x(2,3) - x(1,3)*x(2,1)"),
            P("x(1,2)*x(2,3) - x(1,3)*x(2,2)")};
}

std::vector<int> degvec(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

TEST_CASE("principal ideal: basis is the monic generator") {
    Grading g = Grading::grid(2, 2);
    Polynomial f = P("3*x(1,1)*x(2,2) - 6*x(1,2)*x(2,1)");
    GroebnerBasis gb = buchberger(IdealPresentation({f}, g), TermOrder::lex());
    REQUIRE(gb.basis().size() == 1);
    CHECK(gb.basis()[0] == P("x(1,1)*x(2,2) - 2*x(1,2)*x(2,1)"));
    CHECK(gb.initial() == MonomialIdeal({Monomial::var(xvar(1, 1)) * Monomial::var(xvar(2, 2))}));
}

TEST_CASE("linear elimination under lex") {
    Grading g = Grading::grid(1, 3);
    IdealPresentation I({P("x(1,1) - x(1,2)"), P("x(1,2) - x(1,3)")}, g, false);
    GroebnerBasis gb = buchberger(I, TermOrder::lex());
    REQUIRE(gb.basis().size() == 2);
    CHECK(gb.basis()[0] == P("x(1,2) - x(1,3)"));
    CHECK(gb.basis()[1] == P("x(1,1) - x(1,3)"));
}

TEST_CASE("2-minors of a 2x3 matrix: diagonal initial ideal") {
    Grading g = Grading::grid(2, 3);
    GroebnerBasis gb = buchberger(IdealPresentation(minors2x3(), g), TermOrder::lex());
    CHECK(gb.basis().size() == 3);  // the minors are already a Groebner basis
    MonomialIdeal expected({Monomial::var(xvar(1, 1)) * Monomial::var(xvar(2, 2)),
                            Monomial::var(xvar(1, 1)) * Monomial::var(xvar(2, 3)),
                            Monomial::var(xvar(1, 2)) * Monomial::var(xvar(2, 3))});
    CHECK(gb.initial() == expected);
    CHECK(gb.initial().is_squarefree());
}

TEST_CASE("normal form and membership") {
    Grading g = Grading::grid(2, 3);
    GroebnerBasis gb = buchberger(IdealPresentation(minors2x3(), g), TermOrder::lex());
    Polynomial member = P("x(2,1)") * minors2x3()[2] - P("7*x(1,3)") * minors2x3()[0];
    CHECK(reduces_to_zero(member, gb.basis(), TermOrder::lex()));
    CHECK(normal_form(member, gb.basis(), TermOrder::lex()) == Polynomial::zero());
    CHECK(!reduces_to_zero(P("x(1,1)"), gb.basis(), TermOrder::lex()));
    Polynomial nf = normal_form(P("x(1,1)*x(2,2)"), gb.basis(), TermOrder::lex());
    CHECK(nf == P("x(1,2)*x(2,1)"));
}

TEST_CASE("coordinate changes") {
    Grading g1 = Grading::grid(1, 1);
    CoordinateChange id = random_coordinate_change(g1, 0);
    CHECK(id.blocks.at(1) == std::vector<std::vector<Integer>>{{1}});
    CoordinateChange c = random_coordinate_change(g1, 7);
    CHECK(c.blocks.at(1)[0][0] != 0);  // a nonzero 1x1 scalar

    Grading g = Grading::grid(3, 2);
    CoordinateChange cc = random_coordinate_change(g, 12345);
    for (int j = 1; j <= 2; ++j) CHECK(is_invertible(cc.blocks.at(j)));
    // identity change fixes polynomials
    Polynomial p = P("x(1,1)*x(2,2) - 5*x(3,1)*x(1,2)");
    CHECK(random_coordinate_change(g, 0).apply(p, g) == p);
    // coordinate changes preserve multidegrees
    CHECK(g.degree(cc.apply(p, g)) == g.degree(p));
}

TEST_CASE("gin of a Borel-fixed monomial ideal is itself") {
    Grading g = Grading::grid(2, 2);
    Monomial m = Monomial::var(xvar(1, 1)) * Monomial::var(xvar(1, 2));
    IdealPresentation I({Polynomial::term(m, 1)}, g);
    MonomialIdeal J = gin(I, TermOrder::lex(), 2, 42);
    CHECK(J == MonomialIdeal({m}));
    CHECK(is_borel_fixed(J, g));
}

TEST_CASE("gin of the 2x3 two-minors is squarefree and Borel-fixed") {
    Grading g = Grading::grid(2, 3);
    IdealPresentation I(minors2x3(), g);
    MonomialIdeal J = gin(I, TermOrder::lex(), 2, 9001);
    CHECK(J.is_squarefree());
    CHECK(is_borel_fixed(J, g));
    CHECK(cs_witness(I, TermOrder::lex(), 9001));
    // two independent seeds agree
    CHECK(gin(I, TermOrder::lex(), 2, 31337) == J);
}

TEST_CASE("gin preserves the multigraded Hilbert function") {
    Grading g = Grading::grid(2, 3);
    IdealPresentation I(minors2x3(), g);
    GroebnerBasis gb = buchberger(I, TermOrder::lex());
    MonomialIdeal J = gin(I, TermOrder::lex(), 2, 4242);
    for (int a1 = 0; a1 <= 2; ++a1)
        for (int a2 = 0; a2 <= 2; ++a2)
            for (int a3 = 0; a3 <= 2; ++a3) {
                std::vector<int> a{a1, a2, a3};
                long long viaRank = hf_linear_algebra(I, a);
                CHECK(viaRank == multigraded_hf(gb.initial(), g, a));
                CHECK(viaRank == multigraded_hf(J, g, a));
            }
}

TEST_CASE("Z-graded ideals with higher-degree generators are not CS") {
    // single column, three rows: one quadric generator
    Grading g = Grading::grid(3, 1);
    IdealPresentation I({P("x(1,1)^2 + x(2,1)*x(3,1)")}, g);
    CHECK(!cs_witness(I, TermOrder::lex(), 5));
    // while a principal multidegree-(1,1) ideal is CS for obvious reasons
    Grading g2 = Grading::grid(2, 2);
    IdealPresentation I2({P("x(1,1)*x(1,2) + x(2,1)*x(2,2) + x(1,1)*x(2,2)")}, g2);
    CHECK(cs_witness(I2, TermOrder::lex(), 5));
}

TEST_CASE("degree bound check on reduced bases") {
    Grading g = Grading::grid(2, 3);
    GroebnerBasis gb = buchberger(IdealPresentation(minors2x3(), g), TermOrder::lex());
    CHECK(gb_degree_bound_check(gb, g));  // minors have squarefree column degrees

    Grading g1 = Grading::grid(2, 1);
    GroebnerBasis bad = buchberger(IdealPresentation({P("x(1,1)^2")}, g1), TermOrder::lex());
    CHECK(!gb_degree_bound_check(bad, g1));

    GroebnerBasis lin = buchberger(IdealPresentation({P("x(1,1) + 2*x(2,1)")}, g1), TermOrder::lex());
    CHECK(gb_degree_bound_check(lin, g1));
}

TEST_CASE("reduced bases under sampled orders respect the degree bound") {
    Grading g = Grading::grid(2, 3);
    IdealPresentation I(minors2x3(), g);
    for (const auto& ord : sample_term_orders(g, 5, 77)) {
        GroebnerBasis gb = buchberger(I, ord);
        CHECK(gb_degree_bound_check(gb, g));
    }
}

TEST_CASE("universal Groebner basis checks") {
    Grading g = Grading::grid(2, 3);
    // a single polynomial is a universal basis of its ideal
    IdealPresentation P1({minors2x3()[0]}, g);
    CHECK(universal_gb_sample_check(P1, {minors2x3()[0]}, sample_term_orders(g, 4, 3)));

    // maximal minors of a random column-graded 2x3 specialization
    Rng rng(2025);
    Grading ga = Grading::grid(2, 3);
    auto lin = [&](int j) {
        return Polynomial::variable(xvar(1, j)) * rat(rng.uniform(-9, 9)) +
               Polynomial::variable(xvar(2, j)) * rat(rng.uniform(-9, 9));
    };
    std::vector<std::vector<Polynomial>> A(2, std::vector<Polynomial>(3));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) A[i][j] = lin(j + 1);
    std::vector<Polynomial> maxminors;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            maxminors.push_back(A[0][a] * A[1][b] - A[0][b] * A[1][a]);
    IdealPresentation IA(maxminors, ga);
    CHECK(universal_gb_sample_check(IA, maxminors, sample_term_orders(ga, 20, 13)));
}

TEST_CASE("ideal quotient and saturation") {
    Grading g = Grading::grid(1, 2);
    Polynomial x = P("x(1,1)"), y = P("x(1,2)");
    IdealPresentation I({x * y}, g);
    IdealPresentation q = ideal_quotient(I, y);
    REQUIRE(q.generators.size() == 1);
    CHECK(q.generators[0].monic(TermOrder::lex()) == x);

    // I : 1 = I
    IdealPresentation q1 = ideal_quotient(I, Polynomial::one());
    GroebnerBasis a = buchberger(q1, TermOrder::lex());
    GroebnerBasis b = buchberger(I, TermOrder::lex());
    CHECK(a.basis() == b.basis());

    // (x^2, xy) : x^infty = (1)
    IdealPresentation I2({x * x, x * y}, g);
    IdealPresentation sat = ideal_saturation(I2, x);
    GroebnerBasis gbs = buchberger(sat, TermOrder::lex());
    REQUIRE(gbs.basis().size() == 1);
    CHECK(gbs.basis()[0] == Polynomial::one());

    CHECK_THROWS_AS(ideal_quotient(I, Polynomial::zero()), std::invalid_argument);
}

TEST_CASE("multigraded Hilbert function counts") {
    Grading g = Grading::grid(2, 1);  // one column, rows 1..2
    CHECK(multigraded_hf(MonomialIdeal(), g, {3}) == 4);
    // squarefree ideals agree with the complex formula
    MonomialIdeal J({Monomial::var(xvar(1, 1))});
    SimplicialComplex c = complex_of(J, g);
    for (int k = 1; k <= 5; ++k) CHECK(multigraded_hf(J, g, {k}) == hf_complex(c, g, {k}));
}

TEST_CASE("desk-scale guards") {
    // more than 24 variables
    Grading big = Grading::grid(5, 5);
    std::vector<Polynomial> vars;
    for (const auto& v : big.variables()) vars.push_back(Polynomial::variable(v));
    CHECK_THROWS_AS(buchberger(IdealPresentation(vars, big), TermOrder::lex()), DeskScaleExceeded);

    // generator degree beyond the cap
    Grading g1 = Grading::grid(1, 1);
    CHECK_THROWS_AS(buchberger(IdealPresentation({P("x(1,1)^5")}, g1), TermOrder::lex()),
                    DeskScaleExceeded);

    // exhausted wall clock
    GroebnerConfig tiny;
    tiny.budget_secs = 0.0;
    Grading g = Grading::grid(2, 3);
    CHECK_THROWS_AS(buchberger(IdealPresentation(minors2x3(), g), TermOrder::lex(), tiny),
                    DeskScaleExceeded);
}

TEST_CASE("hf via linear algebra agrees with monomial counting on monomial ideals") {
    Grading g = Grading::grid(2, 2);
    Monomial m1 = Monomial::var(xvar(1, 1)) * Monomial::var(xvar(2, 2));
    Monomial m2 = Monomial::var(xvar(2, 1), 2);
    MonomialIdeal J({m1, m2});
    IdealPresentation I({Polynomial::term(m1, 1), Polynomial::term(m2, 1)}, g);
    for (int a1 = 0; a1 <= 3; ++a1)
        for (int a2 = 0; a2 <= 3; ++a2)
            CHECK(hf_linear_algebra(I, degvec({a1, a2})) ==
                  multigraded_hf(J, g, degvec({a1, a2})));
}

#include <mdlab/determinantal.hpp>

TEST_CASE("a reduced basis passes the full S-pair battery") {
    Grading g = Grading::grid(2, 3);
    GroebnerBasis gb = buchberger(IdealPresentation(minors2x3(), g), TermOrder::lex());
    CHECK(all_spairs_reduce(gb.basis(), TermOrder::lex()));
    // auto-reduction: no lead divides another, no tail term reducible
    for (std::size_t i = 0; i < gb.basis().size(); ++i) {
        Monomial li = gb.basis()[i].leading_monomial(TermOrder::lex());
        for (std::size_t j = 0; j < gb.basis().size(); ++j) {
            if (i == j) continue;
            Monomial lj = gb.basis()[j].leading_monomial(TermOrder::lex());
            CHECK(!li.divides(lj));
            for (const auto& [m, c] : gb.basis()[j].terms()) CHECK(!li.divides(m));
        }
    }
}

TEST_CASE("per-order verdicts for the 3x3 two-minor set") {
    // The nine 2-minors of the 3x3 matrix need not form a Groebner basis for
    // every order: some orders bring in cubic basis elements. Those cubics
    // still respect the multidegree <= (1,1,1) bound, so we record one
    // verdict per sampled order and assert only the bound.
    Grading g = Grading::grid(3, 3);
    std::vector<Polynomial> nine;
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = c + 1; d <= 3; ++d)
                    nine.push_back(parse_polynomial("x(" + std::to_string(a) + "," +
                                                    std::to_string(c) + ")*x(" +
                                                    std::to_string(b) + "," + std::to_string(d) +
                                                    ") - x(" + std::to_string(a) + "," +
                                                    std::to_string(d) + ")*x(" +
                                                    std::to_string(b) + "," + std::to_string(c) +
                                                    ")"));
    REQUIRE(nine.size() == 9);
    IdealPresentation I(nine, g);
    std::vector<bool> verdicts;
    int covered = 0;
    for (const auto& ord : sample_term_orders(g, 20, 97)) {
        GroebnerBasis gb = buchberger(I, ord);
        std::vector<Monomial> leads;
        for (const auto& p : nine) leads.push_back(p.leading_monomial(ord));
        bool verdict = MonomialIdeal(leads) == gb.initial();
        verdicts.push_back(verdict);
        if (verdict) ++covered;
        CHECK(gb_degree_bound_check(gb, g));  // I_2 is CS: multidegrees <= (1,1,1)
    }
    CHECK(verdicts.size() == 20);
    INFO("orders covered by the two-minor leads: ", covered, " of 20");
    CHECK(covered >= 1);  // the diagonal orders certainly are
}

TEST_CASE("dual multidegree is the complement encoding of the multidegree") {
    // On generic determinantal rings the lowest component of K(1-Z) carries
    // the same coefficients as the multidegree with b replaced by
    // (m-1,...,m-1) - b. In particular one is multiplicity-free iff the
    // other is.
    for (auto [m, n, t] : std::vector<std::array<int, 3>>{
             {2, 2, 2}, {3, 3, 2}, {3, 3, 3}, {2, 3, 2}, {4, 4, 3}}) {
        DetSpec spec(m, n, t);
        Grading g = spec.grading();
        std::vector<std::vector<int>> rsub, csub;
        std::vector<int> cur;
        auto gen = [&](auto&& self, int from, int limit, std::vector<std::vector<int>>& o) -> void {
            if (static_cast<int>(cur.size()) == t) {
                o.push_back(cur);
                return;
            }
            for (int v = from; v <= limit; ++v) {
                cur.push_back(v);
                self(self, v + 1, limit, o);
                cur.pop_back();
            }
        };
        gen(gen, 1, m, rsub);
        gen(gen, 1, n, csub);
        std::vector<Polynomial> gens;
        for (const auto& R : rsub)
            for (const auto& C : csub) {
                std::vector<std::vector<Polynomial>> M(t, std::vector<Polynomial>(t));
                for (int a = 0; a < t; ++a)
                    for (int b = 0; b < t; ++b)
                        M[a][b] = Polynomial::variable(xvar(R[a], C[b]));
                gens.push_back(determinant(M));
            }
        GroebnerBasis gb = buchberger(IdealPresentation(gens, g), TermOrder::lex());
        Polynomial dual = dual_multidegree(hs_numerator(gb.initial(), g), n);

        Polynomial expected;
        for (const auto& [b, e] : det_multidegree(spec, DetRoute::schur).coefficients()) {
            Monomial::Exps exps;
            for (int j = 0; j < n; ++j)
                if (m - 1 - b[j]) exps.emplace_back(zvar(j + 1), m - 1 - b[j]);
            expected.add_term(Monomial(std::move(exps)), rat(e));
        }
        CHECK(dual == expected);
    }
}

#include <mdlab/schubert.hpp>

TEST_CASE("dual multidegree of the 214635 Schubert ideal via its initial ideal") {
    Permutation w = parse_permutation("214635");
    Grading g = Grading::grid(5, 4);  // the generators live in the 5x4 ladder
    IdealPresentation I(schubert_ideal_generators(w), g);
    GroebnerBasis gb = buchberger(I, TermOrder::lex());
    Polynomial dual = dual_multidegree(hs_numerator(gb.initial(), g), 4);
    CHECK(dual == schubert_polynomial(w));
    Monomial m(Monomial::Exps{{zvar(1), 2}, {zvar(2), 1}, {zvar(3), 1}});
    CHECK(dual.coefficient(m) == 2);
}
