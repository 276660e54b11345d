#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mdlab/binedge.hpp>

#include <sstream>

using namespace mdlab;

namespace {

Graph path3() { return Graph(3, {{1, 2}, {2, 3}}); }

std::vector<Rational> alphas(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.push_back(rat(x));
    return out;
}

std::vector<Rational> random_alphas(Rng& rng, int n) {
    std::set<long> used;
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
        long v = rng.uniform(0, 1000000);
        if (used.insert(v).second) out.push_back(rat(v));
    }
    return out;
}

}  // namespace

TEST_CASE("graph basics and file parsing") {
    Graph g = path3();
    CHECK(g.size() == 3);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 3));
    CHECK(g.connected());
    CHECK(!Graph(3, {{1, 2}}).connected());
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);

    std::istringstream in("3\n1 2\n2 3\n");
    CHECK(parse_graph_file(in) == path3());
}

TEST_CASE("counts of labeled connected graphs") {
    CHECK(all_connected_graphs(1).size() == 1);
    CHECK(all_connected_graphs(2).size() == 1);
    CHECK(all_connected_graphs(3).size() == 4);
    CHECK(all_connected_graphs(4).size() == 38);
}

TEST_CASE("path enumeration in graphs") {
    Graph e(2, {{1, 2}});
    auto p = enumerate_paths_graph(e, 1, 2);
    REQUIRE(p.size() == 1);
    CHECK(p[0].interior.empty());
    CHECK(p[0].monomial() == Monomial::var(bx(1)) * Monomial::var(bx(2)));

    auto p13 = enumerate_paths_graph(path3(), 1, 3);
    REQUIRE(p13.size() == 1);
    CHECK(p13[0].interior == std::vector<int>{2});

    // K4: interiors {}, {3}, {4}, {3,4}; the last arises from two orderings
    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto p12 = enumerate_paths_graph(k4, 1, 2);
    std::set<std::vector<int>> interiors;
    for (const auto& q : p12) interiors.insert(q.interior_set());
    CHECK(interiors ==
          std::set<std::vector<int>>{{}, {3}, {4}, {3, 4}});

    CHECK_THROWS_AS(enumerate_paths_graph(k4, 2, 2), std::invalid_argument);
}

TEST_CASE("predicted gin") {
    CHECK(predicted_gin(Graph(2, {{1, 2}})) ==
          MonomialIdeal({Monomial::var(bx(1)) * Monomial::var(bx(2))}));

    MonomialIdeal p3 = predicted_gin(path3());
    MonomialIdeal expected({Monomial::var(bx(1)) * Monomial::var(bx(2)),
                            Monomial::var(bx(2)) * Monomial::var(bx(3)),
                            Monomial::var(bx(1)) * Monomial::var(bx(3)) * Monomial::var(by(2))});
    CHECK(p3 == expected);
    CHECK(p3.is_squarefree());

    // triangle: the interior paths are redundant
    Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(predicted_gin(k3) ==
          MonomialIdeal({Monomial::var(bx(1)) * Monomial::var(bx(2)),
                         Monomial::var(bx(1)) * Monomial::var(bx(3)),
                         Monomial::var(bx(2)) * Monomial::var(bx(3))}));
}

TEST_CASE("F generators") {
    auto a = alphas({0, 1});
    Polynomial f = f_generator(a, 1, 2);
    CHECK(f == parse_polynomial("x(1,1)*x(1,2) + x(1,1)*x(2,2) - x(1,2)*x(2,1)"));
    CHECK(f.leading_monomial(TermOrder::lex()) ==
          Monomial::var(bx(1)) * Monomial::var(bx(2)));
    CHECK(f.leading_coefficient(TermOrder::lex()) == 1);

    // phi(Delta_ij) = (alpha_j - alpha_i) F_ij
    Polynomial phiDelta =
        edge_minor(1, 2).substitute({{by(1), parse_polynomial("0*x(1,1) + x(2,1)")},
                                     {by(2), parse_polynomial("x(1,2) + x(2,2)")}});
    CHECK(phiDelta == (a[1] - a[0]) * f);

    CHECK_THROWS_AS(f_generators(path3(), alphas({1, 1, 2})), std::invalid_argument);
}

TEST_CASE("the F-set of the path graph") {
    auto F = f_set(path3(), alphas({0, 1, 2}));
    REQUIRE(F.size() == 3);
    // contains F_12, F_23, and y_2 F_13 even though {1,3} is not an edge
    auto a = alphas({0, 1, 2});
    Polynomial y2f13 = f_generator(a, 1, 3).mul_term(Monomial::var(by(2)), 1);
    CHECK(std::find(F.begin(), F.end(), y2f13) != F.end());

    // leading terms generate the predicted gin
    std::vector<Monomial> leads;
    for (const auto& f : F) leads.push_back(f.leading_monomial(TermOrder::lex()));
    CHECK(MonomialIdeal(leads) == predicted_gin(path3()));
}

TEST_CASE("verify_gb on small graphs") {
    CHECK(verify_gb(Graph(2, {{1, 2}}), alphas({0, 1}), TermOrder::lex()));
    CHECK(verify_gb(path3(), alphas({0, 1, 2}), TermOrder::lex()));
    Rng rng(63);
    for (int nv = 2; nv <= 4; ++nv)
        for (const auto& g : all_connected_graphs(nv)) {
            CHECK(verify_gb(g, random_alphas(rng, nv), TermOrder::lex()));
        }
    // an order with y_i > x_i is rejected
    std::vector<Variable> badPriority{by(1), by(2), bx(1), bx(2)};
    CHECK_THROWS_AS(verify_gb(Graph(2, {{1, 2}}), alphas({0, 1}),
                              TermOrder::lex().with_priority(badPriority)),
                    std::invalid_argument);
}

TEST_CASE("a corrupted F-set fails the Groebner checks") {
    auto a = alphas({0, 1, 2});
    auto F = f_set(path3(), a);
    // drop the path element y_2 F_13
    std::vector<Polynomial> corrupted;
    std::vector<Monomial> leads;
    for (const auto& f : F) {
        if (f.size() == 3 && f.total_degree() == 3) continue;
        corrupted.push_back(f);
        leads.push_back(f.leading_monomial(TermOrder::lex()));
    }
    REQUIRE(corrupted.size() == 2);
    CHECK(!(MonomialIdeal(leads) == predicted_gin(path3())));
    CHECK(!all_spairs_reduce(corrupted, TermOrder::lex()));
}

TEST_CASE("coprime F-elements reduce their S-pair among themselves") {
    auto a = alphas({0, 1, 2, 3});
    Polynomial f12 = f_generator(a, 1, 2), f34 = f_generator(a, 3, 4);
    CHECK(all_spairs_reduce({f12, f34}, TermOrder::lex()));
}

TEST_CASE("gin of the binomial edge ideal matches the path prediction") {
    Rng rng(404);
    std::vector<Graph> sample{Graph(2, {{1, 2}}), path3(), Graph(3, {{1, 2}, {1, 3}, {2, 3}}),
                              Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
                              Graph(4, {{1, 2}, {1, 3}, {1, 4}})};
    for (const auto& g : sample) {
        MonomialIdeal J = gin(binomial_edge_ideal(g), TermOrder::lex(), 2, rng.next() | 1);
        CHECK(J == predicted_gin(g));
        CHECK(J.is_squarefree());
        CHECK(is_borel_fixed(J, g.grading()));
    }
}

TEST_CASE("scalar identities") {
    CHECK(lambda_identity_check(alphas({0, 1, 2}), 1, 2, 3));
    CHECK(lambda_identity_symbolic());
    CHECK(minor_syzygy_check(1, 2, 3));
    CHECK(spoly_reduction_check(alphas({0, 1, 2}), 1, 2, 3));

    Rng rng(777);
    for (int rep = 0; rep < 100; ++rep) {
        auto a = random_alphas(rng, 3);
        CHECK(lambda_identity_check(a, 1, 2, 3));
    }
    for (int rep = 0; rep < 50; ++rep) {
        auto a = random_alphas(rng, 5);
        int i = 1 + static_cast<int>(rng.uniform(0, 2));
        int j = i + 1 + static_cast<int>(rng.uniform(0, 1));
        int k = j + 1;
        if (k > 5) continue;
        CHECK(spoly_reduction_check(a, i, j, k));
    }
    CHECK_THROWS_AS(lambda_identity_check(alphas({0, 0, 2}), 1, 2, 3), std::invalid_argument);
}

TEST_CASE("multigraded HF agreement between predicted gin and initial ideals") {
    Graph g = path3();
    auto a = alphas({0, 5, 11});
    GroebnerBasis gb = buchberger(IdealPresentation(f_generators(g, a), g.grading()),
                                  TermOrder::lex());
    MonomialIdeal pred = predicted_gin(g);
    CHECK(gb.initial() == pred);
    for (int a1 = 0; a1 <= 2; ++a1)
        for (int a2 = 0; a2 <= 2; ++a2)
            for (int a3 = 0; a3 <= 2; ++a3)
                CHECK(multigraded_hf(pred, g.grading(), {a1, a2, a3}) ==
                      multigraded_hf(gb.initial(), g.grading(), {a1, a2, a3}));
}

TEST_CASE("reduced bases of a binomial edge ideal respect the CS degree bound") {
    Graph g = path3();
    IdealPresentation I = binomial_edge_ideal(g);
    for (const auto& ord : sample_term_orders(g.grading(), 5, 321)) {
        GroebnerBasis gb = buchberger(I, ord);
        CHECK(gb_degree_bound_check(gb, g.grading()));
    }
}
