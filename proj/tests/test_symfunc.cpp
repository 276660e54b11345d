#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mdlab/io.hpp>
#include <mdlab/symfunc.hpp>

using namespace mdlab;

namespace {

Partition Pt(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Tableau-sum oracle: sum of Z^content over all SSYT of the given shape with
// entries 1..n, enumerated directly without content restriction.
Polynomial schur_by_tableaux(const Partition& shape, int n) {
    Polynomial out;
    std::vector<std::vector<int>> rows(shape.length());
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.length()) {
            Monomial::Exps e;
            std::vector<int> cnt(n, 0);
            for (const auto& row : rows)
                for (int v : row) ++cnt[v - 1];
            for (int j = 0; j < n; ++j)
                if (cnt[j]) e.emplace_back(zvar(j + 1), cnt[j]);
            out.add_term(Monomial(std::move(e)), 1);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.parts()[r]) nr = r + 1, nc = 0;
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[r].push_back(v);
            self(self, nr, nc);
            rows[r].pop_back();
        }
    };
    if (shape.length() == 0) return Polynomial::one();
    rec(rec, 0, 0);
    return out;
}

}  // namespace

TEST_CASE("partition normalization and dominance") {
    CHECK(Partition(std::vector<int>{2, 2, 0, 0}) == Pt({2, 2}));
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK(Pt({2, 2}).dominates(Pt({1, 1, 1, 1})));
    CHECK(!Pt({2, 2}).dominates(Pt({3, 1})));
    CHECK(Pt({4}).dominates(Pt({4})));
    CHECK(parse_partition("2,2") == Pt({2, 2}));
    CHECK(to_string(Pt({2, 1})) == "2,1");
}

TEST_CASE("complete homogeneous polynomials") {
    CHECK(complete_homogeneous(0, 1, 3) == Polynomial::one());
    CHECK(complete_homogeneous(-2, 1, 3) == Polynomial::zero());
    CHECK(complete_homogeneous(2, 1, 2) == parse_polynomial("Z(1)^2 + Z(1)*Z(2) + Z(2)^2"));
    // number of terms is C(v+k-1, v) (stars and bars)
    for (int v = 0; v <= 5; ++v)
        for (int k = 1; k <= 4; ++k)
            CHECK(static_cast<long>(complete_homogeneous(v, 1, k).size()) ==
                  binom(v + k - 1, v));
}

TEST_CASE("monomial symmetric polynomials") {
    CHECK(monomial_symmetric(Pt({1, 1}), 2) == parse_polynomial("Z(1)*Z(2)"));
    CHECK(monomial_symmetric(Pt({2}), 3) == parse_polynomial("Z(1)^2 + Z(2)^2 + Z(3)^2"));
    CHECK(monomial_symmetric(Pt({2, 1}), 3).size() == 6);
    CHECK_THROWS_AS(monomial_symmetric(Pt({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("schur basics") {
    CHECK(schur(Pt({1}), 3) == complete_homogeneous(1, 1, 3));
    // s_{2,2} over 4 variables expands with Kostka coefficients 1, 1, 2
    Polynomial s22 = schur(Pt({2, 2}), 4);
    CHECK(s22 == monomial_symmetric(Pt({2, 2}), 4) + monomial_symmetric(Pt({2, 1, 1}), 4) +
                     rat(2) * monomial_symmetric(Pt({1, 1, 1, 1}), 4));
    CHECK(is_symmetric(s22, 4));
    CHECK(s22.total_degree() == 4);
}

TEST_CASE("schur equals the tableau sum for all |lambda| <= 6, n <= 4") {
    for (int w = 1; w <= 6; ++w) {
        for (const Partition& lam : partitions_of(w)) {
            for (int n = 1; n <= 4; ++n) {
                CHECK(schur(lam, n) == schur_by_tableaux(lam, n));
            }
        }
    }
}

TEST_CASE("kostka numbers") {
    CHECK(kostka(Pt({2, 2}), Pt({2, 2})) == 1);               // K_{lambda,lambda} = 1
    CHECK(kostka(Pt({2, 2}), std::vector<int>{1, 1, 1, 1}) == 2);
    CHECK(kostka(Pt({2, 2}), Pt({3, 1})) == 0);               // dominance fails
    CHECK_THROWS_AS(kostka(Pt({2, 2}), Pt({1, 1})), std::invalid_argument);
}

TEST_CASE("the two tableaux of shape 2,2 with content 1,1,1,1") {
    auto ts = enumerate_ssyt(Pt({2, 2}), {1, 1, 1, 1});
    REQUIRE(ts.size() == 2);
    std::sort(ts.begin(), ts.end());
    CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(ts[1].rows == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    for (const auto& t : ts) CHECK(t.shape() == Pt({2, 2}));
}

TEST_CASE("single-row tableau is unique") {
    auto ts = enumerate_ssyt(Pt({3}), {3});
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 1, 1}});
}

TEST_CASE("kostka positivity iff dominance, for all |lambda| = |mu| <= 6") {
    for (int w = 1; w <= 6; ++w) {
        auto ps = partitions_of(w);
        for (const auto& lam : ps)
            for (const auto& mu : ps) {
                bool positive = kostka(lam, mu) > 0;
                CHECK(positive == lam.dominates(mu));
            }
    }
}

TEST_CASE("kostka is invariant under reordering the content") {
    std::vector<int> mu{1, 2, 1};
    Partition lam = Pt({2, 2});
    long base = kostka(lam, mu);
    CHECK(base == kostka(lam, std::vector<int>{2, 1, 1}));
    CHECK(base == kostka(lam, std::vector<int>{1, 1, 2}));
    // enumeration length matches the sorted-content count
    CHECK(static_cast<long>(enumerate_ssyt(lam, {1, 2, 1}).size()) ==
          kostka(lam, sorted_partition({1, 2, 1})));
}

TEST_CASE("expansion in the monomial basis") {
    auto e = expand_monomial_basis(monomial_symmetric(Pt({2, 1}), 3), 3);
    REQUIRE(e.size() == 1);
    CHECK(e.at(Pt({2, 1})) == 1);

    auto s = expand_monomial_basis(schur(Pt({2, 2}), 4), 4);
    REQUIRE(s.size() == 3);
    CHECK(s.at(Pt({2, 2})) == 1);
    CHECK(s.at(Pt({2, 1, 1})) == 1);
    CHECK(s.at(Pt({1, 1, 1, 1})) == 2);

    auto h = expand_monomial_basis(complete_homogeneous(2, 1, 2), 2);
    CHECK(h.at(Pt({2})) == 1);
    CHECK(h.at(Pt({1, 1})) == 1);

    CHECK_THROWS_AS(expand_monomial_basis(parse_polynomial("Z(1)"), 2), std::invalid_argument);
}

TEST_CASE("schur equals the Kostka-weighted monomial sum, |lambda| <= 6, n <= 4") {
    for (int w = 1; w <= 6; ++w) {
        for (const Partition& lam : partitions_of(w)) {
            for (int n = 2; n <= 4; ++n) {
                Polynomial rhs;
                for (const Partition& mu : partitions_of(w)) {
                    if (mu.length() > n) continue;
                    long k = kostka(lam, mu);
                    if (k) rhs += rat(k) * monomial_symmetric(mu, n);
                }
                CHECK(schur(lam, n) == rhs);
            }
        }
    }
}
