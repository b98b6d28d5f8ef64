#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlcsm/bipoly.hpp"
#include "mlcsm/matrix.hpp"
#include "mlcsm/rational.hpp"
#include "mlcsm/seqprops.hpp"
#include "mlcsm/unipoly.hpp"
#include "testutil.hpp"

using namespace mlcsm;

namespace {

UniPoly upoly(std::vector<long long> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return UniPoly::from_coeffs(std::move(c));
}

RatMatrix mat(int rows, int cols, std::vector<long long> entries) {
    std::vector<Rational> e(entries.begin(), entries.end());
    return RatMatrix(rows, cols, std::move(e));
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("matrix rank examples") {
    CHECK(matrix_rank(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})).rank == 3);
    CHECK(matrix_rank(mat(2, 2, {0, 0, 0, 0})).rank == 0);
    auto r = matrix_rank(mat(2, 2, {1, 2, 2, 4}));
    CHECK(r.rank == 1);
    CHECK(r.rref == mat(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref is idempotent on random matrices") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = static_cast<int>(testutil::rand_int(rng, 1, 5));
        int cols = static_cast<int>(testutil::rand_int(rng, 1, 5));
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = testutil::rand_rational(rng, 6);
        auto once = matrix_rank(m);
        auto twice = matrix_rank(once.rref);
        CHECK(once.rref == twice.rref);
        CHECK(once.rank == twice.rank);
    }
}

TEST_CASE("distinct root count") {
    CHECK(distinct_root_count(upoly({-1, 0, 1})) == 2);   // x^2 - 1
    CHECK(distinct_root_count(upoly({1, -2, 1})) == 1);   // (x-1)^2
    CHECK(distinct_root_count(upoly({0, 0, 0, 1})) == 1); // x^3
    CHECK_THROWS_WITH_AS(distinct_root_count(UniPoly{}), "identically zero",
                         std::invalid_argument);
}

TEST_CASE("distinct root count ignores multiplicity") {
    testutil::Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        int deg = static_cast<int>(testutil::rand_int(rng, 1, 6));
        std::vector<Rational> c(deg + 1);
        for (auto& x : c) x = testutil::rand_rational(rng, 9);
        if (c[deg] == 0) c[deg] = 1;
        UniPoly p = UniPoly::from_coeffs(std::move(c));
        CHECK(distinct_root_count(p * p) == distinct_root_count(p));
    }
}

TEST_CASE("polynomial with k distinct rational roots") {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int k = static_cast<int>(testutil::rand_int(rng, 1, 7));
        std::vector<Rational> roots;
        while (static_cast<int>(roots.size()) < k) {
            Rational r = testutil::rand_rational(rng, 12);
            if (std::find(roots.begin(), roots.end(), r) == roots.end())
                roots.push_back(r);
        }
        UniPoly p(Rational(1));
        for (const Rational& r : roots) p = p * UniPoly::from_coeffs({-r, 1});
        CHECK(distinct_root_count(p) == k);
        CHECK(squarefree_part(p).degree() == k);
    }
}

TEST_CASE("poly gcd and squarefree basics") {
    UniPoly a = upoly({-1, 0, 1});          // (x-1)(x+1)
    UniPoly b = upoly({1, -2, 1});          // (x-1)^2
    UniPoly g = poly_gcd(a, b);
    CHECK(g == upoly({-1, 1}));
    CHECK(squarefree_part(b) == upoly({-1, 1}));
    CHECK(squarefree_part(upoly({0, 0, 0, 1})) == upoly({0, 1}));
}

TEST_CASE("sylvester resultant examples") {
    BiPoly y_minus_x = BiPoly::linear(-1, 1, 0);
    BiPoly y_plus_x = BiPoly::linear(1, 1, 0);
    CHECK(sylvester_resultant(y_minus_x, y_plus_x, 1) == upoly({0, 2}));
    CHECK(sylvester_resultant(y_minus_x, y_minus_x, 1).is_zero());

    BiPoly y2_minus_x = BiPoly::monomial(0, 2, 1) - BiPoly::monomial(1, 0, 1);
    BiPoly y_minus_1 = BiPoly::monomial(0, 1, 1) - BiPoly::constant(1);
    CHECK(sylvester_resultant(y2_minus_x, y_minus_1, 1) == upoly({1, -1}));
}

TEST_CASE("sylvester resultant rejects degree zero input") {
    BiPoly p = BiPoly::linear(1, 1, 0);
    BiPoly c = BiPoly::monomial(2, 0, 3);  // no y at all
    CHECK_THROWS_WITH_AS(sylvester_resultant(p, c, 1), "nothing to eliminate",
                         std::invalid_argument);
    CHECK_THROWS_AS(sylvester_resultant(BiPoly{}, p, 1), std::invalid_argument);
}

TEST_CASE("resultant swap symmetry") {
    testutil::Rng rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        BiPoly p, q;
        for (int t = 0; t < 4; ++t) {
            p = p + BiPoly::monomial(static_cast<int>(testutil::rand_int(rng, 0, 2)),
                                     static_cast<int>(testutil::rand_int(rng, 0, 2)),
                                     testutil::rand_int(rng, -4, 4));
            q = q + BiPoly::monomial(static_cast<int>(testutil::rand_int(rng, 0, 2)),
                                     static_cast<int>(testutil::rand_int(rng, 0, 2)),
                                     testutil::rand_int(rng, -4, 4));
        }
        int dp = p.degree(1), dq = q.degree(1);
        if (dp <= 0 || dq <= 0) continue;
        UniPoly pq = sylvester_resultant(p, q, 1);
        UniPoly qp = sylvester_resultant(q, p, 1);
        UniPoly expected = (dp * dq) % 2 == 0 ? qp : -qp;
        CHECK(pq == expected);
    }
}

TEST_CASE("resultant vanishes exactly at shared roots") {
    // p = y - x^2, q = y - 2x: common zeros at x = 0 and x = 2.
    BiPoly p = BiPoly::monomial(0, 1, 1) - BiPoly::monomial(2, 0, 1);
    BiPoly q = BiPoly::monomial(0, 1, 1) - BiPoly::monomial(1, 0, 2);
    UniPoly r = sylvester_resultant(p, q, 1);
    CHECK(r(Rational(0)) == 0);
    CHECK(r(Rational(2)) == 0);
    CHECK(r(Rational(1)) != 0);
    CHECK(distinct_root_count(r) == 2);
}

TEST_CASE("sequence properties") {
    auto run = [](std::vector<long long> v) {
        std::vector<Integer> s(v.begin(), v.end());
        return logconcave_no_internal_zeros(s);
    };
    auto a = run({1, 1, 1});
    CHECK(a.logconcave);
    CHECK(a.no_internal_zeros);
    CHECK(a.nonnegative);
    auto b = run({1, 0, 1});
    CHECK_FALSE(b.logconcave);
    CHECK_FALSE(b.no_internal_zeros);
    CHECK(b.nonnegative);
    auto c = run({1, 3, 3});
    CHECK(c.all());
    auto d = run({1, 2, -1});
    CHECK_FALSE(d.nonnegative);
    CHECK(run({0, 0}).no_internal_zeros);
    CHECK_THROWS_AS(logconcave_no_internal_zeros(std::span<const Integer>{}),
                    std::invalid_argument);
}

TEST_CASE("taylor shift and interpolation") {
    UniPoly p = upoly({3, -3, 1});  // q^2 - 3q + 3
    UniPoly shifted = p.taylor_shift(1);
    CHECK(shifted == upoly({1, -1, 1}));
    std::vector<Rational> xs{0, 1, 2}, ys{3, 1, 1};
    CHECK(interpolate(xs, ys) == p);
}
