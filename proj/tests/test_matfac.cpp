#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ulrich/matfac.hpp"
#include "ulrich/parse.hpp"
#include "ulrich/rng.hpp"

using namespace ulrich;

namespace {

template <class D>
std::vector<MultiPoly<D>> five_forms(const D& dom, int m, std::mt19937_64& rng) {
    std::vector<MultiPoly<D>> ps;
    for (int i = 0; i < 5; ++i) ps.push_back(rand_homogeneous(dom, 4, m, rng));
    return ps;
}

}  // namespace

TEST_CASE("the 2x2 template is the doubling base step") {
    QQ dom;
    auto p0 = MultiPoly<QQ>::variable(dom, 4, 0);
    auto p1 = MultiPoly<QQ>::variable(dom, 4, 1);
    auto p2 = MultiPoly<QQ>::variable(dom, 4, 2);
    Decomposition<QQ> dec(2, p0, {{p1, p2}});
    CHECK(dec.summands() == 2);
    auto f = build_factorization(dec);
    CHECK(f.size == 2);
    CHECK(f.rank() == 1);
    CHECK(f.b == p0 * p0 + p1 * p2);
    CHECK(f.A.at(0, 0) == p0);
    CHECK(f.A.at(0, 1) == p1);
    CHECK(f.A.at(1, 0) == p2);
    CHECK(f.A.at(1, 1) == -p0);
    CHECK(verify_power(f.A, 2, f.b).ok);
    CHECK(verify_determinantal(f.A, TPoly<QQ>::t(dom, 4).pow(2) - TPoly<QQ>::constant(f.b), 1));
}

TEST_CASE("the 4x4 doubling squares to b times the identity") {
    QQ dom;
    std::vector<MultiPoly<QQ>> p;
    for (int i = 0; i < 4; ++i) p.push_back(MultiPoly<QQ>::variable(dom, 4, i));
    auto p0 = p[0] + p[3];  // any degree-1 forms work; keep them entangled
    Decomposition<QQ> dec(2, p0, {{p[0], p[1]}, {p[2], p[3]}});
    CHECK(dec.summands() == 3);
    auto f = build_factorization(dec);
    CHECK(f.size == 4);
    CHECK(f.rank() == 2);
    CHECK(f.b == p0 * p0 + p[0] * p[1] + p[2] * p[3]);
    // char poly is (t^2 - b)^2
    auto tb = TPoly<QQ>::t(dom, 4).pow(2) - TPoly<QQ>::constant(f.b);
    CHECK(verify_determinantal(f.A, tb, 2));
}

TEST_CASE("d = 3 companion template over F_7 with zeta = 2") {
    GFp f7(7);
    std::mt19937_64 rng(99);
    auto p0 = rand_homogeneous(f7, 4, 2, rng);
    auto p1 = rand_homogeneous(f7, 4, 2, rng);
    auto p2 = rand_homogeneous(f7, 4, 2, rng);
    auto p3 = rand_homogeneous(f7, 4, 2, rng);
    Decomposition<GFp> dec(3, p0, {{p1, p2, p3}});
    auto f = build_factorization(dec, std::uint64_t{2});
    CHECK(f.size == 3);
    CHECK(f.b == p0.pow(3) + p1 * p2 * p3);
    CHECK(verify_power(f.A, 3, f.b).ok);
    // diagonal carries the zeta twists
    CHECK(f.A.at(0, 0) == p0);
    CHECK(f.A.at(1, 1) == p0.scaled(2));
    CHECK(f.A.at(2, 2) == p0.scaled(4));
    auto tb = TPoly<GFp>::t(f7, 4).pow(3) - TPoly<GFp>::constant(f.b);
    CHECK(verify_determinantal(f.A, tb, 1));
}

TEST_CASE("d = 4 block construction over F_5") {
    GFp f5(5);
    // 2 has order 4 mod 5
    std::mt19937_64 rng(3);
    auto p0 = rand_homogeneous(f5, 3, 1, rng);
    std::vector<MultiPoly<GFp>> q;
    for (int i = 0; i < 4; ++i) q.push_back(rand_homogeneous(f5, 3, 1, rng));
    Decomposition<GFp> dec(4, p0, {{q[0], q[1], q[2], q[3]}});
    auto f = build_factorization(dec, std::uint64_t{2});
    CHECK(f.size == 4);
    CHECK(verify_power(f.A, 4, f.b).ok);
    auto tb = TPoly<GFp>::t(f5, 3).pow(4) - TPoly<GFp>::constant(f.b);
    CHECK(verify_determinantal(f.A, tb, 1));
}

TEST_CASE("doubling sizes are 2^(s-1) and verify both ways") {
    GFp f101(101);
    std::mt19937_64 rng(7);
    for (int s = 2; s <= 4; ++s) {
        auto p0 = rand_homogeneous(f101, 4, 1, rng);
        std::vector<std::vector<MultiPoly<GFp>>> prods;
        for (int i = 0; i < s - 1; ++i) prods.push_back({rand_homogeneous(f101, 4, 1, rng), rand_homogeneous(f101, 4, 1, rng)});
        Decomposition<GFp> dec(2, p0, prods);
        CHECK(dec.summands() == s);
        auto f = build_factorization(dec);
        CHECK(f.size == (1 << (s - 1)));
        CHECK(verify_power(f.A, 2, f.b).ok);
        auto tb = TPoly<GFp>::t(f101, 4).pow(2) - TPoly<GFp>::constant(f.b);
        CHECK(verify_determinantal(f.A, tb, f.size / 2));
    }
}

TEST_CASE("missing power term means p0 = 0") {
    GFp f101(101);
    std::mt19937_64 rng(13);
    auto p1 = rand_homogeneous(f101, 4, 2, rng);
    auto p2 = rand_homogeneous(f101, 4, 2, rng);
    Decomposition<GFp> dec(2, std::nullopt, {{p1, p2}});
    CHECK(dec.summands() == 2);
    auto f = build_factorization(dec);
    CHECK(f.size == 2);
    CHECK(f.b == p1 * p2);
    CHECK(f.A.at(0, 0).is_zero());
}

TEST_CASE("verify_power accepts and refuses correctly") {
    QQ dom;
    // identity, d = 2, b = 1
    SquareMatrix<MultiPoly<QQ>> id(3, MultiPoly<QQ>::zero(dom, 2));
    for (int i = 0; i < 3; ++i) id.at(i, i) = MultiPoly<QQ>::one(dom, 2);
    CHECK(verify_power(id, 2, MultiPoly<QQ>::one(dom, 2)).ok);

    auto p0 = MultiPoly<QQ>::variable(dom, 4, 0);
    auto p1 = MultiPoly<QQ>::variable(dom, 4, 1);
    auto p2 = MultiPoly<QQ>::variable(dom, 4, 2);
    Decomposition<QQ> dec(2, p0, {{p1, p2}});
    auto f = build_factorization(dec);
    // nudge one coefficient of b: the check must fail and point at (0,0)
    auto bad = f.b + MultiPoly<QQ>::constant(dom, 4, 1) * p1 * p2;
    auto chk = verify_power(f.A, 2, bad);
    CHECK_FALSE(chk.ok);
    CHECK(chk.row == 0);
    CHECK(chk.col == 0);

    // mixed-degree entries are rejected outright
    SquareMatrix<MultiPoly<QQ>> mixed(2, MultiPoly<QQ>::zero(dom, 4));
    mixed.at(0, 0) = p0;
    mixed.at(0, 1) = p1 * p1;
    CHECK_THROWS_AS(verify_power(mixed, 2, f.b), std::invalid_argument);
}

TEST_CASE("verify_determinantal on the identity") {
    QQ dom;
    SquareMatrix<MultiPoly<QQ>> id(3, MultiPoly<QQ>::zero(dom, 2));
    for (int i = 0; i < 3; ++i) id.at(i, i) = MultiPoly<QQ>::one(dom, 2);
    auto t_minus_1 = TPoly<QQ>::t(dom, 2) - TPoly<QQ>::constant(MultiPoly<QQ>::one(dom, 2));
    CHECK(verify_determinantal(id, t_minus_1, 3));
    CHECK_THROWS_AS(verify_determinantal(id, t_minus_1, 2), std::invalid_argument);
}

TEST_CASE("construction preconditions") {
    QQ dom;
    auto p0 = MultiPoly<QQ>::variable(dom, 4, 0);
    auto p1 = MultiPoly<QQ>::variable(dom, 4, 1);
    auto p2 = MultiPoly<QQ>::variable(dom, 4, 2);
    auto p3 = MultiPoly<QQ>::variable(dom, 4, 3);

    // no product terms: s = 1 is refused
    CHECK_THROWS_AS(Decomposition<QQ>(2, p0, {}), std::invalid_argument);
    // wrong tuple arity
    CHECK_THROWS_AS(Decomposition<QQ>(3, p0, {{p1, p2}}), std::invalid_argument);
    // mixed degrees
    CHECK_THROWS_AS(Decomposition<QQ>(2, p0, {{p1 * p1, p2}}), std::invalid_argument);
    // d = 3 over Q has no primitive cube root
    Decomposition<QQ> d3(3, p0, {{p1, p2, p3}});
    CHECK_THROWS_AS(build_factorization(d3), std::invalid_argument);
    CHECK_THROWS_AS(build_factorization(d3, mpq_class(1)), std::invalid_argument);

    // characteristic dividing d
    GFp f3(3);
    auto a0 = MultiPoly<GFp>::variable(f3, 2, 0);
    auto a1 = MultiPoly<GFp>::variable(f3, 2, 1);
    Decomposition<GFp> dchar(3, a0, {{a0, a1, a1}});
    CHECK_THROWS_AS(build_factorization(dchar, std::uint64_t{1}), std::invalid_argument);

    // a non-primitive root is refused
    GFp f13(13);
    auto b0 = MultiPoly<GFp>::variable(f13, 2, 0);
    auto b1 = MultiPoly<GFp>::variable(f13, 2, 1);
    Decomposition<GFp> d4(4, b0, {{b0, b1, b0, b1}});
    CHECK_THROWS_AS(build_factorization(d4, std::uint64_t{12}), std::invalid_argument);  // order 2, not 4
}

TEST_CASE("negating A factors the same b for even d") {
    GFp f101(101);
    std::mt19937_64 rng(21);
    auto p0 = rand_homogeneous(f101, 4, 2, rng);
    auto p1 = rand_homogeneous(f101, 4, 2, rng);
    auto p2 = rand_homogeneous(f101, 4, 2, rng);
    Decomposition<GFp> dec(2, p0, {{p1, p2}});
    auto f = build_factorization(dec);
    CHECK(verify_power(-f.A, 2, f.b).ok);
}

TEST_CASE("external matrices are re-verified at construction") {
    QQ dom;
    auto p0 = MultiPoly<QQ>::variable(dom, 4, 0);
    auto p1 = MultiPoly<QQ>::variable(dom, 4, 1);
    auto p2 = MultiPoly<QQ>::variable(dom, 4, 2);
    auto good = build_factorization(Decomposition<QQ>(2, p0, {{p1, p2}}));
    auto ext = factorization_from_matrix(good.A, 2, good.b);
    CHECK(ext.provenance == "external");
    CHECK(ext.size == 2);

    auto wrong_b = good.b + p1 * p1;
    CHECK_THROWS_AS(factorization_from_matrix(good.A, 2, wrong_b), std::invalid_argument);
}

TEST_CASE("seeded random certificates over F_101, both checks") {
    GFp f101(101);
    for (int i = 0; i < 12; ++i) {
        std::mt19937_64 rng(derive_seed(2024, static_cast<std::uint64_t>(i)));
        int m = 1 + static_cast<int>(uniform_below(rng, 3));
        int s = 2 + static_cast<int>(uniform_below(rng, 3));
        auto p0 = rand_homogeneous(f101, 4, m, rng);
        std::vector<std::vector<MultiPoly<GFp>>> prods;
        for (int k = 0; k < s - 1; ++k) prods.push_back({rand_homogeneous(f101, 4, m, rng), rand_homogeneous(f101, 4, m, rng)});
        auto f = build_factorization(Decomposition<GFp>(2, p0, prods));
        CHECK(f.size == (1 << (s - 1)));
        CHECK(verify_power(f.A, 2, f.b).ok);
        auto tb = TPoly<GFp>::t(f101, 4).pow(2) - TPoly<GFp>::constant(f.b);
        CHECK(verify_determinantal(f.A, tb, f.size / 2));
    }
}

TEST_CASE("rank bounds") {
    CHECK(rank_bound(2, 3, true) == 2);
    CHECK(rank_bound(3, 2, true) == 1);
    CHECK(rank_bound(4, 3, false) == 8);  // 4 * phi(4)
    CHECK(rank_bound(2, 2, false) == 1);  // phi(2) = 1
    CHECK(rank_bound(6, 4, false) == 72); // 36 * phi(6)
    CHECK_THROWS_AS(rank_bound(2, 1, true), std::invalid_argument);
    CHECK_THROWS_AS(rank_bound(1, 3, true), std::invalid_argument);
    CHECK(euler_totient(1) == 1);
    CHECK(euler_totient(12) == 4);
}

TEST_CASE("skew symmetrization of the 4x4 doubling") {
    QQ dom;
    std::mt19937_64 rng(31);
    for (int it = 0; it < 8; ++it) {
        std::vector<MultiPoly<QQ>> p = five_forms(dom, 2, rng);
        Decomposition<QQ> dec(2, p[0], {{p[1], p[2]}, {p[3], p[4]}});
        auto f = build_factorization(dec);
        auto m = char_matrix(f.A);
        auto s = skew_symmetrize_d2<QQ>(m);
        CHECK(is_skew_symmetric(s));
        auto pf = pfaffian(s);
        auto tb = TPoly<QQ>::t(dom, 4).pow(2) - TPoly<QQ>::constant(f.b);
        CHECK((pf == tb || pf == -tb));
        CHECK(pf * pf == tb * tb);
        // pf(S)^2 equals det of the t*I - A matrix
        CHECK(pf * pf == det(m));
    }

    // degenerate case: p1 = ... = p4 = 0
    auto p0 = MultiPoly<QQ>::variable(dom, 4, 0);
    auto z = MultiPoly<QQ>::zero(dom, 4);
    auto f0 = build_factorization(Decomposition<QQ>(2, p0, {{z, z}, {z, z}}));
    auto s0 = skew_symmetrize_d2<QQ>(char_matrix(f0.A));
    auto pf0 = pfaffian(s0);
    auto want = TPoly<QQ>::t(dom, 4).pow(2) - TPoly<QQ>::constant(p0 * p0);
    CHECK((pf0 == want || pf0 == -want));

    // a non-doubling shape is refused
    auto other = SquareMatrix<MultiPoly<QQ>>(4, p0);
    CHECK_THROWS_AS(skew_symmetrize_d2<QQ>(char_matrix(other)), std::invalid_argument);
}

TEST_CASE("factorizations over the integers") {
    ZZ dom;
    auto p0 = MultiPoly<ZZ>::variable(dom, 4, 0);
    auto p1 = MultiPoly<ZZ>::variable(dom, 4, 1);
    auto p2 = MultiPoly<ZZ>::variable(dom, 4, 2);
    auto f = build_factorization(Decomposition<ZZ>(2, p0, {{p1, p2}}));
    CHECK(verify_power(f.A, 2, f.b).ok);
}
