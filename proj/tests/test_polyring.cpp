#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ulrich/parse.hpp"
#include "ulrich/rng.hpp"
#include "ulrich/tpoly.hpp"

using namespace ulrich;

namespace {

const std::vector<std::string> xyzw = {"x", "y", "z", "w"};

MultiPoly<QQ> q(const std::string& s, int nvars = 4) {
    std::vector<std::string> names(xyzw.begin(), xyzw.begin() + nvars);
    return parse_poly(s, QQ{}, names);
}

}  // namespace

TEST_CASE("coefficient domains") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(101));
    CHECK(is_prime_u64(4611686018427387847ull));  // prime just below 2^62
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));

    CHECK_THROWS_AS(GFp(91), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientDomain::prime_field(1), std::invalid_argument);
    CHECK(CoefficientDomain::prime_field(7).characteristic() == 7);
    CHECK(CoefficientDomain::rationals().is_field());
    CHECK_FALSE(CoefficientDomain::integers().is_field());

    GFp f7(7);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.neg(0) == 0);
    CHECK(f7.from_long(-1) == 6);
}

TEST_CASE("difference of squares and additive identity") {
    auto x = MultiPoly<QQ>::variable(QQ{}, 2, 0);
    auto y = MultiPoly<QQ>::variable(QQ{}, 2, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);

    auto p = q("x^2 + 3*y*z - 7/2*w");
    CHECK(p + p.make_zero() == p);
}

TEST_CASE("prime field arithmetic folds coefficients") {
    GFp f7(7);
    auto x = MultiPoly<GFp>::variable(f7, 1, 0);
    auto lhs = x.scaled(2) * x.scaled(4);  // (2x)(4x) = 8x^2 = x^2 over F_7
    CHECK(lhs == x * x);
}

TEST_CASE("monomial_basis counts and order") {
    auto b42 = monomial_basis(4, 2);
    CHECK(b42.size() == 10);
    // descending graded-lex in four variables
    CHECK(b42.front() == Monomial{2, 0, 0, 0});
    CHECK(b42[1] == Monomial{1, 1, 0, 0});
    CHECK(b42.back() == Monomial{0, 0, 0, 2});

    auto b15 = monomial_basis(1, 5);
    REQUIRE(b15.size() == 1);
    CHECK(b15[0] == Monomial{5});

    CHECK(monomial_basis(4, 4).size() == 35);
    CHECK(monomial_basis(4, 0).size() == 1);
    CHECK_THROWS_AS(monomial_basis(4, -1), std::invalid_argument);
}

TEST_CASE("parser accepts the grammar") {
    auto p = q("x^2 + 3*y*z");
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(Monomial{2, 0, 0, 0}) == 1);
    CHECK(p.coeff(Monomial{0, 1, 1, 0}) == 3);

    auto two_terms = q("x*y+z*w");
    CHECK(two_terms.term_count() == 2);
    CHECK(two_terms.is_homogeneous_of_degree(2));

    CHECK(q("2/3*x + 1/3*x") == q("x"));
    CHECK(q("0").is_zero());
    CHECK(q("x - x").is_zero());
    CHECK(q("x*x*x") == q("x^3"));
    CHECK(q("x + -2*y") == q("x - 2*y"));
    CHECK(q("  x ^ 2  ") == q("x^2"));
}

TEST_CASE("parser rejects what the grammar excludes") {
    CHECK_THROWS_AS(q("x^-1"), ParseError);
    CHECK_THROWS_AS(q("q + 1"), ParseError);  // unknown variable
    CHECK_THROWS_AS(q(""), ParseError);
    CHECK_THROWS_AS(q("3 x"), ParseError);
    CHECK_THROWS_AS(q("x +"), ParseError);
    CHECK_THROWS_AS(q("-x"), ParseError);  // leading sign must belong to an integer
    CHECK_THROWS_AS(q("1/0"), ParseError);

    try {
        q("x^-1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos() == 2);
    }

    // rationals only exist over Q
    CHECK_THROWS_AS(parse_poly("1/2*x", ZZ{}, std::vector<std::string>{"x"}), ParseError);
    CHECK_THROWS_AS(parse_poly("1/2*x", GFp(7), std::vector<std::string>{"x"}), ParseError);
    // but integers reduce into a prime field
    CHECK(parse_poly("9*x", GFp(7), std::vector<std::string>{"x"}) == parse_poly("2*x", GFp(7), std::vector<std::string>{"x"}));
}

TEST_CASE("format round-trips through parse") {
    auto check_roundtrip = [&](const MultiPoly<QQ>& p) {
        CHECK(parse_poly(p.format(xyzw), QQ{}, xyzw) == p);
    };
    check_roundtrip(q("x^2 - y^2"));
    check_roundtrip(q("0 - x*y - 3/4*z^2 + 1"));
    check_roundtrip(q("0"));
    check_roundtrip(q("5"));
    check_roundtrip(q("0 - 1"));

    CHECK(q("x^2 - y^2").format(xyzw) == "x^2 - y^2");
    CHECK(q("0 - x + y").format(xyzw) == "-1*x + y");
    CHECK(q("y + x").format(xyzw) == "x + y");

    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        int deg = 1 + static_cast<int>(uniform_below(rng, 4));
        auto p = rand_homogeneous(QQ{}, 4, deg, rng);
        check_roundtrip(p);
    }
}

TEST_CASE("ring axioms on seeded inputs, all three domains") {
    auto run = [&](auto dom) {
        std::mt19937_64 rng(42);
        using D = decltype(dom);
        for (int it = 0; it < 100; ++it) {
            int deg = static_cast<int>(uniform_below(rng, 3));
            auto a = rand_homogeneous(dom, 3, deg, rng);
            auto b = rand_homogeneous(dom, 3, static_cast<int>(uniform_below(rng, 3)), rng);
            auto c = rand_homogeneous(dom, 3, static_cast<int>(uniform_below(rng, 3)), rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == MultiPoly<D>::zero(dom, 3));
        }
    };
    run(QQ{});
    run(ZZ{});
    run(GFp(101));
}

TEST_CASE("homogeneous degrees are additive under product") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        int da = 1 + static_cast<int>(uniform_below(rng, 3));
        int db = 1 + static_cast<int>(uniform_below(rng, 3));
        auto a = rand_homogeneous(GFp(101), 3, da, rng);
        auto b = rand_homogeneous(GFp(101), 3, db, rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(a.is_homogeneous());
        CHECK((a * b).is_homogeneous_of_degree(da + db));
    }
}

TEST_CASE("F_p arithmetic is Z arithmetic reduced mod p") {
    GFp f5(5);
    auto reduce = [&](const MultiPoly<ZZ>& p) {
        MultiPoly<GFp> r(f5, p.nvars());
        for (const auto& [m, c] : p.terms()) {
            mpz_class red = c % 5;
            if (red < 0) red += 5;
            r.add_term(m, red.get_ui());
        }
        return r;
    };
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        auto a = rand_homogeneous(ZZ{}, 3, 2, rng);
        auto b = rand_homogeneous(ZZ{}, 3, 2, rng);
        CHECK(reduce(a * b) == reduce(a) * reduce(b));
        CHECK(reduce(a + b) == reduce(a) + reduce(b));
    }
}

TEST_CASE("domain and arity mismatches are rejected") {
    auto a = MultiPoly<GFp>::variable(GFp(7), 2, 0);
    auto b = MultiPoly<GFp>::variable(GFp(11), 2, 0);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    auto c = MultiPoly<QQ>::variable(QQ{}, 2, 0);
    auto d = MultiPoly<QQ>::variable(QQ{}, 3, 0);
    CHECK_THROWS_AS(c * d, std::invalid_argument);
}

TEST_CASE("t-polynomials multiply by exact convolution") {
    QQ dom;
    auto p0 = MultiPoly<QQ>::variable(dom, 2, 0);
    auto t = TPoly<QQ>::t(dom, 2);
    auto c = [&](const MultiPoly<QQ>& m) { return TPoly<QQ>::constant(m); };

    auto prod = (t - c(p0)) * (t + c(p0));
    CHECK(prod.degree() == 2);
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(0) == -(p0 * p0));

    CHECK((t * t).degree() == 2);
    CHECK((t * t).coeff(0).is_zero());

    // (t - x)(t - 2x) = t^2 - 3xt + 2x^2 over F_7
    GFp f7(7);
    auto x7 = MultiPoly<GFp>::variable(f7, 1, 0);
    auto t7 = TPoly<GFp>::t(f7, 1);
    auto lhs = (t7 - TPoly<GFp>::constant(x7)) * (t7 - TPoly<GFp>::constant(x7.scaled(2)));
    CHECK(lhs.coeff(2) == x7.make_one());
    CHECK(lhs.coeff(1) == x7.scaled(f7.from_long(-3)));
    CHECK(lhs.coeff(0) == (x7 * x7).scaled(2));

    auto zero = TPoly<QQ>::zero(dom, 2);
    CHECK((zero * t).is_zero());
    CHECK((t - t).is_zero());
    CHECK(t.pow(3).degree() == 3);
}

TEST_CASE("tpoly formatting is stable") {
    QQ dom;
    auto p0 = MultiPoly<QQ>::variable(dom, 2, 0);
    auto p1 = MultiPoly<QQ>::variable(dom, 2, 1);
    auto t = TPoly<QQ>::t(dom, 2);
    auto p = t * t - TPoly<QQ>::constant(p0 * p0 + p1);
    CHECK(p.format({"x", "y"}) == "t^2 + (-1*x^2 - y)");
}
