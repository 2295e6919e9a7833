#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bnkit/poly.hpp"

using namespace bnkit;

TEST_CASE("characteristic must be zero or prime") {
    CHECK_NOTHROW(FieldChar(0));
    CHECK_NOTHROW(FieldChar(2));
    CHECK_NOTHROW(FieldChar(3));
    CHECK_NOTHROW(FieldChar(97));
    CHECK_THROWS_AS(FieldChar(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldChar(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldChar(-3), std::invalid_argument);
    CHECK_THROWS_AS(FieldChar(91), std::invalid_argument);  // 7 * 13
}

TEST_CASE("prime field arithmetic") {
    FieldChar c(5);
    FieldElem a(c, 3), b(c, 4);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 2);
    CHECK((a - b).residue() == 4);
    CHECK(a.inverse().residue() == 2);
    CHECK((b / a).residue() == 3);  // 4 * 2 = 8 = 3
    CHECK((-a).residue() == 2);
    CHECK(FieldElem(c, 7) == FieldElem(c, -3));
    CHECK(FieldElem(c, 0).is_zero());
    CHECK(FieldElem(c, 6).is_one());
    CHECK_THROWS(FieldElem(c, 0).inverse());
}

TEST_CASE("rational arithmetic stays exact") {
    FieldChar c(0);
    FieldElem third(c, Rational(1, 3));
    FieldElem x = third + third + third;
    CHECK(x.is_one());
    CHECK((third * FieldElem(c, 3)).is_one());
    CHECK(FieldElem(c, Rational(2, 4)) == FieldElem(c, Rational(1, 2)));
    CHECK(third.inverse() == FieldElem(c, 3));
    CHECK(third.to_string() == "1/3");
}

TEST_CASE("mixing characteristics is rejected") {
    FieldElem a(FieldChar(2), 1), b(FieldChar(3), 1);
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
}

TEST_CASE("polynomial basics") {
    FieldChar c(3);
    Poly z(c);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);

    Poly h = Poly::monomial(c, 1, 1);
    Poly p = h * h + Poly(c, 2);  // H^2 + 2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0).residue() == 2);
    CHECK(p.coeff(1).is_zero());
    CHECK(p.is_monomial() == false);
    CHECK(h.is_monomial());
    CHECK(Poly(c, 2).is_unit());
    CHECK(!h.is_unit());

    // cancellation trims the leading coefficient
    Poly q = p - h * h;
    CHECK(q.degree() == 0);
    CHECK(q == Poly(c, 2));
    CHECK((p - p).is_zero());

    CHECK(p.eval(FieldElem(c, 1)).residue() == 0);  // 1 + 2 = 0 mod 3
    CHECK(p.to_string() == "H^2 + 2");
}

TEST_CASE("division examples") {
    {
        FieldChar c(2);
        Poly a = Poly::monomial(c, 1, 2) + Poly(c, 1);  // H^2 + 1
        auto [q, r] = poly_divmod(a, Poly::monomial(c, 1, 1));
        CHECK(q == Poly::monomial(c, 1, 1));
        CHECK(r == Poly(c, 1));
    }
    {
        FieldChar c(0);
        Poly h = Poly::monomial(c, 1, 1);
        auto [q, r] = poly_divmod(h, h);
        CHECK(q == Poly(c, 1));
        CHECK(r.is_zero());
    }
    {
        FieldChar c(3);
        Poly a = Poly::monomial(c, 2, 2) + Poly::monomial(c, 1, 1);  // 2H^2 + H
        Poly b = Poly::monomial(c, 1, 1) + Poly(c, 1);               // H + 1
        auto [q, r] = poly_divmod(a, b);
        CHECK(q == Poly::monomial(c, 2, 1) + Poly(c, 2));  // 2H + 2
        CHECK(r == Poly(c, 1));
        CHECK(q * b + r == a);
    }
    CHECK_THROWS(poly_divmod(Poly(FieldChar(2), 1), Poly(FieldChar(2))));
}

namespace {

Poly random_poly(FieldChar c, int max_deg, std::mt19937 &rng) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<std::int64_t> coeff(-6, 6);
    int d = deg(rng);
    std::vector<FieldElem> cs;
    for (int k = 0; k <= d; ++k) cs.emplace_back(c, coeff(rng));
    return Poly(c, std::move(cs));
}

}  // namespace

TEST_CASE("division re-multiplication property") {
    std::mt19937 rng(20240814);
    for (std::int64_t cv : {0, 2, 3, 5}) {
        FieldChar c(cv);
        for (int trial = 0; trial < 200; ++trial) {
            Poly a = random_poly(c, 6, rng);
            Poly b = random_poly(c, 4, rng);
            if (b.is_zero()) continue;
            auto [q, r] = poly_divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("exact divisibility") {
    FieldChar c(5);
    Poly h = Poly::monomial(c, 1, 1);
    Poly b = h + Poly(c, 2);
    CHECK(poly_divides(b, b * (h + Poly(c, 4))));
    CHECK(!poly_divides(b, h * h));
    CHECK(poly_divides(Poly(c, 3), h));     // units divide everything
    CHECK(poly_divides(b, Poly(c)));        // everything divides zero
    CHECK(!poly_divides(Poly(c), Poly(c, 1)));
}
