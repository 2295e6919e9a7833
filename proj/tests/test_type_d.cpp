#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "bnkit/type_d.hpp"

using namespace bnkit;

namespace {

AlgebraElement lbl(FieldChar c, const BasisPath &p) { return AlgebraElement(c, p); }

TypeDGenerator gen_at(const TypeDStructure &t, int h) {
    for (const auto &g : t.generators)
        if (g.gr.h == h) return g;
    REQUIRE(false);
    return t.generators.front();
}

}  // namespace

TEST_CASE("twist chains validate cleanly") {
    for (std::int64_t cv : {0, 2, 3, 5}) {
        FieldChar c(cv);
        for (int n = -64; n <= 64; ++n) {
            auto issues = validate(build_qn(n, c));
            if (!issues.empty()) {
                CAPTURE(n);
                CAPTURE(issues.front());
                REQUIRE(issues.empty());
            }
        }
    }
}

TEST_CASE("validate flags broken structures") {
    FieldChar c(0);
    TypeDStructure single{c, {{"x", Vertex::Circle, {3, -1}}}, {}};
    CHECK(validate(single).empty());

    TypeDStructure q2 = build_qn(2, c);
    for (auto &g : q2.generators)
        if (g.gr == Bigrading{2, 5}) g.gr.q = 4;
    auto issues = validate(q2);
    REQUIRE(issues.size() == 1);
    CHECK(issues.front().find("grading convention") != std::string::npos);

    TypeDStructure dangling{c, {{"x", Vertex::Dot, {0, 0}}},
                            {{"x", "y", lbl(c, BasisPath::sword(Vertex::Dot, 1))}}};
    issues = validate(dangling);
    REQUIRE(issues.size() == 1);
    CHECK(issues.front().find("undeclared") != std::string::npos);

    TypeDStructure wrong_idem{c,
                              {{"x", Vertex::Dot, {0, 0}}, {"y", Vertex::Dot, {1, 2}}},
                              {{"x", "y", lbl(c, BasisPath::dpow(Vertex::Circle, 1))}}};
    issues = validate(wrong_idem);
    REQUIRE(issues.size() == 1);
    CHECK(issues.front().find("idempotent") != std::string::npos);

    // two composable S arrows: gradings fine, but delta^2 = SS != 0
    TypeDStructure dsq{c,
                       {{"a", Vertex::Dot, {0, 0}},
                        {"b", Vertex::Circle, {1, 1}},
                        {"d", Vertex::Dot, {2, 2}}},
                       {{"a", "b", lbl(c, BasisPath::sword(Vertex::Dot, 1))},
                        {"b", "d", lbl(c, BasisPath::sword(Vertex::Circle, 1))}}};
    issues = validate(dsq);
    REQUIRE(issues.size() == 1);
    CHECK(issues.front().find("delta^2") != std::string::npos);
}

TEST_CASE("small twist chains match their hand-built form") {
    FieldChar c(0);
    {
        TypeDStructure expect{c, {{"g0", Vertex::Dot, {0, 0}}}, {}};
        CHECK(build_qn(0, c) == expect);
    }
    {
        TypeDStructure expect{c,
                              {{"g0", Vertex::Dot, {0, 1}}, {"g1", Vertex::Circle, {1, 2}}},
                              {{"g0", "g1", lbl(c, BasisPath::sword(Vertex::Dot, 1))}}};
        expect.canonicalize();
        CHECK(build_qn(1, c) == expect);
    }
    {
        TypeDStructure expect{c,
                              {{"g0", Vertex::Dot, {0, 2}},
                               {"g1", Vertex::Circle, {1, 3}},
                               {"g2", Vertex::Circle, {2, 5}}},
                              {{"g0", "g1", lbl(c, BasisPath::sword(Vertex::Dot, 1))},
                               {"g1", "g2", lbl(c, BasisPath::dpow(Vertex::Circle, 1))}}};
        expect.canonicalize();
        CHECK(build_qn(2, c) == expect);
    }
    {
        TypeDStructure expect{c,
                              {{"g0", Vertex::Circle, {-2, -5}},
                               {"g1", Vertex::Circle, {-1, -3}},
                               {"g2", Vertex::Dot, {0, -2}}},
                              {{"g0", "g1", lbl(c, BasisPath::dpow(Vertex::Circle, 1))},
                               {"g1", "g2", lbl(c, BasisPath::sword(Vertex::Circle, 1))}}};
        expect.canonicalize();
        CHECK(build_qn(-2, c) == expect);
    }
}

TEST_CASE("chain endpoints and label pattern") {
    FieldChar c(3);
    for (int n = 1; n <= 64; ++n) {
        TypeDStructure t = build_qn(n, c);
        CHECK(t.generators.size() == static_cast<size_t>(n) + 1);
        TypeDGenerator head = gen_at(t, 0), tail = gen_at(t, n);
        CHECK(head.idem == Vertex::Dot);
        CHECK(head.gr == Bigrading{0, n});
        CHECK(tail.idem == Vertex::Circle);
        CHECK(tail.gr == Bigrading{n, 3 * n - 1});
    }
    for (int n = -1; n >= -64; --n) {
        TypeDStructure t = build_qn(n, c);
        TypeDGenerator head = gen_at(t, n), tail = gen_at(t, 0);
        CHECK(head.idem == Vertex::Circle);
        CHECK(head.gr == Bigrading{n, 3 * n + 1});
        CHECK(tail.idem == Vertex::Dot);
        CHECK(tail.gr == Bigrading{0, n});
    }
}

TEST_CASE("consecutive labels compose to zero") {
    FieldChar c(0);
    for (int n : {-7, -4, 4, 7, 12}) {
        TypeDStructure t = build_qn(n, c);
        for (const auto &a1 : t.arrows)
            for (const auto &a2 : t.arrows)
                if (a1.dst == a2.src) CHECK(mul(a2.label, a1.label).is_zero());
    }
}

TEST_CASE("shift is an additive action preserving validity") {
    FieldChar c(2);
    TypeDStructure t = build_qn(-5, c);
    CHECK(shift(t, 0, 0) == t);
    CHECK(shift(shift(t, 2, -1), -3, 4) == shift(t, -1, 3));
    CHECK(validate(shift(t, 7, -11)).empty());
    TypeDGenerator g = gen_at(shift(t, 1, 2), 1);
    CHECK(g.gr == Bigrading{1, -3});  // the (0, -5) dot translated
}

TEST_CASE("identify_rational recovers twist parameter and shift") {
    FieldChar c(0);
    CHECK(identify_rational(build_qn(0, c)) == RationalMatch{0, 0, 0});
    CHECK(identify_rational(shift(build_qn(4, c), 2, -3)) == RationalMatch{4, 2, -3});
    CHECK(identify_rational(shift(build_qn(-3, c), 0, 9)) == RationalMatch{-3, 0, 9});

    // right shape, wrong label: S^3 where the template wants S^1
    TypeDStructure odd{c,
                       {{"a", Vertex::Dot, {0, 1}}, {"b", Vertex::Circle, {1, 4}}},
                       {{"a", "b", lbl(c, BasisPath::sword(Vertex::Dot, 3))}}};
    odd.canonicalize();
    CHECK(validate(odd).empty());
    CHECK(!identify_rational(odd).has_value());

    // two chain components
    TypeDStructure pair{c, {{"a", Vertex::Dot, {0, 0}}, {"b", Vertex::Dot, {0, 2}}}, {}};
    CHECK(!identify_rational(pair).has_value());

    // no dot generator at all
    TypeDStructure circles{c, {{"a", Vertex::Circle, {0, 0}}}, {}};
    CHECK(!identify_rational(circles).has_value());

    std::mt19937 rng(414);
    std::uniform_int_distribution<int> pick_n(-20, 20), pick_d(-30, 30);
    for (std::int64_t cv : {0, 2, 3, 5}) {
        FieldChar f(cv);
        for (int trial = 0; trial < 25; ++trial) {
            int n = pick_n(rng), dh = pick_d(rng), dq = pick_d(rng);
            CHECK(identify_rational(shift(build_qn(n, f), dh, dq)) == RationalMatch{n, dh, dq});
        }
    }
}

TEST_CASE("theta of rational structures") {
    FieldChar c(0);
    CHECK(theta_of_rational(build_qn(0, c)) == 0);
    CHECK(theta_of_rational(build_qn(-2, c)) == -2);
    CHECK(theta_of_rational(shift(build_qn(6, c), 1, 1)) == 6);
    for (int n = -10; n <= 10; ++n)
        CHECK(theta_of_rational(shift(build_qn(n, c), -n, 2 * n)) == n);

    TypeDStructure bad{c, {{"a", Vertex::Circle, {0, 0}}}, {}};
    try {
        theta_of_rational(bad);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("not a rational structure") != std::string::npos);
    }
}

TEST_CASE("serialization is exact and stable") {
    CHECK(serialize_typed(build_qn(0, FieldChar(0))) ==
          "typed v1\nchar 0\ngen g0 idem=. h=0 q=0\n");
    CHECK(serialize_typed(build_qn(2, FieldChar(0))) ==
          "typed v1\n"
          "char 0\n"
          "gen g0 idem=. h=0 q=2\n"
          "gen g1 idem=o h=1 q=3\n"
          "gen g2 idem=o h=2 q=5\n"
          "arrow g0 -> g1 label=1*S^1.\n"
          "arrow g1 -> g2 label=1*D^1o\n");
}

TEST_CASE("typed files round-trip byte for byte") {
    for (std::int64_t cv : {0, 2, 3, 5}) {
        FieldChar c(cv);
        for (int n = -50; n <= 50; ++n) {
            TypeDStructure t = build_qn(n, c);
            std::string text = serialize_typed(t);
            TypeDStructure back = parse_typed(text);
            CHECK(back == t);
            CHECK(serialize_typed(back) == text);
        }
    }

    // multi-term label survives the trip too
    FieldChar c(7);
    AlgebraElement label(c, BasisPath::dpow(Vertex::Dot, 1));
    label.add_term(BasisPath::sword(Vertex::Dot, 2), FieldElem(c, 3));
    TypeDStructure t{c,
                     {{"x", Vertex::Dot, {0, 0}}, {"y", Vertex::Dot, {1, 2}}},
                     {{"x", "y", label}}};
    t.canonicalize();
    REQUIRE(validate(t).empty());
    CHECK(parse_typed(serialize_typed(t)) == t);
}

TEST_CASE("parser tolerates comments, blank lines and CRLF") {
    std::string text =
        "# produced by hand\r\n"
        "typed v1\r\n"
        "\r\n"
        "char 5   # coefficients mod 5\r\n"
        "  gen g0 idem=. h=0 q=1\r\n"
        "gen g1 idem=o h=1 q=2\r\n"
        "\r\n"
        "arrow g0 -> g1 label=1*S^1.  # the only arrow\r\n";
    CHECK(parse_typed(text) == build_qn(1, FieldChar(5)));
}

TEST_CASE("parse errors carry line and column") {
    auto expect_fail = [](const std::string &text, int line, const std::string &needle) {
        try {
            parse_typed(text);
            FAIL("no error for: " << text);
        } catch (const ParseError &e) {
            CHECK(e.line == line);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_fail("typed v2\nchar 0\n", 1, "'typed v1' header");
    expect_fail("", 1, "'typed v1' header");
    expect_fail("typed v1\nchar 4\n", 2, "prime or zero characteristic");
    expect_fail("typed v1\nchar 0\ngen a idem=. h=0 q=0\narrow a -> b label=1*S^1.\n", 4,
                "declared generator id");
    expect_fail("typed v1\nchar 0\ngen a idem=. h=0 q=0\ngen a idem=o h=1 q=1\n", 4,
                "unique generator id");
    expect_fail(
        "typed v1\nchar 0\ngen a idem=. h=0 q=0\ngen b idem=o h=1 q=1\n"
        "arrow a -> b label=1*S^1.\narrow a -> b label=1*S^1.\n",
        6, "unique (src, dst) arrow");
    expect_fail(
        "typed v1\nchar 0\ngen a idem=. h=0 q=0\narrow a -> a label=1*D^1.\n"
        "gen b idem=o h=1 q=1\n",
        5, "no 'gen' lines after 'arrow'");
    expect_fail("typed v1\nchar 0\ngen a idem=x h=0 q=0\n", 3, "'.' or 'o'");
    expect_fail("typed v1\nchar 0\nblob a\n", 3, "'gen' or 'arrow'");

    // errors inside a label point into the label text
    try {
        parse_typed("typed v1\nchar 0\ngen a idem=. h=0 q=0\ngen b idem=o h=1 q=1\n"
                    "arrow a -> b label=1*S^0.\n");
        FAIL("no error for bad label");
    } catch (const ParseError &e) {
        CHECK(e.line == 5);
        CHECK(e.col == 25);
        CHECK(std::string(e.what()).find("positive exponent") != std::string::npos);
    }
}
