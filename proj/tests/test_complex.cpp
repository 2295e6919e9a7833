#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "bnkit/mor.hpp"
#include "bnkit/type_d.hpp"

using namespace bnkit;

namespace {

Poly hpow(FieldChar c, int m) { return Poly::monomial(c, 1, m); }

FreeBigradedComplex single_tower(FieldChar c) {
    FreeBigradedComplex cx(c);
    cx.add_generator({0, -1});
    return cx;
}

}  // namespace

TEST_CASE("zero differential gives one tower per generator") {
    FieldChar c(0);
    HomologySummary s = free_homology(single_tower(c));
    CHECK(s.towers == std::vector<Bigrading>{{0, -1}});
    CHECK(s.torsion.empty());
}

TEST_CASE("multiplication by H leaves a single order-1 torsion summand") {
    FieldChar c(3);
    FreeBigradedComplex cx(c);
    int a = cx.add_generator({0, 0});
    int b = cx.add_generator({1, 2});
    cx.add_entry(b, a, hpow(c, 1));
    HomologySummary s = free_homology(cx);
    CHECK(s.towers.empty());
    CHECK(s.torsion == std::vector<TorsionSummand>{{1, 2, 1}});
}

TEST_CASE("H^3 differential leaves order-3 torsion") {
    FieldChar c(0);
    FreeBigradedComplex cx(c);
    int a = cx.add_generator({0, 0});
    int b = cx.add_generator({1, 6});
    cx.add_entry(b, a, hpow(c, 3));
    HomologySummary s = free_homology(cx);
    CHECK(s.towers.empty());
    CHECK(s.torsion == std::vector<TorsionSummand>{{1, 6, 3}});
}

TEST_CASE("unit edges cancel completely") {
    FieldChar c(5);
    FreeBigradedComplex cx(c);
    int a = cx.add_generator({0, 0});
    int b = cx.add_generator({1, 0});
    cx.add_entry(b, a, Poly(c, 4));
    HomologySummary s = free_homology(cx);
    CHECK(s.towers.empty());
    CHECK(s.torsion.empty());
}

TEST_CASE("the torus grid complex has towers at h = -2 and 0") {
    FieldChar c(0);
    FreeBigradedComplex cx = mor_complex(
        TypeDStructure{c, {{"g0", Vertex::Dot, {0, 0}}}, {}}, build_qn(-2, c));
    HomologySummary s = free_homology(cx);
    REQUIRE(s.towers.size() == 2);
    CHECK(s.towers[0].h == -2);
    CHECK(s.towers[1].h == 0);
}

TEST_CASE("validation catches inhomogeneous entries") {
    FieldChar c(2);
    FreeBigradedComplex cx(c);
    int a = cx.add_generator({0, 0});
    int b = cx.add_generator({1, 0});
    cx.add_entry(b, a, hpow(c, 1));  // H needs a q-gap of 2, not 0
    ComplexValidation v = validate_complex(cx);
    CHECK(!v.ok());
    CHECK(v.homogeneity.size() == 1);
    CHECK(v.d_squared.empty());
    CHECK_THROWS_AS(free_homology(cx), std::invalid_argument);
}

TEST_CASE("validation catches wrong homological step") {
    FieldChar c(2);
    FreeBigradedComplex cx(c);
    int a = cx.add_generator({0, 0});
    int b = cx.add_generator({2, 0});
    cx.add_entry(b, a, Poly(c, 1));
    CHECK(validate_complex(cx).homogeneity.size() == 1);
}

TEST_CASE("validation catches d squared violations") {
    FieldChar c(0);
    FreeBigradedComplex cx(c);
    int x = cx.add_generator({0, 0});
    int y = cx.add_generator({1, 0});
    int z = cx.add_generator({2, 0});
    cx.add_entry(y, x, Poly(c, 1));
    cx.add_entry(z, y, Poly(c, 1));
    ComplexValidation v = validate_complex(cx);
    CHECK(v.homogeneity.empty());
    CHECK(v.d_squared.size() == 1);
    CHECK(!v.to_string().empty());
}

TEST_CASE("mor complexes of torus chains validate cleanly") {
    for (std::int64_t cv : {0, 2, 3}) {
        FieldChar c(cv);
        TypeDStructure dot{c, {{"g0", Vertex::Dot, {0, 0}}}, {}};
        for (int n : {-4, -2, 0, 1, 2, 5}) {
            CHECK(validate_complex(mor_complex(dot, build_qn(n, c))).ok());
        }
    }
}

TEST_CASE("homology is invariant under generator permutation") {
    FieldChar c(3);
    TypeDStructure dot{c, {{"g0", Vertex::Dot, {0, 0}}}, {}};
    FreeBigradedComplex cx = mor_complex(dot, build_qn(-4, c));

    std::vector<int> perm(static_cast<size_t>(cx.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(99);
    for (int round = 0; round < 5; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        FreeBigradedComplex shuffled(c);
        std::vector<int> slot(perm.size());
        for (size_t i = 0; i < perm.size(); ++i)
            slot[static_cast<size_t>(perm[i])] =
                shuffled.add_generator(cx.grading(perm[static_cast<int>(i)]));
        for (const auto &[key, p] : cx.entries())
            shuffled.add_entry(slot[static_cast<size_t>(key.first)],
                               slot[static_cast<size_t>(key.second)], p);
        CHECK(free_homology(shuffled) == free_homology(cx));
    }
}

TEST_CASE("homology is invariant under unit change of basis") {
    // mix pairs of equal-bigrading generators by transvections, a unit
    // determinant change of basis, and compare summaries
    FieldChar c(5);
    TypeDStructure dot{c, {{"g0", Vertex::Dot, {0, 0}}}, {}};
    FreeBigradedComplex half = mor_complex(dot, build_qn(4, c));

    // direct sum of two copies, so equal-bigrading generator pairs exist
    FreeBigradedComplex cx(c);
    int m = half.size();
    for (int copy = 0; copy < 2; ++copy)
        for (int i = 0; i < m; ++i) cx.add_generator(half.grading(i));
    for (const auto &[key, p] : half.entries()) {
        cx.add_entry(key.first, key.second, p);
        cx.add_entry(key.first + m, key.second + m, p);
    }
    HomologySummary base = free_homology(cx);

    int n = cx.size();
    PolyMatrix d(c, n, n);
    for (const auto &[key, p] : cx.entries()) d.at(key.first, key.second) = p;

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> scalar(1, 4);
    PolyMatrix p = PolyMatrix::identity(c, n), p_inv = PolyMatrix::identity(c, n);
    int applied = 0;
    for (int i = 0; i < n && applied < 4; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || cx.grading(i) != cx.grading(j)) continue;
            std::int64_t a = scalar(rng);
            PolyMatrix t = PolyMatrix::identity(c, n), t_inv = PolyMatrix::identity(c, n);
            t.at(i, j) = Poly(c, a);
            t_inv.at(i, j) = Poly(c, -a);
            p = p * t;
            p_inv = t_inv * p_inv;
            ++applied;
            break;
        }
    REQUIRE(applied > 0);

    PolyMatrix conj = p * d * p_inv;
    FreeBigradedComplex mixed(c);
    for (int i = 0; i < n; ++i) mixed.add_generator(cx.grading(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!conj.at(i, j).is_zero()) mixed.add_entry(i, j, conj.at(i, j));
    REQUIRE(validate_complex(mixed).ok());
    CHECK(free_homology(mixed) == base);
}

TEST_CASE("rank accounting per homological grading") {
    // #towers at grading h = #generators - rank d_h - rank d_(h-1)
    FieldChar c(0);
    TypeDStructure dot{c, {{"g0", Vertex::Dot, {0, 0}}}, {}};
    for (int n : {-6, -3, 0, 2, 7}) {
        FreeBigradedComplex cx = mor_complex(dot, build_qn(n, c));
        HomologySummary s = free_homology(cx);

        std::map<int, std::vector<int>> by_h;
        for (int i = 0; i < cx.size(); ++i) by_h[cx.grading(i).h].push_back(i);
        auto rank_from = [&](int h) {
            if (!by_h.count(h) || !by_h.count(h + 1)) return 0;
            const auto &src = by_h[h];
            const auto &dst = by_h[h + 1];
            PolyMatrix m(c, static_cast<int>(dst.size()), static_cast<int>(src.size()));
            for (size_t i = 0; i < dst.size(); ++i)
                for (size_t j = 0; j < src.size(); ++j)
                    m.at(static_cast<int>(i), static_cast<int>(j)) = cx.entry(dst[i], src[j]);
            return snf(m).rank;
        };
        for (const auto &[h, gens] : by_h) {
            int towers_here = 0;
            for (const auto &t : s.towers) towers_here += t.h == h;
            CHECK(towers_here == static_cast<int>(gens.size()) - rank_from(h) - rank_from(h - 1));
        }
    }
}

TEST_CASE("summary text serialization is sorted and stable") {
    HomologySummary s;
    s.towers = {{2, 5}, {0, 1}};
    s.torsion = {{2, 5, 1}, {0, 3, 2}};
    s.canonicalize();
    CHECK(s.to_text() ==
          "tower h=0 q=1\n"
          "torsion h=0 q=3 ord=2\n"
          "tower h=2 q=5\n"
          "torsion h=2 q=5 ord=1\n");
}

TEST_CASE("setting H to 1 collapses torsion and keeps towers") {
    FieldChar c(2);
    FreeBigradedComplex cx(c);
    int a = cx.add_generator({0, 0});
    int b = cx.add_generator({1, 2});
    cx.add_entry(b, a, hpow(c, 1));  // iso after H = 1
    cx.add_generator({3, 0});
    std::map<int, int> dims = homology_dims_at_h1(cx);
    CHECK(dims == std::map<int, int>{{3, 1}});
}
