#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace curvlab;
using oracle::Rng;

namespace {

Rational q(const char* s) { return parse_rational(s); }

std::vector<Halfspace> symmetric(const std::vector<Vec>& functionals) {
    std::vector<Halfspace> hs;
    for (const auto& a : functionals) {
        hs.push_back({a, Rational(1)});
        hs.push_back({-a, Rational(1)});
    }
    return hs;
}

bool has_vertex(const Polytope& p, const Vec& v) {
    const auto& vs = p.v_form->vertices;
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(to_string(q("6/4")), "3/2");
    EXPECT_EQ(to_string(q("-3")), "-3");
    EXPECT_EQ(to_string(q("+4/2")), "2");
    EXPECT_EQ(q("0/5"), 0);
    EXPECT_THROW(q("1/0"), ParseError);
    EXPECT_THROW(q("1.5"), ParseError);
    EXPECT_THROW(q(""), ParseError);
    EXPECT_THROW(q("2/-3"), ParseError);
}

TEST(Rational, AlwaysReduced) {
    Rng rng(11);
    for (int i = 0; i < oracle::kCorpus; ++i) {
        Rational a = rng.rational(), b = rng.rational();
        Rational c = a * b + a - b;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
        EXPECT_EQ(g, 1);
        EXPECT_GT(c.get_den(), 0);
        EXPECT_EQ(parse_rational(to_string(c)), c);
    }
}

TEST(Matrix, SolveAndNullSpace) {
    Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
    EXPECT_EQ(rank(a), 1u);
    auto ns = null_space(a);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns) EXPECT_TRUE(is_zero(a * v));
    auto x = solve(a, Vec{2, 4});
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, (Vec{2, 4}));
    EXPECT_FALSE(solve(a, Vec{1, 1}));
    Matrix b = Matrix::from_rows({{1, 1, 0}, {0, 1, 1}}, 3);
    EXPECT_EQ(b * right_inverse(b), Matrix::identity(2));
}

TEST(Lp, SingleActiveConstraint) {
    LinearProgram p;
    p.objective = {1};
    p.add({1}, Relation::GreaterEqual, 3);
    auto r = lp_solve(p);
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(r.value, 3);
    EXPECT_EQ(r.point, (Vec{3}));
}

TEST(Lp, ContradictoryConstraints) {
    LinearProgram p;
    p.objective = {0};
    p.add({1}, Relation::LessEqual, -1);
    p.add({1}, Relation::GreaterEqual, 1);
    EXPECT_EQ(lp_solve(p).status, LpStatus::Infeasible);
}

TEST(Lp, SeparableBounds) {
    LinearProgram p;
    p.objective = {1, 1};
    p.add({1, 0}, Relation::GreaterEqual, q("1/3"));
    p.add({0, 1}, Relation::GreaterEqual, q("1/7"));
    auto r = lp_solve(p);
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(r.value, q("10/21"));
    EXPECT_EQ(r.point, (Vec{q("1/3"), q("1/7")}));
}

TEST(Lp, Unbounded) {
    LinearProgram p;
    p.objective = {1, 0};
    p.sense = Sense::Maximize;
    p.add({1, -1}, Relation::LessEqual, 0);
    EXPECT_EQ(lp_solve(p).status, LpStatus::Unbounded);
}

TEST(Lp, DimensionMismatch) {
    LinearProgram p;
    p.objective = {1, 1};
    p.add({1}, Relation::LessEqual, 0);
    EXPECT_THROW(lp_solve(p), DimensionError);
}

TEST(Lp, WitnessSatisfiesAndAttains) {
    Rng rng(12);
    int solved = 0;
    for (int i = 0; i < oracle::kCorpus; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        LinearProgram p;
        p.objective = rng.vec(n);
        p.sense = rng.coin() ? Sense::Minimize : Sense::Maximize;
        int m = rng.integer(1, 6);
        for (int k = 0; k < m; ++k) {
            auto rel = static_cast<Relation>(rng.integer(0, 2));
            p.add(rng.vec(n), rel, rng.rational());
        }
        // a box keeps most instances bounded
        for (std::size_t j = 0; j < n; ++j) {
            p.add(unit_vector(n, j), Relation::LessEqual, 10);
            p.add(unit_vector(n, j), Relation::GreaterEqual, -10);
        }
        auto r = lp_solve(p);
        EXPECT_NE(r.status, LpStatus::Unbounded);
        if (!r.optimal()) continue;
        ++solved;
        EXPECT_TRUE(satisfies(p, r.point));
        EXPECT_EQ(dot(p.objective, r.point), r.value);
        // no sampled feasible point beats the optimum
        for (int s = 0; s < 20; ++s) {
            Vec y = rng.vec(n, 10, 3);
            if (!satisfies(p, y)) continue;
            Rational v = dot(p.objective, y);
            if (p.sense == Sense::Minimize) {
                EXPECT_GE(v, r.value);
            } else {
                EXPECT_LE(v, r.value);
            }
        }
    }
    EXPECT_GT(solved, 0);
}

TEST(Polytope, SquareVertices) {
    auto p = h_to_v(Polytope::from_h(2, symmetric({{1, 0}, {0, 1}})));
    ASSERT_EQ(p.v_form->vertices.size(), 4u);
    for (int sx : {-1, 1})
        for (int sy : {-1, 1}) EXPECT_TRUE(has_vertex(p, {sx, sy}));
    EXPECT_TRUE(p.v_form->lineality.empty());
}

TEST(Polytope, SlabHasLineality) {
    auto p = h_to_v(Polytope::from_h(2, {{{1, 1}, 1}, {{-1, -1}, 1}}));
    ASSERT_EQ(p.v_form->lineality.size(), 1u);
    EXPECT_TRUE(in_span(p.v_form->lineality, {1, -1}));
    ASSERT_EQ(p.v_form->vertices.size(), 2u);
    EXPECT_TRUE(has_vertex(p, {q("1/2"), q("1/2")}));
    EXPECT_TRUE(has_vertex(p, {q("-1/2"), q("-1/2")}));
    Rng rng(13);
    for (int i = 0; i < oracle::kCorpus; ++i) {
        Vec x = rng.vec(2);
        bool in_h = abs(x[0] + x[1]) <= 1;
        auto g = oracle::gauge_by_v(*p.v_form, x);
        ASSERT_TRUE(g);
        EXPECT_EQ(in_h, *g <= 1);
    }
}

TEST(Polytope, ScaledLinfBall) {
    auto p = h_to_v(Polytope::from_h(2, symmetric({{q("1/3"), 0}, {0, q("1/3")}})));
    ASSERT_EQ(p.v_form->vertices.size(), 4u);
    for (int sx : {-3, 3})
        for (int sy : {-3, 3}) EXPECT_TRUE(has_vertex(p, {sx, sy}));
}

TEST(Polytope, HToVIdempotent) {
    auto p = h_to_v(Polytope::from_h(2, symmetric({{1, 2}, {3, -1}})));
    auto again = h_to_v(p);
    EXPECT_EQ(again.v_form->vertices, p.v_form->vertices);
}

TEST(Polytope, CrossPolytopeFacets) {
    auto p = v_to_h(Polytope::from_v(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    ASSERT_EQ(p.h_form->size(), 4u);
    for (const auto& h : *p.h_form) {
        ASSERT_GT(h.bound, 0);
        Vec a = (1 / h.bound) * h.normal;
        EXPECT_EQ(abs(a[0]), 1);
        EXPECT_EQ(abs(a[1]), 1);
    }
}

TEST(Polytope, VertexPairWithLineality) {
    auto p = v_to_h(Polytope::from_v(2, {{2, 0}, {-2, 0}}, {{0, 1}}));
    auto expected = Polytope::from_h(2, symmetric({{q("1/2"), 0}}));
    EXPECT_TRUE(same_set(p, expected));
    Rng rng(14);
    for (int i = 0; i < oracle::kCorpus; ++i) {
        Vec x = rng.vec(2);
        EXPECT_EQ(contains_point(p, x), abs(x[0]) <= 2);
    }
}

TEST(Polytope, EmptyVFormIsInfeasible) {
    auto p = v_to_h(Polytope::from_v(2, {}));
    EXPECT_TRUE(is_empty(Polytope::from_h(2, *p.h_form)));
    EXPECT_FALSE(contains_point(p, {0, 0}));
}

TEST(Polytope, RecessionRaysRejected) {
    auto half_plane = Polytope::from_h(2, {{{1, 0}, 1}});
    EXPECT_THROW(h_to_v(half_plane), GeometryError);
}

TEST(Polytope, DimensionLimit) {
    std::vector<Vec> fs;
    for (std::size_t i = 0; i < 7; ++i) fs.push_back(unit_vector(7, i));
    EXPECT_THROW(h_to_v(Polytope::from_h(7, symmetric(fs))), CapabilityError);
    EXPECT_NO_THROW(h_to_v(Polytope::from_h(7, symmetric(fs)), 7));
}

TEST(Polytope, IntersectSquareAndDiamond) {
    auto square = Polytope::from_h(2, symmetric({{1, 0}, {0, 1}}));
    auto diamond = Polytope::from_h(2, symmetric({{1, 1}, {1, -1}}));
    EXPECT_TRUE(same_set(intersect(square, diamond), diamond));
}

TEST(Polytope, HullOfSegments) {
    auto a = Polytope::from_v(2, {{1, 0}, {-1, 0}});
    auto b = Polytope::from_v(2, {{0, 1}, {0, -1}});
    auto cross = Polytope::from_h(2, symmetric({{1, 1}, {1, -1}}));
    EXPECT_TRUE(same_set(hull_union(a, b), cross));
}

TEST(Polytope, ImageOfSquare) {
    auto square = Polytope::from_h(2, symmetric({{1, 0}, {0, 1}}));
    auto img = image_polytope(Matrix::from_rows({{1, 1}}, 2), square);
    EXPECT_EQ(img.v_form->vertices, (std::vector<Vec>{{-2}, {2}}));
}

TEST(Polytope, HullOfCounterexampleBalls) {
    auto diamond4 = Polytope::from_v(2, {{4, 0}, {-4, 0}, {0, 4}, {0, -4}});
    auto square3 = Polytope::from_h(2, symmetric({{q("1/3"), 0}, {0, q("1/3")}}));
    auto diamond5 = Polytope::from_h(2, symmetric({{q("1/5"), q("1/5")}, {q("1/5"), q("-1/5")}}));
    auto meet = h_to_v(intersect(square3, diamond5));
    EXPECT_TRUE(has_vertex(meet, {3, 2}));
    auto hull = v_to_h(hull_union(diamond4, meet));
    // edge through (3,2) and (4,0): x/4 + y/8 <= 1
    bool found = false;
    for (const auto& h : *hull.h_form)
        if (h.bound > 0 && (1 / h.bound) * h.normal == Vec{q("1/4"), q("1/8")}) found = true;
    EXPECT_TRUE(found);
    EXPECT_TRUE(contains_point(hull, {3, 2}));
    EXPECT_FALSE(contains_point(hull, {q("7/2"), q("3/2")}));
}

TEST(Polytope, RoundTripMutualContainment) {
    Rng rng(15);
    for (int i = 0; i < oracle::kCorpus; ++i) {
        std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
        std::vector<Vec> fs;
        int k = rng.integer(1, 4);
        for (int j = 0; j < k; ++j) fs.push_back(rng.int_vec(d, -3, 3));
        auto p = Polytope::from_h(d, symmetric(fs));
        auto pv = h_to_v(p);
        auto back = v_to_h(Polytope{d, std::nullopt, pv.v_form});
        EXPECT_TRUE(same_set(p, back)) << "instance " << i;
        for (const auto& l : pv.v_form->lineality)
            for (const auto& a : fs) EXPECT_EQ(dot(a, l), 0);

        std::vector<Vec> pts;
        int n = rng.integer(1, 5);
        for (int j = 0; j < n; ++j) pts.push_back(rng.vec(d));
        auto v = Polytope::from_v(d, pts);
        auto vh = v_to_h(v);
        EXPECT_TRUE(same_set(v, h_to_v(Polytope::from_h(d, *vh.h_form))));
    }
}

TEST(Polytope, GaugeDuality) {
    Rng rng(16);
    for (int i = 0; i < oracle::kCorpus; ++i) {
        std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
        std::vector<Vec> fs;
        int k = rng.integer(1, 4);
        for (int j = 0; j < k; ++j) fs.push_back(rng.int_vec(d, -3, 3));
        auto p = h_to_v(Polytope::from_h(d, symmetric(fs)));
        Vec x = rng.vec(d);
        auto gh = oracle::gauge_by_h(*p.h_form, x);
        auto gv = oracle::gauge_by_v(*p.v_form, x);
        ASSERT_TRUE(gh.has_value());
        ASSERT_TRUE(gv.has_value());
        EXPECT_EQ(*gh, *gv);
        Rational direct = 0;
        for (const auto& a : fs) direct = std::max(direct, abs(dot(a, x)));
        EXPECT_EQ(*gh, direct);
    }
}
