#include "curvlab/null_category.hpp"
#include "curvlab/sampling.hpp"
#include "curvlab/seminorm.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace curvlab;
using oracle::Rng;

namespace {

Rational q(const char* s) { return parse_rational(s); }

PolyhedralSeminorm abs1(const Rational& c = 1) { return PolyhedralSeminorm(1, {{c}}); }

BoundedMap scalar_map(const Rational& s, const PolyhedralSeminorm& p, const PolyhedralSeminorm& t) {
    return BoundedMap::checked(Matrix::from_rows({{s}}, 1), p, t);
}

const std::vector<Rational> kEpsilons = {q("1/4"), q("1/10"), q("9/10")};

}  // namespace

TEST(Seminorm, Evaluation) {
    EXPECT_EQ(scaled_l1(2, q("1/4"))({q("7/2"), q("3/2")}), q("5/4"));
    EXPECT_EQ(scaled_l1(2, q("1/4"))({0, 0}), 0);
    EXPECT_EQ(scaled_linf(2, q("1/3"))({3, 3}), 1);
}

TEST(Seminorm, EvaluationMatchesGaugeOverBall) {
    NormSampler s(Norm(q("1/4")), 21);
    Rng rng(22);
    for (int i = 0; i < oracle::kCorpus; ++i) {
        auto p = s.object();
        Vec x = rng.vec(p.dimension());
        auto g = oracle::gauge_by_v(p.ball(), x);
        ASSERT_TRUE(g);
        EXPECT_EQ(*g, p(x));
    }
}

TEST(Seminorm, OperatorNorms) {
    auto id1 = Matrix::identity(1);
    EXPECT_EQ(*operator_norm(id1, abs1(), abs1()), 1);
    EXPECT_EQ(*operator_norm(Matrix::from_rows({{q("1/2")}}, 1), abs1(), abs1()), q("1/2"));
    EXPECT_EQ(*operator_norm(Matrix::identity(2), scaled_linf(2, 1), scaled_linf(2, q("1/3"))), q("1/3"));
    // null space of the source escaping the target's null space
    EXPECT_FALSE(operator_norm(Matrix::identity(2), PolyhedralSeminorm(2, {{1, 0}}), scaled_linf(2, 1)));
}

TEST(Seminorm, NullIdealBoundary) {
    Norm cat(q("1/4"));
    EXPECT_TRUE(cat.is_null(cat.zero_morphism(abs1(), abs1())));
    EXPECT_TRUE(cat.is_null(scalar_map(q("1/4"), abs1(), abs1())));
    EXPECT_FALSE(cat.is_null(scalar_map(q("1/3"), abs1(), abs1())));
    EXPECT_FALSE(cat.is_null(cat.identity(abs1())));
    NormSampler s(cat, 23);
    for (int i = 0; i < oracle::kCorpus; ++i) {
        auto f = s.morphism();
        auto n = operator_norm(f.matrix, f.source, f.target);
        ASSERT_TRUE(n);
        if (*n == 0) continue;
        BoundedMap at_eps{(cat.epsilon() / *n) * f.matrix, f.source, f.target};
        EXPECT_TRUE(cat.is_null(at_eps));
        Rational grow = std::min<Rational>(Rational(2), 1 / cat.epsilon());
        BoundedMap bigger{grow * at_eps.matrix, f.source, f.target};
        EXPECT_FALSE(cat.is_null(bigger));
    }
}

TEST(Seminorm, RejectsBadEpsilon) {
    EXPECT_THROW(Norm(0), std::domain_error);
    EXPECT_THROW(Norm(1), std::domain_error);
    EXPECT_NO_THROW(Norm(q("9/10")));
}

TEST(Seminorm, BoundedMapChecksNorm) {
    EXPECT_THROW(scalar_map(2, abs1(), abs1()), std::domain_error);
    EXPECT_NO_THROW(scalar_map(q("1/2"), abs1(), abs1()));
}

TEST(Seminorm, KernelClosedForms) {
    const Rational eps = q("1/4");
    auto f = scalar_map(q("1/2"), abs1(), abs1());
    auto k = eps_kernel_seminorm(f, eps);
    EXPECT_EQ(k({1}), 2);
    EXPECT_TRUE(seminorm_eq(k, abs1(2)));
    auto zero = BoundedMap{Matrix(1, 1), abs1(), abs1()};
    EXPECT_TRUE(seminorm_eq(eps_kernel_seminorm(zero, eps), abs1()));
}

TEST(Seminorm, KernelBallIsIntersection) {
    NormSampler s(Norm(q("1/4")), 24);
    for (int i = 0; i < 16; ++i) {
        auto f = s.morphism();
        const Rational eps = q("1/4");
        auto k = eps_kernel_seminorm(f, eps);
        // V1 ∩ ε f⁻¹(W1), with f⁻¹ as the H-form {x : |<b, F x>| <= 1}
        std::vector<Halfspace> hs;
        for (const auto& a : f.source.functionals()) {
            hs.push_back({a, 1});
            hs.push_back({-a, 1});
        }
        Matrix ft = f.matrix.transpose();
        for (const auto& b : f.target.functionals()) {
            hs.push_back({ft * b, eps});
            hs.push_back({-(ft * b), eps});
        }
        auto inter = Polytope::from_h(f.source.dimension(), hs);
        auto kb = Polytope{k.dimension(), std::nullopt, k.ball()};
        EXPECT_TRUE(same_set(inter, kb));
    }
}

TEST(Seminorm, CokernelClosedForms) {
    const Rational eps = q("1/4");
    auto f = scalar_map(q("1/2"), abs1(), abs1());
    auto c = eps_cokernel_seminorm(f, eps);
    EXPECT_EQ(c({1}), q("1/2"));
    EXPECT_EQ(cokernel_value_lp(f, eps, {1}), q("1/2"));
    auto zero = BoundedMap{Matrix(1, 1), abs1(), abs1()};
    EXPECT_TRUE(seminorm_eq(eps_cokernel_seminorm(zero, eps), abs1()));
}

TEST(Seminorm, CokernelHullMatchesEpigraphLp) {
    Rng rng(25);
    for (const auto& eps : kEpsilons) {
        NormSampler s(Norm(eps), 26);
        for (int i = 0; i < oracle::kCorpus / 2; ++i) {
            auto f = s.morphism();
            auto c = eps_cokernel_seminorm(f, eps);
            Vec y = rng.vec(f.target.dimension());
            EXPECT_EQ(c(y), cokernel_value_lp(f, eps, y)) << "instance " << i;
        }
    }
}

TEST(Seminorm, ImageAndCoimageClosedForms) {
    const Rational eps = q("1/4");
    auto half = scalar_map(q("1/2"), abs1(), abs1());
    EXPECT_TRUE(seminorm_eq(eps_coimage(half, eps), abs1(q("1/2"))));
    EXPECT_EQ(coimage_inf_value_lp(half, eps, {1}), q("1/2"));
    auto zero = BoundedMap{Matrix(1, 1), abs1(), abs1()};
    EXPECT_TRUE(seminorm_eq(eps_image(zero, eps), abs1(4)));
    Norm cat(eps);
    EXPECT_TRUE(seminorm_eq(eps_image(cat.identity(abs1()), eps), abs1()));
    // the image of ×(1/2) is 2|y|: the middle map of its normal factorization would need norm 2
    EXPECT_TRUE(seminorm_eq(eps_image(half, eps), abs1(2)));
}

TEST(Seminorm, ClosedFormsMatchGenericRoute) {
    for (const auto& eps : kEpsilons) {
        Norm cat(eps);
        NormSampler s(cat, 27);
        Rng rng(28);
        for (int i = 0; i < oracle::kCorpus / 2; ++i) {
            auto f = s.morphism();
            auto im_generic = image(cat, f).mono;
            auto coim_generic = coimage(cat, f).epi;
            EXPECT_TRUE(seminorm_eq(eps_image(f, eps), im_generic.source)) << "instance " << i;
            EXPECT_TRUE(seminorm_eq(eps_coimage(f, eps), coim_generic.target)) << "instance " << i;
            auto coim = eps_coimage(f, eps);
            for (int k = 0; k < 5; ++k) {
                Vec x = rng.vec(f.source.dimension());
                EXPECT_EQ(coim(x), coimage_inf_value_lp(f, eps, x));
            }
        }
    }
}

TEST(Seminorm, NormalCharacterization) {
    auto half = scalar_map(q("1/2"), abs1(), abs1());
    EXPECT_TRUE(is_normal(half, q("1/4")));
    EXPECT_FALSE(is_normal(half, q("3/4")));
    Norm cat(q("1/4"));
    EXPECT_TRUE(is_normal(cat.identity(abs1()), q("1/4")));
    EXPECT_TRUE(is_normal_mono(cat, half));
    EXPECT_TRUE(is_normal_epi(cat, half));
    Norm wide(q("3/4"));
    EXPECT_FALSE(is_normal_mono(wide, half));
    EXPECT_FALSE(is_normal_epi(wide, half));
}

TEST(Seminorm, NormalCharacterizationAgreesWithGenericTests) {
    for (const auto& eps : kEpsilons) {
        Norm cat(eps);
        NormSampler s(cat, 29);
        for (int i = 0; i < oracle::kCorpus / 2; ++i) {
            auto f = (i % 3 == 0) ? cat.kernel(s.morphism()) : (i % 3 == 1) ? cat.cokernel(s.morphism()) : s.morphism();
            bool n = is_normal(f, eps);
            EXPECT_EQ(n, is_normal_mono(cat, f)) << "instance " << i;
            EXPECT_EQ(n, is_normal_epi(cat, f)) << "instance " << i;
        }
    }
}

TEST(Seminorm, NormalFactorizationOfHalfDoesNotExist) {
    Norm cat(q("1/4"));
    auto half = scalar_map(q("1/2"), abs1(), abs1());
    EXPECT_FALSE(normal_factorization(cat, half).has_value());
    auto id = cat.identity(scaled_l1(2, 1));
    auto nf = normal_factorization(cat, id);
    ASSERT_TRUE(nf);
    EXPECT_TRUE(cat.is_isomorphism(nf->middle));
}

TEST(Seminorm, OrderAndLattice) {
    auto l1 = scaled_l1(2, 1), linf = scaled_linf(2, 1);
    EXPECT_TRUE(seminorm_leq(l1, l1));
    EXPECT_TRUE(seminorm_leq(scaled_l1(2, q("1/5")), scaled_l1(2, q("1/4"))));
    EXPECT_FALSE(seminorm_leq(scaled_l1(2, q("1/4")), scaled_l1(2, q("1/5"))));
    EXPECT_TRUE(seminorm_leq(linf, l1));
    EXPECT_FALSE(seminorm_leq(l1, linf));
    EXPECT_TRUE(seminorm_eq(meet_norm(l1, l1), l1));
    EXPECT_TRUE(seminorm_eq(join_norm(l1, scaled(4, l1)), l1));
    EXPECT_TRUE(seminorm_eq(meet_norm(l1, scaled(4, l1)), scaled(4, l1)));
}

TEST(Seminorm, LatticeMatchesPointwiseFormulas) {
    NormSampler s(Norm(q("1/4")), 30);
    Rng rng(31);
    for (int i = 0; i < oracle::kCorpus / 2; ++i) {
        std::size_t d = s.dimension();
        auto p = s.seminorm(d), r = s.seminorm(d);
        Vec x = rng.vec(d);
        EXPECT_EQ(meet_norm(p, r)(x), std::max(p(x), r(x)));
        // infimal convolution by LP: min p(x1) + r(x - x1)
        LinearProgram lp;
        lp.objective = zeros(d + 2);
        lp.objective[d] = 1;
        lp.objective[d + 1] = 1;
        for (const auto& a : p.functionals())
            for (int sg : {1, -1}) {
                Vec row = zeros(d + 2);
                for (std::size_t j = 0; j < d; ++j) row[j] = -sg * a[j];
                row[d] = 1;
                lp.add(row, Relation::GreaterEqual, 0);
            }
        for (const auto& a : r.functionals())
            for (int sg : {1, -1}) {
                Vec row = zeros(d + 2);
                for (std::size_t j = 0; j < d; ++j) row[j] = sg * a[j];
                row[d + 1] = 1;
                lp.add(row, Relation::GreaterEqual, sg * dot(a, x));
            }
        auto res = lp_solve(lp);
        ASSERT_TRUE(res.optimal());
        EXPECT_EQ(join_norm(p, r)(x), res.value);
    }
}

TEST(Seminorm, ModularityCounterexampleValues) {
    auto ce = modularity_counterexample();
    EXPECT_EQ(ce.left, q("17/16"));
    EXPECT_EQ(ce.right, 1);
    auto p = scaled_l1(2, q("1/4"));
    auto same = modularity_counterexample(p, p, p, {q("7/2"), q("3/2")});
    EXPECT_EQ(same.left, same.right);
}

TEST(Seminorm, CounterexampleNormsInBand) {
    auto ref = scaled_linf(2, q("1/6"));
    const Rational eps = q("1/10");
    EXPECT_TRUE(in_nsb_band(ref, ref, eps));
    EXPECT_TRUE(in_nsb_band(ref, scaled(10, ref), eps));
    EXPECT_TRUE(in_nsb_band(ref, scaled_l1(2, q("1/4")), eps));
    EXPECT_TRUE(in_nsb_band(ref, scaled_linf(2, q("1/3")), eps));
    EXPECT_TRUE(in_nsb_band(ref, scaled_l1(2, q("1/5")), eps));
}

TEST(Seminorm, GenericModularityCheckFailsOnCounterexample) {
    Norm cat(q("1/10"));
    auto ref = scaled_linf(2, q("1/6"));
    auto sub = [&](const PolyhedralSeminorm& s) { return NormalSubobject<Norm>{{Matrix::identity(2), s, ref}}; };
    auto s1 = sub(scaled_l1(2, q("1/4"))), s2 = sub(scaled_l1(2, q("1/5"))), t = sub(scaled_linf(2, q("1/3")));
    EXPECT_TRUE(sub_leq(cat, s1, s2));
    EXPECT_FALSE(check_modularity(cat, s1, s2, t));
    Vec x{q("7/2"), q("3/2")};
    EXPECT_EQ(sub_join(cat, s1, sub_meet(cat, t, s2)).mono.source(x), q("17/16"));
    EXPECT_EQ(sub_meet(cat, sub_join(cat, s1, t), s2).mono.source(x), 1);
    // the counterexample's join contains the 1/4 l1 diamond
    EXPECT_TRUE(sub_leq(cat, s1, sub_join(cat, s1, t)));
}

TEST(Seminorm, BandLaw) {
    const Rational eps = q("1/4");
    Norm cat(eps);
    NormSampler s(cat, 32);
    for (int i = 0; i < oracle::kCorpus / 2; ++i) {
        auto p = s.object();
        auto a = s.band_member(p), b = s.band_member(p);
        EXPECT_TRUE(in_nsb_band(p, a, eps));
        EXPECT_TRUE(in_nsb_band(p, meet_norm(a, b), eps));
        EXPECT_TRUE(in_nsb_band(p, join_norm(a, b), eps));
        auto g = s.morphism_out_of(p);
        EXPECT_TRUE(in_nsb_band(p, eps_kernel_seminorm(g, eps), eps));
    }
}

TEST(Seminorm, QuotientNormalize) {
    auto zero = PolyhedralSeminorm::zero(2);
    EXPECT_EQ(quotient_normalize(zero).space.dimension(), 0u);
    auto degenerate = PolyhedralSeminorm(2, {{1, 0}});
    auto qr = quotient_normalize(degenerate);
    EXPECT_EQ(qr.space.dimension(), 1u);
    Norm cat(q("1/4"));
    EXPECT_TRUE(cat.is_isomorphism(qr.to_quotient));
    EXPECT_TRUE(cat.is_isomorphism(qr.from_quotient));
    EXPECT_TRUE(cat.equal(cat.compose(qr.from_quotient, qr.to_quotient), cat.identity(degenerate)));
    EXPECT_TRUE(cat.equal(cat.compose(qr.to_quotient, qr.from_quotient), cat.identity(qr.space)));
    auto l1 = scaled_l1(2, 1);
    auto same = quotient_normalize(l1);
    EXPECT_EQ(same.space.dimension(), 2u);
    EXPECT_TRUE(cat.is_isomorphism(same.to_quotient));
}

TEST(Seminorm, FromBallRoundTrip) {
    NormSampler s(Norm(q("1/4")), 33);
    for (int i = 0; i < oracle::kCorpus; ++i) {
        auto p = s.object();
        EXPECT_TRUE(seminorm_eq(p, PolyhedralSeminorm::from_ball(p.dimension(), p.ball())));
    }
}
