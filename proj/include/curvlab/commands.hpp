#pragma once

/**
 * @file commands.hpp
 * @brief The batch commands behind the curvlab executable. Each takes a
 * resolved scene and options and returns a Report, plus SVG text when one was
 * requested.
 */

#include "curvlab/arrow.hpp"
#include "curvlab/axioms.hpp"
#include "curvlab/complex.hpp"
#include "curvlab/null_category.hpp"
#include "curvlab/report.hpp"
#include "curvlab/sampling.hpp"
#include "curvlab/scene.hpp"
#include "curvlab/svg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace curvlab {

struct CommandOptions {
    std::optional<int> degree;
    bool want_svg = false;
    int budget = 64;
    std::uint64_t seed = 1;
    std::string ref;       // map, hom, complex or sequence to act on
    std::string op;        // lattice: meet, join or leq
    std::string left, right;  // lattice operands (spaces or subgroups)
    std::string point;     // lattice: vector at which to evaluate the result
    std::string suite;     // check: axioms, galois, fstar, modularity, two-of-three
    std::vector<std::string> vectors;  // kazhdan test vectors
};

struct CommandOutput {
    Report report;
    std::string svg;  // empty unless requested and available
};

namespace cmd_detail {

template <class T>
std::string pick_ref(const std::map<std::string, T>& entries, const std::string& ref, const char* what) {
    if (!ref.empty()) return ref;
    if (entries.size() == 1) return entries.begin()->first;
    throw SceneError(std::string("scene has ") + std::to_string(entries.size()) + " " + what +
                     " entries; choose one with --ref");
}

inline std::string describe_sub(const Norm& cat, const NormalSubobject<Norm>& s) {
    const auto& m = s.mono;
    if (m.matrix == Matrix::identity(m.source.dimension()) && m.source.dimension() == m.target.dimension())
        return "seminorm " + m.source.str() + " on the ambient space";
    return cat.describe(m);
}

inline std::string describe_sub(const Grp&, const NormalSubobject<Grp>& s) {
    return set_label(s.mono.target, s.mono.image_set()) + " (order " + std::to_string(s.mono.source.order()) + ")";
}

inline std::string describe_quot(const Norm& cat, const NormalQuotient<Norm>& q) {
    const auto& e = q.epi;
    if (e.matrix == Matrix::identity(e.source.dimension()) && e.source.dimension() == e.target.dimension())
        return "seminorm " + e.target.str() + " on the ambient space";
    return cat.describe(e);
}

inline std::string describe_quot(const Grp&, const NormalQuotient<Grp>& q) {
    return "quotient by " + set_label(q.epi.source, q.epi.kernel_set()) + " (order " +
           std::to_string(q.epi.target.order()) + ")";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <NullCategory C>
void map_report(Report& r, const C& cat, const typename C::Morphism& f, const std::string& what) {
    r.value("map", cat.describe(f));
    if constexpr (std::is_same_v<C, Norm>) r.value("epsilon", to_string(cat.epsilon()));
    if (what == "kernel") {
        auto k = cat.kernel(f);
        if constexpr (std::is_same_v<C, Norm>)
            r.value("kernel seminorm", k.source.str());
        else
            r.value("kernel", set_label(k.target, k.image_set()) + " (order " + std::to_string(k.source.order()) + ")");
        auto fk = cat.compose(f, k);
        r.check("f iker(f) is null", cat.is_null(fk), cat.null_certificate(fk));
        r.check("iker(f) is a monomorphism", cat.is_mono(k));
    } else if (what == "cokernel") {
        auto c = cat.cokernel(f);
        if constexpr (std::is_same_v<C, Norm>)
            r.value("cokernel seminorm", c.target.str());
        else
            r.value("cokernel", "quotient by " + set_label(c.source, c.kernel_set()) + " (order " +
                                    std::to_string(c.target.order()) + ")");
        auto cf = cat.compose(c, f);
        r.check("icoker(f) f is null", cat.is_null(cf), cat.null_certificate(cf));
        r.check("icoker(f) is an epimorphism", cat.is_epi(c));
    } else if (what == "image") {
        auto im = image(cat, f);
        r.value("image", describe_sub(cat, im));
        r.check("image is a normal mono", is_normal_mono(cat, im.mono));
        r.value("image is the whole codomain", yes_no(sub_eq(cat, im, top(cat, cat.codomain(f)))));
    } else if (what == "coimage") {
        auto co = coimage(cat, f);
        r.value("coimage", describe_quot(cat, co));
        r.check("coimage is a normal epi", is_normal_epi(cat, co.epi));
    } else {
        bool mono = is_normal_mono(cat, f), epi = is_normal_epi(cat, f);
        r.value("normal mono", yes_no(mono));
        r.value("normal epi", yes_no(epi));
        if constexpr (std::is_same_v<C, Norm>) {
            bool closed = is_normal(f, cat.epsilon());
            r.value("normal (closed form)", yes_no(closed));
            r.check("closed form agrees with the generic tests", closed == mono && closed == epi);
        } else {
            r.check("direct and generic normal mono tests agree", cat.is_normal_mono_direct(f) == mono);
            r.check("direct and generic normal epi tests agree", cat.is_normal_epi_direct(f) == epi);
        }
        auto nf = normal_factorization(cat, f);
        if (!nf) {
            r.value("normal factorization", "none: the coimage-to-image comparison does not exist");
            return;
        }
        r.value("coimage", describe_quot(cat, NormalQuotient<C>{nf->coim}));
        r.value("middle", cat.describe(nf->middle));
        r.value("image", describe_sub(cat, NormalSubobject<C>{nf->im}));
        r.value("middle is an isomorphism", yes_no(cat.is_isomorphism(nf->middle)));
        r.check("f = iim middle icoim", cat.equal(cat.compose(nf->im, cat.compose(nf->middle, nf->coim)), f));
    }
}

}  // namespace cmd_detail

/// kernel, cokernel, image, coimage or factorize of a scene map or homomorphism.
inline CommandOutput cmd_map(const SceneContext& ctx, const std::string& what, const CommandOptions& o) {
    CommandOutput out;
    out.report.command = what;
    const auto& s = ctx.scene();
    std::string ref = o.ref;
    if (ref.empty()) {
        if (s.maps.size() + s.homs.size() != 1) throw SceneError("scene has several maps; choose one with --ref");
        ref = s.maps.empty() ? s.homs.begin()->first : s.maps.begin()->first;
    }
    out.report.value("ref", ref);
    if (ctx.has_map(ref))
        cmd_detail::map_report(out.report, ctx.norm(), ctx.map(ref), what);
    else if (ctx.has_hom(ref))
        cmd_detail::map_report(out.report, ctx.grp(), ctx.hom(ref), what);
    else
        throw SceneError("unknown map or hom '" + ref + "'");
    return out;
}

/// meet, join or leq of two normal subobjects of one ambient object.
inline CommandOutput cmd_lattice(const SceneContext& ctx, const CommandOptions& o) {
    CommandOutput out;
    Report& r = out.report;
    r.command = "lattice";
    if (o.op != "meet" && o.op != "join" && o.op != "leq") throw SceneError("--op must be meet, join or leq");
    if (o.left.empty() || o.right.empty()) throw SceneError("lattice needs --left and --right operands");
    r.value("op", o.op);
    if (ctx.has_space(o.left)) {
        const Norm& cat = ctx.norm();
        auto s = ctx.space(o.left), t = ctx.space(o.right);
        if (s.dimension() != t.dimension()) throw SceneError("lattice operands have different dimensions");
        r.value("epsilon", to_string(cat.epsilon()));
        r.value("left", s.str());
        r.value("right", t.str());
        if (!o.ref.empty()) {
            auto ambient = ctx.space(o.ref);
            if (ambient.dimension() != s.dimension()) throw SceneError("ambient space has a different dimension");
            r.check("left lies in the normal subobject band", in_nsb_band(ambient, s, cat.epsilon()));
            r.check("right lies in the normal subobject band", in_nsb_band(ambient, t, cat.epsilon()));
        }
        if (o.op == "leq") {
            // as subobjects, (V, s) <= (V, t) when the identity (V, s) -> (V, t) is bounded
            r.value("left <= right", cmd_detail::yes_no(seminorm_leq(t, s)));
            return out;
        }
        auto result = (o.op == "meet" ? meet_norm(s, t) : join_norm(s, t)).reduced();
        r.value("result", result.str());
        if (!o.point.empty()) {
            auto x = ctx.vector(o.point);
            if (x.size() != result.dimension()) throw SceneError("point has the wrong dimension");
            r.value("result at " + to_string(x), to_string(result(x)));
        }
        if (o.want_svg) {
            if (s.dimension() != 2) throw SceneError("SVG output needs 2-dimensional seminorms");
            out.svg = lattice_svg(s, t, result);
        }
        return out;
    }
    const Grp& cat = ctx.grp();
    auto [g1, n1] = ctx.subgroup(o.left);
    auto [g2, n2] = ctx.subgroup(o.right);
    if (!g1.same_as(g2)) throw SceneError("lattice operands live in different groups");
    NormalSubobject<Grp> s{cat.inclusion(g1, n1)}, t{cat.inclusion(g2, n2)};
    r.value("left", cmd_detail::describe_sub(cat, s));
    r.value("right", cmd_detail::describe_sub(cat, t));
    if (o.op == "leq")
        r.value("left <= right", cmd_detail::yes_no(sub_leq(cat, s, t)));
    else
        r.value("result", cmd_detail::describe_sub(cat, o.op == "meet" ? sub_meet(cat, s, t) : sub_join(cat, s, t)));
    return out;
}

/// The two sides of the modularity law for the scaled l1 / l-infinity triple at (7/2, 3/2).
inline CommandOutput cmd_counterexample_modularity(const CommandOptions& o) {
    CommandOutput out;
    Report& r = out.report;
    r.command = "counterexample-modularity";
    auto c = modularity_counterexample();
    r.value("s1", "1/4 |.|_1 = " + c.s1.str());
    r.value("t", "1/3 |.|_inf = " + c.t.str());
    r.value("s2", "1/5 |.|_1 = " + c.s2.str());
    r.value("point", to_string(c.point));
    r.value("(s1 v (t ^ s2))(point)", to_string(c.left));
    r.value("((s1 v t) ^ s2)(point)", to_string(c.right));
    r.check("values are 17/16 and 1", c.left == Rational(17, 16) && c.right == 1);
    // the same triple as normal subobjects of (Q^2, 1/6 |.|_inf) at epsilon 1/10
    Norm cat(Rational(1, 10));
    auto ref = scaled_linf(2, Rational(1, 6));
    auto sub = [&](const PolyhedralSeminorm& p) { return NormalSubobject<Norm>{{Matrix::identity(2), p, ref}}; };
    r.expected("modularity holds in Nsb", check_modularity(cat, sub(c.s1), sub(c.s2), sub(c.t)),
               "s1 <= s2, compared as normal subobjects");
    if (o.want_svg) out.svg = counterexample_svg(c);
    return out;
}

namespace cmd_detail {

template <NullCategory C, class S>
NormalSubobject<C> random_sub(const C& cat, S& s, const typename C::Object& a) {
    return kernel_sub(cat, s.morphism_out_of(a));
}

inline void axioms_block(Report& r, const std::string& label, const AxiomsReport& a) {
    for (const auto& x : a.axioms)
        r.check(label + ": " + x.name, x.ok(),
                std::to_string(x.passed) + " passed, " + std::to_string(x.failed) + " failed", x.first_failure);
}

template <NullCategory C, class S>
void counted(Report& r, const std::string& key, int budget, S&& one) {
    int good = 0;
    std::string first;
    for (int i = 0; i < budget; ++i) {
        std::string why;
        if (one(i, why))
            ++good;
        else if (first.empty())
            first = "instance " + std::to_string(i) + (why.empty() ? "" : ": " + why);
    }
    r.check(key, good == budget, std::to_string(good) + "/" + std::to_string(budget), first);
}

template <NullCategory C, class S>
void suite_on(Report& r, const std::string& suite, const std::string& label, const C& cat, S& s, int budget) {
    if (suite == "galois") {
        counted<C>(r, label + ": s <= f* t iff f_* s <= t", budget, [&](int, std::string&) {
            auto f = s.morphism();
            return check_galois(cat, f, random_sub(cat, s, cat.domain(f)), random_sub(cat, s, cat.codomain(f)));
        });
        counted<C>(r, label + ": f* f_* is a closure", budget, [&](int, std::string&) {
            auto f = s.morphism();
            return check_closure(cat, f, random_sub(cat, s, cat.domain(f)));
        });
    } else if (suite == "fstar") {
        counted<C>(r, label + ": kernel, cokernel, image and coimage of composites", budget, [&](int, std::string& why) {
            auto f = s.morphism();
            auto g = s.morphism_out_of(cat.codomain(f));
            auto rep = check_fstar_identities(cat, f, g);
            if (!rep.kernel_of_composite) why = "iker(gf) != f* iker(g)";
            else if (!rep.cokernel_of_composite) why = "icoker(gf) != g_* icoker(f)";
            else if (!rep.image_of_composite) why = "g_* iim f != iim gf";
            else if (!rep.coimage_of_composite) why = "f* icoim g != icoim gf";
            return rep.all();
        });
    } else if (suite == "two-of-three") {
        counted<C>(r, label + ": two-out-of-three for normal monos and epis", budget, [&](int i, std::string&) {
            // bias toward instances where the hypotheses hold
            typename C::Morphism f = s.morphism();
            typename C::Morphism g = s.morphism_out_of(cat.codomain(f));
            if (i % 3 == 1) {
                auto k = cat.kernel(s.morphism_out_of(cat.codomain(f)));
                g = k;
                f = cat.kernel(s.morphism_out_of(cat.domain(k)));
            } else if (i % 3 == 2) {
                auto c = cat.cokernel(s.morphism_into(cat.domain(f)));
                f = c;
                g = cat.cokernel(s.morphism_into(cat.codomain(c)));
            }
            return check_two_of_three(cat, f, g).holds();
        });
    }
}

}  // namespace cmd_detail

/// Sampled property suites over generated data in both backends.
inline CommandOutput cmd_check(const SceneContext& ctx, const CommandOptions& o) {
    CommandOutput out;
    Report& r = out.report;
    r.command = "check " + o.suite;
    if (o.budget <= 0) throw SceneError("--budget must be positive");
    r.value("budget", std::to_string(o.budget));
    r.value("seed", std::to_string(o.seed));
    const Norm& norm = ctx.norm();
    const Grp& grp = ctx.grp();
    r.value("epsilon", to_string(norm.epsilon()));
    if (o.suite == "axioms") {
        GrpSampler gs(grp, o.seed, false, 24);
        ArrowCategory<Grp> ag(grp);
        ArrowSampler<Grp, GrpSampler> ags(ag, gs);
        cmd_detail::axioms_block(r, "arrow(Grp)", verify_homological_axioms(ag, ags, o.budget));
        NormSampler ns(norm, o.seed, 3);
        ArrowCategory<Norm> an(norm);
        ArrowSampler<Norm, NormSampler> ans(an, ns);
        cmd_detail::axioms_block(r, "arrow(Norm)", verify_homological_axioms(an, ans, o.budget));
    } else if (o.suite == "galois" || o.suite == "fstar" || o.suite == "two-of-three") {
        GrpSampler gs(grp, o.seed, false, 24);
        cmd_detail::suite_on(r, o.suite, "Grp", grp, gs, o.budget);
        NormSampler ns(norm, o.seed, 3);
        cmd_detail::suite_on(r, o.suite, "Norm", norm, ns, o.budget);
    } else if (o.suite == "modularity") {
        GrpSampler gs(grp, o.seed, false, 24);
        cmd_detail::counted<Grp>(r, "Grp: normal subgroups form a modular lattice", o.budget, [&](int, std::string&) {
            auto g = gs.object();
            auto a = cmd_detail::random_sub(grp, gs, g), b = cmd_detail::random_sub(grp, gs, g);
            auto t = cmd_detail::random_sub(grp, gs, g);
            auto lo = sub_meet(grp, a, b), hi = sub_join(grp, a, b);
            return check_modularity(grp, lo, hi, t);
        });
        auto c = cmd_counterexample_modularity({}).report;
        for (const auto& item : c.items)
            if (item.verdict) r.items.push_back(item);
    } else {
        throw SceneError("unknown suite '" + o.suite + "'; expected axioms, galois, fstar, modularity or two-of-three");
    }
    return out;
}

namespace cmd_detail {

template <NullCategory C>
std::string describe_homology(const C& cat, const typename ArrowCategory<C>::HomologyObject& h) {
    if constexpr (std::is_same_v<C, Norm>) {
        return "cycles " + h.cycles.source.str() + " -> boundaries quotient " + h.boundaries.target.str() +
               (cat.is_null(h.object.arrow) ? " (null)" : " (not null: " + cat.null_certificate(h.object.arrow) + ")");
    } else {
        return "cycles " + set_label(h.cycles.target, h.cycles.image_set()) + ", boundaries " +
               set_label(h.boundaries.source, h.boundaries.kernel_set()) + ", homology order " +
               std::to_string(h.object.arrow.image_set().size());
    }
}

template <NullCategory C>
void homology_report(Report& r, const C& cat, const ChainComplex<C>& cx, int n) {
    bool valid = true;
    for (const auto& d : validate_complex(cat, cx)) {
        r.check("d d null at degree " + std::to_string(d.degree), d.ok, d.detail);
        valid = valid && d.ok;
    }
    if (!valid) return;
    auto h = complex_homology(cat, cx, n);
    r.value("degree", std::to_string(n));
    r.value("homology", describe_homology<C>(cat, h));
    r.value("structure arrow", cat.describe(h.object.arrow));
    r.value("homology is null", yes_no(cat.is_null(h.object.arrow)));
    r.value("identity arrow", yes_no(cat.is_isomorphism(h.object.arrow)));
}

template <NullCategory C>
void exactness_report(Report& r, const C& cat, const ChainComplex<C>& cx) {
    bool valid = true;
    for (const auto& d : validate_complex(cat, cx)) {
        r.check("d d null at degree " + std::to_string(d.degree), d.ok, d.detail);
        valid = valid && d.ok;
    }
    if (!valid) return;
    for (int n = cx.hi() + 1; n >= cx.lo - 1; --n) {
        bool generic = is_exact_at(cat, cx, n);
        r.value("exact at degree " + std::to_string(n), yes_no(generic));
        if constexpr (std::is_same_v<C, Norm>)
            r.check("seminorm criterion agrees at degree " + std::to_string(n), eps_exact_at(cat, cx, n) == generic);
        r.check("homology null iff exact at degree " + std::to_string(n),
                cat.is_null(complex_homology(cat, cx, n).object.arrow) == generic);
    }
}

template <NullCategory C>
void les_report(Report& r, const C& cat, const ShortExactSequence<C>& s) {
    auto problems = validate_ses(cat, s);
    r.check("short exact in every degree", problems.empty(), problems.empty() ? "" : problems.front());
    if (!problems.empty()) return;
    auto les = assemble_les(cat, s);
    for (std::size_t k = 0; k < les.nodes.size(); ++k) {
        const auto& h = les.nodes[k].homology;
        std::string v = describe_homology<C>(cat, h);
        if (les.exact[k]) v += *les.exact[k] ? "; exact here" : "; not exact here";
        r.value(les.node_name(k), v);
    }
    for (std::size_t k = 0; k < les.links.size(); ++k) {
        const auto& l = les.links[k];
        r.check(l.name + " constructed", l.map.has_value(), les.node_name(k) + " -> " + les.node_name(k + 1));
        if (k + 1 < les.links.size())
            r.check(l.name + " then " + les.links[k + 1].name + " is null", l.composite_null);
    }
    for (const auto& m : les.modularity)
        r.value("modularity instances at degree " + std::to_string(m.degree),
                std::string("Dedekind ") + yes_no(m.dedekind) + ", left modular " + yes_no(m.left_modular) +
                    ", right modular " + yes_no(m.right_modular));
    r.value("exact everywhere", yes_no(les.exact_everywhere()));
    r.check("no defects", les.defects.empty(), std::to_string(les.defects.size()) + " defects",
            les.defects.empty() ? "" : les.defects.front());
    for (std::size_t k = 1; k < les.defects.size(); ++k) r.check("defect", false, les.defects[k]);
}

}  // namespace cmd_detail

inline CommandOutput cmd_homology(const SceneContext& ctx, const CommandOptions& o) {
    CommandOutput out;
    out.report.command = "homology";
    auto ref = cmd_detail::pick_ref(ctx.scene().complexes, o.ref, "complex");
    if (!o.degree) throw SceneError("homology needs --degree");
    out.report.value("complex", ref);
    if (ctx.complex_is_norm(ref))
        cmd_detail::homology_report(out.report, ctx.norm(), ctx.norm_complex(ref), *o.degree);
    else
        cmd_detail::homology_report(out.report, ctx.grp(), ctx.group_complex(ref), *o.degree);
    return out;
}

inline CommandOutput cmd_exactness(const SceneContext& ctx, const CommandOptions& o) {
    CommandOutput out;
    out.report.command = "exactness";
    auto ref = cmd_detail::pick_ref(ctx.scene().complexes, o.ref, "complex");
    out.report.value("complex", ref);
    if (ctx.complex_is_norm(ref)) {
        out.report.value("epsilon", to_string(ctx.norm().epsilon()));
        cmd_detail::exactness_report(out.report, ctx.norm(), ctx.norm_complex(ref));
    } else {
        cmd_detail::exactness_report(out.report, ctx.grp(), ctx.group_complex(ref));
    }
    return out;
}

inline CommandOutput cmd_les(const SceneContext& ctx, const CommandOptions& o) {
    CommandOutput out;
    out.report.command = "les";
    auto ref = cmd_detail::pick_ref(ctx.scene().sequences, o.ref, "sequence");
    out.report.value("sequence", ref);
    if (ctx.sequence_is_norm(ref))
        cmd_detail::les_report(out.report, ctx.norm(), ctx.norm_sequence(ref));
    else
        cmd_detail::les_report(out.report, ctx.grp(), ctx.group_sequence(ref));
    return out;
}

/// Pointwise comparison of the exactness inequality with the two near-solvability variants.
inline CommandOutput cmd_kazhdan(const SceneContext& ctx, const CommandOptions& o) {
    CommandOutput out;
    Report& r = out.report;
    r.command = "kazhdan";
    auto ref = cmd_detail::pick_ref(ctx.scene().complexes, o.ref, "complex");
    if (!ctx.complex_is_norm(ref)) throw SceneError("kazhdan needs a complex of seminormed spaces");
    if (!o.degree) throw SceneError("kazhdan needs --degree");
    const Norm& cat = ctx.norm();
    auto cx = ctx.norm_complex(ref);
    const int n = *o.degree;
    if (!cx.in_window(n)) throw SceneError("degree " + std::to_string(n) + " is outside the complex");
    std::vector<std::string> names = o.vectors;
    if (names.empty())
        for (const auto& [k, v] : ctx.scene().vectors)
            if (v.size() == chain_object(cat, cx, n).dimension()) names.push_back(k);
    if (names.empty()) throw SceneError("no test vectors of the right dimension; declare some under 'vectors'");
    r.value("complex", ref);
    r.value("degree", std::to_string(n));
    r.value("epsilon", to_string(cat.epsilon()));
    bool exact = eps_exact_at(cat, cx, n);
    r.value("exact at degree", cmd_detail::yes_no(exact));
    for (const auto& name : names) {
        auto y = ctx.vector(name);
        KazhdanReport k;
        try {
            k = kazhdan_check(cat, cx, n, y);
        } catch (const ComplexError& e) {
            throw SceneError("vector '" + name + "': " + e.what());
        }
        std::string tag = name + " = " + to_string(y);
        r.value(tag + ": inf |y - dx| + eps|x|", to_string(k.lhs));
        r.value(tag + ": max(eps|y|, |dy|)", to_string(k.rhs));
        r.value(tag + ": inequality", cmd_detail::yes_no(k.lhs <= k.rhs));
        r.value(tag + ": strict variant feasible",
                cmd_detail::yes_no(k.strict_feasible) + (k.strict_witness ? ", x = " + to_string(*k.strict_witness) : ""));
        r.value(tag + ": permissive variant feasible",
                cmd_detail::yes_no(k.permissive_feasible) +
                    (k.permissive_witness ? ", x = " + to_string(*k.permissive_witness) : ""));
        if (exact) r.check(tag + ": inequality holds at an exact degree", k.lhs <= k.rhs);
    }
    return out;
}

/// Dispatch by command name; throws SceneError for unknown commands.
inline CommandOutput run_command(const std::string& command, const SceneContext& ctx, const CommandOptions& o) {
    if (command == "kernel" || command == "cokernel" || command == "image" || command == "coimage" || command == "factorize")
        return cmd_map(ctx, command, o);
    if (command == "lattice") return cmd_lattice(ctx, o);
    if (command == "counterexample-modularity") return cmd_counterexample_modularity(o);
    if (command == "check") return cmd_check(ctx, o);
    if (command == "homology") return cmd_homology(ctx, o);
    if (command == "exactness") return cmd_exactness(ctx, o);
    if (command == "les") return cmd_les(ctx, o);
    if (command == "kazhdan") return cmd_kazhdan(ctx, o);
    throw SceneError("unknown command '" + command + "'");
}

}  // namespace curvlab
