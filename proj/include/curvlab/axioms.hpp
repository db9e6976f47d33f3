#pragma once

/**
 * @file axioms.hpp
 * @brief Sampled verification of the homological category axioms.
 *
 * Four checks per sample: null morphisms factor through a null object,
 * kernels and cokernels satisfy their universal properties, normal monos and
 * normal epis are closed under composition, and the homology axiom.
 */

#include "curvlab/null_category.hpp"

#include <exception>
#include <string>
#include <vector>

namespace curvlab {

struct AxiomResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0 && passed > 0; }

    void record(bool good, const std::string& why) {
        if (good) {
            ++passed;
            return;
        }
        if (failed++ == 0) first_failure = why;
    }
};

struct AxiomsReport {
    std::vector<AxiomResult> axioms;

    bool all_pass() const {
        for (const auto& a : axioms)
            if (!a.ok()) return false;
        return !axioms.empty();
    }
};

namespace detail {

template <class F>
void guarded(AxiomResult& r, int sample, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.record(false, "sample " + std::to_string(sample) + ": " + e.what());
    }
}

}  // namespace detail

/// Null morphism n factors through a null object: via the category's own
/// null_factorization when it has one, else through its zero object.
template <NullCategory C>
bool check_null_factorization(const C& cat, const typename C::Morphism& n) {
    if constexpr (requires { cat.null_factorization(n); }) {
        auto nf = cat.null_factorization(n);
        return cat.is_null(cat.identity(nf.middle)) && cat.equal(cat.compose(nf.right, nf.left), n);
    } else {
        auto z = cat.zero_object();
        auto through = cat.compose(cat.zero_morphism(z, cat.codomain(n)), cat.zero_morphism(cat.domain(n), z));
        return cat.equal(through, n);
    }
}

template <NullCategory C, class Sampler>
AxiomsReport verify_homological_axioms(const C& cat, Sampler& sampler, int budget) {
    AxiomResult nullfact{"null-object factorization", 0, 0, {}};
    AxiomResult universal{"kernel/cokernel universal properties", 0, 0, {}};
    AxiomResult closure{"normal mono/epi composition closure", 0, 0, {}};
    AxiomResult homology{"homology axiom", 0, 0, {}};

    for (int i = 0; i < budget; ++i) {
        const std::string tag = "sample " + std::to_string(i) + ": ";
        auto f = sampler.morphism();

        detail::guarded(nullfact, i, [&] {
            auto n = cat.compose(f, cat.kernel(f));
            nullfact.record(cat.is_null(n) && check_null_factorization(cat, n), tag + "f iker(f) does not factor through a null object");
        });

        detail::guarded(universal, i, [&] {
            auto k = cat.kernel(f);
            auto c = cat.cokernel(f);
            bool ok = cat.is_null(cat.compose(f, k)) && cat.is_null(cat.compose(c, f)) && cat.is_mono(k) && cat.is_epi(c);
            // p = g iker(f g) has f p null, so it must factor through iker(f)
            auto g = sampler.morphism_into(cat.domain(f));
            auto p = cat.compose(g, cat.kernel(cat.compose(f, g)));
            ok = ok && cat.factor_through_mono(k, p).has_value();
            // q = icoker(h f) h has q f null, so it must factor through icoker(f)
            auto h = sampler.morphism_out_of(cat.codomain(f));
            auto q = cat.compose(cat.cokernel(cat.compose(h, f)), h);
            ok = ok && cat.factor_through_epi(c, q).has_value();
            universal.record(ok, tag + "a kernel or cokernel universal property fails");
        });

        detail::guarded(closure, i, [&] {
            auto n1 = cat.kernel(sampler.morphism_out_of(cat.domain(f)));
            auto n2 = cat.kernel(sampler.morphism_out_of(cat.domain(n1)));
            bool monos = is_normal_mono(cat, cat.compose(n1, n2));
            auto e1 = cat.cokernel(sampler.morphism_into(cat.codomain(f)));
            auto e2 = cat.cokernel(sampler.morphism_into(cat.codomain(e1)));
            bool epis = is_normal_epi(cat, cat.compose(e2, e1));
            closure.record(monos && epis, tag + (monos ? "composite of normal epis is not normal"
                                                        : "composite of normal monos is not normal"));
        });

        detail::guarded(homology, i, [&] {
            auto b = cat.codomain(f);
            auto inc = cat.kernel(sampler.morphism_out_of(b));
            // boundaries: the image of something landing inside inc
            auto inside = cat.compose(inc, sampler.morphism_into(cat.domain(inc)));
            auto q = cat.cokernel(inside);
            auto r = check_homology_axiom(cat, inc, q);
            homology.record(r.holds, tag + r.witness);
        });
    }
    return {{nullfact, universal, closure, homology}};
}

}  // namespace curvlab
