#pragma once

/**
 * @file arrow.hpp
 * @brief The arrow category of a category with null ideal.
 *
 * Objects are base morphisms a : A0 -> A1, morphisms are commuting squares
 * (f0, f1) : a -> b with b f0 = f1 a, and a square is null when its diagonal
 * b f0 is null in the base. Kernels, cokernels and the homology object are the
 * explicit constructions; every other lattice operation comes from the
 * generic calculus in null_category.hpp applied to ArrowCategory<B>.
 *
 * Monos and epis are decided componentwise. That is sufficient in general and
 * exact for the squares built here (normal monos have mono components).
 */

#include "curvlab/null_category.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvlab {

struct SquareError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <NullCategory B>
class ArrowCategory {
public:
    using BaseObject = typename B::Object;
    using BaseMorphism = typename B::Morphism;

    struct Object {
        BaseMorphism arrow;
    };

    struct Morphism {
        Object source;
        Object target;
        BaseMorphism top;     // A0 -> B0
        BaseMorphism bottom;  // A1 -> B1
    };

    explicit ArrowCategory(B base) : base_(std::move(base)) {}

    const B& base() const { return base_; }

    Object object(BaseMorphism a) const { return {std::move(a)}; }

    /// A square, validated to commute.
    Morphism square(const Object& source, const Object& target, BaseMorphism top, BaseMorphism bottom) const {
        Morphism m{source, target, std::move(top), std::move(bottom)};
        if (!commutes(m)) throw SquareError("square does not commute");
        return m;
    }

    bool commutes(const Morphism& m) const {
        return base_.equal(base_.compose(m.target.arrow, m.top), base_.compose(m.bottom, m.source.arrow));
    }

    BaseMorphism diagonal(const Morphism& m) const { return base_.compose(m.target.arrow, m.top); }

    Morphism identity(const Object& a) const {
        return {a, a, base_.identity(base_.domain(a.arrow)), base_.identity(base_.codomain(a.arrow))};
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        return {f.source, g.target, base_.compose(g.top, f.top), base_.compose(g.bottom, f.bottom)};
    }

    const Object& domain(const Morphism& m) const { return m.source; }
    const Object& codomain(const Morphism& m) const { return m.target; }

    bool is_null(const Morphism& m) const { return base_.is_null(diagonal(m)); }

    /// Top iker(b f0), bottom the identity of A1.
    Morphism kernel(const Morphism& m) const {
        auto k = base_.kernel(diagonal(m));
        const auto& a = m.source.arrow;
        return {Object{base_.compose(a, k)}, m.source, k, base_.identity(base_.codomain(a))};
    }

    /// Top the identity of B0, bottom icoker(f1 a).
    Morphism cokernel(const Morphism& m) const {
        auto c = base_.cokernel(base_.compose(m.bottom, m.source.arrow));
        const auto& b = m.target.arrow;
        return {m.target, Object{base_.compose(c, b)}, base_.identity(base_.domain(b)), c};
    }

    bool same_object(const Object& a, const Object& b) const { return base_.equal(a.arrow, b.arrow); }

    bool equal(const Morphism& m, const Morphism& n) const {
        return same_object(m.source, n.source) && same_object(m.target, n.target) && base_.equal(m.top, n.top) &&
               base_.equal(m.bottom, n.bottom);
    }

    bool is_isomorphism(const Morphism& m) const { return base_.is_isomorphism(m.top) && base_.is_isomorphism(m.bottom); }
    bool is_mono(const Morphism& m) const { return base_.is_mono(m.top) && base_.is_mono(m.bottom); }
    bool is_epi(const Morphism& m) const { return base_.is_epi(m.top) && base_.is_epi(m.bottom); }

    /// h with m∘h = p, built componentwise and checked to commute.
    std::optional<Morphism> factor_through_mono(const Morphism& m, const Morphism& p) const {
        auto h0 = base_.factor_through_mono(m.top, p.top);
        if (!h0) return std::nullopt;
        auto h1 = base_.factor_through_mono(m.bottom, p.bottom);
        if (!h1) return std::nullopt;
        Morphism h{p.source, m.source, std::move(*h0), std::move(*h1)};
        if (!commutes(h)) return std::nullopt;
        return h;
    }

    /// h with h∘e = p, built componentwise and checked to commute.
    std::optional<Morphism> factor_through_epi(const Morphism& e, const Morphism& p) const {
        auto h0 = base_.factor_through_epi(e.top, p.top);
        if (!h0) return std::nullopt;
        auto h1 = base_.factor_through_epi(e.bottom, p.bottom);
        if (!h1) return std::nullopt;
        Morphism h{e.target, p.target, std::move(*h0), std::move(*h1)};
        if (!commutes(h)) return std::nullopt;
        return h;
    }

    Object zero_object() const {
        auto z = base_.zero_object();
        return {base_.identity(z)};
    }

    Morphism zero_morphism(const Object& a, const Object& b) const {
        return {a, b, base_.zero_morphism(base_.domain(a.arrow), base_.domain(b.arrow)),
                base_.zero_morphism(base_.codomain(a.arrow), base_.codomain(b.arrow))};
    }

    std::string null_certificate(const Morphism& m) const { return "diagonal: " + base_.null_certificate(diagonal(m)); }

    struct NullFactorization {
        Morphism left;   // a -> d, (id, f1)
        Object middle;   // d = b f0, a null object
        Morphism right;  // d -> b, (f0, id)
    };

    NullFactorization null_factorization(const Morphism& m) const {
        if (!is_null(m)) throw SquareError("null factorization needs a null square: " + null_certificate(m));
        Object d{diagonal(m)};
        const auto& a = m.source.arrow;
        const auto& b = m.target.arrow;
        Morphism left{m.source, d, base_.identity(base_.domain(a)), m.bottom};
        Morphism right{d, m.target, m.top, base_.identity(base_.codomain(b))};
        return {std::move(left), std::move(d), std::move(right)};
    }

    /// Homology of f : a -> b, g : b -> c with g f null: iKer(g1 b) -> iCoker(b f0).
    struct HomologyObject {
        Object object;          // structure map icoker(b f0) b iker(g1 b)
        BaseMorphism cycles;    // iker(g1 b)
        BaseMorphism boundaries;  // icoker(b f0)
    };

    HomologyObject homology_object(const Morphism& f, const Morphism& g) const {
        if (!same_object(f.target, g.source)) throw SquareError("homology_object: squares are not composable");
        if (!is_null(compose(g, f)))
            throw SquareError("homology_object: composite square is not null: " + null_certificate(compose(g, f)));
        const auto& b = f.target.arrow;
        auto cycles = base_.kernel(base_.compose(g.bottom, b));
        auto boundaries = base_.cokernel(base_.compose(b, f.top));
        Object h{base_.compose(boundaries, base_.compose(b, cycles))};
        return {std::move(h), std::move(cycles), std::move(boundaries)};
    }

    /// Identity arrow of a base object (the inclusion of the base category).
    Object embed(const BaseObject& a) const { return {base_.identity(a)}; }

    /// Square (f, f) between identity arrows.
    Morphism embed(const BaseMorphism& f) const {
        return {embed(base_.domain(f)), embed(base_.codomain(f)), f, f};
    }

private:
    B base_;
};

/// Closed form of the top of the pushforward along m = (f0, f1) : a -> b of s: b* b_* f0_* s0.
template <NullCategory B>
NormalSubobject<B> arrow_pushforward_top(const B& base, const typename ArrowCategory<B>::Morphism& m,
                                         const typename ArrowCategory<B>::Morphism& s) {
    const auto& b = m.target.arrow;
    auto pushed = pushforward_sub(base, m.top, NormalSubobject<B>{s.top});
    return pullback_sub(base, b, pushforward_sub(base, b, pushed));
}

/// Closed form of the top of the pullback along m of t: f0* t0.
template <NullCategory B>
NormalSubobject<B> arrow_pullback_top(const B& base, const typename ArrowCategory<B>::Morphism& m,
                                      const typename ArrowCategory<B>::Morphism& t) {
    return pullback_sub(base, m.top, NormalSubobject<B>{t.top});
}

}  // namespace curvlab
