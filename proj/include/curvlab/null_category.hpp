#pragma once

/**
 * @file null_category.hpp
 * @brief Categories with an ideal of null morphisms, and the calculus of
 *        normal subobjects built only from kernels and cokernels.
 *
 * A backend B is a value (it may carry parameters such as ε) exposing
 * B::Object, B::Morphism and the operations listed in NullCategory. Every
 * construction here goes through that contract, so the same code runs on
 * finite groups, on seminormed spaces, and on arrow categories of either.
 *
 * Subobjects are compared by mutual factorization, never by representation.
 */

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvlab {

template <class B>
concept NullCategory = requires(const B& b, const typename B::Object& a, const typename B::Morphism& f) {
    { b.identity(a) } -> std::convertible_to<typename B::Morphism>;
    { b.compose(f, f) } -> std::convertible_to<typename B::Morphism>;
    { b.domain(f) } -> std::convertible_to<typename B::Object>;
    { b.codomain(f) } -> std::convertible_to<typename B::Object>;
    { b.is_null(f) } -> std::convertible_to<bool>;
    { b.kernel(f) } -> std::convertible_to<typename B::Morphism>;
    { b.cokernel(f) } -> std::convertible_to<typename B::Morphism>;
    { b.equal(f, f) } -> std::convertible_to<bool>;
    { b.same_object(a, a) } -> std::convertible_to<bool>;
    { b.is_isomorphism(f) } -> std::convertible_to<bool>;
    { b.is_mono(f) } -> std::convertible_to<bool>;
    { b.is_epi(f) } -> std::convertible_to<bool>;
    { b.factor_through_mono(f, f) } -> std::same_as<std::optional<typename B::Morphism>>;
    { b.factor_through_epi(f, f) } -> std::same_as<std::optional<typename B::Morphism>>;
    { b.zero_object() } -> std::convertible_to<typename B::Object>;
    { b.zero_morphism(a, a) } -> std::convertible_to<typename B::Morphism>;
    { b.null_certificate(f) } -> std::convertible_to<std::string>;
};

struct AmbientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when boundaries are not contained in cycles.
struct HomologyPreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A normal monomorphism into its codomain (the ambient object).
template <NullCategory B>
struct NormalSubobject {
    typename B::Morphism mono;
};

/// A normal epimorphism out of its domain (the ambient object).
template <NullCategory B>
struct NormalQuotient {
    typename B::Morphism epi;
};

template <NullCategory B>
NormalSubobject<B> image(const B& b, const typename B::Morphism& f) {
    return {b.kernel(b.cokernel(f))};
}

template <NullCategory B>
NormalQuotient<B> coimage(const B& b, const typename B::Morphism& f) {
    return {b.cokernel(b.kernel(f))};
}

template <NullCategory B>
struct NormalFactorization {
    typename B::Morphism coim;
    typename B::Morphism middle;
    typename B::Morphism im;
};

/// coim, middle, im with im∘middle∘coim = f. Empty when the middle map does not exist in B.
template <NullCategory B>
std::optional<NormalFactorization<B>> normal_factorization(const B& b, const typename B::Morphism& f) {
    auto im = image(b, f).mono;
    auto coim = coimage(b, f).epi;
    auto through_im = b.factor_through_mono(im, f);
    if (!through_im) return std::nullopt;
    auto middle = b.factor_through_epi(coim, *through_im);
    if (!middle) return std::nullopt;
    return NormalFactorization<B>{coim, *middle, im};
}

template <NullCategory B>
NormalSubobject<B> top(const B& b, const typename B::Object& a) {
    return {b.identity(a)};
}

template <NullCategory B>
NormalSubobject<B> bottom(const B& b, const typename B::Object& a) {
    return {b.kernel(b.identity(a))};
}

template <NullCategory B>
NormalSubobject<B> kernel_sub(const B& b, const typename B::Morphism& f) {
    return {b.kernel(f)};
}

namespace detail {

template <NullCategory B>
void require_ambient(const B& b, const typename B::Object& a, const typename B::Object& c, const char* what) {
    if (!b.same_object(a, c)) throw AmbientMismatch(std::string(what) + ": ambient objects differ");
}

}  // namespace detail

/// f* t = iker(icoker(t) f)
template <NullCategory B>
NormalSubobject<B> pullback_sub(const B& b, const typename B::Morphism& f, const NormalSubobject<B>& t) {
    detail::require_ambient(b, b.codomain(f), b.codomain(t.mono), "pullback_sub");
    return {b.kernel(b.compose(b.cokernel(t.mono), f))};
}

/// f_* s = iker(icoker(f s))
template <NullCategory B>
NormalSubobject<B> pushforward_sub(const B& b, const typename B::Morphism& f, const NormalSubobject<B>& s) {
    detail::require_ambient(b, b.domain(f), b.codomain(s.mono), "pushforward_sub");
    return image(b, b.compose(f, s.mono));
}

/// Pullback of a normal quotient q of the codomain: icoker(iker(q f)).
template <NullCategory B>
NormalQuotient<B> pullback_quot(const B& b, const typename B::Morphism& f, const NormalQuotient<B>& q) {
    return {b.cokernel(b.kernel(b.compose(q.epi, f)))};
}

/// Pushforward of a normal quotient q of the domain: icoker(f iker(q)).
template <NullCategory B>
NormalQuotient<B> pushforward_quot(const B& b, const typename B::Morphism& f, const NormalQuotient<B>& q) {
    return {b.cokernel(b.compose(f, b.kernel(q.epi)))};
}

template <NullCategory B>
bool sub_leq(const B& b, const NormalSubobject<B>& s, const NormalSubobject<B>& t) {
    detail::require_ambient(b, b.codomain(s.mono), b.codomain(t.mono), "sub_leq");
    return b.factor_through_mono(t.mono, s.mono).has_value();
}

template <NullCategory B>
bool sub_eq(const B& b, const NormalSubobject<B>& s, const NormalSubobject<B>& t) {
    return sub_leq(b, s, t) && sub_leq(b, t, s);
}

/// Normal quotients are equal when each factors through the other.
template <NullCategory B>
bool quot_eq(const B& b, const NormalQuotient<B>& p, const NormalQuotient<B>& q) {
    detail::require_ambient(b, b.domain(p.epi), b.domain(q.epi), "quot_eq");
    return b.factor_through_epi(p.epi, q.epi).has_value() && b.factor_through_epi(q.epi, p.epi).has_value();
}

/// s ∧ t = s_* s* t
template <NullCategory B>
NormalSubobject<B> sub_meet(const B& b, const NormalSubobject<B>& s, const NormalSubobject<B>& t) {
    return pushforward_sub(b, s.mono, pullback_sub(b, s.mono, t));
}

/// s ∨ t = icoker(t)* icoker(t)_* s
template <NullCategory B>
NormalSubobject<B> sub_join(const B& b, const NormalSubobject<B>& s, const NormalSubobject<B>& t) {
    detail::require_ambient(b, b.codomain(s.mono), b.codomain(t.mono), "sub_join");
    auto c = b.cokernel(t.mono);
    return pullback_sub(b, c, pushforward_sub(b, c, s));
}

/// The kernel of the cokernel of f factors back through f by an isomorphism.
template <NullCategory B>
bool is_normal_mono(const B& b, const typename B::Morphism& f) {
    auto u = b.factor_through_mono(image(b, f).mono, f);
    return u && b.is_isomorphism(*u);
}

template <NullCategory B>
bool is_normal_epi(const B& b, const typename B::Morphism& f) {
    auto u = b.factor_through_epi(coimage(b, f).epi, f);
    return u && b.is_isomorphism(*u);
}

/// s <= f* t  iff  f_* s <= t
template <NullCategory B>
bool check_galois(const B& b, const typename B::Morphism& f, const NormalSubobject<B>& s,
                  const NormalSubobject<B>& t) {
    return sub_leq(b, s, pullback_sub(b, f, t)) == sub_leq(b, pushforward_sub(b, f, s), t);
}

struct FstarReport {
    bool kernel_of_composite = false;    // iker(gf) = f* iker(g)
    bool cokernel_of_composite = false;  // icoker(gf) = g_* icoker(f)
    bool image_of_composite = false;     // g_* iim f = iim gf
    bool coimage_of_composite = false;   // f* icoim g = icoim gf

    bool all() const {
        return kernel_of_composite && cokernel_of_composite && image_of_composite && coimage_of_composite;
    }
};

template <NullCategory B>
FstarReport check_fstar_identities(const B& b, const typename B::Morphism& f, const typename B::Morphism& g) {
    if (!b.same_object(b.codomain(f), b.domain(g)))
        throw AmbientMismatch("check_fstar_identities: morphisms are not composable");
    auto gf = b.compose(g, f);
    FstarReport r;
    r.kernel_of_composite = sub_eq(b, kernel_sub(b, gf), pullback_sub(b, f, kernel_sub(b, g)));
    r.cokernel_of_composite =
        quot_eq(b, NormalQuotient<B>{b.cokernel(gf)}, pushforward_quot(b, g, NormalQuotient<B>{b.cokernel(f)}));
    r.image_of_composite = sub_eq(b, pushforward_sub(b, g, image(b, f)), image(b, gf));
    r.coimage_of_composite = quot_eq(b, pullback_quot(b, f, coimage(b, g)), coimage(b, gf));
    return r;
}

/// f* f_* is idempotent and inflationary at s.
template <NullCategory B>
bool check_closure(const B& b, const typename B::Morphism& f, const NormalSubobject<B>& s) {
    auto once = pullback_sub(b, f, pushforward_sub(b, f, s));
    auto twice = pullback_sub(b, f, pushforward_sub(b, f, once));
    return sub_eq(b, once, twice) && sub_leq(b, s, once);
}

template <NullCategory B>
struct HomologyAxiomResult {
    bool holds = false;
    std::optional<typename B::Object> homology;  // H
    std::optional<typename B::Morphism> epi;     // A ->> H
    std::optional<typename B::Morphism> mono;    // H >-> D
    std::string witness;                         // why it fails
};

/// Given a normal mono i and a normal epi q with icoker(i) iker(q) null, looks for
/// H with a normal epi and a normal mono closing the square; that happens exactly
/// when the middle morphism of the normal factorization of q i is an isomorphism.
template <NullCategory B>
HomologyAxiomResult<B> check_homology_axiom(const B& b, const typename B::Morphism& i,
                                            const typename B::Morphism& q) {
    if (!b.same_object(b.codomain(i), b.domain(q)))
        throw AmbientMismatch("check_homology_axiom: i and q do not meet at one object");
    if (!b.is_null(b.compose(b.cokernel(i), b.kernel(q))))
        throw HomologyPreconditionError("boundaries not inside cycles: iker(q) <= i fails");
    HomologyAxiomResult<B> r;
    auto qi = b.compose(q, i);
    auto nf = normal_factorization(b, qi);
    if (!nf) {
        r.witness = "q i has no normal factorization";
        return r;
    }
    if (!b.is_isomorphism(nf->middle)) {
        r.witness = "middle morphism of the normal factorization of q i is not an isomorphism";
        return r;
    }
    r.holds = true;
    r.homology = b.codomain(nf->coim);
    r.epi = nf->coim;
    r.mono = b.compose(nf->im, nf->middle);
    return r;
}

/// s1 <= s2  implies  s1 ∨ (t ∧ s2) = (s1 ∨ t) ∧ s2
template <NullCategory B>
bool check_modularity(const B& b, const NormalSubobject<B>& s1, const NormalSubobject<B>& s2,
                      const NormalSubobject<B>& t) {
    if (!sub_leq(b, s1, s2)) throw std::invalid_argument("check_modularity: requires s1 <= s2");
    return sub_eq(b, sub_join(b, s1, sub_meet(b, t, s2)), sub_meet(b, sub_join(b, s1, t), s2));
}

/// f* f_* s = s ∨ iker f
template <NullCategory B>
bool check_left_modular(const B& b, const typename B::Morphism& f, const NormalSubobject<B>& s) {
    return sub_eq(b, pullback_sub(b, f, pushforward_sub(b, f, s)), sub_join(b, s, kernel_sub(b, f)));
}

/// f_* f* t = t ∧ iim f
template <NullCategory B>
bool check_right_modular(const B& b, const typename B::Morphism& f, const NormalSubobject<B>& t) {
    return sub_eq(b, pushforward_sub(b, f, pullback_sub(b, f, t)), sub_meet(b, t, image(b, f)));
}

/// f*(f_* s ∨ t) = s ∨ f* t  and  f_*(f* t ∧ s) = t ∧ f_* s
template <NullCategory B>
bool check_frobenius(const B& b, const typename B::Morphism& f, const NormalSubobject<B>& s,
                     const NormalSubobject<B>& t) {
    bool first = sub_eq(b, pullback_sub(b, f, sub_join(b, pushforward_sub(b, f, s), t)),
                        sub_join(b, s, pullback_sub(b, f, t)));
    bool second = sub_eq(b, pushforward_sub(b, f, sub_meet(b, pullback_sub(b, f, t), s)),
                         sub_meet(b, t, pushforward_sub(b, f, s)));
    return first && second;
}

/// Two-out-of-three for normal monos (g mono, gf normal mono => f normal mono) and dually for epis.
struct TwoOfThreeReport {
    bool g_mono = false;
    bool gf_normal_mono = false;
    bool f_normal_mono = false;
    bool f_epi = false;
    bool gf_normal_epi = false;
    bool g_normal_epi = false;

    bool mono_hypotheses() const { return g_mono && gf_normal_mono; }
    bool epi_hypotheses() const { return f_epi && gf_normal_epi; }
    bool holds() const { return (!mono_hypotheses() || f_normal_mono) && (!epi_hypotheses() || g_normal_epi); }
};

template <NullCategory B>
TwoOfThreeReport check_two_of_three(const B& b, const typename B::Morphism& f, const typename B::Morphism& g) {
    if (!b.same_object(b.codomain(f), b.domain(g)))
        throw AmbientMismatch("check_two_of_three: morphisms are not composable");
    auto gf = b.compose(g, f);
    TwoOfThreeReport r;
    r.g_mono = b.is_mono(g);
    r.gf_normal_mono = is_normal_mono(b, gf);
    r.f_normal_mono = is_normal_mono(b, f);
    r.f_epi = b.is_epi(f);
    r.gf_normal_epi = is_normal_epi(b, gf);
    r.g_normal_epi = is_normal_epi(b, g);
    return r;
}

}  // namespace curvlab
