#pragma once

/**
 * @file complex.hpp
 * @brief Chain complexes, exactness, short exact sequences of complexes and the
 * long sequence of arrow-category homology objects they induce.
 *
 * Complexes live on a finite window [lo, hi]; every degree outside it is the
 * backend's zero object and every differential touching it is a zero morphism.
 *
 * The long sequence is assembled by lifting the degreewise short exact sequence
 * C_n -> D_n -> E_n to the arrow category, with objects i_n, id_{D_n} and q_n,
 * and taking arrow homology objects there. The connecting squares are built
 * from the kernel and cokernel universal properties and then verified.
 */

#include "curvlab/arrow.hpp"
#include "curvlab/lp.hpp"
#include "curvlab/null_category.hpp"
#include "curvlab/seminorm.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvlab {

struct ComplexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <NullCategory C>
struct ChainComplex {
    int lo = 0;
    std::vector<typename C::Object> objects;         // C_lo .. C_hi
    std::vector<typename C::Morphism> differentials;  // d_{lo+1} .. d_hi, d_n : C_n -> C_{n-1}

    int hi() const { return lo + static_cast<int>(objects.size()) - 1; }
    bool in_window(int n) const { return n >= lo && n <= hi(); }
};

/// C_n, or the zero object outside the window.
template <NullCategory C>
typename C::Object chain_object(const C& cat, const ChainComplex<C>& cx, int n) {
    if (!cx.in_window(n)) return cat.zero_object();
    return cx.objects[static_cast<std::size_t>(n - cx.lo)];
}

/// d_n : C_n -> C_{n-1}, a zero morphism unless both ends are in the window.
template <NullCategory C>
typename C::Morphism chain_differential(const C& cat, const ChainComplex<C>& cx, int n) {
    if (cx.in_window(n) && cx.in_window(n - 1)) return cx.differentials[static_cast<std::size_t>(n - cx.lo - 1)];
    return cat.zero_morphism(chain_object(cat, cx, n), chain_object(cat, cx, n - 1));
}

/// Builds a complex after checking that the differentials chain up.
template <NullCategory C>
ChainComplex<C> make_complex(const C& cat, int lo, std::vector<typename C::Object> objects,
                             std::vector<typename C::Morphism> differentials) {
    if (objects.empty()) throw ComplexError("complex needs at least one degree");
    if (differentials.size() + 1 != objects.size())
        throw ComplexError("complex with " + std::to_string(objects.size()) + " degrees needs " +
                           std::to_string(objects.size() - 1) + " differentials");
    for (std::size_t k = 0; k < differentials.size(); ++k) {
        int n = lo + static_cast<int>(k) + 1;
        if (!cat.same_object(cat.domain(differentials[k]), objects[k + 1]) ||
            !cat.same_object(cat.codomain(differentials[k]), objects[k]))
            throw ComplexError("d_" + std::to_string(n) + " does not run from C_" + std::to_string(n) + " to C_" +
                               std::to_string(n - 1));
    }
    return {lo, std::move(objects), std::move(differentials)};
}

struct DegreeCheck {
    int degree = 0;
    bool ok = false;
    std::string detail;
};

/// d_{n-1} d_n is null for every n with both differentials in the window.
template <NullCategory C>
std::vector<DegreeCheck> validate_complex(const C& cat, const ChainComplex<C>& cx) {
    std::vector<DegreeCheck> out;
    for (int n = cx.lo + 2; n <= cx.hi(); ++n) {
        auto dd = cat.compose(chain_differential(cat, cx, n - 1), chain_differential(cat, cx, n));
        out.push_back({n, cat.is_null(dd), "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + ": " +
                                                cat.null_certificate(dd)});
    }
    return out;
}

template <NullCategory C>
bool complex_is_valid(const C& cat, const ChainComplex<C>& cx) {
    for (const auto& d : validate_complex(cat, cx))
        if (!d.ok) return false;
    return true;
}

/// iim d_{n+1} = iker d_n in Nsb(C_n).
template <NullCategory C>
bool is_exact_at(const C& cat, const ChainComplex<C>& cx, int n) {
    return sub_eq(cat, image(cat, chain_differential(cat, cx, n + 1)), kernel_sub(cat, chain_differential(cat, cx, n)));
}

/// The seminorm criterion: inf_x (|y - d_{n+1} x| + ε|x|) <= max(ε|y|, |d_n y|) for all y,
/// decided as a comparison of the two sides as seminorms.
inline bool eps_exact_at(const Norm& cat, const ChainComplex<Norm>& cx, int n) {
    auto lhs = eps_cokernel_seminorm(chain_differential(cat, cx, n + 1), cat.epsilon());
    auto rhs = eps_coimage(chain_differential(cat, cx, n), cat.epsilon());
    return seminorm_leq(lhs, rhs);
}

/// Arrow homology iKer(d_n) -> iCoker(d_{n+1}) of the complex seen through identity arrows.
template <NullCategory C>
typename ArrowCategory<C>::HomologyObject complex_homology(const C& cat, const ChainComplex<C>& cx, int n) {
    ArrowCategory<C> arrow(cat);
    return arrow.homology_object(arrow.embed(chain_differential(cat, cx, n + 1)),
                                 arrow.embed(chain_differential(cat, cx, n)));
}

template <NullCategory C>
struct ShortExactSequence {
    ChainComplex<C> c, d, e;
    std::vector<typename C::Morphism> i;  // i_n : C_n -> D_n over the window
    std::vector<typename C::Morphism> q;  // q_n : D_n -> E_n
};

template <NullCategory C>
typename C::Morphism ses_i(const C& cat, const ShortExactSequence<C>& s, int n) {
    if (!s.d.in_window(n)) return cat.zero_morphism(cat.zero_object(), cat.zero_object());
    return s.i[static_cast<std::size_t>(n - s.d.lo)];
}

template <NullCategory C>
typename C::Morphism ses_q(const C& cat, const ShortExactSequence<C>& s, int n) {
    if (!s.d.in_window(n)) return cat.zero_morphism(cat.zero_object(), cat.zero_object());
    return s.q[static_cast<std::size_t>(n - s.d.lo)];
}

/// Everything wrong with a candidate short exact sequence; empty when valid.
template <NullCategory C>
std::vector<std::string> validate_ses(const C& cat, const ShortExactSequence<C>& s) {
    std::vector<std::string> defects;
    if (s.c.lo != s.d.lo || s.d.lo != s.e.lo || s.c.objects.size() != s.d.objects.size() ||
        s.d.objects.size() != s.e.objects.size()) {
        defects.push_back("complexes do not share a window");
        return defects;
    }
    if (s.i.size() != s.d.objects.size() || s.q.size() != s.d.objects.size()) {
        defects.push_back("map families do not cover the window");
        return defects;
    }
    for (const auto* cx : {&s.c, &s.d, &s.e})
        for (const auto& d : validate_complex(cat, *cx))
            if (!d.ok) defects.push_back("complex not null-squared at degree " + std::to_string(d.degree));
    for (int n = s.d.lo; n <= s.d.hi(); ++n) {
        const std::string at = " at degree " + std::to_string(n);
        auto i = ses_i(cat, s, n), q = ses_q(cat, s, n);
        if (!cat.same_object(cat.domain(i), chain_object(cat, s.c, n)) ||
            !cat.same_object(cat.codomain(i), chain_object(cat, s.d, n)) ||
            !cat.same_object(cat.domain(q), chain_object(cat, s.d, n)) ||
            !cat.same_object(cat.codomain(q), chain_object(cat, s.e, n))) {
            defects.push_back("i or q has the wrong ends" + at);
            continue;
        }
        if (!cat.is_mono(i) || !sub_eq(cat, NormalSubobject<C>{i}, kernel_sub(cat, q)))
            defects.push_back("i is not iker(q)" + at);
        if (!cat.is_epi(q) || !quot_eq(cat, NormalQuotient<C>{q}, NormalQuotient<C>{cat.cokernel(i)}))
            defects.push_back("q is not icoker(i)" + at);
        if (n > s.d.lo) {
            if (!cat.equal(cat.compose(chain_differential(cat, s.d, n), i),
                           cat.compose(ses_i(cat, s, n - 1), chain_differential(cat, s.c, n))))
                defects.push_back("i does not commute with the differentials" + at);
            if (!cat.equal(cat.compose(chain_differential(cat, s.e, n), q),
                           cat.compose(ses_q(cat, s, n - 1), chain_differential(cat, s.d, n))))
                defects.push_back("q does not commute with the differentials" + at);
        }
    }
    return defects;
}

/// The short exact sequence with i_n = iker(p_n), q_n = icoker(i_n) for given maps p_n out of D_n;
/// the differentials of C and E are induced, and an error is thrown when d^D does not preserve them.
template <NullCategory C>
ShortExactSequence<C> ses_from_quotients(const C& cat, const ChainComplex<C>& d,
                                         const std::vector<typename C::Morphism>& p) {
    if (p.size() != d.objects.size()) throw ComplexError("one map per degree of D is needed");
    ShortExactSequence<C> s;
    s.d = d;
    std::vector<typename C::Object> cobj, eobj;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!cat.same_object(cat.domain(p[k]), d.objects[k]))
            throw ComplexError("quotient map " + std::to_string(d.lo + static_cast<int>(k)) + " does not start at D");
        s.i.push_back(cat.kernel(p[k]));
        s.q.push_back(cat.cokernel(s.i.back()));
        cobj.push_back(cat.domain(s.i.back()));
        eobj.push_back(cat.codomain(s.q.back()));
    }
    std::vector<typename C::Morphism> dc, de;
    for (std::size_t k = 1; k < p.size(); ++k) {
        const auto& dd = d.differentials[k - 1];
        auto lc = cat.factor_through_mono(s.i[k - 1], cat.compose(dd, s.i[k]));
        auto le = cat.factor_through_epi(s.q[k], cat.compose(s.q[k - 1], dd));
        if (!lc || !le)
            throw ComplexError("d_" + std::to_string(d.lo + static_cast<int>(k)) + " of D does not preserve the subobject");
        dc.push_back(*lc);
        de.push_back(*le);
    }
    s.c = make_complex(cat, d.lo, std::move(cobj), std::move(dc));
    s.e = make_complex(cat, d.lo, std::move(eobj), std::move(de));
    return s;
}

/// The map of arrow homology objects induced by a square (phi0, phi1) between the middle arrows.
template <NullCategory C>
std::optional<typename ArrowCategory<C>::Morphism> induced_homology_map(
    const ArrowCategory<C>& arrow, const typename ArrowCategory<C>::HomologyObject& src,
    const typename ArrowCategory<C>::HomologyObject& tgt, const typename C::Morphism& phi0,
    const typename C::Morphism& phi1) {
    const C& b = arrow.base();
    auto top = b.factor_through_mono(tgt.cycles, b.compose(phi0, src.cycles));
    if (!top) return std::nullopt;
    auto bottom = b.factor_through_epi(src.boundaries, b.compose(tgt.boundaries, phi1));
    if (!bottom) return std::nullopt;
    typename ArrowCategory<C>::Morphism m{src.object, tgt.object, std::move(*top), std::move(*bottom)};
    if (!arrow.commutes(m)) return std::nullopt;
    return m;
}

struct ModularityInstances {
    int degree = 0;
    bool dedekind = false;     // iim d_{n+1} ∨ (C_n ∧ iker d_n) = (iim d_{n+1} ∨ C_n) ∧ iker d_n
    bool left_modular = false;   // d_n* d_n_* C_n = C_n ∨ iker d_n
    bool right_modular = false;  // d_n_* d_n* C_{n-1} = C_{n-1} ∧ iim d_n

    bool all() const { return dedekind && left_modular && right_modular; }
};

/// The three modularity instances in Nsb(D_n), with C_n read as iim(i_n).
template <NullCategory C>
ModularityInstances check_les_modularity_instances(const C& cat, const ShortExactSequence<C>& s, int n) {
    auto dn = chain_differential(cat, s.d, n);
    auto im = image(cat, chain_differential(cat, s.d, n + 1));
    auto ker = kernel_sub(cat, dn);
    auto cn = image(cat, ses_i(cat, s, n));
    auto cn1 = image(cat, ses_i(cat, s, n - 1));
    ModularityInstances r;
    r.degree = n;
    r.dedekind = sub_eq(cat, sub_join(cat, im, sub_meet(cat, cn, ker)), sub_meet(cat, sub_join(cat, im, cn), ker));
    r.left_modular = check_left_modular(cat, dn, cn);
    r.right_modular = check_right_modular(cat, dn, cn1);
    return r;
}

template <NullCategory C>
struct LongExactSequence {
    using Arrow = ArrowCategory<C>;

    struct Node {
        char complex = 'C';  // which of C, D, E
        int degree = 0;
        typename Arrow::HomologyObject homology;
    };

    struct Link {
        std::string name;  // e.g. "i_3", "q_3", "delta_3"
        std::optional<typename Arrow::Morphism> map;
        bool composite_null = true;  // with the next link
    };

    std::vector<Node> nodes;  // H_{hi+1}(E), then H_n(C), H_n(D), H_n(E) for n = hi .. lo, then H_{lo-1}(C)
    std::vector<Link> links;  // links[k] : nodes[k] -> nodes[k+1]
    std::vector<std::optional<bool>> exact;  // per node; unset at the two ends or when a map is missing
    std::vector<ModularityInstances> modularity;
    std::vector<std::string> defects;

    bool modularity_holds() const {
        for (const auto& m : modularity)
            if (!m.all()) return false;
        return true;
    }

    bool exact_everywhere() const {
        for (std::size_t k = 1; k + 1 < nodes.size(); ++k)
            if (!exact[k] || !*exact[k]) return false;
        return true;
    }

    std::string node_name(std::size_t k) const {
        return std::string("H_") + std::to_string(nodes[k].degree) + "(" + nodes[k].complex + ")";
    }
};

namespace detail {

// The degree-n middle arrows of the lifted complexes and their differentials.
template <NullCategory C>
typename ArrowCategory<C>::HomologyObject lifted_homology(const ArrowCategory<C>& arrow,
                                                          const ShortExactSequence<C>& s, char which, int n) {
    using AM = typename ArrowCategory<C>::Morphism;
    const C& b = arrow.base();
    auto dD = [&](int k) { return chain_differential(b, s.d, k); };
    auto squares = [&]() -> std::pair<AM, AM> {
        if (which == 'C') {
            // objects i_k, differential squares (d^C_k, d^D_k)
            auto obj = [&](int k) { return arrow.object(ses_i(b, s, k)); };
            return {AM{obj(n + 1), obj(n), chain_differential(b, s.c, n + 1), dD(n + 1)},
                    AM{obj(n), obj(n - 1), chain_differential(b, s.c, n), dD(n)}};
        }
        if (which == 'D') {
            auto obj = [&](int k) { return arrow.embed(chain_object(b, s.d, k)); };
            return {AM{obj(n + 1), obj(n), dD(n + 1), dD(n + 1)}, AM{obj(n), obj(n - 1), dD(n), dD(n)}};
        }
        // objects q_k, differential squares (d^D_k, d^E_k)
        auto obj = [&](int k) { return arrow.object(ses_q(b, s, k)); };
        return {AM{obj(n + 1), obj(n), dD(n + 1), chain_differential(b, s.e, n + 1)},
                AM{obj(n), obj(n - 1), dD(n), chain_differential(b, s.e, n)}};
    };
    auto [f, g] = squares();
    return arrow.homology_object(f, g);
}

}  // namespace detail

/// Assembles the long sequence and verifies commutativity, null composites and, when the
/// modularity instances hold, exactness. Every failure lands in defects.
template <NullCategory C>
LongExactSequence<C> assemble_les(const C& cat, const ShortExactSequence<C>& s) {
    using L = LongExactSequence<C>;
    ArrowCategory<C> arrow(cat);
    L les;
    les.defects = validate_ses(cat, s);
    if (!les.defects.empty()) return les;

    const int lo = s.d.lo, hi = s.d.hi();
    auto push = [&](char which, int n) { les.nodes.push_back({which, n, detail::lifted_homology(arrow, s, which, n)}); };
    push('E', hi + 1);
    for (int n = hi; n >= lo; --n) {
        push('C', n);
        push('D', n);
        push('E', n);
    }
    push('C', lo - 1);

    auto connecting = [&](const typename L::Node& from, const typename L::Node& to) -> std::optional<typename ArrowCategory<C>::Morphism> {
        const int n = from.degree;
        auto dn = chain_differential(cat, s.d, n);
        // top: the i_{n-1}-lift of d^D_n on cycles
        auto lift = cat.factor_through_mono(ses_i(cat, s, n - 1), cat.compose(dn, from.homology.cycles));
        if (!lift) return std::nullopt;
        auto top = cat.factor_through_mono(to.homology.cycles, *lift);
        if (!top) return std::nullopt;
        // bottom: d^D_n on a q_n-preimage, modulo boundaries
        auto down = cat.factor_through_epi(ses_q(cat, s, n), cat.compose(to.homology.boundaries, dn));
        if (!down) return std::nullopt;
        auto bottom = cat.factor_through_epi(from.homology.boundaries, *down);
        if (!bottom) return std::nullopt;
        typename ArrowCategory<C>::Morphism m{from.homology.object, to.homology.object, std::move(*top), std::move(*bottom)};
        if (!arrow.commutes(m)) return std::nullopt;
        return m;
    };

    for (std::size_t k = 0; k + 1 < les.nodes.size(); ++k) {
        const auto& from = les.nodes[k];
        const auto& to = les.nodes[k + 1];
        const int n = from.degree;
        typename L::Link link;
        if (from.complex == 'C') {
            link.name = "i_" + std::to_string(n);
            link.map = induced_homology_map(arrow, from.homology, to.homology, ses_i(cat, s, n),
                                            cat.identity(chain_object(cat, s.d, n)));
        } else if (from.complex == 'D') {
            link.name = "q_" + std::to_string(n);
            link.map = induced_homology_map(arrow, from.homology, to.homology, cat.identity(chain_object(cat, s.d, n)),
                                            ses_q(cat, s, n));
        } else {
            link.name = "delta_" + std::to_string(n);
            link.map = connecting(from, to);
        }
        if (!link.map)
            les.defects.push_back(link.name + ": no commuting square " + les.node_name(k) + " -> " + les.node_name(k + 1));
        les.links.push_back(std::move(link));
    }

    for (std::size_t k = 0; k + 1 < les.links.size(); ++k) {
        auto& a = les.links[k];
        const auto& b = les.links[k + 1];
        if (!a.map || !b.map) continue;
        a.composite_null = arrow.is_null(arrow.compose(*b.map, *a.map));
        if (!a.composite_null) les.defects.push_back("composite " + b.name + " " + a.name + " has a non-null diagonal");
    }

    les.exact.assign(les.nodes.size(), std::nullopt);
    for (std::size_t k = 1; k + 1 < les.nodes.size(); ++k) {
        const auto& in = les.links[k - 1].map;
        const auto& out = les.links[k].map;
        if (!in || !out) continue;
        les.exact[k] = sub_eq(arrow, image(arrow, *in), kernel_sub(arrow, *out));
    }

    for (int n = lo; n <= hi; ++n) les.modularity.push_back(check_les_modularity_instances(cat, s, n));
    if (les.modularity_holds())
        for (std::size_t k = 1; k + 1 < les.nodes.size(); ++k)
            if (les.exact[k] && !*les.exact[k])
                les.defects.push_back("modularity instances hold but the sequence is not exact at " + les.node_name(k));
    return les;
}

/// A morphism of short exact sequences: chain maps alpha : C -> C', beta : D -> D', gamma : E -> E'.
template <NullCategory C>
struct SesMorphism {
    std::vector<typename C::Morphism> alpha, beta, gamma;  // over the common window
};

/// Per degree n: the connecting squares satisfy delta'_n H(gamma)_n = H(alpha)_{n-1} delta_n.
template <NullCategory C>
std::vector<DegreeCheck> check_naturality(const C& cat, const ShortExactSequence<C>& s, const LongExactSequence<C>& les,
                                          const ShortExactSequence<C>& t, const LongExactSequence<C>& lt,
                                          const SesMorphism<C>& m) {
    ArrowCategory<C> arrow(cat);
    auto comp = [&](const std::vector<typename C::Morphism>& v, int n, const ChainComplex<C>& a, const ChainComplex<C>& b) {
        if (!s.d.in_window(n)) return cat.zero_morphism(chain_object(cat, a, n), chain_object(cat, b, n));
        return v[static_cast<std::size_t>(n - s.d.lo)];
    };
    auto find = [](const LongExactSequence<C>& l, char which, int n) -> std::size_t {
        for (std::size_t k = 0; k < l.nodes.size(); ++k)
            if (l.nodes[k].complex == which && l.nodes[k].degree == n) return k;
        return l.nodes.size();
    };
    std::vector<DegreeCheck> out;
    for (int n = s.d.hi() + 1; n >= s.d.lo; --n) {
        DegreeCheck r{n, false, {}};
        std::size_t e = find(les, 'E', n), c = find(les, 'C', n - 1);
        std::size_t e2 = find(lt, 'E', n), c2 = find(lt, 'C', n - 1);
        if (e >= les.nodes.size() || e2 >= lt.nodes.size() || !les.links[e].map || !lt.links[e2].map) {
            r.detail = "connecting map missing";
            out.push_back(r);
            continue;
        }
        // H(gamma) on the lifted E: square (beta_n, gamma_n) between q_n and q'_n; H(alpha): (alpha, beta)
        auto hg = induced_homology_map(arrow, les.nodes[e].homology, lt.nodes[e2].homology,
                                       comp(m.beta, n, s.d, t.d), comp(m.gamma, n, s.e, t.e));
        auto ha = induced_homology_map(arrow, les.nodes[c].homology, lt.nodes[c2].homology,
                                       comp(m.alpha, n - 1, s.c, t.c), comp(m.beta, n - 1, s.d, t.d));
        if (!hg || !ha) {
            r.detail = "induced map missing";
            out.push_back(r);
            continue;
        }
        auto left = arrow.compose(*lt.links[e2].map, *hg);
        auto right = arrow.compose(*ha, *les.links[e].map);
        r.ok = cat.equal(left.top, right.top) && cat.equal(left.bottom, right.bottom);
        r.detail = r.ok ? "commutes" : "connecting square is not natural";
        out.push_back(r);
    }
    return out;
}

struct KazhdanReport {
    Vec y;
    bool strict_feasible = false;      // |x| <= |y|, |y - d x| <= ε|y| + |d_n y|
    bool permissive_feasible = false;  // |x| <= |y| + ε⁻¹|d_n y|, same second bound
    std::optional<Vec> strict_witness;
    std::optional<Vec> permissive_witness;
    Rational lhs;  // inf_x |y - d_{n+1} x| + ε|x|
    Rational rhs;  // max(ε|y|, |d_n y|)
};

namespace detail {

// Feasibility of x in C_{n+1} with |x| <= bx and |y - D x| <= by, as an LP with zero objective.
inline std::optional<Vec> kazhdan_feasible(const BoundedMap& up, const Vec& y, const Rational& bx, const Rational& by) {
    const std::size_t m = up.source.dimension();
    LinearProgram lp;
    lp.objective = zeros(m);
    for (const auto& a : up.source.functionals()) {
        lp.add(a, Relation::LessEqual, bx);
        lp.add(-a, Relation::LessEqual, bx);
    }
    Matrix dt = up.matrix.transpose();
    for (const auto& b : up.target.functionals()) {
        Vec bd = dt * b;
        Rational b_y = dot(b, y);
        lp.add(bd, Relation::LessEqual, by + b_y);   // <b, y - Dx> >= -by
        lp.add(-bd, Relation::LessEqual, by - b_y);  // <b, y - Dx> <= by
    }
    if (lp.constraints.empty()) return zeros(m);
    auto r = lp_solve(lp);
    if (!r.optimal()) return std::nullopt;
    return r.point;
}

}  // namespace detail

/// Pointwise comparison of the ε-exactness inequality with Kazhdan's ε-acyclicity at degree n.
inline KazhdanReport kazhdan_check(const Norm& cat, const ChainComplex<Norm>& cx, int n, const Vec& y) {
    if (!cx.in_window(n)) throw ComplexError("degree " + std::to_string(n) + " is outside the window");
    const auto& space = chain_object(cat, cx, n);
    if (y.size() != space.dimension()) throw ComplexError("test vector has the wrong dimension");
    const Rational& eps = cat.epsilon();
    auto up = chain_differential(cat, cx, n + 1);
    auto down = chain_differential(cat, cx, n);
    Rational ny = space(y);
    Rational ndy = down.target(down.matrix * y);
    KazhdanReport r;
    r.y = y;
    r.strict_witness = detail::kazhdan_feasible(up, y, ny, eps * ny + ndy);
    r.permissive_witness = detail::kazhdan_feasible(up, y, ny + ndy / eps, eps * ny + ndy);
    r.strict_feasible = r.strict_witness.has_value();
    r.permissive_feasible = r.permissive_witness.has_value();
    r.lhs = up.source.dimension() == 0 ? ny : cokernel_value_lp(up, eps, y);
    r.rhs = std::max<Rational>(eps * ny, ndy);
    return r;
}

}  // namespace curvlab
