#pragma once

/**
 * @file polytope.hpp
 * @brief Rational polyhedra in H-form and V-form with exact conversion.
 *
 * A polytope here is a polyhedron that is bounded modulo its lineality
 * space: P = conv(vertices) + span(lineality). That is exactly the shape of a
 * seminorm unit ball, whose null space shows up as lineality. Polyhedra with
 * recession rays outside the lineality space are rejected.
 *
 * Conversion uses the double description method (Motzkin et al.) on the
 * homogenized cone, with the combinatorial adjacency test. It is exponential
 * in the worst case and guarded by a dimension limit (default 6, overridable
 * with the CURVLAB_DD_LIMIT environment variable).
 */

#include "curvlab/lp.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvlab {

struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t default_dd_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("CURVLAB_DD_LIMIT")) {
            try {
                return static_cast<std::size_t>(std::stoul(env));
            } catch (const std::exception&) {
            }
        }
        return std::size_t{6};
    }();
    return limit;
}

/// <normal, x> <= bound
struct Halfspace {
    Vec normal;
    Rational bound;
};

struct VForm {
    std::vector<Vec> vertices;
    std::vector<Vec> lineality;
};

struct Polytope {
    std::size_t dimension = 0;
    std::optional<std::vector<Halfspace>> h_form;
    std::optional<VForm> v_form;

    static Polytope from_h(std::size_t dim, std::vector<Halfspace> hs) {
        for (const auto& h : hs)
            if (h.normal.size() != dim) throw DimensionError("halfspace normal has wrong length");
        return {dim, std::move(hs), std::nullopt};
    }

    static Polytope from_v(std::size_t dim, std::vector<Vec> vertices, std::vector<Vec> lineality = {}) {
        for (const auto& v : vertices)
            if (v.size() != dim) throw DimensionError("vertex has wrong length");
        for (const auto& l : lineality)
            if (l.size() != dim) throw DimensionError("lineality vector has wrong length");
        return {dim, std::nullopt, VForm{std::move(vertices), std::move(lineality)}};
    }
};

inline bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace detail {

struct ConeGenerators {
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
};

// Generators of {x in Q^d : <a, x> >= 0 for every a in constraints}.
inline ConeGenerators cone_generators(const std::vector<Vec>& constraints, std::size_t d) {
    struct Ray {
        Vec v;
        std::vector<bool> tight;
    };
    const std::size_t m = constraints.size();
    std::vector<Vec> lin;
    for (std::size_t i = 0; i < d; ++i) lin.push_back(unit_vector(d, i));
    std::vector<Ray> rays;

    for (std::size_t k = 0; k < m; ++k) {
        const Vec& a = constraints[k];
        std::size_t li = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                li = i;
                break;
            }
        if (li < lin.size()) {
            Vec l = lin[li];
            Rational al = dot(a, l);
            if (al < 0) {
                l = -l;
                al = -al;
            }
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(li));
            for (auto& v : lin) {
                Rational c = dot(a, v);
                if (c != 0) v = primitive(v - (c / al) * l);
            }
            for (auto& r : rays) {
                Rational c = dot(a, r.v);
                if (c != 0) r.v = primitive(r.v - (c / al) * l);
                r.tight[k] = true;
            }
            Ray nr{primitive(l), std::vector<bool>(m, false)};
            for (std::size_t j = 0; j < k; ++j) nr.tight[j] = true;
            rays.push_back(std::move(nr));
            continue;
        }

        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
            else
                rays[i].tight[k] = true;
        }
        if (neg.empty()) continue;

        std::vector<Ray> created;
        for (auto p : pos)
            for (auto n : neg) {
                std::vector<bool> common(m, false);
                for (std::size_t j = 0; j < k; ++j) common[j] = rays[p].tight[j] && rays[n].tight[j];
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    bool superset = true;
                    for (std::size_t j = 0; j < k; ++j)
                        if (common[j] && !rays[r].tight[j]) {
                            superset = false;
                            break;
                        }
                    if (superset) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr{primitive(val[p] * rays[n].v - val[n] * rays[p].v), std::move(common)};
                nr.tight[k] = true;
                created.push_back(std::move(nr));
            }
        std::vector<Ray> kept;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (val[i] >= 0) kept.push_back(std::move(rays[i]));
        for (auto& c : created) kept.push_back(std::move(c));
        rays = std::move(kept);
    }

    ConeGenerators out;
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    out.lineality = std::move(lin);
    return out;
}

inline void check_limit(std::size_t dim, std::size_t limit) {
    if (dim > limit)
        throw CapabilityError("double description limited to dimension " + std::to_string(limit) + ", got " +
                              std::to_string(dim));
}

inline void dedupe(std::vector<Vec>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace detail

/// Canonical V-form: rref lineality basis, vertices projected orthogonally off it, sorted, deduplicated.
inline VForm canonical(const VForm& v, std::size_t dim) {
    VForm out;
    out.lineality = span_basis(v.lineality, dim);
    for (const auto& x : v.vertices) out.vertices.push_back(project_out(x, out.lineality));
    detail::dedupe(out.vertices);
    return out;
}

/// Drops vertices lying in the hull of the others plus the lineality space.
inline VForm prune(const VForm& v) {
    VForm out{{}, v.lineality};
    std::vector<bool> dropped(v.vertices.size(), false);
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < v.vertices.size(); ++j)
            if (j != i && !dropped[j]) others.push_back(j);
        if (others.empty()) continue;
        const std::size_t d = v.vertices[i].size(), no = others.size(), nl = v.lineality.size();
        LinearProgram p;
        p.objective = zeros(no + nl);
        for (std::size_t r = 0; r < d; ++r) {
            Vec row = zeros(no + nl);
            for (std::size_t k = 0; k < no; ++k) row[k] = v.vertices[others[k]][r];
            for (std::size_t k = 0; k < nl; ++k) row[no + k] = v.lineality[k][r];
            p.add(std::move(row), Relation::Equal, v.vertices[i][r]);
        }
        Vec ones = zeros(no + nl);
        for (std::size_t k = 0; k < no; ++k) {
            ones[k] = 1;
            p.add(unit_vector(no + nl, k), Relation::GreaterEqual, 0);
        }
        p.add(std::move(ones), Relation::Equal, 1);
        if (lp_solve(p).optimal()) dropped[i] = true;
    }
    for (std::size_t i = 0; i < v.vertices.size(); ++i)
        if (!dropped[i]) out.vertices.push_back(v.vertices[i]);
    return out;
}

inline bool is_empty(const Polytope& p);

/// Populates the V-form from the H-form.
inline Polytope h_to_v(const Polytope& p, std::size_t limit = default_dd_limit()) {
    if (p.v_form) return p;
    if (!p.h_form) throw GeometryError("h_to_v: polytope has no H-form");
    detail::check_limit(p.dimension, limit);
    const std::size_t d = p.dimension;
    std::vector<Vec> cons;
    Vec t_nonneg = zeros(d + 1);
    t_nonneg[d] = 1;
    cons.push_back(t_nonneg);
    for (const auto& h : *p.h_form) {
        Vec c(d + 1);
        for (std::size_t i = 0; i < d; ++i) c[i] = -h.normal[i];
        c[d] = h.bound;
        cons.push_back(std::move(c));
    }
    auto gens = detail::cone_generators(cons, d + 1);
    VForm v;
    bool recession = false;
    for (const auto& r : gens.rays) {
        if (r[d] > 0) {
            Vec x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d));
            v.vertices.push_back((1 / r[d]) * x);
        } else {
            recession = true;
        }
    }
    if (!v.vertices.empty()) {
        if (recession)
            throw GeometryError("polyhedron has recession directions outside its lineality space");
        for (const auto& l : gens.lineality) v.lineality.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(d));
    }
    Polytope out = p;
    out.v_form = canonical(v, d);
    return out;
}

/// Populates the H-form (facets plus implicit equations as opposite pairs) from the V-form.
inline Polytope v_to_h(const Polytope& p, std::size_t limit = default_dd_limit()) {
    if (p.h_form) return p;
    if (!p.v_form) throw GeometryError("v_to_h: polytope has no V-form");
    detail::check_limit(p.dimension, limit);
    const std::size_t d = p.dimension;
    std::vector<Halfspace> hs;
    if (p.v_form->vertices.empty()) {
        hs.push_back({zeros(d), Rational(-1)});
    } else {
        std::vector<Vec> cons;
        for (const auto& v : p.v_form->vertices) {
            Vec c(d + 1);
            for (std::size_t i = 0; i < d; ++i) c[i] = -v[i];
            c[d] = 1;
            cons.push_back(std::move(c));
        }
        for (const auto& l : p.v_form->lineality) {
            Vec c(d + 1, Rational(0));
            for (std::size_t i = 0; i < d; ++i) c[i] = l[i];
            cons.push_back(c);
            cons.push_back(-c);
        }
        auto gens = detail::cone_generators(cons, d + 1);
        auto split = [d](const Vec& r) {
            return Halfspace{Vec(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d)), r[d]};
        };
        for (const auto& r : gens.rays) {
            Halfspace h = split(r);
            if (is_zero(h.normal)) continue;
            hs.push_back(std::move(h));
        }
        for (const auto& l : gens.lineality) {
            Halfspace h = split(l);
            if (is_zero(h.normal)) continue;
            hs.push_back({h.normal, h.bound});
            hs.push_back({-h.normal, -h.bound});
        }
    }
    Polytope out = p;
    out.h_form = std::move(hs);
    return out;
}

inline bool is_empty(const Polytope& p) {
    Polytope v = h_to_v(p);
    return v.v_form->vertices.empty();
}

/// q ⊆ p, decided on p's H-form and q's V-form.
inline bool contains(const Polytope& p, const Polytope& q, std::size_t limit = default_dd_limit()) {
    if (p.dimension != q.dimension) throw DimensionError("contains: dimension mismatch");
    Polytope ph = v_to_h(p, limit);
    Polytope qv = h_to_v(q, limit);
    for (const auto& v : qv.v_form->vertices)
        for (const auto& h : *ph.h_form)
            if (dot(h.normal, v) > h.bound) return false;
    if (qv.v_form->vertices.empty()) return true;
    for (const auto& l : qv.v_form->lineality)
        for (const auto& h : *ph.h_form)
            if (dot(h.normal, l) != 0) return false;
    return true;
}

inline bool same_set(const Polytope& p, const Polytope& q, std::size_t limit = default_dd_limit()) {
    return contains(p, q, limit) && contains(q, p, limit);
}

inline bool contains_point(const Polytope& p, const Vec& x) {
    Polytope ph = v_to_h(p);
    for (const auto& h : *ph.h_form)
        if (dot(h.normal, x) > h.bound) return false;
    return true;
}

/// f(P) for a linear map given as a matrix with p.dimension columns.
inline Polytope image_polytope(const Matrix& f, const Polytope& p, std::size_t limit = default_dd_limit()) {
    if (f.cols() != p.dimension) throw DimensionError("image_polytope: matrix columns differ from dimension");
    Polytope pv = h_to_v(p, limit);
    VForm v;
    for (const auto& x : pv.v_form->vertices) v.vertices.push_back(f * x);
    for (const auto& l : pv.v_form->lineality) v.lineality.push_back(f * l);
    return {f.rows(), std::nullopt, prune(canonical(v, f.rows()))};
}

inline Polytope intersect(const Polytope& p, const Polytope& q, std::size_t limit = default_dd_limit()) {
    if (p.dimension != q.dimension) throw DimensionError("intersect: dimension mismatch");
    Polytope ph = v_to_h(p, limit), qh = v_to_h(q, limit);
    std::vector<Halfspace> hs = *ph.h_form;
    hs.insert(hs.end(), qh.h_form->begin(), qh.h_form->end());
    return Polytope::from_h(p.dimension, std::move(hs));
}

/// Closed convex hull of the union.
inline Polytope hull_union(const Polytope& p, const Polytope& q, std::size_t limit = default_dd_limit()) {
    if (p.dimension != q.dimension) throw DimensionError("hull_union: dimension mismatch");
    Polytope pv = h_to_v(p, limit), qv = h_to_v(q, limit);
    if (pv.v_form->vertices.empty()) return qv;
    if (qv.v_form->vertices.empty()) return pv;
    VForm v = *pv.v_form;
    v.vertices.insert(v.vertices.end(), qv.v_form->vertices.begin(), qv.v_form->vertices.end());
    v.lineality.insert(v.lineality.end(), qv.v_form->lineality.begin(), qv.v_form->lineality.end());
    return {p.dimension, std::nullopt, prune(canonical(v, p.dimension))};
}

inline Polytope scale(const Rational& c, const Polytope& p) {
    if (c <= 0) throw std::domain_error("scale: factor must be positive");
    Polytope out{p.dimension, std::nullopt, std::nullopt};
    if (p.h_form) {
        std::vector<Halfspace> hs;
        for (const auto& h : *p.h_form) hs.push_back({h.normal, c * h.bound});
        out.h_form = std::move(hs);
    }
    if (p.v_form) {
        VForm v;
        for (const auto& x : p.v_form->vertices) v.vertices.push_back(c * x);
        v.lineality = p.v_form->lineality;
        out.v_form = std::move(v);
    }
    return out;
}

}  // namespace curvlab
