#pragma once

/**
 * @file seminorm.hpp
 * @brief Polyhedral seminorms on Q^n and the category Norm with the ideal of
 *        ε-small maps.
 *
 * A seminorm is stored as a list of functionals a_i with p(x) = max_i |<a_i, x>|
 * (the H-form of its unit ball). The V-form of the ball (symmetric generators
 * plus the null space as lineality) is computed on first use and cached; the
 * cache is filled under std::call_once, so shared values stay thread-safe.
 *
 * Universal statements ("for all x") are decided on ball generators: every
 * function involved is a gauge, so its extrema over a ball sit at vertices.
 */

#include "curvlab/lp.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/polytope.hpp"
#include "curvlab/rational.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvlab {

class PolyhedralSeminorm {
public:
    PolyhedralSeminorm() : PolyhedralSeminorm(0, {}) {}

    PolyhedralSeminorm(std::size_t dimension, std::vector<Vec> functionals)
        : impl_(std::make_shared<Impl>()) {
        impl_->dimension = dimension;
        for (auto& a : functionals) {
            if (a.size() != dimension) throw DimensionError("seminorm functional has wrong length");
            if (is_zero(a)) continue;
            impl_->functionals.push_back(sign_normalized(std::move(a)));
        }
        detail::dedupe(impl_->functionals);
    }

    /// Gauge of a symmetric ball given by generators (closed under negation implicitly).
    static PolyhedralSeminorm from_ball(std::size_t dimension, const VForm& ball,
                                        std::size_t limit = default_dd_limit()) {
        VForm sym{{}, ball.lineality};
        for (const auto& v : ball.vertices) {
            sym.vertices.push_back(v);
            sym.vertices.push_back(-v);
        }
        if (sym.vertices.empty()) sym.vertices.push_back(zeros(dimension));
        Polytope p = v_to_h(Polytope{dimension, std::nullopt, std::move(sym)}, limit);
        std::vector<Vec> fs;
        for (const auto& h : *p.h_form) {
            if (h.bound <= 0) throw GeometryError("from_ball: ball does not absorb the origin");
            fs.push_back((1 / h.bound) * h.normal);
        }
        return PolyhedralSeminorm(dimension, std::move(fs));
    }

    static PolyhedralSeminorm zero(std::size_t dimension) { return PolyhedralSeminorm(dimension, {}); }

    std::size_t dimension() const { return impl_->dimension; }
    const std::vector<Vec>& functionals() const { return impl_->functionals; }

    Rational operator()(const Vec& x) const {
        if (x.size() != dimension()) throw DimensionError("seminorm evaluation: wrong vector length");
        Rational m = 0;
        for (const auto& a : impl_->functionals) m = std::max(m, abs(dot(a, x)));
        return m;
    }

    /// Unit ball as symmetric vertices plus lineality (the null space).
    const VForm& ball() const {
        std::call_once(impl_->once, [this] {
            std::vector<Halfspace> hs;
            for (const auto& a : impl_->functionals) {
                hs.push_back({a, Rational(1)});
                hs.push_back({-a, Rational(1)});
            }
            impl_->ball = *h_to_v(Polytope::from_h(dimension(), std::move(hs))).v_form;
        });
        return impl_->ball;
    }

    /// Rows are the functionals (a 0-row matrix for the zero seminorm).
    Matrix functional_matrix() const { return Matrix::from_rows(impl_->functionals, dimension()); }

    /// Basis of the null space {x : p(x) = 0}.
    std::vector<Vec> null_space() const {
        if (impl_->functionals.empty()) {
            std::vector<Vec> basis;
            for (std::size_t i = 0; i < dimension(); ++i) basis.push_back(unit_vector(dimension(), i));
            return basis;
        }
        return curvlab::null_space(functional_matrix());
    }

    /// Same seminorm with redundant functionals removed (one functional per facet pair).
    PolyhedralSeminorm reduced() const {
        if (impl_->functionals.size() <= 1) return *this;
        return from_ball(dimension(), ball());
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < impl_->functionals.size(); ++i)
            s += (i ? ", " : "") + to_string(impl_->functionals[i]);
        return s + "]";
    }

private:
    struct Impl {
        std::size_t dimension = 0;
        std::vector<Vec> functionals;
        std::once_flag once;
        VForm ball;
    };
    std::shared_ptr<Impl> impl_;
};

using SeminormedSpace = PolyhedralSeminorm;

inline PolyhedralSeminorm scaled(const Rational& c, const PolyhedralSeminorm& p) {
    if (c < 0) throw std::domain_error("scaled: negative factor");
    std::vector<Vec> fs;
    for (const auto& a : p.functionals()) fs.push_back(c * a);
    return PolyhedralSeminorm(p.dimension(), std::move(fs));
}

/// x ↦ q(F x) on the source of F.
inline PolyhedralSeminorm pullback_seminorm(const Matrix& f, const PolyhedralSeminorm& q) {
    if (f.rows() != q.dimension()) throw DimensionError("pullback_seminorm: shape mismatch");
    Matrix ft = f.transpose();
    std::vector<Vec> fs;
    for (const auto& b : q.functionals()) fs.push_back(ft * b);
    return PolyhedralSeminorm(f.cols(), std::move(fs));
}

/// Pointwise maximum (the meet in the normal subobject lattice).
inline PolyhedralSeminorm meet_norm(const PolyhedralSeminorm& p, const PolyhedralSeminorm& q) {
    if (p.dimension() != q.dimension()) throw DimensionError("meet_norm: dimension mismatch");
    std::vector<Vec> fs = p.functionals();
    fs.insert(fs.end(), q.functionals().begin(), q.functionals().end());
    return PolyhedralSeminorm(p.dimension(), std::move(fs));
}

/// Infimal convolution (the join): unit ball is the hull of both balls.
inline PolyhedralSeminorm join_norm(const PolyhedralSeminorm& p, const PolyhedralSeminorm& q) {
    if (p.dimension() != q.dimension()) throw DimensionError("join_norm: dimension mismatch");
    VForm v = p.ball();
    v.vertices.insert(v.vertices.end(), q.ball().vertices.begin(), q.ball().vertices.end());
    v.lineality.insert(v.lineality.end(), q.ball().lineality.begin(), q.ball().lineality.end());
    return PolyhedralSeminorm::from_ball(p.dimension(), canonical(v, p.dimension()));
}

/// p(x) <= q(x) for all x, i.e. ball(q) ⊆ ball(p).
inline bool seminorm_leq(const PolyhedralSeminorm& p, const PolyhedralSeminorm& q) {
    if (p.dimension() != q.dimension()) throw DimensionError("seminorm_leq: dimension mismatch");
    const VForm& b = q.ball();
    for (const auto& l : b.lineality)
        if (p(l) != 0) return false;
    for (const auto& v : b.vertices)
        if (p(v) > 1) return false;
    return true;
}

inline bool seminorm_eq(const PolyhedralSeminorm& p, const PolyhedralSeminorm& q) {
    if (p.dimension() != q.dimension()) return false;
    if (p.functionals() == q.functionals()) return true;
    return seminorm_leq(p, q) && seminorm_leq(q, p);
}

/// sup{q(F x) : p(x) <= 1}; nullopt when unbounded.
inline std::optional<Rational> operator_norm(const Matrix& f, const PolyhedralSeminorm& p,
                                             const PolyhedralSeminorm& q) {
    if (f.cols() != p.dimension() || f.rows() != q.dimension())
        throw DimensionError("operator_norm: shape mismatch");
    const VForm& b = p.ball();
    for (const auto& l : b.lineality)
        if (q(f * l) != 0) return std::nullopt;
    Rational m = 0;
    for (const auto& v : b.vertices) m = std::max(m, q(f * v));
    return m;
}

/// A linear map between seminormed spaces of operator norm <= 1.
struct BoundedMap {
    Matrix matrix;
    PolyhedralSeminorm source;
    PolyhedralSeminorm target;

    /// Validates shapes and the norm bound.
    static BoundedMap checked(Matrix m, PolyhedralSeminorm source, PolyhedralSeminorm target) {
        if (m.cols() != source.dimension() || m.rows() != target.dimension())
            throw DimensionError("bounded map: matrix shape does not match the spaces");
        auto n = operator_norm(m, source, target);
        if (!n || *n > 1)
            throw std::domain_error("bounded map: operator norm " + (n ? to_string(*n) : std::string("infinite")) +
                                    " exceeds 1");
        return {std::move(m), std::move(source), std::move(target)};
    }
};

/// Column space of F together with null(q) spans the target.
inline bool essentially_surjective(const Matrix& f, const PolyhedralSeminorm& q) {
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < f.cols(); ++j) gens.push_back(f.col(j));
    for (auto& n : q.null_space()) gens.push_back(std::move(n));
    return span_basis(gens, q.dimension()).size() == q.dimension();
}

/// max(p, ε⁻¹ q∘F)
inline PolyhedralSeminorm eps_kernel_seminorm(const BoundedMap& f, const Rational& eps) {
    return meet_norm(f.source, scaled(1 / eps, pullback_seminorm(f.matrix, f.target))).reduced();
}

/// inf_x q(y − F x) + ε p(x): ball conv(W₁ ∪ ε⁻¹ F V₁).
inline PolyhedralSeminorm eps_cokernel_seminorm(const BoundedMap& f, const Rational& eps) {
    const std::size_t n = f.target.dimension();
    VForm v = f.target.ball();
    const VForm& src = f.source.ball();
    for (const auto& x : src.vertices) v.vertices.push_back((1 / eps) * (f.matrix * x));
    for (const auto& l : src.lineality) v.lineality.push_back(f.matrix * l);
    return PolyhedralSeminorm::from_ball(n, canonical(v, n));
}

/// max(q, inf_x ε⁻¹ q(y − F x) + p(x)); the second term has ball conv(ε W₁ ∪ F V₁).
inline PolyhedralSeminorm eps_image(const BoundedMap& f, const Rational& eps) {
    const std::size_t n = f.target.dimension();
    VForm v;
    for (const auto& y : f.target.ball().vertices) v.vertices.push_back(eps * y);
    v.lineality = f.target.ball().lineality;
    for (const auto& x : f.source.ball().vertices) v.vertices.push_back(f.matrix * x);
    for (const auto& l : f.source.ball().lineality) v.lineality.push_back(f.matrix * l);
    return meet_norm(f.target, PolyhedralSeminorm::from_ball(n, canonical(v, n))).reduced();
}

/// max(ε p, q∘F)
inline PolyhedralSeminorm eps_coimage(const BoundedMap& f, const Rational& eps) {
    return meet_norm(scaled(eps, f.source), pullback_seminorm(f.matrix, f.target)).reduced();
}

/// Value of the cokernel seminorm at y by one LP (epigraph form), independent of the hull route.
inline Rational cokernel_value_lp(const BoundedMap& f, const Rational& eps, const Vec& y) {
    const std::size_t n = f.source.dimension();
    // variables: x (n), s, t; minimize s + eps t
    LinearProgram lp;
    lp.objective = zeros(n + 2);
    lp.objective[n] = 1;
    lp.objective[n + 1] = eps;
    Matrix ft = f.matrix.transpose();
    for (const auto& b : f.target.functionals()) {
        Vec bf = ft * b;  // <b, F x>
        Rational by = dot(b, y);
        Vec row = zeros(n + 2);
        for (std::size_t i = 0; i < n; ++i) row[i] = bf[i];
        row[n] = 1;
        lp.add(row, Relation::GreaterEqual, by);  // s >= b(y) - b(Fx)
        for (std::size_t i = 0; i < n; ++i) row[i] = -bf[i];
        lp.add(row, Relation::GreaterEqual, -by);
    }
    for (const auto& a : f.source.functionals()) {
        Vec row = zeros(n + 2);
        for (std::size_t i = 0; i < n; ++i) row[i] = -a[i];
        row[n + 1] = 1;
        lp.add(row, Relation::GreaterEqual, 0);
        for (std::size_t i = 0; i < n; ++i) row[i] = a[i];
        lp.add(row, Relation::GreaterEqual, 0);
    }
    lp.add(unit_vector(n + 2, n), Relation::GreaterEqual, 0);
    lp.add(unit_vector(n + 2, n + 1), Relation::GreaterEqual, 0);
    auto r = lp_solve(lp);
    if (!r.optimal()) throw std::logic_error("cokernel_value_lp: LP not optimal");
    return r.value;
}

/// Inf form of the coimage seminorm at x: inf_x' p(x − x') + max(ε p(x'), q(F x')).
inline Rational coimage_inf_value_lp(const BoundedMap& f, const Rational& eps, const Vec& x) {
    const std::size_t n = f.source.dimension();
    // variables: x' (n), s, m; minimize s + m
    LinearProgram lp;
    lp.objective = zeros(n + 2);
    lp.objective[n] = 1;
    lp.objective[n + 1] = 1;
    auto abs_bound = [&](const Vec& a, const Rational& scale, std::size_t slot, const Rational& offset_sign) {
        // slot >= scale * |offset_sign * <a,x> - <a,x'>|  (offset_sign 1)  or  >= scale * |<a,x'>| (offset 0)
        Rational ax = offset_sign * dot(a, x);
        for (int sign : {1, -1}) {
            Vec row = zeros(n + 2);
            for (std::size_t i = 0; i < n; ++i) row[i] = scale * sign * a[i];
            row[slot] = 1;
            lp.add(row, Relation::GreaterEqual, scale * sign * ax);
        }
    };
    for (const auto& a : f.source.functionals()) {
        abs_bound(a, 1, n, 1);
        abs_bound(a, eps, n + 1, 0);
    }
    Matrix ft = f.matrix.transpose();
    for (const auto& b : f.target.functionals()) abs_bound(ft * b, 1, n + 1, 0);
    lp.add(unit_vector(n + 2, n), Relation::GreaterEqual, 0);
    lp.add(unit_vector(n + 2, n + 1), Relation::GreaterEqual, 0);
    auto r = lp_solve(lp);
    if (!r.optimal()) throw std::logic_error("coimage_inf_value_lp: LP not optimal");
    return r.value;
}

/// Quotient of a seminormed space by its null space, with mutually inverse isometries.
struct QuotientRealization {
    PolyhedralSeminorm space;
    BoundedMap to_quotient;
    BoundedMap from_quotient;
};

inline QuotientRealization quotient_normalize(const PolyhedralSeminorm& v) {
    const std::size_t n = v.dimension();
    if (v.functionals().empty()) {
        PolyhedralSeminorm z = PolyhedralSeminorm::zero(0);
        return {z, {Matrix(0, n), v, z}, {Matrix(n, 0), z, v}};
    }
    auto rows = row_space(v.functional_matrix());
    Matrix r = Matrix::from_rows(rows, n);
    Matrix rt = r.transpose();
    std::vector<Vec> coords;
    for (const auto& a : v.functionals()) {
        auto c = solve(rt, a);
        if (!c) throw std::logic_error("quotient_normalize: functional outside row space");
        coords.push_back(*c);
    }
    PolyhedralSeminorm q(rows.size(), std::move(coords));
    Matrix section = right_inverse(r);
    return {q, BoundedMap::checked(r, v, q), BoundedMap::checked(section, q, v)};
}

/// Band membership for the normal subobjects of (V, p): p <= s <= ε⁻¹ p.
inline bool in_nsb_band(const PolyhedralSeminorm& p, const PolyhedralSeminorm& s, const Rational& eps) {
    return seminorm_leq(p, s) && seminorm_leq(s, scaled(1 / eps, p));
}

/// Moves an arbitrary seminorm r into the band of (V, p).
inline PolyhedralSeminorm clip_to_band(const PolyhedralSeminorm& p, const PolyhedralSeminorm& r,
                                       const Rational& eps) {
    return join_norm(meet_norm(r, p), scaled(1 / eps, p));
}

/// The category Norm with null ideal {f : ‖f‖ <= ε}.
class Norm {
public:
    using Object = PolyhedralSeminorm;
    using Morphism = BoundedMap;

    explicit Norm(Rational eps) : eps_(std::move(eps)) {
        if (eps_ <= 0 || eps_ >= 1) throw std::domain_error("epsilon must lie strictly between 0 and 1");
    }

    const Rational& epsilon() const { return eps_; }

    Morphism identity(const Object& a) const { return {Matrix::identity(a.dimension()), a, a}; }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (f.target.dimension() != g.source.dimension()) throw DimensionError("compose: dimension mismatch");
        return {g.matrix * f.matrix, f.source, g.target};
    }

    const Object& domain(const Morphism& f) const { return f.source; }
    const Object& codomain(const Morphism& f) const { return f.target; }

    bool is_null(const Morphism& f) const {
        auto n = operator_norm(f.matrix, f.source, f.target);
        return n && *n <= eps_;
    }

    Morphism kernel(const Morphism& f) const {
        return {Matrix::identity(f.source.dimension()), eps_kernel_seminorm(f, eps_), f.source};
    }

    Morphism cokernel(const Morphism& f) const {
        return {Matrix::identity(f.target.dimension()), f.target, eps_cokernel_seminorm(f, eps_)};
    }

    bool same_object(const Object& a, const Object& b) const { return seminorm_eq(a, b); }

    /// f ~ g iff q(F x − G x) = 0 for all x.
    bool equal(const Morphism& f, const Morphism& g) const {
        if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols()) return false;
        if (!same_object(f.source, g.source) || !same_object(f.target, g.target)) return false;
        Matrix diff = f.matrix - g.matrix;
        Matrix dt = diff.transpose();
        for (const auto& b : f.target.functionals())
            if (!is_zero(dt * b)) return false;
        return true;
    }

    bool is_mono(const Morphism& f) const {
        PolyhedralSeminorm pulled = pullback_seminorm(f.matrix, f.target);
        for (const auto& v : pulled.null_space())
            if (f.source(v) != 0) return false;
        return true;
    }

    bool is_epi(const Morphism& f) const { return essentially_surjective(f.matrix, f.target); }

    bool is_isomorphism(const Morphism& f) const {
        return is_epi(f) && seminorm_eq(f.source, pullback_seminorm(f.matrix, f.target));
    }

    /// h with m∘h ~ p and ‖h‖ <= 1, for a mono m.
    std::optional<Morphism> factor_through_mono(const Morphism& m, const Morphism& p) const {
        if (m.matrix.rows() != p.matrix.rows()) throw DimensionError("factor_through_mono: codomain mismatch");
        const std::size_t rows = m.matrix.cols(), cols = p.matrix.cols();
        if (m.target.functionals().empty()) return bounded({Matrix(rows, cols), p.source, m.source});
        Matrix qa = Matrix::from_rows(row_space(m.target.functional_matrix()), m.target.dimension());
        auto h = solve(qa * m.matrix, qa * p.matrix);
        if (!h) return std::nullopt;
        return bounded({*h, p.source, m.source});
    }

    /// h with h∘e ~ p and ‖h‖ <= 1, for an epi e.
    std::optional<Morphism> factor_through_epi(const Morphism& e, const Morphism& p) const {
        if (e.matrix.cols() != p.matrix.cols()) throw DimensionError("factor_through_epi: domain mismatch");
        const std::size_t ny = p.target.dimension(), nx = e.target.dimension();
        if (p.target.functionals().empty()) return bounded({Matrix(ny, nx), e.target, p.target});
        Matrix qy = Matrix::from_rows(row_space(p.target.functional_matrix()), ny);
        auto nulls = e.target.null_space();
        Matrix lhs = e.matrix;
        Matrix rhs = qy * p.matrix;
        if (!nulls.empty()) {
            lhs = hstack(lhs, Matrix::from_columns(nulls, nx));
            rhs = hstack(rhs, Matrix(qy.rows(), nulls.size()));
        }
        // G lhs = rhs  <=>  lhsᵀ Gᵀ = rhsᵀ
        auto gt = solve(lhs.transpose(), rhs.transpose());
        if (!gt) return std::nullopt;
        Matrix h = right_inverse(qy) * gt->transpose();
        return bounded({h, e.target, p.target});
    }

    Object zero_object() const { return PolyhedralSeminorm::zero(0); }

    Morphism zero_morphism(const Object& a, const Object& b) const {
        return {Matrix(b.dimension(), a.dimension()), a, b};
    }

    std::string null_certificate(const Morphism& f) const {
        auto n = operator_norm(f.matrix, f.source, f.target);
        std::string v = n ? to_string(*n) : std::string("infinite");
        return "operator norm " + v + (n && *n <= eps_ ? " <= " : " > ") + "epsilon " + to_string(eps_);
    }

    std::string describe(const Object& a) const {
        return "(Q^" + std::to_string(a.dimension()) + ", " + a.str() + ")";
    }

    std::string describe(const Morphism& f) const {
        return f.matrix.str() + " : " + describe(f.source) + " -> " + describe(f.target);
    }

private:
    static std::optional<Morphism> bounded(Morphism h) {
        auto n = operator_norm(h.matrix, h.source, h.target);
        if (!n || *n > 1) return std::nullopt;
        return h;
    }

    Rational eps_;
};

/// Mono/epi/balanced characterization: essentially surjective and ε p <= q∘F.
inline bool is_normal(const BoundedMap& f, const Rational& eps) {
    return essentially_surjective(f.matrix, f.target) &&
           seminorm_leq(scaled(eps, f.source), pullback_seminorm(f.matrix, f.target));
}

/// The three norms, the evaluation point and both lattice expressions.
struct ModularityCounterexample {
    PolyhedralSeminorm s1, t, s2;
    Vec point;
    Rational left;   // (s1 ∨ (t ∧ s2))(point)
    Rational right;  // ((s1 ∨ t) ∧ s2)(point)
};

inline PolyhedralSeminorm scaled_l1(std::size_t n, const Rational& c) {
    std::vector<Vec> fs;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        Vec a(n, c);
        for (std::size_t i = 1; i < n; ++i)
            if (mask >> (i - 1) & 1) a[i] = -c;
        fs.push_back(std::move(a));
    }
    return PolyhedralSeminorm(n, std::move(fs));
}

inline PolyhedralSeminorm scaled_linf(std::size_t n, const Rational& c) {
    std::vector<Vec> fs;
    for (std::size_t i = 0; i < n; ++i) fs.push_back(c * unit_vector(n, i));
    return PolyhedralSeminorm(n, std::move(fs));
}

inline ModularityCounterexample modularity_counterexample(const PolyhedralSeminorm& s1, const PolyhedralSeminorm& t,
                                                          const PolyhedralSeminorm& s2, const Vec& point) {
    PolyhedralSeminorm left = join_norm(s1, meet_norm(t, s2));
    PolyhedralSeminorm right = meet_norm(join_norm(s1, t), s2);
    return {s1, t, s2, point, left(point), right(point)};
}

inline ModularityCounterexample modularity_counterexample() {
    return modularity_counterexample(scaled_l1(2, Rational(1, 4)), scaled_linf(2, Rational(1, 3)),
                                     scaled_l1(2, Rational(1, 5)), Vec{Rational(7, 2), Rational(3, 2)});
}

}  // namespace curvlab
