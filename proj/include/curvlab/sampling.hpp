#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded random generators of objects and morphisms for each backend.
 *
 * Every sampler offers object(), morphism(), morphism_into(A) and
 * morphism_out_of(A). The last two are what the axiom checks need to build
 * test morphisms p with f p null (p = g iker(f g)) and the like.
 */

#include "curvlab/arrow.hpp"
#include "curvlab/group.hpp"
#include "curvlab/seminorm.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace curvlab {

class NormSampler {
public:
    NormSampler(const Norm& cat, std::uint64_t seed, std::size_t max_dim = 3)
        : cat_(cat), rng_(seed), max_dim_(max_dim) {}

    std::mt19937_64& engine() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational small_rational(int span = 2, int max_den = 2) {
        Rational r(uniform(-span * max_den, span * max_den), uniform(1, max_den));
        r.canonicalize();
        return r;
    }

    /// One to three functionals; occasionally degenerate (nontrivial null space).
    PolyhedralSeminorm seminorm(std::size_t dim) {
        int k = uniform(1, 3);
        std::vector<Vec> fs;
        for (int i = 0; i < k; ++i) {
            Vec a(dim);
            for (auto& x : a) x = small_rational();
            fs.push_back(std::move(a));
        }
        if (uniform(0, 5) > 0)
            for (std::size_t i = 0; i < dim; ++i) fs.push_back(Rational(1, uniform(1, 3)) * unit_vector(dim, i));
        return PolyhedralSeminorm(dim, std::move(fs)).reduced();
    }

    std::size_t dimension() { return static_cast<std::size_t>(uniform(1, static_cast<int>(max_dim_))); }

    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(2, 1);
        return m;
    }

    PolyhedralSeminorm object() { return seminorm(dimension()); }

    /// G : X -> A with X carrying max(r, q_A∘G), so ‖G‖ <= 1.
    BoundedMap morphism_into(const PolyhedralSeminorm& a) {
        std::size_t n = dimension();
        Matrix g = matrix(a.dimension(), n);
        PolyhedralSeminorm src = meet_norm(seminorm(n), pullback_seminorm(g, a)).reduced();
        return {std::move(g), std::move(src), a};
    }

    /// G : A -> Y with Y's ball the hull of a random ball and G(ball A), so ‖G‖ <= 1.
    BoundedMap morphism_out_of(const PolyhedralSeminorm& a) {
        std::size_t m = dimension();
        Matrix g = matrix(m, a.dimension());
        PolyhedralSeminorm r = seminorm(m);
        VForm v = r.ball();
        for (const auto& x : a.ball().vertices) v.vertices.push_back(g * x);
        for (const auto& l : a.ball().lineality) v.lineality.push_back(g * l);
        auto tgt = PolyhedralSeminorm::from_ball(m, canonical(v, m));
        return {std::move(g), a, std::move(tgt)};
    }

    BoundedMap morphism() { return morphism_out_of(object()); }

    /// A member of the normal subobject band of (V, p).
    PolyhedralSeminorm band_member(const PolyhedralSeminorm& p) {
        return clip_to_band(p, seminorm(p.dimension()), cat_.epsilon()).reduced();
    }

    const Norm& category() const { return cat_; }

private:
    Norm cat_;
    std::mt19937_64 rng_;
    std::size_t max_dim_;
};

/// Pool of groups of order <= 24 (or only the abelian ones).
inline std::vector<FinGroup> group_pool(bool abelian_only = false) {
    std::vector<std::string> names = {"1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z8", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3"};
    if (!abelian_only)
        for (const char* n : {"S3", "D4", "A4", "D6", "S4"}) names.push_back(n);
    std::vector<FinGroup> pool;
    for (const auto& n : names) pool.push_back(group_by_name(n));
    return pool;
}

class GrpSampler {
public:
    GrpSampler(const Grp& cat, std::uint64_t seed, bool abelian_only = false, std::size_t max_order = 24)
        : cat_(cat), rng_(seed) {
        for (auto& g : group_pool(abelian_only))
            if (g.order() <= max_order) pool_.push_back(g);
    }

    std::mt19937_64& engine() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    FinGroup object() { return pool_[static_cast<std::size_t>(uniform(0, static_cast<int>(pool_.size()) - 1))]; }

    /// A uniformly chosen hom g -> h when the search space is small, else random generator images.
    GroupHom random_hom(const FinGroup& g, const FinGroup& h) {
        ElementSet gens = generating_set(g);
        double space = 1;
        for (std::size_t k = 0; k < gens.size(); ++k) space *= static_cast<double>(h.order());
        if (space <= 4096) {
            auto homs = enumerate_homs(g, h);
            return homs[static_cast<std::size_t>(uniform(0, static_cast<int>(homs.size()) - 1))];
        }
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<Element> images;
            for (std::size_t k = 0; k < gens.size(); ++k)
                images.push_back(static_cast<Element>(uniform(0, static_cast<int>(h.order()) - 1)));
            if (auto f = extend_hom(g, h, gens, images)) return *f;
        }
        return cat_.zero_morphism(g, h);
    }

    GroupHom morphism_into(const FinGroup& a) { return random_hom(object(), a); }
    GroupHom morphism_out_of(const FinGroup& a) { return random_hom(a, object()); }
    GroupHom morphism() { return morphism_out_of(object()); }

    const std::vector<FinGroup>& pool() const { return pool_; }

private:
    Grp cat_;
    std::mt19937_64 rng_;
    std::vector<FinGroup> pool_;
};

/// Squares into and out of a given arrow object, built from base samples.
template <NullCategory B, class BaseSampler>
class ArrowSampler {
public:
    using Cat = ArrowCategory<B>;

    ArrowSampler(const Cat& cat, BaseSampler& base) : cat_(cat), base_(base) {}

    std::mt19937_64& engine() { return base_.engine(); }

    typename Cat::Object object() { return {base_.morphism()}; }

    typename Cat::Morphism morphism_into(const typename Cat::Object& a) {
        const B& b = cat_.base();
        auto g = base_.morphism_into(b.domain(a.arrow));  // X0 -> A0
        switch (pick(3)) {
            case 0:  // (g, a) : g -> a
                return {{g}, a, g, a.arrow};
            case 1:  // (g, a g) : id -> a
                return {{b.identity(b.domain(g))}, a, g, b.compose(a.arrow, g)};
            default:  // (g, id) : a g -> a
                return {{b.compose(a.arrow, g)}, a, g, b.identity(b.codomain(a.arrow))};
        }
    }

    typename Cat::Morphism morphism_out_of(const typename Cat::Object& a) {
        const B& b = cat_.base();
        auto g = base_.morphism_out_of(b.codomain(a.arrow));  // A1 -> Y
        switch (pick(3)) {
            case 0:  // (a, g) : a -> g
                return {a, {g}, a.arrow, g};
            case 1:  // (g a, g) : a -> id
                return {a, {b.identity(b.codomain(g))}, b.compose(g, a.arrow), g};
            default:  // (id, g) : a -> g a
                return {a, {b.compose(g, a.arrow)}, b.identity(b.domain(a.arrow)), g};
        }
    }

    typename Cat::Morphism morphism() { return morphism_out_of(object()); }

private:
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(base_.engine()); }

    const Cat& cat_;
    BaseSampler& base_;
};

}  // namespace curvlab
