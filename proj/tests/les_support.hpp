#pragma once

// Random short exact sequences of finite abelian group complexes and a brute-force
// snake-lemma oracle working on element tables only.

#include "curvlab/complex.hpp"
#include "curvlab/group.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace lesfix {

using namespace curvlab;

inline const std::vector<std::string>& small_abelian_names() {
    static const std::vector<std::string> names = {"1", "Z2", "Z3", "Z4", "Z2xZ2", "Z6", "Z8", "Z2xZ4", "Z2xZ2xZ2", "Z4xZ4", "Z2xZ8"};
    return names;
}

inline int pick(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

/// D_n from groups of order <= 16, N_n a random subgroup, d^D chosen among homs that square to zero and
/// preserve N; the sequence is N -> D -> D/N.
inline ShortExactSequence<Grp> random_abelian_ses(const Grp& cat, std::mt19937_64& rng, int max_length = 5) {
    const int length = 2 + pick(rng, max_length - 1);
    std::vector<FinGroup> d;
    std::vector<ElementSet> n;
    for (int k = 0; k < length; ++k) {
        d.push_back(group_by_name(small_abelian_names()[static_cast<std::size_t>(pick(rng, static_cast<int>(small_abelian_names().size())))]));
        auto subs = nsb_enumerate(d.back());
        n.push_back(subs[static_cast<std::size_t>(pick(rng, static_cast<int>(subs.size())))]);
    }
    std::vector<GroupHom> diffs;
    for (int k = 1; k < length; ++k) {
        std::vector<GroupHom> ok;
        for (auto& h : enumerate_homs(d[k], d[k - 1])) {
            bool preserves = true;
            for (auto x : n[k]) preserves = preserves && std::binary_search(n[k - 1].begin(), n[k - 1].end(), h(x));
            if (!preserves) continue;
            if (!diffs.empty() && !cat.is_null(cat.compose(diffs.back(), h))) continue;
            ok.push_back(h);
        }
        // favour nonzero differentials when there are any
        std::vector<GroupHom> nonzero;
        for (auto& h : ok)
            if (!cat.is_null(h)) nonzero.push_back(h);
        auto& from = (!nonzero.empty() && pick(rng, 4) > 0) ? nonzero : ok;
        diffs.push_back(from[static_cast<std::size_t>(pick(rng, static_cast<int>(from.size())))]);
    }
    auto dcx = make_complex(cat, 0, d, diffs);
    std::vector<GroupHom> quotients;
    for (int k = 0; k < length; ++k) quotients.push_back(cat.quotient_map(d[static_cast<std::size_t>(k)], n[static_cast<std::size_t>(k)]));
    return ses_from_quotients(cat, dcx, quotients);
}

/// x -> x^k, an endomorphism of any abelian group commuting with every homomorphism.
inline GroupHom power_map(const FinGroup& g, int k) {
    std::vector<Element> map(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        Element y = 0;
        for (int j = 0; j < k; ++j) y = g.mul(y, static_cast<Element>(x));
        map[x] = y;
    }
    return {g, g, std::move(map)};
}

inline SesMorphism<Grp> power_morphism(const ShortExactSequence<Grp>& s, int k) {
    SesMorphism<Grp> m;
    for (std::size_t j = 0; j < s.d.objects.size(); ++j) {
        m.alpha.push_back(power_map(s.c.objects[j], k));
        m.beta.push_back(power_map(s.d.objects[j], k));
        m.gamma.push_back(power_map(s.e.objects[j], k));
    }
    return m;
}

/// The classical long exact sequence, computed from element tables.
class SnakeOracle {
public:
    struct RawComplex {
        std::vector<FinGroup> groups;                 // degree lo + k
        std::vector<std::vector<Element>> diffs;      // diffs[k] = d_{lo+k+1} : groups[k+1] -> groups[k]
    };

    explicit SnakeOracle(const ShortExactSequence<Grp>& s) : lo_(s.d.lo) {
        for (const auto* cx : {&s.c, &s.d, &s.e}) {
            RawComplex r;
            r.groups = cx->objects;
            for (const auto& d : cx->differentials) r.diffs.push_back(d.map);
            raw_.push_back(std::move(r));
        }
        for (const auto& m : s.i) i_.push_back(m.map);
        for (const auto& m : s.q) q_.push_back(m.map);
    }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(raw_[1].groups.size()) - 1; }

    /// Class of x in H_n of complex w (0 = C, 1 = D, 2 = E): the least element of the coset x B_n.
    Element cls(int w, int n, Element x) const {
        const auto& g = group(w, n);
        Element best = x;
        for (auto b : boundaries(w, n)) best = std::min(best, g.mul(x, b));
        return best;
    }

    bool is_cycle(int w, int n, Element x) const { return apply_d(w, n, x) == 0; }

    /// Distinct homology classes of H_n.
    std::set<Element> classes(int w, int n) const {
        std::set<Element> out;
        if (!in_window(n)) return {0};
        for (std::size_t x = 0; x < group(w, n).order(); ++x)
            if (is_cycle(w, n, static_cast<Element>(x))) out.insert(cls(w, n, static_cast<Element>(x)));
        return out;
    }

    Element map_i(int n, Element c) const { return cls(1, n, i_[idx(n)][c]); }
    Element map_q(int n, Element y) const { return cls(2, n, q_[idx(n)][y]); }

    /// Connecting map on a cycle z of E_n: lift to D_n, apply d, pull back along i_{n-1}.
    Element delta(int n, Element z) const {
        if (!in_window(n) || !in_window(n - 1)) return 0;
        const auto& q = q_[idx(n)];
        for (std::size_t y = 0; y < q.size(); ++y) {
            if (q[y] != z) continue;
            Element w = apply_d(1, n, static_cast<Element>(y));
            const auto& i = i_[idx(n - 1)];
            for (std::size_t c = 0; c < i.size(); ++c)
                if (i[c] == w) return cls(0, n - 1, static_cast<Element>(c));
            return -1;
        }
        return -1;
    }

private:
    bool in_window(int n) const { return n >= lo_ && n <= hi(); }
    std::size_t idx(int n) const { return static_cast<std::size_t>(n - lo_); }

    const FinGroup& group(int w, int n) const { return raw_[static_cast<std::size_t>(w)].groups[idx(n)]; }

    Element apply_d(int w, int n, Element x) const {
        if (!in_window(n - 1)) return 0;
        return raw_[static_cast<std::size_t>(w)].diffs[idx(n) - 1][x];
    }

    std::set<Element> boundaries(int w, int n) const {
        std::set<Element> out{0};
        if (!in_window(n + 1)) return out;
        for (auto y : raw_[static_cast<std::size_t>(w)].diffs[idx(n)]) out.insert(y);
        return out;
    }

    int lo_;
    std::vector<RawComplex> raw_;
    std::vector<std::vector<Element>> i_, q_;
};

/// Compares an assembled long sequence with the oracle: every node's structure map has the same
/// fibres as the classical class map and hits every class, and every link agrees with the
/// classical map on classes. Returns the list of mismatches.
inline std::vector<std::string> compare_with_snake(const ShortExactSequence<Grp>& s, const LongExactSequence<Grp>& les) {
    SnakeOracle o(s);
    std::vector<std::string> bad;
    auto which = [](char c) { return c == 'C' ? 0 : c == 'D' ? 1 : 2; };
    // classical class of the top element k of a node
    auto classical = [&](std::size_t node, Element k) -> Element {
        const auto& nd = les.nodes[node];
        int n = nd.degree;
        if (n < o.lo() || n > o.hi()) return 0;
        Element x = nd.homology.cycles(k);
        if (nd.complex == 'E') return o.cls(2, n, s.q[static_cast<std::size_t>(n - o.lo())](x));
        return o.cls(which(nd.complex), n, x);
    };
    for (std::size_t node = 0; node < les.nodes.size(); ++node) {
        const auto& nd = les.nodes[node];
        const auto& a = nd.homology.object.arrow;
        std::map<Element, Element> by_structure, by_class;
        std::set<Element> hit;
        for (std::size_t k = 0; k < a.source.order(); ++k) {
            Element c = classical(node, static_cast<Element>(k));
            Element st = a(static_cast<Element>(k));
            hit.insert(c);
            auto [it1, new1] = by_structure.emplace(st, c);
            auto [it2, new2] = by_class.emplace(c, st);
            if ((!new1 && it1->second != c) || (!new2 && it2->second != st))
                bad.push_back(les.node_name(node) + ": structure map and classical classes disagree");
        }
        int w = which(nd.complex);
        int n = nd.degree;
        if (hit != o.classes(w, n)) bad.push_back(les.node_name(node) + ": classical classes not all reached");
    }
    for (std::size_t l = 0; l < les.links.size(); ++l) {
        const auto& link = les.links[l];
        if (!link.map) {
            bad.push_back(link.name + ": missing");
            continue;
        }
        const auto& from = les.nodes[l];
        int n = from.degree;
        for (std::size_t k = 0; k < link.map->top.map.size(); ++k) {
            Element src = classical(l, static_cast<Element>(k));
            Element dst = classical(l + 1, link.map->top(static_cast<Element>(k)));
            Element expect;
            if (n < o.lo() || n > o.hi())
                expect = 0;
            else if (from.complex == 'C')
                expect = o.map_i(n, from.homology.cycles(static_cast<Element>(k)));
            else if (from.complex == 'D')
                expect = o.map_q(n, from.homology.cycles(static_cast<Element>(k)));
            else
                expect = o.delta(n, s.q[static_cast<std::size_t>(n - o.lo())](from.homology.cycles(static_cast<Element>(k))));
            (void)src;
            if (expect != dst) {
                bad.push_back(link.name + ": disagrees with the classical map");
                break;
            }
        }
    }
    return bad;
}

}  // namespace lesfix
