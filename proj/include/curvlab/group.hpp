#pragma once

/**
 * @file group.hpp
 * @brief Finite groups as multiplication tables; the category of groups with
 *        the trivial homomorphisms as null ideal.
 *
 * Element 0 is always the identity. Orders are capped (120 by default) so that
 * the exhaustive searches behind factorizations and hom enumeration stay fast.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvlab {

struct GroupError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kMaxGroupOrder = 120;

class FinGroup {
public:
    using Element = int;

    FinGroup() : FinGroup(trivial()) {}

    /// Validates associativity, the identity at index 0, and inverses.
    static FinGroup from_table(std::string name, std::vector<std::vector<Element>> table,
                               std::vector<std::string> labels = {}) {
        const std::size_t n = table.size();
        if (n == 0) throw GroupError("group table is empty");
        if (n > kMaxGroupOrder) throw GroupError("group order " + std::to_string(n) + " exceeds the cap");
        for (const auto& row : table) {
            if (row.size() != n) throw GroupError("group table is not square");
            for (auto x : row)
                if (x < 0 || static_cast<std::size_t>(x) >= n) throw GroupError("group table entry out of range");
        }
        for (std::size_t a = 0; a < n; ++a)
            if (table[0][a] != static_cast<Element>(a) || table[a][0] != static_cast<Element>(a))
                throw GroupError("element 0 is not an identity");
        std::vector<Element> inverse(n, -1);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                if (table[a][b] == 0) {
                    inverse[a] = static_cast<Element>(b);
                    break;
                }
            if (inverse[a] < 0 || table[inverse[a]][a] != 0) throw GroupError("element without a two-sided inverse");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table[table[a][b]][c] != table[a][table[b][c]]) throw GroupError("group law is not associative");
        if (labels.empty()) {
            labels.push_back("e");
            for (std::size_t a = 1; a < n; ++a) labels.push_back("g" + std::to_string(a));
        }
        if (labels.size() != n) throw GroupError("label count differs from group order");
        auto d = std::make_shared<Data>();
        d->name = std::move(name);
        d->table = std::move(table);
        d->inverse = std::move(inverse);
        d->labels = std::move(labels);
        return FinGroup(std::move(d));
    }

    static FinGroup trivial() {
        auto d = std::make_shared<Data>();
        d->name = "1";
        d->table = {{0}};
        d->inverse = {0};
        d->labels = {"e"};
        return FinGroup(std::move(d));
    }

    static FinGroup cyclic(std::size_t n) {
        if (n == 0) throw GroupError("cyclic group of order 0");
        std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
        std::vector<std::string> labels;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
            labels.push_back(a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a));
        }
        return from_table("Z" + std::to_string(n), std::move(t), std::move(labels));
    }

    /// Symmetries of the regular n-gon, order 2n; elements r^k and s r^k.
    static FinGroup dihedral(std::size_t n) {
        if (n < 1) throw GroupError("dihedral group needs n >= 1");
        const std::size_t order = 2 * n;
        auto idx = [n](std::size_t s, std::size_t k) { return static_cast<Element>(s * n + k % n); };
        std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
        std::vector<std::string> labels;
        for (std::size_t s1 = 0; s1 < 2; ++s1)
            for (std::size_t k1 = 0; k1 < n; ++k1) {
                std::string r = k1 == 0 ? "" : k1 == 1 ? "r" : "r^" + std::to_string(k1);
                labels.push_back(s1 ? "s" + r : (k1 == 0 ? "e" : r));
                for (std::size_t s2 = 0; s2 < 2; ++s2)
                    for (std::size_t k2 = 0; k2 < n; ++k2) {
                        // (s^a r^i)(s^b r^j) = s^(a+b) r^(j + (-1)^b i)
                        std::size_t k = s2 ? (k2 + n - k1) : (k1 + k2);
                        t[idx(s1, k1)][idx(s2, k2)] = idx((s1 + s2) % 2, k);
                    }
            }
        return from_table("D" + std::to_string(n), std::move(t), std::move(labels));
    }

    /// Permutations of {1..n} in lexicographic order, composed right to left.
    static FinGroup symmetric(std::size_t n) {
        if (n < 1 || n > 5) throw GroupError("symmetric groups are supported for n <= 5");
        std::vector<std::vector<int>> perms;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::map<std::vector<int>, Element> index;
        for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
        std::vector<std::vector<Element>> t(perms.size(), std::vector<Element>(perms.size()));
        for (std::size_t a = 0; a < perms.size(); ++a)
            for (std::size_t b = 0; b < perms.size(); ++b) {
                std::vector<int> c(n);
                for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
                t[a][b] = index[c];
            }
        std::vector<std::string> labels;
        for (const auto& q : perms) labels.push_back(cycle_notation(q));
        return from_table("S" + std::to_string(n), std::move(t), std::move(labels));
    }

    static FinGroup product(const FinGroup& g, const FinGroup& h) {
        const std::size_t n = g.order(), m = h.order();
        std::vector<std::vector<Element>> t(n * m, std::vector<Element>(n * m));
        std::vector<std::string> labels;
        for (std::size_t a = 0; a < n * m; ++a) {
            labels.push_back("(" + g.label(static_cast<Element>(a / m)) + "," + h.label(static_cast<Element>(a % m)) + ")");
            for (std::size_t b = 0; b < n * m; ++b)
                t[a][b] = static_cast<Element>(
                    static_cast<std::size_t>(g.mul(static_cast<Element>(a / m), static_cast<Element>(b / m))) * m +
                    static_cast<std::size_t>(h.mul(static_cast<Element>(a % m), static_cast<Element>(b % m))));
        }
        labels[0] = "e";
        return from_table(g.name() + "x" + h.name(), std::move(t), std::move(labels));
    }

    /// Subgroup on the given elements (must contain the identity and be closed), keeping labels.
    static FinGroup subgroup(const FinGroup& g, const std::vector<Element>& elements, std::string name = {}) {
        std::vector<Element> els = elements;
        std::sort(els.begin(), els.end());
        els.erase(std::unique(els.begin(), els.end()), els.end());
        if (els.empty() || els[0] != 0) throw GroupError("subgroup must contain the identity");
        std::map<Element, Element> pos;
        for (std::size_t i = 0; i < els.size(); ++i) pos[els[i]] = static_cast<Element>(i);
        std::vector<std::vector<Element>> t(els.size(), std::vector<Element>(els.size()));
        std::vector<std::string> labels;
        for (std::size_t a = 0; a < els.size(); ++a) {
            labels.push_back(g.label(els[a]));
            for (std::size_t b = 0; b < els.size(); ++b) {
                auto it = pos.find(g.mul(els[a], els[b]));
                if (it == pos.end()) throw GroupError("subgroup is not closed under multiplication");
                t[a][b] = it->second;
            }
        }
        if (name.empty()) name = g.name() + "_sub" + std::to_string(els.size());
        return from_table(std::move(name), std::move(t), std::move(labels));
    }

    std::size_t order() const { return d_->table.size(); }
    const std::string& name() const { return d_->name; }
    Element identity() const { return 0; }
    Element mul(Element a, Element b) const { return d_->table[a][b]; }
    Element inv(Element a) const { return d_->inverse[a]; }
    Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
    const std::string& label(Element a) const { return d_->labels[a]; }
    const std::vector<std::vector<Element>>& table() const { return d_->table; }
    const std::vector<std::string>& labels() const { return d_->labels; }

    std::optional<Element> find(const std::string& label) const {
        for (std::size_t i = 0; i < order(); ++i)
            if (d_->labels[i] == label) return static_cast<Element>(i);
        return std::nullopt;
    }

    bool is_abelian() const {
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (d_->table[a][b] != d_->table[b][a]) return false;
        return true;
    }

    /// Structural equality of the group laws (labels are presentation only).
    bool same_as(const FinGroup& o) const { return d_ == o.d_ || d_->table == o.d_->table; }

    static std::string cycle_notation(const std::vector<int>& perm) {
        std::vector<bool> seen(perm.size(), false);
        std::string out;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i] || perm[i] == static_cast<int>(i)) continue;
            out += '(';
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
                seen[j] = true;
                out += std::to_string(j + 1);
            }
            out += ')';
        }
        return out.empty() ? "e" : out;
    }

private:
    struct Data {
        std::string name;
        std::vector<std::vector<Element>> table;
        std::vector<Element> inverse;
        std::vector<std::string> labels;
    };
    explicit FinGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

using Element = FinGroup::Element;

/// Sorted element set of a subgroup.
using ElementSet = std::vector<Element>;

inline ElementSet generated_subgroup(const FinGroup& g, const ElementSet& gens) {
    std::vector<bool> in(g.order(), false);
    ElementSet members{0};
    in[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (auto s : gens) {
            Element y = g.mul(members[i], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

/// Smallest normal subgroup containing s: conjugate-and-generate until nothing changes.
inline ElementSet normal_closure(const FinGroup& g, const ElementSet& s) {
    ElementSet current = generated_subgroup(g, s);
    for (;;) {
        ElementSet gens = current;
        for (std::size_t x = 0; x < g.order(); ++x)
            for (auto y : current) gens.push_back(g.conj(static_cast<Element>(x), y));
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        ElementSet next = generated_subgroup(g, gens);
        if (next == current) return current;
        current = std::move(next);
    }
}

inline bool is_normal_subset(const FinGroup& g, const ElementSet& n) {
    std::vector<bool> in(g.order(), false);
    for (auto x : n) in[x] = true;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (auto y : n)
            if (!in[g.conj(static_cast<Element>(x), y)]) return false;
    return true;
}

struct GroupHom {
    FinGroup source;
    FinGroup target;
    std::vector<Element> map;

    Element operator()(Element x) const { return map[x]; }

    /// Validates that map is a homomorphism.
    static GroupHom checked(FinGroup source, FinGroup target, std::vector<Element> map) {
        if (map.size() != source.order()) throw GroupError("homomorphism: map length differs from source order");
        for (auto y : map)
            if (y < 0 || static_cast<std::size_t>(y) >= target.order()) throw GroupError("homomorphism: image out of range");
        for (std::size_t a = 0; a < source.order(); ++a)
            for (std::size_t b = 0; b < source.order(); ++b)
                if (map[source.mul(static_cast<Element>(a), static_cast<Element>(b))] != target.mul(map[a], map[b]))
                    throw GroupError("map is not a homomorphism: fails at (" + source.label(static_cast<Element>(a)) +
                                     ", " + source.label(static_cast<Element>(b)) + ")");
        return {std::move(source), std::move(target), std::move(map)};
    }

    ElementSet image_set() const {
        ElementSet s(map.begin(), map.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    ElementSet kernel_set() const {
        ElementSet k;
        for (std::size_t x = 0; x < map.size(); ++x)
            if (map[x] == 0) k.push_back(static_cast<Element>(x));
        return k;
    }
};

/// Greedy generating set: each new generator lies outside the subgroup of the previous ones.
inline ElementSet generating_set(const FinGroup& g) {
    ElementSet gens;
    std::vector<bool> in(g.order(), false);
    in[0] = true;
    for (std::size_t x = 1; x < g.order(); ++x) {
        if (in[x]) continue;
        gens.push_back(static_cast<Element>(x));
        for (auto y : generated_subgroup(g, gens)) in[y] = true;
    }
    return gens;
}

/// Extends generator images to a homomorphism, or nullopt when the images violate a relation.
inline std::optional<GroupHom> extend_hom(const FinGroup& g, const FinGroup& h, const ElementSet& gens,
                                          const std::vector<Element>& images) {
    std::vector<Element> map(g.order(), -1);
    map[0] = 0;
    std::vector<Element> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Element x = queue[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Element y = g.mul(x, gens[k]);
            Element v = h.mul(map[x], images[k]);
            if (map[y] < 0) {
                map[y] = v;
                queue.push_back(y);
            } else if (map[y] != v) {
                return std::nullopt;
            }
        }
    }
    for (auto v : map)
        if (v < 0) return std::nullopt;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (map[g.mul(static_cast<Element>(a), static_cast<Element>(b))] != h.mul(map[a], map[b]))
                return std::nullopt;
    return GroupHom{g, h, std::move(map)};
}

/// All homomorphisms g -> h, up to cap (the trivial one first).
inline std::vector<GroupHom> enumerate_homs(const FinGroup& g, const FinGroup& h, std::size_t cap = 100000) {
    ElementSet gens = generating_set(g);
    // generator images must have order dividing the generator's order
    auto elem_order = [](const FinGroup& grp, Element x) {
        std::size_t k = 1;
        for (Element y = x; y != 0; y = grp.mul(y, x)) ++k;
        return k;
    };
    std::vector<ElementSet> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t og = elem_order(g, gens[k]);
        for (std::size_t y = 0; y < h.order(); ++y)
            if (og % elem_order(h, static_cast<Element>(y)) == 0) candidates[k].push_back(static_cast<Element>(y));
    }
    std::vector<GroupHom> out;
    std::vector<std::size_t> pick(gens.size(), 0);
    for (;;) {
        std::vector<Element> images(gens.size());
        for (std::size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][pick[k]];
        if (auto f = extend_hom(g, h, gens, images)) {
            out.push_back(std::move(*f));
            if (out.size() >= cap) break;
        }
        std::size_t k = 0;
        while (k < gens.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
        if (k == gens.size()) break;
    }
    return out;
}

/// Sign homomorphism S_n -> Z2.
inline GroupHom sign_hom(const FinGroup& sn, const FinGroup& z2) {
    std::vector<Element> map(sn.order());
    for (std::size_t x = 0; x < sn.order(); ++x) {
        // parity from cycle notation: a k-cycle contributes k-1 transpositions
        const std::string& l = sn.label(static_cast<Element>(x));
        std::size_t transpositions = 0, len = 0;
        for (char c : l) {
            if (c == '(') len = 0;
            else if (c == ')') transpositions += len - 1;
            else if (c != 'e') ++len;
        }
        map[x] = static_cast<Element>(transpositions % 2);
    }
    return GroupHom::checked(sn, z2, std::move(map));
}

/// Normal subgroups of g, ordered by size then lexicographically.
inline std::vector<ElementSet> nsb_enumerate(const FinGroup& g) {
    std::set<ElementSet> found;
    std::vector<ElementSet> atoms;
    for (std::size_t x = 0; x < g.order(); ++x) {
        auto n = normal_closure(g, {static_cast<Element>(x)});
        if (found.insert(n).second) atoms.push_back(n);
    }
    std::vector<ElementSet> all(found.begin(), found.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (const auto& a : atoms) {
            ElementSet u = all[i];
            u.insert(u.end(), a.begin(), a.end());
            auto j = generated_subgroup(g, u);
            if (found.insert(j).second) all.push_back(j);
        }
    std::sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return all;
}

inline std::string set_label(const FinGroup& g, const ElementSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + g.label(s[i]);
    return out + "}";
}

/// Named constructors: Zn, Dn (order 2n), Sn (n <= 5), A4, trivial "1", products "AxB".
inline FinGroup group_by_name(const std::string& name) {
    auto x = name.find('x');
    if (x != std::string::npos)
        return FinGroup::product(group_by_name(name.substr(0, x)), group_by_name(name.substr(x + 1)));
    if (name == "1") return FinGroup::trivial();
    auto number = [&](std::size_t from) -> std::size_t {
        if (name.size() <= from) throw GroupError("unknown group '" + name + "'");
        for (std::size_t i = from; i < name.size(); ++i)
            if (name[i] < '0' || name[i] > '9') throw GroupError("unknown group '" + name + "'");
        return std::stoul(name.substr(from));
    };
    if (name[0] == 'Z') return FinGroup::cyclic(number(1));
    if (name[0] == 'D') return FinGroup::dihedral(number(1));
    if (name[0] == 'S') return FinGroup::symmetric(number(1));
    if (name[0] == 'A') {
        std::size_t n = number(1);
        FinGroup sn = FinGroup::symmetric(n);
        return FinGroup::subgroup(sn, sign_hom(sn, FinGroup::cyclic(2)).kernel_set(), name);
    }
    throw GroupError("unknown group '" + name + "'");
}

/// Category of finite groups; null morphisms are the trivial homomorphisms.
class Grp {
public:
    using Object = FinGroup;
    using Morphism = GroupHom;

    Morphism identity(const Object& g) const {
        std::vector<Element> map(g.order());
        std::iota(map.begin(), map.end(), 0);
        return {g, g, std::move(map)};
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (!f.target.same_as(g.source)) throw GroupError("compose: groups do not match");
        std::vector<Element> map(f.map.size());
        for (std::size_t x = 0; x < map.size(); ++x) map[x] = g.map[f.map[x]];
        return {f.source, g.target, std::move(map)};
    }

    const Object& domain(const Morphism& f) const { return f.source; }
    const Object& codomain(const Morphism& f) const { return f.target; }

    bool is_null(const Morphism& f) const {
        return std::all_of(f.map.begin(), f.map.end(), [](Element y) { return y == 0; });
    }

    /// Inclusion of the preimage of the identity.
    Morphism kernel(const Morphism& f) const {
        ElementSet k = f.kernel_set();
        FinGroup sub = FinGroup::subgroup(f.source, k, "ker");
        return {sub, f.source, k};
    }

    /// Projection onto the quotient by the normal closure of the image.
    Morphism cokernel(const Morphism& f) const { return quotient_map(f.target, normal_closure(f.target, f.image_set())); }

    Morphism quotient_map(const FinGroup& g, const ElementSet& n) const {
        std::vector<Element> coset(g.order(), -1);
        std::vector<Element> reps;
        for (std::size_t x = 0; x < g.order(); ++x) {
            if (coset[x] >= 0) continue;
            Element c = static_cast<Element>(reps.size());
            reps.push_back(static_cast<Element>(x));
            for (auto y : n) coset[g.mul(static_cast<Element>(x), y)] = c;
        }
        std::vector<std::vector<Element>> t(reps.size(), std::vector<Element>(reps.size()));
        std::vector<std::string> labels;
        for (std::size_t a = 0; a < reps.size(); ++a) {
            labels.push_back(a == 0 ? "e" : "[" + g.label(reps[a]) + "]");
            for (std::size_t b = 0; b < reps.size(); ++b) t[a][b] = coset[g.mul(reps[a], reps[b])];
        }
        FinGroup q = FinGroup::from_table(g.name() + "/N" + std::to_string(n.size()), std::move(t), std::move(labels));
        return {g, q, std::move(coset)};
    }

    bool same_object(const Object& a, const Object& b) const { return a.same_as(b); }

    bool equal(const Morphism& f, const Morphism& g) const {
        return f.source.same_as(g.source) && f.target.same_as(g.target) && f.map == g.map;
    }

    bool is_mono(const Morphism& f) const { return f.image_set().size() == f.source.order(); }
    bool is_epi(const Morphism& f) const { return f.image_set().size() == f.target.order(); }
    bool is_isomorphism(const Morphism& f) const { return is_mono(f) && is_epi(f); }

    /// h with m∘h = p.
    std::optional<Morphism> factor_through_mono(const Morphism& m, const Morphism& p) const {
        if (!m.target.same_as(p.target)) throw GroupError("factor_through_mono: codomains differ");
        std::vector<Element> pre(m.target.order(), -1);
        for (std::size_t x = 0; x < m.map.size(); ++x)
            if (pre[m.map[x]] < 0) pre[m.map[x]] = static_cast<Element>(x);
        std::vector<Element> h(p.map.size());
        for (std::size_t x = 0; x < p.map.size(); ++x) {
            if (pre[p.map[x]] < 0) return std::nullopt;
            h[x] = pre[p.map[x]];
        }
        return homomorphism_or_null(p.source, m.source, std::move(h));
    }

    /// h with h∘e = p.
    std::optional<Morphism> factor_through_epi(const Morphism& e, const Morphism& p) const {
        if (!e.source.same_as(p.source)) throw GroupError("factor_through_epi: domains differ");
        std::vector<Element> h(e.target.order(), -1);
        for (std::size_t x = 0; x < e.map.size(); ++x) {
            Element& slot = h[e.map[x]];
            if (slot < 0)
                slot = p.map[x];
            else if (slot != p.map[x])
                return std::nullopt;
        }
        for (auto v : h)
            if (v < 0) return std::nullopt;
        return homomorphism_or_null(e.target, p.target, std::move(h));
    }

    Object zero_object() const { return FinGroup::trivial(); }

    Morphism zero_morphism(const Object& a, const Object& b) const {
        return {a, b, std::vector<Element>(a.order(), 0)};
    }

    std::string null_certificate(const Morphism& f) const {
        for (std::size_t x = 0; x < f.map.size(); ++x)
            if (f.map[x] != 0)
                return "maps " + f.source.label(static_cast<Element>(x)) + " to " + f.target.label(f.map[x]);
        return "trivial homomorphism";
    }

    std::string describe(const Object& g) const { return g.name() + " (order " + std::to_string(g.order()) + ")"; }

    std::string describe(const Morphism& f) const {
        std::string s = "{";
        for (std::size_t x = 0; x < f.map.size(); ++x)
            s += (x ? ", " : "") + f.source.label(static_cast<Element>(x)) + "->" + f.target.label(f.map[x]);
        return s + "}";
    }

    /// Injective with normal image.
    bool is_normal_mono_direct(const Morphism& f) const { return is_mono(f) && is_normal_subset(f.target, f.image_set()); }

    /// Surjective.
    bool is_normal_epi_direct(const Morphism& f) const { return is_epi(f); }

    /// Inclusion of a normal subgroup given by its elements.
    Morphism inclusion(const FinGroup& g, const ElementSet& n) const {
        FinGroup sub = FinGroup::subgroup(g, n);
        ElementSet sorted = n;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        return {sub, g, sorted};
    }

private:
    static std::optional<Morphism> homomorphism_or_null(const FinGroup& s, const FinGroup& t, std::vector<Element> map) {
        for (std::size_t a = 0; a < s.order(); ++a)
            for (std::size_t b = 0; b < s.order(); ++b)
                if (map[s.mul(static_cast<Element>(a), static_cast<Element>(b))] != t.mul(map[a], map[b]))
                    return std::nullopt;
        return Morphism{s, t, std::move(map)};
    }
};

}  // namespace curvlab
