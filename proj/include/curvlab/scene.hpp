#pragma once

/**
 * @file scene.hpp
 * @brief Declarative scene documents: spaces, maps, groups, homomorphisms,
 * complexes and short exact sequences under named top-level entries.
 *
 * A scene is a JSON object. Rationals are strings "p/q", matrices are
 * row-major nested lists, group elements are indices or labels.
 *
 *     {
 *       "epsilon": "1/4",
 *       "spaces":  {"A": {"dimension": 1, "functionals": [["1"]]}},
 *       "maps":    {"half": {"source": "A", "target": "A", "matrix": [["1/2"]]}},
 *       "groups":  {"S3": {"name": "S3"}, "Z2": {"name": "Z2"}},
 *       "homs":    {"sign": {"kind": "sign", "source": "S3", "target": "Z2"}},
 *       "complexes": {"K": {"lo": 0, "objects": ["A", "A"], "differentials": ["half"]}},
 *       "sequences": {"S": {"d": "K", "quotients": ["p0", "p1"]}},
 *       "vectors": {"y": ["1"]}
 *     }
 *
 * Parsing only checks the document's shape; references and the norm and
 * homomorphism conditions are checked when a SceneContext resolves them.
 */

#include "curvlab/complex.hpp"
#include "curvlab/group.hpp"
#include "curvlab/seminorm.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvlab {

/// Malformed or inconsistent scene input.
struct SceneError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SpaceDecl {
    std::size_t dimension = 0;
    std::vector<Vec> functionals;
    bool operator==(const SpaceDecl&) const = default;
};

struct MapDecl {
    std::string source, target;
    std::vector<Vec> matrix;
    bool operator==(const MapDecl&) const = default;
};

/// Either a named constructor or a full table with identity at index 0.
struct GroupDecl {
    std::string name;
    std::vector<std::vector<int>> table;
    std::vector<std::string> labels;
    bool operator==(const GroupDecl&) const = default;
};

struct SubgroupDecl {
    std::string group;
    std::vector<nlohmann::json> elements;  // indices or labels
    bool operator==(const SubgroupDecl&) const = default;
};

/// kind: "images" (explicit), "sign", "identity", "trivial", "inclusion" or "quotient" of a subgroup.
struct HomDecl {
    std::string kind = "images";
    std::string source, target, subgroup;
    std::vector<nlohmann::json> images;
    bool operator==(const HomDecl&) const = default;
};

struct ComplexDecl {
    int lo = 0;
    std::vector<std::string> objects, differentials;
    bool operator==(const ComplexDecl&) const = default;
};

/// Either explicit (c, d, e, i, q) or a middle complex d with one quotient map per degree.
struct SequenceDecl {
    std::string c, d, e;
    std::vector<std::string> i, q, quotients;
    bool operator==(const SequenceDecl&) const = default;
};

struct Scene {
    std::optional<Rational> epsilon;
    std::map<std::string, SpaceDecl> spaces;
    std::map<std::string, MapDecl> maps;
    std::map<std::string, GroupDecl> groups;
    std::map<std::string, SubgroupDecl> subgroups;
    std::map<std::string, HomDecl> homs;
    std::map<std::string, ComplexDecl> complexes;
    std::map<std::string, SequenceDecl> sequences;
    std::map<std::string, Vec> vectors;
    bool operator==(const Scene&) const = default;
};

namespace detail {

using nlohmann::json;

inline const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw SceneError(where + ": missing '" + key + "'");
    return j.at(key);
}

inline std::string scene_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw SceneError(where + ": expected a string");
    return j.get<std::string>();
}

inline Rational scene_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SceneError(where + ": rationals are written as strings \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw SceneError(where + ": " + e.what());
    }
}

inline Vec scene_vec(const json& j, const std::string& where) {
    if (!j.is_array()) throw SceneError(where + ": expected a list of rationals");
    Vec v;
    for (std::size_t k = 0; k < j.size(); ++k) v.push_back(scene_rational(j[k], where + "[" + std::to_string(k) + "]"));
    return v;
}

inline std::vector<Vec> scene_rows(const json& j, const std::string& where) {
    if (!j.is_array()) throw SceneError(where + ": expected a list of rows");
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < j.size(); ++k) rows.push_back(scene_vec(j[k], where + "[" + std::to_string(k) + "]"));
    return rows;
}

inline std::vector<std::string> scene_names(const json& j, const std::string& where) {
    if (!j.is_array()) throw SceneError(where + ": expected a list of names");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(scene_string(x, where));
    return out;
}

inline std::vector<json> scene_elements(const json& j, const std::string& where) {
    if (!j.is_array()) throw SceneError(where + ": expected a list of elements");
    for (const auto& x : j)
        if (!x.is_number_integer() && !x.is_string()) throw SceneError(where + ": elements are indices or labels");
    return j.get<std::vector<json>>();
}

template <class T, class F>
void read_section(const json& doc, const char* key, std::map<std::string, T>& out, F&& one) {
    if (!doc.contains(key)) return;
    const auto& sec = doc.at(key);
    if (!sec.is_object()) throw SceneError(std::string("'") + key + "' must be an object of named entries");
    for (auto it = sec.begin(); it != sec.end(); ++it) out[it.key()] = one(it.value(), std::string(key) + "." + it.key());
}

inline json rational_json(const Rational& r) { return to_string(r); }

inline json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

inline json rows_json(const std::vector<Vec>& rows) {
    json a = json::array();
    for (const auto& r : rows) a.push_back(vec_json(r));
    return a;
}

}  // namespace detail

inline Scene scene_from_json(const nlohmann::json& doc) {
    using detail::json;
    if (!doc.is_object()) throw SceneError("scene must be a JSON object");
    static const std::vector<std::string> known = {"epsilon", "spaces",    "maps",      "groups", "subgroups",
                                                   "homs",    "complexes", "sequences", "vectors"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw SceneError("unknown top-level entry '" + it.key() + "'");
    Scene s;
    if (doc.contains("epsilon")) s.epsilon = detail::scene_rational(doc.at("epsilon"), "epsilon");
    detail::read_section(doc, "spaces", s.spaces, [](const json& j, const std::string& w) {
        SpaceDecl d;
        const auto& dim = detail::require(j, "dimension", w);
        if (!dim.is_number_unsigned()) throw SceneError(w + ": dimension must be a nonnegative integer");
        d.dimension = dim.get<std::size_t>();
        if (j.contains("functionals")) d.functionals = detail::scene_rows(j.at("functionals"), w + ".functionals");
        for (const auto& f : d.functionals)
            if (f.size() != d.dimension) throw SceneError(w + ": functional length differs from the dimension");
        return d;
    });
    detail::read_section(doc, "maps", s.maps, [](const json& j, const std::string& w) {
        MapDecl d;
        d.source = detail::scene_string(detail::require(j, "source", w), w + ".source");
        d.target = detail::scene_string(detail::require(j, "target", w), w + ".target");
        d.matrix = detail::scene_rows(detail::require(j, "matrix", w), w + ".matrix");
        return d;
    });
    detail::read_section(doc, "groups", s.groups, [](const json& j, const std::string& w) {
        GroupDecl d;
        if (j.contains("name")) d.name = detail::scene_string(j.at("name"), w + ".name");
        if (j.contains("table")) {
            try {
                d.table = j.at("table").get<std::vector<std::vector<int>>>();
            } catch (const nlohmann::json::exception&) {
                throw SceneError(w + ".table: expected a square table of element indices");
            }
        }
        if (j.contains("labels")) d.labels = detail::scene_names(j.at("labels"), w + ".labels");
        if (d.name.empty() == d.table.empty()) throw SceneError(w + ": give exactly one of 'name' or 'table'");
        return d;
    });
    detail::read_section(doc, "subgroups", s.subgroups, [](const json& j, const std::string& w) {
        SubgroupDecl d;
        d.group = detail::scene_string(detail::require(j, "group", w), w + ".group");
        d.elements = detail::scene_elements(detail::require(j, "elements", w), w + ".elements");
        return d;
    });
    detail::read_section(doc, "homs", s.homs, [](const json& j, const std::string& w) {
        HomDecl d;
        if (j.contains("kind")) d.kind = detail::scene_string(j.at("kind"), w + ".kind");
        if (j.contains("source")) d.source = detail::scene_string(j.at("source"), w + ".source");
        if (j.contains("target")) d.target = detail::scene_string(j.at("target"), w + ".target");
        if (j.contains("subgroup")) d.subgroup = detail::scene_string(j.at("subgroup"), w + ".subgroup");
        if (j.contains("images")) d.images = detail::scene_elements(j.at("images"), w + ".images");
        if (d.kind == "images" || d.kind == "sign" || d.kind == "trivial") {
            if (d.source.empty() || d.target.empty()) throw SceneError(w + ": needs 'source' and 'target'");
        } else if (d.kind == "identity") {
            if (d.source.empty()) throw SceneError(w + ": needs 'source'");
        } else if (d.kind == "inclusion" || d.kind == "quotient") {
            if (d.subgroup.empty()) throw SceneError(w + ": needs 'subgroup'");
        } else {
            throw SceneError(w + ": unknown kind '" + d.kind + "'");
        }
        return d;
    });
    detail::read_section(doc, "complexes", s.complexes, [](const json& j, const std::string& w) {
        ComplexDecl d;
        if (j.contains("lo")) {
            if (!j.at("lo").is_number_integer()) throw SceneError(w + ".lo: expected an integer");
            d.lo = j.at("lo").get<int>();
        }
        d.objects = detail::scene_names(detail::require(j, "objects", w), w + ".objects");
        if (j.contains("differentials")) d.differentials = detail::scene_names(j.at("differentials"), w + ".differentials");
        return d;
    });
    detail::read_section(doc, "sequences", s.sequences, [](const json& j, const std::string& w) {
        SequenceDecl d;
        d.d = detail::scene_string(detail::require(j, "d", w), w + ".d");
        if (j.contains("quotients")) {
            d.quotients = detail::scene_names(j.at("quotients"), w + ".quotients");
        } else {
            d.c = detail::scene_string(detail::require(j, "c", w), w + ".c");
            d.e = detail::scene_string(detail::require(j, "e", w), w + ".e");
            d.i = detail::scene_names(detail::require(j, "i", w), w + ".i");
            d.q = detail::scene_names(detail::require(j, "q", w), w + ".q");
        }
        return d;
    });
    detail::read_section(doc, "vectors", s.vectors,
                         [](const json& j, const std::string& w) { return detail::scene_vec(j, w); });
    return s;
}

inline Scene parse_scene(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SceneError(std::string("scene is not valid JSON: ") + e.what());
    }
    return scene_from_json(doc);
}

inline nlohmann::json scene_to_json(const Scene& s) {
    using detail::json;
    json doc = json::object();
    if (s.epsilon) doc["epsilon"] = detail::rational_json(*s.epsilon);
    for (const auto& [k, d] : s.spaces)
        doc["spaces"][k] = {{"dimension", d.dimension}, {"functionals", detail::rows_json(d.functionals)}};
    for (const auto& [k, d] : s.maps)
        doc["maps"][k] = {{"source", d.source}, {"target", d.target}, {"matrix", detail::rows_json(d.matrix)}};
    for (const auto& [k, d] : s.groups) {
        json g = json::object();
        if (!d.name.empty()) g["name"] = d.name;
        if (!d.table.empty()) g["table"] = d.table;
        if (!d.labels.empty()) g["labels"] = d.labels;
        doc["groups"][k] = g;
    }
    for (const auto& [k, d] : s.subgroups) doc["subgroups"][k] = {{"group", d.group}, {"elements", d.elements}};
    for (const auto& [k, d] : s.homs) {
        json h = {{"kind", d.kind}};
        if (!d.source.empty()) h["source"] = d.source;
        if (!d.target.empty()) h["target"] = d.target;
        if (!d.subgroup.empty()) h["subgroup"] = d.subgroup;
        if (!d.images.empty()) h["images"] = d.images;
        doc["homs"][k] = h;
    }
    for (const auto& [k, d] : s.complexes)
        doc["complexes"][k] = {{"lo", d.lo}, {"objects", d.objects}, {"differentials", d.differentials}};
    for (const auto& [k, d] : s.sequences) {
        json q = {{"d", d.d}};
        if (!d.quotients.empty()) {
            q["quotients"] = d.quotients;
        } else {
            q["c"] = d.c;
            q["e"] = d.e;
            q["i"] = d.i;
            q["q"] = d.q;
        }
        doc["sequences"][k] = q;
    }
    for (const auto& [k, v] : s.vectors) doc["vectors"][k] = detail::vec_json(v);
    return doc;
}

inline std::string serialize_scene(const Scene& s) { return scene_to_json(s).dump(2) + "\n"; }

/// Resolves scene references into backend objects, validating as it goes.
class SceneContext {
public:
    explicit SceneContext(Scene scene, std::optional<Rational> epsilon_override = std::nullopt)
        : scene_(std::move(scene)), norm_(pick_epsilon(scene_, epsilon_override)) {}

    const Scene& scene() const { return scene_; }
    const Norm& norm() const { return norm_; }
    const Grp& grp() const { return grp_; }

    bool has_space(const std::string& n) const { return scene_.spaces.count(n) > 0; }
    bool has_map(const std::string& n) const { return scene_.maps.count(n) > 0; }
    bool has_group(const std::string& n) const { return scene_.groups.count(n) > 0; }
    bool has_subgroup(const std::string& n) const { return scene_.subgroups.count(n) > 0; }
    bool has_hom(const std::string& n) const { return scene_.homs.count(n) > 0; }

    PolyhedralSeminorm space(const std::string& name) const {
        const auto& d = lookup(scene_.spaces, name, "space");
        return PolyhedralSeminorm(d.dimension, d.functionals);
    }

    BoundedMap map(const std::string& name) const {
        const auto& d = lookup(scene_.maps, name, "map");
        auto src = space(d.source), tgt = space(d.target);
        if (d.matrix.size() != tgt.dimension()) throw SceneError("map '" + name + "': row count differs from the target dimension");
        for (const auto& row : d.matrix)
            if (row.size() != src.dimension()) throw SceneError("map '" + name + "': column count differs from the source dimension");
        Matrix m = Matrix::from_rows(d.matrix, src.dimension());
        try {
            return BoundedMap::checked(std::move(m), std::move(src), std::move(tgt));
        } catch (const std::exception& e) {
            throw SceneError("map '" + name + "': " + e.what());
        }
    }

    FinGroup group(const std::string& name) const {
        if (auto it = group_cache_.find(name); it != group_cache_.end()) return it->second;
        const auto& d = lookup(scene_.groups, name, "group");
        FinGroup g;
        try {
            if (!d.name.empty()) {
                g = group_by_name(d.name);
            } else {
                std::vector<std::vector<FinGroup::Element>> table;
                for (const auto& row : d.table) table.emplace_back(row.begin(), row.end());
                g = FinGroup::from_table(name, std::move(table), d.labels);
            }
        } catch (const GroupError& e) {
            throw SceneError("group '" + name + "': " + e.what());
        }
        group_cache_.emplace(name, g);
        return g;
    }

    FinGroup::Element element(const FinGroup& g, const nlohmann::json& ref, const std::string& where) const {
        if (ref.is_number_integer()) {
            long k = ref.get<long>();
            if (k < 0 || static_cast<std::size_t>(k) >= g.order())
                throw SceneError(where + ": element index " + std::to_string(k) + " out of range");
            return static_cast<FinGroup::Element>(k);
        }
        auto e = g.find(ref.get<std::string>());
        if (!e) throw SceneError(where + ": no element labelled '" + ref.get<std::string>() + "'");
        return *e;
    }

    /// The subgroup's ambient group and its elements; must be a normal subgroup.
    std::pair<FinGroup, ElementSet> subgroup(const std::string& name) const {
        const auto& d = lookup(scene_.subgroups, name, "subgroup");
        FinGroup g = group(d.group);
        ElementSet s;
        for (const auto& x : d.elements) s.push_back(element(g, x, "subgroup '" + name + "'"));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (generated_subgroup(g, s) != s) throw SceneError("subgroup '" + name + "': elements are not closed under the group law");
        if (!is_normal_subset(g, s)) throw SceneError("subgroup '" + name + "': not a normal subgroup");
        return {g, s};
    }

    GroupHom hom(const std::string& name) const {
        const auto& d = lookup(scene_.homs, name, "hom");
        const std::string where = "hom '" + name + "'";
        try {
            if (d.kind == "identity") return grp_.identity(group(d.source));
            if (d.kind == "trivial") return grp_.zero_morphism(group(d.source), group(d.target));
            if (d.kind == "sign") return sign_hom(group(d.source), group(d.target));
            if (d.kind == "inclusion") {
                auto [g, s] = subgroup(d.subgroup);
                return grp_.inclusion(g, s);
            }
            if (d.kind == "quotient") {
                auto [g, s] = subgroup(d.subgroup);
                return grp_.quotient_map(g, s);
            }
            FinGroup src = group(d.source), tgt = group(d.target);
            std::vector<FinGroup::Element> images;
            for (const auto& x : d.images) images.push_back(element(tgt, x, where));
            return GroupHom::checked(src, tgt, std::move(images));
        } catch (const GroupError& e) {
            throw SceneError(where + ": " + e.what());
        }
    }

    /// True when the complex's objects are seminormed spaces, false when they are groups.
    bool complex_is_norm(const std::string& name) const {
        const auto& d = lookup(scene_.complexes, name, "complex");
        if (d.objects.empty()) throw SceneError("complex '" + name + "' has no objects");
        if (has_space(d.objects[0])) return true;
        if (has_group(d.objects[0])) return false;
        throw SceneError("complex '" + name + "': unknown object '" + d.objects[0] + "'");
    }

    ChainComplex<Norm> norm_complex(const std::string& name) const {
        return build_complex<Norm>(name, [&](const std::string& o) { return space(o); },
                                   [&](const std::string& m) { return map(m); }, norm_);
    }

    ChainComplex<Grp> group_complex(const std::string& name) const {
        return build_complex<Grp>(name, [&](const std::string& o) { return group(o); },
                                  [&](const std::string& m) { return hom(m); }, grp_);
    }

    bool sequence_is_norm(const std::string& name) const {
        return complex_is_norm(lookup(scene_.sequences, name, "sequence").d);
    }

    ShortExactSequence<Norm> norm_sequence(const std::string& name) const {
        return build_sequence<Norm>(name, [&](const std::string& c) { return norm_complex(c); },
                                    [&](const std::string& m) { return map(m); }, norm_);
    }

    ShortExactSequence<Grp> group_sequence(const std::string& name) const {
        return build_sequence<Grp>(name, [&](const std::string& c) { return group_complex(c); },
                                   [&](const std::string& m) { return hom(m); }, grp_);
    }

    Vec vector(const std::string& name) const { return lookup(scene_.vectors, name, "vector"); }

private:
    static Rational pick_epsilon(const Scene& s, const std::optional<Rational>& over) {
        Rational eps = over ? *over : s.epsilon ? *s.epsilon : Rational(1, 4);
        if (eps <= 0 || eps >= 1) throw SceneError("epsilon must lie strictly between 0 and 1, got " + to_string(eps));
        return eps;
    }

    template <class T>
    static const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* what) {
        auto it = m.find(name);
        if (it == m.end()) throw SceneError(std::string("unknown ") + what + " '" + name + "'");
        return it->second;
    }

    template <NullCategory C, class Obj, class Mor>
    ChainComplex<C> build_complex(const std::string& name, Obj&& obj, Mor&& mor, const C& cat) const {
        const auto& d = lookup(scene_.complexes, name, "complex");
        std::vector<typename C::Object> objects;
        std::vector<typename C::Morphism> diffs;
        for (const auto& o : d.objects) objects.push_back(obj(o));
        for (const auto& m : d.differentials) diffs.push_back(mor(m));
        try {
            return make_complex(cat, d.lo, std::move(objects), std::move(diffs));
        } catch (const ComplexError& e) {
            throw SceneError("complex '" + name + "': " + e.what());
        }
    }

    template <NullCategory C, class Cx, class Mor>
    ShortExactSequence<C> build_sequence(const std::string& name, Cx&& cx, Mor&& mor, const C& cat) const {
        const auto& d = lookup(scene_.sequences, name, "sequence");
        auto middle = cx(d.d);
        const std::size_t n = middle.objects.size();
        if (!d.quotients.empty()) {
            if (d.quotients.size() != n) throw SceneError("sequence '" + name + "': need one quotient per degree");
            std::vector<typename C::Morphism> ps;
            for (const auto& p : d.quotients) ps.push_back(mor(p));
            try {
                return ses_from_quotients(cat, middle, ps);
            } catch (const std::exception& e) {
                throw SceneError("sequence '" + name + "': " + e.what());
            }
        }
        ShortExactSequence<C> s{cx(d.c), middle, cx(d.e), {}, {}};
        if (d.i.size() != n || d.q.size() != n) throw SceneError("sequence '" + name + "': need one i and one q per degree");
        for (const auto& m : d.i) s.i.push_back(mor(m));
        for (const auto& m : d.q) s.q.push_back(mor(m));
        return s;
    }

    Scene scene_;
    Norm norm_;
    Grp grp_;
    mutable std::map<std::string, FinGroup> group_cache_;
};

}  // namespace curvlab
