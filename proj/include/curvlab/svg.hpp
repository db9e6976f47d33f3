#pragma once

/**
 * @file svg.hpp
 * @brief Deterministic SVG renderings of 2-d unit balls.
 *
 * One coordinate unit is 0.65cm and the viewport is [-6, 6]^2, the scale of
 * the unit-ball figure for the modularity counterexample. Coordinates are
 * rounded to three decimals with exact arithmetic, so the bytes depend only
 * on the input.
 */

#include "curvlab/polytope.hpp"
#include "curvlab/seminorm.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace curvlab {

/// Exact decimal rendering of r rounded half away from zero to `places` digits, trailing zeros trimmed.
inline std::string svg_number(const Rational& r, int places = 3) {
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Rational a = abs(r) * scale + Rational(1, 2);
    mpz_class n = a.get_num() / a.get_den();
    std::string digits = n.get_str();
    if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string whole = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(places));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (r < 0 && n != 0 ? "-" : "") + whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

/// Vertices of a bounded 2-d ball in counterclockwise order starting from angle 0.
inline std::vector<Vec> ball_polygon(const PolyhedralSeminorm& p) {
    if (p.dimension() != 2) throw DimensionError("ball_polygon: only 2-d seminorms can be drawn");
    const auto& ball = p.ball();
    if (!ball.lineality.empty()) throw GeometryError("ball_polygon: unbounded ball (the seminorm has a null direction)");
    std::vector<Vec> v = ball.vertices;
    auto upper = [](const Vec& a) { return a[1] > 0 || (a[1] == 0 && a[0] > 0); };
    std::sort(v.begin(), v.end(), [&](const Vec& a, const Vec& b) {
        bool ua = upper(a), ub = upper(b);
        if (ua != ub) return ua;
        return a[0] * b[1] - a[1] * b[0] > 0;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct SvgFigure {
    struct Polygon {
        std::vector<Vec> vertices;
        std::string stroke = "black";
    };
    struct Segment {
        Vec a, b;
        std::string stroke;
    };
    struct Point {
        Vec at;
        std::string fill;
    };

    std::vector<Polygon> polygons;
    std::vector<Segment> segments;
    std::vector<Point> points;

    std::string render() const {
        auto xy = [](const Vec& v) { return svg_number(v[0]) + "," + svg_number(-v[1]); };
        std::string out;
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"7.8cm\" height=\"7.8cm\" viewBox=\"-6.5 -6.5 13 13\">\n";
        out += "  <defs><marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"4\" markerHeight=\"4\" "
               "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n";
        out += "  <line x1=\"-6\" y1=\"0\" x2=\"6\" y2=\"0\" stroke=\"black\" stroke-width=\"0.08\" marker-end=\"url(#tip)\"/>\n";
        out += "  <line x1=\"0\" y1=\"6\" x2=\"0\" y2=\"-6\" stroke=\"black\" stroke-width=\"0.08\" marker-end=\"url(#tip)\"/>\n";
        for (const auto& p : polygons) {
            out += "  <polygon points=\"";
            for (std::size_t k = 0; k < p.vertices.size(); ++k) out += (k ? " " : "") + xy(p.vertices[k]);
            out += "\" fill=\"gray\" fill-opacity=\"0.2\" stroke=\"" + p.stroke + "\" stroke-width=\"0.04\"/>\n";
        }
        for (const auto& s : segments)
            out += "  <line x1=\"" + svg_number(s.a[0]) + "\" y1=\"" + svg_number(-s.a[1]) + "\" x2=\"" + svg_number(s.b[0]) +
                   "\" y2=\"" + svg_number(-s.b[1]) + "\" stroke=\"" + s.stroke + "\" stroke-width=\"0.04\"/>\n";
        for (const auto& p : points)
            out += "  <circle cx=\"" + svg_number(p.at[0]) + "\" cy=\"" + svg_number(-p.at[1]) + "\" r=\"0.1\" fill=\"" + p.fill +
                   "\" stroke=\"" + p.fill + "\"/>\n";
        out += "</svg>\n";
        return out;
    }
};

/// The three balls of the counterexample, the evaluation line of (s1 ∨ t) through the point,
/// the facet of the left-hand ball that attains the value, and the point itself.
inline std::string counterexample_svg(const ModularityCounterexample& c) {
    SvgFigure fig;
    Vec point = c.point;
    // the facet of (s1 ∨ (t ∧ s2)) active at the point, clipped to the ball
    PolyhedralSeminorm left = join_norm(c.s1, meet_norm(c.t, c.s2));
    std::vector<Vec> facet;
    for (const auto& a : left.functionals())
        if (dot(a, point) == left(point) || dot(a, point) == -left(point)) {
            Rational sign = dot(a, point) > 0 ? 1 : -1;
            for (const auto& v : ball_polygon(left))
                if (sign * dot(a, v) == 1) facet.push_back(v);
            break;
        }
    // evaluation line: the facet line of (s1 ∨ t) through the point, between heights -3 and 5
    PolyhedralSeminorm inner = join_norm(c.s1, c.t);
    for (const auto& a : inner.functionals())
        if (abs(dot(a, point)) == inner(point) && a[0] != 0) {
            Rational level = dot(a, point);
            auto at = [&](const Rational& y) { return Vec{(level - a[1] * y) / a[0], y}; };
            fig.segments.push_back({at(-3), at(5), "red"});
            break;
        }
    for (const auto* p : {&c.t, &c.s1, &c.s2}) fig.polygons.push_back({ball_polygon(*p), "black"});
    if (facet.size() == 2) fig.segments.push_back({facet[0], facet[1], "#218c21"});
    fig.segments.push_back({zeros(2), point, "#218c21"});
    fig.points.push_back({point, "blue"});
    return fig.render();
}

/// Both input balls and the result ball of a lattice operation on 2-d seminorms.
inline std::string lattice_svg(const PolyhedralSeminorm& s, const PolyhedralSeminorm& t, const PolyhedralSeminorm& result) {
    SvgFigure fig;
    fig.polygons.push_back({ball_polygon(s), "black"});
    fig.polygons.push_back({ball_polygon(t), "black"});
    fig.polygons.push_back({ball_polygon(result), "blue"});
    return fig.render();
}

}  // namespace curvlab
