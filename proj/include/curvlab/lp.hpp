#pragma once

/**
 * @file lp.hpp
 * @brief Exact rational linear programming.
 *
 * Dense two-phase tableau simplex over mpq with Bland's anti-cycling rule.
 * Variables are free (unrestricted in sign); sign constraints are ordinary
 * rows. Problems in this library have at most a few dozen rows and columns,
 * so a dense tableau is the right tool.
 */

#include "curvlab/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace curvlab {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };

struct LinearConstraint {
    Vec coefficients;
    Relation relation;
    Rational bound;
};

struct LinearProgram {
    Vec objective;
    std::vector<LinearConstraint> constraints;
    Sense sense = Sense::Minimize;

    std::size_t num_variables() const { return objective.size(); }

    void add(Vec coefficients, Relation relation, Rational bound) {
        constraints.push_back({std::move(coefficients), relation, std::move(bound)});
    }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;  // meaningful only when Optimal
    Vec point;       // witnessing point when Optimal

    bool optimal() const { return status == LpStatus::Optimal; }
};

inline std::string to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::Infeasible: return "infeasible";
    }
    return "?";
}

namespace detail {

class Tableau {
public:
    // rows_[i] holds constraint row i (last entry is the rhs); basis_[i] its basic column.
    std::vector<Vec> rows;
    std::vector<std::size_t> basis;
    std::size_t width = 0;  // number of structural columns (excluding rhs)

    void pivot(std::size_t r, std::size_t c, Vec& objective_row) {
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j <= width; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        if (objective_row[c] != 0) {
            Rational f = objective_row[c];
            for (std::size_t j = 0; j <= width; ++j)
                if (rows[r][j] != 0) objective_row[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    // Reduced-cost row for the given cost vector; entry [width] holds -(current value).
    Vec reduced_costs(const Vec& cost) const {
        Vec obj(width + 1, Rational(0));
        for (std::size_t j = 0; j < width; ++j) obj[j] = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& cb = cost[basis[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= width; ++j) obj[j] -= cb * rows[i][j];
        }
        return obj;
    }

    // Minimizes cost over the current basis; returns false when unbounded.
    bool minimize(const Vec& cost, const std::vector<bool>& allowed) {
        Vec obj = reduced_costs(cost);
        for (;;) {
            std::size_t enter = width;
            for (std::size_t j = 0; j < width; ++j)
                if (allowed[j] && obj[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == width) return true;
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rows[i][width] / rows[i][enter];
                if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return false;
            pivot(leave, enter, obj);
        }
    }
};

}  // namespace detail

/// Solves the program exactly. Throws DimensionError on malformed input.
inline LpResult lp_solve(const LinearProgram& p) {
    const std::size_t n = p.num_variables();
    for (const auto& c : p.constraints)
        if (c.coefficients.size() != n) throw DimensionError("lp_solve: constraint length differs from objective");

    const std::size_t m = p.constraints.size();
    std::size_t slack_count = 0;
    for (const auto& c : p.constraints)
        if (c.relation != Relation::Equal) ++slack_count;

    // columns: [x+ (n) | x- (n) | slacks | artificials (m)] then rhs
    const std::size_t art0 = 2 * n + slack_count;
    const std::size_t width = art0 + m;
    detail::Tableau t;
    t.width = width;
    std::size_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = p.constraints[i];
        Vec row(width + 1, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = c.coefficients[j];
            row[n + j] = -c.coefficients[j];
        }
        if (c.relation == Relation::LessEqual) row[2 * n + s++] = 1;
        if (c.relation == Relation::GreaterEqual) row[2 * n + s++] = -1;
        row[width] = c.bound;
        if (row[width] < 0)
            for (auto& x : row) x = -x;
        row[art0 + i] = 1;
        t.rows.push_back(std::move(row));
        t.basis.push_back(art0 + i);
    }

    Vec phase1(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = 1;
    std::vector<bool> allowed(width, true);
    t.minimize(phase1, allowed);  // bounded below by 0

    Rational infeasibility = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] >= art0) infeasibility += t.rows[i][width];
    if (infeasibility > 0) return {LpStatus::Infeasible, 0, {}};

    // Drive remaining (zero-valued) artificials out of the basis; drop redundant rows.
    Vec dummy(width + 1, Rational(0));
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < art0) {
            ++i;
            continue;
        }
        std::size_t col = art0;
        for (std::size_t j = 0; j < art0; ++j)
            if (t.rows[i][j] != 0) {
                col = j;
                break;
            }
        if (col == art0) {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            continue;
        }
        t.pivot(i, col, dummy);
        ++i;
    }

    for (std::size_t j = art0; j < width; ++j) allowed[j] = false;
    Vec cost(width, Rational(0));
    const Rational sign = p.sense == Sense::Minimize ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
        cost[j] = sign * p.objective[j];
        cost[n + j] = -sign * p.objective[j];
    }
    if (!t.minimize(cost, allowed)) return {LpStatus::Unbounded, 0, {}};

    Vec values(width, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) values[t.basis[i]] = t.rows[i][width];
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = values[j] - values[n + j];
    Rational value = dot(p.objective, x);
    return {LpStatus::Optimal, value, x};
}

/// True iff x satisfies every constraint exactly.
inline bool satisfies(const LinearProgram& p, const Vec& x) {
    for (const auto& c : p.constraints) {
        Rational lhs = dot(c.coefficients, x);
        switch (c.relation) {
            case Relation::LessEqual:
                if (lhs > c.bound) return false;
                break;
            case Relation::Equal:
                if (lhs != c.bound) return false;
                break;
            case Relation::GreaterEqual:
                if (lhs < c.bound) return false;
                break;
        }
    }
    return true;
}

}  // namespace curvlab
