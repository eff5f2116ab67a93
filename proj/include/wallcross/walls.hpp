#pragma once

// Enumeration of the walls of type (c1, c2) crossed by the segment of
// polarizations joining two ample classes. A wall class xi satisfies
//
//   xi = c1 (mod 2),   c1^2 - 4 c2 <= xi^2 < 0,   (L-.xi)(L+.xi) < 0.
//
// Finiteness is certified by enumerating an ellipsoid of the positive
// definite form g_A(x) = 2 (x.A)^2 / A^2 - x^2 with A = L- + L+, whose
// radius bounds every crossed wall (Hodge index argument).

#include "wallcross/lattice.hpp"
#include "wallcross/short_vectors.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace wallcross {

struct WallSpec {
    SurfaceModel surface;
    DivisorClass c1;
    Int c2 = 0;
    DivisorClass l_minus;
    DivisorClass l_plus;

    Int discriminant() const {  // N = 4 c2 - c1^2; no walls when N <= 0
        return 4 * c2 - self_intersect(surface, c1);
    }
};

inline WallSpec make_wall_spec(SurfaceModel surface, DivisorClass c1, Int c2,
                               DivisorClass l_minus, DivisorClass l_plus) {
    WallSpec spec{std::move(surface), std::move(c1), std::move(c2), std::move(l_minus),
                  std::move(l_plus)};
    detail::check_dim(spec.surface, spec.c1);
    if (!is_ample(spec.surface, spec.l_minus))
        throw input_error("polarization " + spec.l_minus.str() + " is not ample");
    if (!is_ample(spec.surface, spec.l_plus))
        throw input_error("polarization " + spec.l_plus.str() + " is not ample");
    return spec;
}

struct WallRecord {
    DivisorClass xi;             // oriented: mu >= 0, ties broken by L+.xi > 0
    Rat t_star;                  // crossing parameter in (0,1)
    Int xi_sq;
    bool grows_toward_plus = false;  // true iff L_t.xi > 0 for t > t_star
};

// One geometric wall; more than one member means several integral
// classes cut out the same hyperplane (proportional xi).
struct WallGroup {
    std::vector<WallRecord> members;  // sorted by decreasing |xi^2|
    Rat t_star;
    bool multi_xi = false;
};

// t* = (-L-.xi) / ((L+ - L-).xi), the unique root of L_t.xi in (0,1).
inline Rat crossing_parameter(const SurfaceModel& s, const DivisorClass& xi,
                              const DivisorClass& l_minus, const DivisorClass& l_plus) {
    Int lm = intersect(s, l_minus, xi);
    Int lp = intersect(s, l_plus, xi);
    if (lm == 0 || lp == 0 || (lm < 0) == (lp < 0))
        throw input_error("crossing_parameter: L_t.xi has no sign change on the segment");
    return make_rat(-lm, lp - lm);
}

namespace detail {

// g_A(x) = 2 (x.A)^2 / A^2 - x^2 as a symmetric rational matrix.
inline QMat ellipsoid_form(const SurfaceModel& s, const DivisorClass& a) {
    const int n = s.rank;
    std::vector<Int> ga(n, Int(0));  // gram * a
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ga[i] += s.gram[i][j] * a.coords[j];
    Int a2 = self_intersect(s, a);
    if (a2 <= 0) throw input_error("ellipsoid form needs a class of positive self-intersection");
    QMat q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.at(i, j) = make_rat(2 * ga[i] * ga[j], a2) - Rat(s.gram[i][j]);
    return q;
}

// B = N (2 M^2 / (A^2 m) - 1) with M = max_t A.L_t (endpoint max of a
// linear function) and m = min_t L_t^2 (endpoint or interior critical
// value of a quadratic). Over-approximates on purpose; filtering is
// exact and cheap.
inline Rat certified_radius(const WallSpec& spec, const DivisorClass& a) {
    const SurfaceModel& s = spec.surface;
    Int n_disc = spec.discriminant();
    Int a2 = self_intersect(s, a);
    Int m_cand1 = intersect(s, a, spec.l_minus);
    Int m_cand2 = intersect(s, a, spec.l_plus);
    Int big_m = std::max(m_cand1, m_cand2);

    Int q00 = self_intersect(s, spec.l_minus);
    Int q11 = self_intersect(s, spec.l_plus);
    Int q01 = intersect(s, spec.l_minus, spec.l_plus);
    Rat m_min = Rat(std::min(q00, q11));
    // L_t^2 = (1-t)^2 q00 + 2t(1-t) q01 + t^2 q11; critical point of the
    // quadratic may undercut both endpoints.
    Int second = q00 - 2 * q01 + q11;
    if (second != 0) {
        Rat tc = make_rat(q00 - q01, second);
        if (tc > 0 && tc < 1) {
            Rat one_m = Rat(1) - tc;
            Rat val = one_m * one_m * Rat(q00) + 2 * tc * one_m * Rat(q01) + tc * tc * Rat(q11);
            m_min = std::min(m_min, val);
        }
    }
    if (m_min <= 0)
        throw input_error("polarization segment leaves the positive cone");
    return Rat(n_disc) * (Rat(2 * big_m * big_m) / (Rat(a2) * m_min) - 1);
}

inline bool congruent_mod2(const DivisorClass& xi, const DivisorClass& c1) {
    for (size_t i = 0; i < xi.coords.size(); ++i)
        if ((xi.coords[i] - c1.coords[i]) % 2 != 0) return false;
    return true;
}

inline bool proportional(const DivisorClass& x, const DivisorClass& y) {
    for (size_t i = 0; i < x.coords.size(); ++i)
        for (size_t j = i + 1; j < x.coords.size(); ++j)
            if (x.coords[i] * y.coords[j] != x.coords[j] * y.coords[i]) return false;
    return true;
}

}  // namespace detail

inline std::vector<WallRecord> enumerate_walls(const WallSpec& spec) {
    const SurfaceModel& s = spec.surface;
    detail::check_dim(s, spec.l_minus);
    detail::check_dim(s, spec.l_plus);

    Int n_disc = spec.discriminant();
    if (n_disc <= 0) return {};

    DivisorClass a = spec.l_minus + spec.l_plus;
    QMat g_a = detail::ellipsoid_form(s, a);
    Rat radius = detail::certified_radius(spec, a);

    Int c1_sq = self_intersect(s, spec.c1);
    Int lower = c1_sq - 4 * spec.c2;

    std::map<std::vector<Int>, WallRecord> found;
    for (const auto& coords : short_vectors(g_a, radius)) {
        DivisorClass xi{coords};
        if (xi.is_zero()) continue;
        if (!detail::congruent_mod2(xi, spec.c1)) continue;
        Int xi_sq = self_intersect(s, xi);
        if (xi_sq >= 0 || xi_sq < lower) continue;

        Int lm = intersect(s, spec.l_minus, xi);
        Int lp = intersect(s, spec.l_plus, xi);
        if (lm == 0 || lp == 0)
            throw degenerate_segment_error("endpoint " + (lm == 0 ? spec.l_minus : spec.l_plus).str() +
                                           " lies on the wall of " + xi.str());
        if ((lm < 0) == (lp < 0)) continue;

        Int mu = anti_canonical_degree(s, xi);
        if (mu < 0 || (mu == 0 && lp < 0)) {
            xi = -xi;
            lm = -lm;
            lp = -lp;
        }
        if (found.count(xi.coords)) continue;

        WallRecord rec;
        rec.xi = xi;
        rec.xi_sq = xi_sq;
        rec.t_star = make_rat(-lm, lp - lm);
        rec.grows_toward_plus = lp > 0;
        found.emplace(rec.xi.coords, std::move(rec));
    }

    std::vector<WallRecord> walls;
    walls.reserve(found.size());
    for (auto& [_, rec] : found) walls.push_back(std::move(rec));
    std::sort(walls.begin(), walls.end(), [](const WallRecord& x, const WallRecord& y) {
        if (x.t_star != y.t_star) return x.t_star < y.t_star;
        return x.xi.coords < y.xi.coords;
    });
    for (size_t i = 1; i < walls.size(); ++i)
        if (walls[i].t_star == walls[i - 1].t_star &&
            !detail::proportional(walls[i].xi, walls[i - 1].xi))
            throw degenerate_segment_error(
                "non-generic segment: distinct walls of " + walls[i - 1].xi.str() + " and " +
                walls[i].xi.str() + " meet it at t = " + rat_str(walls[i].t_star) +
                "; perturb an endpoint");
    return walls;
}

// Groups proportional classes into single walls and orders the walls by
// crossing parameter. Within a group, members are listed by decreasing
// |xi^2| (tool convention for multi-class walls).
inline std::vector<WallGroup> group_and_sort(const std::vector<WallRecord>& records) {
    std::vector<WallRecord> recs = records;
    std::sort(recs.begin(), recs.end(), [](const WallRecord& x, const WallRecord& y) {
        if (x.t_star != y.t_star) return x.t_star < y.t_star;
        return x.xi.coords < y.xi.coords;
    });

    std::vector<WallGroup> groups;
    for (const WallRecord& rec : recs) {
        if (!groups.empty() && groups.back().t_star == rec.t_star) {
            if (!detail::proportional(groups.back().members.front().xi, rec.xi))
                throw degenerate_segment_error(
                    "non-generic segment: distinct walls share t = " + rat_str(rec.t_star));
            groups.back().members.push_back(rec);
            groups.back().multi_xi = true;
            continue;
        }
        WallGroup g;
        g.t_star = rec.t_star;
        g.members.push_back(rec);
        groups.push_back(std::move(g));
    }
    for (WallGroup& g : groups)
        std::sort(g.members.begin(), g.members.end(), [](const WallRecord& x, const WallRecord& y) {
            Int ax = abs(x.xi_sq), ay = abs(y.xi_sq);
            if (ax != ay) return ax > ay;
            return x.xi.coords < y.xi.coords;
        });
    return groups;
}

}  // namespace wallcross
