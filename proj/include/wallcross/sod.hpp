#pragma once

// Wall numerology and the symbolic semi-orthogonal decompositions a
// crossing induces. For an oriented wall class xi of type (c1, c2):
//
//   l   = (4 c2 - c1^2 + xi^2) / 4       (integral by the congruence)
//   mu  = (-K_S) . xi                    (>= 0 after orientation)
//   F   = (c1 + xi) / 2
//   r-  = l - 1 - (xi^2 + mu) / 2        Euler-characteristic ranks of
//   r+  = l - 1 - (xi^2 - mu) / 2        the two extension bundles
//
// A crossing with mu > 0 contributes, for l' = l .. 0, mu copies of
// D^b(Hilb^l'(S) x Hilb^{l-l'}(S)); mu = 0 is an equivalence.

#include "wallcross/walls.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallcross {

struct Numerology {
    DivisorClass xi;  // oriented so mu >= 0
    Int l_xi = 0;
    Int mu_xi = 0;
    DivisorClass twist;
    Int r_minus = 0;
    Int r_plus = 0;
};

// r- and r+ for the two extension bundles over Hilb^k x Hilb^{l-k}.
// Derived by Riemann-Roch; always r+ - r- = mu.
inline std::pair<Int, Int> extension_ranks(const SurfaceModel& s, const DivisorClass& c1,
                                           const Int& c2, const DivisorClass& xi) {
    if (!detail::congruent_mod2(xi, c1))
        throw input_error("extension_ranks: xi is not congruent to c1 mod 2");
    Int xi_sq = self_intersect(s, xi);
    Int c1_sq = self_intersect(s, c1);
    if (xi_sq > 0 || xi_sq < c1_sq - 4 * c2)
        throw input_error("extension_ranks: xi^2 outside the wall range");
    Int mu = anti_canonical_degree(s, xi);
    if (mu < 0) throw input_error("extension_ranks: expects an oriented class (mu >= 0)");
    Int l = (4 * c2 - c1_sq + xi_sq) / 4;
    if ((xi_sq + mu) % 2 != 0)
        throw input_error("extension_ranks: xi^2 + mu is odd; adjunction parity violated");
    Int r_minus = l - 1 - (xi_sq + mu) / 2;
    Int r_plus = l - 1 - (xi_sq - mu) / 2;
    if (r_minus < 0 || r_plus < 0)
        throw input_error("extension_ranks: negative rank for xi = " + xi.str() +
                          "; invariants inconsistent with a nonempty wall");
    return {r_minus, r_plus};
}

// Numerology of a wall class. Classes with mu < 0 are flipped to the
// oriented representative; the caller's sign never changes l or |mu|.
inline Numerology wall_numerology(const SurfaceModel& s, const DivisorClass& c1, const Int& c2,
                                  DivisorClass xi) {
    if (!detail::congruent_mod2(xi, c1))
        throw input_error("wall_numerology: xi = " + xi.str() + " is not congruent to c1 mod 2");
    Int xi_sq = self_intersect(s, xi);
    Int c1_sq = self_intersect(s, c1);
    if (xi_sq > 0 || xi_sq < c1_sq - 4 * c2)
        throw input_error("wall_numerology: xi^2 = " + xi_sq.str() + " outside [" +
                          Int(c1_sq - 4 * c2).str() + ", 0]");
    if (anti_canonical_degree(s, xi) < 0) xi = -xi;

    Numerology out;
    out.xi = xi;
    Int num = 4 * c2 - c1_sq + xi_sq;
    if (num % 4 != 0) throw input_error("wall_numerology: non-integral l (congruence violated)");
    out.l_xi = num / 4;
    if (out.l_xi < 0) throw input_error("wall_numerology: negative l");
    out.mu_xi = anti_canonical_degree(s, xi);

    out.twist.coords.reserve(xi.coords.size());
    for (size_t i = 0; i < xi.coords.size(); ++i)
        out.twist.coords.push_back((c1.coords[i] + xi.coords[i]) / 2);

    auto [rm, rp] = extension_ranks(s, c1, c2, xi);
    out.r_minus = rm;
    out.r_plus = rp;
    return out;
}

struct SODFactor {
    // D^b(Hilb^a(S) x Hilb^b(S)); (0,0) is a point factor.
    Int hilb_a = 0;
    Int hilb_b = 0;
    bool operator==(const SODFactor& o) const { return hilb_a == o.hilb_a && hilb_b == o.hilb_b; }
};

enum class Direction { grows, shrinks, equivalence };

inline std::string direction_str(Direction d) {
    switch (d) {
        case Direction::grows: return "grows";
        case Direction::shrinks: return "shrinks";
        case Direction::equivalence: return "equivalence";
    }
    return "?";
}

struct CrossingSOD {
    WallGroup wall;
    std::vector<Numerology> numerology;  // one entry per group member
    Direction direction = Direction::equivalence;
    std::vector<SODFactor> factors;      // empty iff equivalence
};

namespace detail {

inline void append_factors(std::vector<SODFactor>& out, const Numerology& n) {
    for (Int l = n.l_xi; l >= 0; --l)
        for (Int k = 0; k < n.mu_xi; ++k) out.push_back(SODFactor{l, n.l_xi - l});
}

}  // namespace detail

inline CrossingSOD crossing_sod(const SurfaceModel& s, const DivisorClass& c1, const Int& c2,
                                const WallGroup& group) {
    CrossingSOD out;
    out.wall = group;
    bool any_mu = false;
    for (const WallRecord& rec : group.members) {
        Numerology n = wall_numerology(s, c1, c2, rec.xi);
        if (n.mu_xi > 0) any_mu = true;
        detail::append_factors(out.factors, n);
        out.numerology.push_back(std::move(n));
    }
    if (!any_mu) {
        out.direction = Direction::equivalence;
        out.factors.clear();
    } else {
        out.direction =
            group.members.front().grows_toward_plus ? Direction::grows : Direction::shrinks;
    }
    return out;
}

inline CrossingSOD single_crossing_sod(const SurfaceModel& s, const DivisorClass& c1,
                                       const Int& c2, const WallRecord& wall) {
    WallGroup g;
    g.t_star = wall.t_star;
    g.members.push_back(wall);
    return crossing_sod(s, c1, c2, g);
}

struct FlattenedSOD {
    std::vector<SODFactor> factors;
    std::string endpoint;          // "L-" or "L+"
    bool pure_equivalence = false; // no wall contributed factors
};

struct SODChain {
    std::vector<CrossingSOD> crossings;  // ordered by t_star
    std::optional<FlattenedSOD> flattened;
};

// Chains all crossings of a segment. When every factor-contributing
// crossing points the same way the per-crossing decompositions compose
// into one display, with later crossings outermost on the growing side.
inline SODChain compose_chain(std::vector<CrossingSOD> crossings) {
    for (size_t i = 1; i < crossings.size(); ++i)
        if (!(crossings[i - 1].wall.t_star < crossings[i].wall.t_star))
            throw input_error("compose_chain: crossings are not sorted by t*");

    SODChain chain;
    chain.crossings = std::move(crossings);

    bool any_grows = false, any_shrinks = false;
    for (const CrossingSOD& c : chain.crossings) {
        if (c.direction == Direction::grows) any_grows = true;
        if (c.direction == Direction::shrinks) any_shrinks = true;
    }
    if (any_grows && any_shrinks) return chain;  // mixed: report per crossing

    FlattenedSOD flat;
    if (!any_grows && !any_shrinks) {
        flat.pure_equivalence = true;
        flat.endpoint = "L-";
    } else if (any_grows) {
        // D^b(M_{L+}) = < last factors, ..., first factors, D^b(M_{L-}) >
        flat.endpoint = "L-";
        for (auto it = chain.crossings.rbegin(); it != chain.crossings.rend(); ++it)
            flat.factors.insert(flat.factors.end(), it->factors.begin(), it->factors.end());
    } else {
        // D^b(M_{L-}) = < first factors, ..., last factors, D^b(M_{L+}) >
        flat.endpoint = "L+";
        for (const CrossingSOD& c : chain.crossings)
            flat.factors.insert(flat.factors.end(), c.factors.begin(), c.factors.end());
    }
    chain.flattened = std::move(flat);
    return chain;
}

inline std::string factor_str(const SODFactor& f) {
    if (f.hilb_a == 0 && f.hilb_b == 0) return "D^b(pt)";
    return "D^b(Hilb^" + f.hilb_a.str() + "(S) x Hilb^" + f.hilb_b.str() + "(S))";
}

// Deterministic plain-text rendering. JSON rendering lives in json_io.hpp.
inline std::string render_sod_text(const SODChain& chain) {
    std::string out;
    if (chain.crossings.empty()) {
        out += "no walls crossed: D^b(M_{L+}) ~ D^b(M_{L-})\n";
        return out;
    }
    size_t idx = 1;
    for (const CrossingSOD& c : chain.crossings) {
        std::string t = rat_str(c.wall.t_star);
        out += "[" + std::to_string(idx++) + "] t* = " + t + "  xi = ";
        for (size_t i = 0; i < c.wall.members.size(); ++i) {
            if (i) out += " ~ ";
            out += c.wall.members[i].xi.str();
        }
        if (c.wall.multi_xi) out += " (multi)";
        out += "  " + direction_str(c.direction) + "\n";
        if (c.direction == Direction::equivalence) {
            out += "    D^b(M[t<" + t + "]) ~ D^b(M[t>" + t + "])\n";
        } else {
            std::string big = c.direction == Direction::grows ? "t>" : "t<";
            std::string small = c.direction == Direction::grows ? "t<" : "t>";
            out += "    D^b(M[" + big + t + "]) = < ";
            for (const SODFactor& f : c.factors) out += factor_str(f) + ", ";
            out += "D^b(M[" + small + t + "]) >\n";
        }
    }
    if (chain.flattened) {
        const FlattenedSOD& flat = *chain.flattened;
        if (flat.pure_equivalence) {
            out += "flattened: D^b(M_{L+}) ~ D^b(M_{L-})\n";
        } else {
            std::string lhs = flat.endpoint == "L-" ? "L+" : "L-";
            out += "flattened: D^b(M_{" + lhs + "}) = < ";
            for (const SODFactor& f : flat.factors) out += factor_str(f) + ", ";
            out += "D^b(M_{" + flat.endpoint + "}) >\n";
        }
    } else {
        out += "no flattened decomposition (mixed crossing directions)\n";
    }
    return out;
}

}  // namespace wallcross
