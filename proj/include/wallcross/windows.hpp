#pragma once

// Integer arithmetic of window widths and elementary wall crossings.
// A stratum carries strictly negative conormal weights; t, the weight
// of its relative canonical sheaf, is their sum. A window over the
// complement has -t consecutive integer weights, and comparing the two
// strata of a crossing classifies it into three cases with
// |t_minus - t_plus| complementary pieces.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcross {

struct StratumWeights {
    std::vector<long long> conormal;  // all < 0 (may be empty: codimension 0)
    std::vector<long long> fiber;     // all > 0

    void validate() const {
        for (long long w : conormal)
            if (w >= 0)
                throw std::invalid_argument("conormal weight " + std::to_string(w) +
                                            " is not strictly negative");
        for (long long w : fiber)
            if (w <= 0)
                throw std::invalid_argument("fiber weight " + std::to_string(w) +
                                            " is not strictly positive");
    }
};

inline long long relative_canonical_weight(const std::vector<long long>& conormal) {
    long long t = 0;
    for (long long w : conormal) {
        if (w >= 0)
            throw std::invalid_argument("conormal weight " + std::to_string(w) +
                                        " is not strictly negative");
        t += w;
    }
    return t;
}

struct WeightInterval {
    long long lo = 0;
    long long hi = -1;  // hi < lo encodes the empty interval

    long long count() const { return hi < lo ? 0 : hi - lo + 1; }
    bool contains(long long w) const { return lo <= w && w <= hi; }
    bool operator==(const WeightInterval& o) const { return lo == o.lo && hi == o.hi; }
};

// [d, d - t - 1]: exactly -t integers.
inline WeightInterval window_interval(long long t, long long d) {
    if (t >= 0) throw std::invalid_argument("window_interval: t must be negative");
    return WeightInterval{d, d - t - 1};
}

struct PeelResult {
    std::vector<long long> peeled;  // stripped weights, highest first
    WeightInterval core;
};

// Strips the top weight of [u,v] one step at a time while v - u >= -t,
// leaving the core window [u, u - t - 1].
inline PeelResult peel_window(long long t, WeightInterval interval) {
    if (t >= 0) throw std::invalid_argument("peel_window: t must be negative");
    if (interval.hi - interval.lo < -t)
        throw std::invalid_argument("peel_window: interval [" + std::to_string(interval.lo) +
                                    "," + std::to_string(interval.hi) +
                                    "] is already at core length or smaller");
    PeelResult out;
    out.core = WeightInterval{interval.lo, interval.lo - t - 1};
    for (long long w = interval.hi; w > out.core.hi; --w) out.peeled.push_back(w);
    return out;
}

struct WindowReport {
    long long t_minus = 0;
    long long t_plus = 0;
    long long d = 0;
    WeightInterval interval_minus;
    WeightInterval interval_plus;
    int crossing_case = 2;  // 1, 2, or 3
    std::vector<long long> upsilon_indices;
};

// Three-way comparison of an elementary wall crossing. Case 1
// (t+ < t-) embeds D^b(U-) into D^b(U+) with complementary pieces at
// weights -t- + d .. -t+ + d - 1; case 3 is the mirror; case 2 is an
// equivalence.
inline WindowReport classify_crossing(const StratumWeights& minus, const StratumWeights& plus,
                                      long long d) {
    minus.validate();
    plus.validate();
    WindowReport rep;
    rep.t_minus = relative_canonical_weight(minus.conormal);
    rep.t_plus = relative_canonical_weight(plus.conormal);
    rep.d = d;
    rep.interval_minus = WeightInterval{d, d - rep.t_minus - 1};
    rep.interval_plus = WeightInterval{d, d - rep.t_plus - 1};
    if (rep.t_plus < rep.t_minus) {
        rep.crossing_case = 1;
        for (long long j = -rep.t_minus + d; j <= -rep.t_plus + d - 1; ++j)
            rep.upsilon_indices.push_back(j);
    } else if (rep.t_plus > rep.t_minus) {
        rep.crossing_case = 3;
        for (long long j = -rep.t_plus + d; j <= -rep.t_minus + d - 1; ++j)
            rep.upsilon_indices.push_back(j);
    } else {
        rep.crossing_case = 2;
    }
    return rep;
}

namespace detail {

// Weight multiset of Sym^s of a list, i.e. all sums of multisets of
// size s, with multiplicities.
inline std::map<long long, long long> sym_weights(const std::vector<long long>& weights,
                                                  long long s) {
    if (s == 0) return {{0, 1}};
    // dp over generators: choose how many copies of each
    std::vector<std::map<long long, long long>> by_count(size_t(s) + 1);
    by_count[0][0] = 1;
    for (long long w : weights) {
        for (long long used = s; used >= 0; --used) {
            for (const auto& [sum, mult] : by_count[size_t(used)]) {
                for (long long extra = 1; used + extra <= s; ++extra)
                    by_count[size_t(used + extra)][sum + extra * w] += mult;
            }
        }
    }
    return by_count[size_t(s)];
}

}  // namespace detail

// Weights of Sym^s(normal) (x) omega^{-1} (x) fiber polynomials of
// degree <= order, for 0 <= s <= order. Normal weights are the negated
// conormal weights; omega^{-1} contributes the single weight -t. The
// minimum is always -t, attained once at s = 0, degree 0.
inline std::map<long long, long long> weight_series(const StratumWeights& w, long long order) {
    if (order < 0) throw std::invalid_argument("weight_series: negative truncation order");
    w.validate();
    long long t = relative_canonical_weight(w.conormal);
    std::vector<long long> normal;
    normal.reserve(w.conormal.size());
    for (long long c : w.conormal) normal.push_back(-c);

    std::map<long long, long long> fiber_part;  // degrees 0..order combined
    for (long long deg = 0; deg <= order; ++deg)
        for (const auto& [sum, mult] : detail::sym_weights(w.fiber, deg)) fiber_part[sum] += mult;

    std::map<long long, long long> out;
    for (long long s = 0; s <= order; ++s)
        for (const auto& [nsum, nmult] : detail::sym_weights(normal, s))
            for (const auto& [fsum, fmult] : fiber_part) out[nsum + (-t) + fsum] += nmult * fmult;
    return out;
}

}  // namespace wallcross
