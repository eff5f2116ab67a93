#pragma once

// Fincke-Pohst enumeration of all integer vectors v with
// v^T Q v <= bound for a positive-definite rational form Q.
// The recursion bounds each coordinate by an exact interval derived
// from the LDL^T factorization; no floating point is involved.

#include "wallcross/matrix.hpp"
#include "wallcross/rational.hpp"

#include <algorithm>
#include <vector>

namespace wallcross {

namespace detail {

struct Ldlt {
    std::vector<Rat> d;   // positive pivots
    QMat u;               // unit upper triangular, Q = U^T D U
};

inline Ldlt ldlt_positive_definite(const QMat& q) {
    const int n = q.rows();
    if (q.cols() != n) throw std::invalid_argument("short_vectors: form is not square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (q.at(i, j) != q.at(j, i))
                throw std::invalid_argument("short_vectors: form is not symmetric");
    QMat m = q;
    Ldlt f;
    f.d.assign(n, Rat(0));
    f.u = QMat::identity(n);
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k) <= 0)
            throw std::invalid_argument("short_vectors: form is not positive definite");
        f.d[k] = m.at(k, k);
        for (int j = k + 1; j < n; ++j) f.u.at(k, j) = m.at(k, j) / f.d[k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) -= m.at(k, i) * m.at(k, j) / f.d[k];
    }
    return f;
}

// Largest integer interval [lo,hi] with d*(t + c)^2 <= r (d > 0, r >= 0).
// Seeded by an integer sqrt bound, then tightened with the exact predicate.
inline void coordinate_range(const Rat& d, const Rat& c, const Rat& r, Int& lo, Int& hi,
                             bool& empty) {
    empty = false;
    if (r < 0) { empty = true; return; }
    Rat w = r / d;                       // (t + c)^2 <= w
    Int s = isqrt_floor(floor_rat(w)) + 1;  // s >= sqrt(w)
    Int center_lo = floor_rat(-c), center_hi = ceil_rat(-c);
    lo = center_lo - s;
    hi = center_hi + s;
    auto ok = [&](const Int& t) {
        Rat x = Rat(t) + c;
        return d * x * x <= r;
    };
    while (lo <= hi && !ok(lo)) ++lo;
    while (hi >= lo && !ok(hi)) --hi;
    empty = lo > hi;
}

}  // namespace detail

// Exactly { v in Z^n : v^T Q v <= bound }, zero vector and both signs
// included. Output is sorted lexicographically for determinism.
inline std::vector<std::vector<Int>> short_vectors(const QMat& gram_pd, const Rat& bound) {
    if (bound < 0) throw std::invalid_argument("short_vectors: negative bound");
    const int n = gram_pd.rows();
    detail::Ldlt f = detail::ldlt_positive_definite(gram_pd);

    std::vector<std::vector<Int>> out;
    std::vector<Int> v(n, Int(0));

    // Q(v) = sum_i d_i (v_i + sum_{j>i} u_ij v_j)^2, filled from the last
    // coordinate down so each level has an exact residual budget.
    auto rec = [&](auto&& self, int level, const Rat& budget) -> void {
        if (level < 0) {
            out.push_back(v);
            return;
        }
        Rat c(0);
        for (int j = level + 1; j < n; ++j)
            if (v[j] != 0) c += f.u.at(level, j) * Rat(v[j]);
        Int lo, hi;
        bool empty;
        detail::coordinate_range(f.d[level], c, budget, lo, hi, empty);
        if (empty) return;
        for (Int t = lo; t <= hi; ++t) {
            v[level] = t;
            Rat x = Rat(t) + c;
            self(self, level - 1, budget - f.d[level] * x * x);
        }
        v[level] = 0;
    };
    rec(rec, n - 1, bound);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wallcross
