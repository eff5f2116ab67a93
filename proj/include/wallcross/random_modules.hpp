#pragma once

// Randomized valid graded modules for the lemma suite. Commutativity is
// the hard constraint, so modules are built as direct sums of shifted
// monomial quotients k[x]/(x^e) (whose actions commute on the nose) and
// then conjugated by a random base change in every weight; that keeps
// all graded invariants while hiding the monomial basis.

#include "wallcross/graded.hpp"

#include <random>

namespace wallcross {

struct ModuleRng {
    std::mt19937_64 gen;

    explicit ModuleRng(unsigned long long seed) : gen(seed) {}

    long long uniform(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    }
};

namespace detail {

// Count-preserving enumeration of monomials x^alpha with alpha_i < e_i
// (e_i = 0 means unbounded) and total weight target.
inline long long count_monomials(const std::vector<long long>& var_weights,
                                 const std::vector<long long>& bounds, long long target,
                                 size_t i = 0) {
    if (target < 0) return 0;
    if (i == var_weights.size()) return target == 0 ? 1 : 0;
    long long total = 0;
    long long max_a = target / var_weights[i];
    if (bounds[i] > 0) max_a = std::min(max_a, bounds[i] - 1);
    for (long long a = 0; a <= max_a; ++a)
        total += count_monomials(var_weights, bounds, target - a * var_weights[i], i + 1);
    return total;
}

inline void list_monomials(const std::vector<long long>& var_weights,
                           const std::vector<long long>& bounds, long long target,
                           std::vector<long long>& cur,
                           std::vector<std::vector<long long>>& out) {
    size_t i = cur.size();
    if (i == var_weights.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    long long max_a = target / var_weights[i];
    if (bounds[i] > 0) max_a = std::min(max_a, bounds[i] - 1);
    for (long long a = 0; a <= max_a; ++a) {
        cur.push_back(a);
        list_monomials(var_weights, bounds, target - a * var_weights[i], cur, out);
        cur.pop_back();
    }
}

inline QMat random_invertible(ModuleRng& rng, int n) {
    if (n == 0) return QMat(0, 0);
    for (int attempt = 0; attempt < 25; ++attempt) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rat(rng.uniform(-2, 2));
        if (m.rank() == n) return m;
    }
    return QMat::identity(n);
}

}  // namespace detail

struct RandomModuleParams {
    int max_vars = 3;
    long long max_var_weight = 3;
    long long max_window_width = 7;  // window spans at most 8 weights
    long long max_dim = 4;
    int max_pieces = 3;
};

inline TruncatedGradedModule random_module(ModuleRng& rng, const RandomModuleParams& p = {}) {
    TruncatedGradedModule m;
    int n = int(rng.uniform(0, p.max_vars));
    for (int i = 0; i < n; ++i) m.var_weights.push_back(rng.uniform(1, p.max_var_weight));
    m.win_lo = rng.uniform(-4, 3);
    m.win_hi = m.win_lo + rng.uniform(0, p.max_window_width);

    struct Piece {
        long long shift;
        std::vector<long long> bounds;
        std::map<long long, std::vector<std::vector<long long>>> basis;  // weight -> monomials
    };
    std::vector<Piece> pieces;
    std::map<long long, long long> dims;

    int want = int(rng.uniform(1, p.max_pieces));
    for (int k = 0; k < want; ++k) {
        Piece piece;
        piece.shift = rng.uniform(m.win_lo - 2, m.win_hi);
        for (int i = 0; i < n; ++i) {
            long long e = rng.uniform(0, 3);  // 0 = unbounded
            piece.bounds.push_back(e);
        }
        std::map<long long, long long> trial = dims;
        bool fits = true;
        for (long long w = m.win_lo; w <= m.win_hi; ++w) {
            long long c = detail::count_monomials(m.var_weights, piece.bounds, w - piece.shift);
            trial[w] += c;
            if (trial[w] > p.max_dim) fits = false;
        }
        if (!fits) continue;
        for (long long w = m.win_lo; w <= m.win_hi; ++w) {
            std::vector<long long> cur;
            detail::list_monomials(m.var_weights, piece.bounds, w - piece.shift, cur,
                                   piece.basis[w]);
        }
        dims = trial;
        pieces.push_back(std::move(piece));
    }

    for (const auto& [w, d] : dims)
        if (d > 0) m.dims[w] = d;

    // monomial actions: x_i sends alpha to alpha + e_i when in bounds
    for (int i = 0; i < n; ++i) {
        long long wi = m.var_weights[size_t(i)];
        for (long long a = m.win_lo; a + wi <= m.win_hi; ++a) {
            long long rows = m.dim_at(a + wi), cols = m.dim_at(a);
            if (rows == 0 || cols == 0) continue;
            QMat act = QMat(int(rows), int(cols));
            long long col_off = 0, row_off = 0;
            for (const Piece& piece : pieces) {
                const auto& src = piece.basis.at(a);
                const auto& tgt = piece.basis.at(a + wi);
                for (size_t c = 0; c < src.size(); ++c) {
                    std::vector<long long> image = src[c];
                    image[size_t(i)] += 1;
                    if (piece.bounds[size_t(i)] > 0 && image[size_t(i)] >= piece.bounds[size_t(i)])
                        continue;  // killed by the relation
                    for (size_t r = 0; r < tgt.size(); ++r)
                        if (tgt[r] == image)
                            act.at(int(row_off) + int(r), int(col_off) + int(c)) = 1;
                }
                col_off += static_cast<long long>(src.size());
                row_off += static_cast<long long>(tgt.size());
            }
            m.actions[{i, a}] = std::move(act);
        }
    }
    m.normalize();

    // hide the monomial basis behind a random base change per weight
    std::map<long long, QMat> base, base_inv;
    for (const auto& [w, d] : m.dims) {
        QMat change = detail::random_invertible(rng, int(d));
        base_inv[w] = change.inverse();
        base[w] = std::move(change);
    }
    std::map<std::pair<int, long long>, QMat> conjugated;
    for (const auto& [key, act] : m.actions) {
        auto [i, a] = key;
        long long b = a + m.var_weights[size_t(i)];
        conjugated[key] = base.at(b) * act * base_inv.at(a);
    }
    m.actions = std::move(conjugated);
    m.normalize();
    return m;
}

// Fixed-locus module (no variables) with random dimensions.
inline TruncatedGradedModule random_fixed_locus_module(ModuleRng& rng, long long max_dim = 4) {
    TruncatedGradedModule m;
    m.win_lo = rng.uniform(-3, 2);
    m.win_hi = m.win_lo + rng.uniform(0, 4);
    for (long long w = m.win_lo; w <= m.win_hi; ++w) {
        long long d = rng.uniform(0, max_dim);
        if (d > 0) m.dims[w] = d;
    }
    m.normalize();
    return m;
}

}  // namespace wallcross
