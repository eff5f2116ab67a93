#pragma once

// Finite weight-graded modules over a polynomial ring whose variables
// carry strictly positive weights: the desk-scale model of an
// equivariant sheaf on the local chart of a contracting stratum. A
// module stores a window of weight components (dimensions of rational
// vector spaces) and, per variable, the action maps between them.
// Components outside the window vanish; the window's upper edge is a
// storage cutoff, so derived data near it is flagged rather than
// trusted (see TorTable::safe_lo/safe_hi).

#include "wallcross/matrix.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace wallcross {

struct TruncatedGradedModule {
    std::vector<long long> var_weights;       // strictly positive
    long long win_lo = 0;
    long long win_hi = -1;                    // win_hi < win_lo: empty module
    std::map<long long, long long> dims;      // weight -> dimension, nonzero entries only
    // (variable index, source weight) -> matrix of shape dim(a + w_i) x dim(a)
    std::map<std::pair<int, long long>, QMat> actions;

    int n_vars() const { return int(var_weights.size()); }

    long long total_var_weight() const {
        long long t = 0;
        for (long long w : var_weights) t += w;
        return t;
    }

    long long dim_at(long long w) const {
        auto it = dims.find(w);
        return it == dims.end() ? 0 : it->second;
    }

    QMat action_at(int i, long long a) const {
        auto it = actions.find({i, a});
        if (it != actions.end()) return it->second;
        return QMat(int(dim_at(a + var_weights[size_t(i)])), int(dim_at(a)));
    }

    // Drop zero dimensions and matrices against zero-dimensional
    // components so structurally equal modules compare equal.
    void normalize() {
        for (auto it = dims.begin(); it != dims.end();) {
            if (it->second <= 0 || it->first < win_lo || it->first > win_hi)
                it = dims.erase(it);
            else
                ++it;
        }
        for (auto it = actions.begin(); it != actions.end();) {
            auto [i, a] = it->first;
            if (i < 0 || i >= n_vars() || dim_at(a) == 0 ||
                dim_at(a + var_weights[size_t(i)]) == 0)
                it = actions.erase(it);
            else
                ++it;
        }
    }

    bool operator==(const TruncatedGradedModule& o) const {
        if (var_weights != o.var_weights || dims != o.dims) return false;
        if (win_lo != o.win_lo || win_hi != o.win_hi) return false;
        // compare actions through the zero-filled view
        for (const auto& [key, m] : actions) {
            (void)m;
            if (!(action_at(key.first, key.second) == o.action_at(key.first, key.second)))
                return false;
        }
        for (const auto& [key, m] : o.actions) {
            (void)m;
            if (!(action_at(key.first, key.second) == o.action_at(key.first, key.second)))
                return false;
        }
        return true;
    }
};

struct ModuleViolation {
    std::string what;
};

// Shape and commutativity diagnostics; an empty result means valid.
inline std::vector<ModuleViolation> validate_module(const TruncatedGradedModule& m) {
    std::vector<ModuleViolation> out;
    for (long long w : m.var_weights)
        if (w <= 0) out.push_back({"variable weight " + std::to_string(w) + " is not positive"});
    for (const auto& [w, d] : m.dims) {
        if (d < 0) out.push_back({"negative dimension at weight " + std::to_string(w)});
        if (w < m.win_lo || w > m.win_hi)
            out.push_back({"component at weight " + std::to_string(w) + " outside window"});
    }
    for (const auto& [key, mat] : m.actions) {
        auto [i, a] = key;
        if (i < 0 || i >= m.n_vars()) {
            out.push_back({"action for unknown variable index " + std::to_string(i)});
            continue;
        }
        long long b = a + m.var_weights[size_t(i)];
        if (mat.rows() != int(m.dim_at(b)) || mat.cols() != int(m.dim_at(a)))
            out.push_back({"action x_" + std::to_string(i) + " at weight " + std::to_string(a) +
                           " has shape " + std::to_string(mat.rows()) + "x" +
                           std::to_string(mat.cols()) + ", expected " +
                           std::to_string(m.dim_at(b)) + "x" + std::to_string(m.dim_at(a))});
    }
    if (!out.empty()) return out;  // commutativity needs sane shapes

    for (int i = 0; i < m.n_vars(); ++i)
        for (int j = i + 1; j < m.n_vars(); ++j) {
            long long wi = m.var_weights[size_t(i)], wj = m.var_weights[size_t(j)];
            for (const auto& [a, d] : m.dims) {
                (void)d;
                if (a + wi + wj > m.win_hi) continue;
                QMat ij = m.action_at(j, a + wi) * m.action_at(i, a);
                QMat ji = m.action_at(i, a + wj) * m.action_at(j, a);
                if (!(ij == ji))
                    out.push_back({"actions x_" + std::to_string(i) + " and x_" +
                                   std::to_string(j) + " do not commute from weight " +
                                   std::to_string(a)});
            }
        }
    return out;
}

// Weight component of a module over the fixed locus (no variables).
// With variables present the component is not a submodule, so this
// refuses to answer.
inline long long weight_component(const TruncatedGradedModule& m, long long i) {
    if (m.n_vars() != 0)
        throw std::invalid_argument(
            "weight_component: module has variable actions; components are not submodules");
    return m.dim_at(i);
}

inline TruncatedGradedModule truncate_ge(const TruncatedGradedModule& m, long long a) {
    TruncatedGradedModule out;
    out.var_weights = m.var_weights;
    out.win_lo = std::max(m.win_lo, a);
    out.win_hi = m.win_hi;
    for (const auto& [w, d] : m.dims)
        if (w >= a) out.dims[w] = d;
    for (const auto& [key, mat] : m.actions)
        if (key.second >= a) out.actions[key] = mat;
    out.normalize();
    return out;
}

// Cokernel dimensions of (+) M_{w - w_i} -> M_w for each window weight:
// the underived restriction to the fixed locus.
inline std::map<long long, long long> restrict_to_fixed(const TruncatedGradedModule& m) {
    std::map<long long, long long> out;
    for (long long w = m.win_lo; w <= m.win_hi; ++w) {
        long long target = m.dim_at(w);
        if (target == 0) {
            out[w] = 0;
            continue;
        }
        int cols = 0;
        for (int i = 0; i < m.n_vars(); ++i) cols += int(m.dim_at(w - m.var_weights[size_t(i)]));
        QMat stacked(int(target), cols);
        int off = 0;
        for (int i = 0; i < m.n_vars(); ++i) {
            long long src = w - m.var_weights[size_t(i)];
            QMat blk = m.action_at(i, src);
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c) stacked.at(r, off + c) = blk.at(r, c);
            off += blk.cols();
        }
        out[w] = target - stacked.rank();
    }
    return out;
}

struct TorTable {
    // Entries with weight in [safe_lo, safe_hi] are unaffected by the
    // window cutoff; entries above win_hi describe the stored finite
    // module only.
    long long safe_lo = 0;
    long long safe_hi = -1;
    std::map<std::pair<int, long long>, long long> entries;  // (hom degree, weight) -> dim

    long long at(int p, long long w) const {
        auto it = entries.find({p, w});
        return it == entries.end() ? 0 : it->second;
    }
};

namespace detail {

// Koszul group K_p at total weight w: one block M_{w - w_T} per subset
// T of the variables with |T| = p.
struct KoszulLayout {
    std::vector<unsigned> subsets;  // bitmasks with p bits
    std::vector<int> offsets;       // column offset per subset
    int total = 0;
};

inline KoszulLayout koszul_layout(const TruncatedGradedModule& m, int p, long long w) {
    KoszulLayout lay;
    int n = m.n_vars();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != p) continue;
        long long wt = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) wt += m.var_weights[size_t(i)];
        lay.subsets.push_back(mask);
        lay.offsets.push_back(lay.total);
        lay.total += int(m.dim_at(w - wt));
    }
    return lay;
}

// Differential K_p -> K_{p-1} at weight w, alternating contraction with
// the variable actions.
inline QMat koszul_differential(const TruncatedGradedModule& m, int p, long long w,
                                const KoszulLayout& from, const KoszulLayout& to) {
    (void)p;
    QMat d(to.total, from.total);
    int n = m.n_vars();
    auto index_of = [&](unsigned mask) {
        for (size_t k = 0; k < to.subsets.size(); ++k)
            if (to.subsets[k] == mask) return int(k);
        return -1;
    };
    for (size_t s = 0; s < from.subsets.size(); ++s) {
        unsigned mask = from.subsets[s];
        long long wt = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) wt += m.var_weights[size_t(i)];
        long long src_weight = w - wt;
        int sign_pos = 0;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            unsigned sub = mask & ~(1u << i);
            int tgt = index_of(sub);
            QMat blk = m.action_at(i, src_weight);
            int sgn = (sign_pos % 2 == 0) ? 1 : -1;
            int r0 = to.offsets[size_t(tgt)], c0 = from.offsets[s];
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c)
                    d.at(r0 + r, c0 + c) = sgn == 1 ? blk.at(r, c) : -blk.at(r, c);
            ++sign_pos;
        }
    }
    return d;
}

}  // namespace detail

// Graded homology of the Koszul complex M (x) Lambda^*(variables):
// the derived restriction to the fixed locus, one dimension per
// (homological degree, weight). Computed for every weight the finite
// module can touch, [win_lo, win_hi + sum w_i]; certified against the
// cutoff only on [win_lo + sum w_i, win_hi].
inline TorTable koszul_tor(const TruncatedGradedModule& m) {
    TorTable table;
    long long tw = m.total_var_weight();
    table.safe_lo = m.win_lo + tw;
    table.safe_hi = m.win_hi;
    if (m.dims.empty()) return table;

    int n = m.n_vars();
    for (long long w = m.win_lo; w <= m.win_hi + tw; ++w) {
        std::vector<detail::KoszulLayout> lay(size_t(n) + 1);
        for (int p = 0; p <= n; ++p) lay[size_t(p)] = detail::koszul_layout(m, p, w);
        std::vector<int> rank_d(size_t(n) + 2, 0);  // rank of d_p: K_p -> K_{p-1}
        for (int p = 1; p <= n; ++p) {
            if (lay[size_t(p)].total == 0 || lay[size_t(p) - 1].total == 0) continue;
            QMat d = detail::koszul_differential(m, p, w, lay[size_t(p)], lay[size_t(p) - 1]);
            rank_d[size_t(p)] = d.rank();
        }
        for (int p = 0; p <= n; ++p) {
            long long h = lay[size_t(p)].total - rank_d[size_t(p)] - rank_d[size_t(p) + 1];
            if (h != 0) table.entries[{p, w}] = h;
        }
    }
    return table;
}

enum class Concentration { yes, no, unknown };

inline std::string concentration_str(Concentration c) {
    switch (c) {
        case Concentration::yes: return "true";
        case Concentration::no: return "false";
        case Concentration::unknown: return "unknown";
    }
    return "?";
}

// Are all derived-restriction weights inside [lo, hi]? Entries at
// weights <= win_hi are decisive. A nonzero component within one total
// variable weight of the cutoff means entries past win_hi cannot be
// trusted, so a clean table only earns "unknown" there.
inline Concentration weights_concentrated_in(const TruncatedGradedModule& m, long long lo,
                                             long long hi) {
    TorTable table = koszul_tor(m);
    for (const auto& [key, dim] : table.entries) {
        (void)dim;
        if (key.second <= m.win_hi && (key.second < lo || key.second > hi))
            return Concentration::no;
    }
    long long tw = m.total_var_weight();
    for (const auto& [w, d] : m.dims)
        if (d > 0 && w > m.win_hi - tw) return Concentration::unknown;
    return Concentration::yes;
}

}  // namespace wallcross
