#pragma once

// Randomized checks of the truncation and restriction lemmas on finite
// graded modules. Run by `wallcross graded --selftest` and by the test
// suite; everything is exact, so a single failure is a real bug.

#include "wallcross/random_modules.hpp"

#include <sstream>

namespace wallcross {

struct SelftestReport {
    unsigned long long seed = 0;
    long long iterations = 0;
    long long checks_run = 0;
    std::vector<std::string> failures;  // first few, for diagnosis

    bool ok() const { return failures.empty(); }
};

namespace detail {

inline void fail(SelftestReport& rep, long long iter, const std::string& what) {
    if (rep.failures.size() < 10)
        rep.failures.push_back("iteration " + std::to_string(iter) + ": " + what);
    else if (rep.failures.size() == 10)
        rep.failures.push_back("(more failures suppressed)");
}

inline bool euler_identity_holds(const TruncatedGradedModule& m, const TorTable& table) {
    long long tw = m.total_var_weight();
    int n = m.n_vars();
    for (long long w = m.win_lo; w <= m.win_hi + tw; ++w) {
        long long lhs = 0;
        for (int p = 0; p <= n; ++p) lhs += (p % 2 == 0 ? 1 : -1) * table.at(p, w);
        long long rhs = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            long long wt = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) wt += m.var_weights[size_t(i)];
            long long sgn = __builtin_popcount(mask) % 2 == 0 ? 1 : -1;
            rhs += sgn * m.dim_at(w - wt);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

inline bool table_within(const TorTable& table, long long lo, long long hi) {
    for (const auto& [key, dim] : table.entries) {
        (void)dim;
        if (key.second < lo || key.second > hi) return false;
    }
    return true;
}

inline long long min_support(const TruncatedGradedModule& m) {
    return m.dims.empty() ? m.win_hi + 1 : m.dims.begin()->first;
}

// Equal components and action maps; the stored window may differ.
inline bool same_contents(const TruncatedGradedModule& x, const TruncatedGradedModule& y) {
    if (x.var_weights != y.var_weights || x.dims != y.dims) return false;
    for (const auto& [key, mat] : x.actions) {
        (void)mat;
        if (!(x.action_at(key.first, key.second) == y.action_at(key.first, key.second)))
            return false;
    }
    for (const auto& [key, mat] : y.actions) {
        (void)mat;
        if (!(x.action_at(key.first, key.second) == y.action_at(key.first, key.second)))
            return false;
    }
    return true;
}

}  // namespace detail

inline SelftestReport run_graded_selftest(unsigned long long seed, long long iterations) {
    SelftestReport rep;
    rep.seed = seed;
    rep.iterations = iterations;
    ModuleRng rng(seed);

    for (long long iter = 0; iter < iterations; ++iter) {
        TruncatedGradedModule m = random_module(rng);

        auto violations = validate_module(m);
        ++rep.checks_run;
        if (!violations.empty()) {
            detail::fail(rep, iter, "generated module fails validation: " + violations[0].what);
            continue;
        }

        // truncation composes and is idempotent
        long long a = rng.uniform(m.win_lo - 2, m.win_hi + 2);
        long long b = rng.uniform(m.win_lo - 2, m.win_hi + 2);
        ++rep.checks_run;
        if (!(truncate_ge(truncate_ge(m, b), a) == truncate_ge(m, std::max(a, b))))
            detail::fail(rep, iter, "truncation does not compose to max cutoff");
        ++rep.checks_run;
        if (!(truncate_ge(truncate_ge(m, a), a) == truncate_ge(m, a)))
            detail::fail(rep, iter, "truncation is not idempotent");

        // modules already supported above the cutoff are untouched
        ++rep.checks_run;
        if (!(truncate_ge(m, m.win_lo - 1) == m))
            detail::fail(rep, iter, "truncation below the window changed the module");
        ++rep.checks_run;
        if (!detail::same_contents(truncate_ge(m, detail::min_support(m)), m))
            detail::fail(rep, iter, "truncation at the support minimum changed components");

        TorTable table = koszul_tor(m);
        ++rep.checks_run;
        if (!detail::euler_identity_holds(m, table))
            detail::fail(rep, iter, "Koszul Euler identity violated");

        TruncatedGradedModule trunc = truncate_ge(m, a);
        TorTable trunc_table = koszul_tor(trunc);
        ++rep.checks_run;
        if (!detail::euler_identity_holds(trunc, trunc_table))
            detail::fail(rep, iter, "Koszul Euler identity violated after truncation");

        // truncation lemma: derived-restriction weights of the truncation
        // stay inside I intersect [a, infinity) for I the weight hull
        if (!table.entries.empty()) {
            long long min_w = table.entries.begin()->first.second;
            long long max_w = min_w;
            for (const auto& [key, dim] : table.entries) {
                (void)dim;
                min_w = std::min(min_w, key.second);
                max_w = std::max(max_w, key.second);
            }
            ++rep.checks_run;
            if (!detail::table_within(trunc_table, std::max(a, min_w), max_w))
                detail::fail(rep, iter, "truncation lemma violated (weights escaped I n [a,oo))");

            ++rep.checks_run;
            if (weights_concentrated_in(m, min_w, max_w) == Concentration::no)
                detail::fail(rep, iter, "concentration predicate rejects the weight hull");
        }

        // restriction to the fixed locus matches Tor_0
        auto restricted = restrict_to_fixed(m);
        ++rep.checks_run;
        bool restrict_ok = true;
        for (const auto& [w, dim] : restricted)
            if (dim != table.at(0, w)) restrict_ok = false;
        if (!restrict_ok)
            detail::fail(rep, iter, "restrict_to_fixed disagrees with Tor_0");

        // weight components on the fixed locus are exact
        TruncatedGradedModule src = random_fixed_locus_module(rng);
        TruncatedGradedModule dst = random_fixed_locus_module(rng);
        long long total_cols = 0, total_rank = 0, per_weight_rank = 0;
        long long lo = std::min(src.win_lo, dst.win_lo), hi = std::max(src.win_hi, dst.win_hi);
        std::vector<QMat> blocks;
        for (long long w = lo; w <= hi; ++w) {
            QMat f(int(dst.dim_at(w)), int(src.dim_at(w)));
            for (int r = 0; r < f.rows(); ++r)
                for (int c = 0; c < f.cols(); ++c) f.at(r, c) = Rat(rng.uniform(-2, 2));
            per_weight_rank += f.rank();
            total_cols += f.cols();
            blocks.push_back(std::move(f));
        }
        int nrows = 0, ncols = 0;
        for (const QMat& f : blocks) { nrows += f.rows(); ncols += f.cols(); }
        QMat big(nrows, ncols);
        int r0 = 0, c0 = 0;
        for (const QMat& f : blocks) {
            for (int r = 0; r < f.rows(); ++r)
                for (int c = 0; c < f.cols(); ++c) big.at(r0 + r, c0 + c) = f.at(r, c);
            r0 += f.rows();
            c0 += f.cols();
        }
        total_rank = big.rank();
        ++rep.checks_run;
        if (total_rank != per_weight_rank)
            detail::fail(rep, iter, "weight components are not exact on a fixed-locus map");
        ++rep.checks_run;
        long long comp_sum = 0, dim_sum = 0;
        for (long long w = src.win_lo; w <= src.win_hi; ++w) comp_sum += weight_component(src, w);
        for (const auto& [w, d] : src.dims) { (void)w; dim_sum += d; }
        if (comp_sum != dim_sum)
            detail::fail(rep, iter, "weight components do not sum to the module");
    }
    return rep;
}

inline std::string selftest_summary(const SelftestReport& rep) {
    std::ostringstream out;
    out << "seed: " << rep.seed << "\n";
    out << "iterations: " << rep.iterations << "\n";
    out << "checks: " << rep.checks_run << "\n";
    if (rep.ok()) {
        out << "result: PASS\n";
    } else {
        out << "result: FAIL\n";
        for (const std::string& f : rep.failures) out << "  " << f << "\n";
    }
    return out.str();
}

}  // namespace wallcross
