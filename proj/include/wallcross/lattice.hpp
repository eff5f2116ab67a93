#pragma once

// Integer model of the Neron-Severi lattice of a rational surface:
// intersection pairing, canonical class, built-in presets and an
// ample-cone oracle. The intersection form must have signature
// (1, rank-1); this is verified exactly on construction.

#include "wallcross/matrix.hpp"
#include "wallcross/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallcross {

struct DivisorClass {
    std::vector<Int> coords;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<Int> c) : coords(std::move(c)) {}
    DivisorClass(std::initializer_list<long long> c) {
        coords.reserve(c.size());
        for (long long v : c) coords.emplace_back(v);
    }

    int size() const { return int(coords.size()); }
    bool is_zero() const {
        for (const Int& v : coords)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const DivisorClass& o) const { return coords == o.coords; }
    bool operator<(const DivisorClass& o) const { return coords < o.coords; }

    DivisorClass operator+(const DivisorClass& o) const {
        if (coords.size() != o.coords.size()) throw input_error("divisor class dimension mismatch");
        DivisorClass r = *this;
        for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
        return r;
    }
    DivisorClass operator-(const DivisorClass& o) const {
        if (coords.size() != o.coords.size()) throw input_error("divisor class dimension mismatch");
        DivisorClass r = *this;
        for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
        return r;
    }
    DivisorClass operator-() const {
        DivisorClass r = *this;
        for (Int& v : r.coords) v = -v;
        return r;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += coords[i].str();
        }
        return s + ")";
    }
};

enum class AmpleOracle { P2, P1xP1, Hirzebruch, Custom };

struct SurfaceModel {
    int rank = 0;
    std::vector<std::vector<Int>> gram;  // symmetric, signature (1, rank-1)
    DivisorClass canonical;
    AmpleOracle oracle = AmpleOracle::Custom;
    int hirzebruch_n = 0;
    std::vector<DivisorClass> asserted_ample;  // custom lattices only
    std::string tag;                           // preset name or "custom"
};

namespace detail {

inline void check_dim(const SurfaceModel& s, const DivisorClass& d) {
    if (d.size() != s.rank)
        throw input_error("divisor class has " + std::to_string(d.size()) +
                          " coordinates, lattice rank is " + std::to_string(s.rank));
}

inline void check_gram(const SurfaceModel& s) {
    if (s.rank <= 0 || int(s.gram.size()) != s.rank)
        throw input_error("gram matrix size does not match rank");
    QMat g(s.rank, s.rank);
    for (int i = 0; i < s.rank; ++i) {
        if (int(s.gram[i].size()) != s.rank) throw input_error("gram matrix is not square");
        for (int j = 0; j < s.rank; ++j) g.at(i, j) = Rat(s.gram[i][j]);
    }
    for (int i = 0; i < s.rank; ++i)
        for (int j = i + 1; j < s.rank; ++j)
            if (s.gram[i][j] != s.gram[j][i]) throw input_error("gram matrix is not symmetric");
    Signature sig = symmetric_signature(g);
    if (sig.pos != 1 || sig.neg != s.rank - 1)
        throw input_error("intersection form does not have signature (1," +
                          std::to_string(s.rank - 1) + "): got (" + std::to_string(sig.pos) +
                          "," + std::to_string(sig.neg) + ") with " + std::to_string(sig.zero) +
                          " radical directions");
}

}  // namespace detail

inline Int intersect(const SurfaceModel& s, const DivisorClass& d1, const DivisorClass& d2) {
    detail::check_dim(s, d1);
    detail::check_dim(s, d2);
    Int acc = 0;
    for (int i = 0; i < s.rank; ++i) {
        if (d1.coords[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < s.rank; ++j) row += s.gram[i][j] * d2.coords[j];
        acc += d1.coords[i] * row;
    }
    return acc;
}

inline Int self_intersect(const SurfaceModel& s, const DivisorClass& d) {
    return intersect(s, d, d);
}

// omega_S^{-1} . d, i.e. (-K_S) . d
inline Int anti_canonical_degree(const SurfaceModel& s, const DivisorClass& d) {
    return intersect(s, -s.canonical, d);
}

inline bool is_ample(const SurfaceModel& s, const DivisorClass& d) {
    detail::check_dim(s, d);
    switch (s.oracle) {
        case AmpleOracle::P2:
            return d.coords[0] > 0;
        case AmpleOracle::P1xP1:
            return d.coords[0] > 0 && d.coords[1] > 0;
        case AmpleOracle::Hirzebruch: {
            // basis (e, f): a*e + b*f is ample iff a > 0 and b > n*a
            const Int& a = d.coords[0];
            const Int& b = d.coords[1];
            return a > 0 && b > Int(s.hirzebruch_n) * a;
        }
        case AmpleOracle::Custom: {
            for (const DivisorClass& c : s.asserted_ample)
                if (c == d) return true;
            throw ample_uncertainty_error(
                "cannot certify ampleness of " + d.str() +
                " on a custom lattice: class is not in the asserted ample list");
        }
    }
    throw input_error("unreachable ample oracle");
}

inline SurfaceModel make_custom_surface(int rank, std::vector<std::vector<Int>> gram,
                                        DivisorClass canonical,
                                        std::vector<DivisorClass> ample_classes) {
    SurfaceModel s;
    s.rank = rank;
    s.gram = std::move(gram);
    s.canonical = std::move(canonical);
    s.oracle = AmpleOracle::Custom;
    s.asserted_ample = std::move(ample_classes);
    s.tag = "custom";
    detail::check_gram(s);
    detail::check_dim(s, s.canonical);
    for (const DivisorClass& a : s.asserted_ample) detail::check_dim(s, a);
    return s;
}

// Presets: "p2", "p1xp1", "hirzebruch:n" (n >= 0). Basis conventions:
// p1xp1 uses (H1, H2); hirzebruch uses (e, f) with e the section of
// self-intersection -n and f the fiber.
inline SurfaceModel surface_preset(const std::string& name) {
    SurfaceModel s;
    s.tag = name;
    if (name == "p2") {
        s.rank = 1;
        s.gram = {{Int(1)}};
        s.canonical = DivisorClass{-3};
        s.oracle = AmpleOracle::P2;
    } else if (name == "p1xp1") {
        s.rank = 2;
        s.gram = {{Int(0), Int(1)}, {Int(1), Int(0)}};
        s.canonical = DivisorClass{-2, -2};
        s.oracle = AmpleOracle::P1xP1;
    } else if (name.rfind("hirzebruch:", 0) == 0) {
        int n = 0;
        try {
            size_t pos = 0;
            std::string num = name.substr(11);
            n = std::stoi(num, &pos);
            if (pos != num.size() || n < 0) throw std::invalid_argument("bad n");
        } catch (const std::exception&) {
            throw input_error("unknown preset '" + name + "' (expected hirzebruch:n with n >= 0)");
        }
        s.rank = 2;
        s.gram = {{Int(-n), Int(1)}, {Int(1), Int(0)}};
        s.canonical = DivisorClass{-2, -(n + 2)};
        s.oracle = AmpleOracle::Hirzebruch;
        s.hirzebruch_n = n;
    } else {
        throw input_error("unknown surface preset '" + name + "'");
    }
    detail::check_gram(s);
    return s;
}

inline std::optional<SurfaceModel> try_surface_preset(const std::string& name) {
    if (name == "p2" || name == "p1xp1" || name.rfind("hirzebruch:", 0) == 0)
        return surface_preset(name);
    return std::nullopt;
}

}  // namespace wallcross
