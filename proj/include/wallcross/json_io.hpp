#pragma once

// JSON schemas for the CLI surfaces:
//   surface     {"preset": "p1xp1"} | {"custom": {rank, gram, canonical, ample_classes}}
//   wall list   [{"xi": [...], "t_star": "11/12", "xi_sq": -6,
//                 "multi_xi": false, "grows_toward_plus": false}, ...]
//   sod         {"crossings": [{"xi": [...], "direction": ..., "factors": [{"hilb":[a,b]}]}],
//                "flattened": {"factors": [...], "endpoint": "L-"} | null}
//   module      {"var_weights": [...], "window": [lo,hi], "components": {"w": dim},
//                "actions": {"var": {"weight": [[...]]}}}
//   window rpt  {"t_minus": .., "t_plus": .., "case": .., "windows": {...}, "upsilon_indices": [..]}
// Rationals serialize as "num/den" strings; exact integers as numbers.

#include "wallcross/graded.hpp"
#include "wallcross/sod.hpp"
#include "wallcross/windows.hpp"

#include <json.hpp>

#include <fstream>

namespace wallcross {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace detail {

inline json int_to_json(const Int& v) {
    // stay a JSON number while exactly representable, else a string
    static const Int lim = Int(1) << 53;
    if (v >= -lim && v <= lim) return json(to_i64(v));
    return json(v.str());
}

inline Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw input_error("expected integer at " + where);
}

inline Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw input_error("expected rational at " + where);
}

}  // namespace detail

inline json divisor_to_json(const DivisorClass& d) {
    json arr = json::array();
    for (const Int& v : d.coords) arr.push_back(detail::int_to_json(v));
    return arr;
}

inline DivisorClass divisor_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error("expected coordinate array at " + where);
    DivisorClass d;
    for (const auto& v : j) d.coords.push_back(detail::int_from_json(v, where));
    return d;
}

// ---------------------------------------------------------------- surface

inline json surface_to_json(const SurfaceModel& s) {
    if (s.oracle != AmpleOracle::Custom) return json{{"preset", s.tag}};
    json gram = json::array();
    for (const auto& row : s.gram) {
        json r = json::array();
        for (const Int& v : row) r.push_back(detail::int_to_json(v));
        gram.push_back(r);
    }
    json ample = json::array();
    for (const DivisorClass& a : s.asserted_ample) ample.push_back(divisor_to_json(a));
    return json{{"custom",
                 {{"rank", s.rank},
                  {"gram", gram},
                  {"canonical", divisor_to_json(s.canonical)},
                  {"ample_classes", ample}}}};
}

inline SurfaceModel surface_from_json(const json& j) {
    if (j.contains("preset")) {
        if (!j["preset"].is_string()) throw input_error("surface preset must be a string");
        return surface_preset(j["preset"].get<std::string>());
    }
    if (!j.contains("custom")) throw input_error("surface JSON needs 'preset' or 'custom'");
    const json& c = j["custom"];
    if (!c.contains("rank") || !c.contains("gram") || !c.contains("canonical"))
        throw input_error("custom surface needs rank, gram and canonical");
    int rank = c["rank"].get<int>();
    std::vector<std::vector<Int>> gram;
    for (const auto& row : c["gram"]) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(detail::int_from_json(v, "gram"));
        gram.push_back(std::move(r));
    }
    DivisorClass canonical = divisor_from_json(c["canonical"], "canonical");
    std::vector<DivisorClass> ample;
    if (c.contains("ample_classes"))
        for (const auto& a : c["ample_classes"]) ample.push_back(divisor_from_json(a, "ample_classes"));
    return make_custom_surface(rank, std::move(gram), std::move(canonical), std::move(ample));
}

inline SurfaceModel load_surface(const std::string& preset_or_path) {
    if (auto s = try_surface_preset(preset_or_path)) return *s;
    std::ifstream in(preset_or_path);
    if (!in)
        throw input_error("'" + preset_or_path +
                          "' is neither a surface preset nor a readable file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("surface file " + preset_or_path + ": " + e.what());
    }
    return surface_from_json(j);
}

// ---------------------------------------------------------------- walls

inline json walls_to_json(const std::vector<WallGroup>& groups) {
    json arr = json::array();
    for (const WallGroup& g : groups)
        for (const WallRecord& rec : g.members)
            arr.push_back(json{{"xi", divisor_to_json(rec.xi)},
                               {"t_star", rat_str(rec.t_star)},
                               {"xi_sq", detail::int_to_json(rec.xi_sq)},
                               {"multi_xi", g.multi_xi},
                               {"grows_toward_plus", rec.grows_toward_plus}});
    return arr;
}

inline std::vector<WallGroup> walls_from_json(const json& arr) {
    if (!arr.is_array()) throw input_error("wall list must be an array");
    std::vector<WallRecord> recs;
    for (const auto& e : arr) {
        WallRecord rec;
        rec.xi = divisor_from_json(e.at("xi"), "xi");
        rec.t_star = detail::rat_from_json(e.at("t_star"), "t_star");
        rec.xi_sq = detail::int_from_json(e.at("xi_sq"), "xi_sq");
        rec.grows_toward_plus = e.at("grows_toward_plus").get<bool>();
        recs.push_back(std::move(rec));
    }
    return group_and_sort(recs);
}

// ---------------------------------------------------------------- sod

inline json sod_to_json(const SODChain& chain) {
    json crossings = json::array();
    for (const CrossingSOD& c : chain.crossings) {
        json factors = json::array();
        for (const SODFactor& f : c.factors)
            factors.push_back(json{{"hilb", json::array({detail::int_to_json(f.hilb_a),
                                                         detail::int_to_json(f.hilb_b)})}});
        // one entry per wall group; a multi-class wall lists every xi
        json xi;
        if (c.wall.members.size() == 1) {
            xi = divisor_to_json(c.wall.members[0].xi);
        } else {
            xi = json::array();
            for (const WallRecord& rec : c.wall.members) xi.push_back(divisor_to_json(rec.xi));
        }
        crossings.push_back(json{{"xi", xi},
                                 {"t_star", rat_str(c.wall.t_star)},
                                 {"multi_xi", c.wall.multi_xi},
                                 {"direction", direction_str(c.direction)},
                                 {"factors", factors}});
    }
    json flattened;
    if (chain.flattened) {
        json factors = json::array();
        for (const SODFactor& f : chain.flattened->factors)
            factors.push_back(json{{"hilb", json::array({detail::int_to_json(f.hilb_a),
                                                         detail::int_to_json(f.hilb_b)})}});
        flattened = json{{"factors", factors},
                         {"endpoint", chain.flattened->endpoint},
                         {"pure_equivalence", chain.flattened->pure_equivalence}};
    } else {
        flattened = nullptr;
    }
    return json{{"crossings", crossings}, {"flattened", flattened}};
}

inline SODChain sod_from_json(const json& j) {
    SODChain chain;
    for (const auto& e : j.at("crossings")) {
        CrossingSOD c;
        c.wall.t_star = detail::rat_from_json(e.at("t_star"), "t_star");
        c.wall.multi_xi = e.value("multi_xi", false);
        const json& xi = e.at("xi");
        auto add_member = [&](const json& one) {
            WallRecord rec;
            rec.xi = divisor_from_json(one, "xi");
            rec.t_star = c.wall.t_star;
            c.wall.members.push_back(std::move(rec));
        };
        if (!xi.empty() && xi[0].is_array())
            for (const auto& one : xi) add_member(one);
        else
            add_member(xi);
        std::string dir = e.at("direction").get<std::string>();
        if (dir == "grows") c.direction = Direction::grows;
        else if (dir == "shrinks") c.direction = Direction::shrinks;
        else if (dir == "equivalence") c.direction = Direction::equivalence;
        else throw input_error("unknown direction '" + dir + "'");
        for (const auto& f : e.at("factors")) {
            const json& hb = f.at("hilb");
            c.factors.push_back(SODFactor{detail::int_from_json(hb.at(0), "hilb"),
                                          detail::int_from_json(hb.at(1), "hilb")});
        }
        chain.crossings.push_back(std::move(c));
    }
    if (!j.at("flattened").is_null()) {
        FlattenedSOD flat;
        const json& fj = j["flattened"];
        for (const auto& f : fj.at("factors")) {
            const json& hb = f.at("hilb");
            flat.factors.push_back(SODFactor{detail::int_from_json(hb.at(0), "hilb"),
                                             detail::int_from_json(hb.at(1), "hilb")});
        }
        flat.endpoint = fj.at("endpoint").get<std::string>();
        flat.pure_equivalence = fj.value("pure_equivalence", false);
        chain.flattened = std::move(flat);
    }
    return chain;
}

// Deterministic rendering in either format; "json" parses back with
// sod_from_json.
inline std::string render_sod(const SODChain& chain, const std::string& format) {
    if (format == "text") return render_sod_text(chain);
    if (format == "json") return sod_to_json(chain).dump(2) + "\n";
    throw input_error("render_sod: unknown format '" + format + "'");
}

// ---------------------------------------------------------------- graded modules

inline json rat_to_json(const Rat& r) {
    if (rat_den(r) == 1) return detail::int_to_json(rat_num(r));
    return json(rat_str(r));
}

inline json module_to_json(const TruncatedGradedModule& m) {
    json comps = json::object();
    for (const auto& [w, d] : m.dims) comps[std::to_string(w)] = d;
    json actions = json::object();
    for (const auto& [key, mat] : m.actions) {
        auto [i, a] = key;
        json rows = json::array();
        for (int r = 0; r < mat.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < mat.cols(); ++c) row.push_back(rat_to_json(mat.at(r, c)));
            rows.push_back(row);
        }
        actions[std::to_string(i)][std::to_string(a)] = rows;
    }
    json weights = json::array();
    for (long long w : m.var_weights) weights.push_back(w);
    return json{{"var_weights", weights},
                {"window", json::array({m.win_lo, m.win_hi})},
                {"components", comps},
                {"actions", actions}};
}

inline TruncatedGradedModule module_from_json(const json& j) {
    TruncatedGradedModule m;
    if (!j.contains("var_weights") || !j.contains("window") || !j.contains("components"))
        throw input_error("module JSON needs var_weights, window and components");
    for (const auto& w : j["var_weights"]) m.var_weights.push_back(w.get<long long>());
    if (!j["window"].is_array() || j["window"].size() != 2)
        throw input_error("module window must be [lo, hi]");
    m.win_lo = j["window"][0].get<long long>();
    m.win_hi = j["window"][1].get<long long>();
    for (const auto& [k, v] : j["components"].items()) {
        long long w = 0;
        try {
            w = std::stoll(k);
        } catch (const std::exception&) {
            throw input_error("component weight '" + k + "' is not an integer");
        }
        m.dims[w] = v.get<long long>();
    }
    if (j.contains("actions"))
        for (const auto& [vi, per_weight] : j["actions"].items()) {
            int i = 0;
            try {
                i = std::stoi(vi);
            } catch (const std::exception&) {
                throw input_error("action variable index '" + vi + "' is not an integer");
            }
            if (i < 0 || i >= m.n_vars())
                throw input_error("action variable index " + vi + " out of range");
            for (const auto& [ws, rows] : per_weight.items()) {
                long long a = 0;
                try {
                    a = std::stoll(ws);
                } catch (const std::exception&) {
                    throw input_error("action weight '" + ws + "' is not an integer");
                }
                long long target = a + m.var_weights[size_t(i)];
                auto dim_of = [&](long long w) {
                    auto it = m.dims.find(w);
                    return it == m.dims.end() ? 0ll : it->second;
                };
                QMat mat(int(dim_of(target)), int(dim_of(a)));
                if (!rows.is_array() || int(rows.size()) != mat.rows())
                    throw input_error("action " + vi + "@" + ws + ": expected " +
                                      std::to_string(mat.rows()) + " rows");
                for (int r = 0; r < mat.rows(); ++r) {
                    if (int(rows[size_t(r)].size()) != mat.cols())
                        throw input_error("action " + vi + "@" + ws + " row " + std::to_string(r) +
                                          ": expected " + std::to_string(mat.cols()) + " entries");
                    for (int c = 0; c < mat.cols(); ++c)
                        mat.at(r, c) = detail::rat_from_json(rows[size_t(r)][size_t(c)],
                                                             "action " + vi + "@" + ws);
                }
                m.actions[{i, a}] = std::move(mat);
            }
        }
    m.normalize();
    auto violations = validate_module(m);
    if (!violations.empty()) throw input_error("invalid module: " + violations[0].what);
    return m;
}

inline TruncatedGradedModule load_module(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open module file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("module file " + path + ": " + e.what());
    }
    return module_from_json(j);
}

inline json tor_table_to_json(const TorTable& t) {
    json entries = json::object();
    for (const auto& [key, dim] : t.entries)
        entries["tor" + std::to_string(key.first)][std::to_string(key.second)] = dim;
    return json{{"safe_window", json::array({t.safe_lo, t.safe_hi})}, {"entries", entries}};
}

// ---------------------------------------------------------------- window report

inline json interval_to_json(const WeightInterval& iv) {
    return json::array({iv.lo, iv.hi});
}

inline json window_report_to_json(const WindowReport& rep) {
    return json{{"t_minus", rep.t_minus},
                {"t_plus", rep.t_plus},
                {"d", rep.d},
                {"case", rep.crossing_case},
                {"windows",
                 {{"minus", interval_to_json(rep.interval_minus)},
                  {"plus", interval_to_json(rep.interval_plus)}}},
                {"upsilon_indices", rep.upsilon_indices}};
}

}  // namespace wallcross
