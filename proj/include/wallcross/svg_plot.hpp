#pragma once

// Deterministic SVG rendering of the ample-cone slice for rank-2
// lattices: the subcone spanned by the two polarization endpoints,
// crossed walls as dashed rays through the origin, chambers labeled in
// traversal order. Axis convention: the first lattice coordinate runs
// along +x, the second along +y (documented in the file header of the
// output). Every coordinate is computed as an exact rational and
// printed with two decimals, so identical inputs give identical bytes.

#include "wallcross/walls.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace wallcross {

namespace detail {

inline std::string svg_num(const Rat& v) {
    Int scaled = floor_rat(v * 100 + Rat(1, 2));  // round half up, exact
    bool neg = scaled < 0;
    Int a = neg ? Int(-scaled) : scaled;
    Int whole = a / 100, frac = a % 100;
    std::string fs = frac.str();
    if (fs.size() < 2) fs = "0" + fs;
    return (neg ? "-" : "") + whole.str() + "." + fs;
}

struct RatPoint {
    Rat x, y;
};

inline Rat linf(const RatPoint& p) {
    Rat ax = p.x < 0 ? -p.x : p.x;
    Rat ay = p.y < 0 ? -p.y : p.y;
    return std::max(ax, ay);
}

}  // namespace detail

struct PlotSpec {
    SurfaceModel surface;  // rank 2 only
    DivisorClass c1;
    Int c2 = 0;
    DivisorClass corner_from;  // displayed subcone runs between these rays
    DivisorClass corner_to;
    std::vector<WallGroup> walls;  // sorted by t_star
    int size_px = 480;
};

inline std::string render_chamber_svg(const PlotSpec& spec) {
    if (spec.surface.rank != 2) throw input_error("chamber plot requires a rank-2 lattice");
    using detail::RatPoint;

    const DivisorClass& lm = spec.corner_from;
    const DivisorClass& lp = spec.corner_to;
    auto seg_point = [&](const Rat& t) {
        RatPoint p;
        p.x = (Rat(1) - t) * Rat(lm.coords[0]) + t * Rat(lp.coords[0]);
        p.y = (Rat(1) - t) * Rat(lm.coords[1]) + t * Rat(lp.coords[1]);
        return p;
    };

    // world frame: square reaching a little past the corner classes
    Rat reach = std::max(detail::linf(seg_point(Rat(0))), detail::linf(seg_point(Rat(1)))) + 2;
    bool negatives = false;
    for (const Int& v : lm.coords) negatives = negatives || v < 0;
    for (const Int& v : lp.coords) negatives = negatives || v < 0;
    Rat wx0 = negatives ? -reach : Rat(0), wx1 = reach;
    Rat wy0 = wx0, wy1 = reach;

    const int S = spec.size_px;
    Rat span_x = wx1 - wx0, span_y = wy1 - wy0;
    auto px = [&](const RatPoint& p) { return detail::svg_num((p.x - wx0) / span_x * S); };
    auto py = [&](const RatPoint& p) { return detail::svg_num(Rat(S) - (p.y - wy0) / span_y * S); };

    // scale a direction so its sup-norm hits the given radius
    auto on_radius = [&](const RatPoint& dir, const Rat& radius) {
        Rat n = detail::linf(dir);
        RatPoint p;
        if (n == 0) { p.x = 0; p.y = 0; return p; }
        p.x = dir.x / n * radius;
        p.y = dir.y / n * radius;
        return p;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << S << " " << S
        << "\" width=\"" << S << "\" height=\"" << S << "\">\n";
    svg << "<!-- ample-cone slice; axes: first lattice coordinate along +x, second along +y;"
        << " rays carry data-slope = (second coord)/(first coord) -->\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << S << "\" height=\"" << S
        << "\" fill=\"#f4f4f4\"/>\n";

    // lattice dots, like a graph-paper backdrop, only for small frames
    if (!negatives && wx1 <= 24) {
        Int top = floor_rat(wx1);
        for (Int ix = 0; ix <= top; ++ix)
            for (Int iy = 0; iy <= top; ++iy) {
                RatPoint p{Rat(ix), Rat(iy)};
                svg << "<circle class=\"lattice-dot\" cx=\"" << px(p) << "\" cy=\"" << py(p)
                    << "\" r=\"1.2\" fill=\"#c8c8c8\"/>\n";
            }
    }

    RatPoint origin{Rat(0), Rat(0)};
    auto ray = [&](const RatPoint& dir, const std::string& cls, const std::string& dash,
                   const std::string& extra) {
        RatPoint end = on_radius(dir, reach);
        svg << "<line class=\"" << cls << "\" x1=\"" << px(origin) << "\" y1=\"" << py(origin)
            << "\" x2=\"" << px(end) << "\" y2=\"" << py(end) << "\" stroke=\"#303030\""
            << (dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"") << extra << "/>\n";
    };

    ray(seg_point(Rat(0)), "cone-edge", "", " stroke-width=\"2\"");
    ray(seg_point(Rat(1)), "cone-edge", "", " stroke-width=\"2\"");

    size_t widx = 1;
    for (const WallGroup& g : spec.walls) {
        RatPoint dir = seg_point(g.t_star);
        Rat slope_den = dir.x, slope_num = dir.y;
        std::string slope = slope_den == 0 ? "inf" : rat_str(slope_num / slope_den);
        ray(dir, "wall-ray", "7 4", " stroke-width=\"1.5\" data-slope=\"" + slope + "\"");
        RatPoint lab = on_radius(dir, reach * Rat(9, 10));
        svg << "<text class=\"wall-label\" x=\"" << px(lab) << "\" y=\"" << py(lab)
            << "\" font-size=\"13\" fill=\"#303030\">W_" << widx++ << "</text>\n";
    }

    // chamber labels at segment-parameter midpoints between walls
    std::vector<Rat> cuts;
    cuts.push_back(Rat(0));
    for (const WallGroup& g : spec.walls) cuts.push_back(g.t_star);
    cuts.push_back(Rat(1));
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rat mid = (cuts[i] + cuts[i + 1]) / 2;
        RatPoint lab = on_radius(seg_point(mid), reach * Rat(3, 5));
        svg << "<text class=\"chamber-label\" x=\"" << px(lab) << "\" y=\"" << py(lab)
            << "\" font-size=\"14\" fill=\"#1a1a1a\">C_" << (i + 1) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace wallcross
