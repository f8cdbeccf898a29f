#pragma once

// Test-only reference implementations, independent of the library paths they
// check: halfplane clipping for polars, dense sampling for distances and
// conjugates, finite differences for derivatives.

#include <algorithm>
#include <cmath>
#include <vector>

#include "revo/geom2d.hpp"
#include "revo/harness.hpp"
#include "revo/numerics.hpp"

namespace oracles {

using revo::Point2;
using revo::UnconditionalPolygon;

// Full reflected vertex set of a chain polygon.
inline std::vector<Point2> reflected_vertices(const UnconditionalPolygon& p) {
    std::vector<Point2> out;
    for (const auto& q : p.chain()) {
        out.push_back(q);
        out.push_back({-q.x, q.y});
        out.push_back({q.x, -q.y});
        out.push_back({-q.x, -q.y});
    }
    return out;
}

// Sutherland-Hodgman clip of a convex polygon by the halfplane {x : x.n <= 1}.
inline std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const Point2& n) {
    std::vector<Point2> out;
    const size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % m];
        const double da = dot(a, n) - 1.0;
        const double db = dot(b, n) - 1.0;
        if (da <= 0.0) {
            out.push_back(a);
        }
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            const double t = da / (da - db);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return out;
}

// Polar dual by clipping a large box with one halfplane per primal vertex.
inline std::vector<Point2> polar_by_clipping(const UnconditionalPolygon& p) {
    const double r = 2.0 / std::min(p.x_extent(), p.y_extent()) + 1.0;
    std::vector<Point2> poly{{-r, -r}, {r, -r}, {r, r}, {-r, r}};
    for (const auto& v : reflected_vertices(p)) {
        poly = clip_halfplane(poly, v);
    }
    return poly;
}

inline double support_of(const std::vector<Point2>& poly, const Point2& dir) {
    double best = -1e300;
    for (const auto& v : poly) {
        best = std::max(best, dot(v, dir));
    }
    return best;
}

// Hausdorff distance as the sup-norm gap of support functions on a dense
// direction fan; accurate to O(1/n^2) only, so callers use loose tolerances.
inline double hausdorff_by_sampling(const UnconditionalPolygon& p, const UnconditionalPolygon& q,
                                    int n = 8192) {
    const auto pv = reflected_vertices(p);
    const auto qv = reflected_vertices(q);
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * revo::kPi * i / n;
        const Point2 u{std::cos(phi), std::sin(phi)};
        best = std::max(best, std::abs(support_of(pv, u) - support_of(qv, u)));
    }
    return best;
}

// Exact conjugate of a piecewise-linear profile: on each linear piece the
// ratio (1 - x' x) / f(x) is monotone, so the minimum sits at a breakpoint.
inline double conjugate_at_breakpoints(const revo::GeneratingFunction& f, double xp) {
    double best = 1e300;
    for (const auto& bp : f.breakpoints()) {
        for (const double x : {bp.x, -bp.x}) {
            const double v = f(x);
            if (v > 0.0) {
                best = std::min(best, (1.0 - xp * x) / v);
            }
        }
    }
    return best;
}

// Grid scan augmented with the breakpoints themselves; without them the
// corner minima of piecewise ratios are missed by O(grid step).
inline double conjugate_on_grid(const revo::GeneratingFunction& f, double xp, int n = 4001) {
    const double a = f.half_width();
    double best = 1e300;
    auto probe = [&](double x) {
        const double v = f(x);
        if (v > 0.0) {
            best = std::min(best, (1.0 - xp * x) / v);
        }
    };
    for (int i = 0; i <= n; ++i) {
        probe(-a + 2.0 * a * i / n);
    }
    for (const auto& bp : f.breakpoints()) {
        probe(bp.x);
        probe(-bp.x);
    }
    return best;
}

// Central finite differences.
template <typename Fn>
double diff1(Fn&& fn, double t, double h) {
    return (fn(t + h) - fn(t - h)) / (2.0 * h);
}

struct SlidePoint {
    double x0;
    double y0;
};

// Parameter points with margins from the triangle boundary, so the rational
// closed forms stay well conditioned.
inline SlidePoint random_interior_point(revo::Rng& rng) {
    const double y0 = rng.uniform(0.08, 0.92);
    const double x0 = rng.uniform(-1.0 + 0.02, y0 - 1.0 - 0.02);
    return {x0, y0};
}

}  // namespace oracles
