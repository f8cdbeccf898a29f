#include "revo/geom2d.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "revo/numerics.hpp"

namespace revo {
namespace {

constexpr double kPointTol = 1e-12;

double chain_scale(const std::vector<Point2>& pts) {
    double s = 1.0;
    for (const auto& p : pts) {
        s = std::max({s, std::abs(p.x), std::abs(p.y)});
    }
    return s;
}

double turn(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone-chain hull, counterclockwise, collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts, double area_eps) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) {
                              return std::abs(a.x - b.x) <= kPointTol &&
                                     std::abs(a.y - b.y) <= kPointTol;
                          }),
              pts.end());
    const size_t n = pts.size();
    if (n < 3) {
        return pts;
    }
    std::vector<Point2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= area_eps) {
            --k;
        }
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= area_eps) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double point_segment_distance(const Point2& w, const Point2& a, const Point2& b) {
    const Point2 e{b.x - a.x, b.y - a.y};
    const double len2 = dot(e, e);
    double t = len2 > 0.0 ? dot(Point2{w.x - a.x, w.y - a.y}, e) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 proj{a.x + t * e.x, a.y + t * e.y};
    return norm(Point2{w.x - proj.x, w.y - proj.y});
}

Point2 mirror_to_second_quadrant(const Point2& v) {
    return {-std::abs(v.x), std::abs(v.y)};
}

}  // namespace

UnconditionalPolygon::UnconditionalPolygon(std::vector<Point2> points) {
    if (points.empty()) {
        throw std::invalid_argument("polygon chain: no vertices");
    }
    const double scale = chain_scale(points);
    const double ptol = kPointTol * scale;
    double rx = 0.0;
    double ry = 0.0;
    for (auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("polygon chain: nonfinite coordinate");
        }
        if (std::abs(p.x) <= ptol) {
            p.x = 0.0;
        }
        if (std::abs(p.y) <= ptol) {
            p.y = 0.0;
        }
        if (p.x > 0.0 || p.y < 0.0) {
            throw std::invalid_argument("polygon chain: vertex outside {x<=0, y>=0}");
        }
        if (p.x == 0.0 && p.y == 0.0) {
            throw std::invalid_argument("polygon chain: vertex at the origin");
        }
        rx = std::max(rx, -p.x);
        ry = std::max(ry, p.y);
    }
    if (rx <= ptol || ry <= ptol) {
        throw DegeneratePolygon("polygon chain: hull has empty interior");
    }

    std::vector<Point2> full;
    full.reserve(points.size() * 4);
    for (const auto& p : points) {
        full.push_back(p);
        full.push_back({-p.x, p.y});
        full.push_back({p.x, -p.y});
        full.push_back({-p.x, -p.y});
    }
    const double area_eps = kPointTol * scale * scale;
    std::vector<Point2> hull = convex_hull(std::move(full), area_eps);

    std::vector<Point2> chain;
    for (auto p : hull) {
        if (p.x <= ptol && p.y >= -ptol) {
            p.x = std::min(p.x, 0.0);
            p.y = std::max(p.y, 0.0);
            chain.push_back(p);
        }
    }
    chain.push_back({-rx, 0.0});
    chain.push_back({0.0, ry});

    // Decreasing polar angle; ties (same ray through the origin) keep the
    // farther point, which is the extreme one.
    struct Keyed {
        Point2 p;
        double angle;
        double radius;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(chain.size());
    for (const auto& p : chain) {
        keyed.push_back({p, std::atan2(p.y, p.x), norm(p)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        return a.angle > b.angle || (a.angle == b.angle && a.radius > b.radius);
    });
    std::vector<Point2> canon;
    for (const auto& kp : keyed) {
        const Point2& p = kp.p;
        if (!canon.empty()) {
            const Point2& prev = canon.back();
            if (std::abs(prev.x - p.x) <= ptol && std::abs(prev.y - p.y) <= ptol) {
                continue;
            }
            if (cross(prev, p) >= -area_eps) {
                if (norm(p) > norm(prev)) {
                    canon.back() = p;
                }
                continue;
            }
        }
        canon.push_back(p);
    }
    chain_ = std::move(canon);
}

UnconditionalPolygon UnconditionalPolygon::square() {
    return UnconditionalPolygon({{-1.0, 1.0}});
}

UnconditionalPolygon UnconditionalPolygon::diamond() {
    return UnconditionalPolygon({{-1.0, 0.0}, {0.0, 1.0}});
}

UnconditionalPolygon polar_polygon(const UnconditionalPolygon& p) {
    const auto& c = p.chain();
    std::vector<Point2> out;
    out.reserve(c.size() + 2);
    out.push_back({-1.0 / p.x_extent(), 0.0});
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        const Point2& a = c[i];
        const Point2& b = c[i + 1];
        const double det = cross(a, b);
        out.push_back({(b.y - a.y) / det, (a.x - b.x) / det});
    }
    out.push_back({0.0, 1.0 / p.y_extent()});
    return UnconditionalPolygon(out);
}

double support_value(const UnconditionalPolygon& p, const Point2& dir) {
    if (dir.x == 0.0 && dir.y == 0.0) {
        throw std::invalid_argument("support_value: zero direction");
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& q : p.chain()) {
        best = std::max(best, std::abs(q.x * dir.x) + std::abs(q.y * dir.y));
    }
    return best;
}

double radial_value(const UnconditionalPolygon& p, const Point2& dir) {
    if (dir.x == 0.0 && dir.y == 0.0) {
        throw std::invalid_argument("radial_value: zero direction");
    }
    const Point2 d = mirror_to_second_quadrant(dir);
    const auto& c = p.chain();
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        const Point2& a = c[i];
        const Point2& b = c[i + 1];
        if (cross(a, d) <= 0.0 && cross(b, d) >= 0.0) {
            const Point2 e{b.x - a.x, b.y - a.y};
            return cross(e, a) / cross(e, d);
        }
    }
    // Falls through only for rays numerically at the chain ends.
    if (std::abs(d.y) <= std::abs(d.x) * 1e-15) {
        return p.x_extent() / -d.x;
    }
    return p.y_extent() / d.y;
}

bool contains(const UnconditionalPolygon& p, const Point2& v, double tol) {
    const Point2 w = mirror_to_second_quadrant(v);
    const auto& c = p.chain();
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        const Point2 e{c[i + 1].x - c[i].x, c[i + 1].y - c[i].y};
        const Point2 r{w.x - c[i].x, w.y - c[i].y};
        if (cross(e, r) > tol * norm(e)) {
            return false;
        }
    }
    return true;
}

double distance_to(const UnconditionalPolygon& p, const Point2& v) {
    const Point2 w = mirror_to_second_quadrant(v);
    if (contains(p, w, 0.0)) {
        return 0.0;
    }
    const auto& c = p.chain();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        best = std::min(best, point_segment_distance(w, c[i], c[i + 1]));
    }
    return best;
}

double hausdorff_distance(const UnconditionalPolygon& p, const UnconditionalPolygon& q) {
    double d = 0.0;
    for (const auto& v : p.chain()) {
        d = std::max(d, distance_to(q, v));
    }
    for (const auto& v : q.chain()) {
        d = std::max(d, distance_to(p, v));
    }
    return d;
}

double area(const UnconditionalPolygon& p) {
    const auto& c = p.chain();
    double twice = 0.0;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        twice += cross(c[i], c[i + 1]);
    }
    return 4.0 * 0.5 * std::abs(twice);
}

UnconditionalPolygon scaled(const UnconditionalPolygon& p, double sx, double sy) {
    if (!(sx > 0.0) || !(sy > 0.0)) {
        throw std::invalid_argument("scaled: scale factors must be positive");
    }
    std::vector<Point2> pts;
    pts.reserve(p.chain().size());
    for (const auto& q : p.chain()) {
        pts.push_back({q.x * sx, q.y * sy});
    }
    return UnconditionalPolygon(pts);
}

UnconditionalPolygon normalized(const UnconditionalPolygon& p) {
    return scaled(p, 1.0 / p.x_extent(), 1.0 / p.y_extent());
}

bool chains_equal(const UnconditionalPolygon& p, const UnconditionalPolygon& q, double tol) {
    const auto& a = p.chain();
    const auto& b = q.chain();
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i].x - b[i].x) > tol || std::abs(a[i].y - b[i].y) > tol) {
            return false;
        }
    }
    return true;
}

GeneratingFunction GeneratingFunction::piecewise(double half_width,
                                                 std::vector<Point2> breakpoints) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw std::invalid_argument("profile: half width must be positive");
    }
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("profile: need at least two breakpoints");
    }
    const double xtol = 1e-9 * std::max(1.0, half_width);
    if (std::abs(breakpoints.front().x) > xtol) {
        throw std::invalid_argument("profile: first breakpoint must sit at x = 0");
    }
    breakpoints.front().x = 0.0;
    if (std::abs(breakpoints.back().x - half_width) > xtol) {
        throw std::invalid_argument("profile: last breakpoint must sit at x = a");
    }
    breakpoints.back().x = half_width;
    double prev_slope = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < breakpoints.size(); ++i) {
        auto& bp = breakpoints[i];
        if (!std::isfinite(bp.x) || !std::isfinite(bp.y)) {
            throw std::invalid_argument("profile: nonfinite breakpoint");
        }
        if (bp.y < 0.0) {
            if (bp.y < -kPointTol) {
                throw std::invalid_argument("profile: negative value");
            }
            bp.y = 0.0;
        }
        if (i + 1 < breakpoints.size() && bp.y == 0.0) {
            throw std::invalid_argument("profile: vanishes before the endpoint");
        }
        if (i > 0) {
            const double dx = bp.x - breakpoints[i - 1].x;
            if (dx <= 0.0) {
                throw std::invalid_argument("profile: breakpoints not strictly increasing");
            }
            const double slope = (bp.y - breakpoints[i - 1].y) / dx;
            const double tol = 1e-9 * std::max(1.0, std::abs(slope));
            if (i == 1 && slope > tol) {
                throw std::invalid_argument("profile: even extension not concave at 0");
            }
            if (i > 1 && slope > prev_slope + tol) {
                throw std::invalid_argument("profile: not concave");
            }
            prev_slope = slope;
        }
    }
    GeneratingFunction f;
    f.half_width_ = half_width;
    f.breakpoints_ = std::move(breakpoints);
    return f;
}

GeneratingFunction GeneratingFunction::analytic(double half_width,
                                                std::function<double(double)> profile,
                                                std::string name) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw std::invalid_argument("profile: half width must be positive");
    }
    if (!profile) {
        throw std::invalid_argument("profile: missing evaluator");
    }
    GeneratingFunction f;
    f.half_width_ = half_width;
    f.eval_ = std::move(profile);
    f.name_ = std::move(name);
    if (!(f.eval_(0.0) > 0.0)) {
        throw std::invalid_argument("profile: f(0) must be positive");
    }
    return f;
}

double GeneratingFunction::operator()(double x) const {
    double xa = std::min(std::abs(x), half_width_);
    if (!is_piecewise()) {
        return eval_(xa);
    }
    const auto& bp = breakpoints_;
    auto it = std::upper_bound(bp.begin(), bp.end(), xa,
                               [](double v, const Point2& b) { return v < b.x; });
    if (it == bp.begin()) {
        return bp.front().y;
    }
    if (it == bp.end()) {
        return bp.back().y;
    }
    const Point2& hi = *it;
    const Point2& lo = *(it - 1);
    const double t = (xa - lo.x) / (hi.x - lo.x);
    return lo.y + t * (hi.y - lo.y);
}

UnconditionalPolygon profile_polygon(const GeneratingFunction& f) {
    if (!f.is_piecewise()) {
        throw AnalyticUnsupported("profile_polygon: analytic profile");
    }
    std::vector<Point2> pts;
    pts.reserve(f.breakpoints().size() + 1);
    pts.push_back({-f.half_width(), 0.0});
    for (auto it = f.breakpoints().rbegin(); it != f.breakpoints().rend(); ++it) {
        pts.push_back({-it->x, it->y});
    }
    return UnconditionalPolygon(pts);
}

GeneratingFunction polygon_profile(const UnconditionalPolygon& p) {
    const auto& c = p.chain();
    // The x-axis anchor is part of the profile only when the first edge is not
    // vertical (profile vanishing at x = a); otherwise f(a) is the y of the
    // vertical edge's top.
    size_t start = 0;
    if (c.size() >= 2 && std::abs(c[1].x - c[0].x) <= kPointTol * std::max(1.0, p.x_extent())) {
        start = 1;
    }
    std::vector<Point2> bps;
    bps.reserve(c.size() - start);
    for (size_t i = c.size(); i-- > start;) {
        bps.push_back({-c[i].x, c[i].y});
    }
    return GeneratingFunction::piecewise(p.x_extent(), std::move(bps));
}

GeneratingFunction conjugate(const GeneratingFunction& f) {
    if (f.is_piecewise()) {
        return polygon_profile(polar_polygon(profile_polygon(f)));
    }
    const double a = f.half_width();
    for (int i = 1; i < 256; ++i) {
        const double x = -a + 2.0 * a * i / 256.0;
        if (!(f(x) > 0.0)) {
            throw ZeroProfile("conjugate: profile vanishes strictly inside its domain");
        }
    }
    GeneratingFunction fc = f;
    auto eval = [fc, a](double xp) {
        auto ratio = [&](double x) {
            const double v = fc(x);
            if (!(v > 0.0)) {
                return std::numeric_limits<double>::infinity();
            }
            return (1.0 - xp * x) / v;
        };
        return golden_section_min(ratio, -a, a, 1e-12 * std::max(1.0, a)).value;
    };
    return GeneratingFunction::analytic(1.0 / a, eval);
}

GeneratingFunction scaled(const GeneratingFunction& f, double axis_scale, double radial_scale) {
    if (!(axis_scale > 0.0) || !(radial_scale > 0.0)) {
        throw std::invalid_argument("scaled: scale factors must be positive");
    }
    if (f.is_piecewise()) {
        std::vector<Point2> bps;
        bps.reserve(f.breakpoints().size());
        for (const auto& bp : f.breakpoints()) {
            bps.push_back({bp.x * axis_scale, bp.y * radial_scale});
        }
        return GeneratingFunction::piecewise(f.half_width() * axis_scale, std::move(bps));
    }
    GeneratingFunction fc = f;
    auto eval = [fc, axis_scale, radial_scale](double x) {
        return radial_scale * fc(x / axis_scale);
    };
    return GeneratingFunction::analytic(f.half_width() * axis_scale, eval);
}

void check_profile(const GeneratingFunction& f) {
    if (f.is_piecewise()) {
        return;  // validated on construction
    }
    const double a = f.half_width();
    constexpr int kGrid = 128;
    std::vector<double> vals(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) {
        vals[i] = f(a * i / kGrid);
        if (!std::isfinite(vals[i]) || vals[i] < -1e-12) {
            throw std::invalid_argument("profile: negative or nonfinite sample");
        }
    }
    if (!(vals[0] > 0.0)) {
        throw std::invalid_argument("profile: f(0) must be positive");
    }
    const double tol = 1e-9 * std::max(1.0, vals[0]);
    for (int i = 1; i < kGrid; ++i) {
        if (vals[i] < 0.5 * (vals[i - 1] + vals[i + 1]) - tol) {
            throw std::invalid_argument("profile: concavity check failed");
        }
    }
    if (vals[1] > vals[0] + tol) {
        throw std::invalid_argument("profile: even extension not concave at 0");
    }
}

}  // namespace revo
