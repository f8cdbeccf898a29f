#include "revo/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace revo {
namespace {

// integral of f^2 over [-a, a]; exact per-segment for piecewise profiles.
double profile_sq_integral(const GeneratingFunction& f) {
    if (f.is_piecewise()) {
        const auto& bp = f.breakpoints();
        double half = 0.0;
        for (size_t i = 0; i + 1 < bp.size(); ++i) {
            const double dx = bp[i + 1].x - bp[i].x;
            half += (dx / 3.0) * (sq(bp[i].y) + bp[i].y * bp[i + 1].y + sq(bp[i + 1].y));
        }
        return 2.0 * half;
    }
    auto integrand = [&f](double x) { return sq(f(x)); };
    return 2.0 * adaptive_simpson(integrand, 0.0, f.half_width(), 0.5e-10, 40);
}

// integral of y(x)^2 along a non-symmetric upper polyline.
double polyline_sq_integral(const std::vector<Point2>& pts) {
    double acc = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const double dx = pts[i + 1].x - pts[i].x;
        acc += (dx / 3.0) * (sq(pts[i].y) + pts[i].y * pts[i + 1].y + sq(pts[i + 1].y));
    }
    return acc;
}

// Upper boundary of the polar of the x-axis-symmetric domain whose upper
// boundary is the given polyline. Requires pts.front().x < 0 < pts.back().x.
// Each upper edge maps to a dual vertex; the axis anchors come from the two
// x-extents. Same-x duplicates keep the larger y (vertical dual faces).
std::vector<Point2> polar_upper(const std::vector<Point2>& pts) {
    std::vector<Point2> out;
    out.reserve(pts.size() + 2);
    out.push_back({1.0 / pts.front().x, 0.0});
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const Point2& p = pts[i];
        const Point2& q = pts[i + 1];
        const double det = cross(p, q);
        if (std::abs(det) < 1e-15) {
            continue;
        }
        Point2 v{(q.y - p.y) / det, (p.x - q.x) / det};
        if (v.y < 0.0) {
            if (v.y < -1e-12) {
                continue;
            }
            v.y = 0.0;
        }
        out.push_back(v);
    }
    out.push_back({1.0 / pts.back().x, 0.0});
    std::sort(out.begin(), out.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y > b.y);
    });
    std::vector<Point2> clean;
    for (const auto& v : out) {
        if (!clean.empty() && v.x - clean.back().x <= 1e-12 * std::max(1.0, std::abs(v.x))) {
            // Numerically vertical dual face: keep its top.
            if (v.y > clean.back().y) {
                clean.back() = v;
            }
            continue;
        }
        clean.push_back(v);
    }
    return clean;
}

}  // namespace

MahlerReport mahler_product(const BodyOfRevolution& body) {
    MahlerReport report;
    if (body.generator.is_piecewise()) {
        report.primal_volume = volume(body);
        report.polar_volume = volume(polar_body(body));
    } else {
        report.primal_volume = kPi * profile_sq_integral(body.generator);
        report.polar_volume = kPi * profile_sq_integral(conjugate(body.generator));
    }
    report.product = report.primal_volume * report.polar_volume;
    report.bound = kMinProductRevolution;
    report.slack = report.product - report.bound;
    return report;
}

double functional_product(const GeneratingFunction& f) {
    return profile_sq_integral(f) * profile_sq_integral(conjugate(f));
}

MahlerReport mahler_product_psh(const ParallelSectionsBody& body) {
    const double section_area = area(body.cross_section);
    const double dual_area = area(polar_polygon(body.cross_section));
    MahlerReport report;
    report.primal_volume = section_area * profile_sq_integral(body.generator);
    report.polar_volume = dual_area * profile_sq_integral(conjugate(body.generator));
    report.product = report.primal_volume * report.polar_volume;
    report.bound = kMinProductParallelSections;
    report.slack = report.product - report.bound;
    return report;
}

AxisProfile::AxisProfile(std::vector<Point2> points) {
    if (points.size() < 2) {
        throw std::invalid_argument("axis profile: need at least two points");
    }
    if (std::abs(points.front().x) > 1e-12) {
        throw std::invalid_argument("axis profile: first point must sit at x = 0");
    }
    points.front().x = 0.0;
    double prev_slope = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < points.size(); ++i) {
        auto& p = points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("axis profile: nonfinite point");
        }
        if (p.y < 0.0) {
            if (p.y < -1e-12) {
                throw std::invalid_argument("axis profile: negative value");
            }
            p.y = 0.0;
        }
        if (i > 0) {
            const double dx = p.x - points[i - 1].x;
            if (dx <= 0.0) {
                throw std::invalid_argument("axis profile: abscissas not strictly increasing");
            }
            const double slope = (p.y - points[i - 1].y) / dx;
            if (i > 1 && slope > prev_slope + 1e-9 * std::max(1.0, std::abs(slope))) {
                throw std::invalid_argument("axis profile: not concave");
            }
            prev_slope = slope;
        }
    }
    if (!(points.back().x > 0.0)) {
        throw std::invalid_argument("axis profile: height must be positive");
    }
    points_ = std::move(points);
}

double AxisProfile::value(double x) const {
    const double xc = std::clamp(x, 0.0, height());
    auto it = std::upper_bound(points_.begin(), points_.end(), xc,
                               [](double v, const Point2& b) { return v < b.x; });
    if (it == points_.begin()) {
        return points_.front().y;
    }
    if (it == points_.end()) {
        return points_.back().y;
    }
    const Point2& hi = *it;
    const Point2& lo = *(it - 1);
    return lo.y + (xc - lo.x) / (hi.x - lo.x) * (hi.y - lo.y);
}

double santalo_product_at(const AxisProfile& profile, double shift) {
    const double h = profile.height();
    if (!(shift > 0.0) || !(shift < h) || !(profile.value(shift) > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    std::vector<Point2> shifted;
    shifted.reserve(profile.points().size());
    for (const auto& p : profile.points()) {
        shifted.push_back({p.x - shift, p.y});
    }
    const double primal = kPi * polyline_sq_integral(profile.points());
    const double polar = kPi * polyline_sq_integral(polar_upper(shifted));
    return primal * polar;
}

SantaloSearchResult santalo_axis_search(const AxisProfile& profile) {
    const double h = profile.height();
    double fmax = 0.0;
    for (const auto& p : profile.points()) {
        fmax = std::max(fmax, p.y);
    }
    if (!(fmax > 0.0)) {
        throw NoInteriorBracket("santalo_axis_search: profile is identically zero");
    }
    const double lo = 1e-6 * h;
    const double hi = h - 1e-6 * h;
    if (!(lo < hi)) {
        throw NoInteriorBracket("santalo_axis_search: empty shift interval");
    }

    constexpr int kScan = 1024;
    auto eval = [&](double s) { return santalo_product_at(profile, s); };
    int best = -1;
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kScan; ++i) {
        const double s = lo + (hi - lo) * i / (kScan - 1);
        const double v = eval(s);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    if (best < 0) {
        throw NoInteriorBracket("santalo_axis_search: no interior shift admits the origin");
    }
    const double bl = lo + (hi - lo) * std::max(0, best - 1) / (kScan - 1);
    const double bh = lo + (hi - lo) * std::min(kScan - 1, best + 1) / (kScan - 1);
    const MinResult min = golden_section_min(eval, bl, bh, 1e-10 * std::max(1.0, h));
    SantaloSearchResult result;
    result.best_shift = min.x;
    result.best_product = min.value;
    result.apex_ratio = (h - min.x) / h;
    return result;
}

}  // namespace revo
