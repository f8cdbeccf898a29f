#include "revo/revolve.hpp"

#include <cmath>
#include <stdexcept>

#include "revo/numerics.hpp"

namespace revo {
namespace {

double dot3(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 normalize3(const Vec3& v) {
    const double n = std::sqrt(dot3(v, v));
    if (!(n > 0.0)) {
        throw std::invalid_argument("direction must be nonzero");
    }
    return {v.x / n, v.y / n, v.z / n};
}

}  // namespace

double frustum_volume(double x0, double x1, double r0, double r1) {
    if (!(x1 > x0)) {
        throw InvalidInterval("frustum_volume: interval must satisfy x1 > x0");
    }
    if (r0 < 0.0 || r1 < 0.0) {
        throw std::invalid_argument("frustum_volume: negative radius");
    }
    return (kPi / 3.0) * (x1 - x0) * (r0 * r0 + r0 * r1 + r1 * r1);
}

double volume(const BodyOfRevolution& body) {
    const GeneratingFunction& f = body.generator;
    if (f.is_piecewise()) {
        const auto& bp = f.breakpoints();
        double half = 0.0;
        for (size_t i = 0; i + 1 < bp.size(); ++i) {
            half += frustum_volume(bp[i].x, bp[i + 1].x, bp[i].y, bp[i + 1].y);
        }
        return 2.0 * half;
    }
    const double a = f.half_width();
    auto integrand = [&f](double x) {
        const double v = f(x);
        return kPi * v * v;
    };
    return 2.0 * adaptive_simpson(integrand, 0.0, a, 0.5e-10, 40);
}

BodyOfRevolution polar_body(const BodyOfRevolution& body) {
    if (!body.generator.is_piecewise()) {
        throw AnalyticUnsupported("polar_body: analytic generator (use conjugate instead)");
    }
    return {polygon_profile(polar_polygon(profile_polygon(body.generator)))};
}

std::pair<BodyOfRevolution, AffineNormalization> normalize(const BodyOfRevolution& body) {
    const double a = body.generator.half_width();
    const double f0 = body.generator(0.0);
    if (!(f0 > 0.0)) {
        throw std::invalid_argument("normalize: f(0) must be positive");
    }
    AffineNormalization t{1.0 / a, 1.0 / f0};
    return {{scaled(body.generator, t.axis_scale, t.radial_scale)}, t};
}

SliceDualityReport verify_slice_projection_duality(const BodyOfRevolution& body,
                                                   const std::vector<Vec3>& directions,
                                                   int angles) {
    const UnconditionalPolygon domain = profile_polygon(body.generator);
    const UnconditionalPolygon dual = polar_polygon(domain);
    SliceDualityReport report;
    for (const Vec3& raw : directions) {
        const Vec3 u = normalize3(raw);
        const Vec3 seed = std::abs(u.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
        const double proj = dot3(seed, u);
        const Vec3 e1 = normalize3({seed.x - proj * u.x, seed.y - proj * u.y, seed.z - proj * u.z});
        const Vec3 e2 = cross3(u, e1);
        double dev = 0.0;
        for (int j = 0; j < angles; ++j) {
            const double phi = 2.0 * kPi * j / angles;
            const double c = std::cos(phi);
            const double s = std::sin(phi);
            const Vec3 w{c * e1.x + s * e2.x, c * e1.y + s * e2.y, c * e1.z + s * e2.z};
            const Point2 d{w.x, std::hypot(w.y, w.z)};
            if (norm(d) < 1e-14) {
                continue;
            }
            const double slice_radial = radial_value(dual, d);
            const double shadow_polar_radial = 1.0 / support_value(domain, d);
            dev = std::max(dev, std::abs(slice_radial - shadow_polar_radial));
        }
        report.per_direction.push_back({u, dev});
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    return report;
}

}  // namespace revo
