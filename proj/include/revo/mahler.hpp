#pragma once

#include <vector>

#include "revo/geom2d.hpp"
#include "revo/numerics.hpp"
#include "revo/revolve.hpp"

namespace revo {

// Sharp lower bounds for the three body classes handled here.
inline constexpr double kMinProductRevolution = 4.0 * kPi * kPi / 3.0;
inline constexpr double kMinProductParallelSections = 32.0 / 3.0;
inline constexpr double kMinProductCone = 256.0 * kPi * kPi / 243.0;

struct MahlerReport {
    double primal_volume = 0.0;
    double polar_volume = 0.0;
    double product = 0.0;
    double bound = 0.0;
    double slack = 0.0;  // product - bound
};

// V(R) V(R*). Exact frustum sums for piecewise-linear generators; quadrature
// of pi^2 (integral f^2)(integral f*^2) for analytic ones.
MahlerReport mahler_product(const BodyOfRevolution& body);

// (integral of f^2) * (integral of f*^2); equals the Mahler product / pi^2.
double functional_product(const GeneratingFunction& f);

// Convex body swept by scaled copies f(x) * C of a planar cross-section
// stacked along the X-axis.
struct ParallelSectionsBody {
    GeneratingFunction generator;
    UnconditionalPolygon cross_section;
};

MahlerReport mahler_product_psh(const ParallelSectionsBody& body);

// Concave nonnegative piecewise-linear profile on [0, h]; not assumed even.
// Describes a general (not origin-symmetric) body of revolution.
class AxisProfile {
public:
    explicit AxisProfile(std::vector<Point2> points);

    double height() const { return points_.back().x; }
    const std::vector<Point2>& points() const { return points_; }
    double value(double x) const;

private:
    std::vector<Point2> points_;
};

struct SantaloSearchResult {
    double best_shift = 0.0;    // origin position along the axis
    double best_product = 0.0;  // product at the optimal shift
    double apex_ratio = 0.0;    // (h - best_shift) / h
};

// Minimizes V(R) V((R - s v)^*) over axis shifts s keeping the origin
// interior: coarse 1024-point scan, then golden-section refinement. The polar
// volume comes from revolving the 2D polar of the shifted generating domain.
SantaloSearchResult santalo_axis_search(const AxisProfile& profile);

// Product of the shifted body at a fixed origin position; +infinity when the
// origin is not strictly interior. Exposed for scan-style verification.
double santalo_product_at(const AxisProfile& profile, double shift);

}  // namespace revo
