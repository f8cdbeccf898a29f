#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "revo/errors.hpp"

namespace revo {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2& a) { return std::hypot(a.x, a.y); }

// Planar convex body symmetric across both coordinate axes, stored as its
// second-quadrant vertex chain. The chain runs from the boundary point on the
// negative x-axis to the one on the positive y-axis, ordered by decreasing
// polar angle; the full polygon is the hull of the chain reflected across
// both axes. The two axis points are always kept in the chain, even when they
// sit in the middle of an edge (square chain: (-1,0), (-1,1), (0,1)).
//
// Construction canonicalizes: reflections are hulled, interior and collinear
// points are dropped, points closer than 1e-12 are merged.
class UnconditionalPolygon {
public:
    explicit UnconditionalPolygon(std::vector<Point2> points);

    static UnconditionalPolygon square();
    static UnconditionalPolygon diamond();

    const std::vector<Point2>& chain() const { return chain_; }
    double x_extent() const { return -chain_.front().x; }
    double y_extent() const { return chain_.back().y; }

private:
    std::vector<Point2> chain_;
};

// Polar dual: intersection of the halfspaces {x : x . v <= 1} over all
// vertices v of the full reflected polygon, returned in chain form. The edge
// with outward normal n at support value h maps to the dual vertex n / h.
UnconditionalPolygon polar_polygon(const UnconditionalPolygon& p);

// Support function max{v . dir : v in polygon} for a nonzero direction.
double support_value(const UnconditionalPolygon& p, const Point2& dir);

// Radial function max{lambda >= 0 : lambda * dir in polygon} for the raw
// (unnormalized) direction vector, so radial(p, d) * support(polar(p), d) = 1.
double radial_value(const UnconditionalPolygon& p, const Point2& dir);

// Hausdorff distance between the full polygons; the maximum is attained at
// vertices, so this is exact.
double hausdorff_distance(const UnconditionalPolygon& p, const UnconditionalPolygon& q);

bool contains(const UnconditionalPolygon& p, const Point2& v, double tol = 1e-9);
double distance_to(const UnconditionalPolygon& p, const Point2& v);

// Area of the full polygon (four times the second-quadrant fan).
double area(const UnconditionalPolygon& p);

UnconditionalPolygon scaled(const UnconditionalPolygon& p, double sx, double sy);

// Rescales so both extents are 1, i.e. the chain runs (-1,0) .. (0,1).
UnconditionalPolygon normalized(const UnconditionalPolygon& p);

bool chains_equal(const UnconditionalPolygon& p, const UnconditionalPolygon& q,
                  double tol = 1e-9);

// Concave even nonnegative profile f on [-a, a], stored on [0, a] so evenness
// holds by construction. Piecewise-linear profiles keep their breakpoints and
// admit exact polygon arithmetic; analytic profiles carry an evaluator.
class GeneratingFunction {
public:
    // Breakpoints are (x, f(x)) pairs covering [0, a]; validated for
    // concavity, nonnegativity and f(0) > 0. f may vanish only at x = a.
    static GeneratingFunction piecewise(double half_width, std::vector<Point2> breakpoints);

    // The evaluator is trusted to be even and concave; JSON readers and tests
    // run check_profile() on it instead of the constructor.
    static GeneratingFunction analytic(double half_width, std::function<double(double)> profile,
                                       std::string name = "");

    bool is_piecewise() const { return !breakpoints_.empty(); }
    double half_width() const { return half_width_; }
    const std::vector<Point2>& breakpoints() const { return breakpoints_; }
    const std::string& name() const { return name_; }

    // Even evaluation; |x| is clamped to [0, a].
    double operator()(double x) const;

private:
    GeneratingFunction() = default;

    double half_width_ = 0.0;
    std::vector<Point2> breakpoints_;
    std::function<double(double)> eval_;
    std::string name_;
};

// f*(x') = inf over x of (1 - x' x) / f(x) on [-1/a, 1/a]. Piecewise-linear
// profiles go through the polar polygon (exact); analytic ones are minimized
// pointwise by golden-section search. Throws ZeroProfile when f vanishes
// strictly inside its domain.
GeneratingFunction conjugate(const GeneratingFunction& f);

// Chain of the generating domain {(x, y) : |y| <= f(x)}. Piecewise-linear only.
UnconditionalPolygon profile_polygon(const GeneratingFunction& f);

// Inverse of profile_polygon: reads the profile off a chain.
GeneratingFunction polygon_profile(const UnconditionalPolygon& p);

// g(x) = radial_scale * f(x / axis_scale) on the stretched domain.
GeneratingFunction scaled(const GeneratingFunction& f, double axis_scale, double radial_scale);

// Grid checks for a declared-analytic profile: f(0) > 0, nonnegativity and
// midpoint concavity on a sample grid. Throws on violation.
void check_profile(const GeneratingFunction& f);

}  // namespace revo
