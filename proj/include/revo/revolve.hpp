#pragma once

#include <vector>

#include "revo/geom2d.hpp"

namespace revo {

// Origin-symmetric body of revolution; the generator spins about the X-axis.
struct BodyOfRevolution {
    GeneratingFunction generator;
};

// Diagonal rescaling that maps a body into the unit cube: axis_scale = 1/a,
// radial_scale = 1/f(0).
struct AffineNormalization {
    double axis_scale = 1.0;
    double radial_scale = 1.0;
};

// Volume of the solid of revolution of a linear profile segment:
// (pi/3)(x1-x0)(r0^2 + r0 r1 + r1^2).
double frustum_volume(double x0, double x1, double r0, double r1);

// Exact frustum sums for piecewise-linear generators; adaptive quadrature of
// pi * f^2 (absolute tolerance 1e-10) for analytic ones.
double volume(const BodyOfRevolution& body);

// Body generated by the polar of the generating domain, which equals the
// polar body. Piecewise-linear generators only.
BodyOfRevolution polar_body(const BodyOfRevolution& body);

// Rescales so the generator has half width 1 and f(0) = 1; the image sits in
// the unit cube and the Mahler product is unchanged.
std::pair<BodyOfRevolution, AffineNormalization> normalize(const BodyOfRevolution& body);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct SliceDualityReport {
    struct PerDirection {
        Vec3 u;
        double max_deviation = 0.0;
    };
    double max_deviation = 0.0;
    std::vector<PerDirection> per_direction;
};

// For each direction u, compares the radial function of polar_body(body)
// sliced by the plane through the origin orthogonal to u against the polar of
// the body's shadow on that plane, on an angular grid. The two sides go
// through independent paths (polar generator vs. primal support function).
SliceDualityReport verify_slice_projection_duality(const BodyOfRevolution& body,
                                                   const std::vector<Vec3>& directions,
                                                   int angles = 256);

}  // namespace revo
