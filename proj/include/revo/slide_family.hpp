#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "revo/errors.hpp"

namespace revo::slide {

// One-parameter family of normalized chains used by the reduction: the top
// vertex A1 = (-t, 1) slides along the top edge while A2 = (x0, y0) stays
// fixed inside the triangle with corners (-1,1), (0,1), (-1,0). All closed
// forms below are polynomials or rational functions of (x0, y0, t) and, for
// the general family, of the incoming edge slope k and the half-volumes of
// the chain without A1.
struct SlideConfig {
    double x0 = 0.0;
    double y0 = 0.0;
    double t = 0.0;
    std::optional<double> k;
};

// Largest admissible t: the top vertex hits the extension of the next edge.
double t_max(double x0, double y0);
double t_max(double x0, double y0, double k);

// Admissible slope window for the edge arriving at A2.
double k_min(double x0, double y0);
double k_max(double x0, double y0);

// Throws OutOfRegion unless (x0, y0) lies in the closed triangle, t is in
// range and k (when present) is in its window.
void validate(const SlideConfig& cfg);

// Half volume of the body of revolution of the family chain, linear in t.
double primal_half_volume(const SlideConfig& cfg);
// Same value assembled from the three frustum pieces, kept as a cross-check.
double primal_half_volume_direct(const SlideConfig& cfg);

// Half volume of the polar body, a cubic-over-cubic rational in t.
double polar_half_volume(const SlideConfig& cfg);
// Same value from the dual-chain vertex coordinates.
double polar_half_volume_direct(const SlideConfig& cfg);

// F(t): product of the two half volumes (one quarter of the Mahler product).
double product(const SlideConfig& cfg);
// dF/dt in the factored closed form.
double product_slope(const SlideConfig& cfg);
// dF/dt assembled from the quartic coefficient bundle, kept as a cross-check.
double product_slope_quartic(const SlideConfig& cfg);
// d2F/dt2 as (pi^2/9) (y0-1)^2 / (t y0 + x0)^4 * curvature_line(t).
double product_curvature(const SlideConfig& cfg);
// d2F/dt2 from the quadratic coefficient bundle, kept as a cross-check.
double product_curvature_quintic(const SlideConfig& cfg);

// Linear-in-t factor of the curvature; increasing in t on the region.
double curvature_line(const SlideConfig& cfg);

// Sign polynomials controlling the product at the right endpoint t_max:
// product_slope(t_max) = (pi^2 / 9 y0^2) * endpoint_slope_poly and
// product_curvature(t_max) = (pi^2 / 9) * endpoint_curvature_poly / (y0 (1-y0)).
double endpoint_slope_poly(double x0, double y0);
double endpoint_curvature_poly(double x0, double y0);

// Coefficient bundles; each reproduces its parent closed form above.
std::array<double, 4> delta_coeffs(double x0, double y0);
std::array<double, 5> lambda_coeffs(double x0, double y0);
std::array<double, 3> gamma_coeffs(double x0, double y0);
std::array<double, 4> theta_coeffs(double x0, double y0);
std::array<double, 4> phi_coeffs(double x0, double y0, double v, double v0);
std::array<double, 3> upsilon_coeffs(double x0, double y0, double k);

struct CoefficientBundle {
    std::array<double, 4> deltas;
    std::array<double, 5> lambdas;
    std::array<double, 3> gammas;
    std::array<double, 4> phis;
    std::array<double, 4> thetas;
    std::array<double, 3> upsilons;
};

// phis need the general-family half volumes, upsilons need k (falls back to
// k_max when the config carries none).
CoefficientBundle make_coefficient_bundle(const SlideConfig& cfg, double v, double v0);

// ---- General family: arbitrarily many fixed vertices below A2. ----

// Half volumes (primal, polar) of the chain with A1 removed.
struct FamilyVolumes {
    double primal_half = 0.0;  // V
    double polar_half = 0.0;   // V0
};

// Volumes for the minimal chain {A2, D, O, B}; with these the general family
// coincides with the three-vertex closed forms above.
FamilyVolumes inner_volumes(double x0, double y0);

double general_product(const SlideConfig& cfg, const FamilyVolumes& vols);
double general_slope(const SlideConfig& cfg, const FamilyVolumes& vols);
// Curvature factor linear in t; independent of the polar half volume.
double curvature_line_general(const SlideConfig& cfg, double primal_half);
double general_curvature(const SlideConfig& cfg, double primal_half);

// Slope at the right endpoint t_max(k) as a linear form in the half volumes:
// (pi/3) (u1 * V0 + u2 * V + u3). u1 >= 0 and u2 <= 0 on the region, so the
// endpoint slope only decreases when V grows and V0 shrinks.
double endpoint_slope_general(double x0, double y0, double k, const FamilyVolumes& vols);

// Half volume of the enlarged chain through G = (-1, y0 - k (x0 + 1)); the
// largest primal half volume compatible with edge slope k.
double outer_half_volume(double x0, double y0, double k);

// Cubic in k whose sign bounds the endpoint curvature when the primal half
// volume equals outer_half_volume: slide_ratio = slide_cubic / k.
double slide_cubic(double x0, double y0, double k);
double slide_cubic_d1(double x0, double y0, double k);
double slide_cubic_d2(double x0, double y0, double k);
double slide_ratio(double x0, double y0, double k);
// Closed forms of the two derivatives at k = k_max.
double slide_cubic_d1_at_kmax(double x0, double y0);
double slide_cubic_d2_at_kmax(double x0, double y0);

// ---- Parameter regions ----

// y-level splitting the two regions: (sqrt(5) - 1) / 2.
double region_split();
// x = (y^3 + 2 y^2 + 3 y - 6) / ((2 - y)(y + 3)), the curve separating them.
double region_curve(double y);

struct RegionTag {
    bool slope_region = false;      // endpoint_slope_poly <= 0 certified here
    bool curvature_region = false;  // endpoint_curvature_poly <= 0 certified here
};

// Membership in the closed regions; boundaries belong to both. Throws
// OutsideTriangle when (x0, y0) is not in the closed triangle
// {-1 <= x0 <= y0 - 1, 0 <= y0 <= 1}.
RegionTag region_membership(double x0, double y0);

// ---- Grid verification of the endpoint sign claims ----

struct ClaimResult {
    std::string name;
    long nodes = 0;
    long violations = 0;
    double max_violation = 0.0;
    double arg_x = 0.0;
    double arg_y = 0.0;
};

struct SignClaimReport {
    int grid = 0;
    std::vector<ClaimResult> claims;
    long total_violations() const;
};

SignClaimReport verify_sign_claims(int grid, double tolerance = 1e-9);

}  // namespace revo::slide
