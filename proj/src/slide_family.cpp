#include "revo/slide_family.hpp"

#include <algorithm>
#include <cmath>

#include "revo/numerics.hpp"

namespace revo::slide {
namespace {

constexpr double kEdgeTol = 1e-12;
constexpr double kPoleTol = 1e-9;

void check_pole(double denom) {
    if (std::abs(denom) <= kPoleTol) {
        throw OutOfRegion("slide: evaluation at a pole of the rational form");
    }
}

}  // namespace

double t_max(double x0, double y0) {
    return (-x0 + y0 - 1.0) / y0;
}

double t_max(double x0, double y0, double k) {
    return (-x0 * k + y0 - 1.0) / k;
}

double k_min(double x0, double y0) {
    return (1.0 - y0) / (-x0);
}

double k_max(double x0, double y0) {
    return y0 / (x0 + 1.0);
}

void validate(const SlideConfig& cfg) {
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    if (!(x0 >= -1.0 - kEdgeTol) || !(x0 <= kEdgeTol) || !(y0 >= -kEdgeTol) ||
        !(y0 <= 1.0 + kEdgeTol) || !(y0 >= x0 + 1.0 - kEdgeTol)) {
        throw OutOfRegion("slide: (x0, y0) outside the parameter triangle");
    }
    double tm;
    if (cfg.k) {
        const double k = *cfg.k;
        if (!(k >= k_min(x0, y0) - kEdgeTol) || !(k <= k_max(x0, y0) + kEdgeTol)) {
            throw OutOfRegion("slide: k outside its admissible window");
        }
        tm = t_max(x0, y0, k);
    } else {
        if (!(std::abs(y0) > kPoleTol)) {
            throw OutOfRegion("slide: y0 = 0 has no admissible t range");
        }
        tm = t_max(x0, y0);
    }
    if (!(cfg.t >= -kEdgeTol) || !(cfg.t <= tm + 1e-9)) {
        throw OutOfRegion("slide: t outside [0, t_max]");
    }
}

double primal_half_volume(const SlideConfig& cfg) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    return (kPi / 3.0) * ((-sq(y0) - y0 + 2.0) * cfg.t + (sq(y0) - x0 * y0 - x0));
}

double primal_half_volume_direct(const SlideConfig& cfg) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    const double t = cfg.t;
    return (kPi / 3.0) * sq(y0) * (x0 + 1.0) +
           (kPi / 3.0) * (-t - x0) * (sq(y0) + y0 + 1.0) + kPi * t;
}

std::array<double, 4> delta_coeffs(double x0, double y0) {
    return {
        cube(y0) * (sq(x0) + 3.0 * x0 + 3.0),
        sq(y0) * (3.0 * cube(x0) + 9.0 * sq(x0) + 9.0 * x0 + cube(y0) - 3.0 * y0 + 2.0),
        3.0 * y0 * (p4(x0) + 3.0 * cube(x0) + 3.0 * sq(x0) +
                    x0 * (cube(y0) - sq(y0) - y0 + 1.0)),
        sq(x0) * (cube(x0) + 3.0 * sq(x0) + 3.0 * x0 + 2.0 * cube(y0) - 3.0 * sq(y0) + 1.0),
    };
}

double polar_half_volume(const SlideConfig& cfg) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    const double t = cfg.t;
    check_pole(y0);
    const double pole = t * y0 + x0;
    check_pole(pole);
    const auto d = delta_coeffs(x0, y0);
    const double num = ((d[0] * t + d[1]) * t + d[2]) * t + d[3];
    return (kPi / 3.0) * num / (sq(y0) * cube(pole));
}

double polar_half_volume_direct(const SlideConfig& cfg) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    const double t = cfg.t;
    check_pole(y0);
    const double pole = t * y0 + x0;
    check_pole(pole);
    const double xm = (1.0 - y0) / pole;
    const double ym = (x0 + t) / pole;
    const double ye = (x0 + 1.0) / y0;
    return (kPi / 3.0) * (xm + 1.0) * (sq(ye) + ye * ym + sq(ym)) +
           (kPi / 3.0) * (-xm) * (sq(ym) + ym + 1.0);
}

double product(const SlideConfig& cfg) {
    return primal_half_volume(cfg) * polar_half_volume(cfg);
}

std::array<double, 5> lambda_coeffs(double x0, double y0) {
    const double e = -sq(y0) - y0 + 2.0;
    return {
        p4(y0) * e * (sq(x0) + 3.0 * x0 + 3.0),
        cube(y0) * e * (4.0 * cube(x0) + 12.0 * sq(x0) + 12.0 * x0),
        sq(y0) * (e * (6.0 * p4(x0) + 18.0 * cube(x0) + 18.0 * sq(x0)) +
                  x0 * (p5(y0) - 2.0 * p4(y0) + 8.0 * sq(y0) - 13.0 * y0 + 6.0) +
                  (-p6(y0) + 3.0 * p4(y0) - 2.0 * cube(y0))),
        y0 * (e * (4.0 * p5(x0) + 12.0 * p4(x0) + 12.0 * cube(x0)) +
              sq(x0) * (2.0 * p5(y0) - 4.0 * p4(y0) + 4.0 * cube(y0) + 4.0 * sq(y0) -
                        14.0 * y0 + 8.0) +
              x0 * (-4.0 * p6(y0) + 6.0 * p5(y0) - 2.0 * cube(y0))),
        e * (p6(x0) + 3.0 * p5(x0) + 3.0 * p4(x0)) +
            cube(x0) * (p5(y0) - 2.0 * p4(y0) + 4.0 * cube(y0) - 4.0 * sq(y0) - y0 + 2.0) +
            sq(x0) * (-3.0 * p6(y0) + 6.0 * p5(y0) - 3.0 * p4(y0)),
    };
}

double product_slope_quartic(const SlideConfig& cfg) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    const double t = cfg.t;
    check_pole(y0);
    const double pole = t * y0 + x0;
    check_pole(pole);
    const auto l = lambda_coeffs(x0, y0);
    const double num = (((l[0] * t + l[1]) * t + l[2]) * t + l[3]) * t + l[4];
    return (sq(kPi) / 9.0) * num / (sq(y0) * p4(pole));
}

double product_slope(const SlideConfig& cfg) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    const double t = cfg.t;
    check_pole(y0);
    const double pole = t * y0 + x0;
    check_pole(pole);
    const double e = -sq(y0) - y0 + 2.0;
    const double b = sq(x0) + 3.0 * x0 + 3.0;
    const double c3 = b * cube(y0);
    const double c2 = 3.0 * x0 * b * sq(y0);
    const double c1 = (3.0 * p4(x0) + 9.0 * cube(x0) + 9.0 * sq(x0) +
                       x0 * (-cube(y0) + 3.0 * sq(y0) - 5.0 * y0 + 3.0) + cube(y0) * (y0 - 1.0)) *
                      y0;
    const double c0 = p5(x0) + 3.0 * p4(x0) + 3.0 * cube(x0) +
                      sq(x0) * (-p4(y0) + cube(y0) - 3.0 * sq(y0) + y0 + 2.0) / (y0 + 2.0) +
                      x0 * (3.0 * p5(y0) - 3.0 * p4(y0)) / (y0 + 2.0);
    const double cubic = ((c3 * t + c2) * t + c1) * t + c0;
    return (sq(kPi) / 9.0) * e * cubic / (sq(y0) * cube(pole));
}

std::array<double, 3> gamma_coeffs(double x0, double y0) {
    return {
        -2.0 * x0 * cube(y0) * (p5(y0) - 2.0 * p4(y0) + 8.0 * sq(y0) - 13.0 * y0 + 6.0) -
            2.0 * p6(y0) * (-cube(y0) + 3.0 * y0 - 2.0),
        sq(x0) * sq(y0) *
                (-4.0 * p5(y0) + 8.0 * p4(y0) - 12.0 * cube(y0) + 4.0 * sq(y0) + 16.0 * y0 -
                 12.0) +
            x0 * p5(y0) * (10.0 * cube(y0) - 18.0 * sq(y0) + 6.0 * y0 + 2.0),
        cube(x0) * sq(y0) * (-2.0 * p4(y0) + 4.0 * cube(y0) - 12.0 * sq(y0) + 20.0 * y0 - 10.0) +
            sq(x0) * p4(y0) * (8.0 * cube(y0) - 18.0 * sq(y0) + 12.0 * y0 - 2.0),
    };
}

double product_curvature_quintic(const SlideConfig& cfg) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    const double t = cfg.t;
    check_pole(y0);
    const double pole = t * y0 + x0;
    check_pole(pole);
    const auto g = gamma_coeffs(x0, y0);
    const double num = (g[0] * t + g[1]) * t + g[2];
    return (sq(kPi) / 9.0) * num / (sq(y0) * p5(pole));
}

double curvature_line(const SlideConfig& cfg) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    return (-2.0 * x0 * (y0 + 2.0) * (sq(y0) - 2.0 * y0 + 3.0) + 2.0 * cube(y0) * (y0 + 2.0)) *
               cfg.t +
           (sq(x0) * (-2.0 * sq(y0) - 10.0) + x0 * sq(y0) * (8.0 * y0 - 2.0));
}

double product_curvature(const SlideConfig& cfg) {
    validate(cfg);
    const double pole = cfg.t * cfg.y0 + cfg.x0;
    check_pole(pole);
    return (sq(kPi) / 9.0) * sq(cfg.y0 - 1.0) / p4(pole) * curvature_line(cfg);
}

double endpoint_slope_poly(double x0, double y0) {
    return sq(x0) * (2.0 - y0) * (y0 + 3.0) - x0 * (cube(y0) + 3.0 * sq(y0) + 4.0 * y0 - 12.0) -
           (y0 + 2.0) * (cube(y0) + 3.0 * y0 - 3.0);
}

double endpoint_curvature_poly(double x0, double y0) {
    return 12.0 * sq(x0) - x0 * (4.0 * cube(y0) + 2.0 * y0 - 12.0) -
           2.0 * cube(y0) * (y0 + 2.0);
}

std::array<double, 4> theta_coeffs(double x0, double y0) {
    return {
        -(kPi / 3.0) * x0 * cube(x0 + 1.0) * sq(y0 - 1.0),
        (kPi / 3.0) * sq(x0 + 1.0) * y0 * (y0 - 1.0) * (4.0 * x0 * y0 - x0 + y0 + 2.0),
        (kPi / 3.0) * (y0 - 1.0) *
            (-5.0 * sq(x0) * cube(y0) - 9.0 * x0 * cube(y0) - 3.0 * sq(x0) * sq(y0) -
             9.0 * x0 * sq(y0) - sq(x0) - 3.0 * cube(y0) - 6.0 * sq(y0)),
        (kPi / 3.0) * (y0 - 1.0) * (y0 + 2.0) *
            (2.0 * x0 * cube(y0) + 3.0 * cube(y0) - x0 * sq(y0) + 2.0 * x0 * y0 - 3.0 * x0),
    };
}

std::array<double, 4> phi_coeffs(double x0, double y0, double v, double v0) {
    return {
        y0 * (-(kPi / 3.0) * sq(1.0 - y0) * (2.0 * y0 + 1.0) / x0 + v0 * sq(y0)),
        -kPi * sq(1.0 - y0) * (2.0 * y0 + 1.0) + 3.0 * v0 * x0 * sq(y0),
        -2.0 * kPi * sq(1.0 - y0) * x0 + 3.0 * v0 * sq(x0) * y0 + (y0 - 1.0) * v,
        v0 * cube(x0) - 3.0 * x0 * (1.0 - y0) * v / (y0 + 2.0),
    };
}

std::array<double, 3> upsilon_coeffs(double x0, double y0, double k) {
    const double w = x0 * k - y0;
    return {
        (1.0 - y0) * (y0 + 2.0),
        sq(k) * (-x0 * k + y0 + 2.0) / cube(w),
        -(kPi / 3.0) * (y0 + 2.0) / (x0 * cube(w)) *
            (cube(k) * cube(x0) * (y0 - 1.0) * (-2.0 * y0 + 3.0) +
             3.0 * sq(k) * sq(x0) * y0 * (y0 - 1.0) * (2.0 * y0 - 3.0) +
             3.0 * k * x0 * cube(1.0 - y0) * (2.0 * y0 + 1.0) +
             y0 * (2.0 * y0 + 1.0) * cube(y0 - 1.0)),
    };
}

CoefficientBundle make_coefficient_bundle(const SlideConfig& cfg, double v, double v0) {
    validate(cfg);
    const double k = cfg.k ? *cfg.k : k_max(cfg.x0, cfg.y0);
    return {
        delta_coeffs(cfg.x0, cfg.y0),   lambda_coeffs(cfg.x0, cfg.y0),
        gamma_coeffs(cfg.x0, cfg.y0),   phi_coeffs(cfg.x0, cfg.y0, v, v0),
        theta_coeffs(cfg.x0, cfg.y0),   upsilon_coeffs(cfg.x0, cfg.y0, k),
    };
}

FamilyVolumes inner_volumes(double x0, double y0) {
    SlideConfig cfg{x0, y0, 0.0, std::nullopt};
    return {primal_half_volume(cfg), polar_half_volume(cfg)};
}

double general_product(const SlideConfig& cfg, const FamilyVolumes& vols) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    const double t = cfg.t;
    const double pole = t * y0 + x0;
    check_pole(pole);
    const double u = (t + x0) / pole;
    return (vols.primal_half + (kPi / 3.0) * (2.0 - y0 - sq(y0)) * t) *
           (vols.polar_half - (kPi / 3.0) * ((y0 - 1.0) / x0) * (2.0 - u - sq(u)));
}

double general_slope(const SlideConfig& cfg, const FamilyVolumes& vols) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    const double t = cfg.t;
    const double pole = y0 * t + x0;
    check_pole(pole);
    const auto f = phi_coeffs(x0, y0, vols.primal_half, vols.polar_half);
    const double num = ((f[0] * t + f[1]) * t + f[2]) * t + f[3];
    return (kPi / 3.0) * (2.0 - y0 - sq(y0)) * num / cube(pole);
}

double curvature_line_general(const SlideConfig& cfg, double primal_half) {
    validate(cfg);
    const double x0 = cfg.x0;
    const double y0 = cfg.y0;
    return (y0 + 2.0) * (primal_half * y0 + kPi * x0 * (y0 - 1.0)) * cfg.t +
           x0 * (primal_half * (4.0 * y0 - 1.0) + kPi * x0 * (sq(y0) + y0 - 2.0));
}

double general_curvature(const SlideConfig& cfg, double primal_half) {
    validate(cfg);
    const double pole = cfg.t * cfg.y0 + cfg.x0;
    check_pole(pole);
    return (2.0 * kPi / 3.0) * sq(1.0 - cfg.y0) / p4(pole) *
           curvature_line_general(cfg, primal_half);
}

double endpoint_slope_general(double x0, double y0, double k, const FamilyVolumes& vols) {
    const auto u = upsilon_coeffs(x0, y0, k);
    return (kPi / 3.0) * (u[0] * vols.polar_half + u[1] * vols.primal_half + u[2]);
}

double outer_half_volume(double x0, double y0, double k) {
    const double yg = y0 - k * (x0 + 1.0);
    return (kPi / 3.0) * (x0 + 1.0) * (sq(yg) + yg * y0 + sq(y0)) +
           (kPi / 3.0) * (-x0) * (sq(y0) + y0 + 1.0);
}

double slide_cubic(double x0, double y0, double k) {
    const auto th = theta_coeffs(x0, y0);
    return ((th[0] * k + th[1]) * k + th[2]) * k + th[3];
}

double slide_cubic_d1(double x0, double y0, double k) {
    const auto th = theta_coeffs(x0, y0);
    return (3.0 * th[0] * k + 2.0 * th[1]) * k + th[2];
}

double slide_cubic_d2(double x0, double y0, double k) {
    const auto th = theta_coeffs(x0, y0);
    return 6.0 * th[0] * k + 2.0 * th[1];
}

double slide_ratio(double x0, double y0, double k) {
    validate({x0, y0, 0.0, k});
    check_pole(k);
    return slide_cubic(x0, y0, k) / k;
}

double slide_cubic_d1_at_kmax(double x0, double y0) {
    return (kPi / 3.0) * (1.0 - y0) *
           (sq(x0) * (2.0 * sq(y0) + 1.0) + x0 * (2.0 * cube(y0) + 4.0 * sq(y0)) + cube(y0) +
            2.0 * sq(y0));
}

double slide_cubic_d2_at_kmax(double x0, double y0) {
    return (2.0 * kPi / 3.0) * cube(x0 + 1.0) * y0 * (y0 - 1.0) * (y0 + 2.0);
}

double region_split() {
    return 0.5 * (std::sqrt(5.0) - 1.0);
}

double region_curve(double y) {
    return (cube(y) + 2.0 * sq(y) + 3.0 * y - 6.0) / ((2.0 - y) * (y + 3.0));
}

RegionTag region_membership(double x0, double y0) {
    if (!(y0 >= -kEdgeTol) || !(y0 <= 1.0 + kEdgeTol) || !(x0 >= -1.0 - kEdgeTol) ||
        !(x0 <= y0 - 1.0 + kEdgeTol)) {
        throw OutsideTriangle("region_membership: point outside the parameter triangle");
    }
    const double split = region_split();
    RegionTag tag;
    if (y0 >= split - kEdgeTol) {
        tag.slope_region = true;
    }
    if (y0 <= split + kEdgeTol) {
        const double cv = region_curve(y0);
        if (x0 <= cv + kEdgeTol) {
            tag.slope_region = true;
        }
        if (x0 >= cv - kEdgeTol) {
            tag.curvature_region = true;
        }
    }
    return tag;
}

long SignClaimReport::total_violations() const {
    long total = 0;
    for (const auto& c : claims) {
        total += c.violations;
    }
    return total;
}

namespace {

struct ClaimAccumulator {
    ClaimResult result;
    double tolerance;

    ClaimAccumulator(std::string name, double tol) : tolerance(tol) {
        result.name = std::move(name);
    }

    // Records a quantity that is claimed to be <= 0.
    void visit(double value, double x, double y) {
        ++result.nodes;
        if (value > result.max_violation) {
            result.max_violation = value;
            result.arg_x = x;
            result.arg_y = y;
        }
        if (value > tolerance) {
            ++result.violations;
        }
    }
};

// Interior grid over the slope region (endpoint slope claim holds here).
template <typename Fn>
void for_slope_region(int n, Fn&& fn) {
    for (int i = 0; i < n; ++i) {
        const double y = (i + 0.5) / n;
        const double hi = y <= region_split() ? region_curve(y) : y - 1.0;
        if (hi <= -1.0) {
            continue;
        }
        for (int j = 0; j < n; ++j) {
            const double x = -1.0 + (hi + 1.0) * (j + 0.5) / n;
            fn(x, y);
        }
    }
}

// Interior grid over the curvature region.
template <typename Fn>
void for_curvature_region(int n, Fn&& fn) {
    const double split = region_split();
    for (int i = 0; i < n; ++i) {
        const double y = split * (i + 0.5) / n;
        const double lo = region_curve(y);
        const double hi = y - 1.0;
        if (hi <= lo) {
            continue;
        }
        for (int j = 0; j < n; ++j) {
            const double x = lo + (hi - lo) * (j + 0.5) / n;
            fn(x, y);
        }
    }
}

}  // namespace

SignClaimReport verify_sign_claims(int grid, double tolerance) {
    SignClaimReport report;
    report.grid = grid;

    ClaimAccumulator slope_claim("endpoint-slope", tolerance);
    for_slope_region(grid, [&](double x, double y) {
        slope_claim.visit(endpoint_slope_poly(x, y), x, y);
    });
    report.claims.push_back(slope_claim.result);

    ClaimAccumulator curv_claim("endpoint-curvature", tolerance);
    for_curvature_region(grid, [&](double x, double y) {
        curv_claim.visit(endpoint_curvature_poly(x, y), x, y);
    });
    report.claims.push_back(curv_claim.result);

    // F is concave on [0, t_max] over the curvature region; midpoint test.
    ClaimAccumulator concavity("product-concavity", tolerance);
    {
        const int cells = std::max(8, grid / 8);
        for_curvature_region(cells, [&](double x, double y) {
            const double tm = t_max(x, y);
            if (!(tm > 0.0)) {
                return;
            }
            for (int s = 0; s + 2 <= 20; s += 2) {
                const double t1 = tm * s / 20.0;
                const double t2 = tm * (s + 2) / 20.0;
                const double mid = 0.5 * (t1 + t2);
                const double f1 = product({x, y, t1, std::nullopt});
                const double f2 = product({x, y, t2, std::nullopt});
                const double fm = product({x, y, mid, std::nullopt});
                concavity.visit(0.5 * (f1 + f2) - fm, x, y);
            }
        });
    }
    report.claims.push_back(concavity.result);

    // Slope of the curvature line in t is positive on the whole triangle.
    ClaimAccumulator iline("curvature-line-slope", tolerance);
    for (int i = 0; i < grid; ++i) {
        const double y = (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            const double x = -1.0 + (y - 1.0 + 1.0) * (j + 0.5) / grid;
            const double s =
                -2.0 * x * (y + 2.0) * (sq(y) - 2.0 * y + 3.0) + 2.0 * cube(y) * (y + 2.0);
            iline.visit(-s, x, y);
        }
    }
    report.claims.push_back(iline.result);

    // General-family endpoint slope at the k_max bridge, with the volume
    // monotonicity coefficients that extend it to every admissible V, V0.
    ClaimAccumulator general_slope_claim("general-endpoint-slope", tolerance);
    for_slope_region(grid, [&](double x, double y) {
        const double k = k_max(x, y);
        const auto vols = inner_volumes(x, y);
        const auto u = upsilon_coeffs(x, y, k);
        general_slope_claim.visit(endpoint_slope_general(x, y, k, vols), x, y);
        general_slope_claim.visit(-u[0], x, y);
        general_slope_claim.visit(u[1], x, y);
    });
    report.claims.push_back(general_slope_claim.result);

    // Endpoint curvature cubic over the curvature region, sampled across the
    // admissible slope window.
    ClaimAccumulator cubic_claim("slide-cubic", tolerance);
    {
        const int cells = std::max(8, grid / 4);
        for_curvature_region(cells, [&](double x, double y) {
            const double klo = k_min(x, y);
            const double khi = k_max(x, y);
            for (int s = 0; s < 8; ++s) {
                const double k = klo + (khi - klo) * (s + 0.5) / 8.0;
                cubic_claim.visit(slide_cubic(x, y, k), x, y);
            }
            cubic_claim.visit(slide_cubic(x, y, khi), x, y);
        });
    }
    report.claims.push_back(cubic_claim.result);

    // Both regions together cover the triangle.
    ClaimAccumulator cover("region-cover", 0.5);
    for (int i = 0; i <= grid; ++i) {
        const double y = static_cast<double>(i) / grid;
        for (int j = 0; j <= grid; ++j) {
            const double x = -1.0 + (y - 1.0 + 1.0) * static_cast<double>(j) / grid;
            const auto tag = region_membership(std::min(x, y - 1.0), y);
            cover.visit(tag.slope_region || tag.curvature_region ? 0.0 : 1.0, x, y);
        }
    }
    report.claims.push_back(cover.result);

    return report;
}

}  // namespace revo::slide
