#pragma once

#include <cmath>
#include <functional>
#include <numbers>

namespace revo {

inline constexpr double kPi = std::numbers::pi;

inline double sq(double v) { return v * v; }
inline double cube(double v) { return v * v * v; }
inline double p4(double v) { return sq(sq(v)); }
inline double p5(double v) { return p4(v) * v; }
inline double p6(double v) { return cube(v) * cube(v); }

// Adaptive Simpson with the classic err/15 correction. Bisection isolates
// kinks, so piecewise-smooth integrands converge to the absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth);

struct MinResult {
    double x = 0.0;
    double value = 0.0;
};

// Golden-section minimization of a unimodal function on [lo, hi]; shrinks the
// bracket to the given width and returns the best probed point.
MinResult golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                             double bracket_tol);

}  // namespace revo
