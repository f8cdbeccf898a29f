#include "revo/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "revo/mahler.hpp"
#include "revo/numerics.hpp"
#include "revo/revolve.hpp"

namespace revo {
namespace {

constexpr double kTopTol = 1e-10;
constexpr double kMonotoneTol = 1e-9;

bool near(const Point2& a, double x, double y, double tol) {
    return std::abs(a.x - x) <= tol && std::abs(a.y - y) <= tol;
}

}  // namespace

double chain_product(const UnconditionalPolygon& p) {
    return mahler_product({polygon_profile(p)}).product;
}

bool is_square_chain(const UnconditionalPolygon& p, double tol) {
    const auto& c = p.chain();
    return c.size() == 3 && near(c[0], -1.0, 0.0, tol) && near(c[1], -1.0, 1.0, tol) &&
           near(c[2], 0.0, 1.0, tol);
}

bool is_diamond_chain(const UnconditionalPolygon& p, double tol) {
    const auto& c = p.chain();
    return c.size() == 2 && near(c[0], -1.0, 0.0, tol) && near(c[1], 0.0, 1.0, tol);
}

ReduceCandidates reduce_once(const UnconditionalPolygon& p) {
    const auto& c = p.chain();
    const size_t m = c.size();
    if (m < 3) {
        throw NotReducible("reduce_once: chain has no removable vertex");
    }
    const Point2 top = c[m - 2];
    if (std::abs(top.y - 1.0) > kTopTol || top.x <= -1.0 + kTopTol || top.x >= -kTopTol) {
        throw NotReducible("reduce_once: no vertex strictly inside the top edge");
    }

    std::vector<Point2> drop_pts(c.begin(), c.end() - 2);
    drop_pts.push_back(c.back());
    UnconditionalPolygon drop(drop_pts);

    bool clamped = false;
    Point2 target{-1.0, 1.0};
    if (m >= 4) {
        const Point2& a2 = c[m - 3];
        const Point2& a3 = c[m - 4];
        if (std::abs(a2.x - a3.x) > 1e-12) {
            const double k = (a2.y - a3.y) / (a2.x - a3.x);
            target.x = a2.x + (1.0 - a2.y) / k;
            if (target.x < -1.0 || target.x > -1e-12) {
                target.x = std::clamp(target.x, -1.0, -1e-12);
                clamped = true;
            }
        }
    }
    std::vector<Point2> slide_pts;
    if (m >= 4) {
        slide_pts.assign(c.begin(), c.end() - 3);
    } else {
        slide_pts.assign(c.begin(), c.end() - 2);
    }
    slide_pts.push_back(target);
    slide_pts.push_back(c.back());
    UnconditionalPolygon slide(slide_pts);

    const double before = chain_product(p);
    const double drop_product = chain_product(drop);
    const double slide_product = chain_product(slide);

    ReduceCandidates out{drop, slide,
                         ReductionStep{StepKind::DropVertex, p, drop, before, drop_product,
                                       false}};
    if (std::abs(drop_product - slide_product) > 1e-12 && slide_product < drop_product) {
        out.chosen = ReductionStep{StepKind::SlideToC, p, slide, before, slide_product, clamped};
    }
    return out;
}

ReductionCertificate reduce_to_terminal(const UnconditionalPolygon& p) {
    UnconditionalPolygon current = normalized(p);
    ReductionCertificate cert;
    cert.min_product = chain_product(current);
    const size_t budget = 2 * current.chain().size() + 4;

    for (size_t step = 0;; ++step) {
        if (is_square_chain(current)) {
            cert.terminal = TerminalShape::Cylinder;
            break;
        }
        if (is_diamond_chain(current)) {
            cert.terminal = TerminalShape::Bicone;
            break;
        }
        if (step >= budget) {
            throw NonTerminating("reduce_to_terminal: step budget exceeded");
        }
        const auto& c = current.chain();
        const Point2 top = c[c.size() - 2];
        if (std::abs(top.y - 1.0) <= kTopTol) {
            ReduceCandidates cand = reduce_once(current);
            cert.steps.push_back(cand.chosen);
            current = cand.chosen.after;
            cert.min_product = std::min(cert.min_product, cand.chosen.product_after);
        } else {
            UnconditionalPolygon swapped = polar_polygon(current);
            const double before = chain_product(current);
            const double after = chain_product(swapped);
            cert.steps.push_back(
                ReductionStep{StepKind::PolarSwap, current, swapped, before, after, false});
            current = swapped;
            cert.min_product = std::min(cert.min_product, after);
        }
    }
    return cert;
}

bool verify_certificate(const ReductionCertificate& cert) {
    const double bound = kMinProductRevolution;
    double min_product = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const ReductionStep& s = cert.steps[i];
        const double before = chain_product(s.before);
        const double after = chain_product(s.after);
        const double scale = std::max({1.0, before, after});
        if (std::abs(before - s.product_before) > 1e-7 * scale ||
            std::abs(after - s.product_after) > 1e-7 * scale) {
            return false;
        }
        if (s.kind == StepKind::PolarSwap) {
            if (std::abs(after - before) > kMonotoneTol) {
                return false;
            }
        } else if (after > before + kMonotoneTol) {
            return false;
        }
        if (i + 1 < cert.steps.size() &&
            !chains_equal(s.after, cert.steps[i + 1].before, 1e-12)) {
            return false;
        }
        min_product = std::min({min_product, before, after});
    }
    if (!cert.steps.empty()) {
        const UnconditionalPolygon& final_chain = cert.steps.back().after;
        const bool terminal_ok = cert.terminal == TerminalShape::Cylinder
                                     ? is_square_chain(final_chain)
                                     : is_diamond_chain(final_chain);
        if (!terminal_ok) {
            return false;
        }
        if (std::abs(cert.min_product - min_product) > 1e-7 * std::max(1.0, min_product)) {
            return false;
        }
    } else if (std::abs(cert.min_product - bound) > 1e-6) {
        return false;  // a terminal chain carries exactly the bound product
    }
    return cert.min_product >= bound - kMonotoneTol;
}

}  // namespace revo
