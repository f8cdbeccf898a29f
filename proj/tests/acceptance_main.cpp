// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "revo/harness.hpp"
#include "revo/mahler.hpp"
#include "revo/numerics.hpp"
#include "revo/reduction.hpp"
#include "revo/revolve.hpp"
#include "revo/slide_family.hpp"

using namespace revo;
namespace sf = revo::slide;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int id, std::string label, double seconds_limit)
        : id_(id), label_(std::move(label)), limit_(seconds_limit),
          start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (!first_failure_.empty()) {
                first_failure_ += "; ";
            }
            first_failure_ += detail;
        }
    }

    void finish() {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (limit_ > 0.0 && elapsed > limit_) {
            ok_ = false;
            first_failure_ += (first_failure_.empty() ? "" : "; ") + std::string("over time limit");
        }
        std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n", ok_ ? "PASS" : "FAIL", id_,
                    label_.c_str(), elapsed, first_failure_.empty() ? "" : " - ",
                    first_failure_.c_str());
        if (!ok_) {
            ++failures;
        }
    }

private:
    int id_;
    std::string label_;
    double limit_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::string first_failure_;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

GeneratingFunction flat_profile() {
    return GeneratingFunction::piecewise(1.0, {{0.0, 1.0}, {1.0, 1.0}});
}

GeneratingFunction cone_profile() {
    return GeneratingFunction::piecewise(1.0, {{0.0, 1.0}, {1.0, 0.0}});
}

void criterion_golden_constants() {
    Criterion c(1, "golden constants: cylinder, bicone, cube, octahedron", 1.0);
    const double cyl = mahler_product({flat_profile()}).product;
    const double bic = mahler_product({cone_profile()}).product;
    c.check(std::abs(cyl - kMinProductRevolution) < 1e-9, "cylinder " + fmt(cyl));
    c.check(std::abs(bic - kMinProductRevolution) < 1e-9, "bicone " + fmt(bic));
    const double cube =
        mahler_product_psh({flat_profile(), UnconditionalPolygon::square()}).product;
    const double octa =
        mahler_product_psh({cone_profile(), UnconditionalPolygon::diamond()}).product;
    c.check(std::abs(cube - kMinProductParallelSections) < 1e-9, "cube " + fmt(cube));
    c.check(std::abs(octa - kMinProductParallelSections) < 1e-9, "octahedron " + fmt(octa));
    c.finish();
}

void criterion_cone_santalo() {
    Criterion c(2, "cone Santalo point: product 256 pi^2 / 243, apex ratio 3/4", 10.0);
    const SantaloSearchResult res = santalo_axis_search(AxisProfile({{0.0, 1.0}, {1.0, 0.0}}));
    c.check(std::abs(res.best_product - kMinProductCone) < 1e-4,
            "product " + fmt(res.best_product));
    c.check(std::abs(res.apex_ratio - 0.75) < 1e-3, "apex ratio " + fmt(res.apex_ratio));
    c.finish();
}

void criterion_functional_equality() {
    Criterion c(3, "functional product equals 4/3 for flat and conical profiles", 0.0);
    for (const auto& [name, profile] :
         {std::pair<std::string, GeneratingFunction>{"flat", flat_profile()},
          {"flat-scaled", GeneratingFunction::piecewise(0.7, {{0.0, 2.5}, {0.7, 2.5}})},
          {"cone", cone_profile()}}) {
        const double value = functional_product(profile);
        c.check(std::abs(value - 4.0 / 3.0) < 1e-12, name + " " + fmt(value));
    }
    c.finish();
}

void criterion_closed_form_gate() {
    Criterion c(4, "closed forms match the geometric oracle and finite differences", 0.0);
    Rng rng(8675309);
    double worst_f1 = 0.0;
    double worst_f2 = 0.0;
    double worst_d1 = 0.0;
    double worst_d2 = 0.0;
    const double h = 1e-5;
    for (int trial = 0; trial < 1000; ++trial) {
        const double y0 = rng.uniform(0.08, 0.92);
        const double x0 = rng.uniform(-0.98, y0 - 1.02);
        const double tm = sf::t_max(x0, y0);
        const double t = rng.uniform(2.0 * h, tm * 0.999 - 2.0 * h);
        const sf::SlideConfig cfg{x0, y0, std::max(0.0, t), std::nullopt};

        const UnconditionalPolygon chain({{-1.0, 0.0}, {x0, y0}, {-cfg.t, 1.0}, {0.0, 1.0}});
        const BodyOfRevolution body{polygon_profile(chain)};
        worst_f1 = std::max(worst_f1,
                            rel_gap(sf::primal_half_volume(cfg), 0.5 * volume(body)));
        worst_f2 = std::max(worst_f2,
                            rel_gap(sf::polar_half_volume(cfg), 0.5 * volume(polar_body(body))));

        auto value = [&](double tt) { return sf::product({x0, y0, tt, std::nullopt}); };
        auto slope = [&](double tt) { return sf::product_slope({x0, y0, tt, std::nullopt}); };
        const double fd1 = (value(cfg.t + h) - value(cfg.t - h)) / (2.0 * h);
        const double fd2 = (slope(cfg.t + h) - slope(cfg.t - h)) / (2.0 * h);
        worst_d1 = std::max(worst_d1, rel_gap(sf::product_slope(cfg), fd1));
        worst_d2 = std::max(worst_d2, rel_gap(sf::product_curvature(cfg), fd2));
    }
    c.check(worst_f1 < 1e-9, "primal half volume gap " + fmt(worst_f1));
    c.check(worst_f2 < 1e-9, "polar half volume gap " + fmt(worst_f2));
    c.check(worst_d1 < 1e-5, "slope fd gap " + fmt(worst_d1));
    c.check(worst_d2 < 1e-4, "curvature fd gap " + fmt(worst_d2));
    c.finish();
}

void criterion_sign_grids() {
    Criterion c(5, "endpoint sign claims on 100x100 grids, cover on 400x400", 60.0);
    const sf::SignClaimReport report = sf::verify_sign_claims(100);
    for (const auto& claim : report.claims) {
        c.check(claim.violations == 0,
                claim.name + " violations " + std::to_string(claim.violations));
    }
    long cover_misses = 0;
    for (int i = 0; i <= 400; ++i) {
        const double y = i / 400.0;
        for (int j = 0; j <= 400; ++j) {
            const double x = -1.0 + (y - 1.0 + 1.0) * j / 400.0;
            const auto tag = sf::region_membership(std::min(x, y - 1.0), y);
            if (!tag.slope_region && !tag.curvature_region) {
                ++cover_misses;
            }
        }
    }
    c.check(cover_misses == 0, "region cover misses " + std::to_string(cover_misses));
    c.finish();
}

void criterion_reduction_certificates() {
    Criterion c(6, "1000 seeded reductions: monotone, bounded, verifiable", 120.0);
    Rng rng(424242);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const UnconditionalPolygon p = sample_polygon(rng, 3 + rng.below(10));
        const ReductionCertificate cert = reduce_to_terminal(p);
        bool ok = verify_certificate(cert);
        ok = ok && cert.min_product >= kMinProductRevolution - 1e-9;
        double prev = chain_product(p);
        for (const auto& s : cert.steps) {
            ok = ok && s.product_after <= s.product_before + 1e-9 &&
                 s.product_before <= prev + 1e-9;
            prev = s.product_after;
        }
        if (!ok) {
            ++bad;
        }
    }
    c.check(bad == 0, std::to_string(bad) + " bad certificates");
    c.finish();
}

void criterion_duality_invariants() {
    Criterion c(7, "polar involution, support/radial reciprocity, slice duality", 0.0);
    Rng rng(1701);
    double worst_involution = 0.0;
    double worst_reciprocity = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        const UnconditionalPolygon p = sample_polygon(rng, 3 + rng.below(10));
        worst_involution =
            std::max(worst_involution, hausdorff_distance(polar_polygon(polar_polygon(p)), p));
        const UnconditionalPolygon dual = polar_polygon(p);
        for (int i = 0; i < 32; ++i) {
            const double phi = rng.uniform(0.0, 2.0 * kPi);
            const Point2 d{std::cos(phi), std::sin(phi)};
            worst_reciprocity = std::max(
                worst_reciprocity, std::abs(radial_value(p, d) * support_value(dual, d) - 1.0));
        }
    }
    c.check(worst_involution < 1e-7, "involution " + fmt(worst_involution));
    c.check(worst_reciprocity < 1e-7, "reciprocity " + fmt(worst_reciprocity));

    double worst_slice = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const BodyOfRevolution body{polygon_profile(sample_polygon(rng, 3 + rng.below(6)))};
        std::vector<Vec3> dirs;
        for (int i = 0; i < 8; ++i) {
            dirs.push_back(
                {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        }
        worst_slice =
            std::max(worst_slice, verify_slice_projection_duality(body, dirs).max_deviation);
    }
    c.check(worst_slice < 1e-7, "slice duality " + fmt(worst_slice));
    c.finish();
}

void criterion_sweep_determinism() {
    Criterion c(8, "sweep --seed 7 --samples 1000 twice: byte-identical CSV", 0.0);
    auto read_file = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    SweepConfig cfg;
    cfg.seed = 7;
    cfg.samples = 1000;
    cfg.mode = SweepMode::Revolution;
    cfg.out_path = "/tmp/revo_acceptance_sweep_a.csv";
    cfg.jobs = 2;
    const SweepSummary s1 = run_sweep(cfg);
    const std::string a = read_file(cfg.out_path);
    cfg.out_path = "/tmp/revo_acceptance_sweep_b.csv";
    const SweepSummary s2 = run_sweep(cfg);
    const std::string b = read_file(cfg.out_path);
    c.check(!a.empty() && a == b, "outputs differ");
    c.check(s1.violations == 0 && s2.violations == 0, "violations present");
    std::remove("/tmp/revo_acceptance_sweep_a.csv");
    std::remove("/tmp/revo_acceptance_sweep_b.csv");
    c.finish();
}

}  // namespace

int main() {
    criterion_golden_constants();
    criterion_cone_santalo();
    criterion_functional_equality();
    criterion_closed_form_gate();
    criterion_sign_grids();
    criterion_reduction_certificates();
    criterion_duality_invariants();
    criterion_sweep_determinism();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
