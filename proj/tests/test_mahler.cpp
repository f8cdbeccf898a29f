#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "revo/harness.hpp"
#include "revo/mahler.hpp"
#include "revo/numerics.hpp"
#include "revo/reduction.hpp"

using namespace revo;

namespace {

GeneratingFunction flat(double a = 1.0, double c = 1.0) {
    return GeneratingFunction::piecewise(a, {{0.0, c}, {a, c}});
}

GeneratingFunction cone_even() {
    return GeneratingFunction::piecewise(1.0, {{0.0, 1.0}, {1.0, 0.0}});
}

GeneratingFunction disk() {
    return GeneratingFunction::analytic(
        1.0, [](double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); }, "unit-disk");
}

// Independent conjugate evaluation for the 3D slice oracle; on a linear piece
// the ratio is monotone, so the breakpoint minimum is exact.
double dense_conjugate(const GeneratingFunction& f, double xp) {
    return oracles::conjugate_at_breakpoints(f, xp);
}

}  // namespace

TEST_CASE("landmark Mahler products") {
    CHECK(mahler_product({flat()}).product ==
          doctest::Approx(kMinProductRevolution).epsilon(1e-12));
    CHECK(mahler_product({cone_even()}).product ==
          doctest::Approx(kMinProductRevolution).epsilon(1e-12));
    CHECK(mahler_product({disk()}).product ==
          doctest::Approx(16.0 * kPi * kPi / 9.0).epsilon(1e-7));

    const MahlerReport octagon =
        mahler_product({polygon_profile(UnconditionalPolygon({{-1.0, 0.0}, {-0.8, 0.8}, {0.0, 1.0}}))});
    CHECK(octagon.product >= kMinProductRevolution - 1e-9);
    CHECK(octagon.product ==
          doctest::Approx(sq(kPi) * functional_product(polygon_profile(
                              UnconditionalPolygon({{-1.0, 0.0}, {-0.8, 0.8}, {0.0, 1.0}}))))
              .epsilon(1e-9));
}

TEST_CASE("report bookkeeping is consistent") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const MahlerReport rep =
            mahler_product({polygon_profile(sample_polygon(rng, 3 + rng.below(8)))});
        CHECK(rep.product == doctest::Approx(rep.primal_volume * rep.polar_volume).epsilon(1e-12));
        CHECK(rep.bound == doctest::Approx(kMinProductRevolution));
        CHECK(rep.slack == doctest::Approx(rep.product - rep.bound));
        CHECK(rep.slack >= -1e-9);
    }
}

TEST_CASE("functional product equality cases") {
    CHECK(functional_product(flat()) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK(functional_product(flat(0.7, 2.5)) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK(functional_product(cone_even()) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK(functional_product(disk()) == doctest::Approx(16.0 / 9.0).epsilon(1e-8));
}

TEST_CASE("functional product is the Mahler product over pi^2") {
    Rng rng(606);
    for (int trial = 0; trial < 100; ++trial) {
        const GeneratingFunction f = polygon_profile(sample_polygon(rng, 3 + rng.below(8)));
        CHECK(functional_product(f) ==
              doctest::Approx(mahler_product({f}).product / sq(kPi)).epsilon(1e-9));
    }
}

TEST_CASE("parallel sections products at the corners") {
    const MahlerReport cube = mahler_product_psh({flat(), UnconditionalPolygon::square()});
    CHECK(cube.product == doctest::Approx(kMinProductParallelSections).epsilon(1e-12));
    CHECK(cube.primal_volume == doctest::Approx(8.0));
    const MahlerReport octa = mahler_product_psh({cone_even(), UnconditionalPolygon::diamond()});
    CHECK(octa.product == doctest::Approx(kMinProductParallelSections).epsilon(1e-12));
    const MahlerReport mixed = mahler_product_psh({cone_even(), UnconditionalPolygon::square()});
    CHECK(mixed.product == doctest::Approx(kMinProductParallelSections).epsilon(1e-12));
}

TEST_CASE("parallel sections volumes match slice integration") {
    Rng rng(1999);
    for (int trial = 0; trial < 10; ++trial) {
        const UnconditionalPolygon section = sample_polygon(rng, 3 + rng.below(5));
        const GeneratingFunction f = polygon_profile(sample_polygon(rng, 3 + rng.below(5)));
        const MahlerReport rep = mahler_product_psh({f, section});

        const double section_area = area(section);
        const double dual_area = area(polar_polygon(section));
        const int n = 4000;
        double primal = 0.0;
        const double a = f.half_width();
        for (int i = 0; i < n; ++i) {
            const double x = -a + 2.0 * a * (i + 0.5) / n;
            primal += section_area * sq(f(x)) * (2.0 * a / n);
        }
        double polar = 0.0;
        const double ap = 1.0 / a;
        for (int i = 0; i < n; ++i) {
            const double x = -ap + 2.0 * ap * (i + 0.5) / n;
            polar += dual_area * sq(dense_conjugate(f, x)) * (2.0 * ap / n);
        }
        CHECK(rep.primal_volume == doctest::Approx(primal).epsilon(1e-5));
        CHECK(rep.polar_volume == doctest::Approx(polar).epsilon(1e-5));
    }
}

TEST_CASE("parallel sections products stay above the cube bound") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const UnconditionalPolygon section = sample_polygon(rng, 3 + rng.below(8));
        const GeneratingFunction f = polygon_profile(sample_polygon(rng, 3 + rng.below(8)));
        CHECK(mahler_product_psh({f, section}).product >=
              kMinProductParallelSections - 1e-9);
    }
}

TEST_CASE("products do not change under scaling") {
    Rng rng(31);
    for (const double lambda : {0.1, 3.0, 10.0}) {
        for (int trial = 0; trial < 30; ++trial) {
            const GeneratingFunction f = polygon_profile(sample_polygon(rng, 3 + rng.below(8)));
            const double base = mahler_product({f}).product;
            const double scaled_product =
                mahler_product({scaled(f, lambda, lambda)}).product;
            CHECK(std::abs(scaled_product - base) < 1e-9);
        }
    }
}

TEST_CASE("product of the polar body is the same") {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const BodyOfRevolution body{polygon_profile(sample_polygon(rng, 3 + rng.below(8)))};
        CHECK(std::abs(mahler_product(body).product -
                       mahler_product(polar_body(body)).product) < 1e-9);
    }
}

TEST_CASE("revolution products respect the cylinder bound") {
    Rng rng(123581321);
    for (int trial = 0; trial < 10000; ++trial) {
        const UnconditionalPolygon p = sample_polygon(rng, 3 + rng.below(10));
        const double product = mahler_product({polygon_profile(p)}).product;
        CHECK(product >= kMinProductRevolution - 1e-9);
        if (product <= kMinProductRevolution + 1e-6) {
            CHECK((is_square_chain(p, 1e-6) || is_diamond_chain(p, 1e-6)));
        }
    }
}

TEST_CASE("axis profile validation") {
    CHECK_THROWS_AS(AxisProfile({{0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(AxisProfile({{0.0, 1.0}, {0.5, 0.2}, {1.0, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(AxisProfile({{0.0, 1.0}, {1.0, -0.5}}), std::invalid_argument);
    CHECK_NOTHROW(AxisProfile({{0.0, 0.0}, {0.5, 1.0}, {1.0, 0.0}}));
}

TEST_CASE("santalo search on the cone") {
    const SantaloSearchResult res = santalo_axis_search(AxisProfile({{0.0, 1.0}, {1.0, 0.0}}));
    CHECK(res.best_product == doctest::Approx(kMinProductCone).epsilon(1e-9));
    CHECK(res.apex_ratio == doctest::Approx(0.75).epsilon(1e-6));
    CHECK(res.best_shift == doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("santalo search recentres the cylinder profile") {
    const SantaloSearchResult res =
        santalo_axis_search(AxisProfile({{0.0, 1.0}, {1.0, 1.0}}));
    CHECK(res.best_shift == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(res.best_product == doctest::Approx(kMinProductRevolution).epsilon(1e-10));
}

TEST_CASE("santalo search on the frustum profile") {
    const AxisProfile frustum({{0.0, 1.0}, {1.0, 0.5}});
    const SantaloSearchResult res = santalo_axis_search(frustum);
    CHECK(res.best_product > kMinProductCone);
    CHECK(res.best_product < kMinProductRevolution);
    // Dense scan oracle.
    double best = 1e300;
    double best_s = 0.0;
    for (int i = 1; i < 10000; ++i) {
        const double s = i / 10000.0;
        const double v = santalo_product_at(frustum, s);
        if (v < best) {
            best = v;
            best_s = s;
        }
    }
    CHECK(res.best_product <= best + 1e-12);
    CHECK(std::abs(res.best_shift - best_s) < 2e-4);
}

TEST_CASE("santalo optimum has a flat derivative") {
    for (const AxisProfile& profile :
         {AxisProfile({{0.0, 1.0}, {1.0, 0.0}}), AxisProfile({{0.0, 1.0}, {1.0, 0.5}}),
          AxisProfile({{0.0, 0.5}, {0.4, 1.0}, {1.0, 0.0}})}) {
        const SantaloSearchResult res = santalo_axis_search(profile);
        const double h = 1e-5;
        const double fd = (santalo_product_at(profile, res.best_shift + h) -
                           santalo_product_at(profile, res.best_shift - h)) /
                          (2.0 * h);
        CHECK(std::abs(fd) < 1e-4);
        CHECK(res.apex_ratio > 0.0);
        CHECK(res.apex_ratio < 1.0);
    }
}

TEST_CASE("shifted-domain polar agrees with the unconditional polar route") {
    // Tent with apexes at both ends: the dual has tall vertical faces whose
    // top vertices coincide with the axis anchors.
    const AxisProfile tent(
        {{0.0, 0.0}, {0.5074, 0.9912}, {1.0, 1.0}, {1.4926, 0.9912}, {2.0, 0.0}});
    const GeneratingFunction even = GeneratingFunction::piecewise(
        1.0, {{0.0, 1.0}, {0.4926, 0.9912}, {1.0, 0.0}});
    const double primal = volume({even});
    const double polar = volume(polar_body({even}));
    CHECK(santalo_product_at(tent, 1.0) == doctest::Approx(primal * polar).epsilon(1e-10));
    CHECK(santalo_axis_search(tent).best_product >= kMinProductCone - 1e-9);
}

TEST_CASE("santalo search needs an interior origin") {
    CHECK_THROWS_AS(santalo_axis_search(AxisProfile({{0.0, 0.0}, {1.0, 0.0}})),
                    NoInteriorBracket);
}

TEST_CASE("santalo products of random profiles stay above the cone bound") {
    Rng rng(271828);
    for (int trial = 0; trial < 50; ++trial) {
        const GeneratingFunction f = polygon_profile(sample_polygon(rng, 3 + rng.below(6)));
        std::vector<Point2> pts;
        for (auto it = f.breakpoints().rbegin(); it != f.breakpoints().rend(); ++it) {
            pts.push_back({1.0 - it->x, it->y});
        }
        for (const auto& bp : f.breakpoints()) {
            if (bp.x > 0.0) {
                pts.push_back({1.0 + bp.x, bp.y});
            }
        }
        const SantaloSearchResult res = santalo_axis_search(AxisProfile(pts));
        CHECK(res.best_product >= kMinProductCone - 1e-9);
    }
}
