#include "revo/harness.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "revo/reduction.hpp"
#include "revo/slide_family.hpp"

namespace revo {
namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GeneratingFunction cone_profile_even() {
    return GeneratingFunction::piecewise(1.0, {{0.0, 1.0}, {1.0, 0.0}});
}

GeneratingFunction flat_profile(double a, double c) {
    return GeneratingFunction::piecewise(a, {{0.0, c}, {a, c}});
}

// Even profile sampled the same way as sample_polygon, read off a chain.
GeneratingFunction sample_profile(Rng& rng, int max_vertices) {
    const int n = 3 + static_cast<int>(rng.below(static_cast<uint32_t>(max_vertices - 2)));
    return polygon_profile(sample_polygon(rng, n));
}

// Non-even concave profile on [0, 2]: an even one recentred to start at 0.
AxisProfile sample_axis_profile(Rng& rng, int max_vertices) {
    const GeneratingFunction f = sample_profile(rng, max_vertices);
    std::vector<Point2> pts;
    for (auto it = f.breakpoints().rbegin(); it != f.breakpoints().rend(); ++it) {
        pts.push_back({1.0 - it->x, it->y});
    }
    for (const auto& bp : f.breakpoints()) {
        if (bp.x > 0.0) {
            pts.push_back({1.0 + bp.x, bp.y});
        }
    }
    return AxisProfile(std::move(pts));
}

SweepRow make_row(int id, const SweepConfig& cfg, UnconditionalPolygon* argmin_out) {
    Rng rng(mix_seed(cfg.seed, static_cast<uint64_t>(id)));
    SweepRow row;
    row.id = id;
    switch (cfg.mode) {
        case SweepMode::Revolution: {
            const int n = 3 + static_cast<int>(rng.below(
                                  static_cast<uint32_t>(std::max(1, cfg.max_vertices - 2))));
            const UnconditionalPolygon p = sample_polygon(rng, n);
            row.digest = chain_digest(p);
            const MahlerReport rep = mahler_product({polygon_profile(p)});
            row.product = rep.product;
            row.slack = rep.slack;
            const ReductionCertificate cert = reduce_to_terminal(p);
            row.terminal = verify_certificate(cert)
                               ? (cert.terminal == TerminalShape::Cylinder ? "cylinder" : "bicone")
                               : "invalid";
            if (argmin_out) {
                *argmin_out = p;
            }
            break;
        }
        case SweepMode::ParallelSections: {
            const int nc = 3 + static_cast<int>(rng.below(
                                   static_cast<uint32_t>(std::max(1, cfg.max_vertices - 2))));
            const UnconditionalPolygon section = sample_polygon(rng, nc);
            const GeneratingFunction f = sample_profile(rng, cfg.max_vertices);
            row.digest = chain_digest(section);
            const MahlerReport rep = mahler_product_psh({f, section});
            row.product = rep.product;
            row.slack = rep.slack;
            if (argmin_out) {
                *argmin_out = section;
            }
            break;
        }
        case SweepMode::SantaloCone: {
            SantaloSearchResult res =
                id == 0 ? santalo_axis_search(AxisProfile({{0.0, 1.0}, {1.0, 0.0}}))
                        : santalo_axis_search(sample_axis_profile(rng, cfg.max_vertices));
            row.digest = id == 0 ? 0 : rng.next();
            row.product = res.best_product;
            row.slack = res.best_product - kMinProductCone;
            break;
        }
        case SweepMode::LemmaGrid:
            break;  // handled by the caller
    }
    return row;
}

}  // namespace

uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

UnconditionalPolygon sample_polygon(Rng& rng, int n_vertices) {
    if (n_vertices < 2) {
        throw std::invalid_argument("sample_polygon: need at least two vertices");
    }
    std::vector<Point2> pts{{-1.0, 0.0}, {0.0, 1.0}};
    for (int i = 0; i + 2 < n_vertices; ++i) {
        for (;;) {
            const double x = rng.uniform(-1.0, 0.0);
            const double y = rng.uniform(0.0, 1.0);
            if (y > x + 1.0 && x < 0.0 && y > 0.0) {
                pts.push_back({x, y});
                break;
            }
        }
    }
    return UnconditionalPolygon(pts);
}

uint64_t chain_digest(const UnconditionalPolygon& p) {
    uint64_t hash = 0xcbf29ce484222325ULL;
    auto feed = [&hash](const std::string& s) {
        for (const unsigned char ch : s) {
            hash ^= ch;
            hash *= 0x100000001b3ULL;
        }
    };
    for (const auto& q : p.chain()) {
        feed(format_double(q.x));
        feed(",");
        feed(format_double(q.y));
        feed(";");
    }
    return hash;
}

SweepMode sweep_mode_from_name(const std::string& name) {
    if (name == "revolution") {
        return SweepMode::Revolution;
    }
    if (name == "psh") {
        return SweepMode::ParallelSections;
    }
    if (name == "santalo-cone") {
        return SweepMode::SantaloCone;
    }
    if (name == "lemma-grid") {
        return SweepMode::LemmaGrid;
    }
    throw std::invalid_argument("unknown sweep mode: " + name);
}

std::string sweep_mode_name(SweepMode mode) {
    switch (mode) {
        case SweepMode::Revolution:
            return "revolution";
        case SweepMode::ParallelSections:
            return "psh";
        case SweepMode::SantaloCone:
            return "santalo-cone";
        case SweepMode::LemmaGrid:
            return "lemma-grid";
    }
    return "?";
}

SweepSummary run_sweep(const SweepConfig& cfg) {
    if (cfg.samples <= 0) {
        throw std::invalid_argument("run_sweep: samples must be positive");
    }
    if (cfg.max_vertices < 3 || cfg.max_vertices > 32) {
        throw std::invalid_argument("run_sweep: maxVertices must lie in [3, 32]");
    }
    SweepSummary summary;
    std::vector<SweepRow> rows;
    std::vector<UnconditionalPolygon> chains;

    if (cfg.mode == SweepMode::LemmaGrid) {
        summary.bound = 0.0;
        const slide::SignClaimReport report = slide::verify_sign_claims(cfg.grid, cfg.tolerance);
        int id = 0;
        for (const auto& claim : report.claims) {
            SweepRow row;
            row.id = id++;
            row.digest = 0;
            row.product = claim.max_violation;
            row.slack = claim.max_violation;
            row.terminal = claim.name;
            rows.push_back(row);
            summary.violations += claim.violations;
        }
    } else {
        summary.bound = cfg.mode == SweepMode::Revolution ? kMinProductRevolution
                        : cfg.mode == SweepMode::ParallelSections ? kMinProductParallelSections
                                                                  : kMinProductCone;
        rows.resize(cfg.samples);
        chains.resize(cfg.samples, UnconditionalPolygon::diamond());
        const int jobs = std::max(1, cfg.jobs);
        auto worker = [&](int first, int stride) {
            for (int i = first; i < cfg.samples; i += stride) {
                rows[i] = make_row(i, cfg, &chains[i]);
            }
        };
        if (jobs == 1) {
            worker(0, 1);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (int j = 0; j < jobs; ++j) {
                pool.emplace_back(worker, j, jobs);
            }
            for (auto& th : pool) {
                th.join();
            }
        }
        for (int i = 0; i < cfg.samples; ++i) {
            if (rows[i].slack < -cfg.tolerance || rows[i].terminal == "invalid") {
                ++summary.violations;
            }
        }
    }

    summary.min_product = rows.empty() ? 0.0 : rows.front().product;
    size_t argmin = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].product < summary.min_product) {
            summary.min_product = rows[i].product;
            argmin = i;
        }
    }
    if (!chains.empty()) {
        summary.argmin_chain = chains[argmin].chain();
    }

    std::ostringstream csv;
    csv << "# sweep v1 mode=" << sweep_mode_name(cfg.mode) << " seed=" << cfg.seed
        << " samples=" << cfg.samples << " maxVertices=" << cfg.max_vertices << "\n";
    csv << "id,chainDigest,product,slack,terminal\n";
    for (const auto& row : rows) {
        char digest[24];
        std::snprintf(digest, sizeof(digest), "%016" PRIx64, row.digest);
        csv << row.id << ',' << digest << ',' << format_double(row.product) << ','
            << format_double(row.slack) << ',' << row.terminal << "\n";
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        throw IoError("run_sweep: cannot open output path " + cfg.out_path);
    }
    out << csv.str();
    if (!out) {
        throw IoError("run_sweep: write failed for " + cfg.out_path);
    }
    return summary;
}

GoldenReport golden_check() {
    GoldenReport report;
    auto add = [&report](const std::string& name, double value, double expected, double tol) {
        GoldenItem item{name, value, expected, std::abs(value - expected), tol, false};
        item.pass = item.abs_error <= tol;
        report.items.push_back(item);
        report.all_pass = report.all_pass && item.pass;
    };

    add("cylinder", mahler_product({flat_profile(1.0, 1.0)}).product, kMinProductRevolution,
        1e-9);
    add("bicone", mahler_product({cone_profile_even()}).product, kMinProductRevolution, 1e-9);
    add("ball",
        mahler_product({GeneratingFunction::analytic(
                           1.0, [](double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); },
                           "unit-disk")})
            .product,
        16.0 * kPi * kPi / 9.0, 1e-6);
    add("cone-santalo", santalo_axis_search(AxisProfile({{0.0, 1.0}, {1.0, 0.0}})).best_product,
        kMinProductCone, 1e-4);
    add("cube",
        mahler_product_psh({flat_profile(1.0, 1.0), UnconditionalPolygon::square()}).product,
        kMinProductParallelSections, 1e-9);
    add("octahedron",
        mahler_product_psh({cone_profile_even(), UnconditionalPolygon::diamond()}).product,
        kMinProductParallelSections, 1e-9);
    add("functional-constant", functional_product(flat_profile(1.0, 1.0)), 4.0 / 3.0, 1e-12);
    add("functional-constant-scaled", functional_product(flat_profile(0.7, 2.5)), 4.0 / 3.0,
        1e-12);
    add("functional-cone", functional_product(cone_profile_even()), 4.0 / 3.0, 1e-12);
    return report;
}

}  // namespace revo
