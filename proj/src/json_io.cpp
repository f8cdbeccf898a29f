#include "revo/json_io.hpp"

#include <cmath>
#include <fstream>

namespace revo {
namespace {

double require_number(const Json& j, const std::string& where) {
    if (!j.is_number()) {
        throw IoError(where + ": expected a number");
    }
    return j.get<double>();
}

std::vector<Point2> read_point_list(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        throw IoError(where + ": expected a non-empty array of [x, y] pairs");
    }
    std::vector<Point2> pts;
    pts.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        const Json& entry = j[i];
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!entry.is_array() || entry.size() != 2) {
            throw IoError(at + ": expected [x, y]");
        }
        pts.push_back({require_number(entry[0], at + "[0]"), require_number(entry[1], at + "[1]")});
    }
    return pts;
}

Json point_list_to_json(const std::vector<Point2>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) {
        arr.push_back(Json::array({p.x, p.y}));
    }
    return arr;
}

}  // namespace

UnconditionalPolygon read_polygon(const Json& j, const std::string& where) {
    if (!j.contains("chain")) {
        throw IoError(where + ": missing field \"chain\"");
    }
    const std::vector<Point2> pts = read_point_list(j["chain"], where + ".chain");
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (cross(pts[i], pts[i + 1]) >= 0.0) {
            throw IoError(where + ".chain[" + std::to_string(i + 1) +
                          "]: vertices must be in strictly increasing slope order");
        }
    }
    UnconditionalPolygon p = [&] {
        try {
            return UnconditionalPolygon(pts);
        } catch (const std::exception& e) {
            throw IoError(where + ".chain: " + e.what());
        }
    }();
    for (size_t i = 0; i < pts.size(); ++i) {
        double nearest = 1e300;
        for (const auto& v : p.chain()) {
            nearest = std::min(nearest, norm(Point2{pts[i].x - v.x, pts[i].y - v.y}));
        }
        if (nearest > 1e-9) {
            throw IoError(where + ".chain[" + std::to_string(i) +
                          "]: vertex is not extreme in the reflected hull");
        }
    }
    return p;
}

GeneratingFunction read_generating_function(const Json& j, const std::string& where) {
    if (!j.contains("a")) {
        throw IoError(where + ": missing field \"a\"");
    }
    const double a = require_number(j["a"], where + ".a");
    if (j.contains("analytic")) {
        if (!j["analytic"].is_string()) {
            throw IoError(where + ".analytic: expected a profile name");
        }
        const std::string name = j["analytic"].get<std::string>();
        GeneratingFunction f = [&] {
            if (name == "unit-disk") {
                return GeneratingFunction::analytic(
                    a, [a](double x) { return std::sqrt(std::max(0.0, 1.0 - sq(x / a))) ; },
                    name);
            }
            throw IoError(where + ".analytic: unknown profile \"" + name + "\"");
        }();
        try {
            check_profile(f);
        } catch (const std::exception& e) {
            throw IoError(where + ".analytic: " + e.what());
        }
        return f;
    }
    if (!j.contains("breakpoints")) {
        throw IoError(where + ": need \"breakpoints\" or \"analytic\"");
    }
    const std::vector<Point2> bps = read_point_list(j["breakpoints"], where + ".breakpoints");
    try {
        return GeneratingFunction::piecewise(a, bps);
    } catch (const std::exception& e) {
        throw IoError(where + ".breakpoints: " + e.what());
    }
}

ParallelSectionsBody read_psh_body(const Json& j, const std::string& where) {
    if (!j.contains("crossSection") || !j.contains("generator")) {
        throw IoError(where + ": need fields \"crossSection\" and \"generator\"");
    }
    return {read_generating_function(j["generator"], where + ".generator"),
            read_polygon(j["crossSection"], where + ".crossSection")};
}

AxisProfile read_axis_profile(const Json& j, const std::string& where) {
    if (!j.contains("h") || !j.contains("breakpoints")) {
        throw IoError(where + ": need fields \"h\" and \"breakpoints\"");
    }
    const double h = require_number(j["h"], where + ".h");
    std::vector<Point2> pts = read_point_list(j["breakpoints"], where + ".breakpoints");
    if (std::abs(pts.back().x - h) > 1e-9 * std::max(1.0, h)) {
        throw IoError(where + ".breakpoints: last abscissa must equal h");
    }
    pts.back().x = h;
    try {
        return AxisProfile(std::move(pts));
    } catch (const std::exception& e) {
        throw IoError(where + ".breakpoints: " + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path);
    }
    out << j.dump(2) << "\n";
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

Json polygon_to_json(const UnconditionalPolygon& p) {
    return Json{{"chain", point_list_to_json(p.chain())}};
}

Json generating_function_to_json(const GeneratingFunction& f) {
    if (f.is_piecewise()) {
        return Json{{"a", f.half_width()}, {"breakpoints", point_list_to_json(f.breakpoints())}};
    }
    if (!f.name().empty()) {
        return Json{{"a", f.half_width()}, {"analytic", f.name()}};
    }
    // Derived analytic profile: emit a dense sampling.
    Json samples = Json::array();
    constexpr int kSamples = 256;
    for (int i = 0; i <= kSamples; ++i) {
        const double x = f.half_width() * i / kSamples;
        samples.push_back(Json::array({x, f(x)}));
    }
    return Json{{"a", f.half_width()}, {"samples", samples}};
}

Json mahler_report_to_json(const MahlerReport& report) {
    return Json{{"primalVolume", report.primal_volume},
                {"polarVolume", report.polar_volume},
                {"product", report.product},
                {"bound", report.bound},
                {"slack", report.slack}};
}

Json santalo_result_to_json(const SantaloSearchResult& result) {
    return Json{{"bestShift", result.best_shift},
                {"bestProduct", result.best_product},
                {"apexRatio", result.apex_ratio},
                {"bound", kMinProductCone},
                {"slack", result.best_product - kMinProductCone}};
}

Json slice_report_to_json(const SliceDualityReport& report) {
    Json per = Json::array();
    for (const auto& d : report.per_direction) {
        per.push_back(Json{{"u", Json::array({d.u.x, d.u.y, d.u.z})},
                           {"maxDeviation", d.max_deviation}});
    }
    return Json{{"maxDeviation", report.max_deviation}, {"perDirection", per}};
}

Json sign_claim_report_to_json(const slide::SignClaimReport& report) {
    Json claims = Json::array();
    for (const auto& c : report.claims) {
        claims.push_back(Json{{"claim", c.name},
                              {"gridSize", c.nodes},
                              {"violations", c.violations},
                              {"maxViolation", c.max_violation},
                              {"argmax", Json::array({c.arg_x, c.arg_y})}});
    }
    return Json{{"grid", report.grid},
                {"totalViolations", report.total_violations()},
                {"claims", claims}};
}

Json certificate_to_json(const UnconditionalPolygon& input, const ReductionCertificate& cert) {
    Json steps = Json::array();
    for (const auto& s : cert.steps) {
        const char* kind = s.kind == StepKind::DropVertex ? "drop-vertex"
                           : s.kind == StepKind::SlideToC ? "slide"
                                                          : "polar-swap";
        Json step{{"kind", kind},
                  {"chainBefore", point_list_to_json(s.before.chain())},
                  {"chainAfter", point_list_to_json(s.after.chain())},
                  {"productBefore", s.product_before},
                  {"productAfter", s.product_after}};
        if (s.slide_clamped) {
            step["slideClamped"] = true;
        }
        steps.push_back(step);
    }
    return Json{{"initialChain", point_list_to_json(input.chain())},
                {"steps", steps},
                {"terminal", cert.terminal == TerminalShape::Cylinder ? "cylinder" : "bicone"},
                {"minProduct", cert.min_product},
                {"bound", kMinProductRevolution}};
}

Json sweep_summary_to_json(const SweepConfig& cfg, const SweepSummary& summary) {
    return Json{{"mode", sweep_mode_name(cfg.mode)},
                {"seed", cfg.seed},
                {"samples", cfg.samples},
                {"bound", summary.bound},
                {"minProduct", summary.min_product},
                {"argmin", Json{{"chain", point_list_to_json(summary.argmin_chain)}}},
                {"violations", summary.violations}};
}

Json golden_report_to_json(const GoldenReport& report) {
    Json items = Json::array();
    for (const auto& item : report.items) {
        items.push_back(Json{{"name", item.name},
                             {"value", item.value},
                             {"expected", item.expected},
                             {"absError", item.abs_error},
                             {"tolerance", item.tolerance},
                             {"pass", item.pass}});
    }
    return Json{{"items", items}, {"allPass", report.all_pass}};
}

}  // namespace revo
