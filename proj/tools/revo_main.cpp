#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "revo/json_io.hpp"

namespace {

using revo::Json;

Json load_input(const std::string& path) {
    if (path.empty()) {
        throw revo::IoError("missing --in file");
    }
    return revo::load_json_file(path);
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        revo::write_json_file(out_path, j);
    }
}

revo::BodyOfRevolution body_from_json(const Json& j, const std::string& where) {
    return {revo::read_generating_function(j, where)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mahler volumes of origin-symmetric bodies of revolution"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    uint64_t seed = 0;
    int samples = 1000;
    int grid = 100;
    int jobs = 1;
    int max_vertices = 12;
    double tolerance = 1e-9;
    std::string mode = "revolution";

    auto* volume_cmd = app.add_subcommand("volume", "volume of a body of revolution");
    volume_cmd->add_option("--in", in_path)->required();
    volume_cmd->add_option("--out", out_path);

    auto* polar_cmd = app.add_subcommand("polar", "polar dual of a polygon or body");
    polar_cmd->add_option("--in", in_path)->required();
    polar_cmd->add_option("--out", out_path);

    auto* conj_cmd = app.add_subcommand("conjugate", "conjugate of a generating function");
    conj_cmd->add_option("--in", in_path)->required();
    conj_cmd->add_option("--out", out_path);

    auto* mahler_cmd = app.add_subcommand("mahler", "Mahler product of a body of revolution");
    mahler_cmd->add_option("--in", in_path)->required();
    mahler_cmd->add_option("--out", out_path);

    auto* psh_cmd = app.add_subcommand("psh", "Mahler product of a parallel sections body");
    psh_cmd->add_option("--in", in_path)->required();
    psh_cmd->add_option("--out", out_path);

    auto* cone_cmd = app.add_subcommand(
        "santalo-cone", "axis-constrained Santalo search (default: the unit cone)");
    cone_cmd->add_option("--in", in_path);
    cone_cmd->add_option("--out", out_path);

    auto* lemma_cmd = app.add_subcommand("verify-lemma", "endpoint sign claims on region grids");
    lemma_cmd->add_option("--grid", grid);
    lemma_cmd->add_option("--tolerance", tolerance);
    lemma_cmd->add_option("--out", out_path);

    auto* reduce_cmd = app.add_subcommand("reduce", "reduction certificate for a polygon");
    reduce_cmd->add_option("--in", in_path)->required();
    reduce_cmd->add_option("--out", out_path);

    auto* sweep_cmd = app.add_subcommand("sweep", "randomized lower-bound sweep, CSV output");
    sweep_cmd->add_option("--out", out_path)->required();
    sweep_cmd->add_option("--seed", seed);
    sweep_cmd->add_option("--samples", samples);
    sweep_cmd->add_option("--mode", mode)
        ->check(CLI::IsMember({"revolution", "psh", "santalo-cone", "lemma-grid"}));
    sweep_cmd->add_option("--jobs", jobs);
    sweep_cmd->add_option("--grid", grid);
    sweep_cmd->add_option("--max-vertices", max_vertices);
    sweep_cmd->add_option("--tolerance", tolerance);

    auto* golden_cmd = app.add_subcommand("golden", "landmark product constants");
    golden_cmd->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (volume_cmd->parsed()) {
            const auto body = body_from_json(load_input(in_path), in_path);
            emit(Json{{"volume", revo::volume(body)}}, out_path);
        } else if (polar_cmd->parsed()) {
            const Json j = load_input(in_path);
            if (j.contains("chain")) {
                emit(revo::polygon_to_json(revo::polar_polygon(revo::read_polygon(j, in_path))),
                     out_path);
            } else {
                const auto body = body_from_json(j, in_path);
                emit(revo::generating_function_to_json(revo::polar_body(body).generator),
                     out_path);
            }
        } else if (conj_cmd->parsed()) {
            const auto f = revo::read_generating_function(load_input(in_path), in_path);
            emit(revo::generating_function_to_json(revo::conjugate(f)), out_path);
        } else if (mahler_cmd->parsed()) {
            const auto body = body_from_json(load_input(in_path), in_path);
            emit(revo::mahler_report_to_json(revo::mahler_product(body)), out_path);
        } else if (psh_cmd->parsed()) {
            const auto body = revo::read_psh_body(load_input(in_path), in_path);
            emit(revo::mahler_report_to_json(revo::mahler_product_psh(body)), out_path);
        } else if (cone_cmd->parsed()) {
            const revo::AxisProfile profile =
                in_path.empty() ? revo::AxisProfile({{0.0, 1.0}, {1.0, 0.0}})
                                : revo::read_axis_profile(load_input(in_path), in_path);
            emit(revo::santalo_result_to_json(revo::santalo_axis_search(profile)), out_path);
        } else if (lemma_cmd->parsed()) {
            const auto report = revo::slide::verify_sign_claims(grid, tolerance);
            emit(revo::sign_claim_report_to_json(report), out_path);
            return report.total_violations() == 0 ? 0 : 1;
        } else if (reduce_cmd->parsed()) {
            const auto polygon = revo::read_polygon(load_input(in_path), in_path);
            const auto cert = revo::reduce_to_terminal(polygon);
            emit(revo::certificate_to_json(polygon, cert), out_path);
            return revo::verify_certificate(cert) ? 0 : 1;
        } else if (sweep_cmd->parsed()) {
            revo::SweepConfig cfg;
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.max_vertices = max_vertices;
            cfg.mode = revo::sweep_mode_from_name(mode);
            cfg.out_path = out_path;
            cfg.jobs = jobs;
            cfg.tolerance = tolerance;
            cfg.grid = grid;
            const auto summary = revo::run_sweep(cfg);
            std::cout << revo::sweep_summary_to_json(cfg, summary).dump(2) << "\n";
            return summary.violations == 0 ? 0 : 1;
        } else if (golden_cmd->parsed()) {
            const auto report = revo::golden_check();
            emit(revo::golden_report_to_json(report), out_path);
            return report.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
