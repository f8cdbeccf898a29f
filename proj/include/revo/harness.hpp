#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "revo/geom2d.hpp"
#include "revo/mahler.hpp"

namespace revo {

// Seeded generator with portable output: doubles come from the raw mt19937_64
// stream (53 high bits), never from std distributions, so identical seeds
// give identical samples on every platform.
struct Rng {
    explicit Rng(uint64_t seed) : engine(seed) {}

    uint64_t next() { return engine(); }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }

    std::mt19937_64 engine;
};

// splitmix64 of (seed, index); used to give each sweep sample its own stream.
uint64_t mix_seed(uint64_t seed, uint64_t index);

// Normalized chain through (-1, 0) and (0, 1) with up to n_vertices - 2 extra
// vertices sampled in the open triangle above the diamond edge; the hull may
// absorb some of them. n_vertices = 2 always yields the diamond.
UnconditionalPolygon sample_polygon(Rng& rng, int n_vertices);

// FNV-1a over the canonical chain serialization.
uint64_t chain_digest(const UnconditionalPolygon& p);

enum class SweepMode {
    Revolution,
    ParallelSections,
    SantaloCone,
    LemmaGrid,
};

SweepMode sweep_mode_from_name(const std::string& name);
std::string sweep_mode_name(SweepMode mode);

struct SweepConfig {
    uint64_t seed = 0;
    int samples = 0;
    int max_vertices = 12;
    SweepMode mode = SweepMode::Revolution;
    std::string out_path;
    int jobs = 1;
    double tolerance = 1e-9;
    int grid = 100;  // LemmaGrid mode only
};

struct SweepRow {
    int id = 0;
    uint64_t digest = 0;
    double product = 0.0;
    double slack = 0.0;
    std::string terminal;
};

struct SweepSummary {
    double min_product = 0.0;
    std::vector<Point2> argmin_chain;
    long violations = 0;
    double bound = 0.0;
};

// Evaluates every sample, writes the CSV to cfg.out_path (byte-identical for
// identical configs) and returns the summary. Rows land in sample order no
// matter how many worker threads run.
SweepSummary run_sweep(const SweepConfig& cfg);

struct GoldenItem {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct GoldenReport {
    std::vector<GoldenItem> items;
    bool all_pass = true;
};

// The closed-form landmark products: cylinder, bicone, ball, optimal cone,
// cube, octahedron, and the two functional equality cases.
GoldenReport golden_check();

}  // namespace revo
