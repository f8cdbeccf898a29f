#pragma once

#include <vector>

#include "revo/geom2d.hpp"

namespace revo {

enum class StepKind {
    DropVertex,  // remove the top vertex (-t, 1)
    SlideToC,    // slide it left to the extension of the next edge
    PolarSwap,   // replace the chain by its polar (product-preserving)
};

enum class TerminalShape {
    Cylinder,  // square chain
    Bicone,    // diamond chain
};

struct ReductionStep {
    StepKind kind;
    UnconditionalPolygon before;
    UnconditionalPolygon after;
    double product_before = 0.0;
    double product_after = 0.0;
    bool slide_clamped = false;  // slide target forced back into [-1, 0]
};

struct ReductionCertificate {
    std::vector<ReductionStep> steps;
    TerminalShape terminal = TerminalShape::Cylinder;
    double min_product = 0.0;
};

struct ReduceCandidates {
    UnconditionalPolygon drop;
    UnconditionalPolygon slide;
    ReductionStep chosen;
};

// Mahler product of the body of revolution generated by the chain.
double chain_product(const UnconditionalPolygon& p);

bool is_square_chain(const UnconditionalPolygon& p, double tol = 1e-9);
bool is_diamond_chain(const UnconditionalPolygon& p, double tol = 1e-9);

// Requires a top vertex strictly inside the top edge. Builds both candidate
// chains (drop the top vertex; slide it to where the next edge's extension
// meets y = 1), computes both products and returns the smaller one as the
// chosen step. Ties prefer the drop, which removes a vertex outright.
ReduceCandidates reduce_once(const UnconditionalPolygon& p);

// Repeats reduce_once until the chain is the square or the diamond, inserting
// a product-preserving polar swap whenever no vertex lies on the open top
// edge. The input is normalized first. Step budget 2n + 4.
ReductionCertificate reduce_to_terminal(const UnconditionalPolygon& p);

// Recomputes every product from the stored chains and rechecks step chaining,
// monotonicity, the terminal shape and the lower bound.
bool verify_certificate(const ReductionCertificate& cert);

}  // namespace revo
