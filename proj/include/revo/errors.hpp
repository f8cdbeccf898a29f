#pragma once

#include <stdexcept>
#include <string>

namespace revo {

// Base class for every failure the library reports deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chain hull has empty interior (zero x- or y-extent).
struct DegeneratePolygon : Error {
    using Error::Error;
};

// Profile vanishes strictly inside its domain, conjugate undefined there.
struct ZeroProfile : Error {
    using Error::Error;
};

// Frustum interval with x1 <= x0.
struct InvalidInterval : Error {
    using Error::Error;
};

// Operation requires a piecewise-linear generator.
struct AnalyticUnsupported : Error {
    using Error::Error;
};

// Parameter point outside the admissible (x0, y0, t, k) set.
struct OutOfRegion : Error {
    using Error::Error;
};

// (x0, y0) outside the closed parameter triangle.
struct OutsideTriangle : Error {
    using Error::Error;
};

// Chain does not have the shape a reduction step needs.
struct NotReducible : Error {
    using Error::Error;
};

// Reduction exceeded its step budget; indicates an invariant bug.
struct NonTerminating : Error {
    using Error::Error;
};

// No axis shift places the origin strictly inside the body.
struct NoInteriorBracket : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace revo
