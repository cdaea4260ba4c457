#pragma once

#include <stdexcept>
#include <string>

namespace dist2 {

/// Unknown vertex id passed to a graph query.
struct UnknownVertex : std::invalid_argument {
    explicit UnknownVertex(int v)
        : std::invalid_argument("unknown vertex id " + std::to_string(v)) {}
};

/// Attempt to build a non-simple graph (self loop or duplicate edge).
struct NotSimple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A structural guarantee that should be unreachable for valid input failed.
/// Firing one of these means the input violated a precondition or there is a bug.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Caller broke a documented precondition.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// A counting claim checked during an extension step did not hold.
/// The coloring engine catches these, falls back to exact search for the
/// current subgraph, and records a diagnostic event.
struct ProofAssertion : std::runtime_error {
    ProofAssertion(std::string step_label, std::string detail)
        : std::runtime_error(step_label + ": " + detail),
          step(std::move(step_label)),
          what_failed(std::move(detail)) {}
    std::string step;
    std::string what_failed;
};

/// Input graph is not planar (top level rejection, not a fault).
struct NonPlanarInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input graph has a vertex of degree greater than three.
struct DegreeViolation : std::runtime_error {
    DegreeViolation(int v, int deg)
        : std::runtime_error("vertex " + std::to_string(v) + " has degree " +
                             std::to_string(deg)),
          vertex(v) {}
    int vertex;
};

/// Exact search invoked on a graph above the configured size bound.
struct SizeBoundExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace dist2
