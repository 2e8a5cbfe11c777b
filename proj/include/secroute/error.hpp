#pragma once

#include <stdexcept>
#include <string>

namespace secroute {

// Base class for every error raised by this library. Callers that do not
// care about the precise failure can catch this one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// stage_solve: the equalizer denominator is numerically zero.
struct DegenerateDenominator : Error {
  using Error::Error;
};

// stage_solve: no interior mixed equilibrium and no pure saddle was found.
struct PureSaddle : Error {
  using Error::Error;
};

// forward_payoff: defender and attacker policy sequences differ in length.
struct LengthMismatch : Error {
  using Error::Error;
};

// analytic_value: no sign change on the root bracket.
struct NoBracket : Error {
  using Error::Error;
};

// approximation_error: reference value is zero.
struct DivisionByZero : Error {
  using Error::Error;
};

// generate_sparse_graph: degree range not achievable within the retry budget.
struct InfeasibleDegree : Error {
  using Error::Error;
};

// Graph file could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

// A domain invariant does not hold (bad ids, self-loops, bad stage counts,
// invalid parameter ranges).
struct InvariantViolation : Error {
  using Error::Error;
};

// No route between the requested vertices.
struct NoPath : Error {
  using Error::Error;
};

// Simple-path enumeration exceeded the configured cap.
struct PathExplosion : Error {
  using Error::Error;
};

// Matrix-game solve failed to produce a certified equilibrium.
struct SolverFailure : Error {
  using Error::Error;
};

}  // namespace secroute
