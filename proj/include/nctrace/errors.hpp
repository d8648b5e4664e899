#ifndef NCTRACE_ERRORS_HPP
#define NCTRACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nctrace {

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration/ground-set size out of the documented bounds, or mismatched n.
struct SizeError : Error {
  using Error::Error;
};

/// Matrix dimension mismatch, d0 inconsistency, or N not divisible by d0.
struct DimensionError : Error {
  using Error::Error;
};

/// Index-contraction failure: parity condition violated or no trace structure.
struct ContractError : Error {
  using Error::Error;
};

/// Mixed ensembles in one expression, or cumulant kind not matching the ensemble.
struct EnsembleError : Error {
  using Error::Error;
};

/// Fock truncation depth too small for an exact result.
struct ExactnessError : Error {
  using Error::Error;
};

/// Query parameter outside the supported bounds (r, letter count, dimension).
struct BoundError : Error {
  using Error::Error;
};

/// Input violates the hypotheses of the checked statement.
struct HypothesisError : Error {
  using Error::Error;
};

/// Experiment file is syntactically malformed; carries the source location.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(int l, int c, const std::string& msg)
      : Error("line " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
        line(l),
        column(c) {}
};

/// Experiment file is well-formed but semantically invalid (unresolved name,
/// non-Hermitian Gram, ...).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace nctrace

#endif  // NCTRACE_ERRORS_HPP
