#pragma once

#include <stdexcept>
#include <string>

namespace retrace {

/// Base class for all retrace runtime errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Property evaluated against a valuation that is missing a referenced
/// field, or with mismatched operand kinds. Signals a validation bug
/// upstream, not bad user input.
struct EvalError : Error {
  using Error::Error;
};

/// Engine misuse: illegal psi choice, config not in the explored graph.
struct EngineError : Error {
  using Error::Error;
};

/// Journal storage failure or refusal to write to a bad journal.
struct JournalError : Error {
  using Error::Error;
};

/// Unreadable storage, distinct from integrity failures.
struct IoError : Error {
  using Error::Error;
};

/// Journal record incompatible with the model schema during ingestion.
struct IngestError : Error {
  using Error::Error;
};

/// Illegal fault injection or a dead-end state hit mid-walk.
struct SimulationError : Error {
  using Error::Error;
};

}  // namespace retrace
