#pragma once

#include <optional>
#include <string>
#include <vector>

#include "retrace/property.hpp"

namespace retrace::dsl {

enum class Severity { Error, Warning };

enum class DiagCode {
  LexError,
  SyntaxError,
  NameError,    // unresolved or duplicate names
  TypeError,    // operand kinds mismatch in a property or valuation
  RangeError,   // out-of-range numeric field (weights, windows, timestamps)
  SettingError, // malformed case-level setting
  EmptyEvidenceWarning,
  AllWildcardWarning,
  ZeroWeightWarning,
};

const char* diag_code_text(DiagCode code);

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::SyntaxError;
  std::string message;
  SourceLoc loc{};
  std::optional<std::string> hint;
};

/// "3:14: error: unknown state 'C' [name]" (plus "; hint" when present).
std::string format_diagnostic(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace retrace::dsl
