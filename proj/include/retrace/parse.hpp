#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "retrace/case_spec.hpp"
#include "retrace/diagnostics.hpp"

namespace retrace::dsl {

/// Result of parse_case: either a validated CaseSpec or error diagnostics,
/// never both.
struct ParseResult {
  std::optional<CaseSpec> spec;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return spec.has_value(); }
};

/// Parses and semantically checks a case file. On success the CaseSpec
/// satisfies every invariant validate() checks; on failure at least one
/// error diagnostic carries a location in the input.
ParseResult parse_case(std::string_view text);

}  // namespace retrace::dsl
