#pragma once

#include <vector>

#include "retrace/case_spec.hpp"
#include "retrace/diagnostics.hpp"

namespace retrace::dsl {

/// Checks every CaseSpec invariant: unique names per namespace, resolvable
/// references, state valuations matching the schema, transition endpoints
/// declared, property expressions well-typed against at least one declared
/// model (skipped when the case declares none), windows and weights in
/// range, timestamps non-decreasing where fully present, and well-formed
/// settings.
///
/// Errors mean the invariants do not hold. Warnings flag suspicious but
/// legal content: evidence referencing zero sequences, all-wildcard
/// theories, and zero-weight observations.
std::vector<Diagnostic> validate(const CaseSpec& spec);

}  // namespace retrace::dsl
