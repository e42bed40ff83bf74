#pragma once

#include <string>

#include "retrace/case_spec.hpp"

namespace retrace::dsl {

/// Canonical text form of a property expression.
std::string render_property(const PropertyExpr& expr);

/// Canonical text form of one observation: `$` for the wildcard, otherwise
/// `(P, min, max[, w[, t]])` with INF for an unbounded max and w omitted
/// when it is 1 and no timestamp follows.
std::string render_observation(const Observation& o);

std::string render_model(const SystemModel& m);
std::string render_sequence(const ObservationSequence& os);

/// Canonical case text. parse_case(render_case(s)) is structurally equal
/// to s for any spec that came out of parse_case.
std::string render_case(const CaseSpec& spec);

}  // namespace retrace::dsl
