#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retrace/evidence.hpp"
#include "retrace/system_model.hpp"

namespace retrace {

struct Setting {
  std::string key;  // dotted identifiers allowed, e.g. sensor.s1.weight
  Literal value;
  SourceLoc loc{};
};

/// A parsed case file: models, sequences (stories and theories),
/// evidential statements, and case-level settings.
struct CaseSpec {
  std::vector<SystemModel> models;
  std::vector<ObservationSequence> sequences;
  std::vector<EvidentialStatement> evidence;
  std::vector<Setting> settings;  // declaration order, unique keys

  const SystemModel* find_model(std::string_view name) const;
  const ObservationSequence* find_sequence(std::string_view name) const;
  const EvidentialStatement* find_evidence(std::string_view name) const;
  std::optional<Literal> setting(std::string_view key) const;
};

/// Structural equality ignoring source locations. Evidence member sets and
/// settings compare as sets; everything else in declaration order.
bool case_equal(const CaseSpec& a, const CaseSpec& b);

}  // namespace retrace
