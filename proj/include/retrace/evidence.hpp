#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "retrace/property.hpp"

namespace retrace {

/// An observation: property P held for between min and min+max consecutive
/// run points, with credibility w. max absent means unbounded. t is a
/// timestamp carried for reporting only; it never constrains matching.
struct Observation {
  PropertyPtr property;
  std::optional<std::int64_t> timestamp;  // microseconds
  std::uint32_t min = 0;
  std::optional<std::uint32_t> max;  // additional points; nullopt = INF
  double weight = 1.0;
  SourceLoc loc{};
};

/// Validating constructor. Throws std::invalid_argument naming the
/// offending field for w outside [0,1], negative min, or negative finite
/// max.
Observation make_observation(PropertyPtr property, std::optional<std::int64_t> t,
                             std::int64_t min, std::optional<std::int64_t> max,
                             double weight);

/// The wildcard `$` = (true, 0, INF, 1.0): matches any segment, any length.
Observation wildcard();
bool is_wildcard(const Observation& o);

/// True iff a block of k points is admissible for this observation.
bool admits_length(const Observation& o, std::size_t k);

enum class SequenceKind { Story, Theory };

/// A chronologically ordered list of observations: a sensor story or an
/// investigator theory. Order is significant.
struct ObservationSequence {
  std::string name;
  SequenceKind kind = SequenceKind::Story;
  std::vector<Observation> observations;
  SourceLoc loc{};
};

/// Unordered collection of observation sequence names: the full case
/// context. Names are kept sorted and unique.
struct EvidentialStatement {
  std::string name;
  std::vector<std::string> sequences;
  SourceLoc loc{};
};

/// True iff `points` splits into one consecutive block per observation,
/// blocks covering all points in order, block i of admissible length with
/// observation i's property true at every point of it. Total function.
bool matches_sequence(const ObservationSequence& os, std::span<const Point> points);

/// The partition behind a positive match: block lengths per observation,
/// lexicographically smallest. nullopt iff matches_sequence is false.
std::optional<std::vector<std::size_t>> find_partition(const ObservationSequence& os,
                                                       std::span<const Point> points);

bool observation_equal(const Observation& a, const Observation& b);
bool sequence_equal(const ObservationSequence& a, const ObservationSequence& b);

}  // namespace retrace
