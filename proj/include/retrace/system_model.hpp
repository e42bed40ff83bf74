#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "retrace/literal.hpp"
#include "retrace/property.hpp"

namespace retrace {

struct Transition {
  std::string from;
  std::string event;
  std::string to;
  SourceLoc loc{};
};

bool transition_equal(const Transition& a, const Transition& b);
bool transition_less(const Transition& a, const Transition& b);

/// A finite transition system: states with full field valuations, named
/// events, a (possibly nondeterministic) transition relation, and
/// initial/final state sets.
struct SystemModel {
  std::string name;
  std::map<std::string, Kind> schema;       // field -> kind
  std::map<std::string, Valuation> states;  // state -> valuation
  std::vector<std::string> events;          // sorted, unique
  std::vector<Transition> transitions;      // sorted by (from, event, to)
  std::vector<std::string> initial;         // sorted, unique, non-empty
  std::vector<std::string> final_states;    // sorted, unique; empty = all
  SourceLoc loc{};
  std::map<std::string, SourceLoc> state_locs;
};

/// Sorts events/transitions/initial/final, drops duplicates, and fills an
/// empty final set with all states. The parser and bindings run this; the
/// engine assumes it has run.
void canonicalize(SystemModel& model);

bool model_equal(const SystemModel& a, const SystemModel& b);

bool has_state(const SystemModel& m, const std::string& name);
bool has_event(const SystemModel& m, const std::string& name);
bool is_initial(const SystemModel& m, const std::string& name);
bool is_final(const SystemModel& m, const std::string& name);

/// Transitions leaving `from`, in (event, to) order.
std::span<const Transition> transitions_from(const SystemModel& m, const std::string& from);

/// An alternating sequence s0 e1 s1 ... eL sL. states has L+1 entries,
/// events has L.
struct Run {
  std::vector<std::string> states;
  std::vector<std::string> events;
};

bool run_equal(const Run& a, const Run& b);

/// s0 in initial, sL in final, every step a declared transition.
bool is_valid_run(const SystemModel& m, const Run& run);

/// The L+1 point sequence of a run: (s0, no event), (s1, e1), ...
std::vector<Point> run_points(const SystemModel& m, const Run& run);

/// "A --e1--> B --e2--> C" (a lone state for zero-transition runs).
std::string run_text(const Run& run);

}  // namespace retrace
