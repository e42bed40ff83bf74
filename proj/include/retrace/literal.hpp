#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace retrace {

/// A scalar constant: a state-field value, a comparison right-hand side,
/// or a case-level setting value. The double alternative only appears in
/// settings and observation weights; state fields are int/bool/string.
using Literal = std::variant<std::int64_t, bool, std::string, double>;

enum class Kind { Int, Bool, String, Number };

Kind kind_of(const Literal& v);
const char* kind_name(Kind k);

/// Canonical text form: base-10 integers, true/false, quoted strings,
/// shortest round-trip decimals.
std::string literal_text(const Literal& v);

/// Field name -> value, ordered so serialization is deterministic.
using Valuation = std::map<std::string, Literal>;

/// Shortest decimal representation that parses back to the same double.
std::string format_number(double v);

}  // namespace retrace
