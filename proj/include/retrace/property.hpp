#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "retrace/literal.hpp"

namespace retrace {

struct SourceLoc {
  std::uint32_t line = 0;  // 1-based; 0 = unknown (built programmatically)
  std::uint32_t col = 0;
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };
const char* cmp_text(CmpOp op);

struct PropertyExpr;
using PropertyPtr = std::shared_ptr<const PropertyExpr>;

/// One position of a run: the state's field valuation plus the event that
/// produced it. Position 0 of a run carries no event.
struct Point {
  Valuation values;
  std::optional<std::string> event;
};

/// Expression tree for the property P of an observation.
struct PropertyExpr {
  struct BoolLit {
    bool value;
  };
  struct FieldCmp {
    std::string field;
    CmpOp op;
    Literal rhs;
  };
  struct EventEq {
    std::string event;
  };
  struct Not {
    PropertyPtr operand;
  };
  struct And {
    PropertyPtr lhs, rhs;
  };
  struct Or {
    PropertyPtr lhs, rhs;
  };

  std::variant<BoolLit, FieldCmp, EventEq, Not, And, Or> node;
  SourceLoc loc{};
};

PropertyPtr prop_true();
PropertyPtr prop_false();
PropertyPtr prop_cmp(std::string field, CmpOp op, Literal rhs, SourceLoc loc = {});
PropertyPtr prop_event(std::string event, SourceLoc loc = {});
PropertyPtr prop_not(PropertyPtr e, SourceLoc loc = {});
PropertyPtr prop_and(PropertyPtr lhs, PropertyPtr rhs, SourceLoc loc = {});
PropertyPtr prop_or(PropertyPtr lhs, PropertyPtr rhs, SourceLoc loc = {});

/// Evaluates P at one run point. `event == x` is false at a point with no
/// event. Throws EvalError when a referenced field is absent from the
/// valuation or operand kinds mismatch.
bool eval_property(const PropertyExpr& expr, const Point& point);

/// Structural equality, ignoring source locations.
bool property_equal(const PropertyExpr& a, const PropertyExpr& b);

/// True for the literal `true` node.
bool is_true_literal(const PropertyExpr& expr);

}  // namespace retrace
