#pragma once

// Reflexive-model semantics of adjoint/flip expressions: which base axis each
// slot carries, the iterated weak*-limit nesting of the canonical extensions,
// and a classifier for pairs of expressions.

#include "arens/expr.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arens {

enum class Axis : std::uint8_t { Out = 0, In1 = 1, In2 = 2, In3 = 3 };

std::string to_string(Axis axis);

/// Base axis of every slot plus the codomain, with dual levels mod 2.
struct AxisAssignment {
  std::vector<Axis> slot_axes;
  Axis codomain_axis = Axis::Out;
  std::vector<int> slot_parity;
  int codomain_parity = 0;

  /// Parity of the slot carrying `axis`, or of the codomain.
  int parity_of(Axis axis) const;
  std::string str() const;

  bool operator==(const AxisAssignment&) const = default;
};

AxisAssignment axis_semantics(const ExprAst& expr, int base_arity = 3);

/// Nesting of the three iterated weak*-limits, outermost first.
struct LimitOrder {
  std::array<Axis, 3> ordering{Axis::In1, Axis::In2, Axis::In3};

  /// `(in1, in2, in3)`
  std::string str() const;
  /// The same order in net indices, e.g. `lim_a lim_b lim_g`.
  std::string limits() const;

  auto operator<=>(const LimitOrder&) const = default;
};

/// Order of the extension obtained from the flip `p` followed by four adjoints.
LimitOrder order_of_flip(const FlipPerm& p);

/// Defined for the shape "flip p, four adjoints, flip q" (either flip may be
/// absent); nullopt means not canonical.
std::optional<LimitOrder> limit_order(const ExprAst& expr);

struct NaturalExtension {
  ExprAst expr;
  LimitOrder order;
};

/// f^{i****i}, f^{j****j}, f^{r****r}, f^{****}, f^{t****s}, f^{s****t}.
std::vector<NaturalExtension> natural_extensions(const std::string& base = "f");

/// The natural extension realizing `order`.
NaturalExtension extension_with_order(const LimitOrder& order, const std::string& base = "f");

using OrderPair = std::pair<LimitOrder, LimitOrder>;

/// `close-to-regular(f^p)` when the pair is {order(p t), order(p s)} for some
/// flip p, otherwise `limit-interchange(...)`. Symmetric in the pair.
std::string condition_name(const OrderPair& pair, const std::string& base = "f");

/// The flip p whose close-to-regularity is the equality of the two orders.
std::optional<FlipPerm> close_to_regular_flip(const OrderPair& pair);

/// A conjunction of asserted equalities between limit orders.
struct Condition {
  std::vector<OrderPair> equalities;

  static Condition completely_regular();
  static Condition close_to_regular(const FlipPerm& p);
};

/// Whether the assumed equalities force `goal` by transitivity.
bool entails(const Condition& assumed, const OrderPair& goal);
bool entails(const Condition& assumed, const Condition& goal);

struct Verdict {
  enum class Kind { UnconditionallyEqual, EqualIffCondition, DistinctSignatures, NotComparable };

  Kind kind = Kind::NotComparable;
  std::string condition;
  std::optional<OrderPair> orders;
  AxisAssignment left_axes;
  AxisAssignment right_axes;
  std::string note;

  /// `UNCOND-EQUAL`, `EQUAL-IFF <name>`, `DISTINCT` or `NOT-COMPARABLE`.
  std::string str() const;
};

Verdict classify(const ExprAst& lhs, const ExprAst& rhs, const Signature& base_sig = default_signature(3));

struct FlipEquivalence {
  FlipPerm flip;
  ExprAst first;    // (f^p)^{t****s} written over f
  ExprAst second;   // (f^p)^{s****t} written over f
  NaturalExtension first_pulled;
  NaturalExtension second_pulled;
  std::pair<std::string, std::string> expected;
  Verdict verdict;
  bool matches = false;

  /// `close-to-regular(f^r) <=> f^{i****i} = f^{j****j}`
  std::string statement() const;
};

/// Derives the five flip correspondences and compares them against the
/// published extension pairs.
std::vector<FlipEquivalence> verify_flip_equivalences();

}  // namespace arens
