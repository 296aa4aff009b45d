#include "arens/semantics.hpp"

#include "arens/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arens {

std::string to_string(Axis axis) {
  switch (axis) {
    case Axis::Out: return "out";
    case Axis::In1: return "in1";
    case Axis::In2: return "in2";
    case Axis::In3: return "in3";
  }
  return "?";
}

int AxisAssignment::parity_of(Axis axis) const {
  if (axis == codomain_axis) return codomain_parity;
  for (std::size_t k = 0; k < slot_axes.size(); ++k)
    if (slot_axes[k] == axis) return slot_parity[k];
  return -1;
}

std::string AxisAssignment::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < slot_axes.size(); ++k) {
    if (k) out += ", ";
    out += to_string(slot_axes[k]) + (slot_parity[k] ? "*" : "");
  }
  return out + ") -> " + to_string(codomain_axis) + (codomain_parity ? "*" : "");
}

AxisAssignment axis_semantics(const ExprAst& expr, int base_arity) {
  if (base_arity < 1 || base_arity > 3)
    throw Error(ErrorCode::FlipArityMismatch, "arity " + std::to_string(base_arity) + " is out of scope");
  AxisAssignment a;
  for (int k = 0; k < base_arity; ++k) {
    a.slot_axes.push_back(static_cast<Axis>(k + 1));
    a.slot_parity.push_back(0);
  }
  for (Op op : expr.ops) {
    if (op == Op::Adjoint) {
      // New slots are (old codomain, old slots 1..n-1); new codomain is old slot n.
      const Axis last = a.slot_axes.back();
      const int last_parity = a.slot_parity.back();
      a.slot_axes.pop_back();
      a.slot_parity.pop_back();
      a.slot_axes.insert(a.slot_axes.begin(), a.codomain_axis);
      a.slot_parity.insert(a.slot_parity.begin(), a.codomain_parity ^ 1);
      a.codomain_axis = last;
      a.codomain_parity = last_parity ^ 1;
      continue;
    }
    const FlipPerm p = FlipPerm::of(static_cast<FlipKind>(op), base_arity);
    AxisAssignment next = a;
    for (int k = 0; k < base_arity; ++k) {
      next.slot_axes[static_cast<std::size_t>(k)] = a.slot_axes[static_cast<std::size_t>(p.source(k))];
      next.slot_parity[static_cast<std::size_t>(k)] = a.slot_parity[static_cast<std::size_t>(p.source(k))];
    }
    a = std::move(next);
  }
  return a;
}

// --- limit orders -------------------------------------------------------------

std::string LimitOrder::str() const {
  return "(" + to_string(ordering[0]) + ", " + to_string(ordering[1]) + ", " + to_string(ordering[2]) + ")";
}

std::string LimitOrder::limits() const {
  auto net = [](Axis a) {
    switch (a) {
      case Axis::In1: return "lim_a";
      case Axis::In2: return "lim_b";
      case Axis::In3: return "lim_g";
      default: return "lim_?";
    }
  };
  return std::string(net(ordering[0])) + " " + net(ordering[1]) + " " + net(ordering[2]);
}

LimitOrder order_of_flip(const FlipPerm& p) {
  if (p.size() != 3) throw Error(ErrorCode::FlipArityMismatch, "limit orders exist for tri-linear maps only");
  LimitOrder order;
  for (int k = 0; k < 3; ++k) order.ordering[static_cast<std::size_t>(k)] = static_cast<Axis>(p.source(k) + 1);
  return order;
}

std::optional<LimitOrder> limit_order(const ExprAst& expr) {
  const auto steps = normalize(expr, 3);
  std::size_t pos = 0;
  FlipPerm p = FlipPerm::identity(3);
  if (pos < steps.size() && std::holds_alternative<FlipPerm>(steps[pos])) p = std::get<FlipPerm>(steps[pos++]);
  int adjoints = 0;
  while (pos < steps.size() && std::holds_alternative<AdjointStep>(steps[pos])) {
    ++adjoints;
    ++pos;
  }
  if (adjoints != 4) return std::nullopt;
  if (pos < steps.size() && std::holds_alternative<FlipPerm>(steps[pos])) ++pos;
  if (pos != steps.size()) return std::nullopt;
  return order_of_flip(p);
}

std::vector<NaturalExtension> natural_extensions(const std::string& base) {
  std::vector<NaturalExtension> out;
  for (const char* sup : {"i****i", "j****j", "r****r", "****", "t****s", "s****t"}) {
    ExprAst e = make_expr(base, sup);
    out.push_back({e, *limit_order(e)});
  }
  return out;
}

NaturalExtension extension_with_order(const LimitOrder& order, const std::string& base) {
  for (auto& ext : natural_extensions(base))
    if (ext.order == order) return ext;
  throw Error(ErrorCode::ShapeMismatch, "no natural extension has order " + order.str());
}

// --- conditions ---------------------------------------------------------------

namespace {

std::size_t order_index(const LimitOrder& order) {
  const auto flips = all_flips();
  for (std::size_t k = 0; k < flips.size(); ++k)
    if (order_of_flip(flips[k]) == order) return k;
  throw Error(ErrorCode::ShapeMismatch, "not a limit order: " + order.str());
}

OrderPair sorted(const OrderPair& pair) {
  return pair.first <= pair.second ? pair : OrderPair{pair.second, pair.first};
}

// Union-find over the six limit orders.
class OrderClasses {
 public:
  OrderClasses() { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::array<std::size_t, 6> parent_{};
};

}  // namespace

std::optional<FlipPerm> close_to_regular_flip(const OrderPair& pair) {
  const FlipPerm t = FlipPerm::of(FlipKind::T), s = FlipPerm::of(FlipKind::S);
  const OrderPair want = sorted(pair);
  for (const auto& p : all_flips()) {
    const OrderPair got = sorted({order_of_flip(compose_flips(p, t)), order_of_flip(compose_flips(p, s))});
    if (got == want) return p;
  }
  return std::nullopt;
}

std::string condition_name(const OrderPair& pair, const std::string& base) {
  if (auto p = close_to_regular_flip(pair))
    return "close-to-regular(" + (p->is_identity() ? base : base + "^" + p->name()) + ")";
  const OrderPair s = sorted(pair);
  return "limit-interchange(" + s.first.str() + "," + s.second.str() + ")";
}

Condition Condition::completely_regular() {
  Condition c;
  const auto flips = all_flips();
  for (std::size_t a = 0; a < flips.size(); ++a)
    for (std::size_t b = a + 1; b < flips.size(); ++b)
      c.equalities.emplace_back(order_of_flip(flips[a]), order_of_flip(flips[b]));
  return c;
}

Condition Condition::close_to_regular(const FlipPerm& p) {
  return {{{order_of_flip(compose_flips(p, FlipPerm::of(FlipKind::T))),
            order_of_flip(compose_flips(p, FlipPerm::of(FlipKind::S)))}}};
}

bool entails(const Condition& assumed, const OrderPair& goal) {
  OrderClasses classes;
  for (const auto& [a, b] : assumed.equalities) classes.join(order_index(a), order_index(b));
  return classes.find(order_index(goal.first)) == classes.find(order_index(goal.second));
}

bool entails(const Condition& assumed, const Condition& goal) {
  return std::all_of(goal.equalities.begin(), goal.equalities.end(),
                     [&](const OrderPair& g) { return entails(assumed, g); });
}

// --- classifier ---------------------------------------------------------------

std::string Verdict::str() const {
  switch (kind) {
    case Kind::UnconditionallyEqual: return "UNCOND-EQUAL";
    case Kind::EqualIffCondition: return "EQUAL-IFF " + condition;
    case Kind::DistinctSignatures: return "DISTINCT";
    case Kind::NotComparable: return "NOT-COMPARABLE";
  }
  return "NOT-COMPARABLE";
}

namespace {

using Collapsed = std::pair<std::string, int>;

std::multiset<Collapsed> collapsed_inputs(const Signature& sig) {
  std::multiset<Collapsed> out;
  for (const auto& s : sig.inputs) out.emplace(s.base, s.level % 2);
  return out;
}

bool axes_agree(const AxisAssignment& a, const AxisAssignment& b) {
  if (a.codomain_axis != b.codomain_axis || a.codomain_parity != b.codomain_parity) return false;
  for (Axis axis : a.slot_axes)
    if (a.parity_of(axis) != b.parity_of(axis)) return false;
  return true;
}

// Bilinear analogue of the canonical shape: flip, three adjoints, flip.
std::optional<FlipPerm> bilinear_order(const ExprAst& expr) {
  const auto steps = normalize(expr, 2);
  std::size_t pos = 0;
  FlipPerm p = FlipPerm::identity(2);
  if (pos < steps.size() && std::holds_alternative<FlipPerm>(steps[pos])) p = std::get<FlipPerm>(steps[pos++]);
  int adjoints = 0;
  while (pos < steps.size() && std::holds_alternative<AdjointStep>(steps[pos])) {
    ++adjoints;
    ++pos;
  }
  if (adjoints != 3) return std::nullopt;
  if (pos < steps.size() && std::holds_alternative<FlipPerm>(steps[pos])) ++pos;
  if (pos != steps.size()) return std::nullopt;
  return p;
}

}  // namespace

Verdict classify(const ExprAst& lhs, const ExprAst& rhs, const Signature& base_sig) {
  const int arity = static_cast<int>(base_sig.arity());
  const Signature sl = signature_of(lhs, base_sig);
  const Signature sr = signature_of(rhs, base_sig);

  Verdict v;
  v.left_axes = axis_semantics(lhs, arity);
  v.right_axes = axis_semantics(rhs, arity);

  if (lhs.base != rhs.base) {
    v.kind = Verdict::Kind::NotComparable;
    v.note = "different base maps";
    return v;
  }
  if (Collapsed{sl.codomain.base, sl.codomain.level % 2} != Collapsed{sr.codomain.base, sr.codomain.level % 2} ||
      collapsed_inputs(sl) != collapsed_inputs(sr)) {
    v.kind = Verdict::Kind::DistinctSignatures;
    v.note = sl.str() + " vs " + sr.str();
    return v;
  }
  if (!axes_agree(v.left_axes, v.right_axes)) {
    v.kind = Verdict::Kind::NotComparable;
    v.note = "axis assignments differ";
    return v;
  }

  if (arity == 3) {
    const auto ol = limit_order(lhs);
    const auto orr = limit_order(rhs);
    if (ol && orr) {
      v.orders = OrderPair{*ol, *orr};
      if (*ol == *orr) {
        v.kind = Verdict::Kind::UnconditionallyEqual;
        v.note = "same limit order " + ol->str();
      } else {
        v.kind = Verdict::Kind::EqualIffCondition;
        v.condition = condition_name(*v.orders, lhs.base);
        v.note = ol->limits() + " vs " + orr->limits();
      }
      return v;
    }
  } else if (arity == 2) {
    const auto pl = bilinear_order(lhs);
    const auto pr = bilinear_order(rhs);
    if (pl && pr) {
      if (*pl == *pr) {
        v.kind = Verdict::Kind::UnconditionallyEqual;
      } else {
        v.kind = Verdict::Kind::EqualIffCondition;
        v.condition = "arens-regular(" + lhs.base + ")";
      }
      return v;
    }
  }

  if (render_normal(normalize(lhs, arity)) == render_normal(normalize(rhs, arity))) {
    v.kind = Verdict::Kind::UnconditionallyEqual;
    v.note = "identical normal forms";
  } else {
    v.kind = Verdict::Kind::NotComparable;
    v.note = "no limit-order semantics for non-canonical expressions";
  }
  return v;
}

// --- flip correspondences -----------------------------------------------------

std::string FlipEquivalence::statement() const {
  return "close-to-regular(f^" + flip.name() + ") <=> " + first_pulled.expr.str() + " = " +
         second_pulled.expr.str();
}

std::vector<FlipEquivalence> verify_flip_equivalences() {
  struct Published {
    FlipKind flip;
    const char* a;
    const char* b;
  };
  static const Published published[] = {
      {FlipKind::R, "f^{i****i}", "f^{j****j}"}, {FlipKind::I, "f^{j****j}", "f^{r****r}"},
      {FlipKind::J, "f^{i****i}", "f^{r****r}"}, {FlipKind::T, "f^{s****t}", "f^{****}"},
      {FlipKind::S, "f^{t****s}", "f^{****}"},
  };

  std::vector<FlipEquivalence> out;
  for (const auto& item : published) {
    FlipEquivalence eq;
    eq.flip = FlipPerm::of(item.flip);
    const std::string p(1, static_cast<char>(item.flip));
    eq.first = make_expr("f", p + "t****s");
    eq.second = make_expr("f", p + "s****t");
    eq.first_pulled = extension_with_order(*limit_order(eq.first));
    eq.second_pulled = extension_with_order(*limit_order(eq.second));
    eq.expected = {item.a, item.b};
    eq.verdict = classify(eq.first, eq.second);

    const std::set<std::string> got{eq.first_pulled.expr.str(), eq.second_pulled.expr.str()};
    const std::set<std::string> want{item.a, item.b};
    const Verdict pulled = classify(eq.first_pulled.expr, eq.second_pulled.expr);
    const std::string name = "close-to-regular(f^" + p + ")";
    eq.matches = got == want && eq.verdict.kind == Verdict::Kind::EqualIffCondition &&
                 eq.verdict.condition == name && pulled.kind == Verdict::Kind::EqualIffCondition &&
                 pulled.condition == name;
    out.push_back(std::move(eq));
  }
  return out;
}

}  // namespace arens
