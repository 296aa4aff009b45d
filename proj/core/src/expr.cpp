#include "arens/expr.hpp"

#include "arens/error.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace arens {

std::string SpaceRef::str() const { return base + std::string(static_cast<std::size_t>(level), '*'); }

std::string Signature::str() const {
  std::string out;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (k) out += " x ";
    out += inputs[k].str();
  }
  return out + " -> " + codomain.str();
}

Signature default_signature(int arity) {
  switch (arity) {
    case 1: return {{{"Y", 0}}, {"S", 0}};
    case 2: return {{{"X", 0}, {"Y", 0}}, {"Z", 0}};
    case 3: return {{{"X", 0}, {"Y", 0}, {"Z", 0}}, {"W", 0}};
    default:
      throw Error(ErrorCode::FlipArityMismatch, "arity " + std::to_string(arity) + " is out of scope");
  }
}

// --- FlipPerm ---------------------------------------------------------------

FlipPerm FlipPerm::identity(int size) {
  FlipPerm p;
  p.size_ = size;
  return p;
}

FlipPerm FlipPerm::of(FlipKind kind, int size) {
  if (size == 2) {
    if (kind != FlipKind::R)
      throw Error(ErrorCode::FlipArityMismatch,
                  std::string("flip '") + static_cast<char>(kind) + "' needs a tri-linear map");
    return from_sources({2, 1});
  }
  if (size != 3)
    throw Error(ErrorCode::FlipArityMismatch, std::string("flip '") + static_cast<char>(kind) +
                                                  "' applied at arity " + std::to_string(size));
  switch (kind) {
    case FlipKind::I: return from_sources({2, 1, 3});
    case FlipKind::J: return from_sources({1, 3, 2});
    case FlipKind::R: return from_sources({3, 2, 1});
    case FlipKind::T: return from_sources({3, 1, 2});
    case FlipKind::S: return from_sources({2, 3, 1});
  }
  return identity(3);
}

FlipPerm FlipPerm::from_sources(std::vector<int> one_based) {
  const auto n = static_cast<int>(one_based.size());
  if (n < 1 || n > 3)
    throw Error(ErrorCode::FlipArityMismatch, "permutations act on 1 to 3 slots");
  std::vector<int> sorted = one_based;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k)
    if (sorted[static_cast<std::size_t>(k)] != k + 1)
      throw Error(ErrorCode::FlipArityMismatch, "not a permutation of 1.." + std::to_string(n));
  FlipPerm p;
  p.size_ = n;
  for (int k = 0; k < n; ++k)
    p.src_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(one_based[static_cast<std::size_t>(k)] - 1);
  return p;
}

bool FlipPerm::is_identity() const {
  for (int k = 0; k < size_; ++k)
    if (source(k) != k) return false;
  return true;
}

FlipPerm FlipPerm::inverse() const {
  FlipPerm inv = identity(size_);
  for (int k = 0; k < size_; ++k) inv.src_[static_cast<std::size_t>(source(k))] = static_cast<std::uint8_t>(k);
  return inv;
}

std::string FlipPerm::str() const {
  std::string out = "[";
  for (int k = 0; k < size_; ++k) {
    if (k) out += ",";
    out += std::to_string(source(k) + 1);
  }
  return out + "]";
}

std::string FlipPerm::name() const {
  if (is_identity()) return "id";
  if (size_ == 2) return "r";
  for (FlipKind kind : {FlipKind::I, FlipKind::J, FlipKind::R, FlipKind::T, FlipKind::S})
    if (of(kind, 3) == *this) return std::string(1, static_cast<char>(kind));
  return str();
}

FlipPerm compose_flips(const FlipPerm& a, const FlipPerm& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::FlipArityMismatch, "composing flips of sizes " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
  // Slot k of (f^a)^b reads slot b(k) of f^a, which reads slot a(b(k)) of f.
  std::vector<int> src;
  for (int k = 0; k < a.size(); ++k) src.push_back(a.source(b.source(k)) + 1);
  return FlipPerm::from_sources(std::move(src));
}

std::vector<FlipPerm> all_flips() {
  return {FlipPerm::identity(3),          FlipPerm::of(FlipKind::I), FlipPerm::of(FlipKind::J),
          FlipPerm::of(FlipKind::R),      FlipPerm::of(FlipKind::T), FlipPerm::of(FlipKind::S)};
}

// --- ExprAst and parsing ------------------------------------------------------

std::string ExprAst::superscript() const {
  std::string out;
  for (Op op : ops) out += static_cast<char>(op);
  return out;
}

std::string ExprAst::str() const { return ops.empty() ? base : base + "^{" + superscript() + "}"; }

namespace {

bool is_op_char(char c) {
  return c == '*' || c == 'i' || c == 'j' || c == 'r' || c == 't' || c == 's';
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Position of the first non-op character, if any.
std::optional<std::size_t> first_bad_op(std::string_view ops) {
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (!is_op_char(ops[k])) return k;
  return std::nullopt;
}

std::vector<Op> to_ops(std::string_view ops) {
  std::vector<Op> out;
  out.reserve(ops.size());
  for (char c : ops) out.push_back(static_cast<Op>(c));
  return out;
}

[[noreturn]] void unknown_char(std::string_view text, std::size_t pos) {
  throw Error(ErrorCode::UnknownCharacter,
              "'" + std::string(1, text[pos]) + "' at position " + std::to_string(pos) + " in '" +
                  std::string(text) + "'");
}

void check_name(std::string_view text, std::size_t len) {
  if (len == 0) throw Error(ErrorCode::EmptyName, "expression '" + std::string(text) + "' has no map name");
  if (!is_ident_start(text[0])) unknown_char(text, 0);
  for (std::size_t k = 1; k < len; ++k)
    if (!is_ident_char(text[k])) unknown_char(text, k);
}

}  // namespace

ExprAst parse(std::string_view raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw Error(ErrorCode::EmptyName, "empty expression");

  if (const auto caret = text.find('^'); caret != std::string::npos) {
    check_name(text, caret);
    std::string_view rest = std::string_view(text).substr(caret + 1);
    std::size_t offset = caret + 1;
    if (!rest.empty() && rest.front() == '{') {
      if (rest.back() != '}') unknown_char(text, text.size() - 1);
      rest = rest.substr(1, rest.size() - 2);
      offset += 1;
    }
    if (auto bad = first_bad_op(rest)) unknown_char(text, offset + *bad);
    return {text.substr(0, caret), to_ops(rest)};
  }

  if (!is_ident_start(text[0])) {
    if (is_op_char(text[0]) || text[0] == '{') throw Error(ErrorCode::EmptyName, "expression '" + text + "' has no map name");
    unknown_char(text, 0);
  }
  // Bare form: the shortest identifier prefix whose remainder is a valid op string.
  std::size_t ident_len = 1;
  while (ident_len < text.size() && is_ident_char(text[ident_len])) ++ident_len;
  for (std::size_t len = 1; len <= ident_len; ++len) {
    std::string_view rest = std::string_view(text).substr(len);
    if (!first_bad_op(rest)) return {text.substr(0, len), to_ops(rest)};
  }
  const std::string_view rest = std::string_view(text).substr(1);
  unknown_char(text, 1 + *first_bad_op(rest));
}

ExprAst make_expr(std::string base, std::string_view superscript) {
  if (auto bad = first_bad_op(superscript)) unknown_char(superscript, *bad);
  return {std::move(base), to_ops(superscript)};
}

// --- normalization and typing -------------------------------------------------

std::vector<NormalStep> normalize(const ExprAst& expr, int arity) {
  std::vector<NormalStep> steps;
  std::optional<FlipPerm> pending;
  auto flush = [&] {
    if (pending && !pending->is_identity()) steps.emplace_back(*pending);
    pending.reset();
  };
  for (Op op : expr.ops) {
    if (op == Op::Adjoint) {
      flush();
      steps.emplace_back(AdjointStep{});
      continue;
    }
    const FlipPerm p = FlipPerm::of(static_cast<FlipKind>(op), arity);
    pending = pending ? compose_flips(*pending, p) : p;
  }
  flush();
  return steps;
}

std::string render_normal(const std::vector<NormalStep>& steps) {
  std::string out;
  for (const auto& step : steps) {
    if (std::holds_alternative<AdjointStep>(step))
      out += '*';
    else
      out += "<" + std::get<FlipPerm>(step).name() + ">";
  }
  return out;
}

Signature adjoint_signature(const Signature& sig) {
  Signature out;
  out.inputs.push_back(sig.codomain.dual());
  for (std::size_t k = 0; k + 1 < sig.inputs.size(); ++k) out.inputs.push_back(sig.inputs[k]);
  out.codomain = sig.inputs.back().dual();
  return out;
}

Signature signature_of(const ExprAst& expr, const Signature& base_sig) {
  const int arity = static_cast<int>(base_sig.arity());
  if (arity < 1 || arity > 3)
    throw Error(ErrorCode::FlipArityMismatch, "base signature of arity " + std::to_string(arity));
  Signature sig = base_sig;
  for (Op op : expr.ops) {
    if (op == Op::Adjoint) {
      sig = adjoint_signature(sig);
      continue;
    }
    const FlipPerm p = FlipPerm::of(static_cast<FlipKind>(op), arity);
    std::vector<SpaceRef> permuted;
    for (int k = 0; k < arity; ++k) permuted.push_back(sig.inputs[static_cast<std::size_t>(p.source(k))]);
    sig.inputs = std::move(permuted);
  }
  return sig;
}

}  // namespace arens
