#pragma once

// Surface syntax and typing rules for adjoint/flip expressions such as
// `f^{t****s}`: a base map name followed by a superscript of operations
// applied left to right.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace arens {

/// A base space with a dual level (0 = the space, 1 = dual, 2 = bidual, ...).
struct SpaceRef {
  std::string base;
  int level = 0;

  SpaceRef dual() const { return {base, level + 1}; }
  /// `X`, `X*`, `X**`, ...
  std::string str() const;

  bool operator==(const SpaceRef&) const = default;
};

/// Ordered domain list plus codomain of an n-linear map.
struct Signature {
  std::vector<SpaceRef> inputs;
  SpaceRef codomain;

  std::size_t arity() const { return inputs.size(); }
  /// `Y** x Z** x W* -> X*`
  std::string str() const;

  bool operator==(const Signature&) const = default;
};

/// X x Y x Z -> W for arity 3, X x Y -> Z for arity 2, Y -> S for arity 1.
Signature default_signature(int arity);

enum class FlipKind : char { I = 'i', J = 'j', R = 'r', T = 't', S = 's' };

/// A permutation of argument positions. `source(k)` is the (0-based) position
/// of the original map that feeds slot k of the flipped map, so f^s with
/// s = [2,3,1] has f^s(y,z,x) = f(x,y,z).
class FlipPerm {
 public:
  static FlipPerm identity(int size);
  /// The named flips on a tri-linear map; `R` alone also exists at size 2.
  static FlipPerm of(FlipKind kind, int size = 3);
  /// 1-based sources, e.g. {3,1,2} for t.
  static FlipPerm from_sources(std::vector<int> one_based);

  int size() const { return size_; }
  int source(int slot) const { return src_[static_cast<std::size_t>(slot)]; }
  bool is_identity() const;
  FlipPerm inverse() const;
  /// `[3,1,2]`
  std::string str() const;
  /// One of `id`, `i`, `j`, `r`, `t`, `s` when the permutation is named.
  std::string name() const;

  bool operator==(const FlipPerm& other) const {
    return size_ == other.size_ && src_ == other.src_;
  }

 private:
  std::array<std::uint8_t, 3> src_{0, 1, 2};
  int size_ = 3;
};

/// The permutation of applying `a` then `b`: (f^a)^b = f^{compose(a,b)}.
FlipPerm compose_flips(const FlipPerm& a, const FlipPerm& b);

/// All six elements of S3 in the order id, i, j, r, t, s.
std::vector<FlipPerm> all_flips();

enum class Op : char {
  Adjoint = '*',
  FlipI = 'i',
  FlipJ = 'j',
  FlipR = 'r',
  FlipT = 't',
  FlipS = 's',
};

struct ExprAst {
  std::string base;
  std::vector<Op> ops;

  /// Op characters only, e.g. `t****s`.
  std::string superscript() const;
  /// `f` or `f^{t****s}`.
  std::string str() const;

  bool operator==(const ExprAst&) const = default;
};

/// Accepts `name`, `name^{ops}`, `name^ops` and, for single-letter names, the
/// bare `name ops` form (e.g. `f****`). Whitespace is ignored.
ExprAst parse(std::string_view text);

/// Convenience for building expressions in code: make_expr("f", "t****s").
ExprAst make_expr(std::string base, std::string_view superscript);

struct AdjointStep {
  bool operator==(const AdjointStep&) const = default;
};
using NormalStep = std::variant<AdjointStep, FlipPerm>;

/// Op sequence with consecutive flips merged by compose_flips and identity
/// flips removed. Throws FlipArityMismatch for flips the arity does not admit.
std::vector<NormalStep> normalize(const ExprAst& expr, int arity);

std::string render_normal(const std::vector<NormalStep>& steps);

/// Adjoint rule: (S1..Sn) -> C becomes (C*, S1..S(n-1)) -> Sn*.
Signature adjoint_signature(const Signature& sig);

/// Signature after applying every op of `expr` to `base_sig`.
Signature signature_of(const ExprAst& expr, const Signature& base_sig);

}  // namespace arens
