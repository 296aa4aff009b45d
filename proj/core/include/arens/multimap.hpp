#pragma once

// Dense exact-rational tensors realizing n-linear maps in the reflexive model:
// every dual is identified with the space through the dot pairing, so adjoints
// and flips are pure axis relabelings.

#include "arens/expr.hpp"
#include "arens/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arens {

using Index = std::vector<std::size_t>;

/// Tensor of an n-linear map with axes (out, in1, ..., inN), row-major with the
/// codomain axis slowest. Every axis carries a label; labels are unique within
/// a map and travel with the axes through every operation.
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(std::string name, std::vector<std::size_t> input_dims, std::size_t codomain_dim,
           std::vector<std::string> axis_labels, std::vector<Rational> entries);

  static MultiMap zeros(std::string name, std::vector<std::size_t> input_dims, std::size_t codomain_dim,
                        std::vector<std::string> axis_labels = {});
  /// Entries from a function of the full index (out, in1, ..., inN).
  static MultiMap generate(std::string name, std::vector<std::size_t> input_dims, std::size_t codomain_dim,
                           std::vector<std::string> axis_labels,
                           const std::function<Rational(const Index&)>& entry);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return input_dims_.size(); }
  const std::vector<std::size_t>& input_dims() const { return input_dims_; }
  std::size_t codomain_dim() const { return codomain_dim_; }
  const std::vector<std::string>& axis_labels() const { return labels_; }
  const std::string& codomain_label() const { return labels_.front(); }
  std::span<const Rational> entries() const { return entries_; }
  /// (codomain_dim, input_dims...)
  Index shape() const;

  const Rational& at(const Index& full_index) const { return entries_[offset(full_index)]; }
  std::size_t offset(const Index& full_index) const;

  MultiMap renamed(std::string name) const;
  MultiMap relabeled(std::vector<std::string> axis_labels) const;
  bool is_zero() const;

  /// Exact structural equality (name ignored).
  bool same_as(const MultiMap& other) const;

 private:
  std::string name_;
  std::vector<std::size_t> input_dims_;
  std::size_t codomain_dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> entries_;
};

/// `out`, `in1`, ..., the labels assumed when none are given.
std::vector<std::string> default_labels(std::size_t arity);

/// Calls `fn` on every index of `shape` in row-major order.
void for_each_index(const Index& shape, const std::function<void(const Index&)>& fn);

/// Result axis a reads source axis `source_axes[a]` (axis 0 is the codomain).
MultiMap permute_axes(const MultiMap& m, const std::vector<std::size_t>& source_axes);

/// G[k; l, i1..i(n-1)] = F[l; i1..i(n-1), k].
MultiMap adjoint(const MultiMap& m);

/// Input axes permuted by `p`; the codomain is untouched.
MultiMap flip(const MultiMap& m, const FlipPerm& p);

Vector evaluate(const MultiMap& m, const std::vector<Vector>& args);

/// Applies the ops of `expr` in superscript order and cross-checks the result's
/// labels against axis_semantics.
MultiMap realize(const ExprAst& expr, const MultiMap& base);

struct Mismatch {
  Index index;  // in the left operand's axis order
  Rational left;
  Rational right;
};

struct IdentityReport {
  std::string left_expr;
  std::string right_expr;
  bool equal = false;
  std::optional<Mismatch> first_mismatch;

  std::string str() const;
};

/// Exact entrywise comparison after aligning `b`'s input axes to `a`'s by
/// label. Codomain labels must agree. A nonzero tolerance compares
/// |a - b| <= tolerance instead, for imported floating data.
IdentityReport equal(const MultiMap& a, const MultiMap& b, const Rational& tolerance = 0);

struct RandomMapOptions {
  std::size_t arity = 3;
  std::vector<std::size_t> input_dims{2, 2, 2};
  std::size_t codomain_dim = 2;
  std::uint64_t seed = 0;
  int entry_bound = 3;
  std::vector<std::string> axis_labels;
  std::string name = "f";
};

/// Deterministic integer entries in [-entry_bound, entry_bound].
MultiMap random_map(const RandomMapOptions& options);

/// Deterministic integer coordinates in [-bound, bound].
Vector random_vector(std::size_t dim, std::uint64_t seed, int bound = 3);

/// f(.., y, ..) = g(.., h(y), ..) with h applied at the 1-based `slot`.
MultiMap build_factored(const MultiMap& g, const MultiMap& h, std::size_t slot);

/// (outer o inner)(args) = outer(inner(args)) for a linear `outer`.
MultiMap compose_output(const MultiMap& outer, const MultiMap& inner);

/// Fixes the 1-based `slot` to `v`, dropping that axis.
MultiMap contract_slot(const MultiMap& m, std::size_t slot, const Vector& v);

MultiMap identity_map(std::size_t dim, std::string in_label = "in1", std::string out_label = "out");

MultiMap operator+(const MultiMap& a, const MultiMap& b);
MultiMap operator*(const Rational& c, const MultiMap& m);

}  // namespace arens
