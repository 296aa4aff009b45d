#pragma once

// Finite-dimensional test beds: group algebras, matrix algebras, truncated
// polynomial algebras, Banach modules over them, and the bilinear Arens
// machinery evaluated in the reflexive model.

#include "arens/multimap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arens {

/// Multiplication table of a finite group on elements 0..n-1.
class CayleyTable {
 public:
  /// Validates rows/columns as permutations, associativity and the identity law.
  CayleyTable(std::vector<std::vector<std::size_t>> table, std::size_t identity);

  /// `group <n> <identity-index>` followed by n rows of n indices.
  static CayleyTable parse(const std::string& text);
  /// `z2`, `z3`, `z4` or `s3`.
  static CayleyTable fixture(const std::string& name);
  static CayleyTable cyclic(std::size_t n);
  static CayleyTable symmetric3();

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::string to_text() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
};

/// An associative algebra given by its multiplication tensor pi: A x A -> A.
class AlgebraModel {
 public:
  /// Checks associativity (and the unit law, when a unit is given) on all basis tuples.
  AlgebraModel(MultiMap multiplication, std::optional<Vector> unit, std::vector<std::string> basis_names);

  std::size_t dim() const { return mult_.codomain_dim(); }
  const MultiMap& multiplication() const { return mult_; }
  const std::optional<Vector>& unit() const { return unit_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  Vector mul(const Vector& a, const Vector& b) const { return evaluate(mult_, {a, b}); }

 private:
  MultiMap mult_;
  std::optional<Vector> unit_;
  std::vector<std::string> basis_names_;
};

/// A Banach A-module (pi1, X, pi2) with left action pi1: A x X -> X and right
/// action pi2: X x A -> X.
class BanachModuleModel {
 public:
  /// Checks the left, right and compatibility laws on all basis tuples.
  BanachModuleModel(AlgebraModel algebra, MultiMap left, MultiMap right);

  /// A acting on itself by multiplication on both sides.
  static BanachModuleModel regular(const AlgebraModel& algebra);

  const AlgebraModel& algebra() const { return algebra_; }
  std::size_t carrier_dim() const { return left_.codomain_dim(); }
  const MultiMap& left() const { return left_; }
  const MultiMap& right() const { return right_; }

 private:
  AlgebraModel algebra_;
  MultiMap left_;
  MultiMap right_;
};

struct GroupAlgebra {
  AlgebraModel algebra;
  /// f(k, g, h) = k * g * h
  MultiMap triple;
};

GroupAlgebra group_algebra(const CayleyTable& table);

struct PolyAlgebra {
  AlgebraModel algebra;
  /// Euler derivation x^k -> k x^k as a linear map.
  MultiMap euler;
};

/// Basis 1, x, ..., x^{n-1} with x^a x^b = 0 once a + b >= n.
PolyAlgebra truncated_poly_algebra(std::size_t n);

/// k x k matrices on the elementary basis E_ij (index i*k + j).
AlgebraModel matrix_algebra(std::size_t k);

/// Whether a linear map satisfies d(ab) = d(a)b + a d(b) on all basis pairs.
bool is_derivation(const AlgebraModel& algebra, const MultiMap& d);

/// Inner derivation a -> ua - au.
MultiMap inner_derivation(const AlgebraModel& algebra, const Vector& u);

struct ArensProducts {
  MultiMap first;   // m^{***}
  MultiMap second;  // m^{r***r}
  IdentityReport first_is_m;
  IdentityReport second_is_m;
};

ArensProducts arens_products(const MultiMap& m);

/// Equality of the two Arens extensions m^{***} and m^{r***r}.
IdentityReport regularity_check(const MultiMap& m);

struct BridgeReport {
  MultiMap m;                       // m(y, z) = f^{s*}(w*, y, z)
  IdentityReport double_extension;  // f^{s******} sliced at w* vs m^{****}
  IdentityReport regularity;

  bool ok() const { return double_extension.equal && regularity.equal; }
};

/// Builds the bilinear map obtained by fixing the functional of f^{s*} and
/// checks it against the sliced sixth adjoint of f^s.
BridgeReport theorem5_bridge(const MultiMap& f, const Vector& wstar);

struct ConstraintReport {
  std::size_t samples = 0;
  IdentityReport hypothesis_tr;      // f^{t***r} vs f^{r***t}
  IdentityReport hypothesis_mixed;   // f^{****t**s} vs f^{t**s****}
  IdentityReport regularity;         // theta

  bool ok() const { return hypothesis_tr.equal && hypothesis_mixed.equal && regularity.equal; }
};

/// Sample vectors with coordinates in {-1, 0, 1, 2}: the full grid when dim <= 2,
/// otherwise the grids supported on each pair of coordinates.
std::vector<Vector> sample_grid(std::size_t dim);

/// Validates theta(x, y) = f(x, y, m(x, y)) on the sample grid, then checks the
/// hypotheses and Arens regularity of theta. Throws ConstraintViolated.
ConstraintReport theorem6_check(const MultiMap& f, const MultiMap& m, const MultiMap& theta);

}  // namespace arens
