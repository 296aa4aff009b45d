#pragma once

// Tri-derivations D: A x A x A -> X into a Banach A-module, the auxiliary maps
// phi_a and psi_{x*}, and the checks on the fourth adjoint D^{****}.

#include "arens/algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace arens {

struct TriDerivationCandidate {
  std::string name;
  MultiMap D;  // A x A x A -> X
  BanachModuleModel module;
};

struct DerivationIdentity {
  bool holds = true;
  std::optional<std::array<std::size_t, 4>> quadruple;  // first failing (a, b, c, d)
  Vector lhs;
  Vector rhs;
};

struct DerivationReport {
  std::array<DerivationIdentity, 3> identities;
  std::size_t quadruples = 0;

  bool is_tri_derivation() const;
  std::string str() const;
};

/// Checks the three defining identities on every basis quadruple:
///   D(ad, b, c) = D(a,b,c).d + a.D(d,b,c)
///   D(a, bd, c) = D(a,b,c).d + b.D(a,d,c)
///   D(a, b, cd) = D(a,b,c).d + c.D(a,b,d)
/// where x.d is the right action and a.x the left action.
DerivationReport is_tri_derivation(const TriDerivationCandidate& c);

/// phi_a(c, b, d) = pi2(D(a, b, c), d)
MultiMap phi_a(const TriDerivationCandidate& c, const Vector& a);

/// psi_{x*}(a, d, b) = D^*(pi1^*(x*, b), a, d), with codomain A*.
MultiMap psi_xstar(const TriDerivationCandidate& c, const Vector& xstar);

struct StandardArgumentItem {
  int item = 0;
  std::string hypothesis;
  bool hypothesis_holds = false;
  std::vector<std::pair<std::string, std::string>> conclusions;  // superscripts compared
  std::size_t checks = 0;
  bool conclusions_hold = false;
};

/// The four extension equalities for phi_a (every basis a) and psi_{x*} (every
/// dual basis x*), with their hypotheses evaluated as well.
std::vector<StandardArgumentItem> standard_argument_checks(const TriDerivationCandidate& c);

struct FourthAdjointReport {
  DerivationReport first_product;   // extended with the first Arens product
  DerivationReport second_product;  // extended with the second Arens product
  std::size_t phi_checks = 0;
  std::size_t psi_checks = 0;
  bool phi_conditions = false;  // phi^{r****r} = phi^{i****i} = phi^{s****t}
  bool psi_conditions = false;  // psi^{j****j} = psi^{t****s} = psi^{****}
  std::string note;

  bool forward() const { return first_product.is_tri_derivation() && second_product.is_tri_derivation(); }
  bool backward() const { return phi_conditions && psi_conditions; }
  bool ok() const { return forward() && backward(); }
};

/// Requires a verified tri-derivation (throws AlgebraLawViolated otherwise).
FourthAdjointReport theorem8_check(const TriDerivationCandidate& c);

/// D(a, b, c) = delta(a) delta(b) delta(c) on A acting on itself.
TriDerivationCandidate product_candidate(std::string name, const AlgebraModel& algebra, const MultiMap& delta);

/// D(a, b, c) = delta(a) b c + a delta(b) c + a b delta(c) on A acting on itself.
TriDerivationCandidate leibniz_sum_candidate(std::string name, const AlgebraModel& algebra, const MultiMap& delta);

TriDerivationCandidate zero_candidate(std::string name, const AlgebraModel& algebra);

/// `zero`, `poly3-euler`, `z3-conv`, `poly3-leibniz-sum`, `m2-leibniz`.
TriDerivationCandidate derivation_fixture(const std::string& name);

std::vector<std::string> derivation_fixture_names();

}  // namespace arens
