#pragma once

// Catalog of the tensor identities displayed in the proof chains, plus the
// factorization and completeness checks, all evaluated in the reflexive model.

#include "arens/multimap.hpp"
#include "arens/semantics.hpp"

#include <string>
#include <vector>

namespace arens {

struct ChainIdentity {
  std::string source;  // label of the displayed chain it belongs to
  ExprAst lhs;
  ExprAst rhs;
};

/// Every displayed equality between adjoint/flip expressions of one map.
std::vector<ChainIdentity> proof_chain_identities();

/// Catalog entries whose source starts with `prefix`.
std::vector<ChainIdentity> proof_chain_identities(const std::string& prefix);

IdentityReport check_identity(const ChainIdentity& identity, const MultiMap& f);

struct CompletenessReport {
  std::vector<NaturalExtension> extensions;
  std::vector<IdentityReport> against_fourth_adjoint;  // each extension vs f^{****}

  bool completely_regular() const;
};

/// Realizes the six natural extensions of a tri-linear map and compares them.
CompletenessReport complete_regularity(const MultiMap& f);

struct FactorizationReport {
  IdentityReport sixth_adjoint;  // f^{t*****} vs h^{***} o g^{t*****}
  IdentityReport extension;      // f^{t****s} vs g^{t****s}(., h^{**}(.), .)

  bool ok() const { return sixth_adjoint.equal && extension.equal; }
};

/// f = g(x, h(y), z); labels are assigned internally (g: W;X,S,Z and h: S;Y).
FactorizationReport factorization_check(const MultiMap& g, const MultiMap& h);

struct TwoSidedFactorization {
  MultiMap f;
  MultiMap g;   // X x S x Z -> W
  MultiMap K;   // X x Y x S -> W
  MultiMap h1;  // Y -> S
  MultiMap h2;  // Z -> S
};

/// From core: X x S x S -> W, builds g = core(x, s, h2(z)) and
/// K = core(x, h1(y), s), so that f = K(x, y, h2(z)) = g(x, h1(y), z).
TwoSidedFactorization two_sided_from_core(const MultiMap& core, const MultiMap& h1, const MultiMap& h2);

struct TwoSidedReport {
  IdentityReport sides_agree;  // K(x, y, h2(z)) vs g(x, h1(y), z)
  IdentityReport fifth;        // f^{*****} vs h2^{***} o K^{*****}
  IdentityReport sixth;        // f^{******} vs h1^{***} o g^{******}

  bool ok() const { return sides_agree.equal && fifth.equal && sixth.equal; }
};

TwoSidedReport two_sided_check(const MultiMap& g, const MultiMap& K, const MultiMap& h1, const MultiMap& h2);

}  // namespace arens
