#include "arens/identities.hpp"

#include "arens/error.hpp"

namespace arens {

std::vector<ChainIdentity> proof_chain_identities() {
  struct Row {
    const char* source;
    const char* lhs;
    const char* rhs;
  };
  static const Row rows[] = {
      {"Definition 1 remark", "s*****s", "t******j"},
      {"Theorem 1 proof", "s***t*", "t**"},
      {"Theorem 1 proof", "s****t", "t****s"},
      {"Theorem 1 proof", "s******", "t***j"},
      {"Theorem 1 proof", "t*****", "s***t"},
      {"Theorem 2 proof", "i****i", "rs****t"},
      {"Theorem 2 proof", "j****j", "rt****s"},
      {"Theorem 4 proof", "****t**s", "t**s****"},
      {"Theorem 4 proof", "****s**t", "s**t****"},
      {"Theorem 4 proof", "****", "s****t"},
      {"Theorem 4 proof", "****", "t****s"},
      {"Theorem 4 proof", "s****t", "t****s"},
      {"Theorem 6 proof", "t***r", "r***t"},
      {"Theorem 6 proof", "t****s", "r****r"},
      {"Theorem 6 proof", "t**s****", "****t**s"},
      {"Theorem 6 proof", "t****s", "****"},
      {"Theorem 7 proof", "******", "i***s"},
      {"Theorem 7 proof", "*****", "r***r"},
      {"Theorem 7 proof", "****", "i****i"},
      {"Theorem 7 proof", "****", "r****r"},
      {"Theorem 7 proof", "s****t", "****"},
      {"Theorem 7 proof", "t****s", "****"},
      {"Theorem 7 proof", "i****i", "****"},
      {"Theorem 7 proof", "j****j", "****"},
      {"Theorem 7 proof", "r****r", "****"},
  };
  std::vector<ChainIdentity> out;
  for (const auto& r : rows) out.push_back({r.source, make_expr("f", r.lhs), make_expr("f", r.rhs)});
  return out;
}

std::vector<ChainIdentity> proof_chain_identities(const std::string& prefix) {
  std::vector<ChainIdentity> out;
  for (auto& id : proof_chain_identities())
    if (id.source.rfind(prefix, 0) == 0) out.push_back(std::move(id));
  return out;
}

IdentityReport check_identity(const ChainIdentity& identity, const MultiMap& f) {
  return equal(realize(identity.lhs, f), realize(identity.rhs, f));
}

bool CompletenessReport::completely_regular() const {
  for (const auto& r : against_fourth_adjoint)
    if (!r.equal) return false;
  return !against_fourth_adjoint.empty();
}

CompletenessReport complete_regularity(const MultiMap& f) {
  if (f.arity() != 3) throw Error(ErrorCode::ShapeMismatch, "complete regularity concerns tri-linear maps");
  CompletenessReport report;
  report.extensions = natural_extensions(f.name());
  const MultiMap reference = realize(make_expr(f.name(), "****"), f);
  for (const auto& ext : report.extensions) report.against_fourth_adjoint.push_back(equal(realize(ext.expr, f), reference));
  return report;
}

FactorizationReport factorization_check(const MultiMap& g_in, const MultiMap& h_in) {
  if (g_in.arity() != 3 || h_in.arity() != 1)
    throw Error(ErrorCode::ShapeMismatch, "expected tri-linear g and linear h");
  const MultiMap g = g_in.relabeled({"W", "X", "S", "Z"}).renamed("g");
  const MultiMap h = h_in.relabeled({"S", "Y"}).renamed("h");
  const MultiMap f = build_factored(g, h, 2).renamed("f");

  const MultiMap lhs = realize(make_expr("f", "t*****"), f);
  const MultiMap rhs = compose_output(realize(make_expr("h", "***"), h), realize(make_expr("g", "t*****"), g))
                           .renamed("h^{***} o g^{t*****}");
  const MultiMap ext = realize(make_expr("f", "t****s"), f);
  const MultiMap via_g = build_factored(realize(make_expr("g", "t****s"), g), realize(make_expr("h", "**"), h), 2)
                             .renamed("g^{t****s}(., h^{**}(.), .)");
  return {equal(lhs, rhs), equal(ext, via_g)};
}

TwoSidedFactorization two_sided_from_core(const MultiMap& core_in, const MultiMap& h1_in, const MultiMap& h2_in) {
  if (core_in.arity() != 3 || h1_in.arity() != 1 || h2_in.arity() != 1)
    throw Error(ErrorCode::ShapeMismatch, "expected a tri-linear core and two linear maps");
  const MultiMap core = core_in.relabeled({"W", "X", "S1", "S2"});
  const MultiMap h1 = h1_in.relabeled({"S1", "Y"}).renamed("h1");
  const MultiMap h2 = h2_in.relabeled({"S2", "Z"}).renamed("h2");
  MultiMap g = build_factored(core, h2, 3).relabeled({"W", "X", "S", "Z"}).renamed("g");
  MultiMap K = build_factored(core, h1, 2).relabeled({"W", "X", "Y", "S"}).renamed("K");
  MultiMap f = build_factored(g, h1.relabeled({"S", "Y"}), 2).renamed("f");
  return {std::move(f), std::move(g), std::move(K), h1.relabeled({"S", "Y"}), h2.relabeled({"S", "Z"})};
}

TwoSidedReport two_sided_check(const MultiMap& g_in, const MultiMap& K_in, const MultiMap& h1_in,
                                const MultiMap& h2_in) {
  const MultiMap g = g_in.relabeled({"W", "X", "S", "Z"}).renamed("g");
  const MultiMap K = K_in.relabeled({"W", "X", "Y", "S"}).renamed("K");
  const MultiMap h1 = h1_in.relabeled({"S", "Y"}).renamed("h1");
  const MultiMap h2 = h2_in.relabeled({"S", "Z"}).renamed("h2");

  const MultiMap from_g = build_factored(g, h1, 2).renamed("g(x,h1(y),z)");
  const MultiMap from_K = build_factored(K, h2, 3).renamed("K(x,y,h2(z))");
  TwoSidedReport report;
  report.sides_agree = equal(from_K, from_g);

  const MultiMap f = from_g.renamed("f");
  report.fifth = equal(realize(make_expr("f", "*****"), f),
                       compose_output(realize(make_expr("h2", "***"), h2), realize(make_expr("K", "*****"), K))
                           .renamed("h2^{***} o K^{*****}"));
  report.sixth = equal(realize(make_expr("f", "******"), f),
                       compose_output(realize(make_expr("h1", "***"), h1), realize(make_expr("g", "******"), g))
                           .renamed("h1^{***} o g^{******}"));
  return report;
}

}  // namespace arens
