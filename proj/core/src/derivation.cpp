#include "arens/derivation.hpp"

#include "arens/error.hpp"

namespace arens {

namespace {

Vector add(Vector a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

void require_shape(const TriDerivationCandidate& c) {
  const std::size_t n = c.module.algebra().dim();
  if (c.D.arity() != 3 || c.D.input_dims() != std::vector<std::size_t>{n, n, n} ||
      c.D.codomain_dim() != c.module.carrier_dim())
    throw Error(ErrorCode::ShapeMismatch, "D must map A x A x A into the module carrier");
}

void record(DerivationIdentity& id, const Vector& lhs, const Vector& rhs, std::array<std::size_t, 4> quad) {
  if (!id.holds || lhs == rhs) return;
  id.holds = false;
  id.quadruple = quad;
  id.lhs = lhs;
  id.rhs = rhs;
}

bool all_equal(const std::vector<MultiMap>& maps) {
  for (std::size_t k = 1; k < maps.size(); ++k)
    if (!equal(maps[0], maps[k]).equal) return false;
  return true;
}

}  // namespace

bool DerivationReport::is_tri_derivation() const {
  for (const auto& id : identities)
    if (!id.holds) return false;
  return true;
}

std::string DerivationReport::str() const {
  std::string out;
  for (std::size_t k = 0; k < identities.size(); ++k) {
    const auto& id = identities[k];
    out += "identity " + std::to_string(k + 1) + ": " + (id.holds ? "holds" : "FAILS");
    if (id.quadruple) {
      const auto& q = *id.quadruple;
      out += " at (a,b,c,d) = (" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) +
             "," + std::to_string(q[3]) + "): " + format_vector(id.lhs) + " vs " + format_vector(id.rhs);
    }
    out += "\n";
  }
  return out;
}

DerivationReport is_tri_derivation(const TriDerivationCandidate& c) {
  require_shape(c);
  const std::size_t n = c.module.algebra().dim();
  const auto& alg = c.module.algebra();
  const auto& pi1 = c.module.left();
  const auto& pi2 = c.module.right();
  auto D = [&](const Vector& a, const Vector& b, const Vector& cc) { return evaluate(c.D, {a, b, cc}); };

  std::vector<Vector> e;
  for (std::size_t k = 0; k < n; ++k) e.push_back(basis_vector(n, k));

  DerivationReport report;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        const Vector dabc = D(e[a], e[b], e[cc]);
        for (std::size_t d = 0; d < n; ++d) {
          ++report.quadruples;
          const Vector common = evaluate(pi2, {dabc, e[d]});
          const std::array<std::size_t, 4> quad{a, b, cc, d};
          record(report.identities[0], D(alg.mul(e[a], e[d]), e[b], e[cc]),
                 add(common, evaluate(pi1, {e[a], D(e[d], e[b], e[cc])})), quad);
          record(report.identities[1], D(e[a], alg.mul(e[b], e[d]), e[cc]),
                 add(common, evaluate(pi1, {e[b], D(e[a], e[d], e[cc])})), quad);
          record(report.identities[2], D(e[a], e[b], alg.mul(e[cc], e[d])),
                 add(common, evaluate(pi1, {e[cc], D(e[a], e[b], e[d])})), quad);
        }
      }
  return report;
}

MultiMap phi_a(const TriDerivationCandidate& c, const Vector& a) {
  require_shape(c);
  const std::size_t n = c.module.algebra().dim();
  if (a.size() != n) throw Error(ErrorCode::DimensionMismatch, "a must lie in A");
  // D(a, ., .): (b, c) -> X
  const MultiMap fixed = contract_slot(c.D, 1, a);
  const MultiMap& pi2 = c.module.right();
  const std::size_t x = c.module.carrier_dim();
  return MultiMap::generate("phi_a", {n, n, n}, x, {"X", "c", "b", "d"}, [&](const Index& idx) -> Rational {
    // idx = (o; c, b, d)
    Rational sum = 0;
    for (std::size_t k = 0; k < x; ++k) {
      const Rational& dv = fixed.at({k, idx[2], idx[1]});
      if (dv != 0) sum += dv * pi2.at({idx[0], k, idx[3]});
    }
    return sum;
  });
}

MultiMap psi_xstar(const TriDerivationCandidate& c, const Vector& xstar) {
  require_shape(c);
  if (xstar.size() != c.module.carrier_dim()) throw Error(ErrorCode::DimensionMismatch, "x* must lie in X*");
  const MultiMap D = c.D.relabeled({"X", "A1", "A2", "A3"});
  const MultiMap pi1 = c.module.left().relabeled({"Xout", "A", "X"});
  // pi1^*(x*, .): A -> X*, then D^*(., a, d) with that functional substituted in slot 1.
  const MultiMap pi1_at = contract_slot(adjoint(pi1), 1, xstar);
  const MultiMap by_b = build_factored(adjoint(D), pi1_at.relabeled({"X", "A"}), 1);  // (b, a, d)
  return flip(by_b, FlipPerm::of(FlipKind::S)).relabeled({"A*", "a", "d", "b"}).renamed("psi_x*");
}

std::vector<StandardArgumentItem> standard_argument_checks(const TriDerivationCandidate& c) {
  require_shape(c);
  const std::size_t n = c.module.algebra().dim();
  const std::size_t x = c.module.carrier_dim();

  const bool pi2_regular = regularity_check(c.module.right()).equal;
  auto D_eq = [&](const char* lhs, const char* rhs) {
    return equal(realize(make_expr("D", lhs), c.D), realize(make_expr("D", rhs), c.D)).equal;
  };
  const bool j_is_four = D_eq("j****j", "****");
  const bool j_is_i = D_eq("j****j", "i****i");
  const bool j_is_st = D_eq("j****j", "s****t");

  std::vector<StandardArgumentItem> items(4);
  items[0] = {1, "pi2 Arens regular", pi2_regular, {{"****", "t****s"}, {"r****r", "i****i"}}, 0, true};
  items[1] = {2, "D^{j****j} = D^{****}", j_is_four, {{"****", "i****i"}, {"r****r", "t****s"}}, 0, true};
  items[2] = {3, "D^{j****j} = D^{i****i} or D^{j****j} = D^{s****t}", j_is_i || j_is_st, {{"****", "i****i"}}, 0, true};
  items[3] = {4, "pi2 Arens regular and D^{j****j} = D^{****}", pi2_regular && j_is_four, {{"****", "r****r"}}, 0, true};

  std::vector<MultiMap> maps;
  for (std::size_t k = 0; k < n; ++k) maps.push_back(phi_a(c, basis_vector(n, k)));
  for (std::size_t k = 0; k < x; ++k) maps.push_back(psi_xstar(c, basis_vector(x, k)));

  for (auto& item : items)
    for (const auto& m : maps)
      for (const auto& [lhs, rhs] : item.conclusions) {
        ++item.checks;
        if (!equal(realize(make_expr("phi", lhs), m), realize(make_expr("phi", rhs), m)).equal)
          item.conclusions_hold = false;
      }
  return items;
}

FourthAdjointReport theorem8_check(const TriDerivationCandidate& c) {
  if (!is_tri_derivation(c).is_tri_derivation())
    throw Error(ErrorCode::AlgebraLawViolated, "'" + c.name + "' is not a tri-derivation");
  const std::size_t n = c.module.algebra().dim();
  const std::size_t x = c.module.carrier_dim();

  FourthAdjointReport report;
  const MultiMap D4 = realize(make_expr("D", "****"), c.D);
  auto extended = [&](const char* bilinear_ext) {
    const MultiMap pi = realize(make_expr("pi", bilinear_ext), c.module.algebra().multiplication());
    const MultiMap pi1 = realize(make_expr("pi1", bilinear_ext), c.module.left());
    const MultiMap pi2 = realize(make_expr("pi2", bilinear_ext), c.module.right());
    AlgebraModel algebra(pi, c.module.algebra().unit(), c.module.algebra().basis_names());
    return TriDerivationCandidate{c.name + "^{****}", D4, BanachModuleModel(std::move(algebra), pi1, pi2)};
  };
  report.first_product = is_tri_derivation(extended("***"));
  report.second_product = is_tri_derivation(extended("r***r"));

  report.phi_conditions = true;
  for (std::size_t k = 0; k < n; ++k) {
    const MultiMap phi = phi_a(c, basis_vector(n, k));
    std::vector<MultiMap> ext;
    for (const char* sup : {"r****r", "i****i", "s****t"}) ext.push_back(realize(make_expr("phi", sup), phi));
    ++report.phi_checks;
    report.phi_conditions = report.phi_conditions && all_equal(ext);
  }
  report.psi_conditions = true;
  for (std::size_t k = 0; k < x; ++k) {
    const MultiMap psi = psi_xstar(c, basis_vector(x, k));
    std::vector<MultiMap> ext;
    for (const char* sup : {"j****j", "t****s", "****"}) ext.push_back(realize(make_expr("psi", sup), psi));
    ++report.psi_checks;
    report.psi_conditions = report.psi_conditions && all_equal(ext);
  }
  report.note =
      "bidual products: first Arens product (box) and second (diamond) both collapse to pi in the reflexive model";
  return report;
}

// --- candidates -----------------------------------------------------------------

TriDerivationCandidate product_candidate(std::string name, const AlgebraModel& algebra, const MultiMap& delta) {
  const std::size_t n = algebra.dim();
  std::vector<Vector> images;
  for (std::size_t k = 0; k < n; ++k) images.push_back(evaluate(delta, {basis_vector(n, k)}));
  MultiMap D = MultiMap::generate("D", {n, n, n}, n, {}, [&](const Index& idx) -> Rational {
    return algebra.mul(algebra.mul(images[idx[1]], images[idx[2]]), images[idx[3]])[idx[0]];
  });
  return {std::move(name), std::move(D), BanachModuleModel::regular(algebra)};
}

TriDerivationCandidate leibniz_sum_candidate(std::string name, const AlgebraModel& algebra, const MultiMap& delta) {
  const std::size_t n = algebra.dim();
  MultiMap D = MultiMap::generate("D", {n, n, n}, n, {}, [&](const Index& idx) -> Rational {
    const Vector a = basis_vector(n, idx[1]), b = basis_vector(n, idx[2]), c = basis_vector(n, idx[3]);
    const Vector da = evaluate(delta, {a}), db = evaluate(delta, {b}), dc = evaluate(delta, {c});
    Vector sum = algebra.mul(algebra.mul(da, b), c);
    sum = add(std::move(sum), algebra.mul(algebra.mul(a, db), c));
    sum = add(std::move(sum), algebra.mul(algebra.mul(a, b), dc));
    return sum[idx[0]];
  });
  return {std::move(name), std::move(D), BanachModuleModel::regular(algebra)};
}

TriDerivationCandidate zero_candidate(std::string name, const AlgebraModel& algebra) {
  const std::size_t n = algebra.dim();
  return {std::move(name), MultiMap::zeros("D", {n, n, n}, n), BanachModuleModel::regular(algebra)};
}

TriDerivationCandidate derivation_fixture(const std::string& name) {
  if (name == "zero") return zero_candidate(name, truncated_poly_algebra(3).algebra);
  if (name == "poly3-euler") {
    const PolyAlgebra poly = truncated_poly_algebra(3);
    return product_candidate(name, poly.algebra, poly.euler);
  }
  if (name == "poly3-leibniz-sum") {
    const PolyAlgebra poly = truncated_poly_algebra(3);
    return leibniz_sum_candidate(name, poly.algebra, poly.euler);
  }
  if (name == "z3-conv") return zero_candidate(name, group_algebra(CayleyTable::fixture("z3")).algebra);
  if (name == "m2-leibniz") {
    const AlgebraModel m2 = matrix_algebra(2);
    return product_candidate(name, m2, inner_derivation(m2, basis_vector(4, 1)));  // ad(E12)
  }
  throw Error(ErrorCode::UnknownFixture, "no derivation fixture named '" + name + "'");
}

std::vector<std::string> derivation_fixture_names() {
  return {"zero", "poly3-euler", "z3-conv", "poly3-leibniz-sum", "m2-leibniz"};
}

}  // namespace arens
