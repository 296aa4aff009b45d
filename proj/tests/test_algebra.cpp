#include "arens/algebra.hpp"
#include "arens/error.hpp"
#include "arens/identities.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <array>
#include <functional>

using namespace arens;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidConfig;
}

}  // namespace

TEST_CASE("cyclic tables") {
  const auto z4 = CayleyTable::fixture("z4");
  CHECK(z4.order() == 4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.identity() == 0);
  CHECK(code_of([] { CayleyTable::fixture("z5"); }) == ErrorCode::UnknownFixture);
}

TEST_CASE("s3 matches brute-force permutation composition") {
  // elements listed in lexicographic order of their images
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const auto s3 = CayleyTable::fixture("s3");
  REQUIRE(s3.order() == 6);
  bool abelian = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int k = 0; k < 3; ++k) ab[k] = perms[a][perms[b][k]];
      CHECK(perms[s3.mul(a, b)] == ab);
      if (s3.mul(a, b) != s3.mul(b, a)) abelian = false;
    }
  CHECK_FALSE(abelian);
}

TEST_CASE("cayley table text format") {
  const auto t = CayleyTable::parse("group 2 0\n0 1\n1 0\n");
  CHECK(t.to_text() == CayleyTable::fixture("z2").to_text());
  CHECK(CayleyTable::parse(CayleyTable::fixture("s3").to_text()).to_text() == CayleyTable::fixture("s3").to_text());
  CHECK(code_of([] { CayleyTable::parse("group 2 0\n0 1\n1 1\n"); }) == ErrorCode::InvalidCayleyTable);
  CHECK(code_of([] { CayleyTable::parse("group 2 1\n0 1\n1 0\n"); }) == ErrorCode::InvalidCayleyTable);
  // Latin square with identity 0 that is not associative
  CHECK(code_of([] {
          CayleyTable::parse("group 5 0\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n");
        }) == ErrorCode::InvalidCayleyTable);
}

TEST_CASE("group algebra products on basis vectors") {
  const auto ga = group_algebra(CayleyTable::fixture("z2"));
  // delta_g * delta_g * delta_e = delta_e
  CHECK(evaluate(ga.triple, {{0, 1}, {0, 1}, {1, 0}}) == Vector{1, 0});
  CHECK(ga.algebra.mul({0, 1}, {0, 1}) == Vector{1, 0});
  const auto s3 = group_algebra(CayleyTable::fixture("s3"));
  const Vector u = random_vector(6, 1), v = random_vector(6, 2), w = random_vector(6, 3);
  CHECK(evaluate(s3.triple, {u, v, w}) == s3.algebra.mul(s3.algebra.mul(u, v), w));
  CHECK(s3.algebra.mul(u, v) != s3.algebra.mul(v, u));
}

TEST_CASE("group triple convolutions are completely regular") {
  for (const char* g : {"z2", "z3", "z4", "s3"}) {
    const auto report = complete_regularity(group_algebra(CayleyTable::fixture(g)).triple);
    CHECK_MESSAGE(report.completely_regular(), g);
    CHECK(report.extensions.size() == 6);
  }
}

TEST_CASE("matrix algebra") {
  const auto m2 = matrix_algebra(2);
  const Vector e11 = basis_vector(4, 0), e12 = basis_vector(4, 1), e21 = basis_vector(4, 2);
  CHECK(m2.mul(e11, e12) == e12);
  CHECK(m2.mul(e12, e11) == Vector(4, Rational(0)));
  CHECK(m2.mul(e12, e21) == e11);
  CHECK(m2.basis_names() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
}

TEST_CASE("derivations") {
  const auto poly = truncated_poly_algebra(3);
  CHECK(is_derivation(poly.algebra, poly.euler));
  // x d/dx on x^2 gives 2 x^2
  CHECK(evaluate(poly.euler, {{0, 0, 1}}) == Vector{0, 0, 2});
  const auto m2 = matrix_algebra(2);
  CHECK(is_derivation(m2, inner_derivation(m2, basis_vector(4, 1))));
  CHECK_FALSE(is_derivation(m2, identity_map(4)));
  CHECK(code_of([] { truncated_poly_algebra(1); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("algebra and module laws are validated") {
  // e0 e0 = e1, e1 e0 = e0: (e0 e0) e0 = e0 but e0 (e0 e0) = 0
  const MultiMap nonassoc = MultiMap::generate("pi", {2, 2}, 2, {}, [](const Index& i) -> Rational {
    return Rational((i[1] == 0 && i[2] == 0 && i[0] == 1) || (i[1] == 1 && i[2] == 0 && i[0] == 0) ? 1 : 0);
  });
  CHECK(code_of([&] { AlgebraModel(nonassoc, std::nullopt, {"a", "b"}); }) == ErrorCode::AlgebraLawViolated);
  const auto ga = group_algebra(CayleyTable::fixture("z2"));
  CHECK(code_of([&] { AlgebraModel(ga.algebra.multiplication(), Vector{0, 1}, {"e", "g"}); }) ==
        ErrorCode::AlgebraLawViolated);

  const auto regular = BanachModuleModel::regular(ga.algebra);
  CHECK(regular.carrier_dim() == 2);
  const MultiMap& pi = ga.algebra.multiplication();
  CHECK_NOTHROW(BanachModuleModel(ga.algebra, pi, MultiMap::zeros("zero", {2, 2}, 2)));
  CHECK(code_of([&] { BanachModuleModel(ga.algebra, Rational(2) * pi, pi); }) == ErrorCode::AlgebraLawViolated);
  CHECK(code_of([&] { BanachModuleModel(ga.algebra, identity_map(2), pi); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("Arens products of a finite-dimensional bilinear map agree") {
  RandomMapOptions o;
  o.arity = 2;
  o.input_dims = {2, 3};
  o.seed = 8;
  const MultiMap m = random_map(o).renamed("m");
  const auto p = arens_products(m);
  CHECK(p.first_is_m.equal);
  CHECK(p.second_is_m.equal);
  CHECK(regularity_check(m).equal);
  CHECK(oracle::same_entries(p.second, oracle::realize_by_formula("r***r", m)));
}

TEST_CASE("bridge from a tri-linear map to a bilinear slice") {
  RandomMapOptions o;
  o.input_dims = {2, 3, 2};
  o.codomain_dim = 3;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    o.seed = seed;
    const MultiMap f = random_map(o);
    const Vector w = random_vector(3, seed + 50);
    const auto r = theorem5_bridge(f, w);
    CHECK(r.ok());
    // m(y, z) = f^{s*}(w*, y, z) = <w*, f(x, y, z)> as a functional of x
    const Vector y = random_vector(3, seed + 60), z = random_vector(2, seed + 70);
    const Vector mx = evaluate(r.m, {y, z});
    for (std::size_t k = 0; k < 2; ++k)
      CHECK(mx[k] == oracle::dot(w, oracle::eval_map(f, {oracle::unit(2, k), y, z})));
  }
}

TEST_CASE("sample grid") {
  CHECK(sample_grid(1).size() == 4);
  CHECK(sample_grid(2).size() == 16);
  for (const auto& v : sample_grid(4)) {
    std::size_t support = 0;
    for (const auto& q : v) support += q != 0;
    CHECK(support <= 2);
  }
}

TEST_CASE("constraint validation for theta = f(x, y, m(x, y))") {
  RandomMapOptions o;
  o.seed = 4;
  const MultiMap f = random_map(o);
  const MultiMap zero_m = MultiMap::zeros("m", {2, 2}, 2);
  const MultiMap zero_theta = MultiMap::zeros("theta", {2, 2}, 2);
  const auto r = theorem6_check(f, zero_m, zero_theta);
  CHECK(r.samples == 256);
  CHECK(r.regularity.equal);
  CHECK(r.hypothesis_tr.equal);
  CHECK(r.hypothesis_mixed.equal);

  const MultiMap one("f", {1, 1, 1}, 1, {}, {Rational(1)});
  const MultiMap c("m", {1, 1}, 1, {}, {Rational(3)});
  CHECK(code_of([&] { theorem6_check(one, c, c.renamed("theta")); }) == ErrorCode::ConstraintViolated);
  CHECK(code_of([&] { theorem6_check(one, zero_m, zero_theta); }) == ErrorCode::DimensionMismatch);
}
