#include "arens/semantics.hpp"

#include <doctest.h>

#include <set>

using namespace arens;

namespace {

std::string order(const char* sup) {
  const auto o = limit_order(make_expr("f", sup));
  return o ? o->str() : "none";
}

std::string verdict(const char* a, const char* b) { return classify(parse(a), parse(b)).str(); }

}  // namespace

TEST_CASE("limit orders of the six natural extensions") {
  CHECK(order("i****i") == "(in2, in1, in3)");
  CHECK(order("j****j") == "(in1, in3, in2)");
  CHECK(order("r****r") == "(in3, in2, in1)");
  CHECK(order("****") == "(in1, in2, in3)");
  CHECK(order("t****s") == "(in3, in1, in2)");
  CHECK(order("s****t") == "(in2, in3, in1)");
}

TEST_CASE("limit order depends only on the leading flip") {
  CHECK(order("rs****t") == order("i****i"));
  CHECK(order("rt****s") == order("j****j"));
  CHECK(order("i****") == order("i****i"));
  CHECK(order("***") == "none");
  CHECK(order("*****") == "none");
  CHECK(order("t***s") == "none");
}

TEST_CASE("limit order spelled in net indices") {
  CHECK(order_of_flip(FlipPerm::identity(3)).limits() == "lim_a lim_b lim_g");
}

TEST_CASE("the six orders are distinct") {
  std::set<LimitOrder> seen;
  for (const auto& e : natural_extensions()) seen.insert(e.order);
  CHECK(seen.size() == 6);
  for (const auto& e : natural_extensions()) CHECK(extension_with_order(e.order).expr == e.expr);
}

TEST_CASE("axis semantics of single adjoints") {
  CHECK(axis_semantics(parse("f")).str() == "(in1, in2, in3) -> out");
  CHECK(axis_semantics(parse("f^{*}")).str() == "(out*, in1, in2) -> in3*");
  CHECK(axis_semantics(parse("f^{******}")) == axis_semantics(parse("f^{i***s}")));
  CHECK(axis_semantics(parse("f^{s*****s}")) == axis_semantics(parse("f^{t******j}")));
}

TEST_CASE("classify reproduces the defining condition") {
  CHECK(verdict("f^{t****s}", "f^{s****t}") == "EQUAL-IFF close-to-regular(f)");
  CHECK(verdict("f^{s****t}", "f^{t****s}") == "EQUAL-IFF close-to-regular(f)");
  CHECK(verdict("f^{i****i}", "f^{rs****t}") == "UNCOND-EQUAL");
  CHECK(verdict("f^{j****j}", "f^{rt****s}") == "UNCOND-EQUAL");
  CHECK(verdict("f", "f") == "UNCOND-EQUAL");
  CHECK(verdict("f^{sss}", "f") == "UNCOND-EQUAL");
}

TEST_CASE("classify names close-to-regularity of flips") {
  CHECK(verdict("f^{i****i}", "f^{j****j}") == "EQUAL-IFF close-to-regular(f^r)");
  CHECK(verdict("f^{j****j}", "f^{r****r}") == "EQUAL-IFF close-to-regular(f^i)");
  CHECK(verdict("f^{i****i}", "f^{r****r}") == "EQUAL-IFF close-to-regular(f^j)");
  CHECK(verdict("f^{s****t}", "f^{****}") == "EQUAL-IFF close-to-regular(f^t)");
  CHECK(verdict("f^{t****s}", "f^{****}") == "EQUAL-IFF close-to-regular(f^s)");
}

TEST_CASE("classify: distinct signatures and incomparable pairs") {
  CHECK(verdict("f^{*}", "f^{**}") == "DISTINCT");
  CHECK(verdict("f^{****}", "f^{***}") == "DISTINCT");
  CHECK(verdict("f", "g") == "NOT-COMPARABLE");
  CHECK(verdict("f^{t}", "f") == "NOT-COMPARABLE");
}

TEST_CASE("classify on bilinear maps names Arens regularity") {
  CHECK(classify(parse("m^{***}"), parse("m^{r***r}"), default_signature(2)).str() == "EQUAL-IFF arens-regular(m)");
}

TEST_CASE("the five flip correspondences") {
  const auto all = verify_flip_equivalences();
  REQUIRE(all.size() == 5);
  for (const auto& eq : all) CHECK_MESSAGE(eq.matches, eq.statement());
  CHECK(all.front().statement() == "close-to-regular(f^r) <=> f^{j****j} = f^{i****i}");
}

TEST_CASE("condition lattice") {
  const auto full = Condition::completely_regular();
  CHECK(full.equalities.size() == 15);
  for (const auto& p : all_flips()) CHECK(entails(full, Condition::close_to_regular(p)));
  const auto plain = Condition::close_to_regular(FlipPerm::identity(3));
  CHECK_FALSE(entails(plain, full));
  CHECK_FALSE(entails(plain, Condition::close_to_regular(FlipPerm::of(FlipKind::T))));

  Condition both = Condition::close_to_regular(FlipPerm::of(FlipKind::S));
  for (const auto& e : Condition::close_to_regular(FlipPerm::of(FlipKind::T)).equalities) both.equalities.push_back(e);
  CHECK(entails(both, plain));
}

TEST_CASE("condition names are symmetric") {
  const auto exts = natural_extensions();
  for (const auto& a : exts)
    for (const auto& b : exts)
      if (a.order != b.order) CHECK(condition_name({a.order, b.order}) == condition_name({b.order, a.order}));
}
