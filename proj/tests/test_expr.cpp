#include "arens/error.hpp"
#include "arens/expr.hpp"

#include <doctest.h>

#include <functional>

using namespace arens;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an arens::Error");
  return ErrorCode::InvalidConfig;
}

}  // namespace

TEST_CASE("parse accepts braced, caret and bare forms") {
  const ExprAst want{"f", {Op::FlipT, Op::Adjoint, Op::Adjoint, Op::Adjoint, Op::Adjoint, Op::FlipS}};
  CHECK(parse("f^{t****s}") == want);
  CHECK(parse("f^t****s") == want);
  CHECK(parse("ft****s") == want);
  CHECK(parse(" f ^ { t * * * * s } ") == want);
  CHECK(parse("f^{t****s}").str() == "f^{t****s}");
}

TEST_CASE("parse of a bare name has no ops") {
  const ExprAst e = parse("f");
  CHECK(e.base == "f");
  CHECK(e.ops.empty());
  CHECK(e.str() == "f");
  CHECK(parse("pi1^{***}").base == "pi1");
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse("f^{q}"); }) == ErrorCode::UnknownCharacter);
  CHECK(code_of([] { parse("f^{**x}"); }) == ErrorCode::UnknownCharacter);
  CHECK(code_of([] { parse("^{***}"); }) == ErrorCode::EmptyName);
  CHECK(code_of([] { parse(""); }) == ErrorCode::EmptyName);
  CHECK(code_of([] { parse("f^{**"); }) == ErrorCode::UnknownCharacter);
}

TEST_CASE("unknown character reports its position") {
  try {
    parse("f^{q}");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("flip permutations") {
  CHECK(FlipPerm::of(FlipKind::I).str() == "[2,1,3]");
  CHECK(FlipPerm::of(FlipKind::J).str() == "[1,3,2]");
  CHECK(FlipPerm::of(FlipKind::R).str() == "[3,2,1]");
  CHECK(FlipPerm::of(FlipKind::T).str() == "[3,1,2]");
  CHECK(FlipPerm::of(FlipKind::S).str() == "[2,3,1]");
  CHECK(FlipPerm::of(FlipKind::R, 2).str() == "[2,1]");
  CHECK(code_of([] { FlipPerm::of(FlipKind::I, 2); }) == ErrorCode::FlipArityMismatch);
}

TEST_CASE("flip composition is the S3 table") {
  const auto t = FlipPerm::of(FlipKind::T);
  const auto s = FlipPerm::of(FlipKind::S);
  const auto r = FlipPerm::of(FlipKind::R);
  const auto i = FlipPerm::of(FlipKind::I);
  CHECK(compose_flips(t, s).is_identity());
  CHECK(compose_flips(s, t).is_identity());
  CHECK(compose_flips(t, t) == s);
  CHECK(compose_flips(r, s) == i);
  CHECK(t.inverse() == s);
  for (const auto& p : all_flips()) {
    CHECK(compose_flips(p, p.inverse()).is_identity());
    CHECK(FlipPerm::from_sources({p.source(0) + 1, p.source(1) + 1, p.source(2) + 1}) == p);
  }
  CHECK(all_flips().size() == 6);
}

TEST_CASE("three flips of the same 3-cycle are the identity") {
  const auto s = FlipPerm::of(FlipKind::S);
  CHECK(compose_flips(compose_flips(s, s), s).is_identity());
  const auto steps = normalize(parse("f^{sss}"), 3);
  CHECK(steps.empty());
  CHECK(render_normal(normalize(parse("f^{ts****}"), 3)) == "****");
}

TEST_CASE("normalize merges flips between adjoints") {
  const auto steps = normalize(parse("f^{rs****t}"), 3);
  REQUIRE(steps.size() == 6);
  CHECK(std::get<FlipPerm>(steps.front()) == FlipPerm::of(FlipKind::I));
  CHECK(std::get<FlipPerm>(steps.back()) == FlipPerm::of(FlipKind::T));
  CHECK(code_of([] { normalize(parse("m^{i}"), 2); }) == ErrorCode::FlipArityMismatch);
}

TEST_CASE("signatures follow the adjoint rule") {
  const Signature base = default_signature(3);
  CHECK(base.str() == "X x Y x Z -> W");
  CHECK(signature_of(parse("f^{*}"), base).str() == "W* x X x Y -> Z*");
  CHECK(signature_of(parse("f^{**}"), base).str() == "Z** x W* x X -> Y*");
  CHECK(signature_of(parse("f^{***}"), base).str() == "Y** x Z** x W* -> X*");
  CHECK(signature_of(parse("f^{****}"), base).str() == "X** x Y** x Z** -> W**");
  CHECK(signature_of(parse("f^{t}"), base).str() == "Z x X x Y -> W");
  CHECK(signature_of(parse("f^{s}"), base).str() == "Y x Z x X -> W");
  CHECK(signature_of(parse("f^{t****s}"), base).str() == "X** x Y** x Z** -> W**");
  CHECK(signature_of(parse("m^{r***r}"), default_signature(2)).str() == "X** x Y** -> Z**");
  CHECK(signature_of(parse("h^{**}"), default_signature(1)).str() == "Y** -> S**");
}

TEST_CASE("natural extensions all land on X** x Y** x Z** -> W**") {
  for (const char* sup : {"i****i", "j****j", "r****r", "****", "t****s", "s****t"})
    CHECK(signature_of(make_expr("f", sup), default_signature(3)).str() == "X** x Y** x Z** -> W**");
}

TEST_CASE("flips on the wrong arity are rejected when typing") {
  CHECK(code_of([] { signature_of(parse("m^{i}"), default_signature(2)); }) == ErrorCode::FlipArityMismatch);
  CHECK(code_of([] { signature_of(parse("h^{r}"), default_signature(1)); }) == ErrorCode::FlipArityMismatch);
}
