#include "arens/fixtures.hpp"

#include "arens/algebra.hpp"
#include "arens/derivation.hpp"
#include "arens/error.hpp"

namespace arens {

MultiMap map_fixture(const std::string& name) {
  std::string group = name;
  if (const auto pos = group.find("-conv"); pos != std::string::npos && pos + 5 == group.size()) group.resize(pos);
  if (group == "z2" || group == "z3" || group == "z4" || group == "s3")
    return group_algebra(CayleyTable::fixture(group)).triple.renamed("f");
  if (name == "zero") return MultiMap::zeros("f", {2, 2, 2}, 2);
  if (name == "poly3-euler") return derivation_fixture(name).D.renamed("f");
  throw Error(ErrorCode::UnknownFixture, "no map fixture named '" + name + "'");
}

std::vector<std::string> map_fixture_names() {
  return {"z2", "z3", "z4", "s3", "z2-conv", "z3-conv", "z4-conv", "s3-conv", "poly3-euler", "zero"};
}

}  // namespace arens
