#include "arens/multimap_io.hpp"

#include "arens/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace arens {

using nlohmann::json;

std::string to_json(const MultiMap& m) {
  json doc;
  doc["name"] = m.name();
  doc["arity"] = m.arity();
  doc["input_dims"] = m.input_dims();
  doc["codomain_dim"] = m.codomain_dim();
  doc["axis_labels"] = m.axis_labels();
  json entries = json::array();
  for (const auto& q : m.entries()) entries.push_back(format_rational(q));
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

LoadedMap from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidFormat, std::string("malformed JSON: ") + e.what());
  }
  try {
    const auto arity = doc.at("arity").get<std::size_t>();
    auto dims = doc.at("input_dims").get<std::vector<std::size_t>>();
    if (dims.size() != arity)
      throw Error(ErrorCode::InvalidFormat, "arity " + std::to_string(arity) + " but " +
                                                std::to_string(dims.size()) + " input dims");
    LoadedMap out;
    std::vector<Rational> entries;
    for (const auto& e : doc.at("entries")) {
      if (e.is_string()) {
        entries.push_back(parse_rational(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        entries.emplace_back(parse_rational(e.dump()));
      } else if (e.is_number_float()) {
        entries.emplace_back(e.get<double>());
        out.from_float = true;
      } else {
        throw Error(ErrorCode::InvalidFormat, "entry is not a number: " + e.dump());
      }
    }
    auto labels = doc.contains("axis_labels") ? doc["axis_labels"].get<std::vector<std::string>>()
                                              : std::vector<std::string>{};
    out.map = MultiMap(doc.value("name", std::string("f")), std::move(dims), doc.at("codomain_dim").get<std::size_t>(),
                       std::move(labels), std::move(entries));
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidFormat, std::string("bad map document: ") + e.what());
  }
}

void save_map(const MultiMap& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidFormat, "cannot write " + path.string());
  out << to_json(m);
}

LoadedMap load_map(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidFormat, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

Rational float_tolerance() { return Rational(1, 1000000000); }

}  // namespace arens
