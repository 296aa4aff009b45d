#pragma once

// The full verification run behind `arens report`: every check is tied to the
// statement it exercises and rendered as a markdown traceability table.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arens {

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  std::array<std::size_t, 4> dims{2, 2, 2, 2};  // dim X, Y, Z, W
  std::vector<std::string> fixtures{"z2", "z3", "z4", "s3", "poly3-euler", "zero"};
  std::optional<std::string> out;

  /// Throws InvalidConfig.
  void validate() const;
};

/// Parses `dx,dy,dz,dw`; throws InvalidConfig.
std::array<std::size_t, 4> parse_dims(const std::string& text);

struct ReportRow {
  std::string item;  // the statement exercised
  std::string test;
  bool pass = false;
  std::string detail;
};

struct GroupRow {
  std::string fixture;
  std::size_t order = 0;
  bool completely_regular = false;
  bool triple_is_product = false;
  bool arens_regular = false;
};

struct Report {
  RunConfig config;
  std::vector<ReportRow> rows;
  std::vector<GroupRow> groups;

  bool all_pass() const;
  std::size_t failures() const;
  std::string markdown() const;
};

/// Deterministic in `config.seed`.
Report run_report(const RunConfig& config);

}  // namespace arens
