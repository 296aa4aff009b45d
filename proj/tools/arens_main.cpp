#include "arens/error.hpp"
#include "arens/expr.hpp"
#include "arens/fixtures.hpp"
#include "arens/multimap_io.hpp"
#include "arens/report.hpp"
#include "arens/semantics.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kPass = 0;
constexpr int kIdentityFailed = 1;
constexpr int kUsageError = 2;

int cmd_parse(const std::string& text, int arity) {
  const arens::ExprAst ast = arens::parse(text);
  const arens::Signature sig = arens::signature_of(ast, arens::default_signature(arity));
  std::cout << "expr: " << ast.str() << "\n";
  std::cout << "base: " << ast.base << "\n";
  std::cout << "ops: " << (ast.superscript().empty() ? "(none)" : ast.superscript()) << "\n";
  std::cout << "normal form: " << arens::render_normal(arens::normalize(ast, arity)) << "\n";
  if (arity == 3) {
    const auto order = arens::limit_order(ast);
    std::cout << "limit order: " << (order ? order->str() : "none") << "\n";
    std::cout << "axes: " << arens::axis_semantics(ast, arity).str() << "\n";
  }
  std::cout << "signature: " << sig.str() << "\n";
  return kPass;
}

int cmd_classify(const std::string& lhs, const std::string& rhs, int arity) {
  std::cout << arens::classify(arens::parse(lhs), arens::parse(rhs), arens::default_signature(arity)).str() << "\n";
  return kPass;
}

struct CheckOptions {
  std::string lhs;
  std::string rhs;
  std::vector<std::string> maps;
  std::string fixture;
  std::uint64_t seed = 1;
  std::string dims = "2,2,2,2";
};

int cmd_check(const CheckOptions& o) {
  if (o.maps.size() > 2) throw arens::Error(arens::ErrorCode::InvalidConfig, "--map may be given at most twice");
  if (!o.maps.empty() && !o.fixture.empty())
    throw arens::Error(arens::ErrorCode::InvalidConfig, "--map and --fixture are exclusive");

  arens::MultiMap first, second;
  bool from_float = false;
  if (!o.maps.empty()) {
    const auto a = arens::load_map(o.maps.front());
    const auto b = o.maps.size() == 2 ? arens::load_map(o.maps.back()) : a;
    first = a.map;
    second = b.map;
    from_float = a.from_float || b.from_float;
  } else if (!o.fixture.empty()) {
    first = second = arens::map_fixture(o.fixture);
  } else {
    const auto d = arens::parse_dims(o.dims);
    arens::RandomMapOptions r;
    r.input_dims = {d[0], d[1], d[2]};
    r.codomain_dim = d[3];
    r.seed = o.seed;
    first = second = arens::random_map(r);
  }

  const arens::ExprAst lhs = arens::parse(o.lhs);
  const arens::ExprAst rhs = arens::parse(o.rhs);
  const arens::Rational tolerance = from_float ? arens::float_tolerance() : arens::Rational(0);
  const auto report = arens::equal(arens::realize(lhs, first), arens::realize(rhs, second), tolerance);
  std::cout << report.str() << "\n";
  return report.equal ? kPass : kIdentityFailed;
}

int cmd_report(arens::RunConfig config, const std::string& dims, const std::vector<std::string>& fixtures) {
  if (!dims.empty()) config.dims = arens::parse_dims(dims);
  if (!fixtures.empty()) config.fixtures = fixtures;
  config.validate();
  const arens::Report report = arens::run_report(config);
  const std::string text = report.markdown();
  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) throw arens::Error(arens::ErrorCode::InvalidConfig, "cannot write '" + *config.out + "'");
    file << text;
    if (!file) throw arens::Error(arens::ErrorCode::InvalidConfig, "write to '" + *config.out + "' failed");
    std::cout << report.rows.size() - report.failures() << "/" << report.rows.size() << " checks passed\n";
  } else {
    std::cout << text;
  }
  return report.all_pass() ? kPass : kIdentityFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjoint and flip calculus of multilinear maps"};
  app.require_subcommand(1);

  int arity = 3;
  std::string expr, lhs, rhs;

  auto* parse = app.add_subcommand("parse", "Print the AST, normal form and signature of an expression");
  parse->add_option("expr", expr, "Expression such as f^{s****t}")->required();
  parse->add_option("--arity", arity, "Arity of the base map")->check(CLI::IsMember({2, 3}));

  auto* classify = app.add_subcommand("classify", "Decide whether two expressions are equal");
  classify->add_option("lhs", lhs)->required();
  classify->add_option("rhs", rhs)->required();
  classify->add_option("--arity", arity, "Arity of the base map")->check(CLI::IsMember({2, 3}));

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Compare two expressions numerically on a tensor");
  check->add_option("lhs", check_opts.lhs)->required();
  check->add_option("rhs", check_opts.rhs)->required();
  check->add_option("--map", check_opts.maps, "MultiMap JSON file; give twice for separate operands");
  check->add_option("--fixture", check_opts.fixture, "Named map fixture");
  check->add_option("--seed", check_opts.seed, "Seed of the random map used when no map is given");
  check->add_option("--dims", check_opts.dims, "dx,dy,dz,dw of the random map");

  arens::RunConfig config;
  std::string report_dims;
  std::vector<std::string> report_fixtures;
  std::string out;
  auto* report = app.add_subcommand("report", "Run the verification suite and emit a markdown report");
  report->add_option("--seed", config.seed);
  report->add_option("--trials", config.trials);
  report->add_option("--dims", report_dims, "dx,dy,dz,dw");
  report->add_option("--fixture", report_fixtures, "Fixture to include (repeatable)");
  report->add_option("--out", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsageError;
  }

  try {
    if (*parse) return cmd_parse(expr, arity);
    if (*classify) return cmd_classify(lhs, rhs, arity);
    if (*check) return cmd_check(check_opts);
    if (!out.empty()) config.out = out;
    return cmd_report(config, report_dims, report_fixtures);
  } catch (const arens::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
