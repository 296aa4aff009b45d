#include "arens/report.hpp"

#include "arens/algebra.hpp"
#include "arens/derivation.hpp"
#include "arens/error.hpp"
#include "arens/identities.hpp"
#include "arens/semantics.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace arens {

namespace {

const std::set<std::string> kGroupFixtures{"z2", "z3", "z4", "s3"};

bool known_fixture(const std::string& name) {
  const auto d = derivation_fixture_names();
  return kGroupFixtures.count(name) || std::find(d.begin(), d.end(), name) != d.end();
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t trial, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1) + 0xBF58476D1CE4E5B9ull * salt;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

MultiMap random_of(std::vector<std::size_t> dims, std::size_t cod, std::uint64_t seed, std::string name) {
  RandomMapOptions o;
  o.arity = dims.size();
  o.input_dims = std::move(dims);
  o.codomain_dim = cod;
  o.seed = seed;
  o.name = std::move(name);
  return random_map(o);
}

struct Tally {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what) {
    ++total;
    if (ok) ++passed;
    else if (first_failure.empty()) first_failure = what;
  }
  ReportRow row(std::string item, std::string test) const {
    std::string detail = std::to_string(passed) + "/" + std::to_string(total);
    if (!first_failure.empty()) detail += "; first failure: " + first_failure;
    return {std::move(item), std::move(test), passed == total && total > 0, detail};
  }
};

std::string escape_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += "; ";
    else out += c;
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

}  // namespace

std::array<std::size_t, 4> parse_dims(const std::string& text) {
  std::array<std::size_t, 4> dims{};
  std::stringstream ss(text);
  std::string part;
  std::size_t k = 0;
  while (std::getline(ss, part, ',')) {
    if (k == 4) throw Error(ErrorCode::InvalidConfig, "--dims takes exactly four values, got '" + text + "'");
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidConfig, "--dims value '" + part + "' is not a positive integer");
    dims[k++] = std::stoul(part);
  }
  if (k != 4) throw Error(ErrorCode::InvalidConfig, "--dims takes exactly four values, got '" + text + "'");
  return dims;
}

void RunConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be at least 1");
  for (auto d : dims)
    if (d < 1 || d > 6) throw Error(ErrorCode::InvalidConfig, "dimensions must lie in [1, 6], got " + std::to_string(d));
  for (const auto& f : fixtures)
    if (!known_fixture(f)) throw Error(ErrorCode::InvalidConfig, "unknown fixture '" + f + "'");
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; }));
}

std::string Report::markdown() const {
  std::ostringstream out;
  const auto& d = config.dims;
  out << "# Adjoint calculus verification report\n\n";
  out << "- seed: " << config.seed << "\n";
  out << "- trials: " << config.trials << "\n";
  out << "- dims: X=" << d[0] << ", Y=" << d[1] << ", Z=" << d[2] << ", W=" << d[3] << "\n";
  out << "- fixtures:";
  for (const auto& f : config.fixtures) out << " " << f;
  out << "\n\n## Traceability\n\n";
  out << "| Paper item | Test | Result | Detail |\n|---|---|---|---|\n";
  for (const auto& r : rows)
    out << "| " << escape_cell(r.item) << " | " << escape_cell(r.test) << " | " << (r.pass ? "PASS" : "FAIL") << " | "
        << escape_cell(r.detail) << " |\n";
  if (!groups.empty()) {
    out << "\n## Example 1 (finite G)\n\n";
    out << "| Fixture | Order | Triple product completely regular | Triple = (ab)c | l1(G) Arens regular |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& g : groups)
      out << "| " << g.fixture << " | " << g.order << " | " << (g.completely_regular ? "yes" : "no") << " | "
          << (g.triple_is_product ? "yes" : "no") << " | " << (g.arens_regular ? "yes" : "no") << " |\n";
  }
  out << "\n## Summary\n\n" << rows.size() - failures() << "/" << rows.size() << " checks passed.\n";
  return out.str();
}

Report run_report(const RunConfig& config) {
  config.validate();
  Report report;
  report.config = config;
  auto& rows = report.rows;
  const auto [dx, dy, dz, dw] = config.dims;
  const std::uint64_t seed = config.seed;

  {
    static const std::pair<const char*, const char*> golden[] = {
        {"i", "(in2, in1, in3)"}, {"j", "(in1, in3, in2)"}, {"r", "(in3, in2, in1)"},
        {"id", "(in1, in2, in3)"}, {"t", "(in3, in1, in2)"}, {"s", "(in2, in3, in1)"}};
    Tally t;
    const auto exts = natural_extensions();
    for (std::size_t k = 0; k < exts.size(); ++k) {
      const auto got = exts[k].order.str();
      t.add(got == golden[k].second, exts[k].expr.str() + " gave " + got);
    }
    rows.push_back(t.row("Natural extensions (limit orders)", "six canonical extensions, golden order table"));
  }

  {
    Tally t;
    for (const auto& eq : verify_flip_equivalences()) t.add(eq.matches, eq.statement());
    rows.push_back(t.row("Theorem 2 (1)-(5)", "flip correspondences derived from limit orders"));
  }

  {
    Tally t;
    const Signature sig = default_signature(3);
    for (const auto& id : proof_chain_identities("Theorem 2 proof")) {
      const auto v = classify(id.lhs, id.rhs, sig);
      t.add(v.kind == Verdict::Kind::UnconditionallyEqual, id.lhs.str() + " = " + id.rhs.str() + ": " + v.str());
    }
    rows.push_back(t.row("Theorem 2 proof", "rewritten extensions classify UNCOND-EQUAL"));
  }

  {
    Tally t;
    const auto full = Condition::completely_regular();
    for (const auto& p : all_flips()) t.add(entails(full, Condition::close_to_regular(p)), "f^" + p.name());
    rows.push_back(t.row("Corollary 2", "complete regularity entails close-to-regularity of every flip"));

    Tally u;
    Condition st;
    for (const auto& p : {FlipPerm::of(FlipKind::S), FlipPerm::of(FlipKind::T)})
      for (const auto& e : Condition::close_to_regular(p).equalities) st.equalities.push_back(e);
    u.add(entails(st, Condition::close_to_regular(FlipPerm::identity(3))), "close-to-regular(f)");
    u.add(!entails(Condition::close_to_regular(FlipPerm::identity(3)), Condition::completely_regular()),
          "close-to-regular(f) alone is weaker than complete regularity");
    rows.push_back(u.row("Corollary 3", "close-to-regular(f^s) and close-to-regular(f^t) entail close-to-regular(f)"));
  }

  {
    Tally t;
    for (std::size_t k = 0; k < config.trials; ++k) {
      const MultiMap f = random_of({dx, dy, dz}, dw, mix(seed, k, 1), "f");
      t.add(complete_regularity(f).completely_regular(), "trial " + std::to_string(k));
    }
    rows.push_back(t.row("Corollaries 1, 7, 8", "random tri-linear maps are completely regular"));
  }

  for (const char* source :
       {"Definition 1 remark", "Theorem 1 proof", "Theorem 4 proof", "Theorem 6 proof", "Theorem 7 proof"}) {
    Tally t;
    const auto ids = proof_chain_identities(source);
    for (std::size_t k = 0; k < config.trials; ++k) {
      const MultiMap f = random_of({dx, dy, dz}, dw, mix(seed, k, 2), "f");
      for (const auto& id : ids) {
        const auto r = check_identity(id, f);
        t.add(r.equal, r.str());
      }
    }
    rows.push_back(t.row(source, std::to_string(ids.size()) + (ids.size() == 1 ? " displayed identity" : " displayed identities") + " on random maps"));
  }

  {
    Tally t;
    for (std::size_t k = 0; k < config.trials; ++k) {
      const MultiMap g = random_of({dx, 2, dz}, dw, mix(seed, k, 3), "g");
      const MultiMap h = random_of({dy}, 2, mix(seed, k, 4), "h");
      const auto r = factorization_check(g, h);
      t.add(r.ok(), r.sixth_adjoint.equal ? r.extension.str() : r.sixth_adjoint.str());
    }
    rows.push_back(t.row("Theorem 3, Corollary 5", "f = g(x, h(y), z) on random g, h"));
  }

  {
    Tally t;
    for (std::size_t k = 0; k < config.trials; ++k) {
      const MultiMap core = random_of({dx, 2, 2}, dw, mix(seed, k, 5), "core");
      const MultiMap h1 = random_of({dy}, 2, mix(seed, k, 6), "h1");
      const MultiMap h2 = random_of({dz}, 2, mix(seed, k, 7), "h2");
      const auto fac = two_sided_from_core(core, h1, h2);
      const auto r = two_sided_check(fac.g, fac.K, fac.h1, fac.h2);
      t.add(r.ok(), r.fifth.equal ? r.sixth.str() : r.fifth.str());
    }
    rows.push_back(t.row("Corollary 9", "two-sided factorization on random core, h1, h2"));
  }

  {
    Tally t;
    for (std::size_t k = 0; k < config.trials; ++k) {
      const MultiMap f = random_of({dx, dy, dz}, dw, mix(seed, k, 8), "f");
      const auto r = theorem5_bridge(f, random_vector(dw, mix(seed, k, 9)));
      t.add(r.ok(), r.double_extension.str());
    }
    rows.push_back(t.row("Theorem 5", "bilinear slice m of f^{s*}: f^{s******} at w* equals m^{****}"));
  }

  {
    Tally t;
    for (std::size_t k = 0; k < config.trials; ++k) {
      const MultiMap f = random_of({dx, dy, dz}, dw, mix(seed, k, 10), "f");
      const MultiMap m = MultiMap::zeros("m", {dx, dy}, dz);
      const MultiMap theta = MultiMap::zeros("theta", {dx, dy}, dw);
      const auto r = theorem6_check(f, m, theta);
      t.add(!(r.hypothesis_tr.equal && r.hypothesis_mixed.equal) || r.regularity.equal, r.regularity.str());
    }
    bool rejected = false;
    try {
      const MultiMap one("f", {1, 1, 1}, 1, {}, {Rational(1)});
      const MultiMap c("m", {1, 1}, 1, {}, {Rational(2)});
      theorem6_check(one, c, c.renamed("theta"));
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::ConstraintViolated;
    }
    t.add(rejected, "scalar m = theta = 2 was not rejected");
    rows.push_back(t.row("Theorem 6", "theta = f(x, y, m(x, y)) validated; hypotheses imply theta regular"));
  }

  {
    Tally t;
    for (std::size_t k = 0; k < config.trials; ++k) {
      const MultiMap m = random_of({dx, dy}, dz, mix(seed, k, 11), "m");
      const auto r = arens_products(m);
      t.add(r.first_is_m.equal && r.second_is_m.equal, r.first_is_m.equal ? r.second_is_m.str() : r.first_is_m.str());
    }
    rows.push_back(t.row("Arens products", "m^{***} and m^{r***r} agree with m on random bilinear maps"));
  }

  for (const auto& name : config.fixtures) {
    if (!kGroupFixtures.count(name)) continue;
    const CayleyTable table = CayleyTable::fixture(name);
    const GroupAlgebra ga = group_algebra(table);
    GroupRow g;
    g.fixture = name;
    g.order = table.order();
    g.completely_regular = complete_regularity(ga.triple.renamed("f")).completely_regular();
    g.triple_is_product = true;
    const std::size_t n = table.order();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const Vector ea = basis_vector(n, a), eb = basis_vector(n, b), ec = basis_vector(n, c);
          if (evaluate(ga.triple, {ea, eb, ec}) != ga.algebra.mul(ga.algebra.mul(ea, eb), ec))
            g.triple_is_product = false;
        }
    g.arens_regular = regularity_check(ga.algebra.multiplication()).equal;
    report.groups.push_back(g);
    rows.push_back({"Example 1 (finite G)", name + " triple convolution completely regular",
                    g.completely_regular && g.triple_is_product && g.arens_regular,
                    "order " + std::to_string(g.order)});
  }

  const auto derivations = derivation_fixture_names();
  for (const auto& name : config.fixtures) {
    if (std::find(derivations.begin(), derivations.end(), name) == derivations.end()) continue;
    const auto cand = derivation_fixture(name);
    const auto tri = is_tri_derivation(cand);
    if (name == "poly3-leibniz-sum" || name == "m2-leibniz") {
      rows.push_back({"Definition 2", name + " is rejected with a violating quadruple", !tri.is_tri_derivation(),
                      tri.str()});
      continue;
    }
    rows.push_back({"Definition 2", name + " satisfies the tri-derivation identities", tri.is_tri_derivation(),
                    std::to_string(tri.quadruples) + " basis quadruples"});
    if (!tri.is_tri_derivation()) continue;

    Tally items;
    for (const auto& item : standard_argument_checks(cand))
      items.add(!item.hypothesis_holds || item.conclusions_hold, "item " + std::to_string(item.item));
    rows.push_back(items.row("Theorem 8 standard argument", name + ": phi_a and psi_x* extension equalities"));

    const auto r = theorem8_check(cand);
    rows.push_back({"Theorem 8", name + ": D^{****} is a tri-derivation for both Arens products", r.forward(),
                    r.forward() ? "both products" : r.first_product.str() + r.second_product.str()});
    rows.push_back({"Theorem 8", name + ": phi and psi conditions", r.backward(),
                    std::to_string(r.phi_checks) + " phi, " + std::to_string(r.psi_checks) + " psi"});
  }

  {
    const auto neg = is_tri_derivation(derivation_fixture("poly3-leibniz-sum"));
    rows.push_back({"Definition 2", "sum-form Leibniz candidate is rejected", !neg.is_tri_derivation(),
                    neg.str()});
  }

  return report;
}

}  // namespace arens
