#include "arens/algebra.hpp"

#include "arens/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace arens {

// --- CayleyTable ----------------------------------------------------------------

CayleyTable::CayleyTable(std::vector<std::vector<std::size_t>> table, std::size_t identity)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error(ErrorCode::InvalidCayleyTable, "empty table");
  if (identity_ >= n) throw Error(ErrorCode::InvalidCayleyTable, "identity index out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n)
      throw Error(ErrorCode::InvalidCayleyTable, "row " + std::to_string(a) + " has the wrong length");
    std::vector<bool> row_seen(n), col_seen(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] >= n || table_[b].size() != n || table_[b][a] >= n)
        throw Error(ErrorCode::InvalidCayleyTable, "entry out of range in row " + std::to_string(a));
      if (row_seen[table_[a][b]])
        throw Error(ErrorCode::InvalidCayleyTable, "row " + std::to_string(a) + " is not a permutation");
      if (col_seen[table_[b][a]])
        throw Error(ErrorCode::InvalidCayleyTable, "column " + std::to_string(a) + " is not a permutation");
      row_seen[table_[a][b]] = col_seen[table_[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      throw Error(ErrorCode::InvalidCayleyTable, "identity law fails at " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(ErrorCode::InvalidCayleyTable, "associativity fails at (" + std::to_string(a) + "," +
                                                         std::to_string(b) + "," + std::to_string(c) + ")");
}

CayleyTable CayleyTable::parse(const std::string& text) {
  std::istringstream in(text);
  std::string keyword;
  long long n = -1, identity = -1;
  if (!(in >> keyword >> n >> identity) || keyword != "group" || n <= 0 || identity < 0)
    throw Error(ErrorCode::InvalidCayleyTable, "expected header 'group <n> <identity-index>'");
  std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(n));
  for (auto& row : table) {
    for (long long b = 0; b < n; ++b) {
      long long v = -1;
      if (!(in >> v) || v < 0) throw Error(ErrorCode::InvalidCayleyTable, "table body is truncated or negative");
      row.push_back(static_cast<std::size_t>(v));
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::InvalidCayleyTable, "trailing data '" + extra + "'");
  return CayleyTable(std::move(table), static_cast<std::size_t>(identity));
}

CayleyTable CayleyTable::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return CayleyTable(std::move(table), 0);
}

CayleyTable CayleyTable::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (std::size_t k = 0; k < 3; ++k) ab[k] = perms[a][static_cast<std::size_t>(perms[b][k])];
      table[a][b] = index_of(ab);
    }
  return CayleyTable(std::move(table), 0);
}

CayleyTable CayleyTable::fixture(const std::string& name) {
  if (name == "z2") return cyclic(2);
  if (name == "z3") return cyclic(3);
  if (name == "z4") return cyclic(4);
  if (name == "s3") return symmetric3();
  throw Error(ErrorCode::UnknownFixture, "no group fixture named '" + name + "'");
}

std::string CayleyTable::to_text() const {
  std::ostringstream out;
  out << "group " << order() << ' ' << identity_ << '\n';
  for (const auto& row : table_) {
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
    out << '\n';
  }
  return out.str();
}

// --- AlgebraModel / BanachModuleModel -----------------------------------------

namespace {

std::string basis_tuple(std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  bool first = true;
  for (auto i : idx) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + ")";
}

}  // namespace

AlgebraModel::AlgebraModel(MultiMap multiplication, std::optional<Vector> unit, std::vector<std::string> basis_names)
    : mult_(std::move(multiplication)), unit_(std::move(unit)), basis_names_(std::move(basis_names)) {
  const std::size_t n = mult_.codomain_dim();
  if (mult_.arity() != 2 || mult_.input_dims() != std::vector<std::size_t>{n, n})
    throw Error(ErrorCode::ShapeMismatch, "multiplication must be bilinear A x A -> A");
  if (basis_names_.empty())
    for (std::size_t k = 0; k < n; ++k) basis_names_.push_back("e" + std::to_string(k));
  if (basis_names_.size() != n) throw Error(ErrorCode::ShapeMismatch, "one basis name per dimension");
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < n; ++k) basis.push_back(basis_vector(n, k));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ab = mul(basis[a], basis[b]);
      for (std::size_t c = 0; c < n; ++c)
        if (mul(ab, basis[c]) != mul(basis[a], mul(basis[b], basis[c])))
          throw Error(ErrorCode::AlgebraLawViolated, "associativity fails at " + basis_tuple({a, b, c}));
    }
  if (unit_) {
    if (unit_->size() != n) throw Error(ErrorCode::DimensionMismatch, "unit has the wrong dimension");
    for (std::size_t a = 0; a < n; ++a)
      if (mul(*unit_, basis[a]) != basis[a] || mul(basis[a], *unit_) != basis[a])
        throw Error(ErrorCode::AlgebraLawViolated, "unit law fails at " + basis_tuple({a}));
  }
}

BanachModuleModel::BanachModuleModel(AlgebraModel algebra, MultiMap left, MultiMap right)
    : algebra_(std::move(algebra)), left_(std::move(left)), right_(std::move(right)) {
  const std::size_t n = algebra_.dim();
  const std::size_t x = left_.codomain_dim();
  if (left_.arity() != 2 || left_.input_dims() != std::vector<std::size_t>{n, x})
    throw Error(ErrorCode::ShapeMismatch, "left action must be A x X -> X");
  if (right_.arity() != 2 || right_.input_dims() != std::vector<std::size_t>{x, n} || right_.codomain_dim() != x)
    throw Error(ErrorCode::ShapeMismatch, "right action must be X x A -> X");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ea = basis_vector(n, a), eb = basis_vector(n, b);
      const Vector ab = algebra_.mul(ea, eb);
      for (std::size_t k = 0; k < x; ++k) {
        const Vector ex = basis_vector(x, k);
        if (evaluate(left_, {ab, ex}) != evaluate(left_, {ea, evaluate(left_, {eb, ex})}))
          throw Error(ErrorCode::AlgebraLawViolated, "left module law fails at " + basis_tuple({a, b, k}));
        if (evaluate(right_, {ex, ab}) != evaluate(right_, {evaluate(right_, {ex, ea}), eb}))
          throw Error(ErrorCode::AlgebraLawViolated, "right module law fails at " + basis_tuple({k, a, b}));
        if (evaluate(left_, {ea, evaluate(right_, {ex, eb})}) != evaluate(right_, {evaluate(left_, {ea, ex}), eb}))
          throw Error(ErrorCode::AlgebraLawViolated, "compatibility fails at " + basis_tuple({a, k, b}));
      }
    }
}

BanachModuleModel BanachModuleModel::regular(const AlgebraModel& algebra) {
  const MultiMap& pi = algebra.multiplication();
  return BanachModuleModel(algebra, pi.renamed("pi1"), pi.renamed("pi2"));
}

// --- fixtures -----------------------------------------------------------------

GroupAlgebra group_algebra(const CayleyTable& t) {
  const std::size_t n = t.order();
  MultiMap pi = MultiMap::generate("pi", {n, n}, n, {}, [&](const Index& idx) -> Rational {
    return Rational(t.mul(idx[1], idx[2]) == idx[0] ? 1 : 0);
  });
  MultiMap triple = MultiMap::generate("f", {n, n, n}, n, {}, [&](const Index& idx) -> Rational {
    return Rational(t.mul(t.mul(idx[1], idx[2]), idx[3]) == idx[0] ? 1 : 0);
  });
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("d" + std::to_string(k));
  return {AlgebraModel(std::move(pi), basis_vector(n, t.identity()), std::move(names)), std::move(triple)};
}

PolyAlgebra truncated_poly_algebra(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "truncated polynomial algebra needs n >= 2");
  MultiMap pi = MultiMap::generate("pi", {n, n}, n, {}, [&](const Index& idx) -> Rational {
    return Rational(idx[1] + idx[2] < n && idx[1] + idx[2] == idx[0] ? 1 : 0);
  });
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)));
  AlgebraModel algebra(std::move(pi), basis_vector(n, 0), std::move(names));
  MultiMap euler = MultiMap::generate("delta", {n}, n, {}, [](const Index& idx) -> Rational {
    return Rational(idx[0] == idx[1] ? static_cast<long>(idx[0]) : 0);
  });
  if (!is_derivation(algebra, euler))
    throw Error(ErrorCode::AlgebraLawViolated, "Euler map is not a derivation");
  return {std::move(algebra), std::move(euler)};
}

AlgebraModel matrix_algebra(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "matrix algebra needs k >= 1");
  const std::size_t n = k * k;
  // E_ij E_kl = [j == k] E_il
  MultiMap pi = MultiMap::generate("pi", {n, n}, n, {}, [&](const Index& idx) -> Rational {
    const std::size_t i = idx[1] / k, j = idx[1] % k, l = idx[2] / k, m = idx[2] % k;
    return Rational(j == l && idx[0] == i * k + m ? 1 : 0);
  });
  Vector unit(n, Rational(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    unit[i * k + i] = 1;
    for (std::size_t j = 0; j < k; ++j) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  return AlgebraModel(std::move(pi), std::move(unit), std::move(names));
}

bool is_derivation(const AlgebraModel& algebra, const MultiMap& d) {
  const std::size_t n = algebra.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ea = basis_vector(n, a), eb = basis_vector(n, b);
      const Vector lhs = evaluate(d, {algebra.mul(ea, eb)});
      Vector rhs = algebra.mul(evaluate(d, {ea}), eb);
      const Vector second = algebra.mul(ea, evaluate(d, {eb}));
      for (std::size_t k = 0; k < n; ++k) rhs[k] += second[k];
      if (lhs != rhs) return false;
    }
  return true;
}

MultiMap inner_derivation(const AlgebraModel& algebra, const Vector& u) {
  const std::size_t n = algebra.dim();
  return MultiMap::generate("ad", {n}, n, {}, [&](const Index& idx) -> Rational {
    const Vector e = basis_vector(n, idx[1]);
    return algebra.mul(u, e)[idx[0]] - algebra.mul(e, u)[idx[0]];
  });
}

// --- bilinear Arens machinery -----------------------------------------------------

namespace {

void require_bilinear(const MultiMap& m) {
  if (m.arity() != 2) throw Error(ErrorCode::ShapeMismatch, "expected a bilinear map, got arity " + std::to_string(m.arity()));
}

}  // namespace

ArensProducts arens_products(const MultiMap& m) {
  require_bilinear(m);
  MultiMap first = realize(make_expr(m.name(), "***"), m);
  MultiMap second = realize(make_expr(m.name(), "r***r"), m);
  IdentityReport a = equal(first, m);
  IdentityReport b = equal(second, m);
  return {std::move(first), std::move(second), std::move(a), std::move(b)};
}

IdentityReport regularity_check(const MultiMap& m) {
  require_bilinear(m);
  return equal(realize(make_expr(m.name(), "***"), m), realize(make_expr(m.name(), "r***r"), m));
}

BridgeReport theorem5_bridge(const MultiMap& f, const Vector& wstar) {
  if (f.arity() != 3) throw Error(ErrorCode::ShapeMismatch, "the bridge needs a tri-linear map");
  if (wstar.size() != f.codomain_dim())
    throw Error(ErrorCode::DimensionMismatch, "functional of dim " + std::to_string(wstar.size()) +
                                                  " for codomain of dim " + std::to_string(f.codomain_dim()));
  // f^{s*}: (W*, Y, Z) -> X*; fixing w* leaves m: Y x Z -> X*.
  MultiMap m = contract_slot(realize(make_expr(f.name(), "s*"), f), 1, wstar).renamed("m");
  // f^{s******}: (X**, W*, Y**) -> Z*; fixing w* in the middle slot.
  MultiMap sliced = contract_slot(realize(make_expr(f.name(), "s******"), f), 2, wstar)
                        .renamed(f.name() + "^{s******}(., w*, .)");
  MultiMap double_ext = realize(make_expr("m", "****"), m);
  BridgeReport report{m, equal(sliced, double_ext), regularity_check(m)};
  return report;
}

std::vector<Vector> sample_grid(std::size_t dim) {
  static const int values[] = {-1, 0, 1, 2};
  std::vector<Vector> out;
  if (dim <= 2) {
    Index shape(dim, 4);
    for_each_index(shape, [&](const Index& idx) {
      Vector v(dim);
      for (std::size_t k = 0; k < dim; ++k) v[k] = values[idx[k]];
      out.push_back(std::move(v));
    });
    return out;
  }
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b)
      for (int va : values)
        for (int vb : values) {
          Vector v(dim, Rational(0));
          v[a] = va;
          v[b] = vb;
          out.push_back(std::move(v));
        }
  return out;
}

ConstraintReport theorem6_check(const MultiMap& f, const MultiMap& m, const MultiMap& theta) {
  if (f.arity() != 3) throw Error(ErrorCode::ShapeMismatch, "f must be tri-linear");
  require_bilinear(m);
  require_bilinear(theta);
  const auto& d = f.input_dims();
  if (m.input_dims() != std::vector<std::size_t>{d[0], d[1]} || m.codomain_dim() != d[2])
    throw Error(ErrorCode::DimensionMismatch, "m must map X x Y into the third slot of f");
  if (theta.input_dims() != std::vector<std::size_t>{d[0], d[1]} || theta.codomain_dim() != f.codomain_dim())
    throw Error(ErrorCode::DimensionMismatch, "theta must map X x Y into the codomain of f");

  ConstraintReport report;
  const auto xs = sample_grid(d[0]);
  const auto ys = sample_grid(d[1]);
  for (const auto& x : xs)
    for (const auto& y : ys) {
      const Vector want = evaluate(f, {x, y, evaluate(m, {x, y})});
      const Vector got = evaluate(theta, {x, y});
      ++report.samples;
      if (want != got)
        throw Error(ErrorCode::ConstraintViolated, "theta(x,y) = " + format_vector(got) + " but f(x,y,m(x,y)) = " +
                                                       format_vector(want) + " at x = " + format_vector(x) +
                                                       ", y = " + format_vector(y));
    }
  report.hypothesis_tr = equal(realize(make_expr(f.name(), "t***r"), f), realize(make_expr(f.name(), "r***t"), f));
  report.hypothesis_mixed =
      equal(realize(make_expr(f.name(), "****t**s"), f), realize(make_expr(f.name(), "t**s****"), f));
  report.regularity = regularity_check(theta);
  return report;
}

}  // namespace arens
