#include "arens/multimap.hpp"

#include "arens/error.hpp"
#include "arens/semantics.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace arens {

namespace {

std::string dims_str(const Index& dims) {
  std::string out = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) out += (k ? "," : "") + std::to_string(dims[k]);
  return out + ")";
}

std::size_t product(const Index& dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t arity) {
  std::vector<std::string> labels{"out"};
  for (std::size_t k = 1; k <= arity; ++k) labels.push_back("in" + std::to_string(k));
  return labels;
}

MultiMap::MultiMap(std::string name, std::vector<std::size_t> input_dims, std::size_t codomain_dim,
                   std::vector<std::string> axis_labels, std::vector<Rational> entries)
    : name_(std::move(name)),
      input_dims_(std::move(input_dims)),
      codomain_dim_(codomain_dim),
      labels_(std::move(axis_labels)),
      entries_(std::move(entries)) {
  if (input_dims_.empty() || input_dims_.size() > 3)
    throw Error(ErrorCode::ShapeMismatch, "arity must be 1, 2 or 3, got " + std::to_string(input_dims_.size()));
  if (codomain_dim_ == 0 || std::find(input_dims_.begin(), input_dims_.end(), 0u) != input_dims_.end())
    throw Error(ErrorCode::DimensionMismatch, "dimensions must be positive");
  if (labels_.empty()) labels_ = default_labels(input_dims_.size());
  if (labels_.size() != input_dims_.size() + 1)
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(input_dims_.size() + 1) + " axis labels");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw Error(ErrorCode::ShapeMismatch, "axis labels must be unique");
  if (entries_.size() != product(shape()))
    throw Error(ErrorCode::ShapeMismatch, "shape " + dims_str(shape()) + " needs " +
                                              std::to_string(product(shape())) + " entries, got " +
                                              std::to_string(entries_.size()));
}

MultiMap MultiMap::zeros(std::string name, std::vector<std::size_t> input_dims, std::size_t codomain_dim,
                         std::vector<std::string> axis_labels) {
  Index shape{codomain_dim};
  shape.insert(shape.end(), input_dims.begin(), input_dims.end());
  std::vector<Rational> entries(product(shape), Rational(0));
  return MultiMap(std::move(name), std::move(input_dims), codomain_dim, std::move(axis_labels), std::move(entries));
}

MultiMap MultiMap::generate(std::string name, std::vector<std::size_t> input_dims, std::size_t codomain_dim,
                            std::vector<std::string> axis_labels,
                            const std::function<Rational(const Index&)>& entry) {
  Index shape{codomain_dim};
  shape.insert(shape.end(), input_dims.begin(), input_dims.end());
  std::vector<Rational> entries;
  entries.reserve(product(shape));
  for_each_index(shape, [&](const Index& idx) { entries.push_back(entry(idx)); });
  return MultiMap(std::move(name), std::move(input_dims), codomain_dim, std::move(axis_labels), std::move(entries));
}

Index MultiMap::shape() const {
  Index s{codomain_dim_};
  s.insert(s.end(), input_dims_.begin(), input_dims_.end());
  return s;
}

std::size_t MultiMap::offset(const Index& full_index) const {
  std::size_t off = 0;
  const Index s = shape();
  for (std::size_t a = 0; a < s.size(); ++a) off = off * s[a] + full_index[a];
  return off;
}

MultiMap MultiMap::renamed(std::string name) const {
  MultiMap m = *this;
  m.name_ = std::move(name);
  return m;
}

MultiMap MultiMap::relabeled(std::vector<std::string> axis_labels) const {
  return MultiMap(name_, input_dims_, codomain_dim_, std::move(axis_labels), entries_);
}

bool MultiMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

bool MultiMap::same_as(const MultiMap& other) const {
  return input_dims_ == other.input_dims_ && codomain_dim_ == other.codomain_dim_ && labels_ == other.labels_ &&
         entries_ == other.entries_;
}

void for_each_index(const Index& shape, const std::function<void(const Index&)>& fn) {
  if (std::find(shape.begin(), shape.end(), 0u) != shape.end()) return;
  Index idx(shape.size(), 0);
  while (true) {
    fn(idx);
    std::size_t a = shape.size();
    while (a > 0) {
      --a;
      if (++idx[a] < shape[a]) break;
      idx[a] = 0;
      if (a == 0) return;
    }
    if (shape.empty()) return;
  }
}

MultiMap permute_axes(const MultiMap& m, const std::vector<std::size_t>& source_axes) {
  const Index src_shape = m.shape();
  const std::size_t rank = src_shape.size();
  if (source_axes.size() != rank) throw Error(ErrorCode::ShapeMismatch, "axis permutation has wrong length");
  Index shape(rank);
  std::vector<std::string> labels(rank);
  for (std::size_t a = 0; a < rank; ++a) {
    shape[a] = src_shape[source_axes[a]];
    labels[a] = m.axis_labels()[source_axes[a]];
  }
  Index src(rank);
  std::vector<Rational> entries;
  entries.reserve(m.entries().size());
  for_each_index(shape, [&](const Index& idx) {
    for (std::size_t a = 0; a < rank; ++a) src[source_axes[a]] = idx[a];
    entries.push_back(m.at(src));
  });
  return MultiMap(m.name(), Index(shape.begin() + 1, shape.end()), shape[0], std::move(labels), std::move(entries));
}

MultiMap adjoint(const MultiMap& m) {
  const std::size_t n = m.arity();
  std::vector<std::size_t> source{n};
  for (std::size_t a = 0; a < n; ++a) source.push_back(a);
  return permute_axes(m, source);
}

MultiMap flip(const MultiMap& m, const FlipPerm& p) {
  if (static_cast<std::size_t>(p.size()) != m.arity())
    throw Error(ErrorCode::FlipArityMismatch, "flip " + p.str() + " on a map of arity " + std::to_string(m.arity()));
  std::vector<std::size_t> source{0};
  for (int k = 0; k < p.size(); ++k) source.push_back(static_cast<std::size_t>(p.source(k)) + 1);
  return permute_axes(m, source);
}

Vector evaluate(const MultiMap& m, const std::vector<Vector>& args) {
  if (args.size() != m.arity())
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(m.arity()) + " arguments, got " +
                                                  std::to_string(args.size()));
  for (std::size_t k = 0; k < args.size(); ++k)
    if (args[k].size() != m.input_dims()[k])
      throw Error(ErrorCode::DimensionMismatch, "argument " + std::to_string(k + 1) + " has dim " +
                                                    std::to_string(args[k].size()) + ", slot expects " +
                                                    std::to_string(m.input_dims()[k]));
  Vector out(m.codomain_dim(), Rational(0));
  Rational term;
  for_each_index(m.shape(), [&](const Index& idx) {
    const Rational& entry = m.at(idx);
    if (entry == 0) return;
    term = entry;
    for (std::size_t k = 0; k < args.size() && term != 0; ++k) term *= args[k][idx[k + 1]];
    out[idx[0]] += term;
  });
  return out;
}

MultiMap realize(const ExprAst& expr, const MultiMap& base) {
  const int arity = static_cast<int>(base.arity());
  MultiMap current = base;
  for (const auto& step : normalize(expr, arity)) {
    if (std::holds_alternative<AdjointStep>(step))
      current = adjoint(current);
    else
      current = flip(current, std::get<FlipPerm>(step));
  }

  const AxisAssignment axes = axis_semantics(expr, arity);
  const auto& base_labels = base.axis_labels();
  std::vector<std::string> expected{base_labels[static_cast<std::size_t>(axes.codomain_axis)]};
  for (Axis a : axes.slot_axes) expected.push_back(base_labels[static_cast<std::size_t>(a)]);
  if (expected != current.axis_labels())
    throw Error(ErrorCode::ShapeMismatch, "realized axes of " + expr.str() + " disagree with " + axes.str());
  return current.renamed(expr.str());
}

// --- comparison ---------------------------------------------------------------

std::string IdentityReport::str() const {
  std::string out = left_expr + " vs " + right_expr + ": " + (equal ? "equal" : "UNEQUAL");
  if (first_mismatch) {
    std::string idx = "[";
    for (std::size_t k = 0; k < first_mismatch->index.size(); ++k)
      idx += (k ? (k == 1 ? "; " : ",") : "") + std::to_string(first_mismatch->index[k]);
    out += " at " + idx + "] left=" + format_rational(first_mismatch->left) +
           " right=" + format_rational(first_mismatch->right);
  }
  return out;
}

IdentityReport equal(const MultiMap& a, const MultiMap& b, const Rational& tolerance) {
  if (a.arity() != b.arity())
    throw Error(ErrorCode::ShapeMismatch, "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  if (a.codomain_label() != b.codomain_label())
    throw Error(ErrorCode::ShapeMismatch, "codomain axes '" + a.codomain_label() + "' vs '" + b.codomain_label() + "'");
  // Axis a of `a` corresponds to axis source[a] of `b`.
  std::vector<std::size_t> source{0};
  for (std::size_t k = 1; k < a.axis_labels().size(); ++k) {
    const auto& labels = b.axis_labels();
    const auto it = std::find(labels.begin() + 1, labels.end(), a.axis_labels()[k]);
    if (it == labels.end())
      throw Error(ErrorCode::ShapeMismatch, "axis '" + a.axis_labels()[k] + "' missing on the right-hand side");
    source.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  const MultiMap aligned = permute_axes(b, source);
  if (aligned.shape() != a.shape())
    throw Error(ErrorCode::ShapeMismatch, "shapes " + dims_str(a.shape()) + " vs " + dims_str(aligned.shape()));

  IdentityReport report{a.name(), b.name(), true, std::nullopt};
  for_each_index(a.shape(), [&](const Index& idx) {
    if (report.first_mismatch) return;
    const Rational& x = a.at(idx);
    const Rational& y = aligned.at(idx);
    const bool same = tolerance == 0 ? x == y : abs(x - y) <= tolerance;
    if (!same) {
      report.equal = false;
      report.first_mismatch = Mismatch{idx, x, y};
    }
  });
  return report;
}

// --- constructions --------------------------------------------------------------

MultiMap random_map(const RandomMapOptions& o) {
  if (o.input_dims.size() != o.arity)
    throw Error(ErrorCode::DimensionMismatch, "random_map: " + std::to_string(o.input_dims.size()) +
                                                  " dims for arity " + std::to_string(o.arity));
  if (o.entry_bound < 1) throw Error(ErrorCode::InvalidConfig, "entry_bound must be at least 1");
  std::mt19937_64 rng(o.seed);
  const auto span = static_cast<std::uint64_t>(2 * o.entry_bound + 1);
  return MultiMap::generate(o.name, o.input_dims, o.codomain_dim, o.axis_labels, [&](const Index&) {
    return Rational(static_cast<long>(rng() % span) - o.entry_bound);
  });
}

Vector random_vector(std::size_t dim, std::uint64_t seed, int bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidConfig, "bound must be at least 1");
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  Vector v;
  for (std::size_t k = 0; k < dim; ++k) v.emplace_back(static_cast<long>(rng() % span) - bound);
  return v;
}

MultiMap build_factored(const MultiMap& g, const MultiMap& h, std::size_t slot) {
  if (h.arity() != 1) throw Error(ErrorCode::ShapeMismatch, "the factor map must be linear");
  if (slot < 1 || slot > g.arity())
    throw Error(ErrorCode::DimensionMismatch, "slot " + std::to_string(slot) + " out of range");
  if (h.codomain_dim() != g.input_dims()[slot - 1])
    throw Error(ErrorCode::DimensionMismatch, "h maps into dim " + std::to_string(h.codomain_dim()) +
                                                  " but slot " + std::to_string(slot) + " has dim " +
                                                  std::to_string(g.input_dims()[slot - 1]));
  auto dims = g.input_dims();
  dims[slot - 1] = h.input_dims()[0];
  auto labels = g.axis_labels();
  labels[slot] = h.axis_labels()[1];
  Index gi(g.arity() + 1);
  return MultiMap::generate(g.name() + "(h@" + std::to_string(slot) + ")", dims, g.codomain_dim(), labels,
                            [&](const Index& idx) -> Rational {
                              Rational sum = 0;
                              gi = idx;
                              for (std::size_t s = 0; s < h.codomain_dim(); ++s) {
                                const Rational& hv = h.at({s, idx[slot]});
                                if (hv == 0) continue;
                                gi[slot] = s;
                                sum += g.at(gi) * hv;
                              }
                              return sum;
                            });
}

MultiMap compose_output(const MultiMap& outer, const MultiMap& inner) {
  if (outer.arity() != 1) throw Error(ErrorCode::ShapeMismatch, "the outer map must be linear");
  if (outer.input_dims()[0] != inner.codomain_dim())
    throw Error(ErrorCode::DimensionMismatch, "outer expects dim " + std::to_string(outer.input_dims()[0]) +
                                                  ", inner produces " + std::to_string(inner.codomain_dim()));
  auto labels = inner.axis_labels();
  labels[0] = outer.codomain_label();
  Index ii;
  return MultiMap::generate(outer.name() + "o" + inner.name(), inner.input_dims(), outer.codomain_dim(), labels,
                            [&](const Index& idx) -> Rational {
                              Rational sum = 0;
                              ii = idx;
                              for (std::size_t s = 0; s < inner.codomain_dim(); ++s) {
                                ii[0] = s;
                                sum += outer.at({idx[0], s}) * inner.at(ii);
                              }
                              return sum;
                            });
}

MultiMap contract_slot(const MultiMap& m, std::size_t slot, const Vector& v) {
  if (m.arity() < 2) throw Error(ErrorCode::ShapeMismatch, "cannot fix the only argument of a linear map");
  if (slot < 1 || slot > m.arity()) throw Error(ErrorCode::DimensionMismatch, "slot out of range");
  if (v.size() != m.input_dims()[slot - 1])
    throw Error(ErrorCode::DimensionMismatch, "vector of dim " + std::to_string(v.size()) + " for slot of dim " +
                                                  std::to_string(m.input_dims()[slot - 1]));
  auto dims = m.input_dims();
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(slot - 1));
  auto labels = m.axis_labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(slot));
  Index mi;
  return MultiMap::generate(m.name() + "|" + std::to_string(slot), dims, m.codomain_dim(), labels,
                            [&](const Index& idx) -> Rational {
                              mi = idx;
                              mi.insert(mi.begin() + static_cast<std::ptrdiff_t>(slot), 0);
                              Rational sum = 0;
                              for (std::size_t k = 0; k < v.size(); ++k) {
                                if (v[k] == 0) continue;
                                mi[slot] = k;
                                sum += v[k] * m.at(mi);
                              }
                              return sum;
                            });
}

MultiMap identity_map(std::size_t dim, std::string in_label, std::string out_label) {
  return MultiMap::generate("id", {dim}, dim, {std::move(out_label), std::move(in_label)},
                            [](const Index& idx) -> Rational { return Rational(idx[0] == idx[1] ? 1 : 0); });
}

MultiMap operator+(const MultiMap& a, const MultiMap& b) {
  if (a.shape() != b.shape() || a.axis_labels() != b.axis_labels())
    throw Error(ErrorCode::ShapeMismatch, "sum of maps with different shapes or labels");
  std::vector<Rational> entries(a.entries().begin(), a.entries().end());
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += b.entries()[k];
  return MultiMap(a.name() + "+" + b.name(), a.input_dims(), a.codomain_dim(), a.axis_labels(), std::move(entries));
}

MultiMap operator*(const Rational& c, const MultiMap& m) {
  std::vector<Rational> entries(m.entries().begin(), m.entries().end());
  for (auto& e : entries) e *= c;
  return MultiMap(m.name(), m.input_dims(), m.codomain_dim(), m.axis_labels(), std::move(entries));
}

}  // namespace arens
