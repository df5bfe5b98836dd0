#include "lcoh/lie_algebra.hpp"

#include <algorithm>
#include <map>

#include "lcoh/combinatorics.hpp"
#include "lcoh/errors.hpp"

namespace lcoh {

namespace {

SparseRationalMatrix product(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  SparseRationalMatrix out(a.rows(), 0);
  for (std::size_t c = 0; c < b.cols(); ++c) out.append_column(a.multiply(b.column(c)));
  return out;
}

bool same_matrix(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (a.column(c) != b.column(c)) return false;
  }
  return true;
}

SparseRationalMatrix linear_combination(const std::vector<SparseRationalMatrix>& mats, const SparseVector& coeffs,
                                        std::size_t rows, std::size_t cols) {
  SparseRationalMatrix out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    SparseVector col;
    for (const auto& [k, x] : coeffs) {
      for (const auto& [r, v] : mats[k].column(c)) col.emplace_back(r, x * v);
    }
    out.set_column(c, std::move(col));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, BracketTable table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t d = labels_.size();
  if (table_.size() != d) throw DimensionMismatch("bracket table has wrong number of rows");
  for (auto& row : table_) {
    if (row.size() != d) throw DimensionMismatch("bracket table has wrong number of columns");
    for (auto& v : row) {
      normalize(v);
      if (!v.empty() && v.back().first >= d) throw DimensionMismatch("bracket coordinate out of range");
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SparseVector neg = table_[j][i];
      for (auto& e : neg) e.second = -e.second;
      if (table_[i][j] != neg) {
        throw JacobiViolation("antisymmetry fails for [" + labels_[i] + ", " + labels_[j] + "]");
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        const SparseVector ek{{static_cast<std::uint32_t>(k), Rational(1)}};
        const SparseVector ei{{static_cast<std::uint32_t>(i), Rational(1)}};
        const SparseVector ej{{static_cast<std::uint32_t>(j), Rational(1)}};
        SparseVector sum = bracket(table_[i][j], ek);
        sum = axpy(sum, Rational(1), bracket(table_[j][k], ei));
        sum = axpy(sum, Rational(1), bracket(table_[k][i], ej));
        if (!sum.empty()) {
          throw JacobiViolation("Jacobi identity fails for (" + labels_[i] + ", " + labels_[j] + ", " +
                                labels_[k] + ")");
        }
      }
    }
  }
  producing_.assign(d, {});
  for (std::uint32_t a = 0; a < d; ++a) {
    for (std::uint32_t b = 0; b < d; ++b) {
      for (const auto& [k, c] : table_[a][b]) producing_[k].push_back({a, b, c});
    }
  }
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, xi] : x) {
    for (const auto& [j, yj] : y) {
      for (const auto& [k, c] : table_[i][j]) out.emplace_back(k, xi * yj * c);
    }
  }
  normalize(out);
  return out;
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : table_.at(i).at(j)) {
    if (idx == k) return c;
  }
  return Rational(0);
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool LieAlgebra::is_abelian() const {
  for (const auto& row : table_) {
    for (const auto& v : row) {
      if (!v.empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// GModule

std::string to_string(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::adjoint: return "adjoint";
    case ModuleKind::coadjoint: return "coadjoint";
    case ModuleKind::trivial: return "trivial";
    case ModuleKind::custom: return "custom";
  }
  return "?";
}

ModuleKind parse_module_kind(const std::string& text) {
  if (text == "adjoint") return ModuleKind::adjoint;
  if (text == "coadjoint") return ModuleKind::coadjoint;
  if (text == "trivial") return ModuleKind::trivial;
  throw ParseError("unknown coefficient kind '" + text + "'");
}

GModule::GModule(const LieAlgebra& algebra, std::size_t dim, std::vector<SparseRationalMatrix> action,
                 ModuleKind kind)
    : dim_(dim), action_(std::move(action)), kind_(kind) {
  const std::size_t d = algebra.dim();
  if (action_.size() != d) throw DimensionMismatch("module needs one action matrix per basis element");
  for (const auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw DimensionMismatch("action matrix has wrong shape");
  }
  if (kind_ == ModuleKind::trivial && !is_zero_action()) {
    throw ModuleAxiomViolation("trivial module with nonzero action");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto ab = product(action_[i], action_[j]);
      const auto ba = product(action_[j], action_[i]);
      SparseRationalMatrix comm(dim_, dim_);
      for (std::size_t c = 0; c < dim_; ++c) comm.set_column(c, axpy(ab.column(c), Rational(-1), ba.column(c)));
      const auto rhs = linear_combination(action_, algebra.bracket(i, j), dim_, dim_);
      if (!same_matrix(comm, rhs)) {
        throw ModuleAxiomViolation("module axiom fails for (" + algebra.labels()[i] + ", " + algebra.labels()[j] +
                                   ")");
      }
    }
  }
  for (const auto& a : action_) transposed_.push_back(a.transposed());
}

bool GModule::is_zero_action() const {
  return std::all_of(action_.begin(), action_.end(), [](const auto& a) { return a.nonzeros() == 0; });
}

GModule make_module(const LieAlgebra& algebra, ModuleKind kind) {
  const std::size_t d = algebra.dim();
  std::vector<SparseRationalMatrix> action;
  switch (kind) {
    case ModuleKind::adjoint:
      for (std::size_t i = 0; i < d; ++i) {
        SparseRationalMatrix a(d, d);
        for (std::size_t t = 0; t < d; ++t) a.set_column(t, algebra.bracket(i, t));
        action.push_back(std::move(a));
      }
      return GModule(algebra, d, std::move(action), kind);
    case ModuleKind::coadjoint:
      // (b_i . phi)(x) = phi([x, b_i]); column t holds c(s, i)_t over s.
      for (std::size_t i = 0; i < d; ++i) {
        SparseRationalMatrix a(d, d);
        for (std::size_t t = 0; t < d; ++t) {
          SparseVector col;
          for (std::uint32_t s = 0; s < d; ++s) {
            Rational c = algebra.structure_constant(s, i, t);
            if (!is_zero(c)) col.emplace_back(s, c);
          }
          a.set_column(t, std::move(col));
        }
        action.push_back(std::move(a));
      }
      return GModule(algebra, d, std::move(action), kind);
    case ModuleKind::trivial:
      for (std::size_t i = 0; i < d; ++i) action.emplace_back(1, 1);
      return GModule(algebra, 1, std::move(action), kind);
    case ModuleKind::custom: break;
  }
  throw InvalidDimension("make_module: custom modules need explicit action matrices");
}

// ---------------------------------------------------------------------------
// Subalgebras and module constructions

SubalgebraEmbedding::SubalgebraEmbedding(LieAlgebra parent, std::vector<std::uint32_t> members, std::string name)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::vector<std::int64_t> local(parent_.dim(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= parent_.dim()) throw DimensionMismatch("subalgebra member out of range");
    local[members_[i]] = static_cast<std::int64_t>(i);
  }
  BracketTable table(members_.size(), std::vector<SparseVector>(members_.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    labels.push_back(parent_.labels()[members_[i]]);
    for (std::size_t j = 0; j < members_.size(); ++j) {
      for (const auto& [k, c] : parent_.bracket(members_[i], members_[j])) {
        if (local[k] < 0) {
          throw NotASubalgebra("[" + parent_.labels()[members_[i]] + ", " + parent_.labels()[members_[j]] +
                               "] leaves the span");
        }
        table[i][j].emplace_back(static_cast<std::uint32_t>(local[k]), c);
      }
    }
  }
  sub_ = LieAlgebra(name.empty() ? parent_.name() + "_sub" : std::move(name), std::move(labels), std::move(table));
}

std::optional<std::uint32_t> SubalgebraEmbedding::local_index(std::uint32_t parent_index) const {
  auto it = std::find(members_.begin(), members_.end(), parent_index);
  if (it == members_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - members_.begin());
}

bool SubalgebraEmbedding::is_ideal() const {
  for (std::uint32_t h = 0; h < parent_.dim(); ++h) {
    for (auto j : members_) {
      for (const auto& [k, c] : parent_.bracket(h, j)) {
        if (!local_index(k)) return false;
      }
    }
  }
  return true;
}

GModule restrict_module(const GModule& module, const SubalgebraEmbedding& embedding) {
  std::vector<SparseRationalMatrix> action;
  for (auto m : embedding.members()) action.push_back(module.action(m));
  const ModuleKind kind = module.kind() == ModuleKind::trivial ? ModuleKind::trivial : ModuleKind::custom;
  return GModule(embedding.algebra(), module.dim(), std::move(action), kind);
}

GModule submodule(const LieAlgebra& algebra, const GModule& module, const std::vector<std::uint32_t>& basis) {
  std::vector<std::int64_t> local(module.dim(), -1);
  for (std::size_t i = 0; i < basis.size(); ++i) local.at(basis[i]) = static_cast<std::int64_t>(i);
  std::vector<SparseRationalMatrix> action;
  for (std::size_t g = 0; g < algebra.dim(); ++g) {
    SparseRationalMatrix a(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      SparseVector col;
      for (const auto& [r, v] : module.act_on_basis(g, basis[c])) {
        if (local[r] < 0) throw ModuleAxiomViolation("submodule basis is not invariant");
        col.emplace_back(static_cast<std::uint32_t>(local[r]), v);
      }
      a.set_column(c, std::move(col));
    }
    action.push_back(std::move(a));
  }
  return GModule(algebra, basis.size(), std::move(action));
}

GModule tensor_product(const LieAlgebra& algebra, const GModule& a, const GModule& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<SparseRationalMatrix> action;
  for (std::size_t g = 0; g < algebra.dim(); ++g) {
    SparseRationalMatrix m(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < db; ++j) {
        SparseVector col;
        for (const auto& [r, v] : a.act_on_basis(g, i)) col.emplace_back(static_cast<std::uint32_t>(r * db + j), v);
        for (const auto& [r, v] : b.act_on_basis(g, j)) col.emplace_back(static_cast<std::uint32_t>(i * db + r), v);
        m.set_column(i * db + j, std::move(col));
      }
    }
    action.push_back(std::move(m));
  }
  return GModule(algebra, da * db, std::move(action));
}

std::vector<std::vector<std::uint32_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k > n) return out;
  std::vector<std::uint32_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(i);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

GModule exterior_power(const LieAlgebra& algebra, const GModule& module, std::size_t k) {
  const auto subsets = combinations(module.dim(), k);
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<std::uint32_t>(i);
  std::vector<SparseRationalMatrix> action;
  for (std::size_t g = 0; g < algebra.dim(); ++g) {
    SparseRationalMatrix m(subsets.size(), subsets.size());
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      SparseVector col;
      for (std::size_t p = 0; p < k; ++p) {
        for (const auto& [t, v] : module.act_on_basis(g, subsets[c][p])) {
          auto tuple = subsets[c];
          tuple[p] = t;
          const int sign = sort_with_sign(tuple);
          if (sign == 0) continue;
          col.emplace_back(index.at(tuple), sign * v);
        }
      }
      m.set_column(c, std::move(col));
    }
    action.push_back(std::move(m));
  }
  return GModule(algebra, subsets.size(), std::move(action));
}

GModule dual_module(const LieAlgebra& algebra, const GModule& module) {
  std::vector<SparseRationalMatrix> action;
  for (std::size_t g = 0; g < algebra.dim(); ++g) {
    SparseRationalMatrix t = module.action(g).transposed();
    SparseRationalMatrix neg(t.rows(), t.cols());
    for (std::size_t c = 0; c < t.cols(); ++c) {
      SparseVector col = t.column(c);
      for (auto& e : col) e.second = -e.second;
      neg.set_column(c, std::move(col));
    }
    action.push_back(std::move(neg));
  }
  return GModule(algebra, module.dim(), std::move(action));
}

std::vector<SparseVector> module_invariants(const GModule& module) {
  const std::size_t d = module.dim();
  const std::size_t g = module.algebra_dim();
  SparseRationalMatrix stacked(d * g, d);
  for (std::size_t c = 0; c < d; ++c) {
    SparseVector col;
    for (std::size_t i = 0; i < g; ++i) {
      for (const auto& [r, v] : module.act_on_basis(i, c)) col.emplace_back(static_cast<std::uint32_t>(i * d + r), v);
    }
    stacked.set_column(c, std::move(col));
  }
  return kernel_basis_sparse(stacked);
}

// ---------------------------------------------------------------------------
// Builders

namespace {

std::string alpha_label(int i, int j) {
  return (i < 10 && j < 10) ? "a" + std::to_string(i) + std::to_string(j)
                            : "a" + std::to_string(i) + "_" + std::to_string(j);
}

// Coordinates of alpha_ij for arbitrary i != j (alpha_ji = -alpha_ij).
void add_alpha(SparseVector& v, int n, int i, int j, const Rational& c) {
  if (i == j) return;
  if (i < j) {
    v.emplace_back(alpha_index(n, i, j), c);
  } else {
    v.emplace_back(alpha_index(n, j, i), -c);
  }
}

BracketTable so_brackets(int n, std::size_t dim) {
  BracketTable table(dim, std::vector<SparseVector>(dim));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          SparseVector v;
          if (j == k) add_alpha(v, n, i, l, Rational(1));
          if (i == l) add_alpha(v, n, j, k, Rational(1));
          if (i == k) add_alpha(v, n, j, l, Rational(-1));
          if (j == l) add_alpha(v, n, i, k, Rational(-1));
          normalize(v);
          table[alpha_index(n, i, j)][alpha_index(n, k, l)] = std::move(v);
        }
      }
    }
  }
  return table;
}

}  // namespace

std::uint32_t alpha_index(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw InvalidDimension("alpha index needs 1 <= i < j <= n");
  // Number of pairs (a, b) with a < i, plus offset within row i.
  const int before = (i - 1) * n - (i - 1) * i / 2;
  return static_cast<std::uint32_t>(before + (j - i - 1));
}

std::uint32_t partial_index(int n, int i) {
  if (!(1 <= i && i <= n)) throw InvalidDimension("partial index needs 1 <= i <= n");
  return static_cast<std::uint32_t>(n * (n - 1) / 2 + i - 1);
}

LieAlgebra build_so_n(int n) {
  if (n < 2) throw InvalidDimension("so(n) needs n >= 2");
  const std::size_t dim = static_cast<std::size_t>(n * (n - 1) / 2);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) labels.push_back(alpha_label(i, j));
  }
  return LieAlgebra("so_" + std::to_string(n), std::move(labels), so_brackets(n, dim));
}

LieAlgebra build_j_n(int n) {
  if (n < 1) throw InvalidDimension("J_n needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("d" + std::to_string(i));
  const auto d = static_cast<std::size_t>(n);
  return LieAlgebra("j_" + std::to_string(n), std::move(labels), BracketTable(d, std::vector<SparseVector>(d)));
}

LieAlgebra build_sl2() {
  // basis e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h
  BracketTable t(3, std::vector<SparseVector>(3));
  t[2][0] = {{0, Rational(2)}};
  t[0][2] = {{0, Rational(-2)}};
  t[2][1] = {{1, Rational(-2)}};
  t[1][2] = {{1, Rational(2)}};
  t[0][1] = {{2, Rational(1)}};
  t[1][0] = {{2, Rational(-1)}};
  return LieAlgebra("sl_2", {"e", "f", "h"}, std::move(t));
}

AffineOrthogonal build_h_n(int n) {
  if (n < 2) throw InvalidDimension("h_n needs n >= 2");
  const std::size_t m = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t dim = m + static_cast<std::size_t>(n);
  BracketTable so = so_brackets(n, m);
  BracketTable table(dim, std::vector<SparseVector>(dim));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a][b] = so[a][b];
  }
  // [alpha_ij, d_k] = -delta_ik d_j + delta_jk d_i
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto a = alpha_index(n, i, j);
      for (int k = 1; k <= n; ++k) {
        SparseVector v;
        if (i == k) v.emplace_back(partial_index(n, j), Rational(-1));
        if (j == k) v.emplace_back(partial_index(n, i), Rational(1));
        normalize(v);
        SparseVector neg = v;
        for (auto& e : neg) e.second = -e.second;
        table[a][partial_index(n, k)] = std::move(v);
        table[partial_index(n, k)][a] = std::move(neg);
      }
    }
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) labels.push_back(alpha_label(i, j));
  }
  for (int i = 1; i <= n; ++i) labels.push_back("d" + std::to_string(i));

  AffineOrthogonal h;
  h.n = n;
  h.algebra = LieAlgebra("h_" + std::to_string(n), std::move(labels), std::move(table));
  std::vector<std::uint32_t> rot(m), trans(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m; ++i) rot[i] = static_cast<std::uint32_t>(i);
  for (int i = 0; i < n; ++i) trans[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(m + i);
  h.rotations = SubalgebraEmbedding(h.algebra, rot, "so_" + std::to_string(n));
  h.translations = SubalgebraEmbedding(h.algebra, trans, "j_" + std::to_string(n));
  if (!h.translations.is_ideal()) throw JacobiViolation("J_n is not an ideal of h_n");
  return h;
}

LieAlgebra quotient_by_translations(const AffineOrthogonal& h) {
  const auto& rot = h.rotations.members();
  BracketTable table(rot.size(), std::vector<SparseVector>(rot.size()));
  for (std::size_t i = 0; i < rot.size(); ++i) {
    for (std::size_t j = 0; j < rot.size(); ++j) {
      for (const auto& [k, c] : h.algebra.bracket(rot[i], rot[j])) {
        if (auto local = h.rotations.local_index(k)) table[i][j].emplace_back(*local, c);
      }
    }
  }
  return LieAlgebra("h_" + std::to_string(h.n) + "/J", h.rotations.algebra().labels(), std::move(table));
}

}  // namespace lcoh
