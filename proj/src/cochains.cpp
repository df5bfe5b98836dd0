#include "lcoh/cochains.hpp"

#include <algorithm>

#include <json.hpp>

#include "lcoh/combinatorics.hpp"
#include "lcoh/complexes.hpp"
#include "lcoh/errors.hpp"

namespace lcoh {

namespace {

void check_tuple(const std::vector<std::uint32_t>& tuple, std::size_t arity, std::size_t algebra_dim) {
  if (tuple.size() != arity) throw DimensionMismatch("tuple length differs from cochain arity");
  for (auto x : tuple) {
    if (x >= algebra_dim) throw DimensionMismatch("tuple index out of range");
  }
}

template <class Map, class Key>
void accumulate(Map& terms, Key key, const Rational& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = terms.try_emplace(std::move(key), value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

template <class Map, class Other>
void merge_into(Map& terms, const Other& other) {
  for (const auto& [k, v] : other) accumulate(terms, k, v);
}

template <class Map>
void scale_terms(Map& terms, const Rational& s) {
  if (sgn(s) == 0) {
    terms.clear();
    return;
  }
  for (auto& [k, v] : terms) v *= s;
}

}  // namespace

// ---------------------------------------------------------------------------
// TensorCochain

TensorCochain::TensorCochain(std::size_t arity, std::size_t algebra_dim, std::size_t module_dim)
    : arity_(arity), algebra_dim_(algebra_dim), module_dim_(module_dim) {}

void TensorCochain::add(std::vector<std::uint32_t> tuple, std::uint32_t target, const Rational& value) {
  check_tuple(tuple, arity_, algebra_dim_);
  if (target >= module_dim_) throw DimensionMismatch("target index out of range");
  accumulate(terms_, CochainIndex{std::move(tuple), target}, value);
}

Rational TensorCochain::coefficient(const std::vector<std::uint32_t>& tuple, std::uint32_t target) const {
  auto it = terms_.find(CochainIndex{tuple, target});
  return it == terms_.end() ? Rational(0) : it->second;
}

SparseVector TensorCochain::evaluate(std::span<const std::uint32_t> tuple) const {
  SparseVector out;
  CochainIndex lo{std::vector<std::uint32_t>(tuple.begin(), tuple.end()), 0};
  for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first.tuple == lo.tuple; ++it) {
    out.emplace_back(it->first.target, it->second);
  }
  return out;
}

TensorCochain& TensorCochain::operator+=(const TensorCochain& other) {
  if (other.arity_ != arity_ || other.algebra_dim_ != algebra_dim_ || other.module_dim_ != module_dim_) {
    throw DimensionMismatch("adding cochains of different shapes");
  }
  merge_into(terms_, other.terms_);
  return *this;
}

TensorCochain& TensorCochain::operator*=(const Rational& scale) {
  scale_terms(terms_, scale);
  return *this;
}

// ---------------------------------------------------------------------------
// WedgeCochain

WedgeCochain::WedgeCochain(std::size_t arity, std::size_t algebra_dim, std::size_t module_dim)
    : arity_(arity), algebra_dim_(algebra_dim), module_dim_(module_dim) {}

void WedgeCochain::add(std::vector<std::uint32_t> tuple, std::uint32_t target, const Rational& value) {
  check_tuple(tuple, arity_, algebra_dim_);
  if (target >= module_dim_) throw DimensionMismatch("target index out of range");
  const int sign = sort_with_sign(tuple);
  if (sign == 0) return;
  accumulate(terms_, CochainIndex{std::move(tuple), target}, sign > 0 ? value : Rational(-value));
}

Rational WedgeCochain::coefficient(std::vector<std::uint32_t> tuple, std::uint32_t target) const {
  const int sign = sort_with_sign(tuple);
  if (sign == 0) return Rational(0);
  auto it = terms_.find(CochainIndex{std::move(tuple), target});
  if (it == terms_.end()) return Rational(0);
  return sign > 0 ? it->second : Rational(-it->second);
}

SparseVector WedgeCochain::evaluate(std::span<const std::uint32_t> tuple) const {
  std::vector<std::uint32_t> sorted(tuple.begin(), tuple.end());
  const int sign = sort_with_sign(sorted);
  SparseVector out;
  if (sign == 0) return out;
  CochainIndex lo{sorted, 0};
  for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first.tuple == sorted; ++it) {
    out.emplace_back(it->first.target, sign > 0 ? it->second : Rational(-it->second));
  }
  return out;
}

WedgeCochain& WedgeCochain::operator+=(const WedgeCochain& other) {
  if (other.arity_ != arity_ || other.algebra_dim_ != algebra_dim_ || other.module_dim_ != module_dim_) {
    throw DimensionMismatch("adding cochains of different shapes");
  }
  merge_into(terms_, other.terms_);
  return *this;
}

WedgeCochain& WedgeCochain::operator*=(const Rational& scale) {
  scale_terms(terms_, scale);
  return *this;
}

// ---------------------------------------------------------------------------
// HomologyChain

HomologyChain::HomologyChain(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim)
    : degree_(degree), algebra_dim_(algebra_dim), module_dim_(module_dim) {}

void HomologyChain::add(std::uint32_t x, std::vector<std::uint32_t> tuple, const Rational& value) {
  check_tuple(tuple, degree_, algebra_dim_);
  if (x >= module_dim_) throw DimensionMismatch("module index out of range");
  const int sign = sort_with_sign(tuple);
  if (sign == 0) return;
  accumulate(terms_, ChainIndex{x, std::move(tuple)}, sign > 0 ? value : Rational(-value));
}

Rational HomologyChain::coefficient(std::uint32_t x, std::vector<std::uint32_t> tuple) const {
  const int sign = sort_with_sign(tuple);
  if (sign == 0) return Rational(0);
  auto it = terms_.find(ChainIndex{x, std::move(tuple)});
  if (it == terms_.end()) return Rational(0);
  return sign > 0 ? it->second : Rational(-it->second);
}

HomologyChain& HomologyChain::operator+=(const HomologyChain& other) {
  if (other.degree_ != degree_ || other.algebra_dim_ != algebra_dim_ || other.module_dim_ != module_dim_) {
    throw DimensionMismatch("adding chains of different shapes");
  }
  merge_into(terms_, other.terms_);
  return *this;
}

HomologyChain& HomologyChain::operator*=(const Rational& scale) {
  scale_terms(terms_, scale);
  return *this;
}

// ---------------------------------------------------------------------------
// Differentials

namespace {

void check_shape(std::size_t algebra_dim, std::size_t module_dim, const LieAlgebra& alg, const GModule& m) {
  if (algebra_dim != alg.dim() || module_dim != m.dim() || m.algebra_dim() != alg.dim()) {
    throw DimensionMismatch("cochain shape does not match algebra and module");
  }
}

}  // namespace

CodeVector to_codes(const TensorCochain& f, const LeibnizComplex& complex) {
  CodeVector v;
  for (const auto& [idx, c] : f.terms()) v.emplace_back(complex.encode(idx.tuple, idx.target), c);
  normalize(v);
  return v;
}

CodeVector to_codes(const WedgeCochain& f, const CEComplex& complex) {
  CodeVector v;
  for (const auto& [idx, c] : f.terms()) v.emplace_back(complex.encode(idx.tuple, idx.target), c);
  normalize(v);
  return v;
}

TensorCochain leibniz_coboundary(const TensorCochain& f, const LieAlgebra& algebra, const GModule& module) {
  check_shape(f.algebra_dim(), f.module_dim(), algebra, module);
  const LeibnizComplex complex(algebra, module);
  const int k = static_cast<int>(f.arity());
  const CodeVector v = to_codes(f, complex);
  TensorCochain out(f.arity() + 1, f.algebra_dim(), f.module_dim());
  std::vector<std::uint32_t> tuple;
  for (const auto& [code, c] : complex.apply(k, v)) {
    const auto t = complex.decode(code, f.arity() + 1, tuple);
    out.add(tuple, t, c);
  }
  return out;
}

WedgeCochain ce_coboundary(const WedgeCochain& f, const LieAlgebra& algebra, const GModule& module) {
  check_shape(f.algebra_dim(), f.module_dim(), algebra, module);
  WedgeCochain out(f.arity() + 1, f.algebra_dim(), f.module_dim());
  if (f.arity() + 1 > algebra.dim()) return out;
  const CEComplex complex(algebra, module);
  const int k = static_cast<int>(f.arity());
  const CodeVector v = to_codes(f, complex);
  std::vector<std::uint32_t> tuple;
  for (const auto& [code, c] : complex.apply(k, v)) {
    const auto t = complex.decode(code, f.arity() + 1, tuple);
    out.add(tuple, t, c);
  }
  return out;
}

HomologyChain homology_differential(const HomologyChain& c, const LieAlgebra& algebra, const GModule& module) {
  check_shape(c.algebra_dim(), c.module_dim(), algebra, module);
  if (c.degree() == 0) throw DimensionMismatch("homology differential needs degree >= 1");
  HomologyChain out(c.degree() - 1, c.algebra_dim(), c.module_dim());
  std::vector<std::uint32_t> w;
  for (const auto& [idx, coeff] : c.terms()) {
    const auto& u = idx.tuple;
    const std::size_t n = u.size();
    for (std::size_t i = 1; i <= n; ++i) {
      w = u;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i - 1));
      // (-1)^{i+1} (-u_i . v_x)
      for (const auto& [y, a] : module.act_on_basis(u[i - 1], idx.x)) {
        out.add(y, w, i % 2 == 1 ? Rational(-coeff * a) : Rational(coeff * a));
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        for (const auto& [l, b] : algebra.bracket(u[i - 1], u[j - 1])) {
          w = u;
          w[i - 1] = l;
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j - 1));
          out.add(idx.x, w, j % 2 == 1 ? Rational(coeff * b) : Rational(-coeff * b));
        }
      }
    }
  }
  return out;
}

ChainFunctional d_star(const ChainFunctional& phi, const LieAlgebra& algebra, const GModule& module) {
  check_shape(phi.algebra_dim(), phi.module_dim(), algebra, module);
  const std::size_t k = phi.degree() + 1;
  ChainFunctional out(k, phi.algebra_dim(), phi.module_dim());
  if (k > algebra.dim()) return out;
  for (const auto& u : combinations(algebra.dim(), k)) {
    for (std::uint32_t y = 0; y < module.dim(); ++y) {
      HomologyChain c(k, algebra.dim(), module.dim());
      c.add(y, u, Rational(1));
      Rational value = 0;
      const HomologyChain dc = homology_differential(c, algebra, module);
      for (const auto& [idx, a] : dc.terms()) {
        auto it = phi.terms().find(idx);
        if (it != phi.terms().end()) value += a * it->second;
      }
      out.add(y, u, value);
    }
  }
  return out;
}

ChainFunctional phi_iso(const WedgeCochain& a) {
  ChainFunctional out(a.arity(), a.algebra_dim(), a.module_dim());
  const bool odd = a.arity() % 2 == 1;
  for (const auto& [idx, c] : a.terms()) out.add(idx.target, idx.tuple, odd ? Rational(-c) : c);
  return out;
}

// ---------------------------------------------------------------------------
// Conversions and products

TensorCochain to_tensor(const WedgeCochain& f) {
  TensorCochain out(f.arity(), f.algebra_dim(), f.module_dim());
  std::vector<std::uint32_t> perm;
  for (const auto& [idx, c] : f.terms()) {
    perm = idx.tuple;
    do {
      const int sign = permutation_sign(perm);
      out.add(perm, idx.target, sign > 0 ? c : Rational(-c));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

TensorCochain skew_symmetrize(const WedgeCochain& a) { return to_tensor(a); }

std::optional<WedgeCochain> to_wedge(const TensorCochain& f) {
  WedgeCochain w(f.arity(), f.algebra_dim(), f.module_dim());
  for (const auto& [idx, c] : f.terms()) {
    if (std::is_sorted(idx.tuple.begin(), idx.tuple.end()) &&
        std::adjacent_find(idx.tuple.begin(), idx.tuple.end()) == idx.tuple.end()) {
      w.add(idx.tuple, idx.target, c);
    }
  }
  if (!(to_tensor(w) == f)) return std::nullopt;
  return w;
}

TensorCochain tensor_product(const TensorCochain& a, const TensorCochain& b) {
  if (b.module_dim() != 1 || a.algebra_dim() != b.algebra_dim()) {
    throw DimensionMismatch("tensor product needs a trivial-valued right factor on the same algebra");
  }
  TensorCochain out(a.arity() + b.arity(), a.algebra_dim(), a.module_dim());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      auto t = ia.tuple;
      t.insert(t.end(), ib.tuple.begin(), ib.tuple.end());
      out.add(std::move(t), ia.target, ca * cb);
    }
  }
  return out;
}

WedgeCochain wedge_extend(const WedgeCochain& a, const WedgeCochain& b) {
  if (b.module_dim() != 1 || a.algebra_dim() != b.algebra_dim()) {
    throw DimensionMismatch("wedge product needs a trivial-valued right factor on the same algebra");
  }
  WedgeCochain out(a.arity() + b.arity(), a.algebra_dim(), a.module_dim());
  if (a.arity() + b.arity() > a.algebra_dim()) return out;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      auto t = ia.tuple;
      t.insert(t.end(), ib.tuple.begin(), ib.tuple.end());
      out.add(std::move(t), ia.target, ca * cb);
    }
  }
  return out;
}

TensorCochain skew_extend(const WedgeCochain& f, const SubalgebraEmbedding& domain) {
  if (f.algebra_dim() != domain.members().size()) throw DimensionMismatch("cochain does not live on this subalgebra");
  TensorCochain out(f.arity(), domain.parent().dim(), f.module_dim());
  std::vector<std::uint32_t> perm;
  for (const auto& [idx, c] : f.terms()) {
    perm.clear();
    for (auto s : idx.tuple) perm.push_back(domain.members()[s]);
    std::sort(perm.begin(), perm.end());
    do {
      const int sign = permutation_sign(perm);
      out.add(perm, idx.target, sign > 0 ? c : Rational(-c));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

TensorCochain skew_extend(const ChainFunctional& phi, const SubalgebraEmbedding& domain) {
  if (phi.algebra_dim() != domain.members().size() || phi.module_dim() != domain.parent().dim()) {
    throw DimensionMismatch("functional does not live on parent (x) subalgebra");
  }
  TensorCochain out(phi.degree() + 1, domain.parent().dim(), 1);
  std::vector<std::uint32_t> perm, tuple;
  for (const auto& [idx, c] : phi.terms()) {
    perm.clear();
    for (auto s : idx.tuple) perm.push_back(domain.members()[s]);
    std::sort(perm.begin(), perm.end());
    do {
      const int sign = permutation_sign(perm);
      tuple.assign(1, idx.x);
      tuple.insert(tuple.end(), perm.begin(), perm.end());
      out.add(tuple, 0, sign > 0 ? c : Rational(-c));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// g-action

namespace {

std::vector<std::int64_t> local_indices(const ActionContext& ctx) {
  std::vector<std::int64_t> local(ctx.parent->dim(), -1);
  for (std::uint32_t i = 0; i < ctx.domain_dim(); ++i) local[ctx.to_parent(i)] = i;
  return local;
}

void check_context(const ActionContext& ctx, std::uint32_t g, std::size_t algebra_dim, std::size_t module_dim) {
  if (!ctx.parent || !ctx.module) throw DimensionMismatch("action context is incomplete");
  if (g >= ctx.parent->dim()) throw DimensionMismatch("acting element out of range");
  if (algebra_dim != ctx.domain_dim() || module_dim != ctx.module->dim()) {
    throw DimensionMismatch("cochain shape does not match action context");
  }
}

// Calls emit(local x, coefficient) for each x in the domain whose bracket
// [x, g] has a component on the parent element of s_local.
template <class Emit>
void bracket_preimages(const ActionContext& ctx, const std::vector<std::int64_t>& local, std::uint32_t g,
                       std::uint32_t s_local, Emit&& emit) {
  for (const auto& term : ctx.parent->terms_producing(ctx.to_parent(s_local))) {
    if (term.b != g) continue;
    if (local[term.a] < 0) continue;
    emit(static_cast<std::uint32_t>(local[term.a]), term.coeff);
  }
}

template <class Cochain>
Cochain act_on_cochain(std::uint32_t g, const Cochain& f, const ActionContext& ctx) {
  check_context(ctx, g, f.algebra_dim(), f.module_dim());
  const auto local = local_indices(ctx);
  Cochain out(f.arity(), f.algebra_dim(), f.module_dim());
  for (const auto& [idx, c] : f.terms()) {
    for (const auto& [t, a] : ctx.module->act_on_basis(g, idx.target)) out.add(idx.tuple, t, c * a);
    for (std::size_t i = 0; i < idx.tuple.size(); ++i) {
      bracket_preimages(ctx, local, g, idx.tuple[i], [&](std::uint32_t x, const Rational& b) {
        auto t = idx.tuple;
        t[i] = x;
        out.add(std::move(t), idx.target, c * b);
      });
    }
  }
  return out;
}

}  // namespace

TensorCochain g_action(std::uint32_t g, const TensorCochain& f, const ActionContext& ctx) {
  return act_on_cochain(g, f, ctx);
}

WedgeCochain g_action(std::uint32_t g, const WedgeCochain& f, const ActionContext& ctx) {
  return act_on_cochain(g, f, ctx);
}

ChainFunctional g_action(std::uint32_t g, const ChainFunctional& phi, const ActionContext& ctx) {
  check_context(ctx, g, phi.algebra_dim(), phi.module_dim());
  const auto local = local_indices(ctx);
  ChainFunctional out(phi.degree(), phi.algebra_dim(), phi.module_dim());
  for (const auto& [idx, c] : phi.terms()) {
    // phi(-g . v_u (x) S): v_u contributes through (g . v_u)_x.
    for (const auto& [u, a] : ctx.module->preimages(g, idx.x)) out.add(u, idx.tuple, -c * a);
    for (std::size_t i = 0; i < idx.tuple.size(); ++i) {
      bracket_preimages(ctx, local, g, idx.tuple[i], [&](std::uint32_t x, const Rational& b) {
        auto t = idx.tuple;
        t[i] = x;
        out.add(idx.x, std::move(t), c * b);
      });
    }
  }
  return out;
}

std::vector<SparseVector> invariant_subspace(const GModule& module, std::span<const std::uint32_t> generators) {
  const std::size_t d = module.dim();
  SparseRationalMatrix stacked(d * generators.size(), d);
  for (std::size_t c = 0; c < d; ++c) {
    SparseVector col;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (const auto& [r, v] : module.act_on_basis(generators[i], c)) {
        col.emplace_back(static_cast<std::uint32_t>(i * d + r), v);
      }
    }
    stacked.set_column(c, std::move(col));
  }
  return kernel_basis_sparse(stacked);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

using nlohmann::json;

template <class Cochain>
std::string to_json_text(const Cochain& f) {
  json doc;
  doc["arity"] = f.arity();
  json coeffs = json::array();
  for (const auto& [idx, c] : f.terms()) {
    coeffs.push_back({{"tuple", idx.tuple}, {"target", idx.target}, {"value", to_string(c)}});
  }
  doc["coefficients"] = coeffs;
  return doc.dump();
}

template <class Cochain>
Cochain from_json_text(const std::string& text, std::size_t algebra_dim, std::size_t module_dim) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed cochain: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("arity") || !doc["arity"].is_number_unsigned()) {
    throw ParseError("cochain needs a non-negative integer 'arity'");
  }
  Cochain out(doc["arity"].get<std::size_t>(), algebra_dim, module_dim);
  if (!doc.contains("coefficients")) return out;
  if (!doc["coefficients"].is_array()) throw ParseError("'coefficients' must be an array");
  for (const auto& rec : doc["coefficients"]) {
    try {
      auto tuple = rec.at("tuple").get<std::vector<std::uint32_t>>();
      const auto target = rec.at("target").get<std::uint32_t>();
      const auto& v = rec.at("value");
      const Rational value = v.is_string() ? parse_rational(v.get<std::string>())
                                           : Rational(std::to_string(v.get<long long>()));
      out.add(std::move(tuple), target, value);
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed cochain record: ") + e.what());
    }
  }
  return out;
}

}  // namespace

std::string cochain_to_json(const TensorCochain& f) { return to_json_text(f); }
std::string cochain_to_json(const WedgeCochain& f) { return to_json_text(f); }

TensorCochain tensor_cochain_from_json(const std::string& text, std::size_t algebra_dim, std::size_t module_dim) {
  return from_json_text<TensorCochain>(text, algebra_dim, module_dim);
}

WedgeCochain wedge_cochain_from_json(const std::string& text, std::size_t algebra_dim, std::size_t module_dim) {
  return from_json_text<WedgeCochain>(text, algebra_dim, module_dim);
}

}  // namespace lcoh
