#include "lcoh/complexes.hpp"

#include <algorithm>

#include "lcoh/errors.hpp"

namespace lcoh {

void normalize(CodeVector& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    Rational sum = v[i].second;
    while (++j < v.size() && v[j].first == v[i].first) sum += v[j].second;
    if (sgn(sum) != 0) v[out++] = {v[i].first, sum};
    i = j;
  }
  v.resize(out);
}

std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::leibniz: return "leibniz";
    case ComplexKind::ce: return "ce";
    case ComplexKind::homology: return "homology";
    case ComplexKind::rel: return "rel";
    case ComplexKind::cr: return "cr";
  }
  return "?";
}

void CochainComplex::enumerate(int k, const std::function<void(std::uint64_t)>& visit) const {
  const auto bound = code_bound(k);
  for (std::uint64_t c = 0; c < bound; ++c) {
    if (valid(k, c)) visit(c);
  }
}

CodeVector CochainComplex::apply(int k, const CodeVector& v) const {
  CodeVector out, col;
  for (const auto& [code, value] : v) {
    if (!valid(k, code)) throw DimensionMismatch("code is not a basis element of this degree");
    col.clear();
    coboundary(k, code, col);
    for (const auto& [c, x] : col) out.emplace_back(c, x * value);
  }
  normalize(out);
  return out;
}

namespace {

std::string tuple_string(const LieAlgebra& alg, std::span<const std::uint32_t> t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += alg.labels()[t[i]];
  }
  return s;
}

// Coboundary terms shared by the exterior complexes: for each l in S and each
// pair a < b with c(a,b)_l != 0 and a, b outside S \ {l}, visits
// U = (S \ {l}) + {a, b}, the 1-based position j of b in U, the sign of the
// tuple obtained from U by replacing a with l and deleting b, and c(a,b)_l.
template <class Visit>
void bracket_terms(const LieAlgebra& alg, const std::vector<std::uint32_t>& s, Visit&& visit) {
  std::vector<std::uint32_t> rest, u, w;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const std::uint32_t l = s[p];
    rest.assign(s.begin(), s.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
    for (const auto& term : alg.terms_producing(l)) {
      if (term.a >= term.b) continue;
      if (std::binary_search(rest.begin(), rest.end(), term.a) ||
          std::binary_search(rest.begin(), rest.end(), term.b)) {
        continue;
      }
      u = rest;
      u.insert(std::lower_bound(u.begin(), u.end(), term.a), term.a);
      u.insert(std::lower_bound(u.begin(), u.end(), term.b), term.b);
      const auto i = static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), term.a) - u.begin());
      const auto j = static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), term.b) - u.begin());
      w = u;
      w[i] = l;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
      const int sigma = permutation_sign(w);
      visit(u, j + 1, sigma, term.coeff);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// LeibnizComplex

LeibnizComplex::LeibnizComplex(LieAlgebra algebra, GModule module)
    : algebra_(std::move(algebra)), module_(std::move(module)) {
  if (module_.algebra_dim() != algebra_.dim()) throw DimensionMismatch("module does not match algebra");
  grading_ = GradingSet::detect(algebra_, module_);
}

std::uint64_t LeibnizComplex::code_bound(int k) const {
  if (k < 0) return 0;
  return power(algebra_.dim(), static_cast<std::size_t>(k)) * module_.dim();
}

void LeibnizComplex::enumerate(int k, const std::function<void(std::uint64_t)>& visit) const {
  const auto bound = code_bound(k);
  for (std::uint64_t c = 0; c < bound; ++c) visit(c);
}

std::uint64_t LeibnizComplex::encode(std::span<const std::uint32_t> tuple, std::uint32_t target) const {
  return encode_tuple(tuple, algebra_.dim()) * module_.dim() + target;
}

std::uint32_t LeibnizComplex::decode(std::uint64_t code, std::size_t k, std::vector<std::uint32_t>& tuple) const {
  const auto m = module_.dim();
  decode_tuple(code / m, k, algebra_.dim(), tuple);
  return static_cast<std::uint32_t>(code % m);
}

void LeibnizComplex::key(int k, std::uint64_t code, GradingSet::Key& out) const {
  std::vector<std::uint32_t> s;
  const auto t = decode(code, static_cast<std::size_t>(k), s);
  grading_.cochain_key(s, t, out);
}

void LeibnizComplex::coboundary(int k, std::uint64_t code, CodeVector& out) const {
  out.clear();
  std::vector<std::uint32_t> s, u;
  const auto t = decode(code, static_cast<std::size_t>(k), s);
  const auto d = static_cast<std::uint32_t>(algebra_.dim());
  const auto ks = static_cast<std::size_t>(k);
  // (-1)^i g_i . f(g_1 .. ^g_i .. g_{k+1})
  for (std::size_t i = 1; i <= ks + 1; ++i) {
    const bool odd = i % 2 == 1;
    for (std::uint32_t g = 0; g < d; ++g) {
      const auto& col = module_.act_on_basis(g, t);
      if (col.empty()) continue;
      u = s;
      u.insert(u.begin() + static_cast<std::ptrdiff_t>(i - 1), g);
      const auto base = encode_tuple(u, d) * module_.dim();
      for (const auto& [tp, a] : col) out.emplace_back(base + tp, odd ? Rational(-a) : a);
    }
  }
  // (-1)^j f(g_1 .. g_{i-1}, [g_i, g_j], g_{i+1} .. ^g_j .. g_{k+1})
  for (std::size_t i = 1; i <= ks; ++i) {
    for (const auto& term : algebra_.terms_producing(s[i - 1])) {
      for (std::size_t j = i + 1; j <= ks + 1; ++j) {
        u = s;
        u[i - 1] = term.a;
        u.insert(u.begin() + static_cast<std::ptrdiff_t>(j - 1), term.b);
        out.emplace_back(encode(u, t), j % 2 == 1 ? Rational(-term.coeff) : term.coeff);
      }
    }
  }
  normalize(out);
}

std::string LeibnizComplex::describe(int k, std::uint64_t code) const {
  std::vector<std::uint32_t> s;
  const auto t = decode(code, static_cast<std::size_t>(k), s);
  return "(" + tuple_string(algebra_, s) + ") -> v" + std::to_string(t);
}

// ---------------------------------------------------------------------------
// CEComplex

CEComplex::CEComplex(LieAlgebra algebra, GModule module)
    : algebra_(std::move(algebra)), module_(std::move(module)), subsets_(algebra_.dim(), algebra_.dim()) {
  if (module_.algebra_dim() != algebra_.dim()) throw DimensionMismatch("module does not match algebra");
  grading_ = GradingSet::detect(algebra_, module_);
}

std::uint64_t CEComplex::code_bound(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) > algebra_.dim()) return 0;
  return subsets_.count(static_cast<std::size_t>(k)) * module_.dim();
}

std::uint64_t CEComplex::encode(std::span<const std::uint32_t> subset, std::uint32_t target) const {
  return subsets_.rank(subset) * module_.dim() + target;
}

std::uint32_t CEComplex::decode(std::uint64_t code, std::size_t k, std::vector<std::uint32_t>& subset) const {
  subsets_.unrank(code / module_.dim(), k, subset);
  return static_cast<std::uint32_t>(code % module_.dim());
}

void CEComplex::key(int k, std::uint64_t code, GradingSet::Key& out) const {
  std::vector<std::uint32_t> s;
  const auto t = decode(code, static_cast<std::size_t>(k), s);
  grading_.cochain_key(s, t, out);
}

void CEComplex::coboundary(int k, std::uint64_t code, CodeVector& out) const {
  out.clear();
  std::vector<std::uint32_t> s, u;
  const auto t = decode(code, static_cast<std::size_t>(k), s);
  const auto d = static_cast<std::uint32_t>(algebra_.dim());
  for (std::uint32_t g = 0; g < d; ++g) {
    if (std::binary_search(s.begin(), s.end(), g)) continue;
    const auto& col = module_.act_on_basis(g, t);
    if (col.empty()) continue;
    u = s;
    const auto it = u.insert(std::lower_bound(u.begin(), u.end(), g), g);
    const auto i = static_cast<std::size_t>(it - u.begin()) + 1;
    const auto base = subsets_.rank(u) * module_.dim();
    for (const auto& [tp, a] : col) out.emplace_back(base + tp, i % 2 == 1 ? Rational(-a) : a);
  }
  bracket_terms(algebra_, s, [&](const std::vector<std::uint32_t>& uu, std::size_t j, int sigma, const Rational& c) {
    Rational v = c * sigma;
    if (j % 2 == 1) v = -v;
    out.emplace_back(encode(uu, t), v);
  });
  normalize(out);
}

std::string CEComplex::describe(int k, std::uint64_t code) const {
  std::vector<std::uint32_t> s;
  const auto t = decode(code, static_cast<std::size_t>(k), s);
  return "(" + tuple_string(algebra_, s) + ") -> v" + std::to_string(t);
}

// ---------------------------------------------------------------------------
// HomologyDualComplex

HomologyDualComplex::HomologyDualComplex(LieAlgebra algebra, GModule module)
    : algebra_(std::move(algebra)), module_(std::move(module)), subsets_(algebra_.dim(), algebra_.dim()) {
  if (module_.algebra_dim() != algebra_.dim()) throw DimensionMismatch("module does not match algebra");
  grading_ = GradingSet::detect(algebra_, module_);
}

std::uint64_t HomologyDualComplex::code_bound(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) > algebra_.dim()) return 0;
  return subsets_.count(static_cast<std::size_t>(k)) * module_.dim();
}

std::uint64_t HomologyDualComplex::encode(std::uint32_t x, std::span<const std::uint32_t> subset) const {
  return subsets_.rank(subset) * module_.dim() + x;
}

std::uint32_t HomologyDualComplex::decode(std::uint64_t code, std::size_t k,
                                          std::vector<std::uint32_t>& subset) const {
  subsets_.unrank(code / module_.dim(), k, subset);
  return static_cast<std::uint32_t>(code % module_.dim());
}

void HomologyDualComplex::key(int k, std::uint64_t code, GradingSet::Key& out) const {
  std::vector<std::uint32_t> s;
  const auto x = decode(code, static_cast<std::size_t>(k), s);
  grading_.chain_key(x, s, out);
}

// (d* e*_{(x,S)})(v_y (x) U) is the (x, S) coefficient of d(v_y (x) U).
void HomologyDualComplex::coboundary(int k, std::uint64_t code, CodeVector& out) const {
  out.clear();
  std::vector<std::uint32_t> s, u;
  const auto x = decode(code, static_cast<std::size_t>(k), s);
  const auto d = static_cast<std::uint32_t>(algebra_.dim());
  // (-1)^{i+1} (-g . v_y) (x) U \ g with U = S + g
  for (std::uint32_t g = 0; g < d; ++g) {
    if (std::binary_search(s.begin(), s.end(), g)) continue;
    const auto& pre = module_.preimages(g, x);
    if (pre.empty()) continue;
    u = s;
    const auto it = u.insert(std::lower_bound(u.begin(), u.end(), g), g);
    const auto i = static_cast<std::size_t>(it - u.begin()) + 1;
    const auto base = subsets_.rank(u) * module_.dim();
    for (const auto& [y, a] : pre) out.emplace_back(base + y, i % 2 == 1 ? Rational(-a) : a);
  }
  // (-1)^{j+1} v_x (x) (.. [u_i, u_j] .. ^u_j ..)
  bracket_terms(algebra_, s, [&](const std::vector<std::uint32_t>& uu, std::size_t j, int sigma, const Rational& c) {
    Rational v = c * sigma;
    if (j % 2 == 0) v = -v;
    out.emplace_back(encode(x, uu), v);
  });
  normalize(out);
}

std::string HomologyDualComplex::describe(int k, std::uint64_t code) const {
  std::vector<std::uint32_t> s;
  const auto x = decode(code, static_cast<std::size_t>(k), s);
  return "v" + std::to_string(x) + " (x) (" + tuple_string(algebra_, s) + ")";
}

// ---------------------------------------------------------------------------
// RelativeComplex

namespace {

bool strictly_increasing(const std::vector<std::uint32_t>& t) {
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i - 1] >= t[i]) return false;
  }
  return true;
}

}  // namespace

RelativeComplex::RelativeComplex(std::shared_ptr<const LeibnizComplex> leibniz) : leibniz_(std::move(leibniz)) {}

std::uint64_t RelativeComplex::code_bound(int k) const { return k < 0 ? 0 : leibniz_->code_bound(k + 2); }

std::uint64_t RelativeComplex::dimension(int k) const {
  if (k < 0) return 0;
  const auto d = leibniz_->algebra().dim();
  const auto ks = static_cast<std::size_t>(k + 2);
  const std::uint64_t skew = ks > d ? 0 : SubsetIndexer(d, ks).count(ks);
  return leibniz_->code_bound(k + 2) - skew * leibniz_->module().dim();
}

bool RelativeComplex::valid(int k, std::uint64_t code) const {
  if (k < 0 || code >= code_bound(k)) return false;
  std::vector<std::uint32_t> s;
  leibniz_->decode(code, static_cast<std::size_t>(k + 2), s);
  return !strictly_increasing(s);
}

void RelativeComplex::enumerate(int k, const std::function<void(std::uint64_t)>& visit) const {
  const auto bound = code_bound(k);
  std::vector<std::uint32_t> s;
  for (std::uint64_t c = 0; c < bound; ++c) {
    leibniz_->decode(c, static_cast<std::size_t>(k + 2), s);
    if (!strictly_increasing(s)) visit(c);
  }
}

void RelativeComplex::key(int k, std::uint64_t code, GradingSet::Key& out) const { leibniz_->key(k + 2, code, out); }

CodeVector RelativeComplex::project(int k, const CodeVector& v) const {
  CodeVector out;
  std::vector<std::uint32_t> s, perm, sorted;
  const auto arity = static_cast<std::size_t>(k + 2);
  for (const auto& [code, c] : v) {
    const auto t = leibniz_->decode(code, arity, s);
    if (!strictly_increasing(s)) {
      out.emplace_back(code, c);
      continue;
    }
    perm = s;
    while (std::next_permutation(perm.begin(), perm.end())) {
      const int sign = permutation_sign(perm);
      out.emplace_back(leibniz_->encode(perm, t), sign > 0 ? Rational(-c) : c);
    }
  }
  normalize(out);
  return out;
}

void RelativeComplex::coboundary(int k, std::uint64_t code, CodeVector& out) const {
  leibniz_->coboundary(k + 2, code, out);
  out = project(k + 1, out);
}

std::string RelativeComplex::describe(int k, std::uint64_t code) const { return leibniz_->describe(k + 2, code); }

// ---------------------------------------------------------------------------
// CRComplex

CRComplex::CRComplex(std::shared_ptr<const HomologyDualComplex> dual) : dual_(std::move(dual)) {
  if (dual_->module().dim() != dual_->algebra().dim()) throw DimensionMismatch("CR needs the adjoint module");
}

std::uint64_t CRComplex::code_bound(int k) const { return k < 0 ? 0 : dual_->code_bound(k + 1); }

std::uint64_t CRComplex::dimension(int k) const {
  if (k < 0) return 0;
  const auto d = dual_->algebra().dim();
  const auto top = static_cast<std::size_t>(k + 2);
  const std::uint64_t pivots = top > d ? 0 : SubsetIndexer(d, top).count(top);
  return dual_->code_bound(k + 1) - pivots;
}

namespace {

bool is_pivot(std::uint32_t x, const std::vector<std::uint32_t>& s) { return !s.empty() && x < s.front(); }

}  // namespace

bool CRComplex::valid(int k, std::uint64_t code) const {
  if (k < 0 || code >= code_bound(k)) return false;
  std::vector<std::uint32_t> s;
  const auto x = dual_->decode(code, static_cast<std::size_t>(k + 1), s);
  return !is_pivot(x, s);
}

void CRComplex::enumerate(int k, const std::function<void(std::uint64_t)>& visit) const {
  const auto bound = code_bound(k);
  std::vector<std::uint32_t> s;
  for (std::uint64_t c = 0; c < bound; ++c) {
    const auto x = dual_->decode(c, static_cast<std::size_t>(k + 1), s);
    if (!is_pivot(x, s)) visit(c);
  }
}

void CRComplex::key(int k, std::uint64_t code, GradingSet::Key& out) const { dual_->key(k + 1, code, out); }

// pi_R^*(e*_U) = sum_p (-1)^p e*_{(u_p, U \ u_p)}; its p = 0 term is the pivot.
CodeVector CRComplex::project(int k, const CodeVector& v) const {
  CodeVector out;
  std::vector<std::uint32_t> s, u, rest;
  const auto len = static_cast<std::size_t>(k + 1);
  for (const auto& [code, c] : v) {
    const auto x = dual_->decode(code, len, s);
    if (!is_pivot(x, s)) {
      out.emplace_back(code, c);
      continue;
    }
    u = s;
    u.insert(u.begin(), x);
    for (std::size_t p = 1; p < u.size(); ++p) {
      rest = u;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      out.emplace_back(dual_->encode(u[p], rest), p % 2 == 1 ? c : Rational(-c));
    }
  }
  normalize(out);
  return out;
}

void CRComplex::coboundary(int k, std::uint64_t code, CodeVector& out) const {
  dual_->coboundary(k + 1, code, out);
  out = project(k + 1, out);
}

std::string CRComplex::describe(int k, std::uint64_t code) const { return dual_->describe(k + 1, code); }

}  // namespace lcoh
