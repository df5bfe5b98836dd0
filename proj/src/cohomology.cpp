#include "lcoh/cohomology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "lcoh/errors.hpp"

namespace lcoh {

std::optional<std::uint32_t> DegreeLayout::find(const GradingSet::Key& key) const {
  auto it = block_of_key.find(key);
  if (it == block_of_key.end()) return std::nullopt;
  return it->second;
}

CohomologyEngine::CohomologyEngine(std::shared_ptr<const CochainComplex> complex, EngineOptions options)
    : complex_(std::move(complex)), options_(options) {}

void CohomologyEngine::check_budget(int k) const {
  const auto bound = complex_->code_bound(k);
  if (bound > options_.max_codes) {
    throw ResourceLimit("degree " + std::to_string(k) + " of the " + to_string(complex_->kind()) + " complex spans " +
                        std::to_string(bound) + " basis codes; the budget is " + std::to_string(options_.max_codes));
  }
}

const DegreeLayout& CohomologyEngine::layout(int k) {
  auto it = layouts_.find(k);
  if (it != layouts_.end()) return it->second;
  check_budget(k);
  DegreeLayout lay;
  const auto bound = complex_->code_bound(k);
  lay.block.assign(bound, DegreeLayout::npos);
  lay.position.assign(bound, 0);
  GradingSet::Key key;
  complex_->enumerate(k, [&](std::uint64_t code) {
    complex_->key(k, code, key);
    auto [pos, inserted] = lay.block_of_key.try_emplace(key, static_cast<std::uint32_t>(lay.codes.size()));
    if (inserted) {
      lay.keys.push_back(key);
      lay.codes.emplace_back();
    }
    auto& codes = lay.codes[pos->second];
    lay.block[code] = pos->second;
    lay.position[code] = static_cast<std::uint32_t>(codes.size());
    codes.push_back(code);
  });
  return layouts_.emplace(k, std::move(lay)).first->second;
}

std::optional<std::uint32_t> CohomologyEngine::target_block(int k, std::uint32_t source_block) {
  const auto& key = layout(k).keys.at(source_block);
  return layout(k + 1).find(key);
}

SparseRationalMatrix CohomologyEngine::block_matrix(int k, std::uint32_t source_block) {
  const auto& src = layout(k);
  const auto& dst = layout(k + 1);
  const auto tb = dst.find(src.keys.at(source_block));
  const std::size_t rows = tb ? dst.codes[*tb].size() : 0;
  SparseRationalMatrix m(rows, 0);
  CodeVector col;
  for (auto code : src.codes[source_block]) {
    complex_->coboundary(k, code, col);
    SparseVector local;
    local.reserve(col.size());
    for (const auto& [c, v] : col) {
      if (c >= dst.block.size() || !tb || dst.block[c] != *tb) {
        throw std::logic_error("coboundary of " + complex_->describe(k, code) + " leaves its grading block");
      }
      local.emplace_back(dst.position[c], v);
    }
    m.append_column(std::move(local));
  }
  return m;
}

const RankCertificate& CohomologyEngine::rank(int k) {
  auto it = ranks_.find(k);
  if (it != ranks_.end()) return it->second;
  RankCertificate total;
  total.method = options_.rank.mode == RankMode::modular ? RankMode::modular : RankMode::exact;
  if (k >= 0 && complex_->dimension(k) > 0 && complex_->dimension(k + 1) > 0) {
    const auto blocks = layout(k).block_count();
    layout(k + 1);
    bool any_modular = false;
    for (std::uint32_t b = 0; b < blocks; ++b) {
      const auto m = block_matrix(k, b);
      if (m.rows() == 0 || m.nonzeros() == 0) continue;
      const auto cert = lcoh::rank(m, options_.rank);
      total.rank += cert.rank;
      total.agreement = total.agreement && cert.agreement;
      if (cert.method == RankMode::modular) {
        any_modular = true;
        for (auto p : cert.primes_used) {
          if (std::find(total.primes_used.begin(), total.primes_used.end(), p) == total.primes_used.end()) {
            total.primes_used.push_back(p);
          }
        }
      }
    }
    total.method = any_modular ? RankMode::modular : RankMode::exact;
  }
  return ranks_.emplace(k, std::move(total)).first->second;
}

std::uint64_t CohomologyEngine::dimension(int k) {
  if (k < 0) return 0;
  const auto dim = complex_->dimension(k);
  const auto r_out = rank(k).rank;
  const auto r_in = k > 0 ? rank(k - 1).rank : 0;
  if (r_out + r_in > dim) throw std::logic_error("rank arithmetic exceeds cochain dimension");
  return dim - r_out - r_in;
}

CohomologyReport CohomologyEngine::report(int max_degree, bool with_representatives) {
  CohomologyReport rep;
  rep.complex = to_string(complex_->kind());
  rep.max_degree = max_degree;
  for (int k = 0; k <= max_degree; ++k) {
    rep.cochain_dims.push_back(complex_->dimension(k));
    rep.dims.push_back(dimension(k));
    rep.ranks.push_back(rank(k));
    if (with_representatives) rep.representatives.push_back(representatives(k));
  }
  return rep;
}

void CohomologyEngine::add_image_of_blocks(int k, const std::vector<std::uint32_t>& blocks,
                                           const std::function<void(const CodeVector&)>& sink) {
  if (k <= 0) return;
  const auto& prev = layout(k - 1);
  const auto& cur = layout(k);
  for (std::uint32_t sb = 0; sb < prev.block_count(); ++sb) {
    const auto tb = cur.find(prev.keys[sb]);
    if (!tb || std::find(blocks.begin(), blocks.end(), *tb) == blocks.end()) continue;
    const auto m = block_matrix(k - 1, sb);
    const auto& codes = cur.codes[*tb];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      CodeVector v;
      for (const auto& [r, x] : m.column(c)) v.emplace_back(codes[r], x);
      if (!v.empty()) sink(v);
    }
  }
}

const std::vector<CodeVector>& CohomologyEngine::representatives(int k) {
  auto it = reps_.find(k);
  if (it != reps_.end()) return it->second;
  std::vector<CodeVector> reps;
  if (k >= 0 && complex_->dimension(k) > 0) {
    const auto& lay = layout(k);
    const bool has_next = complex_->dimension(k + 1) > 0;
    if (has_next) layout(k + 1);
    for (std::uint32_t b = 0; b < lay.block_count(); ++b) {
      const auto& codes = lay.codes[b];
      std::vector<SparseVector> kernel;
      const auto m = has_next ? block_matrix(k, b) : SparseRationalMatrix(0, codes.size());
      if (m.rows() == 0) {
        for (std::uint32_t i = 0; i < codes.size(); ++i) kernel.push_back({{i, Rational(1)}});
      } else {
        kernel = kernel_basis_sparse(m);
      }
      if (kernel.empty()) continue;
      LinearSpan span(codes.size());
      add_image_of_blocks(k, {b}, [&](const CodeVector& v) {
        SparseVector local;
        for (const auto& [c, x] : v) local.emplace_back(lay.position[c], x);
        span.add(local);
      });
      for (const auto& z : kernel) {
        if (!span.add(z)) continue;
        CodeVector v;
        for (const auto& [i, x] : z) v.emplace_back(codes[i], x);
        reps.push_back(std::move(v));
      }
    }
    if (reps.size() != dimension(k)) {
      throw std::logic_error("representative count " + std::to_string(reps.size()) + " differs from dim H^" +
                             std::to_string(k) + " = " + std::to_string(dimension(k)));
    }
  }
  return reps_.emplace(k, std::move(reps)).first->second;
}

bool CohomologyEngine::is_cocycle(int k, const CodeVector& v) { return complex_->apply(k, v).empty(); }

std::optional<CodeVector> CohomologyEngine::coboundary_witness(int k, const CodeVector& v) {
  if (!is_cocycle(k, v)) throw NotACocycle("vector of degree " + std::to_string(k) + " is not a cocycle");
  if (v.empty()) return CodeVector{};
  if (k == 0) return std::nullopt;
  const auto& lay = layout(k);
  const auto& prev = layout(k - 1);
  std::map<std::uint32_t, CodeVector> by_block;
  for (const auto& e : v) by_block[lay.block.at(e.first)].push_back(e);
  CodeVector witness;
  for (const auto& [b, part] : by_block) {
    SparseRationalMatrix m(lay.codes[b].size(), 0);
    std::vector<std::uint64_t> column_codes;
    for (std::uint32_t sb = 0; sb < prev.block_count(); ++sb) {
      const auto tb = lay.find(prev.keys[sb]);
      if (!tb || *tb != b) continue;
      const auto bm = block_matrix(k - 1, sb);
      for (std::size_t c = 0; c < bm.cols(); ++c) {
        m.append_column(bm.column(c));
        column_codes.push_back(prev.codes[sb][c]);
      }
    }
    DenseVector rhs(lay.codes[b].size(), Rational(0));
    for (const auto& [c, x] : part) rhs[lay.position[c]] = x;
    const auto mem = in_image(m, rhs);
    if (!mem.member) return std::nullopt;
    for (std::size_t c = 0; c < mem.witness.size(); ++c) {
      if (sgn(mem.witness[c]) != 0) witness.emplace_back(column_codes[c], mem.witness[c]);
    }
  }
  normalize(witness);
  return witness;
}

void check_chain_map(CohomologyEngine& source, int k, CohomologyEngine& target, int l, const CochainMap& map,
                     int sign) {
  const auto& src = source.complex();
  const auto& dst = target.complex();
  CodeVector col;
  src.enumerate(k, [&](std::uint64_t code) {
    const CodeVector e{{code, Rational(1)}};
    src.coboundary(k, code, col);
    const CodeVector lhs = map(k + 1, col);
    CodeVector rhs = dst.apply(l, map(k, e));
    if (sign < 0) {
      for (auto& [c, x] : rhs) x = -x;
    }
    if (lhs != rhs) {
      throw NotAChainMap("cochain map does not commute with the differentials at " + src.describe(k, code));
    }
  });
}

std::size_t induced_map_rank(CohomologyEngine& source, int k, CohomologyEngine& target, int l, const CochainMap& map,
                             bool verify_chain_map) {
  if (verify_chain_map) check_chain_map(source, k, target, l, map);
  const auto& reps = source.representatives(k);
  if (reps.empty()) return 0;
  std::vector<CodeVector> images;
  for (const auto& r : reps) {
    images.push_back(map(k, r));
    if (!target.is_cocycle(l, images.back())) {
      throw NotAChainMap("image of a cocycle of degree " + std::to_string(k) + " is not a cocycle");
    }
  }
  const auto& lay = target.layout(l);
  std::vector<std::uint32_t> blocks;
  for (const auto& img : images) {
    for (const auto& [c, x] : img) blocks.push_back(lay.block.at(c));
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  if (blocks.empty()) return 0;
  std::unordered_map<std::uint64_t, std::uint32_t> compact;
  for (auto b : blocks) {
    for (auto c : lay.codes[b]) compact.emplace(c, static_cast<std::uint32_t>(compact.size()));
  }
  auto to_local = [&](const CodeVector& v) {
    SparseVector s;
    for (const auto& [c, x] : v) s.emplace_back(compact.at(c), x);
    normalize(s);
    return s;
  };
  LinearSpan span(compact.size());
  target.add_image_of_blocks(l, blocks, [&](const CodeVector& v) { span.add(to_local(v)); });
  const auto base = span.rank();
  for (const auto& img : images) span.add(to_local(img));
  return span.rank() - base;
}

}  // namespace lcoh
