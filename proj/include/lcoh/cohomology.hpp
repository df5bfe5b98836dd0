#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcoh/complexes.hpp"
#include "lcoh/linalg.hpp"

namespace lcoh {

struct EngineOptions {
  RankOptions rank;
  /// Largest code range of any degree the engine will touch; beyond it ResourceLimit is thrown.
  std::uint64_t max_codes = 2'000'000;
};

/// Basis codes of one degree grouped by grading key.
struct DegreeLayout {
  std::vector<GradingSet::Key> keys;
  std::map<GradingSet::Key, std::uint32_t> block_of_key;
  std::vector<std::vector<std::uint64_t>> codes;  ///< per block, increasing
  std::vector<std::uint32_t> block;               ///< per code; npos when invalid
  std::vector<std::uint32_t> position;            ///< per code, index inside its block
  static constexpr std::uint32_t npos = 0xffffffffu;

  std::size_t block_count() const { return codes.size(); }
  std::optional<std::uint32_t> find(const GradingSet::Key& key) const;
};

struct CohomologyReport {
  std::string complex;
  int max_degree = 0;
  std::vector<std::uint64_t> cochain_dims;  ///< dim C^k, k = 0..max_degree
  std::vector<std::uint64_t> dims;          ///< dim H^k
  std::vector<RankCertificate> ranks;       ///< rank of delta^k : C^k -> C^{k+1}
  std::vector<std::vector<CodeVector>> representatives;
};

/// Cohomology of a CochainComplex by block-wise elimination. Blocks, ranks
/// and representatives are cached per degree.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(std::shared_ptr<const CochainComplex> complex, EngineOptions options = {});

  const CochainComplex& complex() const { return *complex_; }
  const EngineOptions& options() const { return options_; }

  const DegreeLayout& layout(int k);
  /// delta^k restricted to one source block; rows index the target block of
  /// the same key (an empty matrix when degree k+1 has no such block).
  SparseRationalMatrix block_matrix(int k, std::uint32_t source_block);
  std::optional<std::uint32_t> target_block(int k, std::uint32_t source_block);

  const RankCertificate& rank(int k);
  std::uint64_t dimension(int k);
  CohomologyReport report(int max_degree, bool with_representatives = false);

  /// Cocycles whose classes form a basis of H^k.
  const std::vector<CodeVector>& representatives(int k);

  bool is_cocycle(int k, const CodeVector& v);
  /// A preimage w with delta w = v when v is a coboundary. Throws NotACocycle.
  std::optional<CodeVector> coboundary_witness(int k, const CodeVector& v);

  /// Span of the image of delta^{k-1} intersected with the given degree-k blocks.
  void add_image_of_blocks(int k, const std::vector<std::uint32_t>& blocks,
                           const std::function<void(const CodeVector&)>& sink);

 private:
  void check_budget(int k) const;

  std::shared_ptr<const CochainComplex> complex_;
  EngineOptions options_;
  std::map<int, DegreeLayout> layouts_;
  std::map<int, RankCertificate> ranks_;
  std::map<int, std::vector<CodeVector>> reps_;
};

/// Linear map between cochain spaces; the argument is the source degree.
using CochainMap = std::function<CodeVector(int, const CodeVector&)>;

/// Rank of the map H^k(source) -> H^l(target) induced by a cochain map F.
/// When check_chain_map is set, the chain-map identity is verified on every
/// basis element of degree k first.
std::size_t induced_map_rank(CohomologyEngine& source, int k, CohomologyEngine& target, int l, const CochainMap& map,
                             bool check_chain_map = true);

/// Checks F(delta e) = sign * delta F(e) for every basis element e of source
/// degree k. Throws NotAChainMap naming the first failing basis element.
void check_chain_map(CohomologyEngine& source, int k, CohomologyEngine& target, int l, const CochainMap& map,
                     int sign = 1);

}  // namespace lcoh
