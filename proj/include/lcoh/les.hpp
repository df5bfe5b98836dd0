#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcoh/cohomology.hpp"

namespace lcoh {

enum class SequenceKind { lie_to_leibniz, lie_coadjoint };
std::string to_string(SequenceKind kind);

struct SequenceNode {
  std::string name;  ///< e.g. "H^3_Lie", "HL^3", "H^1_rel", "HR^0"
  int degree = 0;
  std::uint64_t dim = 0;
};

struct SequenceMap {
  std::string name;  ///< "pi_rel", "p_rel", "c_rel", "pi_R", "q_R", "c_R"
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t rank = 0;
};

struct LESReport {
  SequenceKind which = SequenceKind::lie_to_leibniz;
  std::vector<SequenceNode> nodes;
  std::vector<SequenceMap> maps;  ///< maps[i] goes from nodes[i] to nodes[i + 1]
  /// Per node: rank(in) + rank(out) == dim, or nullopt for the final node
  /// whose outgoing map is not computed.
  std::vector<std::optional<bool>> exact;

  bool all_exact() const;
};

/// 0 -> H^2_Lie -> HL^2 -> H^0_rel -> H^3_Lie -> ... -> HL^M -> H^{M-2}_rel -> H^{M+1}_Lie
LESReport lie_to_leibniz_sequence(const LieAlgebra& algebra, const GModule& module, int max_degree,
                                  const EngineOptions& options = {});
/// 0 -> H^2_Lie(g;F) -> H^1(g;g') -> HR^0 -> H^3_Lie(g;F) -> ... -> HR^M -> H^{M+3}_Lie(g;F)
LESReport lie_coadjoint_sequence(const LieAlgebra& algebra, int max_m, const EngineOptions& options = {});

/// Cochain maps of the two short exact sequences, exposed for tests.
/// Antisymmetrization CE^m -> CL^m.
CodeVector skew_inclusion(const CEComplex& ce, const LeibnizComplex& cl, int m, const CodeVector& v);
/// pi_R^* : Hom(Lambda^{j+1} g, F) -> Hom(g (x) Lambda^j g, F).
CodeVector pi_r_star(const CEComplex& trivial, const HomologyDualComplex& dual, int j, const CodeVector& v);

}  // namespace lcoh
