#include "lcoh/les.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcoh/errors.hpp"

namespace lcoh {

std::string to_string(SequenceKind kind) {
  return kind == SequenceKind::lie_to_leibniz ? "lie_to_leibniz" : "lie_coadjoint";
}

bool LESReport::all_exact() const {
  return std::all_of(exact.begin(), exact.end(), [](const auto& e) { return !e || *e; });
}

namespace {

void finish(LESReport& rep) {
  for (std::size_t i = 0; i < rep.nodes.size(); ++i) {
    if (i >= rep.maps.size()) {
      rep.exact.push_back(std::nullopt);
      continue;
    }
    const std::size_t in = i == 0 ? 0 : rep.maps[i - 1].rank;
    rep.exact.push_back(in + rep.maps[i].rank == rep.nodes[i].dim);
  }
}

bool strictly_increasing(const std::vector<std::uint32_t>& t) {
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i - 1] >= t[i]) return false;
  }
  return true;
}

}  // namespace

CodeVector skew_inclusion(const CEComplex& ce, const LeibnizComplex& cl, int m, const CodeVector& v) {
  CodeVector out;
  std::vector<std::uint32_t> s;
  for (const auto& [code, c] : v) {
    const auto t = ce.decode(code, static_cast<std::size_t>(m), s);
    do {
      const int sign = permutation_sign(s);
      out.emplace_back(cl.encode(s, t), sign > 0 ? c : Rational(-c));
    } while (std::next_permutation(s.begin(), s.end()));
  }
  normalize(out);
  return out;
}

CodeVector pi_r_star(const CEComplex& trivial, const HomologyDualComplex& dual, int j, const CodeVector& v) {
  CodeVector out;
  std::vector<std::uint32_t> u, rest;
  for (const auto& [code, c] : v) {
    trivial.decode(code, static_cast<std::size_t>(j + 1), u);
    for (std::size_t p = 0; p < u.size(); ++p) {
      rest = u;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      out.emplace_back(dual.encode(u[p], rest), p % 2 == 0 ? c : Rational(-c));
    }
  }
  normalize(out);
  return out;
}

LESReport lie_to_leibniz_sequence(const LieAlgebra& algebra, const GModule& module, int max_degree,
                                  const EngineOptions& options) {
  if (max_degree < 2) throw InvalidDimension("the Lie-to-Leibniz sequence starts in degree 2");
  auto ce = std::make_shared<CEComplex>(algebra, module);
  auto cl = std::make_shared<LeibnizComplex>(algebra, module);
  auto rel = std::make_shared<RelativeComplex>(cl);
  CohomologyEngine lie(ce, options), leib(cl, options), relative(rel, options);

  const CochainMap pi = [&](int m, const CodeVector& v) { return skew_inclusion(*ce, *cl, m, v); };
  const CochainMap proj = [&](int m, const CodeVector& v) { return rel->project(m - 2, v); };
  // Snake lemma: lift to CL^m (same codes), apply delta, read off the skew preimage.
  const CochainMap connect = [&](int m, const CodeVector& y) {
    const CodeVector w = cl->apply(m, y);
    CodeVector z;
    std::vector<std::uint32_t> s;
    for (const auto& [code, c] : w) {
      const auto t = cl->decode(code, static_cast<std::size_t>(m + 1), s);
      if (strictly_increasing(s)) z.emplace_back(ce->encode(s, t), c);
    }
    normalize(z);
    if (skew_inclusion(*ce, *cl, m + 1, z) != w) {
      throw std::logic_error("connecting map: coboundary of the lift is not skew-symmetric");
    }
    return z;
  };

  LESReport rep;
  rep.which = SequenceKind::lie_to_leibniz;
  for (int m = 2; m <= max_degree; ++m) {
    const std::size_t base = rep.nodes.size();
    rep.nodes.push_back({"H^" + std::to_string(m) + "_Lie", m, lie.dimension(m)});
    rep.nodes.push_back({"HL^" + std::to_string(m), m, leib.dimension(m)});
    rep.nodes.push_back({"H^" + std::to_string(m - 2) + "_rel", m - 2, relative.dimension(m - 2)});
    rep.maps.push_back({"pi_rel", base, base + 1, induced_map_rank(lie, m, leib, m, pi)});
    check_chain_map(leib, m, relative, m - 2, [&](int d, const CodeVector& v) { return proj(d, v); });
    rep.maps.push_back({"p_rel", base + 1, base + 2,
                        induced_map_rank(leib, m, relative, m - 2,
                                         [&](int, const CodeVector& v) { return rel->project(m - 2, v); }, false)});
    rep.maps.push_back({"c_rel", base + 2, base + 3,
                        induced_map_rank(relative, m - 2, lie, m + 1,
                                         [&](int, const CodeVector& v) { return connect(m, v); }, false)});
  }
  rep.nodes.push_back({"H^" + std::to_string(max_degree + 1) + "_Lie", max_degree + 1, lie.dimension(max_degree + 1)});
  finish(rep);
  return rep;
}

LESReport lie_coadjoint_sequence(const LieAlgebra& algebra, int max_m, const EngineOptions& options) {
  if (max_m < 0) throw InvalidDimension("the Lie-coadjoint sequence needs max_m >= 0");
  auto y = std::make_shared<CEComplex>(algebra, make_module(algebra, ModuleKind::trivial));
  auto x = std::make_shared<HomologyDualComplex>(algebra, make_module(algebra, ModuleKind::adjoint));
  auto cr = std::make_shared<CRComplex>(x);
  CohomologyEngine lie(y, options), dual(x, options), hr(cr, options);

  // pi_R^* takes Y^{j+1} to X^j; the engine degree passed in is the Y degree.
  const CochainMap pi = [&](int d, const CodeVector& v) { return pi_r_star(*y, *x, d - 1, v); };
  const CochainMap connect = [&](int m, const CodeVector& v) {
    const CodeVector w = x->apply(m + 1, v);
    CodeVector z;
    std::vector<std::uint32_t> s, u;
    for (const auto& [code, c] : w) {
      const auto first = x->decode(code, static_cast<std::size_t>(m + 2), s);
      if (!s.empty() && first < s.front()) {
        u = s;
        u.insert(u.begin(), first);
        z.emplace_back(y->encode(u, 0), c);
      }
    }
    normalize(z);
    if (pi_r_star(*y, *x, m + 2, z) != w) {
      throw std::logic_error("connecting map: coboundary of the lift is not in the image of pi_R");
    }
    return z;
  };

  LESReport rep;
  rep.which = SequenceKind::lie_coadjoint;
  for (int m = 0; m <= max_m; ++m) {
    const std::size_t base = rep.nodes.size();
    rep.nodes.push_back({"H^" + std::to_string(m + 2) + "_Lie(F)", m + 2, lie.dimension(m + 2)});
    rep.nodes.push_back({"H^" + std::to_string(m + 1) + "_Lie(g')", m + 1, dual.dimension(m + 1)});
    rep.nodes.push_back({"HR^" + std::to_string(m), m, hr.dimension(m)});
    rep.maps.push_back({"pi_R", base, base + 1, induced_map_rank(lie, m + 2, dual, m + 1, pi)});
    const CochainMap q = [&](int d, const CodeVector& v) { return cr->project(d - 1, v); };
    check_chain_map(dual, m + 1, hr, m, q);
    rep.maps.push_back({"q_R", base + 1, base + 2, induced_map_rank(dual, m + 1, hr, m, q, false)});
    rep.maps.push_back({"c_R", base + 2, base + 3,
                        induced_map_rank(hr, m, lie, m + 3, [&](int, const CodeVector& v) { return connect(m, v); },
                                         false)});
  }
  rep.nodes.push_back({"H^" + std::to_string(max_m + 3) + "_Lie(F)", max_m + 3, lie.dimension(max_m + 3)});
  finish(rep);
  return rep;
}

}  // namespace lcoh
