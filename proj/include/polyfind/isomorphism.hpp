#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polyfind/incidence.hpp"

namespace polyfind {

// Sort-preserving isomorphism: three permutations mapping source indices
// to target indices.  Duality is deliberately not an isomorphism.
struct SortedIsomorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<int> face_map;

  const std::vector<int>& map_for(Sort s) const {
    switch (s) {
      case Sort::Vertex: return vertex_map;
      case Sort::Edge: return edge_map;
      case Sort::Face: return face_map;
    }
    return vertex_map;
  }
};

namespace detail {

inline bool is_permutation_of_range(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

// Row-major '0'/'1' encoding of the structure relabeled by the given
// permutations (source index -> new position).  Lexicographic comparison
// of these strings drives the canonical form.
inline std::string encode_relabeled(const IncidenceStructure& s,
                                    const std::vector<int>& pv,
                                    const std::vector<int>& pe,
                                    const std::vector<int>& pf) {
  std::vector<int> iv = inverse_permutation(pv);
  std::vector<int> ie = inverse_permutation(pe);
  std::vector<int> ifc = inverse_permutation(pf);
  std::string out;
  out.reserve(32 + static_cast<std::size_t>(s.n_v) * s.n_e +
              static_cast<std::size_t>(s.n_e) * s.n_f +
              static_cast<std::size_t>(s.n_v) * s.n_f);
  out += std::to_string(s.n_v) + "," + std::to_string(s.n_e) + "," +
         std::to_string(s.n_f) + "|";
  for (int i = 0; i < s.n_v; ++i)
    for (int j = 0; j < s.n_e; ++j) out += s.ve.at(iv[i], ie[j]) ? '1' : '0';
  out += '|';
  for (int i = 0; i < s.n_e; ++i)
    for (int j = 0; j < s.n_f; ++j) out += s.ef.at(ie[i], ifc[j]) ? '1' : '0';
  out += '|';
  for (int i = 0; i < s.n_v; ++i)
    for (int j = 0; j < s.n_f; ++j) out += s.vf.at(iv[i], ifc[j]) ? '1' : '0';
  return out;
}

// Canonical labeling by color refinement plus individualization.
//
// Colors start out as the three sorts and are refined by incidence degree
// profiles until stable; non-singleton cells are then split by
// individualizing one element at a time, branching over the cell.  The
// canonical form is the lexicographically minimal relabeled encoding over
// all leaves of that tree.  Color ids are always reassigned in sorted
// signature order, so they are invariant under relabeling of the input.
class CanonicalSearcher {
 public:
  explicit CanonicalSearcher(const IncidenceStructure& s) : s_(s) {
    for (int k = 0; k < 3; ++k) {
      raw_rows_[k].resize(count(k));
      for (int i = 0; i < count(k); ++i) raw_rows_[k][i] = raw_row(k, i);
    }
  }

  std::pair<SortedIsomorphism, std::string> run() {
    ColorState cs;
    for (int k = 0; k < 3; ++k) cs.col[k].assign(count(k), k);
    cs.num_colors = 3;
    refine(cs);
    recurse(cs);
    return {std::move(best_map_), std::move(best_)};
  }

 private:
  struct ColorState {
    std::array<std::vector<int>, 3> col;
    int num_colors = 0;
  };

  int count(int k) const {
    return k == 0 ? s_.n_v : (k == 1 ? s_.n_e : s_.n_f);
  }

  // Raw incidence rows identify elements that are literally interchangeable;
  // swapping two such elements is an automorphism, so branching on more than
  // one of them per cell cannot change the minimum.
  std::string raw_row(int k, int i) const {
    std::string out;
    auto append_row = [&out](const BitMatrix& m, int r) {
      for (int c = 0; c < m.cols(); ++c) out += m.at(r, c) ? '1' : '0';
    };
    auto append_col = [&out](const BitMatrix& m, int c) {
      for (int r = 0; r < m.rows(); ++r) out += m.at(r, c) ? '1' : '0';
    };
    if (k == 0) {
      append_row(s_.ve, i);
      out += '|';
      append_row(s_.vf, i);
    } else if (k == 1) {
      append_col(s_.ve, i);
      out += '|';
      append_row(s_.ef, i);
    } else {
      append_col(s_.vf, i);
      out += '|';
      append_col(s_.ef, i);
    }
    return out;
  }

  using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;

  Signature signature(const ColorState& cs, int k, int i) const {
    std::vector<int> first, second;
    if (k == 0) {
      for (int e = 0; e < s_.n_e; ++e)
        if (s_.ve.at(i, e)) first.push_back(cs.col[1][e]);
      for (int f = 0; f < s_.n_f; ++f)
        if (s_.vf.at(i, f)) second.push_back(cs.col[2][f]);
    } else if (k == 1) {
      for (int v = 0; v < s_.n_v; ++v)
        if (s_.ve.at(v, i)) first.push_back(cs.col[0][v]);
      for (int f = 0; f < s_.n_f; ++f)
        if (s_.ef.at(i, f)) second.push_back(cs.col[2][f]);
    } else {
      for (int v = 0; v < s_.n_v; ++v)
        if (s_.vf.at(v, i)) first.push_back(cs.col[0][v]);
      for (int e = 0; e < s_.n_e; ++e)
        if (s_.ef.at(e, i)) second.push_back(cs.col[1][e]);
    }
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    return {cs.col[k][i], std::move(first), std::move(second)};
  }

  void refine(ColorState& cs) const {
    for (;;) {
      std::vector<std::pair<Signature, std::pair<int, int>>> sigs;
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < count(k); ++i)
          sigs.emplace_back(signature(cs, k, i), std::make_pair(k, i));
      std::sort(sigs.begin(), sigs.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      ColorState next;
      for (int k = 0; k < 3; ++k) next.col[k].assign(count(k), 0);
      int color = -1;
      const Signature* prev = nullptr;
      for (const auto& [sig, who] : sigs) {
        if (prev == nullptr || sig != *prev) ++color;
        next.col[who.first][who.second] = color;
        prev = &sig;
      }
      next.num_colors = color + 1;
      if (next.col == cs.col) break;
      cs = std::move(next);
    }
  }

  void recurse(const ColorState& cs) {
    // Target cell: the smallest color with at least two members.
    std::vector<std::vector<std::pair<int, int>>> cells(cs.num_colors);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < count(k); ++i)
        cells[cs.col[k][i]].emplace_back(k, i);
    int target = -1;
    for (int c = 0; c < cs.num_colors; ++c)
      if (cells[c].size() >= 2) {
        target = c;
        break;
      }

    if (target == -1) {
      emit_leaf(cs);
      return;
    }
    std::set<std::string> branched;
    for (const auto& [k, i] : cells[target]) {
      if (!branched.insert(raw_rows_[k][i]).second) continue;
      ColorState next = cs;
      next.col[k][i] = next.num_colors++;
      refine(next);
      recurse(next);
    }
  }

  void emit_leaf(const ColorState& cs) {
    SortedIsomorphism m;
    std::array<std::vector<int>*, 3> maps = {&m.vertex_map, &m.edge_map,
                                             &m.face_map};
    for (int k = 0; k < 3; ++k) {
      std::vector<std::pair<int, int>> order;  // (color, index)
      for (int i = 0; i < count(k); ++i) order.emplace_back(cs.col[k][i], i);
      std::sort(order.begin(), order.end());
      maps[k]->assign(count(k), 0);
      for (int pos = 0; pos < static_cast<int>(order.size()); ++pos)
        (*maps[k])[order[pos].second] = pos;
    }
    std::string enc = encode_relabeled(s_, m.vertex_map, m.edge_map, m.face_map);
    if (best_.empty() || enc < best_) {
      best_ = std::move(enc);
      best_map_ = std::move(m);
    }
  }

  const IncidenceStructure& s_;
  std::array<std::vector<std::string>, 3> raw_rows_;
  std::string best_;
  SortedIsomorphism best_map_;
};

}  // namespace detail

struct CanonicalLabeling {
  SortedIsomorphism to_canonical;
  std::string form;
};

// Relabeling that realizes the canonical form, together with the form itself.
inline CanonicalLabeling canonical_labeling(const IncidenceStructure& s) {
  s.validate();
  auto [map, form] = detail::CanonicalSearcher(s).run();
  return {std::move(map), std::move(form)};
}

// Deterministic relabeling-invariant key: equal exactly for isomorphic
// structures.
inline std::string canonical_form(const IncidenceStructure& s) {
  return canonical_labeling(s).form;
}

// Relabel s by m (source index -> target index); sorts are preserved.
inline IncidenceStructure apply_isomorphism(const IncidenceStructure& s,
                                            const SortedIsomorphism& m) {
  s.validate();
  if (!detail::is_permutation_of_range(m.vertex_map, s.n_v) ||
      !detail::is_permutation_of_range(m.edge_map, s.n_e) ||
      !detail::is_permutation_of_range(m.face_map, s.n_f))
    throw PreconditionError("mapping is not a sort-preserving bijection");
  IncidenceStructure out(s.n_v, s.n_e, s.n_f);
  for (int v = 0; v < s.n_v; ++v)
    for (int e = 0; e < s.n_e; ++e)
      if (s.ve.at(v, e)) out.ve.set(m.vertex_map[v], m.edge_map[e]);
  for (int e = 0; e < s.n_e; ++e)
    for (int f = 0; f < s.n_f; ++f)
      if (s.ef.at(e, f)) out.ef.set(m.edge_map[e], m.face_map[f]);
  for (int v = 0; v < s.n_v; ++v)
    for (int f = 0; f < s.n_f; ++f)
      if (s.vf.at(v, f)) out.vf.set(m.vertex_map[v], m.face_map[f]);
  return out;
}

// True iff m maps every incidence pair of a onto exactly the incidence
// pairs of b.
inline bool is_isomorphism(const IncidenceStructure& a,
                           const IncidenceStructure& b,
                           const SortedIsomorphism& m) {
  if (a.sorts() != b.sorts()) return false;
  if (!detail::is_permutation_of_range(m.vertex_map, a.n_v) ||
      !detail::is_permutation_of_range(m.edge_map, a.n_e) ||
      !detail::is_permutation_of_range(m.face_map, a.n_f))
    return false;
  return apply_isomorphism(a, m) == b;
}

// Witness mapping if the structures are isomorphic, nullopt otherwise.
// Composes the two canonical labelings when the canonical forms agree.
inline std::optional<SortedIsomorphism> are_isomorphic(
    const IncidenceStructure& a, const IncidenceStructure& b) {
  a.validate();
  b.validate();
  if (a.sorts() != b.sorts()) return std::nullopt;
  CanonicalLabeling ca = canonical_labeling(a);
  CanonicalLabeling cb = canonical_labeling(b);
  if (ca.form != cb.form) return std::nullopt;
  SortedIsomorphism m;
  auto compose = [](const std::vector<int>& pa, const std::vector<int>& pb) {
    std::vector<int> inv_b = detail::inverse_permutation(pb);
    std::vector<int> out(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) out[i] = inv_b[pa[i]];
    return out;
  };
  m.vertex_map = compose(ca.to_canonical.vertex_map, cb.to_canonical.vertex_map);
  m.edge_map = compose(ca.to_canonical.edge_map, cb.to_canonical.edge_map);
  m.face_map = compose(ca.to_canonical.face_map, cb.to_canonical.face_map);
  if (!is_isomorphism(a, b, m))
    throw std::logic_error("canonical labelings produced an invalid witness");
  return m;
}

}  // namespace polyfind
