#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyfind/errors.hpp"

namespace polyfind {

enum class Sort : std::uint8_t { Vertex = 0, Edge = 1, Face = 2 };

inline constexpr const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Vertex: return "V";
    case Sort::Edge: return "E";
    case Sort::Face: return "F";
  }
  return "?";
}

// One element of a structure, addressed by sort and 0-based index within it.
struct ElementRef {
  Sort sort{Sort::Vertex};
  int index{0};
  friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

inline std::string to_string(const ElementRef& x) {
  constexpr const char* prefix[3] = {"v", "e", "f"};
  return std::string(prefix[static_cast<int>(x.sort)]) + std::to_string(x.index);
}

// (#vertices, #edges, #faces); the cardinality parameters of a bounded theory.
struct SortTriple {
  int vertices{0};
  int edges{0};
  int faces{0};

  int total() const { return vertices + edges + faces; }
  friend auto operator<=>(const SortTriple&, const SortTriple&) = default;
};

inline std::string to_string(const SortTriple& t) {
  return "(" + std::to_string(t.vertices) + "," + std::to_string(t.edges) +
         "," + std::to_string(t.faces) + ")";
}

// Dense boolean matrix with value semantics.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, false) {
    if (rows < 0 || cols < 0) throw ValidationError("matrix dimensions must be nonnegative");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int r, int c) const { return bits_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, bool value = true) {
    bits_[static_cast<std::size_t>(r) * cols_ + c] = value;
  }

  int row_count(int r) const {
    int n = 0;
    for (int c = 0; c < cols_; ++c) n += at(r, c);
    return n;
  }
  int col_count(int c) const {
    int n = 0;
    for (int r = 0; r < rows_; ++r) n += at(r, c);
    return n;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (at(r, c)) t.set(c, r);
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<bool> bits_;
};

// Three-sorted finite incidence structure: sort sizes plus the three
// bipartite incidence relations V-E, E-F, V-F.  Within-sort incidence,
// self-incidence, and asymmetry are unrepresentable by construction.
struct IncidenceStructure {
  int n_v = 0;
  int n_e = 0;
  int n_f = 0;
  BitMatrix ve;  // n_v x n_e
  BitMatrix ef;  // n_e x n_f
  BitMatrix vf;  // n_v x n_f

  IncidenceStructure() : ve(0, 0), ef(0, 0), vf(0, 0) {}
  IncidenceStructure(int nv, int ne, int nf)
      : n_v(nv), n_e(ne), n_f(nf), ve(nv, ne), ef(ne, nf), vf(nv, nf) {
    if (nv < 0 || ne < 0 || nf < 0)
      throw ValidationError("sort counts must be nonnegative");
  }

  int total() const { return n_v + n_e + n_f; }
  SortTriple sorts() const { return {n_v, n_e, n_f}; }

  int sort_count(Sort s) const {
    switch (s) {
      case Sort::Vertex: return n_v;
      case Sort::Edge: return n_e;
      case Sort::Face: return n_f;
    }
    return 0;
  }

  bool contains(ElementRef x) const {
    return x.index >= 0 && x.index < sort_count(x.sort);
  }

  // Dimension invariants; throws ValidationError (never an axiom verdict).
  void validate() const {
    if (n_v < 0 || n_e < 0 || n_f < 0)
      throw ValidationError("sort counts must be nonnegative");
    if (ve.rows() != n_v || ve.cols() != n_e)
      throw ValidationError("ve matrix dimensions do not match sort counts");
    if (ef.rows() != n_e || ef.cols() != n_f)
      throw ValidationError("ef matrix dimensions do not match sort counts");
    if (vf.rows() != n_v || vf.cols() != n_f)
      throw ValidationError("vf matrix dimensions do not match sort counts");
  }

  // I(x,y) for elements of any sorts; same-sort pairs are never incident.
  bool incident(ElementRef x, ElementRef y) const {
    if (x.sort == y.sort) return false;
    if (x.sort > y.sort) std::swap(x, y);
    if (x.sort == Sort::Vertex && y.sort == Sort::Edge) return ve.at(x.index, y.index);
    if (x.sort == Sort::Vertex && y.sort == Sort::Face) return vf.at(x.index, y.index);
    return ef.at(x.index, y.index);  // Edge-Face
  }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

// All elements incident with x, across all sorts, in (sort, index) order.
// Never contains x itself.
inline std::vector<ElementRef> neighborhood(const IncidenceStructure& s, ElementRef x) {
  s.validate();
  if (!s.contains(x))
    throw PreconditionError("element " + to_string(x) + " is not in the structure");
  std::vector<ElementRef> out;
  switch (x.sort) {
    case Sort::Vertex:
      for (int e = 0; e < s.n_e; ++e)
        if (s.ve.at(x.index, e)) out.push_back({Sort::Edge, e});
      for (int f = 0; f < s.n_f; ++f)
        if (s.vf.at(x.index, f)) out.push_back({Sort::Face, f});
      break;
    case Sort::Edge:
      for (int v = 0; v < s.n_v; ++v)
        if (s.ve.at(v, x.index)) out.push_back({Sort::Vertex, v});
      for (int f = 0; f < s.n_f; ++f)
        if (s.ef.at(x.index, f)) out.push_back({Sort::Face, f});
      break;
    case Sort::Face:
      for (int v = 0; v < s.n_v; ++v)
        if (s.vf.at(v, x.index)) out.push_back({Sort::Vertex, v});
      for (int e = 0; e < s.n_e; ++e)
        if (s.ef.at(e, x.index)) out.push_back({Sort::Edge, e});
      break;
  }
  return out;
}

// Edges incident with both vertex v and face f.
inline std::vector<int> common_edges(const IncidenceStructure& s, int v, int f) {
  s.validate();
  if (v < 0 || v >= s.n_v) throw PreconditionError("vertex index out of range");
  if (f < 0 || f >= s.n_f) throw PreconditionError("face index out of range");
  std::vector<int> out;
  for (int e = 0; e < s.n_e; ++e)
    if (s.ve.at(v, e) && s.ef.at(e, f)) out.push_back(e);
  return out;
}

// Exchange vertices and faces.  The theory is invariant under this swap,
// which makes duality a model-to-model operation.
inline IncidenceStructure dual(const IncidenceStructure& s) {
  s.validate();
  IncidenceStructure d(s.n_f, s.n_e, s.n_v);
  for (int f = 0; f < s.n_f; ++f)
    for (int e = 0; e < s.n_e; ++e)
      if (s.ef.at(e, f)) d.ve.set(f, e);
  for (int e = 0; e < s.n_e; ++e)
    for (int v = 0; v < s.n_v; ++v)
      if (s.ve.at(v, e)) d.ef.set(e, v);
  for (int v = 0; v < s.n_v; ++v)
    for (int f = 0; f < s.n_f; ++f)
      if (s.vf.at(v, f)) d.vf.set(f, v);
  return d;
}

}  // namespace polyfind
