#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyfind/incidence.hpp"

namespace polyfind {

// A polyhedron given by its faces, each a cyclic sequence of distinct
// vertex indices.  Edges are the unordered consecutive pairs of the cycles.
struct FaceListDescription {
  int num_vertices = 0;
  std::vector<std::vector<int>> faces;
};

// Builds the incidence structure of a face-list description.
//
// Edges are indexed in sorted endpoint-pair order, faces in input order.
// vf is closed under the vertex-edge-face transitivity rule: a vertex is
// incident with a face exactly when it lies on one of the face's edges.
// Rejected inputs: an edge lying in a number of faces other than two, and
// a vertex lying in no face.
inline IncidenceStructure from_face_lists(const FaceListDescription& d) {
  if (d.num_vertices < 0)
    throw ValidationError("vertex count must be nonnegative");
  for (const auto& cycle : d.faces) {
    if (cycle.size() < 2)
      throw ValidationError("face cycles must have at least two vertices");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("face cycle repeats a vertex");
    for (int v : cycle)
      if (v < 0 || v >= d.num_vertices)
        throw ValidationError("face cycle vertex index out of range");
  }

  // Collect the distinct undirected edges and the faces each lies on.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int fi = 0; fi < static_cast<int>(d.faces.size()); ++fi) {
    const auto& cycle = d.faces[fi];
    int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i) {
      int u = cycle[i];
      int v = cycle[(i + 1) % len];
      auto key = std::minmax(u, v);
      auto& lst = edge_faces[{key.first, key.second}];
      if (lst.empty() || lst.back() != fi) lst.push_back(fi);
    }
  }
  for (const auto& [pair, faces] : edge_faces)
    if (faces.size() != 2)
      throw ValidationError("edge (" + std::to_string(pair.first) + "," +
                            std::to_string(pair.second) + ") lies in " +
                            std::to_string(faces.size()) +
                            " faces, expected exactly 2");

  std::vector<bool> covered(d.num_vertices, false);
  for (const auto& cycle : d.faces)
    for (int v : cycle) covered[v] = true;
  for (int v = 0; v < d.num_vertices; ++v)
    if (!covered[v])
      throw ValidationError("vertex " + std::to_string(v) + " lies in no face");

  IncidenceStructure s(d.num_vertices, static_cast<int>(edge_faces.size()),
                       static_cast<int>(d.faces.size()));
  int ei = 0;
  for (const auto& [pair, faces] : edge_faces) {
    s.ve.set(pair.first, ei);
    s.ve.set(pair.second, ei);
    for (int fi : faces) {
      s.ef.set(ei, fi);
      s.vf.set(pair.first, fi);
      s.vf.set(pair.second, fi);
    }
    ++ei;
  }
  return s;
}

// The six-element structure: two vertices, two edges, two faces, every
// element incident with every element of the other sorts.
inline IncidenceStructure m6() {
  IncidenceStructure s(2, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      s.ve.set(i, j);
      s.ef.set(i, j);
      s.vf.set(i, j);
    }
  return s;
}

// The eight-element structure drawn as a circle with a chord: two vertices,
// three edges (upper arc, lower arc, chord), three faces (exterior,
// upper half, lower half).  Transcribed directly as incidence matrices;
// its 2-gon faces are not expressible as face lists.
inline IncidenceStructure m8() {
  IncidenceStructure s(2, 3, 3);
  for (int v = 0; v < 2; ++v)
    for (int e = 0; e < 3; ++e) s.ve.set(v, e);
  s.ef.set(0, 0);  // upper arc - exterior
  s.ef.set(0, 1);  // upper arc - upper half
  s.ef.set(1, 0);  // lower arc - exterior
  s.ef.set(1, 2);  // lower arc - lower half
  s.ef.set(2, 1);  // chord - upper half
  s.ef.set(2, 2);  // chord - lower half
  for (int v = 0; v < 2; ++v)
    for (int f = 0; f < 3; ++f) s.vf.set(v, f);
  return s;
}

// Pyramid over an n-gon base: n base vertices plus an apex, n base edges,
// n lateral edges, n triangular faces plus the base.  Cardinality 4n+2.
inline IncidenceStructure pyramid(int n) {
  if (n < 3) throw PreconditionError("pyramid base needs at least 3 vertices");
  FaceListDescription d;
  d.num_vertices = n + 1;
  const int apex = n;
  for (int i = 0; i < n; ++i) d.faces.push_back({i, (i + 1) % n, apex});
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  d.faces.push_back(base);
  return from_face_lists(d);
}

enum class PlatonicSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

namespace detail {

inline FaceListDescription tetrahedron_description() {
  return {4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

inline FaceListDescription cube_description() {
  // Bottom ring 0-3, top ring 4-7, vertex i below vertex i+4.
  return {8,
          {{0, 1, 2, 3},
           {4, 5, 6, 7},
           {0, 1, 5, 4},
           {1, 2, 6, 5},
           {2, 3, 7, 6},
           {3, 0, 4, 7}}};
}

inline FaceListDescription octahedron_description() {
  // 0 top apex, 1-4 equator, 5 bottom apex.
  return {6,
          {{0, 1, 2},
           {0, 2, 3},
           {0, 3, 4},
           {0, 4, 1},
           {5, 2, 1},
           {5, 3, 2},
           {5, 4, 3},
           {5, 1, 4}}};
}

inline FaceListDescription icosahedron_description() {
  // 0 north pole, 1-5 upper pentagon, 6-10 lower pentagon, 11 south pole.
  FaceListDescription d;
  d.num_vertices = 12;
  auto u = [](int i) { return 1 + i % 5; };
  auto l = [](int i) { return 6 + i % 5; };
  for (int i = 0; i < 5; ++i) d.faces.push_back({0, u(i), u(i + 1)});
  for (int i = 0; i < 5; ++i) d.faces.push_back({u(i), u(i + 1), l(i)});
  for (int i = 0; i < 5; ++i) d.faces.push_back({l(i), l(i + 1), u(i + 1)});
  for (int i = 0; i < 5; ++i) d.faces.push_back({11, l(i), l(i + 1)});
  return d;
}

FaceListDescription dodecahedron_description();

}  // namespace detail

inline IncidenceStructure platonic(PlatonicSolid which) {
  switch (which) {
    case PlatonicSolid::Tetrahedron:
      return from_face_lists(detail::tetrahedron_description());
    case PlatonicSolid::Cube:
      return from_face_lists(detail::cube_description());
    case PlatonicSolid::Octahedron:
      return from_face_lists(detail::octahedron_description());
    case PlatonicSolid::Dodecahedron:
      return from_face_lists(detail::dodecahedron_description());
    case PlatonicSolid::Icosahedron:
      return from_face_lists(detail::icosahedron_description());
  }
  throw PreconditionError("unknown platonic solid");
}

// Stable CLI-visible catalog: m6, m8, m8d, pyramid-N, and the five solids.
inline std::optional<IncidenceStructure> catalog_lookup(std::string_view name) {
  if (name == "m6") return m6();
  if (name == "m8") return m8();
  if (name == "m8d") return dual(m8());
  if (name == "tetrahedron") return platonic(PlatonicSolid::Tetrahedron);
  if (name == "cube") return platonic(PlatonicSolid::Cube);
  if (name == "octahedron") return platonic(PlatonicSolid::Octahedron);
  if (name == "dodecahedron") return platonic(PlatonicSolid::Dodecahedron);
  if (name == "icosahedron") return platonic(PlatonicSolid::Icosahedron);
  constexpr std::string_view prefix = "pyramid-";
  if (name.substr(0, prefix.size()) == prefix) {
    int n = 0;
    for (char c : name.substr(prefix.size())) {
      if (c < '0' || c > '9') return std::nullopt;
      n = n * 10 + (c - '0');
      if (n > 1000000) return std::nullopt;
    }
    if (name.size() == prefix.size()) return std::nullopt;
    if (n < 3) throw PreconditionError("pyramid base needs at least 3 vertices");
    return pyramid(n);
  }
  return std::nullopt;
}

inline std::vector<std::string> catalog_names() {
  return {"m6",         "m8",   "m8d",        "pyramid-N (N >= 3)",
          "tetrahedron", "cube", "octahedron", "dodecahedron",
          "icosahedron"};
}

}  // namespace polyfind
