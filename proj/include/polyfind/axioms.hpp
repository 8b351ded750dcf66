#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyfind/incidence.hpp"

namespace polyfind {

// The incidence axioms.  A1-A9 define the base theory; EXT is the
// extensionality principle that distinct elements have distinct
// incidence neighborhoods.
enum class AxiomId { A1, A2, A3, A4, A5, A6, A7, A8, A9, Ext };

enum class TheoryId { Sr, SrExt };

inline constexpr const char* axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::A1: return "A1";
    case AxiomId::A2: return "A2";
    case AxiomId::A3: return "A3";
    case AxiomId::A4: return "A4";
    case AxiomId::A5: return "A5";
    case AxiomId::A6: return "A6";
    case AxiomId::A7: return "A7";
    case AxiomId::A8: return "A8";
    case AxiomId::A9: return "A9";
    case AxiomId::Ext: return "EXT";
  }
  return "?";
}

inline constexpr const char* theory_name(TheoryId t) {
  return t == TheoryId::Sr ? "sr" : "sr-ext";
}

inline std::optional<TheoryId> theory_from_name(std::string_view name) {
  if (name == "sr") return TheoryId::Sr;
  if (name == "sr-ext" || name == "sr_ext") return TheoryId::SrExt;
  return std::nullopt;
}

// One concrete violation of an axiom: the elements exhibiting it plus a
// short human-readable note (used when no element can be named, e.g. an
// empty sort under A1).
struct Witness {
  std::vector<ElementRef> elements;
  std::string note;
};

// Witness lists are cut off here to bound report size on badly broken input.
inline constexpr int kWitnessLimit = 16;

struct AxiomEntry {
  AxiomId id{AxiomId::A1};
  bool holds = true;
  std::vector<Witness> witnesses;
  bool truncated = false;
};

struct AxiomReport {
  TheoryId theory{TheoryId::Sr};
  std::vector<AxiomEntry> entries;
  bool is_model = true;

  const AxiomEntry* entry(AxiomId id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

namespace detail {

class WitnessCollector {
 public:
  explicit WitnessCollector(AxiomEntry& entry) : entry_(entry) {}

  // Returns false once the limit is reached; callers may stop scanning.
  bool add(Witness w) {
    entry_.holds = false;
    if (static_cast<int>(entry_.witnesses.size()) >= kWitnessLimit) {
      entry_.truncated = true;
      return false;
    }
    entry_.witnesses.push_back(std::move(w));
    return true;
  }

 private:
  AxiomEntry& entry_;
};

}  // namespace detail

inline AxiomEntry check_extensionality(const IncidenceStructure& s);

// Verdict and violation witnesses for a single axiom.  A2, A3 and A4 hold
// for every well-formed structure: one sort per element, symmetry, and the
// absence of within-sort incidence are all guaranteed by the representation.
inline AxiomEntry check_axiom(const IncidenceStructure& s, AxiomId id) {
  s.validate();
  AxiomEntry entry;
  entry.id = id;
  detail::WitnessCollector collect(entry);

  switch (id) {
    case AxiomId::A1: {  // there are vertices, edges, and faces
      if (s.n_v == 0) collect.add({{}, "the vertex sort is empty"});
      if (s.n_e == 0) collect.add({{}, "the edge sort is empty"});
      if (s.n_f == 0) collect.add({{}, "the face sort is empty"});
      break;
    }
    case AxiomId::A2:  // every element has exactly one sort, by representation
    case AxiomId::A3:  // symmetry of I, by representation
    case AxiomId::A4:  // no within-sort incidence, by representation
      break;
    case AxiomId::A5: {  // I(v,e) and I(e,f) imply I(v,f)
      for (int v = 0; v < s.n_v; ++v)
        for (int e = 0; e < s.n_e; ++e) {
          if (!s.ve.at(v, e)) continue;
          for (int f = 0; f < s.n_f; ++f)
            if (s.ef.at(e, f) && !s.vf.at(v, f))
              collect.add({{{Sort::Vertex, v}, {Sort::Edge, e}, {Sort::Face, f}},
                           "I(v,e) and I(e,f) hold but I(v,f) does not"});
        }
      break;
    }
    case AxiomId::A6: {  // every edge is incident with exactly two vertices
      for (int e = 0; e < s.n_e; ++e) {
        int k = s.ve.col_count(e);
        if (k != 2) {
          Witness w;
          w.elements.push_back({Sort::Edge, e});
          for (int v = 0; v < s.n_v; ++v)
            if (s.ve.at(v, e)) w.elements.push_back({Sort::Vertex, v});
          w.note = "incident with " + std::to_string(k) + " vertices, expected 2";
          collect.add(std::move(w));
        }
      }
      break;
    }
    case AxiomId::A7: {  // every edge is incident with exactly two faces
      for (int e = 0; e < s.n_e; ++e) {
        int k = s.ef.row_count(e);
        if (k != 2) {
          Witness w;
          w.elements.push_back({Sort::Edge, e});
          for (int f = 0; f < s.n_f; ++f)
            if (s.ef.at(e, f)) w.elements.push_back({Sort::Face, f});
          w.note = "incident with " + std::to_string(k) + " faces, expected 2";
          collect.add(std::move(w));
        }
      }
      break;
    }
    case AxiomId::A8: {  // I(v,f) implies exactly two edges incident with both
      for (int v = 0; v < s.n_v; ++v)
        for (int f = 0; f < s.n_f; ++f) {
          if (!s.vf.at(v, f)) continue;
          std::vector<int> shared = common_edges(s, v, f);
          if (shared.size() != 2) {
            Witness w;
            w.elements.push_back({Sort::Vertex, v});
            w.elements.push_back({Sort::Face, f});
            for (int e : shared) w.elements.push_back({Sort::Edge, e});
            w.note = std::to_string(shared.size()) + " common edges, expected 2";
            collect.add(std::move(w));
          }
        }
      break;
    }
    case AxiomId::A9: {  // every vertex and every face meets some other element
      for (int v = 0; v < s.n_v; ++v)
        if (s.ve.row_count(v) == 0 && s.vf.row_count(v) == 0)
          collect.add({{{Sort::Vertex, v}}, "vertex incident with nothing"});
      for (int f = 0; f < s.n_f; ++f)
        if (s.ef.col_count(f) == 0 && s.vf.col_count(f) == 0)
          collect.add({{{Sort::Face, f}}, "face incident with nothing"});
      break;
    }
    case AxiomId::Ext:
      return check_extensionality(s);
  }
  return entry;
}

// EXT: the map element -> neighborhood is injective over all elements of
// all sorts pooled together.  Witnesses are unordered pairs with equal
// neighborhoods, each reported once.
inline AxiomEntry check_extensionality(const IncidenceStructure& s) {
  s.validate();
  AxiomEntry entry;
  entry.id = AxiomId::Ext;
  detail::WitnessCollector collect(entry);

  std::vector<ElementRef> elements;
  for (int v = 0; v < s.n_v; ++v) elements.push_back({Sort::Vertex, v});
  for (int e = 0; e < s.n_e; ++e) elements.push_back({Sort::Edge, e});
  for (int f = 0; f < s.n_f; ++f) elements.push_back({Sort::Face, f});

  std::map<std::vector<ElementRef>, std::vector<ElementRef>> groups;
  for (ElementRef x : elements) groups[neighborhood(s, x)].push_back(x);

  // Deterministic order: groups keyed by neighborhood, pairs in element order.
  std::vector<std::pair<ElementRef, ElementRef>> pairs;
  for (const auto& [nbhd, members] : groups)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        pairs.emplace_back(members[i], members[j]);
  std::sort(pairs.begin(), pairs.end());

  for (const auto& [x, y] : pairs)
    if (!collect.add({{x, y}, "identical incidence neighborhoods"})) break;
  return entry;
}

// Conjunction of A1-A9, plus EXT when the theory is the extensional one.
inline AxiomReport check_theory(const IncidenceStructure& s, TheoryId theory) {
  s.validate();
  AxiomReport report;
  report.theory = theory;
  for (AxiomId id : {AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4,
                     AxiomId::A5, AxiomId::A6, AxiomId::A7, AxiomId::A8,
                     AxiomId::A9}) {
    report.entries.push_back(check_axiom(s, id));
  }
  if (theory == TheoryId::SrExt) report.entries.push_back(check_extensionality(s));
  report.is_model = std::all_of(report.entries.begin(), report.entries.end(),
                                [](const AxiomEntry& e) { return e.holds; });
  return report;
}

inline bool satisfies(const IncidenceStructure& s, TheoryId theory) {
  return check_theory(s, theory).is_model;
}

}  // namespace polyfind
