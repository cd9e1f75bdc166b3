// Canonical forms, isomorphism testing, and labeled-graph permutation.
//
// The canonical form of a graph is the lexicographically maximal packed
// upper triangle (row-major, first bit highest) over all vertex orderings.
// The search individualizes vertices out of an equitable partition and prunes
// with automorphisms discovered along the way, so equality of canonical forms
// is exactly isomorphism.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "ergraph/graph.hpp"

namespace ergraph {

struct Permutation {
  std::vector<int> map;  // map[v] = image of v

  static Permutation identity(int n);
  Permutation inverse() const;
  int size() const { return static_cast<int>(map.size()); }
  int operator()(int v) const { return map[static_cast<std::size_t>(v)]; }
};

// Relabels g so that vertex v of the input becomes vertex perm(v).
Graph apply_permutation(const Graph& g, const Permutation& perm);

struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> bits;  // packed upper triangle of the canonical labeling

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  Permutation to_canonical;  // input vertex -> position in the canonical ordering
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

// The canonically relabeled graph (unpacked from the form, so two isomorphic
// graphs yield identical objects).
Graph canonical_graph(const Graph& g);
Graph form_to_graph(const CanonicalForm& form);

// graph6 string of the canonically relabeled graph.
std::string canonical_graph6(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

// Isomorphism witness g -> h if one exists; the returned map is verified
// edge-for-edge before being handed back.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);

// FNV-1a over (n, bits); for hash-based dedup of canonical forms.
std::size_t hash_value(const CanonicalForm& form);

}  // namespace ergraph

template <>
struct std::hash<ergraph::CanonicalForm> {
  std::size_t operator()(const ergraph::CanonicalForm& f) const { return ergraph::hash_value(f); }
};
