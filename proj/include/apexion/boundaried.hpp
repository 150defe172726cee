#ifndef APEXION_BOUNDARIED_HPP
#define APEXION_BOUNDARIED_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "apexion/graph.hpp"
#include "apexion/iso.hpp"

namespace apexion {

// A t-boundaried graph: the boundary carries a bijection onto [t], and
// boundary-respecting isomorphism must preserve those labels.
class BoundariedGraph {
public:
    BoundariedGraph() = default;
    // labeling: boundary vertex -> label in [1..t], bijective.
    BoundariedGraph(Graph g, std::map<int, int> labeling);

    const Graph& graph() const { return g_; }
    const std::map<int, int>& labeling() const { return lab_; }
    std::vector<int> boundary() const;  // sorted vertex ids
    int boundary_size() const { return static_cast<int>(lab_.size()); }
    bool is_boundary(int v) const { return lab_.count(v) != 0; }

    // Label-induced colors for the iso machinery: boundary vertex with label
    // i gets color i, interior vertices share a color.
    ColorMap colors() const;

    int detail() const;  // max(|E|, |V \ B|)

    BoundariedGraph minus_vertex(int v) const;       // v must not be boundary
    BoundariedGraph minus_edge(int u, int v) const;
    BoundariedGraph dissolve_vertex(int v) const;    // v must not be boundary

    std::string canonical() const;
    bool iso(const BoundariedGraph& o) const;

    // Glue along equal-labeled boundaries (disjoint interiors assumed
    // resolved by the caller via consistent vertex ids).
    static BoundariedGraph glue(const BoundariedGraph& a, const BoundariedGraph& b);

private:
    Graph g_;
    std::map<int, int> lab_;
};

// Canonical-form set of boundaried graphs with a detail bound.
struct Folio {
    int detail_bound = 0;
    // canonical encoding -> representative member
    std::map<std::string, BoundariedGraph> members;

    bool contains(const BoundariedGraph& bg) const {
        return members.count(bg.canonical()) != 0;
    }
    bool operator==(const Folio& o) const;
    std::string fingerprint() const;  // canonical serialization of the key set
};

// Exact boundaried topological minor test: g1 <=tm g2 via a btm-pair whose
// dissolution is boundary-isomorphic to g1.
bool boundaried_topological_minor(const BoundariedGraph& g1,
                                  const BoundariedGraph& g2,
                                  long node_budget = 6'000'000);

// Exact l-folio by exhaustive reduction search (edge deletion, non-boundary
// vertex deletion, non-boundary degree-2 dissolution), members filtered to
// detail <= l. Results are memoized per canonical input.
Folio folio(const BoundariedGraph& bg, int l, long node_budget = 6'000'000);

}  // namespace apexion

#endif
