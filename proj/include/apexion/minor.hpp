#ifndef APEXION_MINOR_HPP
#define APEXION_MINOR_HPP

#include <cstddef>
#include <optional>

#include "apexion/graph.hpp"

namespace apexion {

struct MinorLimits {
    int max_pattern_vertices = 10;
    int max_host_vertices = 64;
    long node_budget = 4'000'000;  // search-tree nodes across the call
};

// h <=m g, exact. Branches on contractions of g with subgraph-containment
// checks at every node; states deduplicated by canonical form. Throws
// resource_limit_error when a limit is hit; never returns a wrong answer.
bool is_minor(const Graph& h, const Graph& g, const MinorLimits& lim = {});

// h appears as a (not necessarily induced) subgraph of g.
bool has_subgraph(const Graph& h, const Graph& g, long node_budget = 4'000'000);

// True iff g has no K4 minor (equivalently treewidth <= 2), by the
// degree-<=2 reduction characterization. Linear-ish and exact.
bool k4_minor_free(const Graph& g);

}  // namespace apexion

#endif
