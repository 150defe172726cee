#ifndef APEXION_ISO_HPP
#define APEXION_ISO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "apexion/graph.hpp"

namespace apexion {

// Vertex colors constrain all isomorphism machinery: mapped vertices must
// share a color. Boundary labels are injected as unique colors by callers.
using ColorMap = std::map<int, int>;

// Color-refinement hash, invariant under color-preserving isomorphism.
std::uint64_t iso_fingerprint(const Graph& g, const ColorMap& colors = {});

// Exact color-preserving isomorphism test (refinement + backtracking).
bool isomorphic(const Graph& a, const Graph& b,
                const ColorMap& ca = {}, const ColorMap& cb = {});

// Canonical encoding: equal strings iff color-isomorphic. Exponential in the
// worst case; intended for small graphs (folio members, obstruction sets).
std::string canonical_form(const Graph& g, const ColorMap& colors = {});

}  // namespace apexion

#endif
