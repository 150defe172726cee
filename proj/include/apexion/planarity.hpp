#ifndef APEXION_PLANARITY_HPP
#define APEXION_PLANARITY_HPP

#include <map>
#include <optional>
#include <vector>

#include "apexion/graph.hpp"

namespace apexion {

// Rotation system: for each vertex, the cyclic order of its neighbors in a
// plane drawing (one consistent orientation for the whole graph).
using RotationSystem = std::map<int, std::vector<int>>;

bool is_planar(const Graph& g);

// Embedding for a planar graph; nullopt when nonplanar.
std::optional<RotationSystem> planar_embedding(const Graph& g);

// Faces of an embedded connected graph, each as a closed directed walk of
// vertices. Satisfies Euler's formula; single-vertex components yield one
// trivial face.
std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const RotationSystem& rot);

// Kuratowski/Wagner route: planar iff neither K5 nor K3,3 is a minor.
// Exhaustive; used as the independent oracle for the fast test.
bool is_planar_minor_oracle(const Graph& g);

}  // namespace apexion

#endif
