#ifndef APEXION_GRAPH_HPP
#define APEXION_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace apexion {

// Undirected simple graph over integer vertex ids. Ids are arbitrary and
// preserved by the transforming operations, which all return new graphs.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(const std::vector<std::pair<int, int>>& edges);

    void add_vertex(int v);
    // Adds both endpoints if missing. Loops are rejected.
    void add_edge(int u, int v);
    void set_label(int v, const std::string& label);

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    int num_vertices() const { return static_cast<int>(verts_.size()); }
    int num_edges() const { return num_edges_; }
    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted
    const std::map<int, std::string>& labels() const { return labels_; }

    Graph induced(const std::vector<int>& keep) const;
    Graph minus_vertex(int v) const;
    Graph minus_vertices(const std::vector<int>& del) const;
    Graph minus_edge(int u, int v) const;

    // Contracts {u,v} into a fresh vertex adjacent to N(u) u N(v) \ {u,v}.
    // The merged vertex gets max_vertex_id()+1 unless new_id is given.
    Graph contract_edge(int u, int v, std::optional<int> new_id = {}) const;

    // Removes a degree-2 vertex and joins its two neighbors.
    Graph dissolve_vertex(int v) const;

    // Replaces edge {u,v} by a path u - w - v with a fresh vertex w.
    Graph subdivide_edge(int u, int v, std::optional<int> new_id = {}) const;

    int max_vertex_id() const;

    bool is_connected() const;
    bool is_acyclic() const;
    std::vector<std::vector<int>> connected_components() const;
    // Vertex sets of the biconnected components (blocks).
    std::vector<std::vector<int>> blocks() const;

    bool operator==(const Graph& o) const {
        return verts_ == o.verts_ && adj_ == o.adj_;
    }

private:
    std::vector<int> verts_;              // sorted
    std::map<int, std::vector<int>> adj_; // sorted neighbor lists
    std::map<int, std::string> labels_;
    int num_edges_ = 0;
};

// max(|E(G)|, |V(G)|); for boundaried graphs see boundaried.hpp.
int detail(const Graph& g);

// A separation (L, R): L u R = V and no edge between L\R and R\L.
struct Separation {
    std::vector<int> left;
    std::vector<int> right;
};

bool is_separation(const Graph& g, const Separation& s);

// Small named graphs used as obstructions and in tests.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);
Graph petersen_graph();

}  // namespace apexion

#endif
