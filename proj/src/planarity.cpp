#include "apexion/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include <algorithm>
#include <set>

#include "apexion/minor.hpp"

namespace apexion {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS,
                                         boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>>;

BoostGraph to_boost(const Graph& g, std::vector<int>& ids) {
    ids = g.vertices();
    std::map<int, int> pos;
    for (int i = 0; i < (int)ids.size(); ++i) pos[ids[i]] = i;
    BoostGraph bg(ids.size());
    for (auto [u, v] : g.edge_list()) boost::add_edge(pos[u], pos[v], bg);
    return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
    if (g.num_vertices() <= 4) return true;
    if (g.num_edges() > 3 * g.num_vertices() - 6) return false;
    std::vector<int> ids;
    BoostGraph bg = to_boost(g, ids);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<RotationSystem> planar_embedding(const Graph& g) {
    std::vector<int> ids;
    BoostGraph bg = to_boost(g, ids);
    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> emb(boost::num_vertices(bg));
    bool ok = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = emb.data());
    if (!ok) return std::nullopt;
    RotationSystem rot;
    for (std::size_t i = 0; i < emb.size(); ++i) {
        std::vector<int>& order = rot[ids[i]];
        for (const Edge& e : emb[i]) {
            auto s = boost::source(e, bg), t = boost::target(e, bg);
            order.push_back(ids[s == i ? t : s]);
        }
    }
    return rot;
}

std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const RotationSystem& rot) {
    // next directed edge after (u -> v): (v -> w) with w the neighbor
    // following u in the rotation at v
    std::set<std::pair<int, int>> done;
    std::vector<std::vector<int>> faces;
    for (int u : g.vertices()) {
        if (g.degree(u) == 0) {
            faces.push_back({u});
            continue;
        }
        for (int v0 : g.neighbors(u)) {
            if (done.count({u, v0})) continue;
            std::vector<int> walk;
            int a = u, b = v0;
            while (!done.count({a, b})) {
                done.insert({a, b});
                walk.push_back(a);
                const auto& order = rot.at(b);
                auto it = std::find(order.begin(), order.end(), a);
                std::size_t idx = (it - order.begin() + 1) % order.size();
                a = b;
                b = order[idx];
            }
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

bool is_planar_minor_oracle(const Graph& g) {
    MinorLimits lim;
    lim.node_budget = 12'000'000;
    if (is_minor(complete_graph(5), g, lim)) return false;
    if (is_minor(complete_bipartite(3, 3), g, lim)) return false;
    return true;
}

}  // namespace apexion
