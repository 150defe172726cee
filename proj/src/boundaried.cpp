#include "apexion/boundaried.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "apexion/common.hpp"

namespace apexion {

BoundariedGraph::BoundariedGraph(Graph g, std::map<int, int> labeling)
    : g_(std::move(g)), lab_(std::move(labeling)) {
    std::set<int> labels;
    for (const auto& [v, l] : lab_) {
        if (!g_.has_vertex(v))
            throw std::invalid_argument("boundary vertex not in graph");
        if (!labels.insert(l).second)
            throw std::invalid_argument("duplicate boundary label");
    }
    int t = static_cast<int>(lab_.size());
    for (int l : labels)
        if (l < 1 || l > t)
            throw std::invalid_argument("boundary labels must form [1..t]");
}

std::vector<int> BoundariedGraph::boundary() const {
    std::vector<int> b;
    for (const auto& [v, _] : lab_) b.push_back(v);
    return b;
}

ColorMap BoundariedGraph::colors() const {
    ColorMap c;
    for (const auto& [v, l] : lab_) c[v] = l;
    return c;
}

int BoundariedGraph::detail() const {
    return std::max(g_.num_edges(),
                    g_.num_vertices() - static_cast<int>(lab_.size()));
}

BoundariedGraph BoundariedGraph::minus_vertex(int v) const {
    if (is_boundary(v))
        throw std::invalid_argument("cannot delete a boundary vertex");
    return BoundariedGraph(g_.minus_vertex(v), lab_);
}

BoundariedGraph BoundariedGraph::minus_edge(int u, int v) const {
    return BoundariedGraph(g_.minus_edge(u, v), lab_);
}

BoundariedGraph BoundariedGraph::dissolve_vertex(int v) const {
    if (is_boundary(v))
        throw std::invalid_argument("cannot dissolve a boundary vertex");
    return BoundariedGraph(g_.dissolve_vertex(v), lab_);
}

std::string BoundariedGraph::canonical() const {
    return canonical_form(g_, colors());
}

bool BoundariedGraph::iso(const BoundariedGraph& o) const {
    if (boundary_size() != o.boundary_size()) return false;
    return isomorphic(g_, o.g_, colors(), o.colors());
}

BoundariedGraph BoundariedGraph::glue(const BoundariedGraph& a,
                                      const BoundariedGraph& b) {
    if (a.boundary_size() != b.boundary_size())
        throw std::invalid_argument("gluing needs equal boundary sizes");
    // remap b's vertices: boundary by label onto a's boundary, interior fresh
    std::map<int, int> label_to_a;
    for (const auto& [v, l] : a.lab_) label_to_a[l] = v;
    int fresh = std::max(a.g_.max_vertex_id(), b.g_.max_vertex_id()) + 1;
    std::map<int, int> remap;
    for (int v : b.g_.vertices()) {
        auto it = b.lab_.find(v);
        if (it != b.lab_.end())
            remap[v] = label_to_a.at(it->second);
        else
            remap[v] = fresh++;
    }
    Graph g = a.g_;
    for (int v : b.g_.vertices()) g.add_vertex(remap[v]);
    for (auto [u, v] : b.g_.edge_list()) g.add_edge(remap[u], remap[v]);
    return BoundariedGraph(std::move(g), a.lab_);
}

bool Folio::operator==(const Folio& o) const {
    if (detail_bound != o.detail_bound) return false;
    if (members.size() != o.members.size()) return false;
    auto it = members.begin();
    auto jt = o.members.begin();
    for (; it != members.end(); ++it, ++jt)
        if (it->first != jt->first) return false;
    return true;
}

std::string Folio::fingerprint() const {
    std::string s = "l=" + std::to_string(detail_bound) + ";";
    for (const auto& [k, _] : members) {
        s += k;
        s += '\n';
    }
    return s;
}

namespace {

// Exhaustive closure of a boundaried graph under the three reduction moves,
// visited states deduplicated by canonical form.
void reduction_closure(const BoundariedGraph& start, int l, long node_budget,
                       std::map<std::string, BoundariedGraph>& out) {
    std::vector<BoundariedGraph> stack{start};
    std::set<std::string> seen{start.canonical()};
    long nodes = 0;
    while (!stack.empty()) {
        if (++nodes > node_budget)
            throw resource_limit_error("folio enumeration budget exceeded");
        BoundariedGraph cur = std::move(stack.back());
        stack.pop_back();
        if (cur.detail() <= l) out.emplace(cur.canonical(), cur);
        std::vector<BoundariedGraph> nexts;
        for (auto [u, v] : cur.graph().edge_list())
            nexts.push_back(cur.minus_edge(u, v));
        for (int v : cur.graph().vertices()) {
            if (cur.is_boundary(v)) continue;
            if (cur.graph().degree(v) == 0) nexts.push_back(cur.minus_vertex(v));
            if (cur.graph().degree(v) == 2) {
                int a = cur.graph().neighbors(v)[0];
                int b = cur.graph().neighbors(v)[1];
                if (!cur.graph().has_edge(a, b))
                    nexts.push_back(cur.dissolve_vertex(v));
            }
        }
        for (auto& nx : nexts)
            if (seen.insert(nx.canonical()).second) stack.push_back(std::move(nx));
    }
}

struct FolioCache {
    std::mutex mu;
    std::unordered_map<std::string, Folio> table;  // canon + "@l" -> folio
};

FolioCache& folio_cache() {
    static FolioCache c;
    return c;
}

}  // namespace

Folio folio(const BoundariedGraph& bg, int l, long node_budget) {
    std::string key = bg.canonical() + "@" + std::to_string(l);
    {
        std::lock_guard<std::mutex> lk(folio_cache().mu);
        auto it = folio_cache().table.find(key);
        if (it != folio_cache().table.end()) return it->second;
    }
    Folio f;
    f.detail_bound = l;
    reduction_closure(bg, l, node_budget, f.members);
    {
        std::lock_guard<std::mutex> lk(folio_cache().mu);
        folio_cache().table.emplace(std::move(key), f);
    }
    return f;
}

bool boundaried_topological_minor(const BoundariedGraph& g1,
                                  const BoundariedGraph& g2,
                                  long node_budget) {
    if (g1.boundary_size() != g2.boundary_size()) return false;
    if (g1.graph().num_vertices() > g2.graph().num_vertices() ||
        g1.graph().num_edges() > g2.graph().num_edges())
        return false;
    // BFS over reductions of g2 looking for g1; prune below g1's size.
    std::string target = g1.canonical();
    std::vector<BoundariedGraph> stack{g2};
    std::set<std::string> seen{g2.canonical()};
    if (g2.canonical() == target) return true;
    long nodes = 0;
    while (!stack.empty()) {
        if (++nodes > node_budget)
            throw resource_limit_error("topological-minor search budget exceeded");
        BoundariedGraph cur = std::move(stack.back());
        stack.pop_back();
        std::vector<BoundariedGraph> nexts;
        for (auto [u, v] : cur.graph().edge_list())
            nexts.push_back(cur.minus_edge(u, v));
        for (int v : cur.graph().vertices()) {
            if (cur.is_boundary(v)) continue;
            if (cur.graph().degree(v) == 0) nexts.push_back(cur.minus_vertex(v));
            if (cur.graph().degree(v) == 2) {
                int a = cur.graph().neighbors(v)[0];
                int b = cur.graph().neighbors(v)[1];
                if (!cur.graph().has_edge(a, b))
                    nexts.push_back(cur.dissolve_vertex(v));
            }
        }
        for (auto& nx : nexts) {
            if (nx.graph().num_vertices() < g1.graph().num_vertices() ||
                nx.graph().num_edges() < g1.graph().num_edges())
                continue;
            std::string c = nx.canonical();
            if (c == target) return true;
            if (seen.insert(c).second) stack.push_back(std::move(nx));
        }
    }
    return false;
}

}  // namespace apexion
