#include "apexion/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace apexion {

namespace {
void insert_sorted(std::vector<int>& xs, int v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it == xs.end() || *it != v) xs.insert(it, v);
}
bool contains_sorted(const std::vector<int>& xs, int v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}
}  // namespace

Graph Graph::from_edges(const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_vertex(int v) {
    if (adj_.count(v)) return;
    adj_[v] = {};
    insert_sorted(verts_, v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    add_vertex(u);
    add_vertex(v);
    if (has_edge(u, v)) return;
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++num_edges_;
}

void Graph::set_label(int v, const std::string& label) {
    add_vertex(v);
    labels_[v] = label;
}

bool Graph::has_vertex(int v) const { return adj_.count(v) != 0; }

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    return contains_sorted(it->second, v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("no such vertex");
    return it->second;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges_);
    for (const auto& [u, ns] : adj_)
        for (int v : ns)
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::set<int> ks(keep.begin(), keep.end());
    Graph g;
    for (int v : keep)
        if (has_vertex(v)) g.add_vertex(v);
    for (const auto& [u, ns] : adj_) {
        if (!ks.count(u)) continue;
        for (int v : ns)
            if (u < v && ks.count(v)) g.add_edge(u, v);
    }
    for (const auto& [v, l] : labels_)
        if (ks.count(v) && g.has_vertex(v)) g.labels_[v] = l;
    return g;
}

Graph Graph::minus_vertex(int v) const { return minus_vertices({v}); }

Graph Graph::minus_vertices(const std::vector<int>& del) const {
    std::set<int> ds(del.begin(), del.end());
    std::vector<int> keep;
    for (int v : verts_)
        if (!ds.count(v)) keep.push_back(v);
    return induced(keep);
}

Graph Graph::minus_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge absent");
    Graph g = *this;
    auto& nu = g.adj_[u];
    nu.erase(std::find(nu.begin(), nu.end(), v));
    auto& nv = g.adj_[v];
    nv.erase(std::find(nv.begin(), nv.end(), u));
    --g.num_edges_;
    return g;
}

int Graph::max_vertex_id() const {
    return verts_.empty() ? -1 : verts_.back();
}

Graph Graph::contract_edge(int u, int v, std::optional<int> new_id) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge absent");
    int w = new_id.value_or(max_vertex_id() + 1);
    if (has_vertex(w)) throw std::invalid_argument("merged id already in use");
    Graph g;
    g.add_vertex(w);
    for (int x : verts_)
        if (x != u && x != v) g.add_vertex(x);
    for (const auto& [a, ns] : adj_) {
        for (int b : ns) {
            if (a > b) continue;
            int aa = (a == u || a == v) ? w : a;
            int bb = (b == u || b == v) ? w : b;
            if (aa != bb) g.add_edge(aa, bb);
        }
    }
    for (const auto& [x, l] : labels_)
        if (x != u && x != v) g.labels_[x] = l;
    return g;
}

Graph Graph::dissolve_vertex(int v) const {
    if (degree(v) != 2) throw std::invalid_argument("dissolution needs degree 2");
    int a = neighbors(v)[0], b = neighbors(v)[1];
    Graph g = minus_vertex(v);
    g.add_edge(a, b);
    return g;
}

Graph Graph::subdivide_edge(int u, int v, std::optional<int> new_id) const {
    int w = new_id.value_or(max_vertex_id() + 1);
    if (has_vertex(w)) throw std::invalid_argument("subdivision id already in use");
    Graph g = minus_edge(u, v);
    g.add_edge(u, w);
    g.add_edge(w, v);
    return g;
}

bool Graph::is_connected() const {
    if (verts_.empty()) return true;
    return connected_components().size() == 1;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::set<int> seen;
    std::vector<std::vector<int>> comps;
    for (int s : verts_) {
        if (seen.count(s)) continue;
        std::vector<int> comp, stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int y : neighbors(x))
                if (!seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_acyclic() const {
    // n - m = #components exactly for forests
    return num_vertices() - num_edges_ ==
           static_cast<int>(connected_components().size());
}

std::vector<std::vector<int>> Graph::blocks() const {
    // Tarjan biconnected components; blocks reported as vertex sets.
    std::map<int, int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<int>> out;
    int timer = 0;

    auto emit = [&](std::pair<int, int> top_edge) {
        std::set<int> blk;
        while (!stack.empty()) {
            auto e = stack.back();
            stack.pop_back();
            blk.insert(e.first);
            blk.insert(e.second);
            if (e == top_edge) break;
        }
        out.emplace_back(blk.begin(), blk.end());
    };

    struct Frame {
        int v, parent;
        std::size_t idx;
    };
    for (int root : verts_) {
        if (disc.count(root)) continue;
        std::vector<Frame> st{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& ns = neighbors(f.v);
            if (f.idx < ns.size()) {
                int u = ns[f.idx++];
                if (u == f.parent) continue;
                if (!disc.count(u)) {
                    stack.push_back({f.v, u});
                    disc[u] = low[u] = timer++;
                    st.push_back({u, f.v, 0});
                } else if (disc[u] < disc[f.v]) {
                    stack.push_back({f.v, u});
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                int v = f.v, p = f.parent;
                st.pop_back();
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) emit({p, v});
                }
            }
        }
        if (degree(root) == 0) out.push_back({root});
    }
    return out;
}

int detail(const Graph& g) { return std::max(g.num_edges(), g.num_vertices()); }

bool is_separation(const Graph& g, const Separation& s) {
    std::set<int> l(s.left.begin(), s.left.end());
    std::set<int> r(s.right.begin(), s.right.end());
    for (int v : g.vertices())
        if (!l.count(v) && !r.count(v)) return false;
    for (int v : s.left)
        if (!g.has_vertex(v)) return false;
    for (int v : s.right)
        if (!g.has_vertex(v)) return false;
    for (auto [u, v] : g.edge_list()) {
        bool u_lo = l.count(u) && !r.count(u), u_ro = r.count(u) && !l.count(u);
        bool v_lo = l.count(v) && !r.count(v), v_ro = r.count(v) && !l.count(v);
        if ((u_lo && v_ro) || (u_ro && v_lo)) return false;
    }
    return true;
}

Graph complete_graph(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g;
    for (int i = 0; i < a + b; ++i) g.add_vertex(i);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph path_graph(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph grid_graph(int rows, int cols) {
    Graph g;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            g.add_vertex(id(r, c));
            if (r > 0) g.add_edge(id(r - 1, c), id(r, c));
            if (c > 0) g.add_edge(id(r, c - 1), id(r, c));
        }
    return g;
}

Graph petersen_graph() {
    Graph g;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);             // spokes
    }
    return g;
}

}  // namespace apexion
