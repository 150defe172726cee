#include "apexion/minor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "apexion/common.hpp"
#include "apexion/iso.hpp"

namespace apexion {

namespace {

struct SubgraphSearch {
    // pattern/host in dense index form
    int pn, hn;
    std::vector<std::vector<int>> padj, hadj;
    std::vector<int> order;       // pattern vertices, connectivity-first
    std::vector<int> map;         // pattern idx -> host idx or -1
    std::vector<char> used;
    long nodes = 0, budget;

    bool match(std::size_t oi) {
        if (++nodes > budget)
            throw resource_limit_error("subgraph search budget exceeded");
        if (oi == order.size()) return true;
        int pv = order[oi];
        // candidates: host vertices consistent with already-mapped neighbors
        std::vector<int> cands;
        int anchor = -1;
        for (int pu : padj[pv])
            if (map[pu] != -1) { anchor = map[pu]; break; }
        if (anchor != -1) {
            for (int hv : hadj[anchor])
                if (!used[hv]) cands.push_back(hv);
        } else {
            for (int hv = 0; hv < hn; ++hv)
                if (!used[hv]) cands.push_back(hv);
        }
        for (int hv : cands) {
            if ((int)hadj[hv].size() < (int)padj[pv].size()) continue;
            bool ok = true;
            for (int pu : padj[pv]) {
                if (map[pu] == -1) continue;
                bool adj = std::binary_search(hadj[hv].begin(), hadj[hv].end(), map[pu]);
                if (!adj) { ok = false; break; }
            }
            if (!ok) continue;
            map[pv] = hv;
            used[hv] = 1;
            if (match(oi + 1)) return true;
            map[pv] = -1;
            used[hv] = 0;
        }
        return false;
    }
};

std::vector<std::vector<int>> dense_adj(const Graph& g, std::vector<int>& ids) {
    ids = g.vertices();
    std::map<int, int> pos;
    for (int i = 0; i < (int)ids.size(); ++i) pos[ids[i]] = i;
    std::vector<std::vector<int>> adj(ids.size());
    for (int i = 0; i < (int)ids.size(); ++i) {
        for (int u : g.neighbors(ids[i])) adj[i].push_back(pos[u]);
        std::sort(adj[i].begin(), adj[i].end());
    }
    return adj;
}

// degree multiset of h must be dominated by that of g for h to be a subgraph
bool degree_compatible(const Graph& h, const Graph& g) {
    std::vector<int> dh, dg;
    for (int v : h.vertices()) dh.push_back(h.degree(v));
    for (int v : g.vertices()) dg.push_back(g.degree(v));
    std::sort(dh.rbegin(), dh.rend());
    std::sort(dg.rbegin(), dg.rend());
    for (std::size_t i = 0; i < dh.size(); ++i)
        if (dh[i] > dg[i]) return false;
    return true;
}

struct MinorMemo {
    std::mutex mu;
    std::unordered_set<std::string> fails;  // keyed by canon(h)+"/"+canon(g)
};

MinorMemo& memo() {
    static MinorMemo m;
    return m;
}

struct MinorSearch {
    const Graph& h;
    std::string h_canon;
    long nodes = 0;
    const MinorLimits& lim;

    bool run(const Graph& g) {
        if (++nodes > lim.node_budget)
            throw resource_limit_error("minor search budget exceeded");
        if (g.num_vertices() < h.num_vertices() || g.num_edges() < h.num_edges())
            return false;
        std::string key;
        {
            key = h_canon + "/" + canonical_form(g);
            std::lock_guard<std::mutex> lk(memo().mu);
            if (memo().fails.count(key)) return false;
        }
        if (degree_compatible(h, g) &&
            has_subgraph(h, g, lim.node_budget - nodes))
            return true;
        // branch on contractions, deduplicated up to isomorphism
        std::set<std::string> seen;
        std::vector<Graph> children;
        for (auto [u, v] : g.edge_list()) {
            Graph c = g.contract_edge(u, v);
            if (c.num_edges() < h.num_edges()) continue;
            std::string ck = canonical_form(c);
            if (seen.insert(ck).second) children.push_back(std::move(c));
        }
        for (const Graph& c : children)
            if (run(c)) return true;
        {
            std::lock_guard<std::mutex> lk(memo().mu);
            memo().fails.insert(key);
        }
        return false;
    }
};

}  // namespace

bool has_subgraph(const Graph& h, const Graph& g, long node_budget) {
    if (h.num_vertices() > g.num_vertices() || h.num_edges() > g.num_edges())
        return false;
    if (h.num_vertices() == 0) return true;
    SubgraphSearch s;
    std::vector<int> pids, hids;
    s.padj = dense_adj(h, pids);
    s.hadj = dense_adj(g, hids);
    s.pn = (int)pids.size();
    s.hn = (int)hids.size();
    s.budget = node_budget;
    // order: BFS from max-degree vertex, components in sequence
    std::vector<char> placed(s.pn, 0);
    while ((int)s.order.size() < s.pn) {
        int best = -1;
        for (int v = 0; v < s.pn; ++v)
            if (!placed[v] && (best == -1 || s.padj[v].size() > s.padj[best].size()))
                best = v;
        std::vector<int> q{best};
        placed[best] = 1;
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            s.order.push_back(q[qi]);
            for (int u : s.padj[q[qi]])
                if (!placed[u]) {
                    placed[u] = 1;
                    q.push_back(u);
                }
        }
    }
    s.map.assign(s.pn, -1);
    s.used.assign(s.hn, 0);
    return s.match(0);
}

bool is_minor(const Graph& h, const Graph& g, const MinorLimits& lim) {
    if (h.num_vertices() > lim.max_pattern_vertices)
        throw resource_limit_error("minor pattern above configured size cap");
    if (g.num_vertices() > lim.max_host_vertices)
        throw resource_limit_error("minor host above configured size cap");
    if (h.num_vertices() == 0) return true;
    if (h.num_edges() == 0) return h.num_vertices() <= g.num_vertices();
    MinorSearch s{h, canonical_form(h), 0, lim};
    return s.run(g);
}

bool k4_minor_free(const Graph& g) {
    Graph cur = g;
    while (cur.num_vertices() > 0) {
        bool changed = false;
        for (int v : cur.vertices()) {
            int d = cur.degree(v);
            if (d <= 1) {
                cur = cur.minus_vertex(v);
                changed = true;
                break;
            }
            if (d == 2) {
                cur = cur.dissolve_vertex(v);
                changed = true;
                break;
            }
        }
        if (!changed) return false;  // min degree >= 3 forces a K4 minor
    }
    return true;
}

}  // namespace apexion
