#include "apexion/iso.hpp"

#include <algorithm>
#include <numeric>

#include "apexion/common.hpp"

namespace apexion {

namespace {

struct Dense {
    int n = 0;
    std::vector<int> ids;                // index -> original id
    std::vector<std::vector<int>> adj;   // index-based
    std::vector<int> color;              // initial colors, normalized
};

Dense densify(const Graph& g, const ColorMap& colors) {
    Dense d;
    d.ids = g.vertices();
    d.n = static_cast<int>(d.ids.size());
    std::map<int, int> pos;
    for (int i = 0; i < d.n; ++i) pos[d.ids[i]] = i;
    d.adj.resize(d.n);
    for (int i = 0; i < d.n; ++i)
        for (int u : g.neighbors(d.ids[i])) d.adj[i].push_back(pos[u]);
    d.color.assign(d.n, 0);
    // normalize external colors to a compact range, keyed by value
    std::map<int, int> remap;
    for (int i = 0; i < d.n; ++i) {
        auto it = colors.find(d.ids[i]);
        int c = (it == colors.end()) ? INT32_MIN : it->second;
        auto r = remap.emplace(c, static_cast<int>(remap.size()));
        d.color[i] = r.first->second;
    }
    return d;
}

// One refinement pass to a fixpoint: new color = rank of (old color, sorted
// neighbor colors) among all such keys. Ranking by sorted key order keeps the
// numbering isomorphism-invariant. Returns number of distinct colors.
int refine(const Dense& d, std::vector<int>& color) {
    int n = d.n;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> table;
        std::vector<std::pair<int, std::vector<int>>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.reserve(d.adj[v].size());
            for (int u : d.adj[v]) sig.push_back(color[u]);
            std::sort(sig.begin(), sig.end());
            keys[v] = {color[v], std::move(sig)};
            table.emplace(keys[v], 0);
        }
        int next_id = 0;
        for (auto& [k, id] : table) id = next_id++;
        int before = *std::max_element(color.begin(), color.end()) + 1;
        for (int v = 0; v < n; ++v) color[v] = table[keys[v]];
        int after = static_cast<int>(table.size());
        if (after == before || after == n) return after;
    }
}

std::uint64_t colors_hash(const Dense& d, const std::vector<int>& color) {
    // Multiset of (color, sorted neighbor color multiset) hashes.
    std::vector<std::uint64_t> hs;
    hs.reserve(d.n);
    for (int v = 0; v < d.n; ++v) {
        std::vector<int> sig;
        for (int u : d.adj[v]) sig.push_back(color[u]);
        std::sort(sig.begin(), sig.end());
        std::uint64_t h = hash_u64(color[v] + 17);
        for (int c : sig) h = hash_combine(h, hash_u64(c + 31));
        hs.push_back(h);
    }
    std::sort(hs.begin(), hs.end());
    std::uint64_t h = hash_u64(d.n);
    for (auto x : hs) h = hash_combine(h, x);
    return h;
}

std::string encode_under(const Dense& d, const std::vector<int>& order,
                         const std::vector<int>& init_color) {
    // order[i] = vertex placed at position i
    int n = d.n;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::string s;
    s.reserve(n * 4 + n);
    for (int i = 0; i < n; ++i) {
        s += std::to_string(init_color[order[i]]);
        s += ',';
    }
    s += '|';
    for (int i = 0; i < n; ++i) {
        std::vector<int> row;
        for (int u : d.adj[order[i]])
            if (pos[u] < i) row.push_back(pos[u]);
        std::sort(row.begin(), row.end());
        for (int p : row) {
            s += std::to_string(p);
            s += ',';
        }
        s += ';';
    }
    return s;
}

// Canonical search: refine, individualize first vertex of the first smallest
// non-singleton cell, keep the lexicographically least encoding.
struct CanonSearch {
    const Dense& d;
    std::string best;
    bool have_best = false;
    long nodes = 0;

    explicit CanonSearch(const Dense& dd) : d(dd) {}

    void run(std::vector<int> color) {
        ++nodes;
        if (nodes > 2'000'000)
            throw resource_limit_error("canonical form search budget exceeded");
        int k = refine(d, color);
        if (k == d.n) {
            std::vector<int> order(d.n);
            for (int v = 0; v < d.n; ++v) order[color[v]] = v;
            std::string enc = encode_under(d, order, d.color);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        // first smallest non-singleton cell by color id
        std::vector<std::vector<int>> cells(k);
        for (int v = 0; v < d.n; ++v) cells[color[v]].push_back(v);
        int target = -1;
        for (int c = 0; c < k; ++c)
            if (cells[c].size() > 1 &&
                (target == -1 || cells[c].size() < cells[target].size()))
                target = c;
        for (int v : cells[target]) {
            std::vector<int> nc = color;
            for (int u = 0; u < d.n; ++u)
                if (nc[u] > color[v] || (nc[u] == color[v] && u != v)) ++nc[u];
            // v keeps color[v]; all others in/after its cell shift up
            run(std::move(nc));
        }
    }
};

bool iso_backtrack(const Dense& a, const Dense& b, std::vector<int>& ca,
                   std::vector<int>& cb) {
    // refine both in lockstep; map vertices cell by cell
    long nodes = 0;
    struct Rec {
        const Dense &a, &b;
        long& nodes;
        Rec(const Dense& aa, const Dense& bb, long& n) : a(aa), b(bb), nodes(n) {}
        bool go(std::vector<int> ca, std::vector<int> cb) {
            if (++nodes > 2'000'000)
                throw resource_limit_error("isomorphism search budget exceeded");
            int ka = refine(a, ca);
            int kb = refine(b, cb);
            if (ka != kb) return false;
            // cell size profiles must match
            std::vector<std::vector<int>> cellsA(ka), cellsB(kb);
            for (int v = 0; v < a.n; ++v) cellsA[ca[v]].push_back(v);
            for (int v = 0; v < b.n; ++v) cellsB[cb[v]].push_back(v);
            for (int c = 0; c < ka; ++c)
                if (cellsA[c].size() != cellsB[c].size()) return false;
            if (ka == a.n) {
                // discrete: verify the induced bijection is an isomorphism
                std::vector<int> map_ab(a.n);
                for (int v = 0; v < a.n; ++v) map_ab[ca[v]] = v;  // color->A vtx
                std::vector<int> map_b(b.n);
                for (int v = 0; v < b.n; ++v) map_b[cb[v]] = v;
                std::vector<int> f(a.n);
                for (int c = 0; c < a.n; ++c) f[map_ab[c]] = map_b[c];
                for (int v = 0; v < a.n; ++v) {
                    if (a.adj[v].size() != b.adj[f[v]].size()) return false;
                    for (int u : a.adj[v]) {
                        bool found = false;
                        for (int w : b.adj[f[v]])
                            if (w == f[u]) { found = true; break; }
                        if (!found) return false;
                    }
                }
                return true;
            }
            int target = -1;
            for (int c = 0; c < ka; ++c)
                if (cellsA[c].size() > 1 &&
                    (target == -1 || cellsA[c].size() < cellsA[target].size()))
                    target = c;
            int va = cellsA[target][0];
            auto split = [&](std::vector<int> col, int v, int pivot) {
                for (int u = 0; u < (int)col.size(); ++u)
                    if (col[u] > pivot || (col[u] == pivot && u != v)) ++col[u];
                return col;
            };
            for (int vb : cellsB[target]) {
                if (go(split(ca, va, target), split(cb, vb, target))) return true;
            }
            return false;
        }
    } rec(a, b, nodes);
    return rec.go(ca, cb);
}

}  // namespace

std::uint64_t iso_fingerprint(const Graph& g, const ColorMap& colors) {
    Dense d = densify(g, colors);
    std::vector<int> color = d.color;
    if (d.n > 0) refine(d, color);
    std::uint64_t h = colors_hash(d, color);
    return hash_combine(h, hash_u64(static_cast<std::uint64_t>(g.num_edges())));
}

bool isomorphic(const Graph& a, const Graph& b, const ColorMap& ca,
                const ColorMap& cb) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    Dense da = densify(a, ca), db = densify(b, cb);
    // initial color histograms must agree; densify normalizes by value order,
    // which is only consistent if the color VALUES used are comparable across
    // graphs. Callers use shared conventions (boundary label = color value).
    {
        std::map<int, int> ha, hb;
        for (int v : a.vertices()) {
            auto it = ca.find(v);
            ++ha[it == ca.end() ? INT32_MIN : it->second];
        }
        for (int v : b.vertices()) {
            auto it = cb.find(v);
            ++hb[it == cb.end() ? INT32_MIN : it->second];
        }
        if (ha != hb) return false;
    }
    if (da.n == 0) return true;
    return iso_backtrack(da, db, da.color, db.color);
}

std::string canonical_form(const Graph& g, const ColorMap& colors) {
    Dense d = densify(g, colors);
    if (d.n == 0) return "0|";
    CanonSearch cs(d);
    cs.run(d.color);
    return std::to_string(d.n) + "#" + cs.best;
}

}  // namespace apexion
