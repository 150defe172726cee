#include "apexion/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "apexion/common.hpp"
#include "apexion/iso.hpp"
#include "apexion/planarity.hpp"

namespace apexion {

namespace {

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& xs, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    int n = static_cast<int>(xs.size());
    if (k > n) return out;
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = xs[idx[i]];
        out.push_back(std::move(s));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

enum class FastKind { none, k2, k3, k4, planar_pair };

FastKind classify(const std::vector<Graph>& graphs) {
    auto canon_of = [](const Graph& g) { return canonical_form(g); };
    static const std::string k2 = canonical_form(complete_graph(2));
    static const std::string k3 = canonical_form(complete_graph(3));
    static const std::string k4 = canonical_form(complete_graph(4));
    static const std::string k5 = canonical_form(complete_graph(5));
    static const std::string k33 = canonical_form(complete_bipartite(3, 3));
    if (graphs.size() == 1) {
        std::string c = canon_of(graphs[0]);
        if (c == k2) return FastKind::k2;
        if (c == k3) return FastKind::k3;
        if (c == k4) return FastKind::k4;
    }
    if (graphs.size() == 2) {
        std::string a = canon_of(graphs[0]), b = canon_of(graphs[1]);
        if ((a == k5 && b == k33) || (a == k33 && b == k5))
            return FastKind::planar_pair;
    }
    return FastKind::none;
}

FastKind family_kind(const ObstructionFamily& f) { return classify(f.graphs()); }

}  // namespace

int apex_number(const Graph& g, int max_apices) {
    for (int a = 0; a <= std::min(max_apices, g.num_vertices()); ++a) {
        for (const auto& del : subsets_of_size(g.vertices(), a))
            if (is_planar(g.minus_vertices(del))) return a;
    }
    throw resource_limit_error("apex number above configured cap");
}

ObstructionFamily::ObstructionFamily(std::vector<Graph> graphs, std::string name)
    : graphs_(std::move(graphs)), name_(std::move(name)) {
    if (graphs_.empty())
        throw std::invalid_argument("obstruction family must be nonempty");
    a_ = INT32_MAX;
    for (const Graph& h : graphs_) {
        if (h.num_vertices() == 0)
            throw std::invalid_argument("obstruction members must be nonempty");
        a_ = std::min(a_, apex_number(h));
        s_ = std::max(s_, h.num_vertices());
        l_ = std::max(l_, detail(h));
        int extra = 0;
        for (int v : h.vertices()) extra += std::max(0, h.degree(v) - 3);
        split_detail_ = std::max(
            split_detail_,
            std::max(h.num_edges() + extra, h.num_vertices() + extra));
    }
}

bool family_has_minor(const ObstructionFamily& f, const Graph& g,
                      const MinorLimits& lim) {
    switch (family_kind(f)) {
        case FastKind::k2:
            return g.num_edges() > 0;
        case FastKind::k3:
            return !g.is_acyclic();
        case FastKind::k4:
            return !k4_minor_free(g);
        case FastKind::planar_pair:
            return !is_planar(g);
        case FastKind::none:
            break;
    }
    for (const Graph& h : f.graphs())
        if (is_minor(h, g, lim)) return true;
    return false;
}

bool family_excluded(const ObstructionFamily& f, const Graph& g,
                     const MinorLimits& lim) {
    return !family_has_minor(f, g, lim);
}

std::optional<ObstructionFamily> named_family(const std::string& name) {
    if (name == "K2") return ObstructionFamily({complete_graph(2)}, name);
    if (name == "K3") return ObstructionFamily({complete_graph(3)}, name);
    if (name == "K4") return ObstructionFamily({complete_graph(4)}, name);
    if (name == "K5") return ObstructionFamily({complete_graph(5)}, name);
    if (name == "planar")
        return ObstructionFamily({complete_graph(5), complete_bipartite(3, 3)},
                                 name);
    return std::nullopt;
}

ObstructionFamily parse_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file: " + path);
    std::vector<Graph> graphs;
    Graph cur;
    bool any_line = false;
    std::string line;
    int lineno = 0;
    auto flush = [&]() {
        if (any_line) graphs.push_back(cur);
        cur = Graph();
        any_line = false;
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "---") {
            flush();
            continue;
        }
        if (toks.size() == 1) {
            cur.add_vertex(std::stoi(toks[0]));
            any_line = true;
        } else if (toks.size() == 2) {
            cur.add_edge(std::stoi(toks[0]), std::stoi(toks[1]));
            any_line = true;
        } else {
            throw std::invalid_argument("family file line " +
                                        std::to_string(lineno) + ": malformed");
        }
    }
    flush();
    return ObstructionFamily(std::move(graphs), path);
}

ObstructionFamily family_by_name_or_file(const std::string& spec) {
    if (auto f = named_family(spec)) return *f;
    return parse_family_file(spec);
}

}  // namespace apexion
