#ifndef APEXION_FAMILY_HPP
#define APEXION_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "apexion/graph.hpp"
#include "apexion/minor.hpp"

namespace apexion {

// min |A| with g \ A planar, by subset enumeration over candidate apex sets.
int apex_number(const Graph& g, int max_apices = 6);

// Obstruction family F for F-M-Deletion, with its derived parameters.
class ObstructionFamily {
public:
    explicit ObstructionFamily(std::vector<Graph> graphs, std::string name = "");

    const std::vector<Graph>& graphs() const { return graphs_; }
    const std::string& name() const { return name_; }
    int min_apex() const { return a_; }      // a_F
    int max_size() const { return s_; }      // s_F
    int max_detail() const { return l_; }    // l_F

    // Detail needed so that topological-minor folios capture F-minors: the
    // worst split of a member (each vertex of degree d >= 4 expanded into a
    // tree of degree-3 branch vertices adds d-3 vertices and edges).
    int split_detail() const { return split_detail_; }

private:
    std::vector<Graph> graphs_;
    std::string name_;
    int a_ = 0, s_ = 0, l_ = 0, split_detail_ = 0;
};

// true iff no member of F is a minor of g (g in exc(F)). Exact; recognizes
// K2/K3/K4/{K5,K3,3} families and dispatches to the matching linear checks,
// everything else goes through is_minor with the given limits.
bool family_excluded(const ObstructionFamily& f, const Graph& g,
                     const MinorLimits& lim = {});

// F <=m g: some member of F is a minor of g.
bool family_has_minor(const ObstructionFamily& f, const Graph& g,
                      const MinorLimits& lim = {});

// Named families: "K2".."K5", "planar" (= {K5, K3,3}).
std::optional<ObstructionFamily> named_family(const std::string& name);

// A family file holds one edge list per block, blocks separated by lines
// containing only "---". '#' starts a comment.
ObstructionFamily parse_family_file(const std::string& path);
ObstructionFamily family_by_name_or_file(const std::string& spec);

}  // namespace apexion

#endif
