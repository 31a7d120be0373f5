#ifndef ORBITATLAS_HASSE_HPP
#define ORBITATLAS_HASSE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitatlas {

/// Transitively reduced DAG of orbit-closure inclusions. Edges point from an
/// orbit to one whose closure contains it (a minimal degeneration).
struct HasseDiagram {
    struct Node {
        std::string id;                      // stable key, e.g. "O(1,1,1)" or "Sigma3"
        std::string display;                 // label for reports and DOT
        std::optional<long> dim;
        std::map<std::string, std::string> attrs;
    };
    struct Edge {
        std::size_t lower = 0, upper = 0;    // indices into nodes
        std::string witness;                 // degeneration family, when known
    };

    std::vector<Node> nodes;
    std::vector<Edge> edges;

    std::size_t index_of(const std::string& id) const;
    bool has_edge(std::size_t lower, std::size_t upper) const;
};

/// All vertices reachable from each vertex along edges (reflexive closure not
/// included).
std::vector<std::vector<bool>> reachability(std::size_t n,
                                            const std::vector<HasseDiagram::Edge>& edges);

/// Keep only covering relations: drop (u,v) whenever some path u -> w -> v
/// of length >= 2 exists.
std::vector<HasseDiagram::Edge> transitive_reduction(std::size_t n,
                                                     std::vector<HasseDiagram::Edge> edges);

bool is_acyclic(const HasseDiagram& d);
bool is_transitively_reduced(const HasseDiagram& d);

} // namespace orbitatlas

#endif
