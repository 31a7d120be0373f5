#include "orbitatlas/hasse.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitatlas {

std::size_t HasseDiagram::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].id == id) return i;
    throw std::out_of_range("no node with id " + id);
}

bool HasseDiagram::has_edge(std::size_t lower, std::size_t upper) const {
    for (const auto& e : edges)
        if (e.lower == lower && e.upper == upper) return true;
    return false;
}

std::vector<std::vector<bool>> reachability(std::size_t n,
                                            const std::vector<HasseDiagram::Edge>& edges) {
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& e : edges) reach[e.lower][e.upper] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    return reach;
}

std::vector<HasseDiagram::Edge> transitive_reduction(std::size_t n,
                                                     std::vector<HasseDiagram::Edge> edges) {
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        if (a.lower != b.lower) return a.lower < b.lower;
        return a.upper < b.upper;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const auto& a, const auto& b) {
                                return a.lower == b.lower && a.upper == b.upper;
                            }),
                edges.end());
    auto reach = reachability(n, edges);
    std::vector<HasseDiagram::Edge> reduced;
    for (const auto& e : edges) {
        bool redundant = false;
        for (std::size_t w = 0; w < n && !redundant; ++w)
            if (w != e.lower && w != e.upper && reach[e.lower][w] && reach[w][e.upper])
                redundant = true;
        if (!redundant) reduced.push_back(e);
    }
    return reduced;
}

bool is_acyclic(const HasseDiagram& d) {
    auto reach = reachability(d.nodes.size(), d.edges);
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        if (reach[i][i]) return false;
    return true;
}

bool is_transitively_reduced(const HasseDiagram& d) {
    auto reduced = transitive_reduction(d.nodes.size(), d.edges);
    return reduced.size() == d.edges.size();
}

} // namespace orbitatlas
