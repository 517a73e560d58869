#include "orthoplan/planar_graph.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

namespace orthoplan {

// Deterministic planar embedding via Boyer-Myrvold. Vertices are fed in
// sorted id order and edges in sorted pair order so the embedding is a pure
// function of the input.
std::unordered_map<Vid, std::vector<Vid>> planar_embedding(
    const std::vector<Vid>& vertices, const std::vector<std::pair<Vid, Vid>>& edges) {
    using graph_t =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>,
                              boost::property<boost::edge_index_t, int>>;

    std::vector<Vid> ids = vertices;
    std::sort(ids.begin(), ids.end());
    std::map<Vid, int> local;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) local[ids[i]] = i;

    graph_t g(ids.size());
    std::vector<std::pair<Vid, Vid>> es = edges;
    for (auto& e : es)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (auto& [a, b] : es) boost::add_edge(local.at(a), local.at(b), g);

    auto e_index = boost::get(boost::edge_index, g);
    int ecount = 0;
    for (auto [ei, eend] = boost::edges(g); ei != eend; ++ei) boost::put(e_index, *ei, ecount++);

    using edge_t = boost::graph_traits<graph_t>::edge_descriptor;
    std::vector<std::vector<edge_t>> embedding(boost::num_vertices(g));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, g)));
    if (!planar) throw non_planar_error("input graph is not planar");

    std::unordered_map<Vid, std::vector<Vid>> rot;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
        std::vector<Vid> order;
        for (const auto& e : embedding[i]) {
            int s = static_cast<int>(boost::source(e, g));
            int t = static_cast<int>(boost::target(e, g));
            order.push_back(ids[s == i ? t : s]);
        }
        rot[ids[i]] = std::move(order);
    }
    return rot;
}

} // namespace orthoplan
