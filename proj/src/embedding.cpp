#include "flex/embedding.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace flex {

std::optional<PlaneGraph> planar_embedding(const Graph& g)
{
    if (g.vertex_count() == 0 || !g.connected())
        return std::nullopt;

    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>,
                                             boost::property<boost::edge_index_t, int>>;
    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;

    BoostGraph bg(static_cast<std::size_t>(g.vertex_count()));
    int next_index = 0;
    for (auto [u, v] : g.edges()) {
        auto e = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg).first;
        boost::put(boost::edge_index, bg, e, next_index++);
    }

    std::vector<std::vector<EdgeDesc>> embedding(static_cast<std::size_t>(g.vertex_count()));
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = &embedding[0]);
    if (!planar)
        return std::nullopt;

    std::vector<std::vector<Vertex>> rotation(embedding.size());
    for (std::size_t v = 0; v < embedding.size(); ++v)
        for (const auto& e : embedding[v]) {
            auto s = static_cast<Vertex>(boost::source(e, bg));
            auto t = static_cast<Vertex>(boost::target(e, bg));
            rotation[v].push_back(s == static_cast<Vertex>(v) ? t : s);
        }
    return PlaneGraph::build(std::move(rotation));
}

PlaneGraph embed_or_throw(const Graph& g)
{
    auto pg = planar_embedding(g);
    if (!pg)
        throw GraphError(GraphErrorKind::NotPlanar, "graph is not planar or not connected");
    return *std::move(pg);
}

}  // namespace flex
