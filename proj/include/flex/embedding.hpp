#pragma once

#include "flex/plane_graph.hpp"

#include <optional>

namespace flex {

// Planar embedding of a connected abstract graph, or nullopt if the graph is
// not planar (or not connected).
std::optional<PlaneGraph> planar_embedding(const Graph& g);

// Same, throwing GraphError(NotPlanar) instead of returning nullopt.
PlaneGraph embed_or_throw(const Graph& g);

}  // namespace flex
