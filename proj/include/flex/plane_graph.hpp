#pragma once

#include "flex/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace flex {

enum class GraphErrorKind { NonSimple, Disconnected, InconsistentRotation, OutOfRange, NotPlanar };

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    GraphErrorKind kind() const { return kind_; }

private:
    GraphErrorKind kind_;
};

// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

using Dart = int;
using Face = int;

// Connected simple plane graph given by a rotation system (clockwise neighbor
// order around each vertex). Faces are traced from the rotation system and are
// never part of the input. Immutable after build().
//
// Darts are numbered vertex by vertex: the darts leaving v are
// dart_begin(v) .. dart_begin(v)+degree(v)-1 in rotation order.
class PlaneGraph {
public:
    static PlaneGraph build(std::vector<std::vector<Vertex>> rotation);

    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const Graph& graph() const { return graph_; }
    int degree(Vertex v) const { return graph_.degree(v); }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }

    Dart dart_begin(Vertex v) const { return dart_offset_[v]; }
    Vertex tail(Dart d) const { return dart_tail_[d]; }
    Vertex head(Dart d) const { return dart_head_[d]; }
    Dart twin(Dart d) const { return twin_[d]; }
    Dart next_in_face(Dart d) const { return next_[d]; }
    Face face_of(Dart d) const { return dart_face_[d]; }
    Dart dart_between(Vertex u, Vertex v) const;  // -1 if not adjacent

    int face_degree(Face f) const { return static_cast<int>(faces_[f].size()); }
    const std::vector<Dart>& face_darts(Face f) const { return faces_[f]; }
    // Boundary walk as a vertex sequence; a vertex met twice is listed twice.
    std::vector<Vertex> face_vertices(Face f) const;

    // Distinct faces around v in rotation order.
    std::vector<Face> faces_at(Vertex v) const;
    // Number of 3-faces incident with v.
    int f3(Vertex v) const;
    // Number of k-vertices on the boundary walk of f, with multiplicity.
    int n_k(Face f, int k) const;

    // Id of v in the graph this one was cut from (identity for built graphs).
    Vertex original_id(Vertex v) const { return labels_[v]; }
    const std::vector<Vertex>& original_ids() const { return labels_; }

    // Induced subgraph on V \ removed, one plane graph per component with
    // inherited rotations. original_id() maps back to this graph's ids
    // composed with this graph's own labels.
    std::vector<PlaneGraph> delete_vertices(std::span<const Vertex> removed) const;

private:
    std::vector<std::vector<Vertex>> rotation_;
    Graph graph_;
    std::vector<Dart> dart_offset_;
    std::vector<Vertex> dart_tail_, dart_head_;
    std::vector<Dart> twin_, next_;
    std::vector<Face> dart_face_;
    std::vector<std::vector<Dart>> faces_;
    std::vector<Vertex> labels_;
};

// `planegraph v1` text format.
PlaneGraph parse_plane_graph(std::istream& in);
PlaneGraph parse_plane_graph(std::string_view text);
std::string format_plane_graph(const PlaneGraph& g);

}  // namespace flex
