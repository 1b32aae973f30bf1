#ifndef FRACTALOID_GRAPH_HPP
#define FRACTALOID_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fractaloid {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// A finite directed graph. Vertex and edge declaration order is preserved;
// loops and parallel edges are allowed.
class DirectedGraph {
public:
    struct Edge {
        std::string name;
        VertexId src;
        VertexId dst;
    };

    DirectedGraph(std::vector<std::string> vertex_names,
                  std::vector<std::tuple<std::string, std::string, std::string>> edge_decls);

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    VertexId vertex_index(const std::string& name) const;
    EdgeId edge_index(const std::string& name) const;
    bool has_vertex(const std::string& name) const { return vertex_lookup_.count(name) != 0; }

    // out-edges per vertex, in edge-declaration order
    const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(v); }
    const std::vector<EdgeId>& in_edges(VertexId v) const { return in_.at(v); }

private:
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexId> vertex_lookup_;
    std::unordered_map<std::string, EdgeId> edge_lookup_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

// An edge of the shadowed graph: a declared edge or its reversal.
struct SignedEdge {
    EdgeId edge = 0;
    bool inverted = false;

    SignedEdge inverse() const { return {edge, !inverted}; }

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

struct Degrees {
    std::size_t out = 0;
    std::size_t in = 0;
    std::size_t total = 0;
};

// The graph together with both orientations of every edge. Signed edges are
// ordered: declared edges first, then their inverses in declaration order.
class ShadowedGraph {
public:
    explicit ShadowedGraph(DirectedGraph g);

    const DirectedGraph& base() const { return base_; }
    std::size_t vertex_count() const { return base_.vertex_count(); }
    std::size_t signed_edge_count() const { return 2 * base_.edge_count(); }

    VertexId source(SignedEdge e) const {
        const auto& ed = base_.edge(e.edge);
        return e.inverted ? ed.dst : ed.src;
    }
    VertexId target(SignedEdge e) const {
        const auto& ed = base_.edge(e.edge);
        return e.inverted ? ed.src : ed.dst;
    }

    // all signed edges, declared first then shadows
    std::vector<SignedEdge> signed_edges() const;

    // signed edges departing v: positive out-edges in declaration order,
    // then shadows of in-edges in declaration order
    const std::vector<SignedEdge>& out(VertexId v) const { return out_.at(v); }

    std::string edge_name(SignedEdge e) const {
        const std::string& n = base_.edge(e.edge).name;
        return e.inverted ? "~" + n : n;
    }

private:
    DirectedGraph base_;
    std::vector<std::vector<SignedEdge>> out_;
};

ShadowedGraph shadow(DirectedGraph g);

Degrees degrees(const DirectedGraph& g, VertexId v);

// N: maximal out-degree over all vertices (0 for edgeless graphs)
std::size_t max_out_degree(const DirectedGraph& g);

// true iff the underlying undirected graph is connected (vacuously true when empty)
bool is_connected(const DirectedGraph& g);

} // namespace fractaloid

#endif
