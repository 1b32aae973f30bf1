#include "fractaloid/graph.hpp"

#include <algorithm>

namespace fractaloid {

DirectedGraph::DirectedGraph(
    std::vector<std::string> vertex_names,
    std::vector<std::tuple<std::string, std::string, std::string>> edge_decls)
    : vertex_names_(std::move(vertex_names)) {
    for (VertexId i = 0; i < vertex_names_.size(); ++i) {
        if (!vertex_lookup_.emplace(vertex_names_[i], i).second)
            throw std::invalid_argument("duplicate vertex id: " + vertex_names_[i]);
    }
    out_.resize(vertex_names_.size());
    in_.resize(vertex_names_.size());
    for (auto& [name, src, dst] : edge_decls) {
        auto si = vertex_lookup_.find(src);
        auto di = vertex_lookup_.find(dst);
        if (si == vertex_lookup_.end())
            throw std::invalid_argument("edge " + name + ": undeclared vertex " + src);
        if (di == vertex_lookup_.end())
            throw std::invalid_argument("edge " + name + ": undeclared vertex " + dst);
        EdgeId id = static_cast<EdgeId>(edges_.size());
        if (!edge_lookup_.emplace(name, id).second)
            throw std::invalid_argument("duplicate edge id: " + name);
        edges_.push_back({std::move(name), si->second, di->second});
        out_[si->second].push_back(id);
        in_[di->second].push_back(id);
    }
}

VertexId DirectedGraph::vertex_index(const std::string& name) const {
    auto it = vertex_lookup_.find(name);
    if (it == vertex_lookup_.end()) throw std::invalid_argument("unknown vertex: " + name);
    return it->second;
}

EdgeId DirectedGraph::edge_index(const std::string& name) const {
    auto it = edge_lookup_.find(name);
    if (it == edge_lookup_.end()) throw std::invalid_argument("unknown edge: " + name);
    return it->second;
}

ShadowedGraph::ShadowedGraph(DirectedGraph g) : base_(std::move(g)) {
    out_.resize(base_.vertex_count());
    for (VertexId v = 0; v < base_.vertex_count(); ++v) {
        for (EdgeId e : base_.out_edges(v)) out_[v].push_back({e, false});
        for (EdgeId e : base_.in_edges(v)) out_[v].push_back({e, true});
    }
}

std::vector<SignedEdge> ShadowedGraph::signed_edges() const {
    std::vector<SignedEdge> all;
    all.reserve(signed_edge_count());
    for (EdgeId e = 0; e < base_.edge_count(); ++e) all.push_back({e, false});
    for (EdgeId e = 0; e < base_.edge_count(); ++e) all.push_back({e, true});
    return all;
}

ShadowedGraph shadow(DirectedGraph g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("shadow: empty vertex set");
    return ShadowedGraph(std::move(g));
}

Degrees degrees(const DirectedGraph& g, VertexId v) {
    if (v >= g.vertex_count()) throw std::invalid_argument("degrees: unknown vertex");
    Degrees d;
    d.out = g.out_edges(v).size();
    d.in = g.in_edges(v).size();
    d.total = d.out + d.in;
    return d;
}

std::size_t max_out_degree(const DirectedGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("max_out_degree: empty graph");
    std::size_t n = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        n = std::max(n, g.out_edges(v).size());
    return n;
}

bool is_connected(const DirectedGraph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.out_edges(v)) {
            VertexId w = g.edge(e).dst;
            if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        for (EdgeId e : g.in_edges(v)) {
            VertexId w = g.edge(e).src;
            if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

} // namespace fractaloid
