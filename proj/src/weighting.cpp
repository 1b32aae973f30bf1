#include "fractaloid/weighting.hpp"

#include <cstdlib>

namespace fractaloid {

Weighting canonical_weighting(const DirectedGraph& g) {
    std::vector<int> labels(g.edge_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int idx = 1;
        for (EdgeId e : g.out_edges(v)) labels[e] = idx++;
    }
    return Weighting(static_cast<int>(max_out_degree(g)), std::move(labels));
}

LabelVector theta(const std::vector<int>& labels, int n) {
    LabelVector sum(static_cast<std::size_t>(n), 0);
    for (int l : labels) {
        int a = std::abs(l);
        if (a < 1 || a > n) throw std::invalid_argument("theta: label index out of range");
        sum[static_cast<std::size_t>(a - 1)] += (l > 0) ? 1 : -1;
    }
    return sum;
}

std::optional<PathWeight> omega_word(const ShadowedGraph& g, const Weighting& w,
                                     const std::vector<SignedEdge>& word) {
    if (word.empty()) return std::nullopt;
    PathWeight pw;
    pw.src = g.source(word.front());
    VertexId at = pw.src;
    pw.labels.reserve(word.size());
    for (const SignedEdge& e : word) {
        if (g.source(e) != at) return std::nullopt; // not a path
        pw.labels.push_back(w.label(e));
        at = g.target(e);
    }
    pw.dst = at;
    return pw;
}

SummedWeight omega_plus(const PathWeight& w, int n) {
    return {w.src, w.dst, theta(w.labels, n)};
}

} // namespace fractaloid
