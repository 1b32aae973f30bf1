#ifndef FRACTALOID_WEIGHTING_HPP
#define FRACTALOID_WEIGHTING_HPP

#include <optional>
#include <vector>

#include "fractaloid/graph.hpp"

namespace fractaloid {

// Coordinate-wise signed counts of label indices, over Z^N.
using LabelVector = std::vector<long long>;

// The canonical edge labeling: at each vertex the out-edges carry the
// distinct indices 1..deg_out(v), and a reversed edge carries the negated
// index of its original.
class Weighting {
public:
    Weighting(int n, std::vector<int> edge_labels)
        : n_(n), edge_labels_(std::move(edge_labels)) {}

    int N() const { return n_; }

    // signed label index in {-N..-1, 1..N}
    int label(SignedEdge e) const {
        int l = edge_labels_.at(e.edge);
        return e.inverted ? -l : l;
    }

private:
    int n_;
    std::vector<int> edge_labels_; // positive index per declared edge
};

Weighting canonical_weighting(const DirectedGraph& g);

// theta: sum a sequence of signed label indices into a vector in Z^N.
// The empty sequence gives the zero vector.
LabelVector theta(const std::vector<int>& labels, int n);

// The omega-value of a path or vertex: endpoints plus the per-edge labels.
// A vertex weight has an empty label sequence (the zero label x0).
struct PathWeight {
    VertexId src = 0;
    VertexId dst = 0;
    std::vector<int> labels;

    friend bool operator==(const PathWeight&, const PathWeight&) = default;
};

inline PathWeight vertex_weight(VertexId v) { return {v, v, {}}; }

// Weight of a word in signed edges; nullopt when the word is not a path.
std::optional<PathWeight> omega_word(const ShadowedGraph& g, const Weighting& w,
                                     const std::vector<SignedEdge>& word);

struct SummedWeight {
    VertexId src = 0;
    VertexId dst = 0;
    LabelVector sum;

    friend bool operator==(const SummedWeight&, const SummedWeight&) = default;
};

// omega_plus: replace the label sequence of a weight by its theta-sum.
SummedWeight omega_plus(const PathWeight& w, int n);

} // namespace fractaloid

#endif
