#ifndef FRACTALOID_AUTOMATON_HPP
#define FRACTALOID_AUTOMATON_HPP

#include <optional>
#include <string>
#include <vector>

#include "fractaloid/groupoid.hpp"
#include "fractaloid/weighting.hpp"

namespace fractaloid {

// Labeling map: the weight of e when e departs the state's terminal vertex,
// nullopt (the empty state) otherwise. States are path or vertex weights.
std::optional<PathWeight> phi(const ShadowedGraph& g, const Weighting& w,
                              const PathWeight& state, SignedEdge e);

// Shift map: e itself when admissible after the state, nullopt otherwise.
std::optional<SignedEdge> psi(const ShadowedGraph& g, const PathWeight& state,
                              SignedEdge e);

// phi extended to words: the weight of the word's last edge when the whole
// word is admissible after the state.
std::optional<PathWeight> phi_word(const ShadowedGraph& g, const Weighting& w,
                                   const PathWeight& state, const Word& word);

struct ActionCheckResult {
    bool passed = true;
    std::size_t states_checked = 0;
    std::string witness;
};

// Verifies the composition law: acting by e2 then e1 equals the single
// action of the word (e2, e1), over all path states up to the given depth.
ActionCheckResult action_compose_check(const ShadowedGraph& g, const Weighting& w,
                                       std::size_t state_depth = 3);

// Tree of all walks (non-reduced paths) of length <= depth from a root
// vertex. Children are ordered by the shadowed out-edge order of the
// terminal vertex; every node's child count equals that out-degree.
class WalkTree {
public:
    struct Node {
        std::uint32_t parent; // self-index for the root
        SignedEdge via;       // meaningless for the root
        int label = 0;        // 0 for the root
        VertexId terminal;
        std::uint32_t depth;
        std::vector<std::uint32_t> children;
    };

    WalkTree(const ShadowedGraph& g, const Weighting& w, VertexId root, std::uint32_t depth);

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(std::uint32_t i) const { return nodes_.at(i); }
    std::uint32_t depth() const { return depth_; }
    VertexId root_vertex() const { return root_; }

    // the walk a node stands for, as a word in signed edges
    Word path_of(std::uint32_t i) const;

private:
    std::vector<Node> nodes_;
    std::uint32_t depth_;
    VertexId root_;
};

WalkTree build_walk_tree(const ShadowedGraph& g, const Weighting& w, VertexId root,
                         std::uint32_t depth);

// Canonical form of the subtree below a node, truncated to the given depth.
// Child subtrees are paired with their incoming signed labels and sorted, so
// equal signatures mean label-preserving rooted-tree isomorphism.
std::string subtree_signature(const WalkTree& tree, std::uint32_t node,
                              std::uint32_t truncate_depth);

struct FractaloidVerdict {
    bool fractaloid = false;
    bool degree_ok = false;
    bool wpart_ok = false;
    bool uniform_labels = false;
    std::string witness; // offending vertex or walk, empty when fractaloid
    std::uint32_t depth = 0;
    int N = 0;
};

// Decides the fractal property by two finite checks, both reported:
// (a) every vertex has shadowed degree 2N, and (b) at every root vertex all
// walk-subtree signatures at equal truncation match the root's, up to the
// given depth. Also audits whether every vertex's shadowed out-edges carry
// all 2N distinct signed labels.
FractaloidVerdict is_fractaloid(const ShadowedGraph& g, const Weighting& w,
                                std::uint32_t depth = 3);

} // namespace fractaloid

#endif
