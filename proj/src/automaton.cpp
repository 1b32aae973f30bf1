#include "fractaloid/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fractaloid {

std::optional<PathWeight> phi(const ShadowedGraph& g, const Weighting& w,
                              const PathWeight& state, SignedEdge e) {
    if (g.source(e) != state.dst) return std::nullopt;
    return PathWeight{g.source(e), g.target(e), {w.label(e)}};
}

std::optional<SignedEdge> psi(const ShadowedGraph& g, const PathWeight& state,
                              SignedEdge e) {
    if (g.source(e) != state.dst) return std::nullopt;
    return e;
}

std::optional<PathWeight> phi_word(const ShadowedGraph& g, const Weighting& w,
                                   const PathWeight& state, const Word& word) {
    if (word.empty()) return std::nullopt;
    VertexId at = state.dst;
    for (const SignedEdge& e : word) {
        if (g.source(e) != at) return std::nullopt;
        at = g.target(e);
    }
    SignedEdge last = word.back();
    return PathWeight{g.source(last), g.target(last), {w.label(last)}};
}

namespace {

void collect_states(const ShadowedGraph& g, const Weighting& w, VertexId at,
                    const PathWeight& weight, std::size_t depth_left,
                    std::vector<PathWeight>& out) {
    out.push_back(weight);
    if (depth_left == 0) return;
    for (const SignedEdge& e : g.out(at)) {
        PathWeight next = weight;
        if (next.labels.empty()) next.src = g.source(e);
        next.dst = g.target(e);
        next.labels.push_back(w.label(e));
        collect_states(g, w, g.target(e), next, depth_left - 1, out);
    }
}

} // namespace

ActionCheckResult action_compose_check(const ShadowedGraph& g, const Weighting& w,
                                       std::size_t state_depth) {
    ActionCheckResult result;
    std::vector<PathWeight> states;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        collect_states(g, w, v, vertex_weight(v), state_depth, states);
    result.states_checked = states.size();

    auto edges = g.signed_edges();
    for (const PathWeight& x : states) {
        for (const SignedEdge& e1 : edges) {
            for (const SignedEdge& e2 : edges) {
                // A_{e1} A_{e2} applied to x: e2 acts first
                std::optional<PathWeight> lhs = phi(g, w, x, e2);
                if (lhs) lhs = phi(g, w, *lhs, e1);
                std::optional<PathWeight> rhs = phi_word(g, w, x, {e2, e1});
                if (lhs != rhs) {
                    result.passed = false;
                    result.witness = "state (" + g.base().vertex_name(x.src) + "," +
                                     g.base().vertex_name(x.dst) + ") edges " +
                                     g.edge_name(e1) + " " + g.edge_name(e2);
                    return result;
                }
            }
        }
    }
    return result;
}

WalkTree::WalkTree(const ShadowedGraph& g, const Weighting& w, VertexId root,
                   std::uint32_t depth)
    : depth_(depth), root_(root) {
    nodes_.push_back({0, {}, 0, root, 0, {}});
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].depth == depth) continue;
        VertexId at = nodes_[i].terminal;
        for (const SignedEdge& e : g.out(at)) {
            std::uint32_t child = static_cast<std::uint32_t>(nodes_.size());
            nodes_.push_back({i, e, w.label(e), g.target(e), nodes_[i].depth + 1, {}});
            nodes_[i].children.push_back(child);
        }
    }
}

Word WalkTree::path_of(std::uint32_t i) const {
    Word word;
    for (std::uint32_t at = i; at != 0; at = nodes_[at].parent)
        word.push_back(nodes_[at].via);
    std::reverse(word.begin(), word.end());
    return word;
}

WalkTree build_walk_tree(const ShadowedGraph& g, const Weighting& w, VertexId root,
                         std::uint32_t depth) {
    if (depth < 1) throw std::invalid_argument("build_walk_tree: depth must be >= 1");
    if (!is_connected(g.base()))
        throw std::invalid_argument("build_walk_tree: graph is not connected");
    return WalkTree(g, w, root, depth);
}

std::string subtree_signature(const WalkTree& tree, std::uint32_t node,
                              std::uint32_t truncate_depth) {
    if (truncate_depth == 0) return "()";
    std::vector<std::string> parts;
    for (std::uint32_t c : tree.node(node).children) {
        parts.push_back("[" + std::to_string(tree.node(c).label) +
                        subtree_signature(tree, c, truncate_depth - 1) + "]");
    }
    std::sort(parts.begin(), parts.end());
    std::string sig = "(";
    for (const std::string& p : parts) sig += p;
    sig += ")";
    return sig;
}

FractaloidVerdict is_fractaloid(const ShadowedGraph& g, const Weighting& w,
                                std::uint32_t depth) {
    if (g.base().edge_count() == 0)
        throw std::invalid_argument("is_fractaloid: empty edge set");
    if (!is_connected(g.base()))
        throw std::invalid_argument("is_fractaloid: graph is not connected");

    FractaloidVerdict verdict;
    verdict.depth = depth;
    verdict.N = w.N();
    const std::size_t two_n = 2 * static_cast<std::size_t>(w.N());

    verdict.degree_ok = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Degrees d = degrees(g.base(), v);
        if (d.total != two_n) {
            verdict.degree_ok = false;
            if (verdict.witness.empty())
                verdict.witness = "vertex " + g.base().vertex_name(v) + " has degree " +
                                  std::to_string(d.total) + ", expected " +
                                  std::to_string(two_n);
            break;
        }
    }

    verdict.uniform_labels = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (const SignedEdge& e : g.out(v)) seen.insert(w.label(e));
        if (seen.size() != two_n) {
            verdict.uniform_labels = false;
            break;
        }
    }

    verdict.wpart_ok = true;
    for (VertexId v = 0; v < g.vertex_count() && verdict.wpart_ok; ++v) {
        WalkTree tree = build_walk_tree(g, w, v, depth);
        std::vector<std::string> root_sig(depth + 1);
        for (std::uint32_t r = 0; r <= depth; ++r)
            root_sig[r] = subtree_signature(tree, 0, r);
        for (std::uint32_t i = 1; i < tree.nodes().size(); ++i) {
            std::uint32_t residual = depth - tree.node(i).depth;
            if (subtree_signature(tree, i, residual) != root_sig[residual]) {
                verdict.wpart_ok = false;
                if (verdict.witness.empty())
                    verdict.witness = "walk " + word_to_string(g, tree.path_of(i)) +
                                      " from " + g.base().vertex_name(v) +
                                      " has a differing part";
                break;
            }
        }
    }

    verdict.fractaloid = verdict.degree_ok && verdict.wpart_ok;
    return verdict;
}

} // namespace fractaloid
