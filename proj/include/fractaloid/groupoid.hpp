#ifndef FRACTALOID_GROUPOID_HPP
#define FRACTALOID_GROUPOID_HPP

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fractaloid/weighting.hpp"

namespace fractaloid {

using Word = std::vector<SignedEdge>;

// Normal form of a word in signed edges: the empty element, a vertex, or a
// reduced path (consecutive edges admissible, no adjacent inverse pair).
class GroupoidElement {
public:
    enum class Kind { Empty, Vertex, Path };

    static GroupoidElement empty() { return GroupoidElement(); }
    static GroupoidElement vertex(VertexId v) {
        GroupoidElement g;
        g.kind_ = Kind::Vertex;
        g.src_ = g.dst_ = v;
        return g;
    }
    static GroupoidElement path(VertexId src, VertexId dst, Word edges) {
        GroupoidElement g;
        g.kind_ = Kind::Path;
        g.src_ = src;
        g.dst_ = dst;
        g.edges_ = std::move(edges);
        return g;
    }

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_vertex() const { return kind_ == Kind::Vertex; }
    bool is_path() const { return kind_ == Kind::Path; }

    VertexId src() const { return src_; }
    VertexId dst() const { return dst_; }
    const Word& edges() const { return edges_; }
    std::size_t length() const { return edges_.size(); }

    friend bool operator==(const GroupoidElement&, const GroupoidElement&) = default;

private:
    Kind kind_ = Kind::Empty;
    VertexId src_ = 0;
    VertexId dst_ = 0;
    Word edges_;
};

// Normal form under admissibility plus cancellation of adjacent inverse
// pairs. Non-admissible words collapse to Empty.
GroupoidElement reduce(const ShadowedGraph& g, const Word& word);

// Groupoid product: concatenate where endpoints match, then reduce.
// Vertices act as one-sided units; Empty is absorbing.
GroupoidElement compose(const ShadowedGraph& g, const GroupoidElement& a,
                        const GroupoidElement& b);

GroupoidElement inverse(const GroupoidElement& a);

VertexId source(const GroupoidElement& a);
VertexId range(const GroupoidElement& a);

// Serialization: comma-separated signed edge names, "~" marking inverses.
std::string word_to_string(const ShadowedGraph& g, const Word& word);
std::string element_to_string(const ShadowedGraph& g, const GroupoidElement& a);
Word parse_word(const ShadowedGraph& g, const std::string& text);

// The graphical image of an element: visited vertices plus traversed
// underlying edges, orientations and powers collapsed.
struct Diagram {
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram diagram(const ShadowedGraph& g, const GroupoidElement& a);

// true iff a != b^{-1} and diagram(a) != diagram(b)
bool diagram_distinct(const ShadowedGraph& g, const GroupoidElement& a,
                      const GroupoidElement& b);

// For reduced paths w1 = v w1 v', w2 = v' w2 v: reports whether the theta-sum
// of the concatenated labels is zero, and whether the product is a vertex.
// The first does not imply the second in general.
std::pair<bool, bool> theta_vertex_test(const ShadowedGraph& g, const Weighting& w,
                                        const GroupoidElement& w1,
                                        const GroupoidElement& w2);

using ComposeFn = std::function<GroupoidElement(
    const ShadowedGraph&, const GroupoidElement&, const GroupoidElement&)>;

struct AxiomReport {
    bool passed = true;
    std::size_t samples = 0;
    std::string counterexample; // empty when passed
};

// Samples random reduced words and checks associativity, unit laws, and the
// inverse laws x x^{-1} = s(x), x^{-1} x = r(x). The compose hook exists for
// fault-injection tests.
AxiomReport check_groupoid_axioms(const ShadowedGraph& g, std::size_t samples,
                                  std::uint64_t seed,
                                  const ComposeFn& compose_fn = nullptr);

// Uniform random reduced word of length <= max_len (length 0 gives a vertex).
GroupoidElement random_reduced_word(const ShadowedGraph& g, std::mt19937_64& rng,
                                    std::size_t max_len);

} // namespace fractaloid

#endif
