#include "fractaloid/groupoid.hpp"

#include <sstream>

namespace fractaloid {

GroupoidElement reduce(const ShadowedGraph& g, const Word& word) {
    if (word.empty()) return GroupoidElement::empty();
    // admissibility first: the word must be a path in the shadowed graph
    VertexId start = g.source(word.front());
    VertexId at = start;
    for (const SignedEdge& e : word) {
        if (g.source(e) != at) return GroupoidElement::empty();
        at = g.target(e);
    }
    // cancel adjacent inverse pairs with a stack scan
    Word stack;
    stack.reserve(word.size());
    for (const SignedEdge& e : word) {
        if (!stack.empty() && stack.back() == e.inverse())
            stack.pop_back();
        else
            stack.push_back(e);
    }
    if (stack.empty()) return GroupoidElement::vertex(start);
    return GroupoidElement::path(start, at, std::move(stack));
}

GroupoidElement compose(const ShadowedGraph& g, const GroupoidElement& a,
                        const GroupoidElement& b) {
    if (a.is_empty() || b.is_empty()) return GroupoidElement::empty();
    if (a.is_vertex()) {
        if (b.is_vertex())
            return a.src() == b.src() ? a : GroupoidElement::empty();
        return a.src() == b.src() ? b : GroupoidElement::empty();
    }
    if (b.is_vertex())
        return a.dst() == b.src() ? a : GroupoidElement::empty();
    if (a.dst() != b.src()) return GroupoidElement::empty();
    // both reduced paths: cancellation can only happen across the seam
    Word joined = a.edges();
    joined.insert(joined.end(), b.edges().begin(), b.edges().end());
    return reduce(g, joined);
}

GroupoidElement inverse(const GroupoidElement& a) {
    if (a.is_empty()) throw std::invalid_argument("inverse: empty element");
    if (a.is_vertex()) return a;
    Word rev;
    rev.reserve(a.length());
    for (auto it = a.edges().rbegin(); it != a.edges().rend(); ++it)
        rev.push_back(it->inverse());
    return GroupoidElement::path(a.dst(), a.src(), std::move(rev));
}

VertexId source(const GroupoidElement& a) {
    if (a.is_empty()) throw std::invalid_argument("source: empty element");
    return a.src();
}

VertexId range(const GroupoidElement& a) {
    if (a.is_empty()) throw std::invalid_argument("range: empty element");
    return a.dst();
}

std::string word_to_string(const ShadowedGraph& g, const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += g.edge_name(word[i]);
    }
    return out;
}

std::string element_to_string(const ShadowedGraph& g, const GroupoidElement& a) {
    switch (a.kind()) {
        case GroupoidElement::Kind::Empty: return "<empty>";
        case GroupoidElement::Kind::Vertex: return g.base().vertex_name(a.src());
        default: return word_to_string(g, a.edges());
    }
}

Word parse_word(const ShadowedGraph& g, const std::string& text) {
    Word word;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("parse_word: empty edge name");
        bool inv = tok.front() == '~';
        std::string name = inv ? tok.substr(1) : tok;
        word.push_back({g.base().edge_index(name), inv});
    }
    return word;
}

Diagram diagram(const ShadowedGraph& g, const GroupoidElement& a) {
    if (a.is_empty()) throw std::invalid_argument("diagram: empty element");
    Diagram d;
    d.vertices.insert(a.src());
    for (const SignedEdge& e : a.edges()) {
        d.vertices.insert(g.target(e));
        d.edges.insert(e.edge);
    }
    return d;
}

bool diagram_distinct(const ShadowedGraph& g, const GroupoidElement& a,
                      const GroupoidElement& b) {
    if (a.is_empty() || b.is_empty())
        throw std::invalid_argument("diagram_distinct: empty element");
    if (a == inverse(b)) return false;
    return !(diagram(g, a) == diagram(g, b));
}

std::pair<bool, bool> theta_vertex_test(const ShadowedGraph& g, const Weighting& w,
                                        const GroupoidElement& w1,
                                        const GroupoidElement& w2) {
    if (!w1.is_path() || !w2.is_path())
        throw std::invalid_argument("theta_vertex_test: expects reduced paths");
    if (w1.dst() != w2.src() || w2.dst() != w1.src())
        throw std::invalid_argument("theta_vertex_test: endpoint mismatch");
    std::vector<int> labels;
    for (const SignedEdge& e : w1.edges()) labels.push_back(w.label(e));
    for (const SignedEdge& e : w2.edges()) labels.push_back(w.label(e));
    LabelVector sum = theta(labels, w.N());
    bool theta_zero =
        std::all_of(sum.begin(), sum.end(), [](long long c) { return c == 0; });
    bool is_vertex = compose(g, w1, w2).is_vertex();
    return {theta_zero, is_vertex};
}

GroupoidElement random_reduced_word(const ShadowedGraph& g, std::mt19937_64& rng,
                                    std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> vert_dist(0, g.vertex_count() - 1);
    std::size_t len = len_dist(rng);
    VertexId at = static_cast<VertexId>(vert_dist(rng));
    if (len == 0) return GroupoidElement::vertex(at);
    Word word;
    VertexId start = at;
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<SignedEdge> options;
        for (const SignedEdge& e : g.out(at))
            if (word.empty() || e != word.back().inverse()) options.push_back(e);
        if (options.empty()) break; // dead end, keep what we have
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        const SignedEdge& e = options[pick(rng)];
        word.push_back(e);
        at = g.target(e);
    }
    if (word.empty()) return GroupoidElement::vertex(start);
    return GroupoidElement::path(start, at, std::move(word));
}

namespace {

std::string describe(const ShadowedGraph& g, const char* law,
                     std::initializer_list<const GroupoidElement*> elems) {
    std::string s = law;
    s += " with";
    for (const GroupoidElement* e : elems) {
        s += " [";
        s += element_to_string(g, *e);
        s += "]";
    }
    return s;
}

} // namespace

AxiomReport check_groupoid_axioms(const ShadowedGraph& g, std::size_t samples,
                                  std::uint64_t seed, const ComposeFn& compose_fn) {
    ComposeFn mul = compose_fn;
    if (!mul)
        mul = [](const ShadowedGraph& sg, const GroupoidElement& a,
                 const GroupoidElement& b) { return compose(sg, a, b); };

    AxiomReport report;
    report.samples = samples;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        GroupoidElement a = random_reduced_word(g, rng, 6);
        GroupoidElement b = random_reduced_word(g, rng, 6);
        GroupoidElement c = random_reduced_word(g, rng, 6);

        // (ii-2) associativity as a total operation, Empty included
        if (mul(g, a, mul(g, b, c)) != mul(g, mul(g, a, b), c)) {
            report.passed = false;
            report.counterexample = describe(g, "associativity", {&a, &b, &c});
            return report;
        }
        // (ii-3) unit laws
        GroupoidElement ls = GroupoidElement::vertex(a.src());
        GroupoidElement rs = GroupoidElement::vertex(a.dst());
        if (mul(g, ls, a) != a || mul(g, a, rs) != a) {
            report.passed = false;
            report.counterexample = describe(g, "unit law", {&a});
            return report;
        }
        // (ii-4) inverse laws
        GroupoidElement ai = inverse(a);
        if (mul(g, a, ai) != GroupoidElement::vertex(source(a)) ||
            mul(g, ai, a) != GroupoidElement::vertex(range(a))) {
            report.passed = false;
            report.counterexample = describe(g, "inverse law", {&a});
            return report;
        }
    }
    return report;
}

} // namespace fractaloid
