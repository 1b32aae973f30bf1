#include "fractaloid/operator.hpp"

#include <algorithm>

namespace fractaloid {

namespace {

std::string element_key(const GroupoidElement& e) {
    std::string key;
    if (e.is_vertex()) {
        key = "v:" + std::to_string(e.src());
    } else {
        key = "p:";
        for (const SignedEdge& se : e.edges()) {
            key += se.inverted ? '~' : '+';
            key += std::to_string(se.edge);
            key += ',';
        }
    }
    return key;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("sparse operator entry overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("sparse operator entry overflow");
    return r;
}

} // namespace

Basis::Basis(const ShadowedGraph& g, std::size_t max_len) : max_len_(max_len) {
    num_vertices_ = g.vertex_count();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        elements_.push_back(GroupoidElement::vertex(v));

    // non-backtracking extension generates each reduced word exactly once
    std::vector<GroupoidElement> frontier;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (const SignedEdge& e : g.out(v))
            frontier.push_back(GroupoidElement::path(v, g.target(e), {e}));

    auto name_less = [&g](const GroupoidElement& a, const GroupoidElement& b) {
        const Word& wa = a.edges();
        const Word& wb = b.edges();
        for (std::size_t i = 0; i < std::min(wa.size(), wb.size()); ++i) {
            std::string na = g.edge_name(wa[i]);
            std::string nb = g.edge_name(wb[i]);
            if (na != nb) return na < nb;
        }
        return wa.size() < wb.size();
    };

    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::sort(frontier.begin(), frontier.end(), name_less);
        elements_.insert(elements_.end(), frontier.begin(), frontier.end());
        std::vector<GroupoidElement> next;
        if (len < max_len) {
            for (const GroupoidElement& p : frontier) {
                for (const SignedEdge& e : g.out(p.dst())) {
                    if (e == p.edges().back().inverse()) continue;
                    Word ext = p.edges();
                    ext.push_back(e);
                    next.push_back(GroupoidElement::path(p.src(), g.target(e), std::move(ext)));
                }
            }
        }
        frontier = std::move(next);
    }

    for (std::size_t i = 0; i < elements_.size(); ++i)
        index_.emplace(element_key(elements_[i]), i);
}

std::optional<std::size_t> Basis::index_of(const GroupoidElement& e) const {
    auto it = index_.find(element_key(e));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Basis basis_up_to(const ShadowedGraph& g, std::size_t max_len) {
    return Basis(g, max_len);
}

void SparseOperator::add_entry(std::size_t row, std::size_t col, long long value) {
    if (value == 0) return;
    auto& column = cols_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const auto& p, std::size_t r) { return p.first < r; });
    if (it != column.end() && it->first == row) {
        it->second = checked_add(it->second, value);
        if (it->second == 0) column.erase(it);
    } else {
        column.insert(it, {row, value});
    }
}

long long SparseOperator::entry(std::size_t row, std::size_t col) const {
    const auto& column = cols_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const auto& p, std::size_t r) { return p.first < r; });
    if (it != column.end() && it->first == row) return it->second;
    return 0;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
    if (dim() != other.dim()) throw std::invalid_argument("operator dim mismatch");
    for (std::size_t c = 0; c < other.cols_.size(); ++c)
        for (const auto& [row, val] : other.cols_[c]) add_entry(row, c, val);
    return *this;
}

SparseOperator operator*(const SparseOperator& lhs, const SparseOperator& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("operator dim mismatch");
    SparseOperator out(lhs.dim());
    for (std::size_t c = 0; c < rhs.dim(); ++c)
        for (const auto& [mid, v1] : rhs.cols_[c])
            for (const auto& [row, v2] : lhs.cols_[mid])
                out.add_entry(row, c, checked_mul(v1, v2));
    return out;
}

std::vector<mpz_class> SparseOperator::apply(const std::vector<mpz_class>& vec) const {
    if (vec.size() != dim()) throw std::invalid_argument("vector dim mismatch");
    std::vector<mpz_class> out(dim(), 0);
    for (std::size_t c = 0; c < dim(); ++c) {
        if (vec[c] == 0) continue;
        for (const auto& [row, val] : cols_[c]) out[row] += static_cast<long>(val) * vec[c];
    }
    return out;
}

bool SparseOperator::operator==(const SparseOperator& other) const {
    return cols_ == other.cols_;
}

SparseOperator right_mult(const ShadowedGraph& g, const Basis& basis,
                          const GroupoidElement& w) {
    if (w.is_empty()) throw std::invalid_argument("right_mult: empty symbol");
    SparseOperator op(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        GroupoidElement image = compose(g, basis.element(i), w);
        if (image.is_empty()) continue;
        if (image.is_path() && image.length() > basis.max_len()) continue;
        op.add_entry(*basis.index_of(image), i, 1);
    }
    return op;
}

SparseOperator labeling_operator_k(const ShadowedGraph& g, const Weighting& w,
                                   const Basis& basis, int k) {
    if (k == 0 || std::abs(k) > w.N())
        throw std::invalid_argument("labeling_operator_k: label out of range");
    SparseOperator op(basis.size());
    for (const SignedEdge& e : g.signed_edges()) {
        if (w.label(e) != k) continue;
        GroupoidElement edge =
            GroupoidElement::path(g.source(e), g.target(e), {e});
        op += right_mult(g, basis, edge);
    }
    return op;
}

SparseOperator labeling_operator(const ShadowedGraph& g, const Basis& basis) {
    SparseOperator op(basis.size());
    for (const SignedEdge& e : g.signed_edges()) {
        GroupoidElement edge =
            GroupoidElement::path(g.source(e), g.target(e), {e});
        op += right_mult(g, basis, edge);
    }
    return op;
}

namespace {

bool interior_adjoint_pair(const Basis& basis, const SparseOperator& a,
                           const SparseOperator& b) {
    if (basis.max_len() < 2) throw std::invalid_argument("adjoint check needs max_len >= 2");
    std::size_t interior = basis.max_len() - 1;
    auto in_interior = [&](std::size_t i) {
        const GroupoidElement& e = basis.element(i);
        return e.is_vertex() || e.length() <= interior;
    };
    for (std::size_t c = 0; c < basis.size(); ++c) {
        if (!in_interior(c)) continue;
        for (const auto& [row, val] : a.column(c)) {
            if (!in_interior(row)) continue;
            if (b.entry(c, row) != val) return false;
        }
        // symmetric direction: entries of b whose transpose a must carry
        for (const auto& [row, val] : b.column(c)) {
            if (!in_interior(row)) continue;
            if (a.entry(c, row) != val) return false;
        }
    }
    return true;
}

} // namespace

bool adjoint_check(const ShadowedGraph& g, const Weighting& w, const Basis& basis,
                   int k) {
    SparseOperator tk = labeling_operator_k(g, w, basis, k);
    SparseOperator tmk = labeling_operator_k(g, w, basis, -k);
    return interior_adjoint_pair(basis, tk, tmk);
}

bool labeling_self_adjoint_check(const ShadowedGraph& g, const Basis& basis) {
    SparseOperator tg = labeling_operator(g, basis);
    return interior_adjoint_pair(basis, tg, tg);
}

bool DiagonalElement::uniform() const {
    if (coeff.empty()) return true;
    const mpz_class& first = coeff.begin()->second;
    for (const auto& [v, c] : coeff)
        if (c != first) return false;
    return true;
}

mpz_class DiagonalElement::common_value() const {
    if (coeff.empty()) throw std::logic_error("empty diagonal");
    return coeff.begin()->second;
}

DiagonalElement conditional_expectation(const Basis& basis, const SparseOperator& op) {
    DiagonalElement d;
    for (VertexId v = 0; v < basis.vertex_count(); ++v) {
        std::size_t i = basis.vertex_index(v);
        d.coeff[v] = op.entry(i, i);
    }
    return d;
}

DiagonalElement moment_operator(const ShadowedGraph& g, std::size_t n) {
    if (n < 1) throw std::invalid_argument("moment_operator: n must be >= 1");
    if (!is_connected(g.base()))
        throw std::invalid_argument("moment_operator: graph is not connected");
    // n applications of T_G starting from a vertex stay within length n
    Basis basis(g, n);
    SparseOperator tg = labeling_operator(g, basis);
    DiagonalElement d;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<mpz_class> vec(basis.size(), 0);
        std::size_t vi = basis.vertex_index(v);
        vec[vi] = 1;
        for (std::size_t i = 0; i < n; ++i) vec = tg.apply(vec);
        d.coeff[v] = vec[vi];
    }
    return d;
}

} // namespace fractaloid
