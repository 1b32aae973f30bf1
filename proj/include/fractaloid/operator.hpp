#ifndef FRACTALOID_OPERATOR_HPP
#define FRACTALOID_OPERATOR_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fractaloid/groupoid.hpp"

namespace fractaloid {

// Ordered basis of the graph Hilbert space truncated to reduced words of
// length <= L: all vertices first, then paths ordered by length and
// lexicographically by signed edge names.
class Basis {
public:
    Basis(const ShadowedGraph& g, std::size_t max_len);

    std::size_t size() const { return elements_.size(); }
    std::size_t max_len() const { return max_len_; }
    std::size_t vertex_count() const { return num_vertices_; }

    const GroupoidElement& element(std::size_t i) const { return elements_.at(i); }
    std::optional<std::size_t> index_of(const GroupoidElement& e) const;

    // vertex v sits at index v
    std::size_t vertex_index(VertexId v) const { return v; }

private:
    std::vector<GroupoidElement> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t num_vertices_;
    std::size_t max_len_;
};

Basis basis_up_to(const ShadowedGraph& g, std::size_t max_len);

// Column-major sparse integer matrix over a basis. Entries are checked
// against 64-bit overflow; exact big-integer arithmetic is used where values
// can grow (moments).
class SparseOperator {
public:
    explicit SparseOperator(std::size_t dim) : cols_(dim) {}

    std::size_t dim() const { return cols_.size(); }

    void add_entry(std::size_t row, std::size_t col, long long value);
    long long entry(std::size_t row, std::size_t col) const;
    const std::vector<std::pair<std::size_t, long long>>& column(std::size_t col) const {
        return cols_.at(col);
    }

    SparseOperator& operator+=(const SparseOperator& other);

    // operator product: rhs acts first
    friend SparseOperator operator*(const SparseOperator& lhs, const SparseOperator& rhs);

    std::vector<mpz_class> apply(const std::vector<mpz_class>& vec) const;

    bool operator==(const SparseOperator& other) const;

private:
    std::vector<std::vector<std::pair<std::size_t, long long>>> cols_;
};

// Right multiplication operator R_w on the truncated basis: each basis word
// w' maps to reduce(w' w) when nonempty and within the length bound.
SparseOperator right_mult(const ShadowedGraph& g, const Basis& basis,
                          const GroupoidElement& w);

// k-th labeling operator: sum of R_e over signed edges with label k.
SparseOperator labeling_operator_k(const ShadowedGraph& g, const Weighting& w,
                                   const Basis& basis, int k);

// The labeling operator: sum of R_e over all edges of the shadowed graph.
SparseOperator labeling_operator(const ShadowedGraph& g, const Basis& basis);

// Checks <T_k u, w> = <u, T_{-k} w> on basis words of length <= max_len - 1;
// the interior restriction avoids truncation edge effects.
bool adjoint_check(const ShadowedGraph& g, const Weighting& w, const Basis& basis,
                   int k);

// Interior self-adjointness of the labeling operator itself.
bool labeling_self_adjoint_check(const ShadowedGraph& g, const Basis& basis);

// Vertex-diagonal part of an operator.
struct DiagonalElement {
    std::map<VertexId, mpz_class> coeff;

    bool uniform() const;
    mpz_class common_value() const; // valid when uniform() and nonempty
};

DiagonalElement conditional_expectation(const Basis& basis, const SparseOperator& op);

// Per-vertex diagonal of the n-th power of the labeling operator, computed
// on a basis sized exactly to length n so no truncation occurs.
DiagonalElement moment_operator(const ShadowedGraph& g, std::size_t n);

} // namespace fractaloid

#endif
