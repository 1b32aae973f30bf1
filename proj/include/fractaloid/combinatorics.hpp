#ifndef FRACTALOID_COMBINATORICS_HPP
#define FRACTALOID_COMBINATORICS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "fractaloid/groupoid.hpp"

namespace fractaloid {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration cap, in elementary steps. Defaults from FRACTALOID_BUDGET when set.
std::uint64_t default_budget();

// |F_{v,n}|: length-n walks from v in the shadowed graph that reduce to the
// vertex v. Exhaustive DFS with on-the-fly cancellation.
mpz_class enumerate_F(const ShadowedGraph& g, VertexId v, std::size_t n,
                      std::uint64_t budget = 0);

// Number of length-n sequences over {+-x_1..+-x_N} with zero vector sum,
// by dynamic programming over partial-sum vectors.
mpz_class count_zero_sum(int n_labels, std::size_t len);

// Same count by full enumeration; the independent oracle for count_zero_sum.
mpz_class brute_zero_sum(int n_labels, std::size_t len, std::uint64_t budget = 0);

// Lattice paths as sequences of signed step indices in {+-1..+-N}. A path
// satisfies the axis property exactly when every index is balanced against
// its negation.
using LatticePath = std::vector<int>;

bool axis_property(const LatticePath& path, int n_labels);

std::vector<LatticePath> lattice_paths(int n_labels, std::size_t len, bool axis_only,
                                       std::uint64_t budget = 0);

// Applies the explicit bijection between zero-sum label-vector tuples and
// axis lattice paths, elementwise; verifies injectivity and equal counts.
bool theta_bijection_check(int n_labels, std::size_t len, std::uint64_t budget = 0);

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class central_binomial(unsigned long n);

// Multinomial coefficient by the Pascal-triangle recursion: strip the
// maximal-index run of length k from the sorted multiset of size m, multiply
// by C(m, k), recurse. Must agree with m!/prod(mult_i!).
mpz_class pascal_coeff(int n_vars, std::vector<int> multiset);

// Closed-form multinomial m!/prod(mult_i!), the oracle for pascal_coeff.
mpz_class multinomial_coeff(const std::vector<int>& multiset);

// Sum of Pascal-recursion coefficients over per-index-balanced multisets
// over {+-1..+-N}; equals count_zero_sum for even lengths, 0 for odd.
mpz_class coeff_sum_zero(int n_labels, std::size_t len);

} // namespace fractaloid

#endif
