#ifndef FRACTALOID_FREEPROB_HPP
#define FRACTALOID_FREEPROB_HPP

#include <gmpxx.h>

#include <vector>

namespace fractaloid {

// Partition of {1..n}: disjoint blocks, each sorted, blocks ordered by their
// least element.
using Partition = std::vector<std::vector<int>>;

bool is_noncrossing(const Partition& p);

// pi <= theta in the refinement order: every block of pi lies in one of theta.
bool refines(const Partition& pi, const Partition& theta);

// All noncrossing partitions of {1..n}; |NC(n)| = Catalan(n). Guarded to n <= 12.
std::vector<Partition> nc_partitions(int n);

mpz_class catalan(unsigned long k);

// Kreweras complement, computed through the permutation model: blocks-as-
// cycles composed with the long cycle (1 2 ... n).
Partition kreweras_complement(const Partition& pi, int n);

// Moebius functional mu(pi, 1_n): product of signed Catalans over the blocks
// of the Kreweras complement.
mpz_class moebius_to_top(const Partition& pi, int n);

// Scalar partition-dependent moment: product over blocks of m_{|block|}.
mpq_class partition_moment(const std::vector<mpq_class>& moments, const Partition& pi);

// Free cumulants from moments via the Moebius sum over NC(j). Exact rationals.
std::vector<mpq_class> cumulants_from_moments(const std::vector<mpq_class>& moments);

// Free moments from cumulants: m_n = sum over NC(n) of products of k_{|block|}.
std::vector<mpq_class> moments_from_cumulants(const std::vector<mpq_class>& cumulants);

} // namespace fractaloid

#endif
