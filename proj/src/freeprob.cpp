#include "fractaloid/freeprob.hpp"

#include <algorithm>
#include <stdexcept>

namespace fractaloid {

namespace {

constexpr int kMaxN = 12;

void check_guard(int n, const char* who) {
    if (n < 1 || n > kMaxN)
        throw std::invalid_argument(std::string(who) + ": n outside the 1..12 guard");
}

void canonicalize(Partition& p) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Partition shifted(const Partition& p, int offset) {
    Partition out = p;
    for (auto& b : out)
        for (int& x : b) x += offset;
    return out;
}

// memo[len] = all noncrossing partitions of {1..len}
void build_nc(std::vector<std::vector<Partition>>& memo, int len) {
    if (static_cast<int>(memo.size()) > len) return;
    build_nc(memo, len - 1);
    std::vector<Partition> out;
    // the block containing 1, then independent partitions of the gaps
    int m = len - 1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> block{1};
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) block.push_back(2 + i);
        std::vector<std::pair<int, int>> gaps;
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            gaps.emplace_back(block[i] + 1, block[i + 1] - 1);
        gaps.emplace_back(block.back() + 1, len);

        std::vector<Partition> acc{Partition{block}};
        for (auto [lo, hi] : gaps) {
            if (lo > hi) continue;
            const std::vector<Partition>& gap = memo[hi - lo + 1];
            std::vector<Partition> next;
            next.reserve(acc.size() * gap.size());
            for (const Partition& base : acc) {
                for (const Partition& extra : gap) {
                    Partition p = base;
                    Partition sh = shifted(extra, lo - 1);
                    p.insert(p.end(), sh.begin(), sh.end());
                    next.push_back(std::move(p));
                }
            }
            acc = std::move(next);
        }
        for (Partition& p : acc) {
            canonicalize(p);
            out.push_back(std::move(p));
        }
    }
    memo.push_back(std::move(out));
}

std::vector<std::vector<Partition>> nc_up_to(int n) {
    std::vector<std::vector<Partition>> memo;
    memo.push_back({Partition{}}); // length 0: the empty partition
    build_nc(memo, n);
    return memo;
}

} // namespace

bool is_noncrossing(const Partition& p) {
    // crossing: a < b < c < d with a,c in one block and b,d in another
    int n = 0;
    for (const auto& b : p)
        for (int x : b) n = std::max(n, x);
    std::vector<int> block_of(n + 1, -1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int x : p[i]) block_of[x] = static_cast<int>(i);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    if (block_of[a] >= 0 && block_of[a] == block_of[c] &&
                        block_of[b] == block_of[d] && block_of[a] != block_of[b])
                        return false;
    return true;
}

bool refines(const Partition& pi, const Partition& theta) {
    for (const auto& v : pi) {
        bool contained = false;
        for (const auto& b : theta) {
            if (std::includes(b.begin(), b.end(), v.begin(), v.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) return false;
    }
    return true;
}

std::vector<Partition> nc_partitions(int n) {
    check_guard(n, "nc_partitions");
    return nc_up_to(n)[n];
}

mpz_class catalan(unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * k, k);
    return r / static_cast<unsigned long>(k + 1);
}

Partition kreweras_complement(const Partition& pi, int n) {
    // permutation with each block {b1 < ... < bk} as the cycle (b1 ... bk)
    std::vector<int> perm(n + 1);
    for (int i = 1; i <= n; ++i) perm[i] = i;
    for (const auto& b : pi)
        for (std::size_t i = 0; i < b.size(); ++i)
            perm[b[i]] = b[(i + 1) % b.size()];
    std::vector<int> inv(n + 1);
    for (int i = 1; i <= n; ++i) inv[perm[i]] = i;
    // cycles of pi^{-1} composed with the long cycle give the complement
    std::vector<int> comp(n + 1);
    for (int i = 1; i <= n; ++i) comp[i] = inv[i % n + 1];
    Partition out;
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cycle;
        for (int j = i; !seen[j]; j = comp[j]) {
            seen[j] = true;
            cycle.push_back(j);
        }
        out.push_back(std::move(cycle));
    }
    canonicalize(out);
    return out;
}

mpz_class moebius_to_top(const Partition& pi, int n) {
    check_guard(n, "moebius_to_top");
    std::size_t covered = 0;
    for (const auto& b : pi) covered += b.size();
    if (covered != static_cast<std::size_t>(n) || !is_noncrossing(pi))
        throw std::invalid_argument("moebius_to_top: invalid partition");
    mpz_class mu = 1;
    for (const auto& b : kreweras_complement(pi, n)) {
        mpz_class c = catalan(static_cast<unsigned long>(b.size() - 1));
        if (b.size() % 2 == 0) c = -c;
        mu *= c;
    }
    return mu;
}

mpq_class partition_moment(const std::vector<mpq_class>& moments, const Partition& pi) {
    mpq_class prod = 1;
    for (const auto& b : pi) {
        if (b.size() > moments.size())
            throw std::invalid_argument("partition_moment: missing moment order");
        prod *= moments[b.size() - 1];
    }
    return prod;
}

std::vector<mpq_class> cumulants_from_moments(const std::vector<mpq_class>& moments) {
    check_guard(static_cast<int>(moments.size()), "cumulants_from_moments");
    auto nc = nc_up_to(static_cast<int>(moments.size()));
    std::vector<mpq_class> cumulants(moments.size());
    for (int j = 1; j <= static_cast<int>(moments.size()); ++j) {
        mpq_class sum = 0;
        for (const Partition& pi : nc[j]) {
            mpq_class term = partition_moment(moments, pi);
            term *= mpq_class(moebius_to_top(pi, j));
            sum += term;
        }
        sum.canonicalize();
        cumulants[j - 1] = sum;
    }
    return cumulants;
}

std::vector<mpq_class> moments_from_cumulants(const std::vector<mpq_class>& cumulants) {
    check_guard(static_cast<int>(cumulants.size()), "moments_from_cumulants");
    auto nc = nc_up_to(static_cast<int>(cumulants.size()));
    std::vector<mpq_class> moments(cumulants.size());
    for (int j = 1; j <= static_cast<int>(cumulants.size()); ++j) {
        mpq_class sum = 0;
        for (const Partition& pi : nc[j]) {
            mpq_class term = 1;
            for (const auto& b : pi) term *= cumulants[b.size() - 1];
            sum += term;
        }
        sum.canonicalize();
        moments[j - 1] = sum;
    }
    return moments;
}

} // namespace fractaloid
