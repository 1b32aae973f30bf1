#include "fractaloid/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace fractaloid {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("FRACTALOID_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 200'000'000ULL;
}

namespace {

std::uint64_t resolve_budget(std::uint64_t budget) {
    return budget == 0 ? default_budget() : budget;
}

} // namespace

mpz_class enumerate_F(const ShadowedGraph& g, VertexId v, std::size_t n,
                      std::uint64_t budget) {
    if (v >= g.vertex_count()) throw std::invalid_argument("enumerate_F: unknown vertex");
    if (n < 1) throw std::invalid_argument("enumerate_F: n must be >= 1");
    budget = resolve_budget(budget);

    mpz_class count = 0;
    std::uint64_t steps = 0;
    Word stack;
    // DFS over walks; the stack holds the running normal form, so an empty
    // stack at depth n means the walk reduced to the start vertex
    auto dfs = [&](auto&& self, VertexId at, std::size_t depth) -> void {
        if (depth == n) {
            if (stack.empty()) ++count;
            return;
        }
        for (const SignedEdge& e : g.out(at)) {
            if (++steps > budget)
                throw BudgetExceeded("enumerate_F: enumeration budget exceeded");
            bool cancelled = !stack.empty() && stack.back() == e.inverse();
            if (cancelled)
                stack.pop_back();
            else
                stack.push_back(e);
            self(self, g.target(e), depth + 1);
            if (cancelled)
                stack.push_back(e.inverse());
            else
                stack.pop_back();
        }
    };
    dfs(dfs, v, 0);
    return count;
}

mpz_class count_zero_sum(int n_labels, std::size_t len) {
    if (n_labels < 1) throw std::invalid_argument("count_zero_sum: N must be >= 1");
    if (n_labels > 6)
        throw std::invalid_argument("count_zero_sum: N > 6 exceeds the DP state guard");
    if (len < 1) throw std::invalid_argument("count_zero_sum: length must be >= 1");

    std::map<std::vector<int>, mpz_class> states;
    states[std::vector<int>(n_labels, 0)] = 1;
    for (std::size_t step = 0; step < len; ++step) {
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [sum, ways] : states) {
            for (int j = 0; j < n_labels; ++j) {
                for (int sign : {1, -1}) {
                    std::vector<int> s = sum;
                    s[j] += sign;
                    next[std::move(s)] += ways;
                }
            }
        }
        states = std::move(next);
    }
    auto it = states.find(std::vector<int>(n_labels, 0));
    return it == states.end() ? mpz_class(0) : it->second;
}

namespace {

// iterate all sequences over {+-1..+-N} of the given length
template <class F>
void for_each_sequence(int n_labels, std::size_t len, std::uint64_t budget, F&& f) {
    std::vector<int> seq(len, 1);
    std::uint64_t steps = 0;
    auto advance = [&]() {
        for (std::size_t i = 0; i < len; ++i) {
            int& x = seq[i];
            if (x > 0) {
                x = -x; // +k -> -k
                return true;
            }
            if (-x < n_labels) {
                x = -x + 1; // -k -> +(k+1)
                return true;
            }
            x = 1; // wrap
        }
        return false;
    };
    do {
        if (++steps > budget) throw BudgetExceeded("sequence enumeration budget exceeded");
        f(const_cast<const std::vector<int>&>(seq));
    } while (advance());
}

} // namespace

mpz_class brute_zero_sum(int n_labels, std::size_t len, std::uint64_t budget) {
    if (n_labels < 1 || len < 1) throw std::invalid_argument("brute_zero_sum: bad arguments");
    budget = resolve_budget(budget);
    mpz_class count = 0;
    for_each_sequence(n_labels, len, budget, [&](const std::vector<int>& seq) {
        LabelVector sum = theta(seq, n_labels);
        if (std::all_of(sum.begin(), sum.end(), [](long long c) { return c == 0; }))
            ++count;
    });
    return count;
}

bool axis_property(const LatticePath& path, int n_labels) {
    LabelVector sum = theta(path, n_labels);
    return std::all_of(sum.begin(), sum.end(), [](long long c) { return c == 0; });
}

std::vector<LatticePath> lattice_paths(int n_labels, std::size_t len, bool axis_only,
                                       std::uint64_t budget) {
    if (n_labels < 1 || len < 1) throw std::invalid_argument("lattice_paths: bad arguments");
    budget = resolve_budget(budget);
    std::vector<LatticePath> paths;
    for_each_sequence(n_labels, len, budget, [&](const std::vector<int>& seq) {
        if (!axis_only || axis_property(seq, n_labels)) paths.push_back(seq);
    });
    return paths;
}

bool theta_bijection_check(int n_labels, std::size_t len, std::uint64_t budget) {
    budget = resolve_budget(budget);
    // zero-sum tuples, kept as tuples of +-unit label vectors
    std::vector<std::vector<LabelVector>> tuples;
    for_each_sequence(n_labels, len, budget, [&](const std::vector<int>& seq) {
        LabelVector sum = theta(seq, n_labels);
        if (!std::all_of(sum.begin(), sum.end(), [](long long c) { return c == 0; }))
            return;
        std::vector<LabelVector> tuple;
        for (int ix : seq) {
            LabelVector unit(n_labels, 0);
            unit[static_cast<std::size_t>(std::abs(ix)) - 1] = ix > 0 ? 1 : -1;
            tuple.push_back(std::move(unit));
        }
        tuples.push_back(std::move(tuple));
    });

    // the bijection: +-x_k -> step index +-k
    std::set<LatticePath> image;
    for (const auto& tuple : tuples) {
        LatticePath path;
        for (const LabelVector& unit : tuple) {
            for (int j = 0; j < n_labels; ++j) {
                if (unit[j] == 1) path.push_back(j + 1);
                if (unit[j] == -1) path.push_back(-(j + 1));
            }
        }
        if (path.size() != tuple.size()) return false; // not a unit tuple
        if (!axis_property(path, n_labels)) return false;
        if (!image.insert(path).second) return false; // not injective
    }
    std::vector<LatticePath> axis = lattice_paths(n_labels, len, true, budget);
    return image.size() == axis.size();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class central_binomial(unsigned long n) { return binomial(2 * n, n); }

mpz_class pascal_coeff(int n_vars, std::vector<int> multiset) {
    if (n_vars < 1) throw std::invalid_argument("pascal_coeff: need at least one variable");
    std::sort(multiset.begin(), multiset.end());
    std::set<int> distinct(multiset.begin(), multiset.end());
    if (distinct.size() > static_cast<std::size_t>(n_vars))
        throw std::invalid_argument("pascal_coeff: more distinct indices than variables");

    mpz_class coeff = 1;
    while (!multiset.empty()) {
        std::size_t m = multiset.size();
        int top = multiset.back();
        std::size_t k = 0;
        while (k < m && multiset[m - 1 - k] == top) ++k;
        coeff *= binomial(m, k);
        multiset.resize(m - k);
    }
    return coeff;
}

mpz_class multinomial_coeff(const std::vector<int>& multiset) {
    std::map<int, unsigned long> mult;
    for (int i : multiset) ++mult[i];
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(multiset.size()));
    for (const auto& [idx, m] : mult) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m);
        r /= f;
    }
    return r;
}

mpz_class coeff_sum_zero(int n_labels, std::size_t len) {
    if (n_labels < 1) throw std::invalid_argument("coeff_sum_zero: N must be >= 1");
    if (len % 2 == 1) return 0;
    std::size_t half = len / 2;

    // balanced multisets: m_j copies of +j and of -j, with sum of m_j = len/2
    mpz_class total = 0;
    std::vector<std::size_t> mult(n_labels, 0);
    auto recurse = [&](auto&& self, int j, std::size_t remaining) -> void {
        if (j == n_labels) {
            if (remaining != 0) return;
            std::vector<int> multiset;
            for (int i = n_labels; i >= 1; --i)
                multiset.insert(multiset.end(), mult[i - 1], -i);
            for (int i = 1; i <= n_labels; ++i)
                multiset.insert(multiset.end(), mult[i - 1], i);
            total += pascal_coeff(2 * n_labels, std::move(multiset));
            return;
        }
        for (std::size_t m = 0; m <= remaining; ++m) {
            mult[j] = m;
            self(self, j + 1, remaining - m);
        }
        mult[j] = 0;
    };
    recurse(recurse, 0, half);
    return total;
}

} // namespace fractaloid
