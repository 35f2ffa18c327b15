// Brute-force reference computations for the unit tests. Nothing here calls
// into the library; matrices are dense and built from scratch.
#ifndef KOSZUL_TEST_ORACLE_HPP
#define KOSZUL_TEST_ORACLE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
using Dense = std::vector<std::vector<mpq_class>>;

inline std::size_t rank(Dense m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

inline void monomials(int n, int d, Exps& cur, std::vector<Exps>& out)
{
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        monomials(n, d - e, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Exps> monomials(int n, int d)
{
    std::vector<Exps> out;
    if (d < 0)
        return out;
    Exps cur;
    monomials(n, d, cur, out);
    return out;
}

inline void subsets(int r, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < r; ++i) {
        cur.push_back(i);
        subsets(r, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline int deg(const Exps& e)
{
    int s = 0;
    for (int x : e)
        s += x;
    return s;
}

/// Koszul complex of the monomials gens on S = K[x_1..x_n], total degree j.
struct Koszul {
    int n;
    std::vector<Exps> gens;

    using Basis = std::vector<std::pair<std::vector<int>, Exps>>;

    Basis basis(int t, int j) const
    {
        Basis b;
        if (t < 0 || t > static_cast<int>(gens.size()))
            return b;
        std::vector<std::vector<int>> sets;
        std::vector<int> cur;
        subsets(static_cast<int>(gens.size()), t, 0, cur, sets);
        for (const auto& s : sets) {
            int d = 0;
            for (int i : s)
                d += deg(gens[static_cast<std::size_t>(i)]);
            for (const auto& w : monomials(n, j - d))
                b.emplace_back(s, w);
        }
        return b;
    }

    /// Rank of phi_t : K_t -> K_{t-1} in total degree j.
    std::size_t rank_phi(int t, int j) const
    {
        if (t <= 0)
            return 0;
        const Basis src = basis(t, j);
        const Basis dst = basis(t - 1, j);
        if (src.empty() || dst.empty())
            return 0;
        std::map<std::pair<std::vector<int>, Exps>, std::size_t> where;
        for (std::size_t k = 0; k < dst.size(); ++k)
            where[dst[k]] = k;
        Dense m(dst.size(), std::vector<mpq_class>(src.size(), 0));
        for (std::size_t c = 0; c < src.size(); ++c) {
            const auto& [s, w] = src[c];
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                std::vector<int> rest = s;
                rest.erase(rest.begin() + static_cast<long>(pos));
                Exps w2 = w;
                for (int v = 0; v < n; ++v)
                    w2[static_cast<std::size_t>(v)] += gens[static_cast<std::size_t>(s[pos])][static_cast<std::size_t>(v)];
                m[where.at({rest, w2})][c] += pos % 2 == 0 ? 1 : -1;
            }
        }
        return rank(m);
    }

    std::size_t chains(int t, int j) const { return basis(t, j).size(); }
    std::size_t cycles(int t, int j) const { return chains(t, j) - rank_phi(t, j); }
    std::size_t homology(int t, int j) const { return cycles(t, j) - rank_phi(t + 1, j); }
};

inline long long binom(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace oracle

#endif
