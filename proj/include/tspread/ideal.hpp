#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "tspread/borel.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// The numbers behind the direct Freiman test:
/// mu = |G(I)|, ell = analytic spread, mu2 = |G(I^2)|,
/// bound = ell*mu - C(ell,2). The ideal is Freiman iff mu2 == bound.
struct FreimanVerdict {
    long long mu = 0;
    long long ell = 0;
    long long mu2 = 0;
    long long bound = 0;
    bool is_freiman = false;

    friend bool operator==(const FreimanVerdict&, const FreimanVerdict&) = default;
};

namespace detail {

/// Rank over the rationals, computed in exact integer arithmetic
/// (fraction-free Gaussian elimination, Bareiss). Intermediate products use
/// 128-bit arithmetic; entries stay at minor size, tiny at desk scale.
inline int integer_matrix_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m.front().size();
    long long prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                __int128 num = static_cast<__int128>(m[r][c]) * m[i][j] -
                               static_cast<__int128>(m[i][c]) * m[r][j];
                m[i][j] = static_cast<long long>(num / prev);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

inline unsigned long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned long long>(n - k + i);
        acc /= static_cast<unsigned long long>(i);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binomial overflow");
    }
    return static_cast<unsigned long long>(acc);
}

} // namespace detail

/// Minimal generators of I^k: the distinct k-fold products of generators.
/// In an equigenerated degree divisibility between equal-degree monomials
/// forces equality, so the distinct products are exactly G(I^k).
inline GeneratorSet power_gens(const GeneratorSet& G, int k) {
    if (k < 1) throw std::invalid_argument("power_gens: k must be >= 1");
    const auto& ms = G.members();
    std::set<Monomial> products;
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(k) * G.degree());
    auto rec = [&](auto&& self, int depth, size_t first) -> void {
        if (depth == k) {
            products.insert(Monomial::from_indices(seq));
            return;
        }
        for (size_t i = first; i < ms.size(); ++i) {
            auto part = ms[i].index_sequence();
            seq.insert(seq.end(), part.begin(), part.end());
            self(self, depth + 1, i);
            seq.resize(seq.size() - part.size());
        }
    };
    rec(rec, 0, 0);
    return GeneratorSet(std::vector<Monomial>(products.begin(), products.end()));
}

/// mu(I): number of minimal monomial generators.
inline long long mu(const GeneratorSet& G) { return G.size(); }

/// Analytic spread ell(I) of an equigenerated monomial ideal: the dimension
/// of the monomial subalgebra spanned by the generators, i.e. the exact rank
/// of the exponent matrix.
inline int analytic_spread(const GeneratorSet& G) {
    const int n = G.max_index();
    std::vector<std::vector<long long>> m;
    m.reserve(G.size());
    for (const auto& g : G.members()) {
        std::vector<long long> row(n, 0);
        for (const auto& [i, e] : g.factors()) row[i - 1] = e;
        m.push_back(std::move(row));
    }
    return detail::integer_matrix_rank(std::move(m));
}

/// The Freiman lower bound ell*mu - C(ell,2) on mu(I^2).
inline long long freiman_bound(long long mu_count, long long ell) {
    if (ell < 1 || mu_count < 1 || ell > mu_count)
        throw std::invalid_argument("freiman_bound: need 1 <= ell <= mu");
    return ell * mu_count - ell * (ell - 1) / 2;
}

/// Direct verdict: compute mu(I^2) by product enumeration and compare with
/// the bound. mu2 < bound is impossible and reported as an internal error.
inline FreimanVerdict is_freiman_direct(const GeneratorSet& G) {
    FreimanVerdict v;
    v.mu = mu(G);
    v.ell = analytic_spread(G);
    v.mu2 = power_gens(G, 2).size();
    v.bound = freiman_bound(v.mu, v.ell);
    if (v.mu2 < v.bound)
        throw std::logic_error("Freiman inequality violated: mu2 < bound");
    v.is_freiman = v.mu2 == v.bound;
    return v;
}

/// Hypothesised closed form for mu(I^k) of a Freiman ideal, from the Hilbert
/// function of a Cohen-Macaulay fiber cone with h-vector (1, mu-ell):
/// C(ell-1+k, ell-1) + (mu-ell)*C(ell-2+k, ell-1).
/// Validated against brute force by the sweep, never used as an oracle.
inline long long predicted_mu_power(long long mu_count, long long ell, int k) {
    if (ell < 1 || mu_count < 1 || ell > mu_count || k < 1)
        throw std::invalid_argument("predicted_mu_power: need 1 <= ell <= mu and k >= 1");
    unsigned long long a = detail::binomial(ell - 1 + k, ell - 1);
    unsigned long long b = detail::binomial(ell - 2 + k, ell - 1);
    return static_cast<long long>(a + static_cast<unsigned long long>(mu_count - ell) * b);
}

} // namespace tspread
