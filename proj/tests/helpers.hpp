#pragma once

// Test-only helpers: random generators and a brute-force chordality oracle
// kept independent of the library's MCS path.

#include <bit>
#include <random>
#include <vector>

#include "tspread/graph.hpp"
#include "tspread/monomial.hpp"

namespace testsupport {

inline tspread::Monomial random_monomial(std::mt19937& rng, int degree, int max_var) {
    std::uniform_int_distribution<int> var(1, max_var);
    std::vector<int> idx(degree);
    for (int& i : idx) i = var(rng);
    return tspread::Monomial::from_indices(idx);
}

inline tspread::SimpleGraph random_graph(std::mt19937& rng, int n, double edge_prob) {
    tspread::SimpleGraph g(n);
    std::bernoulli_distribution coin(edge_prob);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

/// Chordal iff no vertex subset of size >= 4 induces a cycle. Checked by
/// enumerating all subsets (n <= 20 or so), completely independently of the
/// elimination-ordering route.
inline bool brute_force_chordal(const tspread::SimpleGraph& g) {
    const int n = g.size();
    std::vector<unsigned> adj(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && g.adjacent(a, b)) adj[a] |= 1u << b;
    for (unsigned s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) < 4) continue;
        bool degree_two = true;
        for (int v = 0; v < n && degree_two; ++v)
            if ((s >> v & 1) && std::popcount(adj[v] & s) != 2) degree_two = false;
        if (!degree_two) continue;
        // 2-regular induced subgraph: it is a single cycle iff connected.
        unsigned seen = 1u << std::countr_zero(s);
        unsigned frontier = seen;
        while (frontier) {
            unsigned next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= adj[v] & s;
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        if (seen == s) return false;
    }
    return true;
}

} // namespace testsupport
