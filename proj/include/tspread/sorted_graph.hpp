#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tspread/borel.hpp"
#include "tspread/graph.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// The sorted graph of a generator set: vertices are the generators in
/// descending lex order, edges are the sorted pairs of distinct generators.
class SortedGraph {
public:
    explicit SortedGraph(const GeneratorSet& G)
        : vertices_(G.members()), graph_(static_cast<int>(vertices_.size())) {
        const int n = graph_.size();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (is_sorted_pair(vertices_[a], vertices_[b])) graph_.add_edge(a, b);
    }

    int size() const { return graph_.size(); }
    const std::vector<Monomial>& vertices() const { return vertices_; }
    const Monomial& vertex(int i) const { return vertices_.at(i); }
    bool adjacent(int a, int b) const { return graph_.adjacent(a, b); }
    long long edge_count() const { return graph_.edge_count(); }
    const SimpleGraph& graph() const { return graph_; }

    bool is_complete() const {
        const long long n = size();
        return edge_count() == n * (n - 1) / 2;
    }

private:
    std::vector<Monomial> vertices_;
    SimpleGraph graph_;
};

inline SortedGraph build_sorted_graph(const GeneratorSet& G) { return SortedGraph(G); }

inline ChordalityCertificate is_chordal(const SortedGraph& g) { return is_chordal(g.graph()); }

inline bool verify_certificate(const SortedGraph& g, const ChordalityCertificate& cert) {
    return verify_certificate(g.graph(), cert);
}

/// Freiman verdict through the sorted-graph route: a sortable equigenerated
/// ideal is Freiman iff its sorted graph is chordal. Sortability is a
/// precondition of that equivalence and is enforced here.
inline std::pair<bool, ChordalityCertificate> is_freiman_via_chordality(const GeneratorSet& G) {
    if (!is_sortable(G))
        throw std::domain_error("is_freiman_via_chordality: generator set is not sortable");
    auto cert = is_chordal(build_sorted_graph(G));
    return {cert.chordal(), cert};
}

} // namespace tspread
