#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

namespace tspread {

/// Undirected simple graph on vertices 0..n-1, dense adjacency.
class SimpleGraph {
public:
    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
        if (n < 0) throw std::invalid_argument("SimpleGraph: negative size");
    }

    int size() const { return n_; }

    void add_edge(int a, int b) {
        check(a), check(b);
        if (a == b) throw std::invalid_argument("SimpleGraph: no self-loops");
        adj_[static_cast<size_t>(a) * n_ + b] = 1;
        adj_[static_cast<size_t>(b) * n_ + a] = 1;
    }

    bool adjacent(int a, int b) const {
        check(a), check(b);
        return adj_[static_cast<size_t>(a) * n_ + b] != 0;
    }

    std::vector<int> neighbors(int v) const {
        check(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
        return out;
    }

    long long edge_count() const {
        long long e = 0;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (adj_[static_cast<size_t>(a) * n_ + b]) ++e;
        return e;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("SimpleGraph: unknown vertex");
    }

    int n_ = 0;
    std::vector<char> adj_;
};

/// Outcome of the chordality decision: either a perfect elimination ordering
/// (graph is chordal) or an induced cycle of length >= 4 (it is not).
/// Vertex entries are positions into the graph's vertex range.
struct ChordalityCertificate {
    enum class Kind { PerfectEliminationOrdering, InducedCycle };

    Kind kind = Kind::PerfectEliminationOrdering;
    std::vector<int> ordering; // PEO case: all vertices
    std::vector<int> cycle;    // cycle case: >= 4 vertices in cyclic order

    bool chordal() const { return kind == Kind::PerfectEliminationOrdering; }
};

namespace detail {

/// Maximum cardinality search. Ties broken toward the smallest vertex index,
/// which keeps certificates deterministic. Returns the visit order; its
/// reverse is a perfect elimination ordering iff the graph is chordal.
inline std::vector<int> mcs_visit_order(const SimpleGraph& g) {
    const int n = g.size();
    std::vector<int> weight(n, 0), visit;
    std::vector<char> done(n, 0);
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best == -1 || weight[v] > weight[best])) best = v;
        done[best] = 1;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!done[u]) ++weight[u];
    }
    return visit;
}

/// Shortest a-b path avoiding N[v] \ {a,b}; empty if none exists. Together
/// with v, such a path closes an induced cycle of length >= 4.
inline std::vector<int> restricted_path(const SimpleGraph& g, int v, int a, int b) {
    const int n = g.size();
    std::vector<char> allowed(n, 1);
    allowed[v] = 0;
    for (int u : g.neighbors(v))
        if (u != a && u != b) allowed[u] = 0;
    std::vector<int> prev(n, -1);
    std::deque<int> queue{a};
    prev[a] = a;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == b) break;
        for (int y = 0; y < n; ++y)
            if (allowed[y] && prev[y] == -1 && g.adjacent(x, y)) {
                prev[y] = x;
                queue.push_back(y);
            }
    }
    if (prev[b] == -1) return {};
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

/// Locate an induced cycle of length >= 4 in a graph known to be non-chordal.
/// (hint_v, hint_a, hint_b) is the triple where PEO verification failed; it
/// is tried first, then all triples v with two non-adjacent neighbors a, b.
inline std::vector<int> find_induced_cycle(const SimpleGraph& g, int hint_v, int hint_a,
                                           int hint_b) {
    auto attempt = [&](int v, int a, int b) -> std::vector<int> {
        auto path = restricted_path(g, v, a, b);
        if (path.empty()) return {};
        std::vector<int> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
    };
    if (auto c = attempt(hint_v, hint_a, hint_b); !c.empty()) return c;
    for (int v = 0; v < g.size(); ++v) {
        auto nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.adjacent(nbrs[i], nbrs[j])) continue;
                if (auto c = attempt(v, nbrs[i], nbrs[j]); !c.empty()) return c;
            }
    }
    throw std::logic_error("find_induced_cycle: no cycle in a non-chordal graph");
}

} // namespace detail

/// Decide chordality with a certificate of either kind. The candidate
/// perfect elimination ordering comes from maximum cardinality search; it is
/// then checked, and on failure an induced cycle is extracted. Graphs on at
/// most 3 vertices are always chordal.
inline ChordalityCertificate is_chordal(const SimpleGraph& g) {
    const int n = g.size();
    std::vector<int> order = detail::mcs_visit_order(g);
    std::reverse(order.begin(), order.end());
    std::vector<int> pos(n, 0);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    // Classic parent check: the later neighbors of v minus the first of them
    // must lie in that first neighbor's adjacency.
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        int parent = -1;
        for (int u : g.neighbors(v))
            if (pos[u] > i && (parent == -1 || pos[u] < pos[parent])) parent = u;
        if (parent == -1) continue;
        for (int u : g.neighbors(v)) {
            if (pos[u] <= i || u == parent || g.adjacent(parent, u)) continue;
            ChordalityCertificate cert;
            cert.kind = ChordalityCertificate::Kind::InducedCycle;
            cert.cycle = detail::find_induced_cycle(g, v, parent, u);
            return cert;
        }
    }
    ChordalityCertificate cert;
    cert.kind = ChordalityCertificate::Kind::PerfectEliminationOrdering;
    cert.ordering = std::move(order);
    return cert;
}

/// Independent certificate checker; the correctness anchor for the harness.
/// PEO: the ordering must be a permutation of all vertices and every pair of
/// later neighbors of each vertex must be adjacent. Cycle: length >= 4,
/// distinct vertices, consecutive pairs (cyclically) adjacent and no chords.
/// Entries outside the vertex range are rejected as unknown vertices.
inline bool verify_certificate(const SimpleGraph& g, const ChordalityCertificate& cert) {
    const int n = g.size();
    auto check_range = [&](const std::vector<int>& vs) {
        for (int v : vs)
            if (v < 0 || v >= n)
                throw std::invalid_argument("verify_certificate: unknown vertex");
    };
    if (cert.kind == ChordalityCertificate::Kind::PerfectEliminationOrdering) {
        check_range(cert.ordering);
        if (static_cast<int>(cert.ordering.size()) != n) return false;
        std::vector<char> seen(n, 0);
        for (int v : cert.ordering) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        std::vector<int> pos(n, 0);
        for (int i = 0; i < n; ++i) pos[cert.ordering[i]] = i;
        for (int i = 0; i < n; ++i) {
            const int v = cert.ordering[i];
            auto nbrs = g.neighbors(v);
            for (size_t a = 0; a < nbrs.size(); ++a)
                for (size_t b = a + 1; b < nbrs.size(); ++b)
                    if (pos[nbrs[a]] > i && pos[nbrs[b]] > i &&
                        !g.adjacent(nbrs[a], nbrs[b]))
                        return false;
        }
        return true;
    }
    check_range(cert.cycle);
    const int len = static_cast<int>(cert.cycle.size());
    if (len < 4) return false;
    std::vector<char> seen(n, 0);
    for (int v : cert.cycle) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(cert.cycle[i], cert.cycle[j]) != consecutive) return false;
        }
    return true;
}

} // namespace tspread
