#pragma once

#include <string>

#include "tspread/sorted_graph.hpp"

namespace tspread {

/// DOT text for a sorted graph. Vertices appear in descending lex order and
/// edges in ascending position order, so the output is byte-deterministic.
/// Labels never contain quotes or backslashes, so plain quoting suffices.
inline std::string render_dot(const SortedGraph& g) {
    std::string out = "graph sorted {\n";
    for (int v = 0; v < g.size(); ++v)
        out += "  \"" + g.vertex(v).str() + "\";\n";
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            if (g.adjacent(a, b))
                out += "  \"" + g.vertex(a).str() + "\" -- \"" + g.vertex(b).str() + "\";\n";
    out += "}\n";
    return out;
}

} // namespace tspread
