#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "circulant/core.hpp"
#include "circulant/errors.hpp"

namespace circulant {

/// Fill colors for colors 1, 2, ...; color c uses entry (c-1) mod 12.
inline constexpr std::array<std::string_view, 12> dot_palette{
    "gold",   "royalblue", "firebrick", "forestgreen", "darkorange", "mediumpurple",
    "cyan3",  "hotpink",   "sienna",    "gray60",      "olivedrab",  "lightpink"};

inline constexpr std::size_t default_dot_vertex_limit = 4096;

/// DOT rendering of Ci_t(D): one edge line per (i, i+d mod t), so collisions
/// show as parallel edges and offset 0 as a loop.
inline std::string export_dot(const FiniteCirculant& graph, const FiniteColoring& coloring,
                              std::size_t vertex_limit = default_dot_vertex_limit) {
    const std::size_t t = graph.order();
    if (t > vertex_limit) {
        throw resource_limit_error("export_dot: " + std::to_string(t) + " vertices exceed the rendering limit " +
                                   std::to_string(vertex_limit));
    }
    if (coloring.order() != t) {
        throw std::invalid_argument("export_dot: coloring order differs from graph order");
    }
    std::ostringstream out;
    out << "graph Ci_" << t << " {\n";
    out << "  node [shape=circle, style=filled];\n";
    for (std::size_t v = 0; v < t; ++v) {
        const Color c = coloring.word()[v];
        out << "  " << v << " [label=\"" << v << "\", fillcolor=\"" << dot_palette[(c - 1u) % dot_palette.size()]
            << "\"];\n";
    }
    for (std::size_t v = 0; v < t; ++v) {
        for (auto d : graph.distances().distances()) {
            out << "  " << v << " -- " << covering_reduction(static_cast<std::int64_t>(v) + d, t) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace circulant
