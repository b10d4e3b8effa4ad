#ifndef CHARPOLY_BUILTINS_HPP
#define CHARPOLY_BUILTINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "charpoly/graph.hpp"

namespace charpoly {

// Named graphs for every figure the classification and golden tests touch,
// with edge orders fixed to match the published coordinate conventions.

// Two loops joined by a bridge; edges (l1, l2, e).
inline Multigraph dumbbell_graph() {
    return Multigraph(2, {{0, 0}, {1, 1}, {0, 1}});
}

// Two vertices joined by three parallel edges; edges (l1, l2, e).
inline Multigraph theta_graph() {
    return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}});
}

// K4 with vertex 0 in the middle of the drawing; edge order
// (l1, l2, l3, e4, e5, e6): l1..l3 run clockwise around the outer triangle
// starting at the top, e4..e6 are the spokes starting at the one between
// l1 and l2.
inline Multigraph k4_graph() {
    return Multigraph(4, {{1, 2}, {1, 3}, {2, 3}, {0, 1}, {0, 3}, {0, 2}});
}

inline std::vector<int> k4_star_tree() { return {3, 4, 5}; }  // trivalent tree
inline std::vector<int> k4_path_tree() { return {1, 3, 5}; }  // path tree

// Loop, bridge, then a doubled edge hanging off a fork.
inline Multigraph rattle_graph() {
    return Multigraph(4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 3}});
}

inline std::vector<int> rattle_star_tree() { return {1, 2, 3}; }

// Three loops on the claw tree; the genus 3 loop-tree.
inline Multigraph star3_graph() {
    return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 2}, {3, 3}});
}

inline std::vector<int> star3_tree() { return {0, 1, 2}; }

inline Multigraph k33_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) edges.emplace_back(i, j);
    return Multigraph(6, std::move(edges));
}

inline Multigraph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Multigraph(10, std::move(edges));
}

// The H-shaped trivalent tree with four leaves; its loop-tree is the
// smallest genus 4 member of the reflexive family.
inline Multigraph h_tree() {
    return Multigraph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

// Trivalent tree with three legs of length two (six leaves).
inline Multigraph spider_tree() {
    return Multigraph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
}

inline std::optional<Multigraph> builtin_graph(const std::string& name) {
    if (name == "dumbbell") return dumbbell_graph();
    if (name == "theta") return theta_graph();
    if (name == "k4") return k4_graph();
    if (name == "rattle") return rattle_graph();
    if (name == "star3") return star3_graph();
    if (name == "petersen") return petersen_graph();
    if (name == "k33") return k33_graph();
    return std::nullopt;
}

}  // namespace charpoly

#endif  // CHARPOLY_BUILTINS_HPP
