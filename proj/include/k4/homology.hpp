#ifndef K4_HOMOLOGY_HPP
#define K4_HOMOLOGY_HPP

#include "k4/morphisms.hpp"

#include <optional>
#include <vector>

namespace k4 {

// Edge of the quadrant diagram: the morphism leaving src.
struct Edge {
    MapKind kind;
    Module src;
    Module dst;
};

// The outgoing and incoming morphisms of a node, following the diagram of
// the four quadrants. Absent at the diagram's two ends.
std::optional<Edge> outgoing_edge(const Module& node);
std::optional<Edge> incoming_edge(const Module& node);

struct HomologyClass {
    GRat hx, hy, t; // weight of the class
    MElt rep;       // a representative cycle
};

struct NodeHomology {
    Module node;
    int degree = 0;
    int dim = 0;
    std::vector<HomologyClass> classes; // present when dim > 0
};

// Homology of the complex at one node and degree:
// dim ker(outgoing at degree d) - rank(incoming into degree d).
// Asserts that the composition of consecutive maps vanishes.
NodeHomology node_homology(const Module& node, int degree);

// Sweep over all nodes with |m|, |n| <= window and degrees 0..dmax.
// Runs the cells in parallel unless serial is set.
std::vector<NodeHomology> homology_sweep(int window, int dmax, bool serial = false);

// All diagram nodes with |m|, |n| <= window, in a fixed scan order.
std::vector<Module> diagram_nodes(int window);

} // namespace k4

#endif
