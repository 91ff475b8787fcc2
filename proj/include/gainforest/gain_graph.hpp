#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gainforest {

// Oriented integer-gain edge. Reversing the orientation negates the gain,
// so g(i,j) and (-g)(j,i) are the same edge. Canonical form has tail < head.
struct GainEdge {
    int tail = 0;
    int head = 0;
    int gain = 0;

    friend auto operator<=>(const GainEdge&, const GainEdge&) = default;
};

GainEdge reorient(const GainEdge& e);
GainEdge canonical(const GainEdge& e);
bool same_edge(const GainEdge& a, const GainEdge& b);
std::string to_string(const GainEdge& e);

// Edge sets are kept in canonical form, sorted and duplicate-free.
using EdgeSet = std::vector<GainEdge>;
EdgeSet normalize_edge_set(EdgeSet edges);
bool edge_set_contains(const EdgeSet& s, const GainEdge& e);
bool edge_set_includes(const EdgeSet& s, const EdgeSet& subset);

// Gain graph on an explicit finite set of positive integer vertex labels.
// Parallel edges are allowed across distinct gains only.
struct GainGraph {
    std::vector<int> vertices;  // sorted, distinct, positive
    EdgeSet edges;              // canonical, sorted

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    bool has_vertex(int v) const;
    bool has_edge(const GainEdge& e) const;
};

GainGraph make_gain_graph(std::vector<int> vertices, EdgeSet edges);

// K_n^{ab}: every pair i < j carries one edge per gain in [a, b].
GainGraph make_interval_gain_graph(int n, int a, int b);
GainGraph make_interval_gain_graph(std::vector<int> vertices, int a, int b);

GainGraph induced_subgraph(const GainGraph& g, const std::vector<int>& keep);

int max_abs_gain(const GainGraph& g);
bool is_connected(const std::vector<int>& vertices, const EdgeSet& edges);

// Circle: cyclic sequence of edges, consecutively oriented (the head of each
// edge is the tail of the next, wrapping around). A digon of two parallel
// edges with distinct gains is the shortest valid circle.
struct Circle {
    std::vector<GainEdge> edges;

    friend bool operator==(const Circle&, const Circle&) = default;
};

bool is_consecutively_oriented(const Circle& c);
long long circle_gain(const Circle& c);
Circle canonical_circle(const Circle& c);

std::vector<Circle> enumerate_circles(const GainGraph& g);
std::vector<Circle> enumerate_balanced_circles(const GainGraph& g);

// True iff every circle inside s has gain zero; forests are vacuously balanced.
bool is_balanced(const EdgeSet& s, const GainGraph& g);

}  // namespace gainforest
