#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gainforest/gain_graph.hpp"

namespace gainforest {

// Vertex levels, non-negative, with level 0 occupied.
struct HeightFunction {
    std::map<int, int> levels;

    int level(int v) const;
    bool contains(int v) const { return levels.count(v) > 0; }
    std::vector<int> domain() const;

    friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
    friend bool operator<(const HeightFunction& a, const HeightFunction& b) {
        return a.levels < b.levels;
    }
};

HeightFunction make_height_function(std::map<int, int> levels);
// Shift so the minimum occupied level is 0.
HeightFunction normalize_levels(std::map<int, long long> levels);

// O_h: higher level first, ties broken by smaller label.
bool oh_less(const HeightFunction& h, int u, int v);
// Edges compare by their O_h-sorted endpoint pairs, lexicographically;
// parallel edges tie-break on the canonical triple.
bool oh_edge_less(const HeightFunction& h, const GainEdge& a, const GainEdge& b);

int corner(const HeightFunction& h);
int corner(const HeightFunction& h, const std::vector<int>& subset);

bool is_coherent(const GainEdge& e, const HeightFunction& h);
// Phi[h]: same vertices, the edges g(i,j) with h(j) - h(i) = g.
GainGraph select_coherent_subgraph(const GainGraph& g, const HeightFunction& h);

// The unique min-0 height with h(head) - h(tail) = gain on every edge.
// Rejects disconnected or unbalanced input.
HeightFunction height_from_balanced(const GainGraph& g);
HeightFunction height_from_balanced(const std::vector<int>& vertices, const EdgeSet& edges);

// O_h-smallest neighbour of the corner in sel; the corner itself when |V| = 1.
int subcorner(const HeightFunction& h, const GainGraph& sel);

// All heights (min level 0, levels bounded by (n-1)*max|gain|) whose
// selected subgraph is connected, in lexicographic order of level vectors.
std::vector<HeightFunction> enumerate_coherent_heights(const GainGraph& g);

// A linear order on a graph's edges: rank 0 is the smallest edge.
struct EdgeOrder {
    std::vector<GainEdge> ranked;
    std::map<GainEdge, int> index;

    int rank(const GainEdge& e) const;
    std::size_t size() const { return ranked.size(); }
};

EdgeOrder make_edge_order(std::vector<GainEdge> ranked);
EdgeOrder canonical_edge_order(const GainGraph& g);
EdgeOrder height_edge_order(const GainGraph& g, const HeightFunction& h);
EdgeOrder seeded_edge_order(const GainGraph& g, std::uint64_t seed);

}  // namespace gainforest
