#pragma once

#include <utility>
#include <vector>

#include "gainforest/gain_graph.hpp"
#include "gainforest/heights.hpp"

namespace gainforest {

// One set per balanced circle: the circle minus its ord-smallest edge.
std::vector<EdgeSet> broken_circuits(const GainGraph& g, const EdgeOrder& ord);

// True iff s is a forest containing no broken circuit of (g, ord).
bool is_nbc(const EdgeSet& s, const GainGraph& g, const EdgeOrder& ord);

std::vector<EdgeSet> enumerate_nbc_sets(const GainGraph& g, const EdgeOrder& ord);
long long count_nbc_sets(const GainGraph& g, const EdgeOrder& ord);

// Balanced spanning tree with its height function and corner; NBC-ness is
// relative to an ambient selection and checked where the tree is produced.
struct NbcTree {
    std::vector<int> vertices;
    EdgeSet edges;
    HeightFunction height;
    int corner = 0;

    friend bool operator==(const NbcTree&, const NbcTree&) = default;
};

NbcTree make_nbc_tree(std::vector<int> vertices, EdgeSet edges);
int tree_subcorner(const NbcTree& t);

// All spanning trees of sel = Phi[h] that are NBC under O_h.
std::vector<NbcTree> enumerate_nbc_trees(const GainGraph& sel, const HeightFunction& h);

// Recursive criterion: after deleting the corner, every component is NBC and
// attaches at its O_h-smallest vertex adjacent to the corner in sel.
bool is_nbc_tree_recursive(const EdgeSet& tree_edges, const GainGraph& sel,
                           const HeightFunction& h);

// Per-height NBC tree counts; totals match the spanning-tree NBC count.
std::vector<std::pair<HeightFunction, long long>> decompose_by_height(const GainGraph& g);
long long count_nbc_spanning_trees(const GainGraph& g, const EdgeOrder& ord);

std::vector<std::vector<int>> forest_components(const std::vector<int>& vertices,
                                                const EdgeSet& edges);

}  // namespace gainforest
