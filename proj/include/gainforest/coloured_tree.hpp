#pragma once

#include <functional>
#include <set>
#include <vector>

#include "gainforest/plane_tree.hpp"

namespace gainforest {

struct ColouredEdge {
    int parent = 0;
    int child = 0;
    int colour = 1;

    friend auto operator<=>(const ColouredEdge&, const ColouredEdge&) = default;
};

// Rooted labelled tree (children unordered) with edge colours in 1..c.
struct ColouredTree {
    int root = 0;
    std::set<int> labels;
    std::vector<ColouredEdge> edges;  // sorted

    std::vector<ColouredEdge> edges_below(int node) const;

    friend bool operator==(const ColouredTree&, const ColouredTree&) = default;
    friend bool operator<(const ColouredTree& a, const ColouredTree& b) {
        return std::tie(a.root, a.labels, a.edges) < std::tie(b.root, b.labels, b.edges);
    }
};

ColouredTree make_coloured_tree(int root, std::vector<ColouredEdge> edges);
bool is_well_formed(const ColouredTree& t);

// Descent: no colour-1 child, or the smallest colour-1 child is smaller than
// the vertex. S-descent: the smallest child of the smallest occupied colour
// is smaller than the vertex.
bool is_descent_tree(const ColouredTree& t);
bool is_sdescent_tree(const ColouredTree& t);

// Children of colour i are exactly the slot-i chain piece roots, recursively.
ColouredTree llks_to_coloured(const PlaneTree& t);
// Inverse: group children by colour, sort ascending, rebuild the chains.
// Rejects inputs whose rebuild is not a left tree (non-descent trees).
PlaneTree coloured_to_llks(const ColouredTree& t, int arity);
PlaneTree coloured_to_sllks(const ColouredTree& t, int arity);

void for_each_coloured_tree(const std::vector<int>& labels, int colours,
                            const std::function<void(const ColouredTree&)>& fn);
std::vector<ColouredTree> enumerate_coloured_trees(
    const std::vector<int>& labels, int colours,
    const std::function<bool(const ColouredTree&)>& pred);

}  // namespace gainforest
