#pragma once

#include <vector>

#include "gainforest/nbc.hpp"
#include "gainforest/plane_tree.hpp"

namespace gainforest {

// Record of how the top-level decomposition pieces were attached by a
// tree-to-NBC map; every piece lands in exactly one list.
struct BijectionTrace {
    struct Direct {
        int piece_root = 0;
        GainEdge edge;
    };
    struct ViaVertex {
        int piece_root = 0;
        int attach_vertex = 0;
        GainEdge edge;
    };
    struct Chained {
        int piece_corner = 0;
        GainEdge edge;
    };

    int special_vertex = 0;  // the pivot p; 0 when no piece needed it
    std::vector<Direct> direct_attachments;
    std::vector<ViaVertex> subcorner_attachments;
    std::vector<Chained> chained_attachments;
};

// Spanning forest of a complete interval gain graph; components are NBC
// trees of their own selections.
struct NbcForest {
    std::vector<int> vertices;
    EdgeSet edges;

    friend bool operator==(const NbcForest&, const NbcForest&) = default;
};

// Left k-ary trees <-> NBC trees of K^{[3-arity, arity-1]}[h]; arity 2 is the
// corner-keyed Linial pair. Heights are preserved and the root becomes the
// corner.
NbcTree llks_to_nbc(const PlaneTree& t, BijectionTrace* trace = nullptr);
PlaneTree nbc_to_llks(const NbcTree& nt, int arity);

NbcTree llbs_to_nbc(const PlaneTree& t, BijectionTrace* trace = nullptr);
PlaneTree nbc_to_llbs(const NbcTree& nt);

// Semi-local left trees <-> NBC trees of K^{[1, arity-1]}[h]; arity 2
// coincides with the Linial pair.
NbcTree sllks_to_nbc(const PlaneTree& t, BijectionTrace* trace = nullptr);
PlaneTree nbc_to_sllks(const NbcTree& nt, int arity);

// Subcorner-keyed Linial pair: the RLBS root becomes the subcorner.
PlaneTree nbc_to_rlbs(const NbcTree& nt);
NbcTree rlbs_to_nbc(const PlaneTree& t);

// Third Linial correspondence: corner-keyed left trees whose pieces are
// converted through the subcorner-keyed pair.
PlaneTree nbc_to_llbs_by_subcorners(const NbcTree& nt);
NbcTree llbs_by_subcorners_to_nbc(const PlaneTree& t);

// Forest level: cut the root's slot-arity chain into left pieces and map
// them componentwise.
NbcForest lks_to_nbc_forest(const PlaneTree& t);
PlaneTree nbc_forest_to_lks(const NbcForest& f, int arity);
NbcForest slks_to_nbc_forest(const PlaneTree& t);
PlaneTree nbc_forest_to_slks(const NbcForest& f, int arity);

NbcForest lbs_to_nbc_forest(const PlaneTree& t);
PlaneTree nbc_forest_to_lbs(const NbcForest& f);

// Interval of the ambient complete gain graph for each pair.
std::pair<int, int> llks_interval(int arity);   // [3-arity, arity-1]
std::pair<int, int> sllks_interval(int arity);  // [1, arity-1]

// Validation helper shared by tests and the verification suites: the tree is
// an NBC spanning tree of the selection of K^{[a,b]} on its vertices by its
// height, under the height edge order.
bool is_nbc_tree_of_interval(const NbcTree& t, int a, int b);

}  // namespace gainforest
