#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gainforest/heights.hpp"

namespace gainforest {

// Labelled rooted plane k-ary tree. Children live in explicit slots 1..arity;
// any subset of slots may be occupied and the slot of a child does not depend
// on the presence of its siblings.
struct PlaneTree {
    int arity = 2;
    int root = 0;
    std::set<int> labels;
    std::map<std::pair<int, int>, int> children;  // (node, slot) -> child

    std::optional<int> child(int node, int slot) const;

    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
    friend bool operator<(const PlaneTree& a, const PlaneTree& b) {
        return std::tie(a.arity, a.root, a.labels, a.children) <
               std::tie(b.arity, b.root, b.labels, b.children);
    }
};

PlaneTree singleton_tree(int label, int arity);
bool is_well_formed(const PlaneTree& t);
PlaneTree subtree_at(const PlaneTree& t, int node);

// Local search predicates. LkS constrains slot 1 (child < parent) and
// slot-arity (child > parent); SLkS constrains the lowest occupied slot
// among 1..arity-1 instead of slot 1. The LL/RL variants additionally
// empty one root slot.
bool is_lks(const PlaneTree& t);
bool is_llks(const PlaneTree& t);
bool is_slks(const PlaneTree& t);
bool is_sllks(const PlaneTree& t);
bool is_lbs(const PlaneTree& t);
bool is_llbs(const PlaneTree& t);
bool is_rlbs(const PlaneTree& t);

// Pieces obtained by walking from `first` along `follow_slot` links and
// cutting those links; each chain node keeps the rest of its subtree.
std::vector<PlaneTree> chain_pieces(const PlaneTree& t, std::optional<int> first,
                                    int follow_slot);

// Per inner slot i: the chain from the slot-i child along slot-arity links,
// split into pieces (each again left-rooted). Index 0 holds slot 1.
std::vector<std::vector<PlaneTree>> left_decomposition(const PlaneTree& t);

// Inverse of left_decomposition: hang each slot's pieces, roots ascending,
// back on a slot-arity chain under the root.
PlaneTree assemble_from_decomposition(int root, int arity,
                                      const std::vector<std::vector<PlaneTree>>& pieces);

// Recursive height function of a left tree: a piece root on the slot-i chain
// sits arity-i levels below its parent when smaller than it, one level less
// when bigger; the result is shifted to min level 0.
HeightFunction llks_height(const PlaneTree& t);

void for_each_plane_tree(const std::vector<int>& labels, int arity,
                         const std::function<void(const PlaneTree&)>& fn);
std::vector<PlaneTree> enumerate_trees(const std::vector<int>& labels, int arity,
                                       const std::function<bool(const PlaneTree&)>& pred);

}  // namespace gainforest
