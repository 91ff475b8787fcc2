#include "gainforest/plane_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace gainforest {

std::optional<int> PlaneTree::child(int node, int slot) const {
    auto it = children.find({node, slot});
    if (it == children.end()) return std::nullopt;
    return it->second;
}

PlaneTree singleton_tree(int label, int arity) {
    if (arity < 2) throw std::invalid_argument("arity must be at least 2");
    PlaneTree t;
    t.arity = arity;
    t.root = label;
    t.labels = {label};
    return t;
}

bool is_well_formed(const PlaneTree& t) {
    if (t.arity < 2) return false;
    if (!t.labels.count(t.root)) return false;
    std::map<int, int> parent_count;
    for (const auto& [key, child] : t.children) {
        const auto& [node, slot] = key;
        if (slot < 1 || slot > t.arity) return false;
        if (!t.labels.count(node) || !t.labels.count(child)) return false;
        if (++parent_count[child] > 1) return false;
    }
    if (parent_count.count(t.root)) return false;
    // Reachability from the root covers every label (also rules out cycles).
    std::set<int> seen{t.root};
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int s = 1; s <= t.arity; ++s)
            if (auto c = t.child(u, s); c && seen.insert(*c).second) stack.push_back(*c);
    }
    return seen == t.labels;
}

PlaneTree subtree_at(const PlaneTree& t, int node) {
    PlaneTree out;
    out.arity = t.arity;
    out.root = node;
    out.labels = {node};
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int s = 1; s <= t.arity; ++s)
            if (auto c = t.child(u, s)) {
                out.children[{u, s}] = *c;
                out.labels.insert(*c);
                stack.push_back(*c);
            }
    }
    return out;
}

namespace {

bool local_slot_ok(const PlaneTree& t, int node, bool semi) {
    if (auto c = t.child(node, t.arity); c && *c < node) return false;
    if (semi) {
        for (int s = 1; s < t.arity; ++s)
            if (auto c = t.child(node, s)) return *c < node;
        return true;
    }
    if (auto c = t.child(node, 1); c && *c > node) return false;
    return true;
}

bool all_nodes_ok(const PlaneTree& t, bool semi) {
    if (!is_well_formed(t)) return false;
    return std::all_of(t.labels.begin(), t.labels.end(),
                       [&](int v) { return local_slot_ok(t, v, semi); });
}

}  // namespace

bool is_lks(const PlaneTree& t) { return all_nodes_ok(t, false); }

bool is_llks(const PlaneTree& t) { return is_lks(t) && !t.child(t.root, t.arity); }

bool is_slks(const PlaneTree& t) { return all_nodes_ok(t, true); }

bool is_sllks(const PlaneTree& t) { return is_slks(t) && !t.child(t.root, t.arity); }

bool is_lbs(const PlaneTree& t) { return t.arity == 2 && is_lks(t); }

bool is_llbs(const PlaneTree& t) { return t.arity == 2 && is_llks(t); }

bool is_rlbs(const PlaneTree& t) { return t.arity == 2 && is_lks(t) && !t.child(t.root, 1); }

std::vector<PlaneTree> chain_pieces(const PlaneTree& t, std::optional<int> first,
                                    int follow_slot) {
    std::vector<PlaneTree> pieces;
    std::optional<int> node = first;
    while (node) {
        PlaneTree piece = subtree_at(t, *node);
        node = piece.child(*node, follow_slot);
        if (node) {
            // Cut the chain link and everything beyond it.
            PlaneTree trimmed = piece;
            trimmed.children.erase({piece.root, follow_slot});
            PlaneTree next = subtree_at(piece, *node);
            for (int v : next.labels) trimmed.labels.erase(v);
            for (const auto& [key, child] : next.children) trimmed.children.erase(key);
            piece = std::move(trimmed);
        }
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

std::vector<std::vector<PlaneTree>> left_decomposition(const PlaneTree& t) {
    if (!is_llks(t)) throw std::invalid_argument("left decomposition needs a left tree");
    std::vector<std::vector<PlaneTree>> out;
    for (int slot = 1; slot < t.arity; ++slot)
        out.push_back(chain_pieces(t, t.child(t.root, slot), t.arity));
    return out;
}

PlaneTree assemble_from_decomposition(int root, int arity,
                                      const std::vector<std::vector<PlaneTree>>& pieces) {
    PlaneTree out = singleton_tree(root, arity);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::vector<PlaneTree> sorted = pieces[i];
        std::sort(sorted.begin(), sorted.end(),
                  [](const PlaneTree& a, const PlaneTree& b) { return a.root < b.root; });
        int hang_on = root;
        int hang_slot = static_cast<int>(i) + 1;
        for (const auto& piece : sorted) {
            out.children[{hang_on, hang_slot}] = piece.root;
            for (int v : piece.labels) out.labels.insert(v);
            for (const auto& [key, child] : piece.children) out.children[key] = child;
            hang_on = piece.root;
            hang_slot = arity;
        }
    }
    return out;
}

namespace {

void llks_levels(const PlaneTree& t, long long base, std::map<int, long long>& out) {
    out[t.root] = base;
    for (int slot = 1; slot < t.arity; ++slot)
        for (const auto& piece : chain_pieces(t, t.child(t.root, slot), t.arity)) {
            long long depth = t.arity - slot - (piece.root > t.root ? 1 : 0);
            llks_levels(piece, base - depth, out);
        }
}

}  // namespace

HeightFunction llks_height(const PlaneTree& t) {
    if (!is_llks(t)) throw std::invalid_argument("height function needs a left tree");
    std::map<int, long long> levels;
    llks_levels(t, 0, levels);
    return normalize_levels(std::move(levels));
}

namespace {

// Enumerates every plane k-ary tree on the label set exactly once: pick the
// root, distribute the rest over the slots, recurse per occupied slot.
struct TreeEnumerator {
    int arity;

    void on_labels(const std::vector<int>& labels, const std::function<void(PlaneTree&)>& emit) {
        for (std::size_t ri = 0; ri < labels.size(); ++ri) {
            std::vector<int> rest = labels;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(ri));
            const std::size_t m = rest.size();
            std::vector<int> slot_of(m, 0);
            while (true) {
                std::vector<std::vector<int>> groups(static_cast<std::size_t>(arity));
                for (std::size_t i = 0; i < m; ++i) groups[slot_of[i]].push_back(rest[i]);
                PlaneTree base = singleton_tree(labels[ri], arity);
                fill_slots(base, groups, 0, emit);
                std::size_t i = 0;
                while (i < m && ++slot_of[i] == arity) slot_of[i++] = 0;
                if (i == m) break;
            }
        }
    }

    void fill_slots(PlaneTree& partial, const std::vector<std::vector<int>>& groups,
                    std::size_t slot_idx, const std::function<void(PlaneTree&)>& emit) {
        if (slot_idx == groups.size()) {
            emit(partial);
            return;
        }
        if (groups[slot_idx].empty()) {
            fill_slots(partial, groups, slot_idx + 1, emit);
            return;
        }
        on_labels(groups[slot_idx], [&](PlaneTree& sub) {
            PlaneTree saved = partial;
            partial.children[{partial.root, static_cast<int>(slot_idx) + 1}] = sub.root;
            for (int v : sub.labels) partial.labels.insert(v);
            for (const auto& [key, child] : sub.children) partial.children[key] = child;
            fill_slots(partial, groups, slot_idx + 1, emit);
            partial = std::move(saved);
        });
    }
};

}  // namespace

void for_each_plane_tree(const std::vector<int>& labels, int arity,
                         const std::function<void(const PlaneTree&)>& fn) {
    if (arity < 2) throw std::invalid_argument("arity must be at least 2");
    if (labels.empty()) return;
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    TreeEnumerator enumerator{arity};
    enumerator.on_labels(sorted, [&](PlaneTree& t) { fn(t); });
}

std::vector<PlaneTree> enumerate_trees(const std::vector<int>& labels, int arity,
                                       const std::function<bool(const PlaneTree&)>& pred) {
    std::vector<PlaneTree> out;
    for_each_plane_tree(labels, arity, [&](const PlaneTree& t) {
        if (!pred || pred(t)) out.push_back(t);
    });
    return out;
}

}  // namespace gainforest
