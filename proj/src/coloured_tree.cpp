#include "gainforest/coloured_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gainforest {

std::vector<ColouredEdge> ColouredTree::edges_below(int node) const {
    std::vector<ColouredEdge> out;
    for (const auto& e : edges)
        if (e.parent == node) out.push_back(e);
    return out;
}

ColouredTree make_coloured_tree(int root, std::vector<ColouredEdge> edges) {
    ColouredTree t;
    t.root = root;
    t.labels.insert(root);
    for (const auto& e : edges) {
        t.labels.insert(e.parent);
        t.labels.insert(e.child);
    }
    std::sort(edges.begin(), edges.end());
    t.edges = std::move(edges);
    if (!is_well_formed(t)) throw std::invalid_argument("not a rooted coloured tree");
    return t;
}

bool is_well_formed(const ColouredTree& t) {
    if (!t.labels.count(t.root)) return false;
    std::map<int, int> parent_count;
    for (const auto& e : t.edges) {
        if (e.colour < 1) return false;
        if (!t.labels.count(e.parent) || !t.labels.count(e.child)) return false;
        if (++parent_count[e.child] > 1) return false;
    }
    if (parent_count.count(t.root)) return false;
    std::set<int> seen{t.root};
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& e : t.edges)
            if (e.parent == u && seen.insert(e.child).second) stack.push_back(e.child);
    }
    return seen == t.labels;
}

bool is_descent_tree(const ColouredTree& t) {
    for (int v : t.labels) {
        bool has_colour1 = false;
        int smallest = 0;
        for (const auto& e : t.edges_below(v))
            if (e.colour == 1 && (!has_colour1 || e.child < smallest)) {
                smallest = e.child;
                has_colour1 = true;
            }
        if (has_colour1 && smallest > v) return false;
    }
    return true;
}

bool is_sdescent_tree(const ColouredTree& t) {
    for (int v : t.labels) {
        auto below = t.edges_below(v);
        if (below.empty()) continue;
        int lowest_colour = below.front().colour;
        for (const auto& e : below) lowest_colour = std::min(lowest_colour, e.colour);
        int smallest = 0;
        bool seen = false;
        for (const auto& e : below)
            if (e.colour == lowest_colour && (!seen || e.child < smallest)) {
                smallest = e.child;
                seen = true;
            }
        if (smallest > v) return false;
    }
    return true;
}

namespace {

void to_coloured_rec(const PlaneTree& t, std::vector<ColouredEdge>& out) {
    for (int slot = 1; slot < t.arity; ++slot)
        for (const auto& piece : chain_pieces(t, t.child(t.root, slot), t.arity)) {
            out.push_back(ColouredEdge{t.root, piece.root, slot});
            to_coloured_rec(piece, out);
        }
}

PlaneTree from_coloured_rec(const ColouredTree& t, int node, int arity) {
    std::map<int, std::vector<PlaneTree>> by_colour;
    for (const auto& e : t.edges_below(node)) {
        if (e.colour > arity - 1)
            throw std::invalid_argument("edge colour exceeds the inner slot range");
        by_colour[e.colour].push_back(from_coloured_rec(t, e.child, arity));
    }
    std::vector<std::vector<PlaneTree>> pieces(static_cast<std::size_t>(arity - 1));
    for (auto& [colour, group] : by_colour) pieces[static_cast<std::size_t>(colour) - 1] = group;
    return assemble_from_decomposition(node, arity, pieces);
}

}  // namespace

ColouredTree llks_to_coloured(const PlaneTree& t) {
    if (!is_llks(t)) throw std::invalid_argument("conversion needs a left tree");
    std::vector<ColouredEdge> edges;
    to_coloured_rec(t, edges);
    return make_coloured_tree(t.root, std::move(edges));
}

PlaneTree coloured_to_llks(const ColouredTree& t, int arity) {
    PlaneTree out = from_coloured_rec(t, t.root, arity);
    if (!is_llks(out)) throw std::invalid_argument("not a descent tree");
    return out;
}

PlaneTree coloured_to_sllks(const ColouredTree& t, int arity) {
    PlaneTree out = from_coloured_rec(t, t.root, arity);
    if (!is_sllks(out)) throw std::invalid_argument("not an S-descent tree");
    return out;
}

void for_each_coloured_tree(const std::vector<int>& labels, int colours,
                            const std::function<void(const ColouredTree&)>& fn) {
    if (colours < 1) throw std::invalid_argument("need at least one colour");
    if (labels.empty()) return;
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size() - 1;
    for (int root : sorted) {
        std::vector<int> rest;
        for (int v : sorted)
            if (v != root) rest.push_back(v);
        // Every non-root picks a parent; keep the acyclic assignments.
        std::vector<std::size_t> parent_idx(m, 0);
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                // Walk up from rest[i]; must reach the root without repeats.
                std::set<int> seen{rest[i]};
                int v = rest[i];
                while (v != root) {
                    auto it = std::find(rest.begin(), rest.end(), v);
                    std::size_t idx = static_cast<std::size_t>(it - rest.begin());
                    v = sorted[parent_idx[idx]];
                    if (!seen.insert(v).second) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                std::vector<int> colour(m, 1);
                while (true) {
                    std::vector<ColouredEdge> edges;
                    for (std::size_t i = 0; i < m; ++i)
                        edges.push_back(ColouredEdge{sorted[parent_idx[i]], rest[i], colour[i]});
                    fn(make_coloured_tree(root, std::move(edges)));
                    std::size_t i = 0;
                    while (i < m && ++colour[i] > colours) colour[i++] = 1;
                    if (i == m) break;
                }
            }
            std::size_t i = 0;
            while (i < m && ++parent_idx[i] == sorted.size()) parent_idx[i++] = 0;
            if (i == m) break;
        }
    }
}

std::vector<ColouredTree> enumerate_coloured_trees(
    const std::vector<int>& labels, int colours,
    const std::function<bool(const ColouredTree&)>& pred) {
    std::vector<ColouredTree> out;
    for_each_coloured_tree(labels, colours, [&](const ColouredTree& t) {
        if (!pred || pred(t)) out.push_back(t);
    });
    return out;
}

}  // namespace gainforest
