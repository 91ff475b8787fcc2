#include "gainforest/bijections.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace gainforest {

std::pair<int, int> llks_interval(int arity) { return {3 - arity, arity - 1}; }
std::pair<int, int> sllks_interval(int arity) { return {1, arity - 1}; }

namespace {

// Canonical edge between two vertices with the gain forced by the levels.
GainEdge level_edge(int u, int v, const HeightFunction& h) {
    int lo = std::min(u, v), hi = std::max(u, v);
    return GainEdge{lo, hi, h.level(hi) - h.level(lo)};
}

bool pair_coherent(int u, int v, const HeightFunction& h, int a, int b) {
    int lo = std::min(u, v), hi = std::max(u, v);
    int gain = h.level(hi) - h.level(lo);
    return gain >= a && gain <= b;
}

// ---------------------------------------------------------------------------
// Tree -> NBC, left k-ary family (interval [3-arity, arity-1]).
//
// Pieces on slots 2..arity-1 and the smaller-rooted slot-1 pieces attach
// directly at their corner; the gain is forced by the levels. A bigger-rooted
// slot-1 piece cannot reach the root coherently, so it either attaches
// through its O_h-smallest root-adjacent vertex (when that vertex is below
// the pivot p) or joins the chain hanging off p: a gain-1 edge to the biggest
// chained corner, then gain-0 edges between corners in decreasing order. At
// arity 2 there is no gain 0 and every chained corner attaches to p directly.
// ---------------------------------------------------------------------------
EdgeSet build_llks(const PlaneTree& t, const HeightFunction& h, BijectionTrace* trace) {
    EdgeSet edges;
    const int r = t.root;
    const int arity = t.arity;
    std::vector<PlaneTree> slot1_bigger;
    int p = 0;
    for (int slot = 1; slot < arity; ++slot) {
        for (const auto& piece : chain_pieces(t, t.child(r, slot), arity)) {
            EdgeSet sub = build_llks(piece, h, nullptr);
            edges.insert(edges.end(), sub.begin(), sub.end());
            if (slot == 1 && piece.root > r) {
                slot1_bigger.push_back(piece);
                continue;
            }
            GainEdge e = level_edge(piece.root, r, h);
            edges.push_back(e);
            if (trace) trace->direct_attachments.push_back({piece.root, e});
            if (slot == 1) p = std::max(p, piece.root);
        }
    }
    std::vector<PlaneTree> chained;
    const auto [lo, hi] = llks_interval(arity);
    for (const auto& piece : slot1_bigger) {
        // O_h-smallest vertex of the piece with a coherent edge to the root.
        std::optional<int> x;
        for (int v : piece.labels)
            if (v < r && h.level(v) < h.level(r) && pair_coherent(v, r, h, lo, hi))
                if (!x || oh_less(h, v, *x)) x = v;
        if (x && *x < p) {
            GainEdge e = level_edge(*x, r, h);
            edges.push_back(e);
            if (trace) trace->subcorner_attachments.push_back({piece.root, *x, e});
        } else {
            chained.push_back(piece);
        }
    }
    if (!chained.empty()) {
        if (p == 0) throw std::logic_error("chained piece without a pivot");
        std::sort(chained.begin(), chained.end(),
                  [](const PlaneTree& a, const PlaneTree& b) { return a.root > b.root; });
        if (arity == 2) {
            for (const auto& piece : chained) {
                GainEdge e = level_edge(p, piece.root, h);
                edges.push_back(e);
                if (trace) trace->chained_attachments.push_back({piece.root, e});
            }
        } else {
            int previous = p;
            for (const auto& piece : chained) {
                GainEdge e = level_edge(previous, piece.root, h);
                edges.push_back(e);
                if (trace) trace->chained_attachments.push_back({piece.root, e});
                previous = piece.root;
            }
        }
    }
    if (trace) trace->special_vertex = p;
    return edges;
}

// ---------------------------------------------------------------------------
// Tree -> NBC, semi-local family (interval [1, arity-1]).
//
// Pieces are processed in decreasing O_h order of their corners. The first is
// the pivot p; each later piece attaches directly to the root through its
// O_h-smallest root-adjacent vertex x when x is O_h-below p, and otherwise
// grafts onto the growing component at the O_h-biggest vertex that admits a
// coherent edge to the piece's corner.
// ---------------------------------------------------------------------------
EdgeSet build_sllks(const PlaneTree& t, const HeightFunction& h, BijectionTrace* trace) {
    EdgeSet edges;
    const int r = t.root;
    const int arity = t.arity;
    std::vector<PlaneTree> pieces;
    for (int slot = 1; slot < arity; ++slot)
        for (auto& piece : chain_pieces(t, t.child(r, slot), arity)) pieces.push_back(piece);
    if (pieces.empty()) return edges;
    for (const auto& piece : pieces) {
        EdgeSet sub = build_sllks(piece, h, nullptr);
        edges.insert(edges.end(), sub.begin(), sub.end());
    }
    std::sort(pieces.begin(), pieces.end(), [&](const PlaneTree& a, const PlaneTree& b) {
        return oh_less(h, b.root, a.root);
    });
    const int p = pieces.front().root;
    if (p > r) throw std::logic_error("pivot above the root");
    const auto [lo, hi] = sllks_interval(arity);
    {
        GainEdge e = level_edge(p, r, h);
        edges.push_back(e);
        if (trace) {
            trace->special_vertex = p;
            trace->direct_attachments.push_back({p, e});
        }
    }
    std::set<int> grown(pieces.front().labels.begin(), pieces.front().labels.end());
    for (std::size_t k = 1; k < pieces.size(); ++k) {
        const auto& piece = pieces[k];
        std::optional<int> x;
        for (int v : piece.labels)
            if (v < r && pair_coherent(v, r, h, lo, hi))
                if (!x || oh_less(h, v, *x)) x = v;
        if (x && oh_less(h, *x, p)) {
            GainEdge e = level_edge(*x, r, h);
            edges.push_back(e);
            if (trace) trace->subcorner_attachments.push_back({piece.root, *x, e});
            continue;
        }
        std::optional<int> target;
        for (int v : grown)
            if (pair_coherent(v, piece.root, h, lo, hi))
                if (!target || oh_less(h, *target, v)) target = v;
        if (!target) throw std::runtime_error("no coherent graft point in the growing component");
        GainEdge e = level_edge(*target, piece.root, h);
        edges.push_back(e);
        if (trace) trace->chained_attachments.push_back({piece.root, e});
        grown.insert(piece.labels.begin(), piece.labels.end());
    }
    return edges;
}

// ---------------------------------------------------------------------------
// Inverse scaffolding: split an NBC subtree at a vertex.
// ---------------------------------------------------------------------------
struct Part {
    std::vector<int> vertices;
    EdgeSet edges;
};

std::map<int, std::vector<int>> adjacency(const Part& part) {
    std::map<int, std::vector<int>> adj;
    for (int v : part.vertices) adj[v];
    for (const auto& e : part.edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    return adj;
}

Part restrict_part(const Part& part, const std::set<int>& keep) {
    Part out;
    for (int v : part.vertices)
        if (keep.count(v)) out.vertices.push_back(v);
    for (const auto& e : part.edges)
        if (keep.count(e.tail) && keep.count(e.head)) out.edges.push_back(e);
    return out;
}

// Components of part minus v, each with the vertex that was attached to v.
std::vector<std::pair<Part, int>> split_at(const Part& part, int v) {
    auto adj = adjacency(part);
    std::vector<std::pair<Part, int>> out;
    std::set<int> visited{v};
    for (int start : adj[v]) {
        if (visited.count(start)) continue;
        std::set<int> comp;
        std::vector<int> stack{start};
        comp.insert(start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (w != v && comp.insert(w).second) stack.push_back(w);
        }
        visited.insert(comp.begin(), comp.end());
        out.emplace_back(restrict_part(part, comp), start);
    }
    return out;
}

int part_corner(const Part& part, const HeightFunction& h) { return corner(h, part.vertices); }

// Peel the chain hanging off the pivot inside its component. At arity 2
// every neighbour of p one level up starts a chained piece; otherwise the
// chain is a path: one gain-1 neighbour above p, then same-level neighbours
// with decreasing labels.
std::vector<Part> peel_llks_chain(const Part& comp, int p, const HeightFunction& h, int arity) {
    auto adj = adjacency(comp);
    std::vector<std::pair<int, int>> cut;  // edges to remove
    if (arity == 2) {
        for (int u : adj[p])
            if (h.level(u) == h.level(p) + 1) cut.emplace_back(p, u);
    } else {
        int current = p;
        std::optional<int> up;
        for (int u : adj[p])
            if (h.level(u) == h.level(p) + 1) {
                if (up) throw std::invalid_argument("two chain heads above the pivot");
                up = u;
            }
        while (up) {
            cut.emplace_back(current, *up);
            current = *up;
            up.reset();
            for (int u : adj[current])
                if (h.level(u) == h.level(current) && u < current) {
                    if (up) throw std::invalid_argument("ambiguous chain link");
                    up = u;
                }
        }
    }
    Part remaining = comp;
    for (auto [a, b] : cut) {
        auto is_cut = [a = a, b = b](const GainEdge& e) {
            return (e.tail == std::min(a, b) && e.head == std::max(a, b));
        };
        remaining.edges.erase(std::remove_if(remaining.edges.begin(), remaining.edges.end(), is_cut),
                              remaining.edges.end());
    }
    // Components of the cut forest.
    std::vector<Part> out;
    for (const auto& comp_vertices : forest_components(remaining.vertices, remaining.edges)) {
        std::set<int> keep(comp_vertices.begin(), comp_vertices.end());
        out.push_back(restrict_part(remaining, keep));
    }
    return out;
}

// Depth-first peel for the semi-local inverse: walking away from the pivot,
// an edge into a vertex O_h-below the current piece's corner is cut and the
// vertex opens a new piece.
std::vector<Part> peel_sllks_chain(const Part& comp, int p, const HeightFunction& h) {
    auto adj = adjacency(comp);
    std::vector<Part> pieces;
    std::vector<int> piece_corner;
    std::map<int, int> piece_of;
    auto dfs = [&](auto&& self, int x, int pid) -> void {
        piece_of[x] = pid;
        pieces[static_cast<std::size_t>(pid)].vertices.push_back(x);
        for (int y : adj[x]) {
            if (piece_of.count(y)) continue;
            if (oh_less(h, y, piece_corner[static_cast<std::size_t>(pid)])) {
                pieces.push_back({});
                piece_corner.push_back(y);
                self(self, y, static_cast<int>(pieces.size()) - 1);
            } else {
                pieces[static_cast<std::size_t>(pid)].edges.push_back(level_edge(x, y, h));
                self(self, y, pid);
            }
        }
    };
    pieces.push_back({});
    piece_corner.push_back(p);
    dfs(dfs, p, 0);
    for (auto& piece : pieces) {
        std::sort(piece.vertices.begin(), piece.vertices.end());
        piece.edges = normalize_edge_set(std::move(piece.edges));
    }
    return pieces;
}

PlaneTree invert_left_family(const Part& part, const HeightFunction& h, int arity, bool semi);

PlaneTree assemble_pieces(int root_label, int arity, const std::vector<Part>& pieces,
                          const HeightFunction& h, bool semi) {
    std::vector<std::vector<PlaneTree>> groups(static_cast<std::size_t>(arity - 1));
    const int c_level = h.level(root_label);
    for (const auto& piece : pieces) {
        const int rho = part_corner(piece, h);
        const int depth = c_level - h.level(rho);
        const int slot = rho < root_label ? arity - depth : arity - 1 - depth;
        if (slot < 1 || slot > arity - 1)
            throw std::invalid_argument("piece corner at an impossible level");
        groups[static_cast<std::size_t>(slot) - 1].push_back(
            invert_left_family(piece, h, arity, semi));
    }
    return assemble_from_decomposition(root_label, arity, groups);
}

PlaneTree invert_left_family(const Part& part, const HeightFunction& h, int arity, bool semi) {
    if (part.vertices.size() == 1) return singleton_tree(part.vertices.front(), arity);
    const int c = part_corner(part, h);
    auto comps = split_at(part, c);
    int pivot = 0;
    if (semi) {
        // O_h-biggest neighbour of the corner.
        bool found = false;
        for (const auto& [comp, attach] : comps)
            if (!found || oh_less(h, pivot, attach)) {
                pivot = attach;
                found = true;
            }
    } else {
        // Largest neighbour on the deepest reachable level.
        for (const auto& [comp, attach] : comps)
            if (h.level(c) - h.level(attach) == arity - 1) pivot = std::max(pivot, attach);
    }
    std::vector<Part> pieces;
    for (auto& [comp, attach] : comps) {
        if (pivot != 0 && attach == pivot) {
            auto peeled = semi ? peel_sllks_chain(comp, pivot, h)
                               : peel_llks_chain(comp, pivot, h, arity);
            for (auto& piece : peeled) pieces.push_back(std::move(piece));
        } else {
            pieces.push_back(std::move(comp));
        }
    }
    return assemble_pieces(c, arity, pieces, h, semi);
}

// ---------------------------------------------------------------------------
// Subcorner-keyed Linial pair. All gains are 1, so edges need no heights.
// ---------------------------------------------------------------------------
GainEdge linial_edge(int u, int v) { return GainEdge{std::min(u, v), std::max(u, v), 1}; }

PlaneTree to_rlbs(const Part& part, const HeightFunction& h) {
    if (part.vertices.size() == 1) return singleton_tree(part.vertices.front(), 2);
    const int c = part_corner(part, h);
    auto adj = adjacency(part);
    int sc = 0;
    bool found = false;
    for (int u : adj[c])
        if (!found || oh_less(h, u, sc)) {
            sc = u;
            found = true;
        }
    auto comps = split_at(part, sc);
    std::vector<PlaneTree> subs;
    for (const auto& [comp, attach] : comps) subs.push_back(to_rlbs(comp, h));
    std::sort(subs.begin(), subs.end(),
              [](const PlaneTree& a, const PlaneTree& b) { return a.root > b.root; });
    PlaneTree out = singleton_tree(sc, 2);
    int hang_on = sc;
    int hang_slot = 2;
    for (const auto& sub : subs) {
        out.children[{hang_on, hang_slot}] = sub.root;
        for (int v : sub.labels) out.labels.insert(v);
        for (const auto& [key, child] : sub.children) out.children[key] = child;
        hang_on = sub.root;
        hang_slot = 1;
    }
    return out;
}

struct RlbsImage {
    std::vector<int> vertices;
    EdgeSet edges;
    int corner = 0;
    int subcorner = 0;
};

RlbsImage from_rlbs(const PlaneTree& t) {
    RlbsImage out;
    out.vertices.assign(t.labels.begin(), t.labels.end());
    const int r = t.root;
    out.subcorner = r;
    if (t.labels.size() == 1) {
        out.corner = r;
        return out;
    }
    for (const auto& piece : chain_pieces(t, t.child(r, 2), 1)) {
        PlaneTree sub_tree = piece;
        RlbsImage sub = from_rlbs(sub_tree);
        out.edges.insert(out.edges.end(), sub.edges.begin(), sub.edges.end());
        // Attach at the piece's corner unless the result's subcorner r falls
        // strictly between the piece's subcorner and corner.
        if (sub.corner > r && sub.subcorner < r)
            out.edges.push_back(linial_edge(r, sub.subcorner));
        else
            out.edges.push_back(linial_edge(r, sub.corner));
    }
    out.edges = normalize_edge_set(std::move(out.edges));
    HeightFunction h = height_from_balanced(out.vertices, out.edges);
    out.corner = corner(h, out.vertices);
    return out;
}

}  // namespace

bool is_nbc_tree_of_interval(const NbcTree& t, int a, int b) {
    GainGraph ambient =
        select_coherent_subgraph(make_interval_gain_graph(t.vertices, a, b), t.height);
    for (const auto& e : t.edges)
        if (!ambient.has_edge(e)) return false;
    return is_nbc(t.edges, ambient, height_edge_order(ambient, t.height));
}

NbcTree llks_to_nbc(const PlaneTree& t, BijectionTrace* trace) {
    if (!is_llks(t)) throw std::invalid_argument("input is not a left tree");
    HeightFunction h = llks_height(t);
    EdgeSet edges = build_llks(t, h, trace);
    NbcTree out = make_nbc_tree({t.labels.begin(), t.labels.end()}, std::move(edges));
    if (out.corner != t.root || !(out.height == h))
        throw std::runtime_error("left-tree image lost its height function");
    return out;
}

PlaneTree nbc_to_llks(const NbcTree& nt, int arity) {
    if (arity < 2) throw std::invalid_argument("arity must be at least 2");
    const auto [a, b] = llks_interval(arity);
    if (!is_nbc_tree_of_interval(nt, a, b))
        throw std::invalid_argument("input is not an NBC tree of the interval selection");
    PlaneTree out = invert_left_family({nt.vertices, nt.edges}, nt.height, arity, false);
    if (!is_llks(out)) throw std::runtime_error("inverse produced a non-left tree");
    return out;
}

NbcTree llbs_to_nbc(const PlaneTree& t, BijectionTrace* trace) {
    if (t.arity != 2) throw std::invalid_argument("expected a binary tree");
    return llks_to_nbc(t, trace);
}

PlaneTree nbc_to_llbs(const NbcTree& nt) { return nbc_to_llks(nt, 2); }

NbcTree sllks_to_nbc(const PlaneTree& t, BijectionTrace* trace) {
    if (!is_sllks(t)) throw std::invalid_argument("input is not a semi-local left tree");
    if (t.arity == 2) return llks_to_nbc(t, trace);
    HeightFunction h = llks_height(t);
    EdgeSet edges = build_sllks(t, h, trace);
    NbcTree out = make_nbc_tree({t.labels.begin(), t.labels.end()}, std::move(edges));
    if (out.corner != t.root || !(out.height == h))
        throw std::runtime_error("semi-local image lost its height function");
    return out;
}

PlaneTree nbc_to_sllks(const NbcTree& nt, int arity) {
    if (arity < 2) throw std::invalid_argument("arity must be at least 2");
    if (arity == 2) return nbc_to_llks(nt, 2);
    const auto [a, b] = sllks_interval(arity);
    if (!is_nbc_tree_of_interval(nt, a, b))
        throw std::invalid_argument("input is not an NBC tree of the interval selection");
    PlaneTree out = invert_left_family({nt.vertices, nt.edges}, nt.height, arity, true);
    if (!is_sllks(out)) throw std::runtime_error("inverse produced a non-semi-local tree");
    return out;
}

PlaneTree nbc_to_rlbs(const NbcTree& nt) {
    if (!is_nbc_tree_of_interval(nt, 1, 1))
        throw std::invalid_argument("input is not a Linial NBC tree");
    return to_rlbs({nt.vertices, nt.edges}, nt.height);
}

NbcTree rlbs_to_nbc(const PlaneTree& t) {
    if (!is_rlbs(t)) throw std::invalid_argument("input is not a right tree");
    RlbsImage image = from_rlbs(t);
    return make_nbc_tree(std::move(image.vertices), std::move(image.edges));
}

PlaneTree nbc_to_llbs_by_subcorners(const NbcTree& nt) {
    if (!is_nbc_tree_of_interval(nt, 1, 1))
        throw std::invalid_argument("input is not a Linial NBC tree");
    if (nt.vertices.size() == 1) return singleton_tree(nt.vertices.front(), 2);
    Part part{nt.vertices, nt.edges};
    auto comps = split_at(part, nt.corner);
    std::vector<PlaneTree> subs;
    for (const auto& [comp, attach] : comps) subs.push_back(to_rlbs(comp, nt.height));
    std::sort(subs.begin(), subs.end(),
              [](const PlaneTree& a, const PlaneTree& b) { return a.root > b.root; });
    PlaneTree out = singleton_tree(nt.corner, 2);
    int hang_on = nt.corner;
    for (const auto& sub : subs) {
        out.children[{hang_on, 1}] = sub.root;
        for (int v : sub.labels) out.labels.insert(v);
        for (const auto& [key, child] : sub.children) out.children[key] = child;
        hang_on = sub.root;
    }
    if (!is_llbs(out)) throw std::runtime_error("inverse produced a non-left tree");
    return out;
}

NbcTree llbs_by_subcorners_to_nbc(const PlaneTree& t) {
    if (!is_llbs(t)) throw std::invalid_argument("input is not a left binary tree");
    const int r = t.root;
    EdgeSet edges;
    for (const auto& piece : chain_pieces(t, t.child(r, 1), 1)) {
        RlbsImage sub = from_rlbs(piece);
        edges.insert(edges.end(), sub.edges.begin(), sub.edges.end());
        edges.push_back(linial_edge(r, r > sub.corner ? sub.corner : sub.subcorner));
    }
    return make_nbc_tree({t.labels.begin(), t.labels.end()}, std::move(edges));
}

namespace {

NbcForest forest_via(const PlaneTree& t,
                     NbcTree (*piece_map)(const PlaneTree&, BijectionTrace*)) {
    NbcForest out;
    out.vertices.assign(t.labels.begin(), t.labels.end());
    for (const auto& piece : chain_pieces(t, t.root, t.arity)) {
        NbcTree sub = piece_map(piece, nullptr);
        out.edges.insert(out.edges.end(), sub.edges.begin(), sub.edges.end());
    }
    out.edges = normalize_edge_set(std::move(out.edges));
    return out;
}

PlaneTree forest_back(const NbcForest& f, int arity,
                      PlaneTree (*piece_map)(const NbcTree&, int)) {
    std::vector<PlaneTree> pieces;
    for (const auto& comp : forest_components(f.vertices, f.edges)) {
        std::set<int> keep(comp.begin(), comp.end());
        EdgeSet comp_edges;
        for (const auto& e : f.edges)
            if (keep.count(e.tail)) comp_edges.push_back(e);
        pieces.push_back(piece_map(make_nbc_tree(comp, std::move(comp_edges)), arity));
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const PlaneTree& a, const PlaneTree& b) { return a.root < b.root; });
    PlaneTree out = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        out.children[{pieces[i - 1].root, arity}] = pieces[i].root;
        for (int v : pieces[i].labels) out.labels.insert(v);
        for (const auto& [key, child] : pieces[i].children) out.children[key] = child;
    }
    return out;
}

}  // namespace

NbcForest lks_to_nbc_forest(const PlaneTree& t) {
    if (!is_lks(t)) throw std::invalid_argument("input is not a local search tree");
    return forest_via(t, &llks_to_nbc);
}

PlaneTree nbc_forest_to_lks(const NbcForest& f, int arity) {
    return forest_back(f, arity, &nbc_to_llks);
}

NbcForest slks_to_nbc_forest(const PlaneTree& t) {
    if (!is_slks(t)) throw std::invalid_argument("input is not a semi-local search tree");
    return forest_via(t, &sllks_to_nbc);
}

PlaneTree nbc_forest_to_slks(const NbcForest& f, int arity) {
    return forest_back(f, arity, &nbc_to_sllks);
}

NbcForest lbs_to_nbc_forest(const PlaneTree& t) {
    if (t.arity != 2) throw std::invalid_argument("expected a binary tree");
    return lks_to_nbc_forest(t);
}

PlaneTree nbc_forest_to_lbs(const NbcForest& f) { return nbc_forest_to_lks(f, 2); }

}  // namespace gainforest
