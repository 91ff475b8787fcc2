#include "gainforest/nbc.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace gainforest {

std::vector<EdgeSet> broken_circuits(const GainGraph& g, const EdgeOrder& ord) {
    std::set<EdgeSet> seen;
    for (const auto& circle : enumerate_balanced_circles(g)) {
        EdgeSet edges = normalize_edge_set(circle.edges);
        auto smallest = std::min_element(edges.begin(), edges.end(),
                                         [&](const GainEdge& a, const GainEdge& b) {
                                             return ord.rank(a) < ord.rank(b);
                                         });
        edges.erase(smallest);
        seen.insert(std::move(edges));
    }
    return {seen.begin(), seen.end()};
}

namespace {

struct VertexDsu {
    std::map<int, int> parent;
    int find(int v) {
        if (!parent.count(v)) parent[v] = v;
        int r = v;
        while (parent[r] != r) r = parent[r];
        while (parent[v] != r) {
            int next = parent[v];
            parent[v] = r;
            v = next;
        }
        return r;
    }
    bool unite(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
        return true;
    }
};

bool is_forest(const EdgeSet& s) {
    VertexDsu dsu;
    for (const auto& e : s)
        if (!dsu.unite(e.tail, e.head)) return false;
    return true;
}

// Shared state for the subset-growth enumeration over edges in rank order.
struct NbcSearch {
    const GainGraph& g;
    const EdgeOrder& ord;
    std::vector<std::vector<std::uint64_t>> buckets;  // broken circuits by largest rank

    NbcSearch(const GainGraph& g_, const EdgeOrder& ord_) : g(g_), ord(ord_) {
        if (ord.size() != g.edges.size())
            throw std::invalid_argument("edge order does not match the graph");
        if (ord.size() > 63) throw std::invalid_argument("graph too large for NBC enumeration");
        buckets.resize(ord.size());
        for (const auto& bc : broken_circuits(g, ord)) {
            std::uint64_t mask = 0;
            int max_rank = -1;
            for (const auto& e : bc) {
                int r = ord.rank(e);
                mask |= std::uint64_t{1} << r;
                max_rank = std::max(max_rank, r);
            }
            if (max_rank >= 0) buckets[max_rank].push_back(mask);
        }
    }

    template <typename Visit>
    void run(Visit&& visit) const {
        std::vector<int> chosen;
        VertexDsu dsu;
        for (int v : g.vertices) dsu.find(v);
        grow(0, 0, chosen, dsu, visit);
    }

  private:
    template <typename Visit>
    void grow(int from, std::uint64_t mask, std::vector<int>& chosen, VertexDsu& dsu,
              Visit&& visit) const {
        visit(chosen);
        const int m = static_cast<int>(ord.size());
        for (int r = from; r < m; ++r) {
            const GainEdge& e = ord.ranked[r];
            if (dsu.find(e.tail) == dsu.find(e.head)) continue;  // keeps forests only
            const std::uint64_t next = mask | (std::uint64_t{1} << r);
            bool broken = false;
            for (std::uint64_t bc : buckets[r])
                if ((bc & ~next) == 0) {
                    broken = true;
                    break;
                }
            if (broken) continue;
            VertexDsu saved = dsu;
            dsu.unite(e.tail, e.head);
            chosen.push_back(r);
            grow(r + 1, next, chosen, dsu, visit);
            chosen.pop_back();
            dsu = std::move(saved);
        }
    }
};

}  // namespace

bool is_nbc(const EdgeSet& s, const GainGraph& g, const EdgeOrder& ord) {
    EdgeSet edges = normalize_edge_set(s);
    for (const auto& e : edges)
        if (!g.has_edge(e)) throw std::invalid_argument("edge set is not contained in the graph");
    if (!is_forest(edges)) return false;
    for (const auto& bc : broken_circuits(g, ord))
        if (edge_set_includes(edges, bc)) return false;
    return true;
}

std::vector<EdgeSet> enumerate_nbc_sets(const GainGraph& g, const EdgeOrder& ord) {
    NbcSearch search(g, ord);
    std::vector<EdgeSet> out;
    search.run([&](const std::vector<int>& chosen) {
        EdgeSet s;
        s.reserve(chosen.size());
        for (int r : chosen) s.push_back(ord.ranked[r]);
        out.push_back(normalize_edge_set(std::move(s)));
    });
    return out;
}

long long count_nbc_sets(const GainGraph& g, const EdgeOrder& ord) {
    NbcSearch search(g, ord);
    long long n = 0;
    search.run([&](const std::vector<int>&) { ++n; });
    return n;
}

std::vector<std::vector<int>> forest_components(const std::vector<int>& vertices,
                                                const EdgeSet& edges) {
    VertexDsu dsu;
    for (int v : vertices) dsu.find(v);
    for (const auto& e : edges) dsu.unite(e.tail, e.head);
    std::map<int, std::vector<int>> by_root;
    for (int v : vertices) by_root[dsu.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [_, comp] : by_root) {
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

NbcTree make_nbc_tree(std::vector<int> vertices, EdgeSet edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    edges = normalize_edge_set(std::move(edges));
    if (edges.size() + 1 != vertices.size())
        throw std::invalid_argument("not a spanning tree: wrong edge count");
    if (!is_connected(vertices, edges)) throw std::invalid_argument("not a spanning tree");
    NbcTree t;
    t.height = height_from_balanced(vertices, edges);
    t.corner = corner(t.height, vertices);
    t.vertices = std::move(vertices);
    t.edges = std::move(edges);
    return t;
}

int tree_subcorner(const NbcTree& t) {
    if (t.vertices.size() == 1) return t.corner;
    bool found = false;
    int best = 0;
    for (const auto& e : t.edges) {
        int other;
        if (e.tail == t.corner)
            other = e.head;
        else if (e.head == t.corner)
            other = e.tail;
        else
            continue;
        if (!found || oh_less(t.height, other, best)) {
            best = other;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("corner is isolated; no subcorner");
    return best;
}

std::vector<NbcTree> enumerate_nbc_trees(const GainGraph& sel, const HeightFunction& h) {
    if (!is_connected(sel.vertices, sel.edges))
        throw std::invalid_argument("NBC trees need a connected selection");
    const std::size_t want = sel.vertices.size() - 1;
    EdgeOrder ord = height_edge_order(sel, h);
    std::vector<NbcTree> out;
    NbcSearch search(sel, ord);
    search.run([&](const std::vector<int>& chosen) {
        if (chosen.size() != want) return;
        EdgeSet s;
        for (int r : chosen) s.push_back(ord.ranked[r]);
        out.push_back(make_nbc_tree(sel.vertices, std::move(s)));
    });
    return out;
}

bool is_nbc_tree_recursive(const EdgeSet& tree_edges, const GainGraph& sel,
                           const HeightFunction& h) {
    if (sel.vertices.size() == 1) return tree_edges.empty();
    const int c = corner(h, sel.vertices);
    std::vector<int> rest;
    for (int v : sel.vertices)
        if (v != c) rest.push_back(v);
    EdgeSet inner;
    VertexDsu dsu;
    for (int v : rest) dsu.find(v);
    std::vector<int> attachments;
    for (const auto& e : tree_edges) {
        if (e.tail == c || e.head == c)
            attachments.push_back(e.tail == c ? e.head : e.tail);
        else {
            inner.push_back(e);
            dsu.unite(e.tail, e.head);
        }
    }
    std::map<int, std::vector<int>> comp_of;
    for (int v : rest) comp_of[dsu.find(v)].push_back(v);
    std::map<int, int> attach;  // dsu root -> attachment
    for (int v : attachments) {
        int root = dsu.find(v);
        if (attach.count(root)) return false;  // two edges from c into one component: a circle
        attach[root] = v;
    }
    if (attach.size() != comp_of.size()) return false;  // not spanning
    for (auto& [root, comp] : comp_of) {
        // Attachment must be the O_h-smallest vertex of the component adjacent
        // to the corner in sel.
        bool found = false;
        int best = 0;
        for (int v : comp) {
            bool adjacent = false;
            for (const auto& e : sel.edges)
                if ((e.tail == c && e.head == v) || (e.head == c && e.tail == v)) {
                    adjacent = true;
                    break;
                }
            if (adjacent && (!found || oh_less(h, v, best))) {
                best = v;
                found = true;
            }
        }
        if (!found || attach[root] != best) return false;
        EdgeSet comp_edges;
        for (const auto& e : inner)
            if (dsu.find(e.tail) == root) comp_edges.push_back(e);
        if (!is_nbc_tree_recursive(normalize_edge_set(comp_edges), induced_subgraph(sel, comp), h))
            return false;
    }
    return true;
}

std::vector<std::pair<HeightFunction, long long>> decompose_by_height(const GainGraph& g) {
    std::vector<std::pair<HeightFunction, long long>> out;
    for (const auto& h : enumerate_coherent_heights(g)) {
        GainGraph sel = select_coherent_subgraph(g, h);
        out.emplace_back(h, static_cast<long long>(enumerate_nbc_trees(sel, h).size()));
    }
    return out;
}

long long count_nbc_spanning_trees(const GainGraph& g, const EdgeOrder& ord) {
    NbcSearch search(g, ord);
    const std::size_t want = g.vertices.size() - 1;
    long long n = 0;
    search.run([&](const std::vector<int>& chosen) {
        if (chosen.size() == want) ++n;
    });
    return n;
}

}  // namespace gainforest
