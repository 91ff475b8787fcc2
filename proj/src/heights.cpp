#include "gainforest/heights.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace gainforest {

int HeightFunction::level(int v) const {
    auto it = levels.find(v);
    if (it == levels.end()) throw std::invalid_argument("height undefined on vertex");
    return it->second;
}

std::vector<int> HeightFunction::domain() const {
    std::vector<int> out;
    out.reserve(levels.size());
    for (const auto& [v, _] : levels) out.push_back(v);
    return out;
}

HeightFunction make_height_function(std::map<int, int> levels) {
    if (levels.empty()) throw std::invalid_argument("empty height function");
    int lo = std::numeric_limits<int>::max();
    for (const auto& [_, l] : levels) {
        if (l < 0) throw std::invalid_argument("levels must be non-negative");
        lo = std::min(lo, l);
    }
    if (lo != 0) throw std::invalid_argument("level 0 must be occupied");
    return HeightFunction{std::move(levels)};
}

HeightFunction normalize_levels(std::map<int, long long> levels) {
    if (levels.empty()) throw std::invalid_argument("empty height function");
    long long lo = std::numeric_limits<long long>::max();
    for (const auto& [_, l] : levels) lo = std::min(lo, l);
    std::map<int, int> shifted;
    for (const auto& [v, l] : levels) shifted[v] = static_cast<int>(l - lo);
    return HeightFunction{std::move(shifted)};
}

bool oh_less(const HeightFunction& h, int u, int v) {
    int hu = h.level(u), hv = h.level(v);
    return hu > hv || (hu == hv && u < v);
}

bool oh_edge_less(const HeightFunction& h, const GainEdge& a, const GainEdge& b) {
    auto key = [&](const GainEdge& e) {
        int x = e.tail, y = e.head;
        if (oh_less(h, y, x)) std::swap(x, y);
        return std::pair{x, y};
    };
    auto [a1, a2] = key(a);
    auto [b1, b2] = key(b);
    if (a1 != b1) return oh_less(h, a1, b1);
    if (a2 != b2) return oh_less(h, a2, b2);
    return canonical(a) < canonical(b);
}

int corner(const HeightFunction& h) { return corner(h, h.domain()); }

int corner(const HeightFunction& h, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("corner of an empty set");
    int best = subset.front();
    for (int v : subset)
        if (oh_less(h, v, best)) best = v;
    return best;
}

bool is_coherent(const GainEdge& e, const HeightFunction& h) {
    const GainEdge c = canonical(e);
    return h.level(c.head) - h.level(c.tail) == c.gain;
}

GainGraph select_coherent_subgraph(const GainGraph& g, const HeightFunction& h) {
    for (int v : g.vertices)
        if (!h.contains(v)) throw std::invalid_argument("height undefined on a graph vertex");
    EdgeSet kept;
    for (const auto& e : g.edges)
        if (is_coherent(e, h)) kept.push_back(e);
    return make_gain_graph(g.vertices, std::move(kept));
}

HeightFunction height_from_balanced(const GainGraph& g) {
    return height_from_balanced(g.vertices, g.edges);
}

HeightFunction height_from_balanced(const std::vector<int>& vertices, const EdgeSet& edges) {
    if (vertices.empty()) throw std::invalid_argument("empty vertex set");
    std::map<int, std::vector<GainEdge>> adj;
    for (const auto& e : edges) {
        adj[e.tail].push_back(e);
        adj[e.head].push_back(reorient(e));
    }
    std::map<int, long long> potential;
    potential[vertices.front()] = 0;
    std::vector<int> stack{vertices.front()};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        auto it = adj.find(u);
        if (it == adj.end()) continue;
        for (const auto& e : it->second) {
            long long want = potential[u] + e.gain;
            auto [pos, inserted] = potential.emplace(e.head, want);
            if (inserted)
                stack.push_back(e.head);
            else if (pos->second != want)
                throw std::invalid_argument("unbalanced edge set has no height function");
        }
    }
    if (potential.size() != vertices.size())
        throw std::invalid_argument("disconnected edge set has no single height function");
    return normalize_levels(std::move(potential));
}

int subcorner(const HeightFunction& h, const GainGraph& sel) {
    const int c = corner(h, sel.vertices);
    if (sel.vertex_count() == 1) return c;
    bool found = false;
    int best = 0;
    for (const auto& e : sel.edges) {
        int other;
        if (e.tail == c)
            other = e.head;
        else if (e.head == c)
            other = e.tail;
        else
            continue;
        if (!found || oh_less(h, other, best)) {
            best = other;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("corner is isolated; no subcorner");
    return best;
}

std::vector<HeightFunction> enumerate_coherent_heights(const GainGraph& g) {
    if (!is_connected(g.vertices, g.edges))
        throw std::invalid_argument("coherent heights require a connected graph");
    const int n = g.vertex_count();
    const int bound = (n - 1) * max_abs_gain(g);
    std::vector<HeightFunction> out;
    std::vector<int> levels(n, 0);
    while (true) {
        if (std::find(levels.begin(), levels.end(), 0) != levels.end()) {
            std::map<int, int> m;
            for (int i = 0; i < n; ++i) m[g.vertices[i]] = levels[i];
            HeightFunction h{std::move(m)};
            GainGraph sel = select_coherent_subgraph(g, h);
            if (is_connected(sel.vertices, sel.edges)) out.push_back(std::move(h));
        }
        int i = n - 1;
        while (i >= 0 && levels[i] == bound) levels[i--] = 0;
        if (i < 0) break;
        ++levels[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

int EdgeOrder::rank(const GainEdge& e) const {
    auto it = index.find(canonical(e));
    if (it == index.end()) throw std::invalid_argument("edge not covered by the order");
    return it->second;
}

EdgeOrder make_edge_order(std::vector<GainEdge> ranked) {
    EdgeOrder ord;
    ord.ranked = std::move(ranked);
    for (std::size_t i = 0; i < ord.ranked.size(); ++i) {
        ord.ranked[i] = canonical(ord.ranked[i]);
        if (!ord.index.emplace(ord.ranked[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate edge in order");
    }
    return ord;
}

EdgeOrder canonical_edge_order(const GainGraph& g) { return make_edge_order(g.edges); }

EdgeOrder height_edge_order(const GainGraph& g, const HeightFunction& h) {
    std::vector<GainEdge> ranked = g.edges;
    std::sort(ranked.begin(), ranked.end(),
              [&](const GainEdge& a, const GainEdge& b) { return oh_edge_less(h, a, b); });
    return make_edge_order(std::move(ranked));
}

EdgeOrder seeded_edge_order(const GainGraph& g, std::uint64_t seed) {
    std::vector<GainEdge> ranked = g.edges;
    std::mt19937_64 rng(seed);
    std::shuffle(ranked.begin(), ranked.end(), rng);
    return make_edge_order(std::move(ranked));
}

}  // namespace gainforest
