#include "gainforest/gain_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace gainforest {

GainEdge reorient(const GainEdge& e) { return GainEdge{e.head, e.tail, -e.gain}; }

GainEdge canonical(const GainEdge& e) {
    if (e.tail == e.head) throw std::invalid_argument("loops are not allowed");
    return e.tail < e.head ? e : reorient(e);
}

bool same_edge(const GainEdge& a, const GainEdge& b) { return canonical(a) == canonical(b); }

std::string to_string(const GainEdge& e) {
    const GainEdge c = canonical(e);
    return std::to_string(c.gain) + "(" + std::to_string(c.tail) + "," + std::to_string(c.head) + ")";
}

EdgeSet normalize_edge_set(EdgeSet edges) {
    for (auto& e : edges) e = canonical(e);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

bool edge_set_contains(const EdgeSet& s, const GainEdge& e) {
    return std::binary_search(s.begin(), s.end(), canonical(e));
}

bool edge_set_includes(const EdgeSet& s, const EdgeSet& subset) {
    return std::includes(s.begin(), s.end(), subset.begin(), subset.end());
}

bool GainGraph::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool GainGraph::has_edge(const GainEdge& e) const { return edge_set_contains(edges, e); }

GainGraph make_gain_graph(std::vector<int> vertices, EdgeSet edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (!vertices.empty() && vertices.front() < 1)
        throw std::invalid_argument("vertex labels must be positive");
    GainGraph g;
    g.vertices = std::move(vertices);
    g.edges = normalize_edge_set(std::move(edges));
    for (const auto& e : g.edges)
        if (!g.has_vertex(e.tail) || !g.has_vertex(e.head))
            throw std::invalid_argument("edge endpoint outside vertex set");
    return g;
}

GainGraph make_interval_gain_graph(int n, int a, int b) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<int> vertices(n);
    std::iota(vertices.begin(), vertices.end(), 1);
    return make_interval_gain_graph(std::move(vertices), a, b);
}

GainGraph make_interval_gain_graph(std::vector<int> vertices, int a, int b) {
    if (a > b) throw std::invalid_argument("need a <= b");
    if (vertices.empty()) throw std::invalid_argument("empty vertex set");
    EdgeSet edges;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            for (int g = a; g <= b; ++g) edges.push_back(GainEdge{vertices[i], vertices[j], g});
    return make_gain_graph(std::move(vertices), std::move(edges));
}

GainGraph induced_subgraph(const GainGraph& g, const std::vector<int>& keep) {
    std::set<int> kept(keep.begin(), keep.end());
    EdgeSet edges;
    for (const auto& e : g.edges)
        if (kept.count(e.tail) && kept.count(e.head)) edges.push_back(e);
    return make_gain_graph(std::vector<int>(kept.begin(), kept.end()), std::move(edges));
}

int max_abs_gain(const GainGraph& g) {
    int m = 0;
    for (const auto& e : g.edges) m = std::max(m, std::abs(e.gain));
    return m;
}

namespace {

struct Dsu {
    std::map<int, int> parent;
    explicit Dsu(const std::vector<int>& vertices) {
        for (int v : vertices) parent[v] = v;
    }
    int find(int v) {
        int r = v;
        while (parent[r] != r) r = parent[r];
        while (parent[v] != r) v = std::exchange(parent[v], r);
        return r;
    }
    // Returns false if u and v were already connected.
    bool unite(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
        return true;
    }
};

}  // namespace

bool is_connected(const std::vector<int>& vertices, const EdgeSet& edges) {
    if (vertices.empty()) return false;
    Dsu dsu(vertices);
    for (const auto& e : edges) dsu.unite(e.tail, e.head);
    const int root = dsu.find(vertices.front());
    return std::all_of(vertices.begin(), vertices.end(),
                       [&](int v) { return dsu.find(v) == root; });
}

bool is_consecutively_oriented(const Circle& c) {
    const auto& es = c.edges;
    if (es.size() < 2) return false;
    for (std::size_t i = 0; i < es.size(); ++i)
        if (es[i].head != es[(i + 1) % es.size()].tail) return false;
    // Connected and 2-regular: every vertex appears exactly once as a tail.
    std::set<int> tails;
    for (const auto& e : es) {
        if (e.tail == e.head) return false;
        if (!tails.insert(e.tail).second) return false;
    }
    if (es.size() == 2 && same_edge(es[0], es[1])) return false;  // doubled edge, not a digon
    return true;
}

long long circle_gain(const Circle& c) {
    if (!is_consecutively_oriented(c))
        throw std::invalid_argument("circle edges are not consecutively oriented");
    long long sum = 0;
    for (const auto& e : c.edges) sum += e.gain;
    return sum;
}

Circle canonical_circle(const Circle& c) {
    if (!is_consecutively_oriented(c))
        throw std::invalid_argument("circle edges are not consecutively oriented");
    const std::size_t len = c.edges.size();
    auto key = [](const Circle& x) {
        std::vector<int> k;
        for (const auto& e : x.edges) {
            k.push_back(e.tail);
            k.push_back(e.gain);
        }
        return k;
    };
    Circle best;
    std::vector<int> best_key;
    Circle forward = c;
    Circle backward;
    for (auto it = c.edges.rbegin(); it != c.edges.rend(); ++it) backward.edges.push_back(reorient(*it));
    for (const Circle* base : {&forward, &backward}) {
        for (std::size_t s = 0; s < len; ++s) {
            Circle rotated;
            for (std::size_t i = 0; i < len; ++i) rotated.edges.push_back(base->edges[(s + i) % len]);
            auto k = key(rotated);
            if (best.edges.empty() || k < best_key) {
                best = rotated;
                best_key = std::move(k);
            }
        }
    }
    return best;
}

namespace {

// All circles of the underlying multigraph, one representative per
// rotation/reflection class, in canonical order.
void collect_circles(const GainGraph& g, std::vector<Circle>& out) {
    std::map<std::pair<int, int>, std::vector<int>> gains;  // (i,j) with i<j -> gains
    for (const auto& e : g.edges) gains[{e.tail, e.head}].push_back(e.gain);

    // Digons: two parallel edges with distinct gains.
    for (const auto& [pair, gs] : gains)
        for (std::size_t i = 0; i < gs.size(); ++i)
            for (std::size_t j = i + 1; j < gs.size(); ++j) {
                Circle c;
                c.edges.push_back(GainEdge{pair.first, pair.second, gs[i]});
                c.edges.push_back(GainEdge{pair.second, pair.first, -gs[j]});
                out.push_back(canonical_circle(c));
            }

    // Simple cycles of length >= 3: vertex cycles starting at their smallest
    // vertex, second vertex smaller than the last (kills reflections), then
    // one edge choice per consecutive pair.
    const auto& vs = g.vertices;
    auto adjacent = [&](int u, int v) {
        return gains.count({std::min(u, v), std::max(u, v)}) > 0;
    };
    std::vector<int> path;
    auto expand_gains = [&](const std::vector<int>& cycle) {
        std::vector<std::vector<int>> choices;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            choices.push_back(gains.at({std::min(u, v), std::max(u, v)}));
        }
        std::vector<std::size_t> pick(cycle.size(), 0);
        while (true) {
            Circle c;
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
                int gcan = choices[i][pick[i]];
                c.edges.push_back(u < v ? GainEdge{u, v, gcan} : GainEdge{v, u, -gcan});
            }
            out.push_back(canonical_circle(c));
            std::size_t i = 0;
            while (i < cycle.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
            if (i == cycle.size()) break;
        }
    };
    std::function<void(int)> extend = [&](int start) {
        int last = path.back();
        for (int v : vs) {
            if (v <= start) continue;
            if (std::find(path.begin(), path.end(), v) != path.end()) continue;
            if (!adjacent(last, v)) continue;
            path.push_back(v);
            if (path.size() >= 3 && adjacent(v, start) && path[1] < path.back()) expand_gains(path);
            extend(start);
            path.pop_back();
        }
    };
    for (int s : vs) {
        path = {s};
        extend(s);
    }
}

}  // namespace

std::vector<Circle> enumerate_circles(const GainGraph& g) {
    std::vector<Circle> out;
    collect_circles(g, out);
    std::sort(out.begin(), out.end(), [](const Circle& a, const Circle& b) {
        return std::make_pair(a.edges.size(), a.edges) < std::make_pair(b.edges.size(), b.edges);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Circle> enumerate_balanced_circles(const GainGraph& g) {
    std::vector<Circle> out;
    for (auto& c : enumerate_circles(g))
        if (circle_gain(c) == 0) out.push_back(std::move(c));
    return out;
}

bool is_balanced(const EdgeSet& s, const GainGraph& g) {
    for (const auto& e : s)
        if (!g.has_edge(e)) throw std::invalid_argument("edge set is not contained in the graph");
    // Balanced iff gains are differences of a potential on each component.
    std::map<int, std::vector<GainEdge>> adj;
    for (const auto& e : s) {
        adj[e.tail].push_back(e);
        adj[e.head].push_back(reorient(e));
    }
    std::map<int, long long> potential;
    for (int v : g.vertices) {
        if (potential.count(v)) continue;
        potential[v] = 0;
        std::vector<int> stack{v};
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
                    return false;
            }
        }
    }
    return true;
}

}  // namespace gainforest
