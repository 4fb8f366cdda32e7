#pragma once

// Decomposition trees and their cut functions. A decomposition tree is an
// unrooted tree whose internal nodes have degree three and whose leaves are
// in bijection with the graph vertices; every tree edge induces a cut
// {A, complement(A)}. cut_bool counts the distinct external neighbourhoods
// of one side by union closure, cut_rank is the GF(2) rank of the bipartite
// adjacency matrix across the cut.

#include <boolw/core.hpp>

#include <atomic>
#include <cmath>
#include <future>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace boolw {

inline constexpr std::uint64_t default_cut_bool_cap = 1ULL << 20;

struct DecompositionTree {
    // Node adjacency; leaf_vertex[x] is the graph vertex mapped to leaf x,
    // -1 for internal nodes.
    std::vector<std::vector<int>> adj;
    std::vector<int> leaf_vertex;
    int n_vertices = 0;

    int node_count() const { return int(adj.size()); }

    int leaf_node_of(int vertex) const {
        for (int x = 0; x < node_count(); ++x)
            if (leaf_vertex[x] == vertex)
                return x;
        throw InternalError("vertex has no leaf");
    }

    void validate() const {
        if (n_vertices <= 0)
            throw InputError("decomposition tree needs at least one leaf");
        std::vector<char> seen(n_vertices, 0);
        int leaves = 0;
        for (int x = 0; x < node_count(); ++x) {
            int deg = int(adj[x].size());
            if (leaf_vertex[x] >= 0) {
                ++leaves;
                int v = leaf_vertex[x];
                if (v >= n_vertices || seen[v])
                    throw InputError("leaf labelling is not a bijection");
                seen[v] = 1;
                if (node_count() > 1 && deg != 1)
                    throw InputError("leaf of degree != 1");
            }
            else if (deg != 3)
                throw InputError("internal node of degree != 3");
        }
        if (leaves != n_vertices)
            throw InputError("leaf count does not match vertex count");
    }
};

// Tree edges in a canonical order: (min node id, max node id), sorted.
struct TreeEdge {
    int a, b;
    bool operator==(const TreeEdge &) const = default;
};

inline std::vector<TreeEdge> edges_of(const DecompositionTree & t) {
    std::vector<TreeEdge> out;
    for (int x = 0; x < t.node_count(); ++x)
        for (int y : t.adj[x])
            if (x < y)
                out.push_back({x, y});
    std::sort(out.begin(), out.end(), [](const TreeEdge & e, const TreeEdge & f) {
        return e.a != f.a ? e.a < f.a : e.b < f.b;
    });
    return out;
}

struct Cut {
    VertexSet a;
    int edge_index;
};

namespace detail {
    // Vertices mapped below node `from` when approached from `towards`.
    inline void collect_side(const DecompositionTree & t, int from, int towards, VertexSet & acc) {
        if (t.leaf_vertex[from] >= 0)
            acc.set(t.leaf_vertex[from]);
        for (int y : t.adj[from])
            if (y != towards)
                collect_side(t, y, from, acc);
    }
}

// One cut per tree edge. A is the side not containing the leaf of vertex 0.
inline std::vector<Cut> cuts_of(const DecompositionTree & t) {
    auto edges = edges_of(t);
    std::vector<Cut> cuts;
    cuts.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        VertexSet side(t.n_vertices);
        detail::collect_side(t, edges[i].a, edges[i].b, side);
        if (side.test(0))
            side = side.complement();
        cuts.push_back({std::move(side), int(i)});
    }
    return cuts;
}

// Caterpillar tree whose edge cuts are exactly the singletons and the
// prefixes of the given vertex order.
inline DecompositionTree caterpillar_from_order(const std::vector<int> & order) {
    int n = int(order.size());
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw InputError("order is not a permutation of 0..n-1");
        seen[v] = 1;
    }
    DecompositionTree t;
    t.n_vertices = n;
    auto add_node = [&](int vertex) {
        t.adj.emplace_back();
        t.leaf_vertex.push_back(vertex);
        return t.node_count() - 1;
    };
    auto link = [&](int x, int y) {
        t.adj[x].push_back(y);
        t.adj[y].push_back(x);
    };
    if (n == 0)
        throw InputError("empty order");
    if (n == 1) {
        add_node(order[0]);
        return t;
    }
    if (n == 2) {
        link(add_node(order[0]), add_node(order[1]));
        return t;
    }
    int prev = add_node(-1);
    link(prev, add_node(order[0]));
    link(prev, add_node(order[1]));
    for (int i = 2; i + 2 <= n; ++i) {
        int s = add_node(-1);
        link(prev, s);
        link(s, add_node(order[i]));
        prev = s;
    }
    link(prev, add_node(order[n - 1]));
    return t;
}

// Random tree via repeated subdivision of a uniformly chosen edge;
// deterministic for a fixed seed.
inline DecompositionTree random_decomposition(int n, std::uint64_t seed) {
    if (n < 1)
        throw InputError("need n >= 1");
    std::mt19937_64 rng(seed);
    DecompositionTree t;
    t.n_vertices = n;
    t.adj.assign(1, {});
    t.leaf_vertex.assign(1, 0);
    if (n == 1)
        return t;
    t.adj.push_back({});
    t.leaf_vertex.push_back(1);
    t.adj[0].push_back(1);
    t.adj[1].push_back(0);
    for (int v = 2; v < n; ++v) {
        auto edges = edges_of(t);
        auto [a, b] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
        int mid = t.node_count();
        t.adj.push_back({});
        t.leaf_vertex.push_back(-1);
        int leaf = t.node_count();
        t.adj.push_back({});
        t.leaf_vertex.push_back(v);
        std::replace(t.adj[a].begin(), t.adj[a].end(), b, mid);
        std::replace(t.adj[b].begin(), t.adj[b].end(), a, mid);
        t.adj[mid] = {a, b, leaf};
        t.adj[leaf] = {mid};
    }
    return t;
}

// Middle vertices m(A): boundary of A with duplicate external
// neighbourhoods collapsed, keeping the smallest index of each group.
inline VertexSet middle_vertices(const Graph & g, const VertexSet & a) {
    VertexSet a_bar = a.complement();
    VertexSet out(g.n);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    a.for_each([&](int v) {
        VertexSet ext = g.adj[v] & a_bar;
        if (! ext.empty() && seen.insert(ext).second)
            out.set(v);
    });
    return out;
}

struct CutBool {
    std::uint64_t classes;
    double bits;
};

// Number of distinct sets complement(A) ∩ N(X) over X ⊆ A, computed by
// closing the deduplicated generator rows under union. Throws
// BoundedResourceError when the closure would exceed `cap` members.
inline CutBool cut_bool(const Graph & g, const VertexSet & a, std::uint64_t cap = default_cut_bool_cap) {
    VertexSet a_bar = a.complement();
    std::vector<VertexSet> gens;
    middle_vertices(g, a).for_each([&](int v) { gens.push_back(g.adj[v] & a_bar); });

    std::vector<VertexSet> closure;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    closure.push_back(VertexSet(g.n));
    seen.insert(closure.front());
    for (std::size_t i = 0; i < closure.size(); ++i) {
        VertexSet base = closure[i];
        for (const auto & gen : gens) {
            VertexSet u = base | gen;
            if (seen.insert(u).second) {
                if (closure.size() + 1 > cap)
                    throw BoundedResourceError("cut_bool closure exceeds cap", closure.size() + 1);
                closure.push_back(std::move(u));
            }
        }
    }
    auto classes = std::uint64_t(closure.size());
    return {classes, std::log2(double(classes))};
}

// GF(2) rank of the A x complement(A) bipartite adjacency matrix.
inline int cut_rank(const Graph & g, const VertexSet & a) {
    VertexSet a_bar = a.complement();
    std::vector<VertexSet> basis;
    std::vector<int> pivot;
    int rank = 0;
    a.for_each([&](int v) {
        VertexSet row = g.adj[v] & a_bar;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (row.test(pivot[i]))
                row ^= basis[i];
        int p = row.first();
        if (p >= 0) {
            basis.push_back(std::move(row));
            pivot.push_back(p);
            ++rank;
        }
    });
    return rank;
}

enum class WidthMeasure {
    boolean,
    rank
};

struct WidthResult {
    WidthMeasure measure;
    std::uint64_t max_classes = 1; // boolean measure: class count at the widest cut
    double bits = 0.0;
    int max_rank = 0;              // rank measure
    int argmax_edge = -1;
};

// Maximum of the chosen cut function over all cuts of the tree. With
// jobs > 1 cuts are evaluated concurrently (they are pure and independent).
inline WidthResult tree_width_of(const Graph & g, const DecompositionTree & t, WidthMeasure measure,
    std::uint64_t cap = default_cut_bool_cap, int jobs = 1) {
    t.validate();
    if (t.n_vertices != g.n)
        throw InputError("tree leaf count does not match graph");
    auto cuts = cuts_of(t);
    WidthResult r;
    r.measure = measure;

    struct Eval {
        std::uint64_t classes;
        int rank;
    };
    auto eval = [&](const Cut & c) -> Eval {
        if (c.a.empty() || c.a.count() == g.n)
            return {1, 0};
        if (measure == WidthMeasure::boolean) {
            try {
                return {cut_bool(g, c.a, cap).classes, 0};
            }
            catch (const BoundedResourceError & e) {
                throw BoundedResourceError(std::string(e.what()) + " at edge " + std::to_string(c.edge_index),
                    e.partial_count, c.edge_index);
            }
        }
        return {0, cut_rank(g, c.a)};
    };

    std::vector<Eval> results(cuts.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cuts.size(); ++i)
            results[i] = eval(cuts[i]);
    }
    else {
        std::vector<std::future<void>> workers;
        std::atomic<std::size_t> next{0};
        workers.reserve(jobs);
        for (int j = 0; j < jobs; ++j)
            workers.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next++; i < cuts.size(); i = next++)
                    results[i] = eval(cuts[i]);
            }));
        for (auto & w : workers)
            w.get();
    }

    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (measure == WidthMeasure::boolean && results[i].classes > r.max_classes) {
            r.max_classes = results[i].classes;
            r.argmax_edge = cuts[i].edge_index;
        }
        if (measure == WidthMeasure::rank && results[i].rank > r.max_rank) {
            r.max_rank = results[i].rank;
            r.argmax_edge = cuts[i].edge_index;
        }
    }
    r.bits = std::log2(double(r.max_classes));
    return r;
}

// Tree rooted by subdividing one edge; every node carries the vertex set
// mapped below it.
struct RootedDecomposition {
    struct Node {
        int parent = -1;
        int left = -1;
        int right = -1;
        int leaf_vertex = -1;
        VertexSet below;
    };

    std::vector<Node> nodes;
    int root = -1;
    int n_vertices = 0;

    bool is_leaf(int w) const { return nodes[w].left < 0; }

    // Children before parents.
    std::vector<int> postorder() const {
        std::vector<int> order, stack{root};
        while (! stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            order.push_back(w);
            if (! is_leaf(w)) {
                stack.push_back(nodes[w].left);
                stack.push_back(nodes[w].right);
            }
        }
        std::reverse(order.begin(), order.end());
        return order;
    }
};

inline RootedDecomposition root_at_edge(const DecompositionTree & t, int edge_index) {
    t.validate();
    RootedDecomposition r;
    r.n_vertices = t.n_vertices;
    if (t.n_vertices == 1) {
        r.nodes.resize(1);
        r.nodes[0].leaf_vertex = t.leaf_vertex[0];
        r.nodes[0].below = VertexSet::of(1, {t.leaf_vertex[0]});
        r.root = 0;
        return r;
    }
    auto edges = edges_of(t);
    if (edge_index < 0 || edge_index >= int(edges.size()))
        throw InputError("edge index out of range");
    auto [ea, eb] = edges[edge_index];

    r.nodes.resize(t.node_count() + 1);
    r.root = t.node_count();
    auto build = [&](auto && self, int node, int parent_node, int rooted_parent) -> void {
        r.nodes[node].parent = rooted_parent;
        r.nodes[node].leaf_vertex = t.leaf_vertex[node];
        r.nodes[node].below = VertexSet(t.n_vertices);
        if (t.leaf_vertex[node] >= 0)
            r.nodes[node].below.set(t.leaf_vertex[node]);
        int slot = 0;
        for (int y : t.adj[node])
            if (y != parent_node) {
                (slot++ == 0 ? r.nodes[node].left : r.nodes[node].right) = y;
                self(self, y, node, node);
                r.nodes[node].below |= r.nodes[y].below;
            }
    };
    build(build, ea, eb, r.root);
    build(build, eb, ea, r.root);
    r.nodes[r.root].left = ea;
    r.nodes[r.root].right = eb;
    r.nodes[r.root].below = r.nodes[ea].below | r.nodes[eb].below;
    return r;
}

// --- decomposition file format ------------------------------------------
//
// Rooted parenthesised form over leaf labels, e.g. (0,(1,(2,3))); the
// unrooted tree is recovered by smoothing the degree-2 parse root.

namespace detail {
    inline int parse_decomp_node(const std::string & s, std::size_t & pos, DecompositionTree & t,
        std::vector<std::pair<int, int>> & links) {
        auto fail = [&]() { throw InputError("bad decomposition syntax near position " + std::to_string(pos)); };
        if (pos >= s.size())
            fail();
        if (s[pos] == '(') {
            ++pos;
            int left = parse_decomp_node(s, pos, t, links);
            if (pos >= s.size() || s[pos] != ',')
                fail();
            ++pos;
            int right = parse_decomp_node(s, pos, t, links);
            if (pos >= s.size() || s[pos] != ')')
                fail();
            ++pos;
            t.adj.emplace_back();
            t.leaf_vertex.push_back(-1);
            int me = t.node_count() - 1;
            links.emplace_back(me, left);
            links.emplace_back(me, right);
            return me;
        }
        if (! std::isdigit(static_cast<unsigned char>(s[pos])))
            fail();
        int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        t.adj.emplace_back();
        t.leaf_vertex.push_back(v);
        return t.node_count() - 1;
    }
}

inline DecompositionTree parse_decomposition(const std::string & text) {
    std::string s;
    for (char c : text)
        if (! std::isspace(static_cast<unsigned char>(c)))
            s += c;
    DecompositionTree t;
    std::vector<std::pair<int, int>> links;
    std::size_t pos = 0;
    int root = detail::parse_decomp_node(s, pos, t, links);
    if (pos != s.size())
        throw InputError("trailing characters in decomposition");
    for (auto [x, y] : links) {
        t.adj[x].push_back(y);
        t.adj[y].push_back(x);
    }
    // Smooth the parse root: it has degree 2 unless the tree is a single leaf.
    if (t.adj[root].size() == 2) {
        int x = t.adj[root][0], y = t.adj[root][1];
        std::replace(t.adj[x].begin(), t.adj[x].end(), root, y);
        std::replace(t.adj[y].begin(), t.adj[y].end(), root, x);
        t.adj[root].clear();
        // Drop the smoothed node by swapping the last node into its slot.
        int last = t.node_count() - 1;
        if (root != last) {
            t.adj[root] = std::move(t.adj[last]);
            t.leaf_vertex[root] = t.leaf_vertex[last];
            for (int z : t.adj[root])
                std::replace(t.adj[z].begin(), t.adj[z].end(), last, root);
        }
        t.adj.pop_back();
        t.leaf_vertex.pop_back();
    }
    int n = 0;
    for (int x = 0; x < t.node_count(); ++x)
        n += t.leaf_vertex[x] >= 0;
    t.n_vertices = n;
    t.validate();
    return t;
}

inline std::string serialize_decomposition(const DecompositionTree & t) {
    t.validate();
    if (t.n_vertices == 1)
        return std::to_string(t.leaf_vertex[0]);
    // Root at the edge incident to the leaf of vertex 0; order children by
    // their smallest leaf label. Output is canonical for a given tree.
    int start = t.leaf_node_of(0);
    auto min_leaf = [&](auto && self, int node, int parent) -> int {
        if (t.leaf_vertex[node] >= 0)
            return t.leaf_vertex[node];
        int best = t.n_vertices;
        for (int y : t.adj[node])
            if (y != parent)
                best = std::min(best, self(self, y, node));
        return best;
    };
    auto print = [&](auto && self, int node, int parent) -> std::string {
        if (t.leaf_vertex[node] >= 0)
            return std::to_string(t.leaf_vertex[node]);
        std::vector<int> kids;
        for (int y : t.adj[node])
            if (y != parent)
                kids.push_back(y);
        if (min_leaf(min_leaf, kids[0], node) > min_leaf(min_leaf, kids[1], node))
            std::swap(kids[0], kids[1]);
        return "(" + self(self, kids[0], node) + "," + self(self, kids[1], node) + ")";
    };
    return "(" + std::to_string(0) + "," + print(print, t.adj[start][0], start) + ")";
}

} // namespace boolw
