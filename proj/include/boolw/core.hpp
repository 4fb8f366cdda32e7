#pragma once

// Graph representation, vertex-set algebra and graph file I/O. Everything
// else in the library is built on top of these types. Vertices are dense
// 0-based indices; graphs are immutable once constructed and safe to share
// across threads.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boolw {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an exact computation would exceed its configured cap.
// Carries how far the computation got, and the offending decomposition
// edge when the caller was iterating over cuts.
class BoundedResourceError : public std::runtime_error {
public:
    BoundedResourceError(const std::string & what, std::uint64_t partial, int edge = -1) :
        std::runtime_error(what),
        partial_count(partial),
        edge_index(edge)
    {
    }

    std::uint64_t partial_count;
    int edge_index;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Set of vertices out of a fixed universe 0..n-1, stored as 64-bit words.
// Iteration is always in ascending vertex order.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) :
        universe_(universe),
        words_((universe + 63) / 64, 0)
    {
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto & w : s.words_)
            w = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members)
            s.set(v);
        return s;
    }

    int universe() const { return universe_; }

    bool test(int v) const {
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void set(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_)
            c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    VertexSet & operator|=(const VertexSet & o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet & operator&=(const VertexSet & o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    // Set difference.
    VertexSet & operator-=(const VertexSet & o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    // Symmetric difference.
    VertexSet & operator^=(const VertexSet & o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool intersects(const VertexSet & o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet & o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    int intersection_count(const VertexSet & o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }

    bool operator==(const VertexSet & o) const = default;

    template <typename F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                f(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return h;
    }

    const std::vector<std::uint64_t> & words() const { return words_; }

private:
    void trim() {
        if (universe_ % 64 != 0 && ! words_.empty())
            words_.back() &= (1ULL << (universe_ % 64)) - 1;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet & s) const { return std::size_t(s.hash()); }
};

// Simple undirected graph: adjacency row v holds N(v). Rows stay symmetric
// and irreflexive by construction.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    Graph() = default;

    explicit Graph(int n_) :
        n(n_),
        adj(n_, VertexSet(n_))
    {
    }

    bool adjacent(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }

    VertexSet vertices() const { return VertexSet::full(n); }

    bool operator==(const Graph & o) const = default;
};

using WeightVector = std::vector<std::int64_t>;

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>> & edges) {
    if (n < 0)
        throw InputError("vertex count must be non-negative");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
    return g;
}

inline Graph complement(const Graph & g) {
    Graph c(g.n);
    for (int v = 0; v < g.n; ++v) {
        c.adj[v] = g.adj[v].complement();
        c.adj[v].reset(v);
    }
    return c;
}

// restrict ∩ union of N(x) over x in X.
inline VertexSet neighborhood_of_set(const Graph & g, const VertexSet & x, const VertexSet & restrict_to) {
    VertexSet acc(g.n);
    x.for_each([&](int v) { acc |= g.adj[v]; });
    return acc & restrict_to;
}

// --- graph file format -------------------------------------------------
//
//   # comment
//   graph <n>
//   e <u> <v>
//
// 0-based endpoints. Serialization emits edges with u < v in ascending
// lexicographic order, so output is byte-for-byte reproducible.

inline Graph parse_graph(std::istream & in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "graph") {
            if (n != -1)
                throw InputError("duplicate graph header");
            if (! (ls >> n) || n < 0)
                throw InputError("bad graph header: " + line);
        }
        else if (tag == "e") {
            if (n == -1)
                throw InputError("edge before graph header");
            int u, v;
            if (! (ls >> u >> v))
                throw InputError("bad edge line: " + line);
            edges.emplace_back(u, v);
        }
        else
            throw InputError("unrecognised line: " + line);
    }
    if (n == -1)
        throw InputError("missing graph header");
    return graph_from_edges(n, edges);
}

inline Graph parse_graph(const std::string & text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void serialize_graph(const Graph & g, std::ostream & out) {
    out << "graph " << g.n << '\n';
    for (int u = 0; u < g.n; ++u)
        g.adj[u].for_each([&](int v) {
            if (u < v)
                out << "e " << u << ' ' << v << '\n';
        });
}

inline std::string serialize_graph(const Graph & g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

// Weights file: n whitespace-separated non-negative integers, vertex order.
inline WeightVector parse_weights(std::istream & in, int n) {
    WeightVector w;
    std::int64_t x;
    while (in >> x) {
        if (x < 0)
            throw InputError("weights must be non-negative");
        w.push_back(x);
    }
    if (int(w.size()) != n)
        throw InputError("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
    return w;
}

} // namespace boolw
