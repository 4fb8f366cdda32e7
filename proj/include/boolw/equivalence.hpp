#pragma once

// d-neighbourhood equivalence machinery. Two subsets X, X' of a cut side A
// are d-neighbour equivalent when every external vertex sees the same
// number of neighbours in both, with counts >= d identified. A class table
// enumerates the classes of one side with minimum-cardinality
// representatives, found by breadth-first search over signatures; the
// signature of X records min(d, |N(v) ∩ X|) per deduplicated external
// boundary witness v, and composes under capped addition.

#include <boolw/core.hpp>
#include <boolw/decomposition.hpp>

#include <span>

namespace boolw {

inline constexpr std::uint64_t default_class_cap = 1000000;

// Finite or co-finite set of naturals, stored as its exception list. The
// empty set is allowed and acts as an always-false degree constraint.
struct FinCofinSet {
    bool cofinite = false;
    std::vector<int> exceptions; // members if finite, non-members if cofinite

    static FinCofinSet naturals() { return {true, {}}; }

    static FinCofinSet finite(std::vector<int> members) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return {false, std::move(members)};
    }

    static FinCofinSet naturals_except(std::vector<int> holes) {
        std::sort(holes.begin(), holes.end());
        holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
        return {true, std::move(holes)};
    }

    bool is_all() const { return cofinite && exceptions.empty(); }
    bool is_empty() const { return ! cofinite && exceptions.empty(); }

    // Exact membership, no truncation.
    bool contains(int x) const {
        bool listed = std::binary_search(exceptions.begin(), exceptions.end(), x);
        return cofinite ? ! listed : listed;
    }

    bool operator==(const FinCofinSet &) const = default;

    // Set syntax: N, {a,b,c}, N\{a,b,c}, {}.
    static FinCofinSet parse(const std::string & text) {
        std::string s;
        for (char c : text)
            if (! std::isspace(static_cast<unsigned char>(c)))
                s += c;
        bool cof = false;
        std::size_t pos = 0;
        if (s == "N")
            return naturals();
        if (s.rfind("N\\", 0) == 0) {
            cof = true;
            pos = 2;
        }
        if (pos >= s.size() || s[pos] != '{' || s.back() != '}')
            throw InputError("bad set syntax: " + text);
        std::vector<int> xs;
        std::string body = s.substr(pos + 1, s.size() - pos - 2);
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty())
                throw InputError("bad set syntax: " + text);
            std::size_t used = 0;
            int x = 0;
            try {
                x = std::stoi(item, &used);
            }
            catch (const std::exception &) {
                throw InputError("bad set element: " + item);
            }
            if (used != item.size() || x < 0)
                throw InputError("bad set element: " + item);
            xs.push_back(x);
        }
        return cof ? naturals_except(std::move(xs)) : finite(std::move(xs));
    }

    std::string to_string() const {
        if (is_all())
            return "N";
        std::string body = "{";
        for (std::size_t i = 0; i < exceptions.size(); ++i)
            body += (i ? "," : "") + std::to_string(exceptions[i]);
        body += "}";
        return cofinite ? "N\\" + body : body;
    }
};

// Truncation threshold of a degree constraint: 0 for N, otherwise one more
// than the point after which membership is constant. The empty set behaves
// like d = 1 (membership constantly false).
inline int d_of_set(const FinCofinSet & mu) {
    if (mu.is_all())
        return 0;
    if (mu.exceptions.empty())
        return 1; // empty set
    return 1 + mu.exceptions.back();
}

// Membership decided from a count truncated at d. Requires d >= d_of_set(mu).
inline bool member_trunc(const FinCofinSet & mu, int t, int d) {
    if (d < d_of_set(mu))
        throw InputError("truncation level below d(mu)");
    if (t < 0 || t > d)
        throw InputError("truncated count out of range");
    if (t < d)
        return mu.contains(t);
    return mu.cofinite;
}

using DSignature = std::vector<std::uint8_t>;

struct DSignatureHash {
    std::size_t operator()(const DSignature & s) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto b : s) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return std::size_t(h);
    }
};

// Enumerated d-neighbourhood classes of one cut side. Class 0 is the class
// of the empty set; representatives have minimum cardinality within their
// class.
class ClassTable {
public:
    ClassTable() = default;

    ClassTable(const Graph & g, VertexSet side, int d, std::uint64_t cap) :
        g_(&g),
        side_(std::move(side)),
        d_(d)
    {
        if (d < 1)
            throw InputError("class enumeration needs d >= 1");
        VertexSet other = side_.complement();

        // witnesses: external boundary, deduplicated by internal
        // neighbourhood, smallest index per group (= middle vertices of the
        // other side)
        middle_vertices(g, other).for_each([&](int v) { witnesses_.push_back(v); });

        col_of_vertex_.assign(g.n, -1);
        side_.for_each([&](int v) {
            if (! g.adj[v].intersects(other))
                return;
            DSignature col(witnesses_.size(), 0);
            for (std::size_t i = 0; i < witnesses_.size(); ++i)
                col[i] = g.adj[v].test(witnesses_[i]);
            col_of_vertex_[v] = int(boundary_.size());
            boundary_.push_back(v);
            columns_.push_back(std::move(col));
        });

        // BFS over signatures, increasing representative size.
        reps_.push_back(VertexSet(g.n));
        sigs_.push_back(DSignature(witnesses_.size(), 0));
        index_.emplace(sigs_[0], 0);
        for (std::size_t at = 0; at < reps_.size(); ++at) {
            VertexSet rep = reps_[at]; // copy: reps_ may reallocate
            DSignature sig = sigs_[at];
            for (std::size_t bi = 0; bi < boundary_.size(); ++bi) {
                int v = boundary_[bi];
                if (rep.test(v))
                    continue;
                DSignature next = sig;
                add_column(next, bi);
                if (index_.find(next) != index_.end())
                    continue;
                if (reps_.size() + 1 > cap)
                    throw BoundedResourceError("class table exceeds cap", reps_.size() + 1);
                VertexSet r = rep;
                r.set(v);
                index_.emplace(next, int(reps_.size()));
                reps_.push_back(std::move(r));
                sigs_.push_back(std::move(next));
            }
        }
    }

    int size() const { return int(reps_.size()); }
    int d() const { return d_; }
    const VertexSet & side() const { return side_; }
    const std::vector<int> & witnesses() const { return witnesses_; }
    const VertexSet & representative(int cls) const { return reps_[cls]; }
    const DSignature & signature_of(int cls) const { return sigs_[cls]; }

    DSignature signature(const VertexSet & x) const {
        DSignature sig(witnesses_.size());
        for (std::size_t i = 0; i < witnesses_.size(); ++i)
            sig[i] = std::uint8_t(std::min(d_, g_->adj[witnesses_[i]].intersection_count(x)));
        return sig;
    }

    // Class of an arbitrary subset of the side. Enumeration is exhaustive
    // over subsets, so a missing signature is a broken invariant.
    int class_of(const VertexSet & x) const {
        auto it = index_.find(signature(x));
        if (it == index_.end())
            throw InternalError("subset signature missing from class table");
        return it->second;
    }

    // Class of the disjoint union of a stored class and a few extra
    // vertices (members outside the side contribute nothing and members of
    // the class representative must not repeat).
    int class_of_union(int cls, std::span<const int> extra) const {
        DSignature sig = sigs_[cls];
        for (int v : extra)
            if (col_of_vertex_[v] >= 0)
                add_column(sig, std::size_t(col_of_vertex_[v]));
        auto it = index_.find(sig);
        if (it == index_.end())
            throw InternalError("composed signature missing from class table");
        return it->second;
    }

private:
    void add_column(DSignature & sig, std::size_t col) const {
        const DSignature & c = columns_[col];
        for (std::size_t i = 0; i < sig.size(); ++i)
            sig[i] = std::uint8_t(std::min<int>(d_, sig[i] + c[i]));
    }

    const Graph * g_ = nullptr;
    VertexSet side_;
    int d_ = 1;
    std::vector<int> witnesses_;
    std::vector<int> boundary_;
    std::vector<DSignature> columns_;
    std::vector<int> col_of_vertex_;
    std::vector<VertexSet> reps_;
    std::vector<DSignature> sigs_;
    std::unordered_map<DSignature, int, DSignatureHash> index_;
};

inline ClassTable enumerate_classes(const Graph & g, const VertexSet & a, int d,
    std::uint64_t cap = default_class_cap) {
    return ClassTable(g, a, d, cap);
}

// Standalone signature of X ⊆ A, for tests and the CLI.
inline DSignature signature(const Graph & g, const VertexSet & a, int d, const VertexSet & x) {
    std::vector<int> witnesses;
    middle_vertices(g, a.complement()).for_each([&](int v) { witnesses.push_back(v); });
    DSignature sig(witnesses.size());
    for (std::size_t i = 0; i < witnesses.size(); ++i)
        sig[i] = std::uint8_t(std::min(d, g.adj[witnesses[i]].intersection_count(x)));
    return sig;
}

} // namespace boolw
