#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "semitop/semiframe.hpp"
#include "semitop/semitopology.hpp"

namespace semitop {

// Undirected intersection graph on the nonempty opens: O ⌢ O' iff O ≬ O'.
// Self-loops are implicit (every nonempty open meets itself).
struct IntersectionGraph {
    std::vector<Bitset> nodes;        // nonempty opens, canonical order
    std::vector<std::string> labels;
    std::vector<Bitset> adj;          // adj[i] over node indices, includes i
};

inline IntersectionGraph intersection_graph(const Semitopology& s) {
    IntersectionGraph g;
    for (const auto& o : s.opens())
        if (!o.empty()) {
            g.nodes.push_back(o);
            g.labels.push_back(s.render_set(o));
        }
    g.adj.assign(g.nodes.size(), Bitset(g.nodes.size()));
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = 0; j < g.nodes.size(); ++j)
            if (g.nodes[i].intersects(g.nodes[j])) g.adj[i].set(j);
    return g;
}

// O ≤ O' when every node meeting O also meets O'.
inline bool graph_leq(const IntersectionGraph& g, std::size_t a, std::size_t b) {
    if (a >= g.nodes.size() || b >= g.nodes.size())
        throw input_error("graph node index out of range");
    return g.adj[a].subset_of(g.adj[b]);
}

// ≈-classes of ≤ ∩ ≥, each class in canonical node order.
inline std::vector<std::vector<std::size_t>> extensional_classes(const IntersectionGraph& g) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> placed(g.nodes.size(), false);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (placed[i]) continue;
        std::vector<std::size_t> cls{i};
        placed[i] = true;
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
            if (!placed[j] && g.adj[i] == g.adj[j]) {
                cls.push_back(j);
                placed[j] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

// Nodes T with O ⌢ T ⌢ O' implying O ⌢ O'.
inline std::vector<std::size_t> graph_transitive_nodes(const IntersectionGraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < g.nodes.size(); ++t) {
        bool ok = true;
        auto ms = g.adj[t].members();
        for (std::size_t i = 0; i < ms.size() && ok; ++i)
            for (std::size_t j = i + 1; j < ms.size() && ok; ++j)
                if (!g.adj[ms[i]].test(ms[j])) ok = false;
        if (ok) out.push_back(t);
    }
    return out;
}

// Directed straddle graph on the non-⊥ elements: x ⊏ y iff x ∗ y and y ⋢ x.
struct StraddleGraph {
    std::vector<std::size_t> nodes;   // frame element indices, bottom omitted
    std::vector<std::string> labels;
    std::vector<Bitset> out_edges;    // over node indices
};

inline StraddleGraph straddle_graph(const Semiframe& x) {
    StraddleGraph g;
    for (std::size_t e = 0; e < x.size(); ++e)
        if (e != x.bottom()) {
            g.nodes.push_back(e);
            g.labels.push_back(x.ids()[e]);
        }
    g.out_edges.assign(g.nodes.size(), Bitset(g.nodes.size()));
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = 0; j < g.nodes.size(); ++j)
            if (x.compat(g.nodes[i], g.nodes[j]) && !x.leq(g.nodes[j], g.nodes[i]))
                g.out_edges[i].set(j);
    return g;
}

struct RecoveredRelations {
    std::vector<Bitset> leq;     // over node indices
    std::vector<Bitset> compat;  // over node indices
};

// Prop-11.15 style recovery: x ⊑ y iff x = y or (x ⊏ y and not y ⊏ x);
// x ∗ y iff x = y or x ⊏ y or y ⊏ x.
inline RecoveredRelations recover(const StraddleGraph& g) {
    const std::size_t n = g.nodes.size();
    RecoveredRelations r;
    r.leq.assign(n, Bitset(n));
    r.compat.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool ij = g.out_edges[i].test(j);
            bool ji = g.out_edges[j].test(i);
            if (i == j || (ij && !ji)) r.leq[i].set(j);
            if (i == j || ij || ji) r.compat[i].set(j);
        }
    return r;
}

// Brute-force permutation isomorphism for small graphs (directed adjacency;
// undirected graphs just have symmetric matrices). Exponential; capped.
inline bool graphs_isomorphic(const std::vector<Bitset>& a, const std::vector<Bitset>& b,
                              std::size_t cap = 10) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    if (n > cap) throw resource_error("isomorphism search capped at " + std::to_string(cap) +
                                      " nodes");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (a[i].test(j) != b[perm[i]].test(perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::string intersection_graph_dot(const IntersectionGraph& g) {
    std::string s = "graph intersection {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        s += "  n" + std::to_string(i) + " [label=\"" + g.labels[i] + "\"];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
            if (g.adj[i].test(j))
                s += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + ";\n";
    s += "}\n";
    return s;
}

inline std::string straddle_graph_dot(const StraddleGraph& g) {
    std::string s = "digraph straddle {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        s += "  n" + std::to_string(i) + " [label=\"" + g.labels[i] + "\"];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = 0; j < g.nodes.size(); ++j)
            if (g.out_edges[i].test(j))
                s += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    s += "}\n";
    return s;
}

} // namespace semitop
