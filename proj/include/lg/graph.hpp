#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lg {

/// Error raised by text-format parsers; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Finite simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[static_cast<size_t>(u) * n_ + v] != 0;
    }

    /// Adds {u,v}; idempotent. Throws on loops and out-of-range endpoints.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adj_[static_cast<size_t>(u) * n_ + v] = 1;
        adj_[static_cast<size_t>(v) * n_ + u] = 1;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int u = 0; u < n_; ++u) d += adj_[static_cast<size_t>(v) * n_ + u];
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
        return out;
    }

    /// All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[static_cast<size_t>(u) * n_ + v]) out.emplace_back(u, v);
        return out;
    }

    int edge_count() const { return static_cast<int>(edges().size()); }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::vector<char> adj_;
};

Graph complement(const Graph& g);
bool is_clique_set(const Graph& g, std::span<const int> s);
bool is_independent_set(const Graph& g, std::span<const int> s);

/// 2-coloring, one color class per element; nullopt when an odd cycle exists.
std::optional<std::vector<int>> bipartition_colors(const Graph& g);

// --- edge-list text codec ---
//
// Document: header "n m", then m lines "u v". Canonical emission sorts edges
// lexicographically with u < v on each line.
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

/// Induced subgraph on s, relabeled by rank within s.
Graph induced_subgraph(const Graph& g, std::span<const int> s);

// --- fixed small patterns ---

enum class Pattern {
    k3,
    two_k2,
    c4,
    p4,
    c5,
    c6,
    two_k2_plus_k1,
    c5_plus_k1,
    k2_plus_k1,
};

Graph pattern_graph(Pattern p);
std::string_view pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(std::string_view name);

/// Lexicographically least vertex set inducing a copy of the pattern, if any.
/// Exhaustive subset scan with degree-multiset pruning.
std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern p);
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern);

// --- twins ---

/// Partition into classes of equal open neighborhoods, ordered by smallest
/// member; within a class, vertices ascend (representative first).
std::vector<std::vector<int>> twin_classes(const Graph& g);

struct TwinReduction {
    Graph reduced;                          // one representative per class
    std::vector<std::vector<int>> classes;  // classes[i] = original vertices of reduced vertex i
};

TwinReduction twin_reduce(const Graph& g);

// --- chain / threshold class tests ---

struct ChainBipartition {
    std::vector<int> left, right;  // each side ordered increasingly by neighborhood inclusion
};

/// Bipartite and 2K2-free; witness bipartition on success.
std::optional<ChainBipartition> chain_bipartition(const Graph& g);
bool is_chain_graph(const Graph& g);

/// (P4, C4, 2K2)-free.
bool is_threshold(const Graph& g);

// --- generators ---

enum class Family { zn, threshold_universal, cycle, path, complete, edgeless };

/// zn: chain graph of the word (ab)^n over decoder {(a,b)}; a-positions even,
/// b-positions odd. threshold_universal: same with the a-side completed to a
/// clique. cycle requires n >= 3.
Graph generate(Family f, int n);

}  // namespace lg
