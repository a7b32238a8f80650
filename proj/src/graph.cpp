#include "lg/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace lg {

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

bool is_clique_set(const Graph& g, std::span<const int> s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_independent_set(const Graph& g, std::span<const int> s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

std::optional<std::vector<int>> bipartition_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.assign(1, start);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

// --- codec ---

namespace {

// Splits into nonempty lines; final newline optional.
std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        lines.emplace_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
    std::istringstream in(line);
    std::string extra;
    if (!(in >> a >> b)) return false;
    if (in >> extra) return false;
    return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    auto lines = split_lines(text);
    // skip trailing blank lines only
    while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos) lines.pop_back();
    if (lines.empty()) throw ParseError(1, "missing header \"n m\"");
    long n = 0, m = 0;
    if (!parse_two_ints(lines[0], n, m) || n < 0 || m < 0)
        throw ParseError(1, "malformed header, expected \"n m\"");
    if (static_cast<long>(lines.size()) - 1 != m)
        throw ParseError(static_cast<int>(lines.size()),
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        int lineno = static_cast<int>(i) + 2;
        long u = 0, v = 0;
        if (!parse_two_ints(lines[i + 1], u, v))
            throw ParseError(lineno, "malformed edge, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "endpoint out of range on edge " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string emit_graph(const Graph& g) {
    auto es = g.edges();
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(es.size()) + "\n";
    for (auto [u, v] : es) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
    }
    Graph h(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

// --- patterns ---

Graph pattern_graph(Pattern p) {
    switch (p) {
        case Pattern::k3: return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
        case Pattern::two_k2: return Graph::from_edges(4, {{0, 1}, {2, 3}});
        case Pattern::c4: return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        case Pattern::p4: return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        case Pattern::c5: return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        case Pattern::c6: return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
        case Pattern::two_k2_plus_k1: return Graph::from_edges(5, {{0, 1}, {2, 3}});
        case Pattern::c5_plus_k1: return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        case Pattern::k2_plus_k1: return Graph::from_edges(3, {{0, 1}});
    }
    throw std::invalid_argument("unknown pattern");
}

std::string_view pattern_name(Pattern p) {
    switch (p) {
        case Pattern::k3: return "k3";
        case Pattern::two_k2: return "2k2";
        case Pattern::c4: return "c4";
        case Pattern::p4: return "p4";
        case Pattern::c5: return "c5";
        case Pattern::c6: return "c6";
        case Pattern::two_k2_plus_k1: return "2k2+k1";
        case Pattern::c5_plus_k1: return "c5+k1";
        case Pattern::k2_plus_k1: return "k2+k1";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(std::string_view name) {
    static constexpr std::array<Pattern, 9> all = {
        Pattern::k3,     Pattern::two_k2,         Pattern::c4,         Pattern::p4,        Pattern::c5,
        Pattern::c6,     Pattern::two_k2_plus_k1, Pattern::c5_plus_k1, Pattern::k2_plus_k1};
    for (Pattern p : all)
        if (pattern_name(p) == name) return p;
    return std::nullopt;
}

namespace {

// Does mapping subset[i] -> some pattern vertex extend to an isomorphism?
bool subset_induces(const Graph& g, const std::vector<int>& sub, const Graph& pat) {
    int k = pat.vertex_count();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.adjacent(sub[i], sub[j]) != pat.adjacent(perm[i], perm[j])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern) {
    int n = g.vertex_count();
    int k = pattern.vertex_count();
    if (k > n) return std::nullopt;
    if (k == 0) return std::vector<int>{};
    auto pat_deg = sorted_degrees(pattern);

    std::vector<int> sub(k);
    std::iota(sub.begin(), sub.end(), 0);
    // lexicographic combination scan; least witness wins
    while (true) {
        Graph ind = induced_subgraph(g, sub);
        if (sorted_degrees(ind) == pat_deg && subset_induces(g, sub, pattern)) return sub;
        int i = k - 1;
        while (i >= 0 && sub[i] == n - k + i) --i;
        if (i < 0) break;
        ++sub[i];
        for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern p) {
    return contains_induced(g, pattern_graph(p));
}

// --- twins ---

std::vector<std::vector<int>> twin_classes(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        bool placed = false;
        for (auto& cls : classes) {
            int r = cls.front();
            bool same = true;
            for (int z = 0; z < n && same; ++z) {
                if (z == v || z == r) continue;
                if (g.adjacent(v, z) != g.adjacent(r, z)) same = false;
            }
            // open twins: N(v) = N(r) also forbids the edge vr
            if (same && !g.adjacent(v, r)) {
                cls.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({v});
    }
    return classes;
}

TwinReduction twin_reduce(const Graph& g) {
    auto classes = twin_classes(g);
    int m = static_cast<int>(classes.size());
    Graph reduced(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(classes[i].front(), classes[j].front())) reduced.add_edge(i, j);
    return {std::move(reduced), std::move(classes)};
}

// --- chain / threshold ---

std::optional<ChainBipartition> chain_bipartition(const Graph& g) {
    auto colors = bipartition_colors(g);
    if (!colors) return std::nullopt;
    if (contains_induced(g, Pattern::two_k2)) return std::nullopt;
    ChainBipartition bp;
    for (int v = 0; v < g.vertex_count(); ++v) (((*colors)[v] == 0) ? bp.left : bp.right).push_back(v);
    auto by_inclusion = [&](std::vector<int>& side) {
        std::stable_sort(side.begin(), side.end(),
                         [&](int a, int b) { return g.degree(a) < g.degree(b); });
    };
    by_inclusion(bp.left);
    by_inclusion(bp.right);
    return bp;
}

bool is_chain_graph(const Graph& g) { return chain_bipartition(g).has_value(); }

bool is_threshold(const Graph& g) {
    return !contains_induced(g, Pattern::p4) && !contains_induced(g, Pattern::c4) &&
           !contains_induced(g, Pattern::two_k2);
}

// --- generators ---

Graph generate(Family f, int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    switch (f) {
        case Family::zn: {
            // word (ab)^n over {(a,b)}: a at even positions, b at odd
            Graph g(2 * n);
            for (int s = 0; s < n; ++s)
                for (int t = s; t < n; ++t) g.add_edge(2 * s, 2 * t + 1);
            return g;
        }
        case Family::threshold_universal: {
            Graph g = generate(Family::zn, n);
            for (int s = 0; s < n; ++s)
                for (int t = s + 1; t < n; ++t) g.add_edge(2 * s, 2 * t);
            return g;
        }
        case Family::cycle: {
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            Graph g(n);
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            return g;
        }
        case Family::path: {
            Graph g(n);
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            return g;
        }
        case Family::complete: {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::edgeless: return Graph(n);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace lg
