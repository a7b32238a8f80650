#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lg/graph.hpp"

namespace lgtest {

/// Brute-force isomorphism for deskside graphs (n <= 8 or so).
inline bool isomorphic(const lg::Graph& g, const lg::Graph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (dg[u] != dh[perm[u]]) ok = false;
            for (int v = u + 1; v < n && ok; ++v)
                if (g.adjacent(u, v) != h.adjacent(perm[u], perm[v])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Independent induced-pattern matcher: backtracking on a partial vertex
/// map instead of the subset scan the library uses.
inline bool contains_induced_backtracking(const lg::Graph& g, const lg::Graph& pat) {
    int n = g.vertex_count();
    int k = pat.vertex_count();
    if (k > n) return false;
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pat.adjacent(j, i) != g.adjacent(map[j], v)) ok = false;
            if (!ok) continue;
            map[i] = v;
            used[v] = 1;
            if (self(self, i + 1)) return true;
            used[v] = 0;
            map[i] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Uniform labeled graph from edge-indicator coin flips.
inline lg::Graph random_graph(int n, std::mt19937& rng) {
    lg::Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Calls f on every labeled graph with n vertices.
template <typename F>
void for_each_graph(int n, F&& f) {
    int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (long long mask = 0; mask < (1ll << bits); ++mask) {
        lg::Graph g(n);
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) g.add_edge(slots[b].first, slots[b].second);
        f(g);
    }
}

}  // namespace lgtest
