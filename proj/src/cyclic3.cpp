#include "lg/cyclic3.hpp"

#include <algorithm>
#include <array>

namespace lg {

namespace {

void check_partition(const Graph& g, const NicePartition& p) {
    std::vector<char> seen(g.vertex_count(), 0);
    int total = 0;
    for (const auto* s : {&p.a, &p.b, &p.c})
        for (int v : *s) {
            if (v < 0 || v >= g.vertex_count() || seen[v])
                throw std::invalid_argument("A, B, C do not partition V(g)");
            seen[v] = 1;
            ++total;
        }
    if (total != g.vertex_count()) throw std::invalid_argument("A, B, C do not partition V(g)");
}

// 2K2-free check for the bipartite graph between two independent sets:
// neighborhoods of one side must form a chain under inclusion.
bool cross_is_chain(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    for (size_t i = 0; i < ys.size(); ++i) {
        for (size_t j = i + 1; j < ys.size(); ++j) {
            bool ij = true, ji = true;
            for (int x : xs) {
                bool ei = g.adjacent(x, ys[i]);
                bool ej = g.adjacent(x, ys[j]);
                if (ei && !ej) ij = false;
                if (ej && !ei) ji = false;
            }
            if (!ij && !ji) return false;
        }
    }
    return true;
}

int count_adjacent(const Graph& g, int v, const std::vector<int>& s) {
    int c = 0;
    for (int x : s) c += g.adjacent(v, x);
    return c;
}

}  // namespace

bool is_nice(const Graph& g, const NicePartition& p) {
    check_partition(g, p);
    if (!is_independent_set(g, p.a) || !is_independent_set(g, p.b) || !is_independent_set(g, p.c))
        return false;
    if (!cross_is_chain(g, p.a, p.b) || !cross_is_chain(g, p.b, p.c) || !cross_is_chain(g, p.c, p.a))
        return false;
    for (int a : p.a)
        for (int b : p.b)
            for (int c : p.c) {
                bool ab = g.adjacent(a, b), bc = g.adjacent(b, c), ca = g.adjacent(c, a);
                if (ab && bc && ca) return false;
                if (!ab && !bc && !ca) return false;
            }
    return true;
}

namespace {

// Sorts by primary neighborhood size, then secondary, then id. Inside a nice
// partition the neighborhoods chain, so sizes order the same way inclusion
// does.
std::vector<int> sorted_by(const Graph& g, std::vector<int> s, const std::vector<int>& primary,
                           bool primary_desc, const std::vector<int>& secondary, bool secondary_desc) {
    std::sort(s.begin(), s.end(), [&](int x, int y) {
        int px = count_adjacent(g, x, primary), py = count_adjacent(g, y, primary);
        if (px != py) return primary_desc ? px > py : px < py;
        int sx = count_adjacent(g, x, secondary), sy = count_adjacent(g, y, secondary);
        if (sx != sy) return secondary_desc ? sx > sy : sx < sy;
        return x < y;
    });
    return s;
}

// first part decreasing, second increasing, under neighborhood inclusion
bool properly_ordered(const Graph& g, const std::vector<int>& first, const std::vector<int>& second) {
    auto includes_next = [&](const std::vector<int>& side, const std::vector<int>& other, bool desc) {
        for (size_t i = 0; i + 1 < side.size(); ++i) {
            for (int o : other) {
                bool ei = g.adjacent(side[i], o), ej = g.adjacent(side[i + 1], o);
                if (desc && ej && !ei) return false;   // N(next) must be inside N(prev)
                if (!desc && ei && !ej) return false;  // N(prev) must be inside N(next)
            }
        }
        return true;
    };
    return includes_next(first, second, true) && includes_next(second, first, false);
}

}  // namespace

NicePartition proper_orderings(const Graph& g, const NicePartition& p) {
    if (!is_nice(g, p)) throw std::invalid_argument("proper_orderings requires a nice partition");
    NicePartition out;
    out.a = sorted_by(g, p.a, p.b, true, p.c, false);   // decreasing wrt B, increasing wrt C
    out.b = sorted_by(g, p.b, p.a, false, p.c, true);   // increasing wrt A, decreasing wrt C
    out.c = sorted_by(g, p.c, p.b, false, p.a, true);   // increasing wrt B, decreasing wrt A
    if (!properly_ordered(g, out.a, out.b) || !properly_ordered(g, out.b, out.c) ||
        !properly_ordered(g, out.c, out.a))
        throw std::logic_error("orderings of a nice partition failed the proper-order check");
    return out;
}

namespace {

constexpr int kLetterA = 0, kLetterB = 1, kLetterC = 2;

struct Placed {
    int vertex;
    int letter;
};

// Layout of A and B: an a vertex precedes exactly its b neighbors. Both
// interleaving rules must produce the same sequence.
std::vector<Placed> layout_ab(const Graph& g, const std::vector<int>& a_order,
                              const std::vector<int>& b_order) {
    int p = static_cast<int>(a_order.size());
    int q = static_cast<int>(b_order.size());

    // rule: a vertex sits between its last b non-neighbor and first b neighbor
    std::vector<Placed> by_a;
    {
        std::vector<int> gap(p, q);
        for (int i = 0; i < p; ++i) {
            int first_nb = q;
            for (int j = 0; j < q; ++j)
                if (g.adjacent(a_order[i], b_order[j])) {
                    first_nb = j;
                    break;
                }
            for (int j = 0; j < q; ++j)
                if (g.adjacent(a_order[i], b_order[j]) != (j >= first_nb))
                    throw std::logic_error("b neighborhood of an a vertex is not a suffix");
            gap[i] = first_nb;
        }
        for (int j = 0; j <= q; ++j) {
            for (int i = 0; i < p; ++i)
                if (gap[i] == j) by_a.push_back({a_order[i], kLetterA});
            if (j < q) by_a.push_back({b_order[j], kLetterB});
        }
    }

    // rule: a b vertex sits between its last a neighbor and first a non-neighbor
    std::vector<Placed> by_b;
    {
        std::vector<int> gap(q, 0);
        for (int j = 0; j < q; ++j) {
            int last_nb = -1;
            for (int i = 0; i < p; ++i)
                if (g.adjacent(b_order[j], a_order[i])) last_nb = i;
            for (int i = 0; i < p; ++i)
                if (g.adjacent(b_order[j], a_order[i]) != (i <= last_nb))
                    throw std::logic_error("a neighborhood of a b vertex is not a prefix");
            gap[j] = last_nb + 1;
        }
        for (int i = 0; i <= p; ++i) {
            for (int j = 0; j < q; ++j)
                if (gap[j] == i) by_b.push_back({b_order[j], kLetterB});
            if (i < p) by_b.push_back({a_order[i], kLetterA});
        }
    }

    auto same = [](const Placed& x, const Placed& y) { return x.vertex == y.vertex && x.letter == y.letter; };
    if (by_a.size() != by_b.size() || !std::equal(by_a.begin(), by_a.end(), by_b.begin(), same))
        throw std::logic_error("the two interleaving rules disagree on the A/B layout");
    return by_a;
}

}  // namespace

CyclicWitness build_word(const Graph& g, const NicePartition& ordered) {
    check_partition(g, ordered);
    std::vector<Placed> ab = layout_ab(g, ordered.a, ordered.b);

    // each c vertex gets a window: after every b neighbor and a non-neighbor,
    // before every b non-neighbor and a neighbor
    int len = static_cast<int>(ab.size());
    std::vector<int> slot(ordered.c.size());
    for (size_t ci = 0; ci < ordered.c.size(); ++ci) {
        int c = ordered.c[ci];
        int lo = 0, hi = len;
        for (int pos = 0; pos < len; ++pos) {
            bool adj = g.adjacent(c, ab[pos].vertex);
            if (ab[pos].letter == kLetterA) {
                if (adj)
                    hi = std::min(hi, pos);
                else
                    lo = std::max(lo, pos + 1);
            } else {
                if (adj)
                    lo = std::max(lo, pos + 1);
                else
                    hi = std::min(hi, pos);
            }
        }
        if (lo > hi) throw std::logic_error("no feasible window for a c vertex; partition is not nice");
        slot[ci] = lo;
    }

    CyclicWitness w;
    w.rep.decoder = cyclic3_decoder();
    for (int gpos = 0; gpos <= len; ++gpos) {
        for (size_t ci = 0; ci < ordered.c.size(); ++ci)
            if (slot[ci] == gpos) {
                w.rep.word.push_back(kLetterC);
                w.rep.vertex_of.push_back(ordered.c[ci]);
            }
        if (gpos < len) {
            w.rep.word.push_back(ab[gpos].letter);
            w.rep.vertex_of.push_back(ab[gpos].vertex);
        }
    }
    if (!verify_representation(g, w.rep))
        throw std::logic_error("constructed word does not represent the graph");
    return w;
}

namespace {

// Expands a witness on the twin-reduced graph back to the original: every
// class member takes its representative's letter, placed adjacently.
CyclicWitness expand_twins(const Graph& original, const CyclicWitness& reduced_witness,
                           const std::vector<std::vector<int>>& classes) {
    CyclicWitness out;
    out.rep.decoder = reduced_witness.rep.decoder;
    for (size_t pos = 0; pos < reduced_witness.rep.word.size(); ++pos) {
        int reduced_vertex = reduced_witness.rep.vertex_of[pos];
        for (int orig : classes[reduced_vertex]) {
            out.rep.word.push_back(reduced_witness.rep.word[pos]);
            out.rep.vertex_of.push_back(orig);
        }
    }
    if (!verify_representation(original, out.rep))
        throw std::logic_error("twin re-expansion broke the witness");
    return out;
}

std::optional<NicePartition> nice_from_pair_b(const Graph& g, int u, int v) {
    // u is the first b, v the last c; they are adjacent with no common neighbor
    NicePartition p;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (x == u || x == v) continue;
        bool au = g.adjacent(x, u), av = g.adjacent(x, v);
        if (au && av) return std::nullopt;  // (b1)
        if (!au && !av)
            p.a.push_back(x);
        else if (!au && av)
            p.b.push_back(x);
        else
            p.c.push_back(x);
    }
    p.b.push_back(u);
    p.c.push_back(v);
    if (!is_nice(g, p)) return std::nullopt;
    return p;
}

std::optional<NicePartition> nice_from_pair_c(const Graph& g, int u, int v) {
    // u is the first c, v the last c; they are non-adjacent with no common neighbor
    NicePartition p;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (x == u || x == v) continue;
        bool au = g.adjacent(x, u), av = g.adjacent(x, v);
        if (au && av) return std::nullopt;  // (c1)
        if (au && !av)
            p.a.push_back(x);
        else if (!au && av)
            p.b.push_back(x);
        else
            p.c.push_back(x);
    }
    p.c.push_back(u);
    p.c.push_back(v);
    if (!is_nice(g, p)) return std::nullopt;
    return p;
}

}  // namespace

std::optional<CyclicWitness> recognize_cyclic3(const Graph& g) {
    TwinReduction tr = twin_reduce(g);
    const Graph& r = tr.reduced;
    int m = r.vertex_count();

    if (m == 0) {
        CyclicWitness w;
        w.rep.decoder = cyclic3_decoder();
        return w;
    }
    if (m == 1) {
        // covers every edgeless graph: one class, word a...a
        CyclicWitness w;
        w.rep.decoder = cyclic3_decoder();
        w.rep.word = {kLetterA};
        w.rep.vertex_of = {0};
        return expand_twins(g, w, tr.classes);
    }

    auto finish = [&](const NicePartition& p) {
        NicePartition ordered = proper_orderings(r, p);
        CyclicWitness reduced_witness = build_word(r, ordered);
        return expand_twins(g, reduced_witness, tr.classes);
    };

    // word starting with b: candidate pairs are adjacent
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            if (u == v || !r.adjacent(u, v)) continue;
            if (auto p = nice_from_pair_b(r, u, v)) return finish(*p);
        }
    // word starting with c: candidate pairs are non-adjacent
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            if (u == v || r.adjacent(u, v)) continue;
            if (auto p = nice_from_pair_c(r, u, v)) return finish(*p);
        }

    // cross-check against the forbidden-subgraph characterization
    if (mfis_check(g).empty())
        throw std::logic_error("recognition failed on a graph with no forbidden induced subgraph");
    return std::nullopt;
}

std::vector<MfisHit> mfis_check(const Graph& g) {
    static constexpr std::array<Pattern, 4> list = {Pattern::k3, Pattern::two_k2_plus_k1,
                                                    Pattern::c5_plus_k1, Pattern::c6};
    std::vector<MfisHit> hits;
    for (Pattern p : list)
        if (auto w = contains_induced(g, p)) hits.push_back({p, std::move(*w)});
    return hits;
}

bool brute_force_nice_exists(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, 0);
    while (true) {
        NicePartition p;
        for (int v = 0; v < n; ++v) {
            if (color[v] == 0)
                p.a.push_back(v);
            else if (color[v] == 1)
                p.b.push_back(v);
            else
                p.c.push_back(v);
        }
        if (is_nice(g, p)) return true;
        int i = n - 1;
        while (i >= 0 && color[i] == 2) --i;
        if (i < 0) return false;
        ++color[i];
        std::fill(color.begin() + i + 1, color.end(), 0);
    }
}

std::vector<SweepRow> equivalence_sweep(int max_n) {
    if (max_n < 0 || max_n > 7) throw std::invalid_argument("sweep supports 0 <= max_n <= 7");
    std::vector<SweepRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        SweepRow row;
        row.n = n;
        int bits = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        for (long long mask = 0; mask < (1ll << bits); ++mask) {
            Graph g(n);
            for (int b = 0; b < bits; ++b)
                if (mask >> b & 1) g.add_edge(slots[b].first, slots[b].second);
            ++row.graphs;
            auto witness = recognize_cyclic3(g);
            bool rec = witness.has_value();
            bool mfis_free = mfis_check(g).empty();
            bool brute = brute_force_nice_exists(g);
            bool verified = !rec || verify_representation(g, witness->rep);
            if (rec != mfis_free || mfis_free != brute || !verified) ++row.discrepancies;
            if (rec) ++row.representable;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lg
