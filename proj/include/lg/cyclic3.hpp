#pragma once

#include <optional>
#include <vector>

#include "lg/graph.hpp"
#include "lg/letters.hpp"

namespace lg {

/// Tripartition into independent sets; once ordered, the vector order of
/// each set is its linear order.
struct NicePartition {
    std::vector<int> a, b, c;
};

/// Conditions for 3-letter representability over the cyclic decoder:
/// a, b, c independent; all three cross graphs 2K2-free; no transversal
/// triple inducing a triangle or anti-triangle. Set orders are ignored.
/// Throws when a/b/c do not partition V(g).
bool is_nice(const Graph& g, const NicePartition& p);

/// Reorders a nice partition so that the cross graphs G[A∪B], G[B∪C] and
/// G[C∪A] are all properly ordered (first part decreasing, second
/// increasing, by neighborhood inclusion; C before A in the last one).
/// Ties between equal neighborhoods break on the third set, then vertex id.
NicePartition proper_orderings(const Graph& g, const NicePartition& p);

/// Representation over the cyclic decoder {(a,b),(b,c),(c,a)}.
struct CyclicWitness {
    LetterRepresentation rep;
};

/// Interleaves A and B by the chain-graph layout rules, then inserts every
/// C vertex into its unique feasible window. Requires proper_orderings
/// output of a nice partition; anything else may raise the infeasible-window
/// error.
CyclicWitness build_word(const Graph& g, const NicePartition& ordered);

/// Polynomial-time recognition over the cyclic decoder: twin-reduce, try
/// every candidate first/last pair for words starting with b or with c,
/// re-expand twins and verify against the original graph.
std::optional<CyclicWitness> recognize_cyclic3(const Graph& g);

struct MfisHit {
    Pattern pattern;
    std::vector<int> witness;
};

/// Scans for K3, 2K2+K1, C5+K1 and C6. The empty list is equivalent to
/// cyclic-3-letter representability.
std::vector<MfisHit> mfis_check(const Graph& g);

/// Independent oracle: some assignment of vertices to A/B/C is nice
/// (all 3^n colorings).
bool brute_force_nice_exists(const Graph& g);

// --- exhaustive agreement sweep ---

struct SweepRow {
    int n = 0;
    long long graphs = 0;
    long long representable = 0;
    long long discrepancies = 0;  // recognizer vs forbidden-subgraph vs brute-force mismatches
};

/// Runs recognize_cyclic3, mfis_check and brute_force_nice_exists over every
/// labeled graph on 0..max_n vertices and counts disagreements; every
/// returned witness is re-verified. max_n is capped at deskside sizes.
std::vector<SweepRow> equivalence_sweep(int max_n);

}  // namespace lg
