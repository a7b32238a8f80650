#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lg/graph.hpp"
#include "lg/letters.hpp"

namespace lg {

/// Quotient by the similarity relation: x ~ y iff no third vertex is
/// adjacent to exactly one of them. Every class is a clique or an
/// independent set, and any two classes see each other completely or not
/// at all.
struct SimilarityPartition {
    std::vector<std::vector<int>> classes;  // ordered by smallest member
    std::vector<char> clique;               // per class; singletons count as independent

    int diversity() const { return static_cast<int>(classes.size()); }
};

SimilarityPartition neighbourhood_diversity(const Graph& g);

/// One letter per similarity class; under the induced decoder, any word with
/// the right letter multiplicities represents g. Word order: class-major,
/// vertex ids ascending.
LetterRepresentation nd_representation(const Graph& g);

// --- clique-width expressions ---
//
// AST over: create "c<label>(<name>)", disjoint union "+", join
// "e<i,j>(...)" adding all edges between labels i and j, and rename
// "r<i->j>(...)". Example:
//
//   e4,1(e4,3(c4(e)+r4->3(r3->2(e4,3(c4(d)+e3,2(c3(c)+e2,1(c2(b)+c1(a))))))))

struct CwNode;
using CwExpr = std::shared_ptr<const CwNode>;

struct CwNode {
    enum class Kind { create, unite, join, rename };
    Kind kind;
    int label = 0, label2 = 0;  // create: label; join: (label, label2); rename: label -> label2
    std::string name;           // create only
    CwExpr child, child2;
};

CwExpr cw_create(int label, std::string name);
CwExpr cw_union(CwExpr left, CwExpr right);
CwExpr cw_join(int i, int j, CwExpr child);  // throws when i == j
CwExpr cw_rename(int from, int to, CwExpr child);

CwExpr parse_cw(std::string_view text);
std::string cw_to_text(const CwExpr& e);

/// Distinct labels mentioned anywhere in the expression.
int cw_label_count(const CwExpr& e);

struct CwEval {
    Graph graph;                     // vertices in creation order (depth-first, left to right)
    std::vector<std::string> names;  // per vertex
    std::vector<int> labels;         // final label per vertex
};

/// Bottom-up evaluation. Throws on duplicate vertex names.
CwEval eval_expression(const CwExpr& e);

/// True iff the union tree (ignoring join/rename decorations) is a
/// caterpillar: every union node has a child that is a bare create.
bool is_caterpillar_expression(const CwExpr& e);

/// Caterpillar expression with at most k+1 labels reproducing the target of
/// a verified k-letter representation: each vertex enters with a staging
/// label, joins to every letter its decoder pairs demand, then takes its
/// word letter as label. Throws when r does not verify against target.
CwExpr lcw_expression_from_letters(const Graph& target, const LetterRepresentation& r);

}  // namespace lg
