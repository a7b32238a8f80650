#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lg/graph.hpp"
#include "lg/letters.hpp"
#include "lg/permutations.hpp"

namespace lg {

/// 0/±1 matrix indexed first by column (left to right) and then by row
/// (bottom to top); entry(k, l) uses 1-based k, l. The text form lists rows
/// top to bottom as usually displayed.
class GridMatrix {
public:
    GridMatrix(int cols, int rows);

    int cols() const { return t_; }
    int rows() const { return u_; }
    int entry(int k, int l) const;
    void set_entry(int k, int l, int value);  // value in {-1, 0, 1}

    /// "t u" header, then u lines of t entries, top row first.
    static GridMatrix parse(std::string_view text);
    std::string to_text() const;

    bool operator==(const GridMatrix&) const = default;

private:
    int t_ = 0, u_ = 0;
    std::vector<int> entries_;  // column-major, bottom row first
};

/// Column and row signs, ±1 each; valid when every entry is 0 or the product
/// of its column and row sign.
struct SignVector {
    std::vector<int> col, row;
};

bool signs_valid(const GridMatrix& m, const SignVector& s);

/// Decides whether m is a partial multiplication matrix and returns a
/// deterministic sign assignment: constraint components are oriented to
/// maximize +1 signs (first element +1 on ties), unconstrained lines get +1.
std::optional<SignVector> infer_signs(const GridMatrix& m);

/// Nonzero cell of the matrix; serialized as "a<k><l>".
struct CellLetter {
    int k = 0, l = 0;
    bool operator==(const CellLetter&) const = default;
};

std::string cell_name(CellLetter c);
std::vector<CellLetter> cell_alphabet(const GridMatrix& m);  // ordered by (k, l)

using CellWord = std::vector<CellLetter>;

CellWord parse_cell_word(const GridMatrix& m, std::string_view text);
std::string format_cell_word(const CellWord& w);

/// Decoder over the cell alphabet under which the letter graph of any cell
/// word equals the permutation graph of its drawing. Alphabet order matches
/// cell_alphabet(m).
Decoder decoder_from_matrix(const GridMatrix& m, const SignVector& s);

/// Placed points at given base-point distances, increasing.
struct Drawing {
    using Dist = boost::rational<long long>;
    struct Point {
        CellLetter cell;
        Dist dist;  // in (0, 1), measured from the cell's base point
    };
    std::vector<Point> points;
};

/// Permutation read off a drawing: label points 1..n bottom to top, record
/// labels left to right. Exact rational geometry.
Permutation drawing_permutation(const GridMatrix& m, const SignVector& s, const Drawing& d);

/// Word-to-permutation decoding at canonical distances i/(n+1).
Permutation psi(const GridMatrix& m, const SignVector& s, const CellWord& w);

/// Permutation-to-word encoding: cells of the points in distance order.
CellWord phi(const GridMatrix& m, const SignVector& s, const Drawing& d);

/// Letter graph of w under decoder_from_matrix equals the permutation graph
/// of psi(w) under the position-to-point correspondence.
bool check_grid_letter_bridge(const GridMatrix& m, const SignVector& s, const CellWord& w);

/// Bounded membership oracle: permutations of every drawing of a word of
/// length <= max_len, deduplicated and sorted.
std::vector<Permutation> geom_permutations(const GridMatrix& m, const SignVector& s, int max_len);

// --- two-letter decoders ---

enum class TwoLetterClass {
    complete,   // both cross pairs: all edges between the letter classes
    empty,      // no cross pair: no edges between the letter classes
    threshold,  // one cross pair, exactly one self-pair
    chain,      // one cross pair; zero self-pairs, or two with complement set
};

struct TwoLetterGrid {
    TwoLetterClass cls;
    bool complement = false;  // graphs are complements of those drawn on the matrices
    std::vector<GridMatrix> matrices;
};

std::string_view two_letter_class_name(TwoLetterClass c);

/// Grid matrices whose geometric classes host the permutations of the
/// 2-letter graphs of d. Throws unless the alphabet has exactly 2 letters.
TwoLetterGrid two_letter_grid_matrix(const Decoder& d);

}  // namespace lg
