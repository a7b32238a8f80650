#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lg/graph.hpp"

namespace lg {

/// Alphabet plus a set of ordered letter pairs. Letters are referenced by
/// index into the alphabet; names may be multi-character (cell alphabets).
struct Decoder {
    std::vector<std::string> alphabet;
    std::vector<char> pair_matrix;  // size k*k, pair_matrix[i*k+j] = (letter i, letter j) in decoder

    Decoder() = default;
    explicit Decoder(std::vector<std::string> letters);

    /// Compact construction: one char per letter, pairs as 2-char tokens.
    /// make_decoder("abc", {"ab", "bc", "ca"})
    static Decoder make(std::string_view letters, const std::vector<std::string>& pairs);

    int size() const { return static_cast<int>(alphabet.size()); }
    int letter_index(std::string_view name) const;  // -1 when absent
    bool has_pair(int i, int j) const { return pair_matrix[static_cast<size_t>(i) * size() + j] != 0; }
    void add_pair(int i, int j);
    std::vector<std::pair<int, int>> pairs() const;  // sorted
    bool single_char_alphabet() const;
};

/// The cyclic decoder {(a,b),(b,c),(c,a)}.
Decoder cyclic3_decoder();

using Word = std::vector<int>;  // letter indices into a decoder's alphabet

/// Accepts a compact string ("abab") when all letters are single characters,
/// otherwise whitespace-separated letter tokens. Throws on unknown letters.
Word parse_word(const Decoder& d, std::string_view text);
std::string format_word(const Decoder& d, const Word& w);

/// Word plus the bijection from word positions to target vertex ids.
struct LetterRepresentation {
    Decoder decoder;
    Word word;
    std::vector<int> vertex_of;  // vertex_of[position] = vertex id

    static LetterRepresentation identity(Decoder d, Word w);
};

/// Letter graph of w: vertex per position, i < j adjacent iff (w_i, w_j) is
/// a decoder pair.
Graph realize(const Decoder& d, const Word& w);
Graph realize(const Decoder& d, std::string_view w);

/// True iff realizing r.word and pushing positions through r.vertex_of
/// reproduces g edge-for-edge. Throws on a length mismatch or when
/// vertex_of is not a bijection.
bool verify_representation(const Graph& g, const LetterRepresentation& r);

/// Partition into flagged parts plus a linear order of all vertices.
struct StructuredPartition {
    struct Part {
        std::vector<int> vertices;
        bool clique = false;  // false: independent set
    };
    std::vector<Part> parts;
    std::vector<int> order;  // order[k] = vertex at position k
};

/// Checks the k-letter structure conditions: every part matches its flag and
/// each ordered pair of parts meets in one of the four cross types
/// (order-forward, order-backward, complete, empty).
bool verify_theorem1_structure(const Graph& g, const StructuredPartition& sp);

struct LettericityOptions {
    int k_max = -1;  // default: vertex count
    int max_n = 10;  // search guard; raise explicitly for bigger inputs
};

struct LettericityResult {
    int k = 0;
    LetterRepresentation rep;
};

/// Smallest alphabet size admitting a representation, with witness.
/// Iterates k = 1, 2, ...; enumerates vertex partitions into k letter
/// classes, decoders consistent with the class structure, and vertex orders
/// by backtracking. The empty graph reports k = 0 by convention.
/// Throws when vertex_count exceeds opt.max_n; nullopt when nothing is
/// found within k_max.
std::optional<LettericityResult> lettericity_exact(const Graph& g, LettericityOptions opt = {});

// --- decoder/word text document ---
//
//   alphabet abc          or   alphabet a11 a21 a32
//   pairs ab bc ca        or   pairs a11,a21 a21,a32
//   word abcabc           or   word a11 a21 a11
//
// The word line is optional. Compact spellings apply only when every letter
// is a single character.

struct RepresentationDoc {
    Decoder decoder;
    std::optional<Word> word;
};

RepresentationDoc parse_representation_doc(std::string_view text);
std::string emit_representation_doc(const Decoder& d, const std::optional<Word>& w);

}  // namespace lg
