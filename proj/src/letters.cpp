#include "lg/letters.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace lg {

Decoder::Decoder(std::vector<std::string> letters) : alphabet(std::move(letters)) {
    std::set<std::string> seen;
    for (const auto& l : alphabet) {
        if (l.empty()) throw std::invalid_argument("empty letter name");
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate letter " + l);
    }
    pair_matrix.assign(alphabet.size() * alphabet.size(), 0);
}

Decoder Decoder::make(std::string_view letters, const std::vector<std::string>& pairs) {
    std::vector<std::string> names;
    for (char c : letters) names.emplace_back(1, c);
    Decoder d(std::move(names));
    for (const auto& p : pairs) {
        if (p.size() != 2) throw std::invalid_argument("pair token must have two letters: " + p);
        int i = d.letter_index(std::string_view(&p[0], 1));
        int j = d.letter_index(std::string_view(&p[1], 1));
        if (i < 0 || j < 0) throw std::invalid_argument("pair uses unknown letter: " + p);
        d.add_pair(i, j);
    }
    return d;
}

int Decoder::letter_index(std::string_view name) const {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return static_cast<int>(i);
    return -1;
}

void Decoder::add_pair(int i, int j) {
    if (i < 0 || i >= size() || j < 0 || j >= size()) throw std::invalid_argument("pair letter out of range");
    pair_matrix[static_cast<size_t>(i) * size() + j] = 1;
}

std::vector<std::pair<int, int>> Decoder::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (has_pair(i, j)) out.emplace_back(i, j);
    return out;
}

bool Decoder::single_char_alphabet() const {
    return std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
}

Decoder cyclic3_decoder() { return Decoder::make("abc", {"ab", "bc", "ca"}); }

Word parse_word(const Decoder& d, std::string_view text) {
    Word w;
    bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    if (!spaced && d.single_char_alphabet()) {
        for (char c : text) {
            int i = d.letter_index(std::string_view(&c, 1));
            if (i < 0) throw std::invalid_argument(std::string("unknown letter '") + c + "' in word");
            w.push_back(i);
        }
        return w;
    }
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        int i = d.letter_index(tok);
        if (i < 0) throw std::invalid_argument("unknown letter '" + tok + "' in word");
        w.push_back(i);
    }
    return w;
}

std::string format_word(const Decoder& d, const Word& w) {
    std::string out;
    bool compact = d.single_char_alphabet();
    for (size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += ' ';
        out += d.alphabet.at(w[i]);
    }
    return out;
}

LetterRepresentation LetterRepresentation::identity(Decoder d, Word w) {
    LetterRepresentation r;
    r.decoder = std::move(d);
    r.word = std::move(w);
    r.vertex_of.resize(r.word.size());
    std::iota(r.vertex_of.begin(), r.vertex_of.end(), 0);
    return r;
}

Graph realize(const Decoder& d, const Word& w) {
    int n = static_cast<int>(w.size());
    for (int x : w)
        if (x < 0 || x >= d.size()) throw std::invalid_argument("word letter out of alphabet range");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.has_pair(w[i], w[j])) g.add_edge(i, j);
    return g;
}

Graph realize(const Decoder& d, std::string_view w) { return realize(d, parse_word(d, w)); }

bool verify_representation(const Graph& g, const LetterRepresentation& r) {
    int n = g.vertex_count();
    if (static_cast<int>(r.word.size()) != n)
        throw std::invalid_argument("word length " + std::to_string(r.word.size()) +
                                    " does not match vertex count " + std::to_string(n));
    if (static_cast<int>(r.vertex_of.size()) != n) throw std::invalid_argument("vertex map has wrong size");
    std::vector<char> seen(n, 0);
    for (int v : r.vertex_of) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("vertex map is not a bijection");
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(r.vertex_of[i], r.vertex_of[j]) != r.decoder.has_pair(r.word[i], r.word[j]))
                return false;
    return true;
}

bool verify_theorem1_structure(const Graph& g, const StructuredPartition& sp) {
    int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    for (size_t p = 0; p < sp.parts.size(); ++p)
        for (int v : sp.parts[p].vertices) {
            if (v < 0 || v >= n || part_of[v] != -1) throw std::invalid_argument("parts do not partition V");
            part_of[v] = static_cast<int>(p);
        }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1) throw std::invalid_argument("parts do not partition V");
    std::vector<int> pos(n, -1);
    if (static_cast<int>(sp.order.size()) != n) throw std::invalid_argument("order must list every vertex");
    for (int k = 0; k < n; ++k) {
        int v = sp.order[k];
        if (v < 0 || v >= n || pos[v] != -1) throw std::invalid_argument("order is not a permutation of V");
        pos[v] = k;
    }

    for (const auto& part : sp.parts) {
        bool ok = part.clique ? is_clique_set(g, part.vertices) : is_independent_set(g, part.vertices);
        if (!ok) return false;
    }
    for (size_t i = 0; i < sp.parts.size(); ++i) {
        for (size_t j = 0; j < sp.parts.size(); ++j) {
            if (i == j) continue;
            bool all = true, none = true, fwd = true, bwd = true;
            for (int x : sp.parts[i].vertices) {
                for (int y : sp.parts[j].vertices) {
                    bool e = g.adjacent(x, y);
                    bool before = pos[x] < pos[y];
                    all &= e;
                    none &= !e;
                    fwd &= (e == before);
                    bwd &= (e == !before);
                }
            }
            if (!(all || none || fwd || bwd)) return false;
        }
    }
    return true;
}

// --- exact lettericity ---

namespace {

struct ClassInfo {
    std::vector<std::vector<int>> blocks;  // ordered by smallest member
    std::vector<char> clique;              // per block; singletons count as independent
};

// Validates a candidate partition: each block a clique or an independent set.
bool classify_blocks(const Graph& g, ClassInfo& info) {
    info.clique.clear();
    for (const auto& b : info.blocks) {
        if (b.size() <= 1) {
            info.clique.push_back(0);
        } else if (is_clique_set(g, b)) {
            info.clique.push_back(1);
        } else if (is_independent_set(g, b)) {
            info.clique.push_back(0);
        } else {
            return false;
        }
    }
    return true;
}

// Cross structure of two letter classes. A single decoder pair can only
// realize a chain between two classes, so anything that is neither complete,
// empty nor 2K2-free is infeasible.
enum class Cross { complete, empty, chain, infeasible };

Cross classify_cross(const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
    bool all = true, none = true;
    for (int u : x)
        for (int v : y) {
            bool e = g.adjacent(u, v);
            all &= e;
            none &= !e;
        }
    if (all) return Cross::complete;
    if (none) return Cross::empty;
    // chain iff neighborhoods of y inside x are totally ordered by inclusion
    std::vector<std::vector<char>> nbs;
    for (int v : y) {
        std::vector<char> row;
        for (int u : x) row.push_back(g.adjacent(u, v) ? 1 : 0);
        nbs.push_back(std::move(row));
    }
    for (size_t i = 0; i < nbs.size(); ++i)
        for (size_t j = i + 1; j < nbs.size(); ++j) {
            bool ij = true, ji = true;
            for (size_t t = 0; t < nbs[i].size(); ++t) {
                if (nbs[i][t] && !nbs[j][t]) ij = false;
                if (nbs[j][t] && !nbs[i][t]) ji = false;
            }
            if (!ij && !ji) return Cross::infeasible;
        }
    return Cross::chain;
}

// Backtracking word-order search for a fixed letter assignment and decoder.
bool order_search(const Graph& g, const std::vector<int>& letter, const std::vector<char>& pairm, int k,
                  std::vector<int>& placed, std::vector<char>& used) {
    int n = g.vertex_count();
    if (static_cast<int>(placed.size()) == n) return true;
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int u : placed)
            if (g.adjacent(u, v) != (pairm[static_cast<size_t>(letter[u]) * k + letter[v]] != 0)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        placed.push_back(v);
        used[v] = 1;
        if (order_search(g, letter, pairm, k, placed, used)) return true;
        placed.pop_back();
        used[v] = 0;
    }
    return false;
}

std::string default_letter_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "x" + std::to_string(i);
}

// Enumerates set partitions of 0..n-1 into exactly k blocks via restricted
// growth strings; visits blocks ordered by smallest member.
template <typename F>
bool for_each_partition(int n, int k, F&& f) {
    std::vector<int> rgs(n, 0);
    while (true) {
        if (*std::max_element(rgs.begin(), rgs.end()) + 1 == k) {
            std::vector<std::vector<int>> blocks(k);
            for (int v = 0; v < n; ++v) blocks[rgs[v]].push_back(v);
            if (f(blocks)) return true;
        }
        int i = n - 1;
        for (; i > 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] < std::min(prefix_max + 1, k - 1)) break;
        }
        if (i == 0) return false;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
}

}  // namespace

std::optional<LettericityResult> lettericity_exact(const Graph& g, LettericityOptions opt) {
    int n = g.vertex_count();
    if (n > opt.max_n)
        throw std::runtime_error("lettericity search guard exceeded (n = " + std::to_string(n) +
                                 " > " + std::to_string(opt.max_n) + "); raise max_n to override");
    if (n == 0) {
        LettericityResult res;
        res.k = 0;
        res.rep.decoder = Decoder(std::vector<std::string>{});
        return res;
    }
    int k_cap = opt.k_max < 0 ? n : std::min(opt.k_max, n);

    for (int k = 1; k <= k_cap; ++k) {
        LettericityResult found;
        bool have = false;
        for_each_partition(n, k, [&](const std::vector<std::vector<int>>& blocks) {
            ClassInfo info;
            info.blocks = blocks;
            if (!classify_blocks(g, info)) return false;

            // forced decoder entries from block structure; free slots get both
            // orientations tried
            std::vector<char> base(static_cast<size_t>(k) * k, 0);
            for (int x = 0; x < k; ++x)
                if (info.clique[x]) base[static_cast<size_t>(x) * k + x] = 1;
            std::vector<std::pair<int, int>> free_pairs;
            bool feasible = true;
            for (int x = 0; x < k && feasible; ++x)
                for (int y = x + 1; y < k && feasible; ++y) {
                    switch (classify_cross(g, info.blocks[x], info.blocks[y])) {
                        case Cross::complete:
                            base[static_cast<size_t>(x) * k + y] = 1;
                            base[static_cast<size_t>(y) * k + x] = 1;
                            break;
                        case Cross::empty: break;
                        case Cross::chain: free_pairs.emplace_back(x, y); break;
                        case Cross::infeasible: feasible = false; break;
                    }
                }
            if (!feasible) return false;
            if (free_pairs.size() > 24)
                throw std::runtime_error("lettericity decoder search too large for this input");

            std::vector<int> letter(n);
            for (int x = 0; x < k; ++x)
                for (int v : info.blocks[x]) letter[v] = x;

            for (unsigned long bits = 0; bits < (1ul << free_pairs.size()); ++bits) {
                std::vector<char> pairm = base;
                for (size_t t = 0; t < free_pairs.size(); ++t) {
                    auto [x, y] = free_pairs[t];
                    if (bits >> t & 1)
                        pairm[static_cast<size_t>(x) * k + y] = 1;
                    else
                        pairm[static_cast<size_t>(y) * k + x] = 1;
                }
                std::vector<int> placed;
                std::vector<char> used(n, 0);
                if (!order_search(g, letter, pairm, k, placed, used)) continue;

                LetterRepresentation rep;
                std::vector<std::string> names;
                for (int x = 0; x < k; ++x) names.push_back(default_letter_name(x));
                rep.decoder = Decoder(std::move(names));
                for (int x = 0; x < k; ++x)
                    for (int y = 0; y < k; ++y)
                        if (pairm[static_cast<size_t>(x) * k + y]) rep.decoder.add_pair(x, y);
                for (int v : placed) rep.word.push_back(letter[v]);
                rep.vertex_of = placed;
                if (!verify_representation(g, rep))
                    throw std::logic_error("lettericity witness failed verification");
                found = LettericityResult{k, std::move(rep)};
                have = true;
                return true;
            }
            return false;
        });
        if (have) return found;
    }
    return std::nullopt;
}

// --- document codec ---

RepresentationDoc parse_representation_doc(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Decoder> dec;
    std::optional<Word> word;
    int lineno = 0;
    int pairs_lineno = 1;
    std::vector<std::string> pair_tokens;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;  // blank line
        if (key == "alphabet") {
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (toks.empty()) throw ParseError(lineno, "alphabet line has no letters");
            std::vector<std::string> names;
            bool compact = toks.size() == 1 && toks[0].size() > 1 &&
                           std::all_of(toks[0].begin(), toks[0].end(),
                                       [](unsigned char c) { return std::isalpha(c); }) &&
                           std::set<char>(toks[0].begin(), toks[0].end()).size() == toks[0].size();
            if (compact) {
                for (char c : toks[0]) names.emplace_back(1, c);
            } else {
                names = toks;
            }
            dec = Decoder(std::move(names));
        } else if (key == "pairs") {
            std::string t;
            pairs_lineno = lineno;
            while (ls >> t) pair_tokens.push_back(t);
        } else if (key == "word") {
            if (!dec) throw ParseError(lineno, "word line before alphabet line");
            std::string rest;
            std::getline(ls, rest);
            size_t first = rest.find_first_not_of(" \t\r");
            word = (first == std::string::npos) ? Word{} : parse_word(*dec, rest.substr(first));
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    if (!dec) throw ParseError(1, "missing alphabet line");
    for (const auto& tok : pair_tokens) {
        size_t comma = tok.find(',');
        int i, j;
        if (comma != std::string::npos) {
            i = dec->letter_index(tok.substr(0, comma));
            j = dec->letter_index(tok.substr(comma + 1));
        } else if (tok.size() == 2 && dec->single_char_alphabet()) {
            i = dec->letter_index(std::string_view(&tok[0], 1));
            j = dec->letter_index(std::string_view(&tok[1], 1));
        } else {
            throw ParseError(pairs_lineno, "cannot parse pair token '" + tok + "'");
        }
        if (i < 0 || j < 0) throw ParseError(pairs_lineno, "pair token '" + tok + "' uses unknown letter");
        dec->add_pair(i, j);
    }
    return {std::move(*dec), std::move(word)};
}

std::string emit_representation_doc(const Decoder& d, const std::optional<Word>& w) {
    std::string out = "alphabet";
    bool compact = d.single_char_alphabet();
    if (compact) {
        out += " ";
        for (const auto& l : d.alphabet) out += l;
    } else {
        for (const auto& l : d.alphabet) out += " " + l;
    }
    out += "\npairs";
    for (auto [i, j] : d.pairs()) {
        if (compact)
            out += " " + d.alphabet[i] + d.alphabet[j];
        else
            out += " " + d.alphabet[i] + "," + d.alphabet[j];
    }
    out += "\n";
    if (w) out += "word " + format_word(d, *w) + "\n";
    return out;
}

}  // namespace lg
