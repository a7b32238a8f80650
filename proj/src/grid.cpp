#include "lg/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lg {

GridMatrix::GridMatrix(int cols, int rows) : t_(cols), u_(rows) {
    if (cols <= 0 || rows <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    entries_.assign(static_cast<size_t>(cols) * rows, 0);
}

int GridMatrix::entry(int k, int l) const {
    if (k < 1 || k > t_ || l < 1 || l > u_) throw std::invalid_argument("matrix index out of range");
    return entries_[static_cast<size_t>(k - 1) * u_ + (l - 1)];
}

void GridMatrix::set_entry(int k, int l, int value) {
    if (k < 1 || k > t_ || l < 1 || l > u_) throw std::invalid_argument("matrix index out of range");
    if (value < -1 || value > 1) throw std::invalid_argument("matrix entries are -1, 0 or 1");
    entries_[static_cast<size_t>(k - 1) * u_ + (l - 1)] = value;
}

GridMatrix GridMatrix::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "missing header \"t u\"");
    ++lineno;
    int t = 0, u = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> t >> u) || (hs >> extra) || t <= 0 || u <= 0)
            throw ParseError(1, "malformed header, expected \"t u\" with positive dimensions");
    }
    GridMatrix m(t, u);
    for (int display_row = 0; display_row < u; ++display_row) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "missing matrix row");
        ++lineno;
        std::istringstream rs(line);
        int l = u - display_row;  // text shows the top row first
        for (int k = 1; k <= t; ++k) {
            int v;
            if (!(rs >> v)) throw ParseError(lineno, "row has fewer than t entries");
            if (v < -1 || v > 1) throw ParseError(lineno, "entries must be -1, 0 or 1");
            m.set_entry(k, l, v);
        }
        std::string extra;
        if (rs >> extra) throw ParseError(lineno, "row has more than t entries");
    }
    return m;
}

std::string GridMatrix::to_text() const {
    std::string out = std::to_string(t_) + " " + std::to_string(u_) + "\n";
    for (int l = u_; l >= 1; --l) {
        for (int k = 1; k <= t_; ++k) {
            if (k > 1) out += " ";
            out += std::to_string(entry(k, l));
        }
        out += "\n";
    }
    return out;
}

bool signs_valid(const GridMatrix& m, const SignVector& s) {
    if (static_cast<int>(s.col.size()) != m.cols() || static_cast<int>(s.row.size()) != m.rows())
        return false;
    for (int x : s.col)
        if (x != 1 && x != -1) return false;
    for (int x : s.row)
        if (x != 1 && x != -1) return false;
    for (int k = 1; k <= m.cols(); ++k)
        for (int l = 1; l <= m.rows(); ++l) {
            int e = m.entry(k, l);
            if (e != 0 && e != s.col[k - 1] * s.row[l - 1]) return false;
        }
    return true;
}

std::optional<SignVector> infer_signs(const GridMatrix& m) {
    int t = m.cols(), u = m.rows();
    int nodes = t + u;  // columns first, then rows
    std::vector<int> sign(nodes, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(nodes);  // (other node, required product)
    for (int k = 1; k <= t; ++k)
        for (int l = 1; l <= u; ++l) {
            int e = m.entry(k, l);
            if (e == 0) continue;
            adj[k - 1].emplace_back(t + l - 1, e);
            adj[t + l - 1].emplace_back(k - 1, e);
        }
    for (int start = 0; start < nodes; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::vector<int> stack{start}, comp{start};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, prod] : adj[x]) {
                int want = prod * sign[x];
                if (sign[y] == 0) {
                    sign[y] = want;
                    stack.push_back(y);
                    comp.push_back(y);
                } else if (sign[y] != want) {
                    return std::nullopt;
                }
            }
        }
        int plus = 0;
        for (int x : comp) plus += sign[x] == 1;
        if (2 * plus < static_cast<int>(comp.size()))
            for (int x : comp) sign[x] = -sign[x];  // majority of +1; ties keep the root at +1
    }
    SignVector s;
    s.col.assign(sign.begin(), sign.begin() + t);
    s.row.assign(sign.begin() + t, sign.end());
    return s;
}

std::string cell_name(CellLetter c) { return "a" + std::to_string(c.k) + std::to_string(c.l); }

std::vector<CellLetter> cell_alphabet(const GridMatrix& m) {
    std::vector<CellLetter> cells;
    for (int k = 1; k <= m.cols(); ++k)
        for (int l = 1; l <= m.rows(); ++l)
            if (m.entry(k, l) != 0) cells.push_back({k, l});
    return cells;
}

CellWord parse_cell_word(const GridMatrix& m, std::string_view text) {
    auto cells = cell_alphabet(m);
    std::map<std::string, CellLetter> byname;
    for (auto c : cells) byname[cell_name(c)] = c;
    CellWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        auto it = byname.find(tok);
        if (it == byname.end()) throw std::invalid_argument("unknown cell letter '" + tok + "'");
        w.push_back(it->second);
    }
    return w;
}

std::string format_cell_word(const CellWord& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += cell_name(w[i]);
    }
    return out;
}

Decoder decoder_from_matrix(const GridMatrix& m, const SignVector& s) {
    if (!signs_valid(m, s)) throw std::invalid_argument("sign vector does not fit the matrix");
    auto cells = cell_alphabet(m);
    std::vector<std::string> names;
    for (auto c : cells) names.push_back(cell_name(c));
    Decoder d(std::move(names));
    auto index_of = [&](CellLetter c) {
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == c) return static_cast<int>(i);
        throw std::logic_error("cell not in alphabet");
    };

    for (size_t i = 0; i < cells.size(); ++i) {
        if (m.entry(cells[i].k, cells[i].l) == -1) d.add_pair(static_cast<int>(i), static_cast<int>(i));
        for (size_t j = i + 1; j < cells.size(); ++j) {
            CellLetter A = cells[i], B = cells[j];  // alphabet order gives A.k <= B.k
            if (A.k != B.k && A.l != B.l) {
                // independent cells: adjacent iff one is left of and above the other
                if (A.l > B.l) {
                    d.add_pair(index_of(A), index_of(B));
                    d.add_pair(index_of(B), index_of(A));
                }
            } else if (A.k == B.k) {
                // shared column: the column direction decides which occurrence
                // comes first in the word
                CellLetter above = A.l > B.l ? A : B;
                CellLetter below = A.l > B.l ? B : A;
                if (s.col[A.k - 1] == 1)
                    d.add_pair(index_of(above), index_of(below));
                else
                    d.add_pair(index_of(below), index_of(above));
            } else {
                // shared row
                CellLetter left = A.k < B.k ? A : B;
                CellLetter right = A.k < B.k ? B : A;
                if (s.row[A.l - 1] == 1)
                    d.add_pair(index_of(right), index_of(left));
                else
                    d.add_pair(index_of(left), index_of(right));
            }
        }
    }
    return d;
}

namespace {

using Rat = Drawing::Dist;

struct PlacedPoint {
    Rat x, y;
};

PlacedPoint place_point(const GridMatrix& m, const SignVector& s, CellLetter c, const Rat& dist) {
    int e = m.entry(c.k, c.l);
    if (e == 0) throw std::invalid_argument("cell " + cell_name(c) + " is empty");
    if (dist <= Rat(0) || dist >= Rat(1)) throw std::invalid_argument("distances must lie strictly in (0,1)");
    // base point: the cell corner where the column and row directions start
    long long bx = (s.col[c.k - 1] == 1) ? c.k - 1 : c.k;
    long long by = (s.row[c.l - 1] == 1) ? c.l - 1 : c.l;
    int dx = (s.col[c.k - 1] == 1) ? 1 : -1;
    int dy = (s.row[c.l - 1] == 1) ? 1 : -1;
    return {Rat(bx) + Rat(dx) * dist, Rat(by) + Rat(dy) * dist};
}

Permutation permutation_of_points(const std::vector<PlacedPoint>& pts) {
    int n = static_cast<int>(pts.size());
    std::vector<int> by_y(n), by_x(n);
    std::iota(by_y.begin(), by_y.end(), 0);
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_y.begin(), by_y.end(), [&](int i, int j) { return pts[i].y < pts[j].y; });
    std::sort(by_x.begin(), by_x.end(), [&](int i, int j) { return pts[i].x < pts[j].x; });
    for (int i = 0; i + 1 < n; ++i) {
        if (pts[by_y[i]].y == pts[by_y[i + 1]].y)
            throw std::invalid_argument("two points share a horizontal line");
        if (pts[by_x[i]].x == pts[by_x[i + 1]].x)
            throw std::invalid_argument("two points share a vertical line");
    }
    std::vector<int> label(n);  // bottom to top
    for (int i = 0; i < n; ++i) label[by_y[i]] = i + 1;
    std::vector<int> one_line;
    for (int i = 0; i < n; ++i) one_line.push_back(label[by_x[i]]);
    return Permutation(std::move(one_line));
}

std::vector<PlacedPoint> place_word(const GridMatrix& m, const SignVector& s, const CellWord& w) {
    if (!signs_valid(m, s)) throw std::invalid_argument("sign vector does not fit the matrix");
    long long n = static_cast<long long>(w.size());
    std::vector<PlacedPoint> pts;
    for (long long i = 0; i < n; ++i) pts.push_back(place_point(m, s, w[i], Rat(i + 1, n + 1)));
    return pts;
}

// rank of each word position in left-to-right reading order
std::vector<int> x_ranks(const std::vector<PlacedPoint>& pts) {
    int n = static_cast<int>(pts.size());
    std::vector<int> by_x(n), rank(n);
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](int i, int j) { return pts[i].x < pts[j].x; });
    for (int r = 0; r < n; ++r) rank[by_x[r]] = r;
    return rank;
}

}  // namespace

Permutation drawing_permutation(const GridMatrix& m, const SignVector& s, const Drawing& d) {
    if (!signs_valid(m, s)) throw std::invalid_argument("sign vector does not fit the matrix");
    std::vector<PlacedPoint> pts;
    Rat prev(0);
    for (const auto& p : d.points) {
        if (p.dist <= prev) throw std::invalid_argument("drawing distances must strictly increase");
        prev = p.dist;
        pts.push_back(place_point(m, s, p.cell, p.dist));
    }
    return permutation_of_points(pts);
}

Permutation psi(const GridMatrix& m, const SignVector& s, const CellWord& w) {
    return permutation_of_points(place_word(m, s, w));
}

CellWord phi(const GridMatrix& m, const SignVector& s, const Drawing& d) {
    if (!signs_valid(m, s)) throw std::invalid_argument("sign vector does not fit the matrix");
    CellWord w;
    Rat prev(0);
    for (const auto& p : d.points) {
        if (p.dist <= prev) throw std::invalid_argument("drawing distances must strictly increase");
        prev = p.dist;
        if (m.entry(p.cell.k, p.cell.l) == 0)
            throw std::invalid_argument("cell " + cell_name(p.cell) + " is empty");
        w.push_back(p.cell);
    }
    return w;
}

bool check_grid_letter_bridge(const GridMatrix& m, const SignVector& s, const CellWord& w) {
    Decoder dec = decoder_from_matrix(m, s);
    Word letters;
    for (auto c : w) {
        int idx = dec.letter_index(cell_name(c));
        if (idx < 0) throw std::invalid_argument("word letter outside the cell alphabet");
        letters.push_back(idx);
    }
    Graph letter_graph = realize(dec, letters);

    auto pts = place_word(m, s, w);
    Graph perm = perm_graph(permutation_of_points(pts));
    auto rank = x_ranks(pts);

    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (letter_graph.adjacent(i, j) != perm.adjacent(rank[i], rank[j])) return false;
    return true;
}

std::vector<Permutation> geom_permutations(const GridMatrix& m, const SignVector& s, int max_len) {
    auto cells = cell_alphabet(m);
    std::set<Permutation> seen;
    CellWord w;
    auto rec = [&](auto&& self, int remaining) -> void {
        seen.insert(psi(m, s, w));
        if (remaining == 0) return;
        for (auto c : cells) {
            w.push_back(c);
            self(self, remaining - 1);
            w.pop_back();
        }
    };
    rec(rec, max_len);
    return {seen.begin(), seen.end()};
}

std::string_view two_letter_class_name(TwoLetterClass c) {
    switch (c) {
        case TwoLetterClass::complete: return "complete";
        case TwoLetterClass::empty: return "empty";
        case TwoLetterClass::threshold: return "threshold";
        case TwoLetterClass::chain: return "chain";
    }
    return "?";
}

TwoLetterGrid two_letter_grid_matrix(const Decoder& d) {
    if (d.size() != 2) throw std::invalid_argument("decoder must have a 2-letter alphabet");
    bool ab = d.has_pair(0, 1), ba = d.has_pair(1, 0);
    bool sa = d.has_pair(0, 0), sb = d.has_pair(1, 1);
    int ma = sa ? -1 : 1, mb = sb ? -1 : 1;

    auto two_by_two = [](int e11, int e21, int e12, int e22) {
        GridMatrix m(2, 2);
        m.set_entry(1, 1, e11);
        m.set_entry(2, 1, e21);
        m.set_entry(1, 2, e12);
        m.set_entry(2, 2, e22);
        return m;
    };

    TwoLetterGrid out{TwoLetterClass::chain, false, {}};
    if (ab && ba) {
        // all edges between the classes: a-cell top-left, b-cell bottom-right
        out.cls = TwoLetterClass::complete;
        out.matrices.push_back(two_by_two(0, mb, ma, 0));
        return out;
    }
    if (!ab && !ba) {
        // no edges: a-cell top-right, b-cell bottom-left
        out.cls = TwoLetterClass::empty;
        out.matrices.push_back(two_by_two(mb, 0, 0, ma));
        return out;
    }
    // exactly one cross pair; the (b,a) case mirrors (a,b) with letters swapped
    int selfs = static_cast<int>(sa) + static_cast<int>(sb);
    if (selfs == 1) {
        out.cls = TwoLetterClass::threshold;
        out.matrices.push_back(two_by_two(1, -1, -1, 1));  // the x-figure
        return out;
    }
    out.cls = TwoLetterClass::chain;
    out.complement = (selfs == 2);
    GridMatrix row(2, 1);
    row.set_entry(1, 1, 1);
    row.set_entry(2, 1, 1);
    GridMatrix col(1, 2);
    col.set_entry(1, 1, 1);
    col.set_entry(1, 2, 1);
    out.matrices.push_back(row);
    out.matrices.push_back(col);
    return out;
}

}  // namespace lg
