#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lg/grid.hpp"
#include "test_util.hpp"

using namespace lg;

namespace {

// columns 1..3, rows 1..2; nonzero cells a11=+1, a21=-1, a31=-1, a22=+1,
// a32=+1; signs c1=-1, c2=c3=1, r1=-1, r2=1
GridMatrix running_matrix() { return GridMatrix::parse("3 2\n0 1 1\n1 -1 -1\n"); }

SignVector running_signs() { return SignVector{{-1, 1, 1}, {-1, 1}}; }

GridMatrix random_pmm(std::mt19937& rng, SignVector& out_signs) {
    std::uniform_int_distribution<int> dim(1, 3);
    std::bernoulli_distribution coin(0.5);
    while (true) {
        int t = dim(rng), u = dim(rng);
        SignVector s;
        for (int k = 0; k < t; ++k) s.col.push_back(coin(rng) ? 1 : -1);
        for (int l = 0; l < u; ++l) s.row.push_back(coin(rng) ? 1 : -1);
        GridMatrix m(t, u);
        int nonzero = 0;
        for (int k = 1; k <= t; ++k)
            for (int l = 1; l <= u; ++l)
                if (coin(rng)) {
                    m.set_entry(k, l, s.col[k - 1] * s.row[l - 1]);
                    ++nonzero;
                }
        if (nonzero == 0) continue;
        out_signs = s;
        return m;
    }
}

CellWord random_word(const GridMatrix& m, int len, std::mt19937& rng) {
    auto cells = cell_alphabet(m);
    std::uniform_int_distribution<size_t> pick(0, cells.size() - 1);
    CellWord w;
    for (int i = 0; i < len; ++i) w.push_back(cells[pick(rng)]);
    return w;
}

Drawing drawing_of(const GridMatrix& m, const CellWord& cells, std::mt19937& rng) {
    // strictly increasing random rationals in (0,1)
    (void)m;
    Drawing d;
    long long den = 997;
    std::vector<long long> nums;
    std::uniform_int_distribution<long long> pick(1, den - 1);
    std::set<long long> used;
    while (static_cast<int>(used.size()) < static_cast<int>(cells.size())) used.insert(pick(rng));
    std::vector<long long> sorted(used.begin(), used.end());
    for (size_t i = 0; i < cells.size(); ++i) d.points.push_back({cells[i], {sorted[i], den}});
    return d;
}

}  // namespace

TEST_CASE("matrix text codec, top row first") {
    GridMatrix m = running_matrix();
    CHECK(m.cols() == 3);
    CHECK(m.rows() == 2);
    CHECK(m.entry(1, 1) == 1);
    CHECK(m.entry(2, 1) == -1);
    CHECK(m.entry(3, 1) == -1);
    CHECK(m.entry(1, 2) == 0);
    CHECK(m.entry(2, 2) == 1);
    CHECK(m.entry(3, 2) == 1);
    CHECK(GridMatrix::parse(m.to_text()) == m);
    CHECK_THROWS_AS(GridMatrix::parse("2 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(GridMatrix::parse("2 2\n1 0 0\n0 1\n"), ParseError);
    CHECK_THROWS_AS(GridMatrix::parse("2 2\n2 0\n0 1\n"), ParseError);
}

TEST_CASE("sign inference on the documented fixtures") {
    auto s = infer_signs(GridMatrix::parse("3 2\n1 0 -1\n-1 1 0\n"));
    REQUIRE(s.has_value());
    CHECK(s->col == std::vector<int>{-1, 1, 1});
    CHECK(s->row == std::vector<int>{1, -1});

    auto zero = infer_signs(GridMatrix::parse("3 2\n0 0 0\n0 0 0\n"));
    REQUIRE(zero.has_value());
    CHECK(zero->col == std::vector<int>{1, 1, 1});
    CHECK(zero->row == std::vector<int>{1, 1});

    CHECK(!infer_signs(GridMatrix::parse("2 2\n1 -1\n1 1\n")).has_value());

    auto running = infer_signs(running_matrix());
    REQUIRE(running.has_value());
    CHECK(running->col == running_signs().col);
    CHECK(running->row == running_signs().row);
}

TEST_CASE("sign inference vs exhaustive sign search, t+u up to 12") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<int> ent(-1, 1);
    for (int trial = 0; trial < 400; ++trial) {
        int t = dim(rng), u = dim(rng);
        GridMatrix m(t, u);
        for (int k = 1; k <= t; ++k)
            for (int l = 1; l <= u; ++l) m.set_entry(k, l, ent(rng));
        auto inferred = infer_signs(m);
        bool any = false;
        for (int mask = 0; mask < (1 << (t + u)) && !any; ++mask) {
            SignVector s;
            for (int k = 0; k < t; ++k) s.col.push_back(mask >> k & 1 ? 1 : -1);
            for (int l = 0; l < u; ++l) s.row.push_back(mask >> (t + l) & 1 ? 1 : -1);
            any = signs_valid(m, s);
        }
        REQUIRE(inferred.has_value() == any);
        if (inferred) REQUIRE(signs_valid(m, *inferred));
    }
}

TEST_CASE("decoder of the running matrix") {
    Decoder d = decoder_from_matrix(running_matrix(), running_signs());
    CHECK(d.alphabet == std::vector<std::string>{"a11", "a21", "a22", "a31", "a32"});
    auto has = [&](const char* x, const char* y) { return d.has_pair(d.letter_index(x), d.letter_index(y)); };

    // same-cell pairs follow the entry sign
    CHECK(has("a21", "a21"));
    CHECK(has("a31", "a31"));
    CHECK(!has("a11", "a11"));
    CHECK(!has("a22", "a22"));
    // independent cells, first above: both pairs
    CHECK(has("a22", "a31"));
    CHECK(has("a31", "a22"));
    // shared column 2, direction right: upper cell first
    CHECK(has("a22", "a21"));
    CHECK(!has("a21", "a22"));

    std::vector<std::pair<std::string, std::string>> expected = {
        {"a11", "a21"}, {"a11", "a31"}, {"a21", "a21"}, {"a21", "a31"}, {"a22", "a21"},
        {"a22", "a31"}, {"a31", "a22"}, {"a31", "a31"}, {"a32", "a22"}, {"a32", "a31"}};
    std::vector<std::pair<std::string, std::string>> actual;
    for (auto [i, j] : d.pairs()) actual.emplace_back(d.alphabet[i], d.alphabet[j]);
    CHECK(actual == expected);
}

TEST_CASE("word decoding hits the documented permutations") {
    GridMatrix m = running_matrix();
    SignVector s = running_signs();
    CHECK(psi(m, s, parse_cell_word(m, "a31 a31 a22 a21 a11 a32 a22")) == Permutation::parse("1527436"));
    CHECK(psi(m, s, parse_cell_word(m, "a31 a31 a22 a21 a32 a11 a22")) == Permutation::parse("1527436"));

    GridMatrix unit = GridMatrix::parse("1 1\n1\n");
    SignVector us{{1}, {1}};
    CHECK(psi(unit, us, parse_cell_word(unit, "a11 a11 a11")) == Permutation::parse("123"));
}

TEST_CASE("word encoding reads cells in distance order") {
    GridMatrix m = running_matrix();
    SignVector s = running_signs();
    CellWord cells = parse_cell_word(m, "a31 a31 a22 a21 a11 a32 a22");
    Drawing d;
    for (size_t i = 0; i < cells.size(); ++i)
        d.points.push_back({cells[i], {static_cast<long long>(i + 1), 8}});
    CHECK(format_cell_word(phi(m, s, d)) == "a31 a31 a22 a21 a11 a32 a22");
    CHECK(drawing_permutation(m, s, d) == Permutation::parse("1527436"));

    CHECK(phi(m, s, Drawing{}).empty());
    Drawing single;
    single.points.push_back({{1, 1}, {1, 2}});
    CHECK(phi(m, s, single).size() == 1);

    Drawing bad;
    bad.points.push_back({{1, 1}, {1, 2}});
    bad.points.push_back({{2, 1}, {1, 2}});
    CHECK_THROWS_AS(phi(m, s, bad), std::invalid_argument);
}

TEST_CASE("decoding inverts encoding on random drawings") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        SignVector s;
        GridMatrix m = trial % 6 == 0 ? running_matrix() : random_pmm(rng, s);
        if (trial % 6 == 0) s = running_signs();
        CellWord cells = random_word(m, 1 + static_cast<int>(rng() % 10), rng);
        Drawing d = drawing_of(m, cells, rng);
        Permutation direct = drawing_permutation(m, s, d);
        CHECK(psi(m, s, phi(m, s, d)) == direct);
    }
}

TEST_CASE("letter graph equals permutation graph over the matrix decoder") {
    GridMatrix m = running_matrix();
    SignVector s = running_signs();
    CHECK(check_grid_letter_bridge(m, s, parse_cell_word(m, "a31 a31 a22 a21 a11 a32 a22")));
    CHECK(check_grid_letter_bridge(m, s, {}));

    std::mt19937 rng(4321);
    for (int trial = 0; trial < 300; ++trial) {
        SignVector rs;
        GridMatrix rm = trial % 4 == 0 ? running_matrix() : random_pmm(rng, rs);
        if (trial % 4 == 0) rs = running_signs();
        CellWord w = random_word(rm, static_cast<int>(rng() % 11), rng);
        REQUIRE(check_grid_letter_bridge(rm, rs, w));
    }
}

TEST_CASE("swapping adjacent letters of independent cells keeps the permutation") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 200) {
        SignVector s;
        GridMatrix m = random_pmm(rng, s);
        CellWord w = random_word(m, 2 + static_cast<int>(rng() % 9), rng);
        bool swapped_any = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].k == w[i + 1].k || w[i].l == w[i + 1].l) continue;
            CellWord v = w;
            std::swap(v[i], v[i + 1]);
            REQUIRE(psi(m, s, v) == psi(m, s, w));
            swapped_any = true;
        }
        if (swapped_any) ++done;
    }
}

TEST_CASE("two-letter decoders map to their grid matrices") {
    // both cross pairs: a-cell top-left, b-cell bottom-right
    auto both = two_letter_grid_matrix(Decoder::make("ab", {"ab", "ba"}));
    CHECK(both.cls == TwoLetterClass::complete);
    CHECK(!both.complement);
    REQUIRE(both.matrices.size() == 1);
    CHECK(both.matrices[0].to_text() == "2 2\n1 0\n0 1\n");

    auto none = two_letter_grid_matrix(Decoder::make("ab", {"aa"}));
    CHECK(none.cls == TwoLetterClass::empty);
    CHECK(none.matrices[0].to_text() == "2 2\n0 -1\n1 0\n");  // a-cell top-right carries m_a

    auto thr = two_letter_grid_matrix(Decoder::make("ab", {"ab", "aa"}));
    CHECK(thr.cls == TwoLetterClass::threshold);
    REQUIRE(thr.matrices.size() == 1);
    CHECK(thr.matrices[0].to_text() == "2 2\n-1 1\n1 -1\n");

    auto chain = two_letter_grid_matrix(Decoder::make("ab", {"ab"}));
    CHECK(chain.cls == TwoLetterClass::chain);
    CHECK(!chain.complement);
    REQUIRE(chain.matrices.size() == 2);
    CHECK(chain.matrices[0].to_text() == "2 1\n1 1\n");
    CHECK(chain.matrices[1].to_text() == "1 2\n1\n1\n");

    auto cochain = two_letter_grid_matrix(Decoder::make("ab", {"ba", "aa", "bb"}));
    CHECK(cochain.cls == TwoLetterClass::chain);
    CHECK(cochain.complement);

    CHECK_THROWS_AS(two_letter_grid_matrix(Decoder::make("abc", {})), std::invalid_argument);
}

TEST_CASE("every two-letter graph appears over one of its matrices") {
    std::mt19937 rng(777);
    for (int dec_bits = 0; dec_bits < 16; ++dec_bits) {
        Decoder d = Decoder::make("ab", {});
        if (dec_bits & 1) d.add_pair(0, 0);
        if (dec_bits & 2) d.add_pair(0, 1);
        if (dec_bits & 4) d.add_pair(1, 0);
        if (dec_bits & 8) d.add_pair(1, 1);
        TwoLetterGrid tg = two_letter_grid_matrix(d);

        for (int trial = 0; trial < 12; ++trial) {
            int len = 1 + static_cast<int>(rng() % 8);
            Word w;
            for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % 2));
            Graph target = realize(d, w);
            if (tg.complement) target = complement(target);

            bool hosted = false;
            for (const auto& m : tg.matrices) {
                auto signs = infer_signs(m);
                REQUIRE(signs.has_value());
                auto cells = cell_alphabet(m);
                CellWord cw(len);
                auto rec = [&](auto&& self, int pos) -> bool {
                    if (pos == len) return lgtest::isomorphic(perm_graph(psi(m, *signs, cw)), target);
                    for (auto c : cells) {
                        cw[pos] = c;
                        if (self(self, pos + 1)) return true;
                    }
                    return false;
                };
                if (rec(rec, 0)) {
                    hosted = true;
                    break;
                }
            }
            REQUIRE(hosted);
        }
    }
}

TEST_CASE("bounded membership oracle") {
    GridMatrix unit = GridMatrix::parse("1 1\n1\n");
    SignVector us{{1}, {1}};
    auto perms = geom_permutations(unit, us, 3);
    // increasing cell: identities only, lengths 0..3
    REQUIRE(perms.size() == 4);
    for (const auto& p : perms) CHECK(p == Permutation::identity(p.size()));
}
