#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "lg/cyclic3.hpp"
#include "lg/letters.hpp"
#include "lg/width.hpp"
#include "test_util.hpp"

using namespace lg;

namespace {

Graph sorted_restriction(const Decoder& d, const Word& w, const std::vector<int>& positions) {
    Word sub;
    for (int p : positions) sub.push_back(w[p]);
    return realize(d, sub);
}

// Minimum part count over all (partition, order) pairs passing the
// structure check; independent route to lettericity for tiny graphs.
int min_parts_by_structure(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    int best = n + 1;
    std::vector<int> rgs(n, 0);
    while (true) {
        int parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (parts < best) {
            StructuredPartition sp;
            sp.parts.resize(parts);
            for (int v = 0; v < n; ++v) sp.parts[rgs[v]].vertices.push_back(v);
            bool flags_ok = true;
            for (auto& part : sp.parts) {
                if (part.vertices.size() < 2)
                    part.clique = false;
                else if (is_clique_set(g, part.vertices))
                    part.clique = true;
                else if (is_independent_set(g, part.vertices))
                    part.clique = false;
                else
                    flags_ok = false;
            }
            if (flags_ok) {
                std::vector<int> order(n);
                std::iota(order.begin(), order.end(), 0);
                do {
                    sp.order = order;
                    if (verify_theorem1_structure(g, sp)) {
                        best = parts;
                        break;
                    }
                } while (std::next_permutation(order.begin(), order.end()));
            }
        }
        int i = n - 1;
        for (; i > 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] < std::min(prefix_max + 1, n - 1)) break;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return best;
}

}  // namespace

TEST_CASE("realize on the documented fixtures") {
    Decoder chain = Decoder::make("ab", {"ab"});
    Graph z2 = realize(chain, "abab");
    CHECK(z2.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {2, 3}});
    CHECK(z2 == generate(Family::zn, 2));

    CHECK(realize(chain, "") == Graph(0));

    Decoder thr = Decoder::make("ab", {"ab", "aa"});
    CHECK(realize(thr, "abab").edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {2, 3}});

    CHECK_THROWS_AS(realize(chain, "abx"), std::invalid_argument);
}

TEST_CASE("verify_representation") {
    Decoder chain = Decoder::make("ab", {"ab"});
    CHECK(verify_representation(generate(Family::complete, 2),
                                LetterRepresentation::identity(chain, parse_word(chain, "ab"))));
    CHECK(!verify_representation(generate(Family::edgeless, 2),
                                 LetterRepresentation::identity(chain, parse_word(chain, "ab"))));
    CHECK(verify_representation(generate(Family::zn, 3),
                                LetterRepresentation::identity(chain, parse_word(chain, "ababab"))));
    CHECK_THROWS_AS(verify_representation(generate(Family::edgeless, 3),
                                          LetterRepresentation::identity(chain, parse_word(chain, "ab"))),
                    std::invalid_argument);
}

TEST_CASE("verify_representation through a nontrivial vertex map") {
    Decoder chain = Decoder::make("ab", {"ab"});
    LetterRepresentation rep;
    rep.decoder = chain;
    rep.word = parse_word(chain, "ab");
    rep.vertex_of = {1, 0};
    CHECK(verify_representation(generate(Family::complete, 2), rep));
    rep.vertex_of = {0, 0};
    CHECK_THROWS_AS(verify_representation(generate(Family::complete, 2), rep), std::invalid_argument);
}

TEST_CASE("structure check on the documented fixtures") {
    Graph z2 = generate(Family::zn, 2);
    StructuredPartition sp;
    sp.parts = {{{0, 2}, false}, {{1, 3}, false}};
    sp.order = {0, 1, 2, 3};  // the word order of abab
    CHECK(verify_theorem1_structure(z2, sp));

    Graph k3 = generate(Family::complete, 3);
    StructuredPartition single;
    single.parts = {{{0, 1, 2}, true}};
    single.order = {2, 0, 1};
    CHECK(verify_theorem1_structure(k3, single));

    // C5 admits no 2-part structure under any order
    Graph c5 = generate(Family::cycle, 5);
    CHECK(min_parts_by_structure(c5) == 3);

    StructuredPartition bad;
    bad.parts = {{{0, 1}, false}};
    bad.order = {0, 1, 2};
    CHECK_THROWS_AS(verify_theorem1_structure(c5, bad), std::invalid_argument);
}

TEST_CASE("realize/verify roundtrip, exhaustive over small decoders and words") {
    // alphabet of 3 letters, every decoder, every word up to length 6;
    // alphabet of 2, every word up to length 8
    for (int sigma : {2, 3}) {
        int max_len = sigma == 2 ? 8 : 6;
        std::vector<std::string> names;
        for (int i = 0; i < sigma; ++i) names.emplace_back(1, static_cast<char>('a' + i));
        for (int dec_bits = 0; dec_bits < (1 << (sigma * sigma)); ++dec_bits) {
            Decoder d(names);
            for (int i = 0; i < sigma; ++i)
                for (int j = 0; j < sigma; ++j)
                    if (dec_bits >> (i * sigma + j) & 1) d.add_pair(i, j);
            Word w;
            auto rec = [&](auto&& self, int remaining) -> void {
                REQUIRE(verify_representation(realize(d, w), LetterRepresentation::identity(d, w)));
                if (remaining == 0) return;
                for (int letter = 0; letter < sigma; ++letter) {
                    w.push_back(letter);
                    self(self, remaining - 1);
                    w.pop_back();
                }
            };
            rec(rec, max_len);
        }
    }
}

TEST_CASE("deleting letters realizes the induced subgraph") {
    std::mt19937 rng(31);
    Decoder d = Decoder::make("abc", {"ab", "bc", "ca", "aa"});
    std::uniform_int_distribution<int> letter(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 9;
        Word w;
        for (int i = 0; i < n; ++i) w.push_back(letter(rng));
        Graph g = realize(d, w);
        std::vector<int> positions;
        for (int i = 0; i < n; ++i)
            if (rng() & 1) positions.push_back(i);
        CHECK(induced_subgraph(g, positions) == sorted_restriction(d, w, positions));
    }
}

TEST_CASE("exact lettericity on the documented fixtures") {
    auto k1 = lettericity_exact(generate(Family::complete, 1));
    REQUIRE(k1.has_value());
    CHECK(k1->k == 1);

    auto c5 = lettericity_exact(generate(Family::cycle, 5));
    REQUIRE(c5.has_value());
    CHECK(c5->k == 3);
    CHECK(recognize_cyclic3(generate(Family::cycle, 5)).has_value());

    auto z3 = lettericity_exact(generate(Family::zn, 3));
    REQUIRE(z3.has_value());
    CHECK(z3->k == 2);

    auto empty = lettericity_exact(Graph(0));
    REQUIRE(empty.has_value());
    CHECK(empty->k == 0);
}

TEST_CASE("lettericity guard and k_max") {
    CHECK_THROWS_AS(lettericity_exact(generate(Family::cycle, 11)), std::runtime_error);
    CHECK(lettericity_exact(generate(Family::cycle, 11), {.k_max = -1, .max_n = 11}).has_value());

    LettericityOptions only_two;
    only_two.k_max = 2;
    CHECK(!lettericity_exact(generate(Family::cycle, 5), only_two).has_value());
    CHECK(lettericity_exact(generate(Family::zn, 4), only_two).has_value());
}

TEST_CASE("lettericity witnesses verify and start at the true minimum") {
    auto check_graph = [](const Graph& g) {
        auto res = lettericity_exact(g);
        REQUIRE(res.has_value());
        REQUIRE(verify_representation(g, res->rep));
        REQUIRE(res->rep.decoder.size() == res->k);
        if (res->k > 1) {
            LettericityOptions below;
            below.k_max = res->k - 1;
            REQUIRE(!lettericity_exact(g, below).has_value());
        }
    };
    for (int n = 0; n <= 4; ++n) lgtest::for_each_graph(n, check_graph);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) check_graph(lgtest::random_graph(6, rng));
}

TEST_CASE("structure check agrees with exact lettericity on all tiny graphs") {
    for (int n = 0; n <= 5; ++n)
        lgtest::for_each_graph(n, [](const Graph& g) {
            auto res = lettericity_exact(g);
            REQUIRE(res.has_value());
            int structural = min_parts_by_structure(g);
            REQUIRE(structural == res->k);
        });
}

TEST_CASE("lettericity is bounded by neighbourhood diversity") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = lgtest::random_graph(2 + trial % 6, rng);
        auto res = lettericity_exact(g);
        REQUIRE(res.has_value());
        CHECK(res->k <= neighbourhood_diversity(g).diversity());
    }
}

TEST_CASE("representation document codec") {
    auto doc = parse_representation_doc("alphabet abc\npairs ab bc ca\nword abcabc\n");
    CHECK(doc.decoder.size() == 3);
    CHECK(doc.decoder.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
    REQUIRE(doc.word.has_value());
    CHECK(doc.word->size() == 6);
    CHECK(emit_representation_doc(doc.decoder, doc.word) == "alphabet abc\npairs ab bc ca\nword abcabc\n");

    auto grid_doc = parse_representation_doc("alphabet a11 a21\npairs a11,a21 a21,a21\nword a11 a21 a21\n");
    CHECK(grid_doc.decoder.alphabet == std::vector<std::string>{"a11", "a21"});
    CHECK(grid_doc.word->size() == 3);
    CHECK(emit_representation_doc(grid_doc.decoder, grid_doc.word) ==
          "alphabet a11 a21\npairs a11,a21 a21,a21\nword a11 a21 a21\n");

    // single multi-char letter with digits stays one letter
    auto one = parse_representation_doc("alphabet a12\npairs a12,a12\n");
    CHECK(one.decoder.size() == 1);
    CHECK(!one.word.has_value());

    CHECK_THROWS_AS(parse_representation_doc("pairs ab\n"), ParseError);
    CHECK_THROWS_AS(parse_representation_doc("alphabet ab\npairs ax\n"), ParseError);
    CHECK_THROWS_AS(parse_representation_doc("alphabet ab\nword abz\n"), std::invalid_argument);
}
