#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "lg/graph.hpp"
#include "lg/permutations.hpp"
#include "test_util.hpp"

using namespace lg;

namespace {

const std::vector<Permutation> kThresholdAvoiders = {
    Permutation::parse("2143"), Permutation::parse("3412"), Permutation::parse("2413"),
    Permutation::parse("3142")};

template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("parse and format") {
    CHECK(Permutation::parse("415263").one_line() == std::vector<int>{4, 1, 5, 2, 6, 3});
    CHECK(Permutation::parse("415263").to_string() == "415263");
    Permutation big = Permutation::parse("10,2,3,4,5,6,7,8,9,1");
    CHECK(big.size() == 10);
    CHECK(big.to_string() == "10,2,3,4,5,6,7,8,9,1");
    CHECK_THROWS_AS(Permutation::parse("1123"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("140"), std::invalid_argument);
}

TEST_CASE("permutation graph fixtures") {
    Graph g = perm_graph(Permutation::parse("415263"));
    CHECK(g.edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {0, 5}, {2, 3}, {2, 5}, {4, 5}});
    CHECK(g == generate(Family::zn, 3));

    CHECK(perm_graph(Permutation::identity(5)) == generate(Family::edgeless, 5));
    CHECK(perm_graph(Permutation::parse("54321")) == generate(Family::complete, 5));
}

TEST_CASE("pattern containment fixtures") {
    Permutation p = Permutation::parse("415263");
    CHECK(contains_pattern(p, p));
    CHECK(contains_pattern(p, Permutation::parse("21")));
    CHECK(!contains_pattern(p, Permutation::parse("2143")));
}

TEST_CASE("avoidance fixtures") {
    CHECK(avoids_all(Permutation::identity(5), std::vector<Permutation>{Permutation::parse("21")}));
    CHECK(!avoids_all(Permutation::parse("2143"), kThresholdAvoiders));
    CHECK(avoids_all(Permutation::parse("415263"), std::vector<Permutation>{Permutation::parse("321")}));
}

TEST_CASE("containment is reflexive and transitive on random triples") {
    std::mt19937 rng(404);
    auto random_perm = [&](int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        return Permutation(v);
    };
    for (int trial = 0; trial < 200; ++trial) {
        Permutation a = random_perm(3 + static_cast<int>(rng() % 3));
        Permutation b = random_perm(4 + static_cast<int>(rng() % 3));
        Permutation c = random_perm(6 + static_cast<int>(rng() % 3));
        CHECK(contains_pattern(a, a));
        if (contains_pattern(c, b) && contains_pattern(b, a)) CHECK(contains_pattern(c, a));
    }
}

TEST_CASE("value complement flips the permutation graph exactly") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            REQUIRE(perm_graph(p.value_complement()) == complement(perm_graph(p)));
        });
}

TEST_CASE("reversal complements the graph up to the position flip") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            Graph rev = perm_graph(p.reversed());
            Graph comp = complement(perm_graph(p));
            int m = p.size();
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    REQUIRE(rev.adjacent(i, j) == comp.adjacent(m - 1 - j, m - 1 - i));
        });
}

TEST_CASE("threshold graphs are exactly the x-figure avoiders, lengths <= 6") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            REQUIRE(is_threshold(perm_graph(p)) == avoids_all(p, kThresholdAvoiders));
        });
}

TEST_CASE("triangle- and 2K2-freeness transfer to 321/2143 avoidance, lengths <= 6") {
    const std::vector<Permutation> qs = {Permutation::parse("321"), Permutation::parse("2143")};
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            Graph g = perm_graph(p);
            bool free = !contains_induced(g, Pattern::k3) && !contains_induced(g, Pattern::two_k2);
            REQUIRE(free == avoids_all(p, qs));
        });
}
