#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "stab/error.hpp"
#include "stab/perm.hpp"
#include "stab/permgroup.hpp"

using namespace stab;

namespace {

Perm transposition(int n, int a, int b) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::swap(img[a], img[b]);
    return Perm(std::move(img));
}

Perm cycle_all(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return Perm(std::move(img));
}

// Closure of the generator set under composition, by plain BFS.  Only for
// groups small enough to hold in memory.
std::set<std::vector<int>> brute_closure(int n, const std::vector<Perm>& gens) {
    std::set<std::vector<int>> seen;
    std::vector<Perm> frontier;
    Perm id(n);
    seen.insert(id.image());
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : gens) {
                Perm q = compose(p, g);
                if (seen.insert(q.image()).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("perm basics") {
    Perm id(4);
    CHECK(id.is_identity());
    Perm t = transposition(4, 1, 3);
    CHECK_FALSE(t.is_identity());
    CHECK(t(1) == 3);
    CHECK(t(0) == 0);
    CHECK(compose(t, t).is_identity());
    CHECK(t.inverse() == t);
    Perm c = cycle_all(5);
    CHECK(compose(c, c.inverse()).is_identity());
    // compose(p, q) applies p first.
    Perm s = compose(cycle_all(3), transposition(3, 0, 1));
    CHECK(s(0) == 0);  // 0 -> 1 -> 0
    CHECK(s(2) == 1);  // 2 -> 0 -> 1

    CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), parse_error);
    CHECK_THROWS_AS(Perm(std::vector<int>{0, 3}), parse_error);
    CHECK_THROWS_AS(Perm(0), parse_error);
    CHECK_THROWS_AS(compose(Perm(3), Perm(4)), parse_error);
}

TEST_CASE("symmetric group orders") {
    for (int n = 2; n <= 8; ++n) {
        PermGroup g(n);
        CHECK(g.is_trivial());
        g.add_generator(transposition(n, 0, 1));
        g.add_generator(cycle_all(n));
        mpz_class expect = 1;
        for (int i = 2; i <= n; ++i) expect *= i;
        CHECK(g.order() == expect);
        CHECK_FALSE(g.is_trivial());
    }
}

TEST_CASE("alternating group membership") {
    // A_4 from two 3-cycles.
    PermGroup g(4);
    g.add_generator(Perm(std::vector<int>{1, 2, 0, 3}));
    g.add_generator(Perm(std::vector<int>{0, 2, 3, 1}));
    CHECK(g.order() == 12);
    CHECK(g.contains(Perm(std::vector<int>{1, 0, 3, 2})));   // double transposition
    CHECK_FALSE(g.contains(transposition(4, 0, 1)));         // odd
    CHECK(g.contains(Perm(4)));
    CHECK_FALSE(g.contains(Perm(5)));  // degree mismatch is just "not a member"
}

TEST_CASE("add_generator reports growth") {
    PermGroup g(5);
    CHECK(g.add_generator(transposition(5, 0, 1)));
    CHECK_FALSE(g.add_generator(transposition(5, 0, 1)));
    auto v0 = g.version();
    CHECK_FALSE(g.add_generator(Perm(5)));  // identity never enlarges
    CHECK(g.version() == v0);
    CHECK(g.add_generator(transposition(5, 2, 3)));
    CHECK(g.version() > v0);
    CHECK(g.order() == 4);
    CHECK(g.generators().size() == 2);
    CHECK_THROWS_AS(g.add_generator(Perm(6)), parse_error);
}

TEST_CASE("chain matches brute closure on assorted small groups") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);  // degrees 3..6
        std::vector<Perm> gens;
        int k = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < k; ++i) gens.push_back(random_perm(n, rng));
        PermGroup g(n);
        for (const Perm& p : gens) g.add_generator(p);
        auto closure = brute_closure(n, gens);
        CHECK(g.order() == mpz_class(static_cast<unsigned long>(closure.size())));
        // Membership agrees in both directions on every permutation of n.
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        do {
            CHECK(g.contains(Perm(img)) == (closure.count(img) > 0));
        } while (std::next_permutation(img.begin(), img.end()));
    }
}

TEST_CASE("orbits") {
    PermGroup g(6);
    g.add_generator(transposition(6, 0, 1));
    g.add_generator(transposition(6, 1, 2));
    g.add_generator(transposition(6, 4, 5));
    auto orbs = g.orbits();
    REQUIRE(orbs.size() == 3);
    CHECK(orbs[0] == std::vector<int>{0, 1, 2});
    CHECK(orbs[1] == std::vector<int>{3});
    CHECK(orbs[2] == std::vector<int>{4, 5});
}

TEST_CASE("orbit ids under fixing are sound") {
    // Dihedral group of the square 0-1-2-3.
    PermGroup g(4);
    g.add_generator(Perm(std::vector<int>{1, 2, 3, 0}));
    g.add_generator(Perm(std::vector<int>{0, 3, 2, 1}));
    CHECK(g.order() == 8);
    auto ids = g.orbit_ids_fixing({0});
    // Soundness: equal ids really are joined by a member fixing 0.
    // The reflection through 0 joins 1 and 3; 2 is joined to nothing but
    // itself, and never to 0.
    CHECK(ids[0] != ids[2]);
    CHECK(ids[1] == ids[3]);
    auto ids2 = g.orbit_ids_fixing({0, 1});
    // Fixing two adjacent corners pins everything.
    CHECK(ids2[2] != ids2[3]);
    CHECK(ids2[0] != ids2[1]);
}

TEST_CASE("base prefix consistency") {
    PermGroup g(6, {2, 4});
    g.add_generator(cycle_all(6));
    g.add_generator(transposition(6, 0, 1));
    CHECK(g.order() == 720);
    auto b = g.base();
    REQUIRE(!b.empty());
    CHECK(b[0] == 2);  // hint honoured by the first level
    std::set<int> uniq(b.begin(), b.end());
    CHECK(uniq.size() == b.size());
}

TEST_CASE("deterministic construction") {
    auto build = [] {
        PermGroup g(7);
        g.add_generator(cycle_all(7));
        g.add_generator(transposition(7, 2, 5));
        return g;
    };
    PermGroup a = build();
    PermGroup b = build();
    CHECK(a.order() == b.order());
    CHECK(a.base() == b.base());
    REQUIRE(a.generators().size() == b.generators().size());
    for (std::size_t i = 0; i < a.generators().size(); ++i)
        CHECK(a.generators()[i] == b.generators()[i]);
}
