#include <doctest.h>

#include "cartanlift/permutation.hpp"

using namespace cartanlift;

TEST_CASE("tau images") {
    CHECK(tau(1) == Perm::identity(2));
    CHECK(tau(2) == Perm({1, 3, 2, 4}));
    CHECK(tau(3) == Perm({1, 3, 5, 2, 4, 6}));
}

TEST_CASE("sign of tau is (-1)^{r(r-1)/2}") {
    for (int r = 1; r <= 7; ++r) {
        int expected = (r * (r - 1) / 2) % 2 == 0 ? 1 : -1;
        CHECK(tau(r).sign() == expected);
    }
}

TEST_CASE("block composition: units and the f/g images") {
    CHECK(block_compose(Perm::identity(3),
                        {Perm::identity(2), Perm::identity(2), Perm::identity(2)}) ==
          Perm::identity(6));
    for (int r = 2; r <= 5; ++r) {
        // f(rho) = (1,3,...,2r-1)(2,4,...,2r), g(rho) = (1..r)(r+1..2r)
        Perm f1 = f_hom(r, 1);
        for (int l = 1; l <= r; ++l) {
            CHECK(f1(2 * l - 1) == (l == r ? 1 : 2 * l + 1));
            CHECK(f1(2 * l) == (l == r ? 2 : 2 * l + 2));
        }
        Perm g1 = g_hom(r, 1);
        for (int l = 1; l <= r; ++l) {
            CHECK(g1(l) == l % r + 1);
            CHECK(g1(r + l) == r + l % r + 1);
        }
    }
}

TEST_CASE("f and g are injective homomorphisms; conjugation f(rho^k) tau = tau g(rho^k)") {
    for (int r = 2; r <= 7; ++r) {
        Perm t = tau(r);
        for (int k = 0; k < r; ++k) {
            CHECK(f_hom(r, k) * f_hom(r, 1) == f_hom(r, k + 1));
            CHECK(g_hom(r, k) * g_hom(r, 1) == g_hom(r, k + 1));
            CHECK(f_hom(r, k) * t == t * g_hom(r, k));
            for (int l = 0; l < k; ++l) {
                CHECK(f_hom(r, k) != f_hom(r, l));
                CHECK(g_hom(r, k) != g_hom(r, l));
            }
        }
        CHECK(f_hom(r, 0) == Perm::identity(2 * r));
    }
}

TEST_CASE("splice action equals g") {
    for (int r = 2; r <= 6; ++r)
        for (int k = 0; k < r; ++k) CHECK(splice_action(r, k) == g_hom(r, k));
}

TEST_CASE("r=2 instances from the diagonal embedding") {
    CHECK(f_hom(2, 1).cycles_str() == "(1 3)(2 4)");
    CHECK(g_hom(2, 1).cycles_str() == "(1 2)(3 4)");
}

TEST_CASE("one-line and cycle parsers round-trip") {
    Perm p({3, 1, 2, 5, 4});
    CHECK(parse_oneline(p.str()) == p);
    CHECK(parse_cycles(p.cycles_str(), 5) == p);
    CHECK(parse_cycles("()", 4) == Perm::identity(4));
    CHECK(parse_oneline("(1,3,2,4)") == tau(2));
}
