#include <doctest.h>

#include "cartanlift/fp_solver.hpp"
#include "cartanlift/resolution.hpp"
#include "cartanlift/steenrod.hpp"

using namespace cartanlift;

TEST_CASE("coboundary solver: zero, exact, and refuted instances") {
    StandardSimplex d1(1);
    Cochain zero(&d1, 1);
    auto r0 = is_coboundary(zero, 3);
    CHECK(r0.solvable);
    CHECK(r0.witness->is_zero());

    Cochain db = Cochain::dual(&d1, 0, 0).coboundary().reduced_mod(3);
    auto r1 = is_coboundary(db, 3);
    CHECK(r1.solvable);
    CHECK((r1.witness->coboundary() - db).is_zero_mod(3));

    BoundarySimplex s1(2);  // circle
    Cochain fund = Cochain::dual(&s1, 1, 0);
    auto r2 = is_coboundary(fund, 3);
    CHECK(!r2.solvable);
    // the refuting functional kills every coboundary and pairs with fund
    std::uint64_t pair = 0;
    for (const auto& [idx, v] : fund.values()) pair += r2.refuting_functional[idx] * v.mod(3);
    CHECK(pair % 3 != 0);
    for (int i = 0; i < s1.count(0); ++i) {
        Cochain d = Cochain::dual(&s1, 0, i).coboundary();
        std::uint64_t acc = 0;
        for (const auto& [idx, v] : d.values()) acc += r2.refuting_functional[idx] * v.mod(3);
        CHECK(acc % 3 == 0);
    }
}

TEST_CASE("cocycle spanning sets have the right ranks") {
    StandardSimplex d2(2);
    CHECK(cocycle_basis(&d2, 0, 3).size() == 1);
    CHECK(cocycle_basis(&d2, 1, 3).size() == 2);
    CHECK(cocycle_basis(&d2, 2, 3).size() == 1);
    BoundarySimplex s2(3);
    CHECK(cocycle_basis(&s2, 0, 3).size() == 1);
    CHECK(cocycle_basis(&s2, 1, 3).size() == 3);
    CHECK(cocycle_basis(&s2, 2, 3).size() == 4);
    for (int d = 0; d <= 2; ++d)
        for (const Cochain& c : cocycle_basis(&s2, d, 3)) CHECK(c.is_cocycle_mod(3));
}

TEST_CASE("normalization constant") {
    CHECK(nu(0, 3) == 1);
    CHECK(nu(1, 3) == 1);
    CHECK(nu(2, 3) == -1);
    CHECK(nu(1, 5) == 2);
    CHECK(nu(0, 5) == 1);
    CHECK(nu(0, 7) == 1);
}

TEST_CASE("arity-one cup products collapse to the identity or vanish") {
    StandardSimplex d1(1);
    Cochain a = Cochain::dual(&d1, 1, 0);
    CHECK((cup_ri(1, 0, {a}) - a).is_zero());
    for (int i = 1; i <= 3; ++i) CHECK(cup_ri(1, i, {a}).is_zero());
}

TEST_CASE("d_rep of the unit point cocycle") {
    StandardSimplex pt(0);
    Cochain unit = Cochain::dual(&pt, 0, 0);
    CHECK((d_rep(0, 3, unit) - unit).is_zero());
    for (int i = 1; i <= 3; ++i) CHECK(d_rep(i, 3, unit).is_zero());
}

TEST_CASE("d_rep sends mod-3 cocycles to mod-3 cocycles") {
    StandardSimplex d2(2);
    BoundarySimplex s3(3);
    auto run = [](const SimplicialSetBase* host) {
        for (int d = 0; d <= host->top_dim(); ++d)
            for (const Cochain& a : cocycle_basis(host, d, 3))
                for (int i = 0; i <= 3 * host->top_dim(); ++i) {
                    int outd = 3 * d - i;
                    if (outd < 0 || outd > host->top_dim()) continue;
                    CHECK(d_rep(i, 3, a).is_cocycle_mod(3));
                }
    };
    run(&d2);
    run(&s3);
}

TEST_CASE("non-cocycle input is rejected") {
    StandardSimplex d1(1);
    Cochain notc = Cochain::dual(&d1, 0, 0);  // coboundary nonzero mod 3
    CHECK(!notc.is_cocycle_mod(3));
    CHECK_THROWS_AS(d_rep(1, 3, notc), std::invalid_argument);
    CHECK_THROWS_AS(steenrod_rep(1, 0, 3, notc), std::invalid_argument);
}

TEST_CASE("steenrod representative: vanishing index and the unit instance") {
    StandardSimplex pt(0);
    Cochain unit = Cochain::dual(&pt, 0, 0);
    // (2s-n)(p-1)-eps < 0
    CHECK(steenrod_rep(-1, 0, 3, unit).is_zero());
    CHECK((steenrod_rep(0, 0, 3, unit) - unit).is_zero());
    CHECK(steenrod_rep(0, 1, 3, unit).is_zero());  // index -1
}

TEST_CASE("unstable relation on spheres, solver-certified") {
    for (int n = 1; n <= 2; ++n) {
        BoundarySimplex sphere(n + 1);
        Cochain a = Cochain::dual(&sphere, n, 0).reduced_mod(3);
        Cochain rep = d_rep(n * 2, 3, a);
        Cochain diff = (rep - BigInt(nu(n, 3)) * a).reduced_mod(3);
        CHECK(is_coboundary(diff, 3).solvable);
        // non-vacuous: the representative itself is not a coboundary
        CHECK(!is_coboundary(rep.reduced_mod(3), 3).solvable);
    }
}

TEST_CASE("representatives outside the parity pattern are coboundaries") {
    // On the 2-sphere with p = 3: for the fundamental cocycle (homological
    // degree -2), indices i with i not a multiple of p-1 give classes that
    // must vanish, certified by the solver.
    BoundarySimplex sphere(3);
    Cochain a = Cochain::dual(&sphere, 2, 0).reduced_mod(3);
    Cochain rep = d_rep(5, 3, a);  // output degree 1, 5 not a multiple of 2
    CHECK(rep.is_cocycle_mod(3));
    CHECK(is_coboundary(rep.reduced_mod(3), 3).solvable);
}
