#include <doctest.h>

#include <cstdlib>

#include "cartanlift/ez.hpp"
#include "cartanlift/barratt_eccles.hpp"
#include "cartanlift/json_io.hpp"
#include "cartanlift/simplicial.hpp"
#include "cartanlift/tuples.hpp"

using namespace cartanlift;

namespace {

std::vector<std::vector<int>> weakly_increasing(int top, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    while (true) {
        out.push_back(cur);
        int k = len - 1;
        while (k >= 0 && cur[k] == top) --k;
        if (k < 0) break;
        ++cur[k];
        for (int j = k + 1; j < len; ++j) cur[j] = cur[k];
    }
    return out;
}

}  // namespace

TEST_CASE("standard simplices and boundaries have the expected cells") {
    StandardSimplex d0(0);
    CHECK(d0.count(0) == 1);
    StandardSimplex d2(2);
    CHECK(d2.count(0) == 3);
    CHECK(d2.count(1) == 3);
    CHECK(d2.count(2) == 1);
    BoundarySimplex s2(3);
    CHECK(s2.count(0) == 4);
    CHECK(s2.count(1) == 6);
    CHECK(s2.count(2) == 4);
    CHECK(s2.count(3) == 0);
    d2.validate();
    s2.validate();
}

TEST_CASE("chain boundary on the interval and triangle") {
    StandardSimplex d2(2);
    FormalSum<GSimplex> d_edge = d2.boundary(d2.simplex(1, d2.index_of(1, "[0,1]")));
    CHECK(d_edge.str() == "-[0] + [1]");
    FormalSum<GSimplex> d_tri = d2.boundary(d2.simplex(2, 0));
    CHECK(d_tri.str() == "[0,1] - [0,2] + [1,2]");

    StandardSimplex d3(3);
    for (int d = 1; d <= 3; ++d)
        for (int i = 0; i < d3.count(d); ++i)
            CHECK(map_sum(d3.boundary(d3.simplex(d, i)),
                          [&](const GSimplex& s) { return d3.boundary(s); })
                      .empty());
}

TEST_CASE("degeneracy word algebra satisfies the simplicial identities") {
    StandardSimplex d3(3);
    std::srand(4242);
    for (int trial = 0; trial < 300; ++trial) {
        GSimplex s = d3.simplex(std::rand() % 3 + 1, 0);
        for (int step = 0; step < 3; ++step) s = s.degen(std::rand() % (s.dim() + 1));
        for (int j = 1; j <= s.dim(); ++j)
            for (int i = 0; i < j; ++i) CHECK(s.face(j).face(i) == s.face(i).face(j - 1));
        // d_i s_i = id = d_{i+1} s_i
        int i = std::rand() % (s.dim() + 1);
        CHECK(s.degen(i).face(i) == s);
        CHECK(s.degen(i).face(i + 1) == s);
    }
}

TEST_CASE("products: the interval as a degenerate product, shuffle cells of the square") {
    StandardSimplex d0(0), d1(1);
    // nondegenerate q-simplices of delta^0 x delta^1 match those of delta^1
    for (int q = 0; q <= 2; ++q) {
        int count = 0;
        for (const auto& u : weakly_increasing(0, q + 1))
            for (const auto& v : weakly_increasing(1, q + 1)) {
                MultiSim<GSimplex> z{{d0.from_vertex_tuple(u), d1.from_vertex_tuple(v)}};
                if (!z.degenerate()) ++count;
            }
        CHECK(count == d1.count(q));
    }
    // exactly the two shuffle 2-cells in the square
    int square2 = 0;
    for (const auto& u : weakly_increasing(1, 3))
        for (const auto& v : weakly_increasing(1, 3)) {
            MultiSim<GSimplex> z{{d1.from_vertex_tuple(u), d1.from_vertex_tuple(v)}};
            if (!z.degenerate()) ++square2;
        }
    CHECK(square2 == 2);
}

TEST_CASE("diagonal coproduct values on the interval and a point") {
    StandardSimplex d1(1);
    GSimplex e = d1.simplex(1, 0);
    auto dd = diag_aw(e);
    FormalSum<TensorTerm<GSimplex, GSimplex>> want;
    want.add_term({d1.simplex(0, 0), e}, BigInt(1));
    want.add_term({e, d1.simplex(0, 1)}, BigInt(1));
    CHECK(dd == want);

    StandardSimplex d0(0);
    GSimplex v = d0.simplex(0, 0);
    CHECK(diag_aw(v) == single(TensorTerm<GSimplex, GSimplex>{v, v}));
    // dual product of vertex duals on the point is the unit cochain
    Cochain unit = Cochain::dual(&d0, 0, 0);
    BigInt val(0);
    for (const auto& [t, c] : diag_aw(v)) val += c * unit(t.left) * unit(t.right);
    CHECK(val == BigInt(1));
}

TEST_CASE("shuffle and front-back maps are natural under face inclusions") {
    StandardSimplex d1(1), d2(2);
    using MS = MultiSim<GSimplex>;
    for (int omit = 0; omit <= 2; ++omit) {
        SimplicialMap f = SimplicialMap::face_inclusion(d1, d2, omit);
        auto push_ms = [&](const FormalSum<MS>& x) {
            FormalSum<MS> out;
            for (const auto& [z, c] : x) {
                MS img{{f.apply(z.coords[0]), f.apply(z.coords[1])}};
                if (!img.degenerate()) out.add_term(img, c);
            }
            return out;
        };
        for (const auto& u : weakly_increasing(1, 3))
            for (const auto& v : weakly_increasing(1, 3)) {
                MS z{{d1.from_vertex_tuple(u), d1.from_vertex_tuple(v)}};
                if (z.degenerate()) continue;
                // naturality of the contraction homotopy
                CHECK(push_ms(shi(z, 1)) ==
                      shi(MS{{f.apply(z.coords[0]), f.apply(z.coords[1])}}, 1));
                // naturality of the front-back map
                auto lhs = aw(MS{{f.apply(z.coords[0]), f.apply(z.coords[1])}}, 1);
                FormalSum<TensorTerm<MS, MS>> rhs;
                for (const auto& [t, c] : aw(z, 1)) {
                    MS l{{f.apply(t.left.coords[0])}};
                    MS r{{f.apply(t.right.coords[0])}};
                    if (!l.degenerate() && !r.degenerate())
                        rhs.add_term(TensorTerm<MS, MS>{l, r}, c);
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("explicit sets load from JSON, validate, and reject malformed input") {
    // a circle made of two arcs
    std::string circle = R"({
      "simplices": [["n", "s"], ["e", "w"]],
      "faces": {"e": ["s", "n"], "w": ["s", "n"]}
    })";
    auto X = parse_space_json(circle);
    CHECK(X->count(0) == 2);
    CHECK(X->count(1) == 2);
    Cochain c(X.get(), 1);
    c.set(X->index_of(1, "e"), BigInt(1));
    CHECK(c.is_cocycle_mod(3));
    CHECK(c.coboundary().is_zero());

    // degenerate face entry: a loop on one vertex
    std::string loop = R"({
      "simplices": [["v"], ["l"]],
      "faces": {"l": ["v", "v"]}
    })";
    auto L = parse_space_json(loop);
    FormalSum<GSimplex> dl = L->boundary(L->simplex(1, 0));
    CHECK(dl.empty());

    CHECK_THROWS(parse_space_json(R"({"simplices": [["a"],["x"]], "faces": {"x": ["a"]}})"));
    CHECK_THROWS(parse_space_json(R"({"simplices": [["a"],["x"]]})"));
    CHECK_THROWS(parse_space_json(R"({"simplices": [["a"],["a"]], "faces": {"a": ["a","a"]}})"));
}

TEST_CASE("cochain coboundary squares to zero and satisfies the Leibniz rule") {
    StandardSimplex d3(3);
    std::srand(99);
    for (int trial = 0; trial < 50; ++trial) {
        int d = std::rand() % 3;
        Cochain a(&d3, d), b(&d3, std::rand() % (3 - d));
        for (int i = 0; i < d3.count(a.cdeg()); ++i) a.set(i, BigInt(std::rand() % 5 - 2));
        for (int i = 0; i < d3.count(b.cdeg()); ++i) b.set(i, BigInt(std::rand() % 5 - 2));
        CHECK(a.coboundary().coboundary().is_zero());
        // under the dual differential the plain front-back product satisfies
        // delta(a.b) = (-1)^{|b|} delta(a).b + a.delta(b)
        Cochain lhs = aw_cup(a, b).coboundary();
        Cochain rhs = BigInt(b.cdeg() % 2 == 0 ? 1 : -1) * aw_cup(a.coboundary(), b) +
                      aw_cup(a, b.coboundary());
        CHECK((lhs - rhs).is_zero());
    }
}
