#include <doctest.h>

#include <vector>

#include "cartanlift/barratt_eccles.hpp"
#include "cartanlift/resolution.hpp"
#include "cartanlift/simplicial.hpp"

using namespace cartanlift;

namespace {

ESum bd(const ESum& x) {
    ESum out;
    for (const auto& [t, c] : x) {
        auto part = simplex_boundary(t);
        part *= c;
        out += part;
    }
    return out;
}

std::vector<PermTuple> tuples_over(const std::vector<Perm>& gens, int maxdeg) {
    std::vector<PermTuple> out;
    for (const Perm& p : gens) out.push_back(PermTuple{{p}});
    size_t lo = 0;
    for (int d = 1; d <= maxdeg; ++d) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i)
            for (const Perm& p : gens) {
                if (out[i].entries.back() == p) continue;
                PermTuple t = out[i];
                t.entries.push_back(p);
                out.push_back(t);
            }
        lo = hi;
    }
    return out;
}

bool phi_chain_map_ok(const ESum& x, int xdeg, const std::vector<Cochain>& cs,
                      const SimplicialSetBase* host) {
    Cochain lhs = phi_apply(x, xdeg, cs, host).coboundary();
    int acc = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        std::vector<Cochain> mod = cs;
        mod[i] = cs[i].coboundary();
        int sign = (xdeg + acc) % 2 == 0 ? 1 : -1;
        lhs += BigInt(-sign) * phi_apply(x, xdeg, mod, host);
        acc += cs[i].cdeg();
    }
    return (lhs - phi_apply(bd(x), xdeg - 1, cs, host)).is_zero();
}

// Independent transcription of the classical mod-2 cup-i values: alternating
// interval cuts, no surjection machinery, no signs.
int cup_i_mod2(const Cochain& a, const Cochain& b, int i, const GSimplex& s) {
    int n = s.dim();
    if (n != a.cdeg() + b.cdeg() - i) return 0;
    std::vector<int> cuts(i + 1);
    long long total = 0;
    auto face_on = [](const GSimplex& t, const std::vector<int>& keep) {
        GSimplex f = t;
        int at = static_cast<int>(keep.size()) - 1;
        for (int v = t.dim(); v >= 0; --v) {
            if (at >= 0 && keep[at] == v) {
                --at;
                continue;
            }
            f = f.face(v);
        }
        return f;
    };
    struct Rec {
        int n, i;
        const Cochain &a, &b;
        const GSimplex& s;
        long long& total;
        std::vector<int>& cuts;
        decltype(face_on)& fo;
        void go(int idx, int from) {
            if (idx == i + 1) {
                std::vector<int> A1, A2;
                bool ok = true;
                int prev = 0;
                std::vector<int> pts = {0};
                for (int c : cuts) pts.push_back(c);
                pts.push_back(n);
                for (size_t j = 0; j + 1 < pts.size(); ++j) {
                    auto& part = j % 2 == 0 ? A1 : A2;
                    for (int v = pts[j]; v <= pts[j + 1]; ++v) {
                        if (!part.empty() && part.back() >= v) {
                            ok = false;
                            break;
                        }
                        part.push_back(v);
                    }
                    if (!ok) break;
                }
                if (!ok) return;
                total += (a(fo(s, A1)) * b(fo(s, A2))).mod(2);
                (void)prev;
                return;
            }
            for (int v = from; v <= n; ++v) {
                cuts[idx] = v;
                go(idx + 1, v);
            }
        }
    } rec{n, i, a, b, s, total, cuts, face_on};
    rec.go(0, 0);
    return static_cast<int>(total % 2);
}

}  // namespace

TEST_CASE("tuple boundary drops degenerate faces") {
    CycTuple t{2, {0, 1, 0}};
    FormalSum<CycTuple> d = simplex_boundary(t);
    FormalSum<CycTuple> expected;
    expected.add_term(CycTuple{2, {1, 0}}, BigInt(1));
    expected.add_term(CycTuple{2, {0, 1}}, BigInt(1));
    CHECK(d == expected);

    CycTuple t2{3, {0, 1, 2, 0}};
    CHECK(map_sum(simplex_boundary(t2), [](const CycTuple& w) { return simplex_boundary(w); })
              .empty());
}

TEST_CASE("boundary commutes with the right action on tuples of permutations") {
    for (int d = 0; d <= 4; ++d)
        for (const CycTuple& t : all_cyc_tuples(3, d)) {
            PermTuple pt = t.to_perm_tuple();
            Perm g = rho_power(3, 1);
            ESum lhs = right_act(map_sum(single(pt), [](const PermTuple& w) {
                                     return simplex_boundary(w);
                                 }),
                                 g);
            ESum rhs = map_sum(single(pt.right_mul(g)),
                               [](const PermTuple& w) { return simplex_boundary(w); });
            CHECK(lhs == rhs);
        }
}

TEST_CASE("operad composition: units and degree zero") {
    PermTuple e2 = be_unit(2);
    CHECK(be_compose(e2, {be_unit(1), be_unit(1)}) == single(be_unit(2)));
    // degree-0 composition is plain block composition
    Perm s({2, 1}), t({2, 3, 1});
    ESum got = be_compose(PermTuple{{s}}, {PermTuple{{t}}, PermTuple{{t}}});
    CHECK(got == single(PermTuple{{block_compose(s, {t, t})}}));
    // unit on the outside
    PermTuple y{{Perm({2, 1}), Perm::identity(2)}};
    CHECK(be_compose(be_unit(1), {y}) == single(y));
}

TEST_CASE("operad composition is a chain map (Leibniz), arity 2, degrees <= 3") {
    auto tuples = tuples_over({Perm::identity(2), Perm({2, 1})}, 3);
    for (const PermTuple& x : tuples)
        for (const PermTuple& y1 : tuples)
            for (const PermTuple& y2 : tuples) {
                if (x.dim() + y1.dim() + y2.dim() > 3) continue;
                ESum lhs = bd(be_compose(x, {y1, y2}));
                ESum rhs = be_compose(bd(single(x)), {single(y1), single(y2)});
                int s1 = x.dim() % 2 == 0 ? 1 : -1;
                ESum term = be_compose(single(x), {bd(single(y1)), single(y2)});
                term *= BigInt(s1);
                rhs += term;
                int s2 = (x.dim() + y1.dim()) % 2 == 0 ? 1 : -1;
                term = be_compose(single(x), {single(y1), bd(single(y2))});
                term *= BigInt(s2);
                rhs += term;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("operad composition is associative with Koszul redistribution") {
    auto t2 = tuples_over({Perm::identity(2), Perm({2, 1})}, 1);
    for (const PermTuple& x : t2)
        for (const PermTuple& y1 : t2)
            for (const PermTuple& y2 : t2)
                for (const PermTuple& z1 : t2)
                    for (const PermTuple& z2 : t2) {
                        PermTuple z3 = t2[0], z4 = t2[1];
                        if (x.dim() + y1.dim() + y2.dim() + z1.dim() + z2.dim() > 2) continue;
                        ESum lhs = be_compose(be_compose(x, {y1, y2}),
                                              std::vector<ESum>{single(z1), single(z2),
                                                                single(z3), single(z4)});
                        int e = y2.dim() * (z1.dim() + z2.dim());
                        ESum rhs = be_compose(single(x),
                                              std::vector<ESum>{be_compose(y1, {z1, z2}),
                                                                be_compose(y2, {z3, z4})});
                        rhs *= BigInt(e % 2 == 0 ? 1 : -1);
                        CHECK(lhs == rhs);
                    }
    // one arity-3 outer instance per degree pattern
    std::vector<Perm> gens3 = {Perm::identity(3), Perm({2, 3, 1})};
    for (const Perm& g : gens3)
        for (const PermTuple& y1 : t2)
            for (const PermTuple& y2 : t2) {
                PermTuple x{{g}};
                PermTuple y3 = t2[1], z = t2[0];
                if (y1.dim() + y2.dim() > 2) continue;
                std::vector<ESum> zs(6, single(z));
                ESum lhs = be_compose(be_compose(x, {y1, y2, y3}), zs);
                ESum rhs = be_compose(
                    single(x), std::vector<ESum>{be_compose(y1, {z, z}), be_compose(y2, {z, z}),
                                                 be_compose(y3, {z, z})});
                CHECK(lhs == rhs);  // all z's are degree 0, no redistribution sign
            }
}

TEST_CASE("operad composition is equivariant with the reorder Koszul sign") {
    Perm s({2, 1});
    Perm block = block_compose(s, {Perm::identity(2), Perm::identity(2)});
    for (const PermTuple& x : tuples_over({Perm::identity(2), Perm({2, 1})}, 1))
        for (const PermTuple& y1 : tuples_over({Perm::identity(2), Perm({2, 1})}, 2))
            for (const PermTuple& y2 : tuples_over({Perm::identity(2), Perm({2, 1})}, 2)) {
                if (x.dim() + y1.dim() + y2.dim() > 3) continue;
                ESum lhs = be_compose(x.right_mul(s), {y1, y2});
                ESum rhs = right_act(be_compose(x, {y2, y1}), block);
                rhs *= BigInt((y1.dim() * y2.dim()) % 2 == 0 ? 1 : -1);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("diagonal coproduct on cyclic tuples") {
    CycTuple v{3, {0}};
    auto d0 = diag_aw(v);
    CHECK(d0 == single(TensorTerm<CycTuple, CycTuple>{v, v}));

    CycTuple e{3, {0, 1}};
    auto d1 = diag_aw(e);
    FormalSum<TensorTerm<CycTuple, CycTuple>> expected;
    expected.add_term({CycTuple{3, {0}}, e}, BigInt(1));
    expected.add_term({e, CycTuple{3, {1}}}, BigInt(1));
    CHECK(d1 == expected);
}

TEST_CASE("diagonal coproduct is a chain map on C(3) through degree 4") {
    auto bd_c = [](const CycTuple& t) { return simplex_boundary(t); };
    auto bd_tensor = [&](const TensorTerm<CycTuple, CycTuple>& t) {
        return tensor_boundary(t, bd_c, bd_c);
    };
    for (int d = 0; d <= 4; ++d)
        for (const CycTuple& t : all_cyc_tuples(3, d))
            CHECK(map_sum(diag_aw(t), bd_tensor) ==
                  map_sum(bd_c(t), [](const CycTuple& w) { return diag_aw(w); }));
}

TEST_CASE("table reduction of the alternating tuples gives the classical cup-i rows") {
    for (int i = 0; i <= 4; ++i) {
        FormalSum<Surj> tr = table_reduction(map_sum(
            iota(2, i), [](const CycTuple& t) { return single(t.to_perm_tuple()); }));
        std::vector<int> alt;
        for (int j = 0; j < i + 2; ++j) alt.push_back(j % 2 + 1);
        CHECK(tr == single(Surj{2, alt}));
    }
}

TEST_CASE("table reduction is equivariant") {
    for (const PermTuple& t :
         tuples_over({Perm::identity(3), Perm({2, 3, 1}), Perm({2, 1, 3})}, 2)) {
        Perm g({3, 1, 2});
        FormalSum<Surj> lhs = table_reduction(t.right_mul(g));
        FormalSum<Surj> rhs;
        for (const auto& [u, c] : table_reduction(t)) rhs.add_term(u.relabel(g), c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("structure map restricts to the cup product") {
    StandardSimplex d1(1);
    Cochain a = Cochain::dual(&d1, 0, 0);                    // dual of [0]
    Cochain b = Cochain::dual(&d1, 1, 0);                    // dual of [0,1]
    Cochain cup = phi_apply(single(be_unit(2)), 0, {a, b}, &d1);
    CHECK(cup.value(0) == BigInt(1));  // value on [0,1]

    StandardSimplex d3(3);
    for (int da = 0; da <= 3; ++da)
        for (int db = 0; da + db <= 3; ++db)
            for (int ia = 0; ia < d3.count(da); ++ia)
                for (int ib = 0; ib < d3.count(db); ++ib) {
                    Cochain x = Cochain::dual(&d3, da, ia), y = Cochain::dual(&d3, db, ib);
                    Cochain expect = BigInt((da * db) % 2 == 0 ? 1 : -1) * aw_cup(x, y);
                    CHECK((phi_apply(single(be_unit(2)), 0, {x, y}, &d3) - expect).is_zero());
                }
}

TEST_CASE("structure map reproduces classical mod-2 cup-i values") {
    StandardSimplex d2(2), d3(3);
    for (const StandardSimplex* host : {&d2, &d3}) {
        for (int i = 1; i <= 2; ++i) {
            ESum xi = map_sum(iota(2, i),
                              [](const CycTuple& t) { return single(t.to_perm_tuple()); });
            for (int da = 0; da <= host->top_dim(); ++da)
                for (int db = 0; db <= host->top_dim(); ++db) {
                    int outd = da + db - i;
                    if (outd < 0 || outd > host->top_dim()) continue;
                    for (int ia = 0; ia < host->count(da); ++ia)
                        for (int ib = 0; ib < host->count(db); ++ib) {
                            Cochain a = Cochain::dual(host, da, ia);
                            Cochain b = Cochain::dual(host, db, ib);
                            Cochain got = phi_apply(xi, i, {a, b}, host);
                            for (int it = 0; it < host->count(outd); ++it)
                                CHECK(got.value(it).mod(2) ==
                                      static_cast<std::uint32_t>(
                                          cup_i_mod2(a, b, i, host->simplex(outd, it))));
                        }
                }
        }
    }
}

TEST_CASE("structure map is a chain map in the operad slot") {
    StandardSimplex d2(2);
    for (const PermTuple& t : tuples_over({Perm::identity(2), Perm({2, 1})}, 3)) {
        if (t.dim() < 1) continue;
        for (int da = 0; da <= 2; ++da)
            for (int db = 0; db <= 2; ++db)
                for (int ia = 0; ia < d2.count(da); ++ia)
                    for (int ib = 0; ib < d2.count(db); ++ib)
                        CHECK(phi_chain_map_ok(
                            single(t), t.dim(),
                            {Cochain::dual(&d2, da, ia), Cochain::dual(&d2, db, ib)}, &d2));
    }
    for (const PermTuple& t : tuples_over({Perm({2, 3, 1}), Perm({2, 1, 3})}, 2)) {
        if (t.dim() < 1) continue;
        for (int ia = 0; ia < 3; ++ia)
            CHECK(phi_chain_map_ok(single(t), t.dim(),
                                   {Cochain::dual(&d2, 0, ia), Cochain::dual(&d2, 1, 1),
                                    Cochain::dual(&d2, 1, 2)},
                                   &d2));
    }
}

TEST_CASE("structure map is natural under face inclusions") {
    StandardSimplex d1(1), d2(2);
    for (int omit = 0; omit <= 2; ++omit) {
        SimplicialMap incl = SimplicialMap::face_inclusion(d1, d2, omit);
        for (const PermTuple& t : tuples_over({Perm::identity(2), Perm({2, 1})}, 2))
            for (int da = 0; da <= 2; ++da)
                for (int db = 0; db <= 2; ++db)
                    for (int ia = 0; ia < d2.count(da); ++ia)
                        for (int ib = 0; ib < d2.count(db); ++ib) {
                            Cochain a = Cochain::dual(&d2, da, ia), b = Cochain::dual(&d2, db, ib);
                            Cochain big = phi_apply(single(t), t.dim(), {a, b}, &d2);
                            Cochain small = phi_apply(single(t), t.dim(),
                                                      {a.pullback(incl), b.pullback(incl)}, &d1);
                            CHECK((small - big.pullback(incl)).is_zero());
                        }
    }
}

TEST_CASE("structure map is equivariant, including non-involutive permutations") {
    StandardSimplex d2(2);
    Perm cyc({2, 3, 1});
    for (const PermTuple& t : tuples_over({Perm::identity(3), Perm({2, 3, 1})}, 2))
        for (int da = 0; da <= 1; ++da)
            for (int ia = 0; ia < d2.count(da); ++ia)
                for (int ib = 0; ib < d2.count(1); ++ib) {
                    std::vector<Cochain> cs{Cochain::dual(&d2, da, ia), Cochain::dual(&d2, 1, ib),
                                            Cochain::dual(&d2, 0, 0)};
                    std::vector<Cochain> moved;
                    int sg = permute_cochains(cyc, cs, moved);
                    Cochain lhs = phi_apply(right_act(single(t), cyc), t.dim(), cs, &d2);
                    Cochain rhs = BigInt(sg) * phi_apply(single(t), t.dim(), moved, &d2);
                    CHECK((lhs - rhs).is_zero());
                }
}

TEST_CASE("structure map respects operad composition") {
    StandardSimplex d2(2);
    auto tuples = tuples_over({Perm::identity(2), Perm({2, 1})}, 1);
    for (const PermTuple& x : tuples)
        for (const PermTuple& y1 : tuples)
            for (const PermTuple& y2 : tuples) {
                ESum comp = be_compose(x, {y1, y2});
                int cdeg = x.dim() + y1.dim() + y2.dim();
                for (int da = 0; da <= 1; ++da)
                    for (int ia = 0; ia < d2.count(da); ++ia) {
                        std::vector<Cochain> cs{Cochain::dual(&d2, da, ia),
                                                Cochain::dual(&d2, 1, 1),
                                                Cochain::dual(&d2, 1, 2),
                                                Cochain::dual(&d2, 0, 0)};
                        Cochain g1 = phi_apply(single(y1), y1.dim(), {cs[0], cs[1]}, &d2);
                        Cochain g2 = phi_apply(single(y2), y2.dim(), {cs[2], cs[3]}, &d2);
                        int e = y2.dim() * (cs[0].cdeg() + cs[1].cdeg());
                        Cochain rhs = BigInt(e % 2 == 0 ? 1 : -1) *
                                      phi_apply(single(x), x.dim(), {g1, g2}, &d2);
                        CHECK((phi_apply(comp, cdeg, cs, &d2) - rhs).is_zero());
                    }
            }
}
