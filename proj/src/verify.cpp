#include "cartanlift/verify.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <tuple>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "cartanlift/barratt_eccles.hpp"
#include "cartanlift/cartan.hpp"
#include "cartanlift/ez.hpp"
#include "cartanlift/fp_solver.hpp"
#include "cartanlift/oracle.hpp"
#include "cartanlift/parallel.hpp"
#include "cartanlift/resolution.hpp"
#include "cartanlift/steenrod.hpp"

namespace cartanlift {

namespace {

class Suite {
public:
    explicit Suite(std::string prefix) : prefix_(std::move(prefix)) {}

    void check(const std::string& id, bool pass, const std::string& detail_on_fail = "") {
        using clock = std::chrono::steady_clock;
        double secs =
            std::chrono::duration<double>(clock::now() - last_).count();
        last_ = clock::now();
        results_.push_back({prefix_ + "." + id, pass, pass ? "" : detail_on_fail, secs});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string prefix_;
    std::vector<CheckResult> results_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

ESum e_bd(const ESum& x) {
    ESum out;
    for (const auto& [t, c] : x) {
        auto part = simplex_boundary(t);
        part *= c;
        out += part;
    }
    return out;
}

KTensor kt_bd(const KTensor& x) {
    auto bd = [](const CycTuple& w) { return simplex_boundary(w); };
    KTensor out;
    for (const auto& [t, c] : x) {
        auto part = tensor_boundary(t, bd, bd);
        part *= c;
        out += part;
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1

std::vector<CheckResult> table1_suite() {
    Suite s("table1");
    const std::vector<std::tuple<int, int, std::string>> expected = {
        {2, 2, "(0,1,0)"},
        {2, 3, "(0,1,0,1)"},
        {2, 4, "(0,1,0,1,0)"},
        {3, 2, "(0,1,2) + (0,2,0)"},
        {3, 3, "(0,1,0,1) + (0,1,2,0)"},
        {3, 4, "(0,1,2,0,1) + (0,1,2,1,2) + (0,2,0,1,2) + (0,2,0,2,0)"},
        {4, 2, "(0,1,2) + (0,2,3) + (0,3,0)"},
        {4, 3, "(0,1,0,1) + (0,1,2,3) + (0,1,3,0)"},
        {4, 4,
         "(0,1,2,0,1) + (0,1,2,1,2) + (0,1,2,3,0) + (0,2,3,0,1) + (0,2,3,1,2) + (0,2,3,2,3) + "
         "(0,3,0,1,2) + (0,3,0,2,3) + (0,3,0,3,0)"},
    };
    for (const auto& [r, n, want] : expected) {
        std::string got = iota(r, n).str();
        s.check("r" + std::to_string(r) + ".n" + std::to_string(n), got == want,
                "expected " + want + ", got " + got);
    }
    return s.take();
}

// ---------------------------------------------------------------- criterion 2

std::vector<CheckResult> table2_suite() {
    Suite s("table2");
    {
        std::string want = "(0,1,2)⊗(2,3) + (0,1,2)⊗(3,0) + (0,2,3)⊗(3,0)";
        std::string got = homotopy_k3(4, 2).str();
        s.check("r4.n2", got == want, "expected " + want + ", got " + got);
    }
    {
        // printed with plus signs; the defining formulas carry the global minus
        KTensor printed;
        auto term = [](std::vector<int> l, std::vector<int> r) {
            return TensorTerm<CycTuple, CycTuple>{CycTuple{4, std::move(l)},
                                                  CycTuple{4, std::move(r)}};
        };
        printed.add_term(term({0, 1, 2, 3}, {3, 0}), BigInt(1));
        printed.add_term(term({0, 1, 2, 3}, {0, 1}), BigInt(1));
        printed.add_term(term({0, 1, 3, 0}, {0, 1}), BigInt(1));
        KTensor got = homotopy_k3(4, 3);
        s.check("r4.n3.up-to-global-sign", got == -printed,
                "expected -( " + printed.str() + " ), got " + got.str());
    }
    for (int n : {4, 5}) {
        size_t count = homotopy_k3(4, n).size();
        bool agree = recursive_k(4, n) == homotopy_k3(4, n) && closed_k(4, n) == homotopy_k3(4, n);
        s.check("r4.n" + std::to_string(n) + ".count33", count == 33,
                "reference count is 33; formulas give " + std::to_string(count) +
                    " terms, and the recursive and closed constructions agree with all of them "
                    "termwise (agreement: " + (agree ? "yes" : "NO") + ")");
    }
    {
        bool allzero = true;
        for (int n = 0; n <= 6; ++n)
            if (!homotopy_k3(2, n).empty()) allzero = false;
        for (int r = 2; r <= 5; ++r)
            if (!homotopy_k3(r, 0).empty() || !homotopy_k3(r, 1).empty()) allzero = false;
        s.check("vanishing.r2.and.low-degree", allzero, "nonzero value in a vanishing cell");
    }
    {
        // the r=3, n=2 cell: judged against the recursive construction
        KTensor oracle = recursive_k(3, 2);
        KTensor got = homotopy_k3(3, 2);
        KTensor printed;
        printed.add_term(
            TensorTerm<CycTuple, CycTuple>{CycTuple{3, {0, 1, 2}}, CycTuple{3, {0, 1}}},
            BigInt(1));
        bool ok = got == oracle && !(got == printed);
        s.check("r3.n2.against-oracle", ok,
                "formula gives " + got.str() + ", recursive construction gives " + oracle.str() +
                    ", printed value is " + printed.str());
    }
    return s.take();
}

// ---------------------------------------------------------------- criterion 3

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

std::vector<CheckResult> contraction_suite() {
    Suite s("contraction");
    using MS = MultiSim<GSimplex>;
    auto bd = [](const MS& z) { return simplex_boundary(z); };
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 5; ++n) {
            StandardSimplex X(m), Y(n);
            // ez then aw is the identity on tensors of nondegenerate simplices
            bool ez_aw = true;
            std::string ez_aw_detail;
            for (int a = 0; a <= m && ez_aw; ++a)
                for (int b = 0; b <= n && ez_aw; ++b)
                    for (int ia = 0; ia < X.count(a) && ez_aw; ++ia)
                        for (int ib = 0; ib < Y.count(b) && ez_aw; ++ib) {
                            MS u = as_multi(X.simplex(a, ia));
                            MS v = as_multi(Y.simplex(b, ib));
                            FormalSum<TensorTerm<MS, MS>> back;
                            for (const auto& [z, c] : ez(u, v)) {
                                auto part = aw(z, 1);
                                part *= c;
                                back += part;
                            }
                            FormalSum<TensorTerm<MS, MS>> want;
                            want.add_term(TensorTerm<MS, MS>{u, v}, BigInt(1));
                            if (!(back == want)) {
                                ez_aw = false;
                                ez_aw_detail = "aw(ez(" + u.str() + " (x) " + v.str() +
                                               ")) = " + back.str();
                            }
                        }
            s.check("ez-aw-id.d" + std::to_string(m) + "x" + std::to_string(n), ez_aw,
                    ez_aw_detail);
            // contraction homotopy identity on every nondegenerate product simplex
            bool homotopy_ok = true;
            std::string detail;
            for (int q = 0; q <= m + n && homotopy_ok; ++q) {
                for (const auto& ut : weakly_increasing(m, q + 1)) {
                    for (const auto& vt : weakly_increasing(n, q + 1)) {
                        MS z{{X.from_vertex_tuple(ut), Y.from_vertex_tuple(vt)}};
                        if (z.degenerate()) continue;
                        FormalSum<MS> lhs = ez(aw(z, 1)) - single(z);
                        FormalSum<MS> rhs =
                            map_sum(shi(z, 1), bd) +
                            map_sum(bd(z), [](const MS& w) { return shi(w, 1); });
                        if (!(lhs == rhs)) {
                            homotopy_ok = false;
                            detail = "at " + z.str() + ": aw-ez - id = " + lhs.str() +
                                     " but d.shi + shi.d = " + rhs.str();
                            break;
                        }
                    }
                    if (!homotopy_ok) break;
                }
            }
            s.check("homotopy.d" + std::to_string(m) + "x" + std::to_string(n), homotopy_ok,
                    detail);
        }
    return s.take();
}

// ---------------------------------------------------------------- criterion 4

std::vector<CheckResult> resolution_suite() {
    Suite s("resolution");
    bool dd = true, coprod = true, counit = true, chain = true, equiv = true;
    std::string d_dd, d_coprod, d_counit, d_chain, d_equiv;
    auto bd_w = [](const WGen& h) { return w_boundary(h); };
    for (int r = 1; r <= 5; ++r)
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k < r; ++k) {
                WGen g{r, k, n};
                if (!map_sum(w_boundary(g), bd_w).empty() && dd) {
                    dd = false;
                    d_dd = "d.d != 0 at " + g.str();
                }
                auto lhs = map_sum(w_coproduct(g), [&](const TensorTerm<WGen, WGen>& t) {
                    return tensor_boundary(t, bd_w, bd_w);
                });
                auto rhs = map_sum(w_boundary(g), [](const WGen& h) { return w_coproduct(h); });
                if (!(lhs == rhs) && coprod) {
                    coprod = false;
                    d_coprod = "at " + g.str() + ": d(Delta) = " + lhs.str() +
                               " but Delta(d) = " + rhs.str();
                }
                FormalSum<WGen> left;
                for (const auto& [t, c] : w_coproduct(g)) left.add_term(t.right, c * w_counit(t.left));
                if (!(left == single(g)) && counit) {
                    counit = false;
                    d_counit = "counit law fails at " + g.str() + ": " + left.str();
                }
                auto ilhs = map_sum(iota(g), [](const CycTuple& t) { return simplex_boundary(t); });
                auto irhs = map_sum(w_boundary(g), [](const WGen& h) { return iota(h); });
                if (!(ilhs == irhs) && chain) {
                    chain = false;
                    d_chain = "at " + g.str() + ": d(iota) = " + ilhs.str() +
                              " but iota(d) = " + irhs.str();
                }
                FormalSum<CycTuple> shifted;
                for (const auto& [t, c] : iota(WGen{r, 0, n})) shifted.add_term(t.shift(k), c);
                if (!(shifted == iota(g)) && equiv) {
                    equiv = false;
                    d_equiv = "equivariance fails at " + g.str();
                }
            }
    s.check("boundary.squares-to-zero", dd, d_dd);
    s.check("coproduct.chain-map", coprod, d_coprod);
    s.check("coproduct.counit", counit, d_counit);
    s.check("iota.chain-map", chain, d_chain);
    s.check("iota.equivariant", equiv, d_equiv);
    return s.take();
}

// ---------------------------------------------------------------- criterion 5

std::vector<CheckResult> homotopy_suite() {
    Suite s("homotopy");
    for (int r : {3, 5}) {
        bool k1ok = true, k2ok = true, eq1 = true, eq2 = true;
        std::string d1, d2, de1, de2;
        for (int d = 0; d <= 4; ++d)
            for (const CycTuple& t : all_cyc_tuples(r, d)) {
                ESum l1 = e_bd(homotopy_k1(t)) +
                          map_sum(simplex_boundary(t),
                                  [](const CycTuple& w) { return homotopy_k1(w); });
                ESum r1 = g_image(t) - tau_f_image(t);
                if (!(l1 == r1) && k1ok) {
                    k1ok = false;
                    d1 = "at " + t.str() + ": d.K1 + K1.d = " + l1.str() + " but g - tau.f = " +
                         r1.str();
                }
                ESum l2 = e_bd(homotopy_k2(t)) +
                          map_sum(simplex_boundary(t),
                                  [](const CycTuple& w) { return homotopy_k2(w); });
                ESum r2 = bottom_row(t) - g_image(t);
                if (!(l2 == r2) && k2ok) {
                    k2ok = false;
                    d2 = "at " + t.str() + ": d.K2 + K2.d = " + l2.str() +
                         " but bottom - g = " + r2.str();
                }
                if (!(right_act(homotopy_k1(t), splice_action(r, 1)) ==
                      homotopy_k1(t.shift(1))) &&
                    eq1) {
                    eq1 = false;
                    de1 = "K1 equivariance fails at " + t.str();
                }
                if (!(right_act(homotopy_k2(t), splice_action(r, 1)) ==
                      homotopy_k2(t.shift(1))) &&
                    eq2) {
                    eq2 = false;
                    de2 = "K2 equivariance fails at " + t.str();
                }
            }
        std::string rs = ".r" + std::to_string(r);
        s.check("k1.identity" + rs, k1ok, d1);
        s.check("k1.equivariance" + rs, eq1, de1);
        s.check("k2.identity" + rs, k2ok, d2);
        s.check("k2.equivariance" + rs, eq2, de2);

        bool k3ok = true;
        std::string d3;
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k < r; ++k) {
                WGen g{r, k, n};
                KTensor lhs = kt_bd(homotopy_k3(g)) +
                              map_sum(w_boundary(g), [](const WGen& h) { return homotopy_k3(h); });
                KTensor rhs = mu_map(g) - nu_map(g);
                if (!(lhs == rhs)) {
                    k3ok = false;
                    d3 = "at " + g.str() + ": d.K3 + K3.d = " + lhs.str() +
                         " but (iota x iota)Delta - Delta_AW iota = " + rhs.str();
                }
            }
        s.check("k3.identity" + rs, k3ok, d3);
    }
    for (int r = 2; r <= 5; ++r) {
        CompareReport rep = compare_all(r, 6);
        s.check("three-way.r" + std::to_string(r), rep.ok, rep.first_divergence);
    }
    {
        bool side = true, eps_mu = true;
        std::string ds, de;
        for (int r = 2; r <= 5 && side; ++r)
            for (int dtot = 0; dtot <= 5 && side; ++dtot)
                for (int a = 0; a <= dtot && side; ++a)
                    for (const CycTuple& u : all_cyc_tuples(r, a)) {
                        bool stop = false;
                        for (const CycTuple& v : all_cyc_tuples(r, dtot - a)) {
                            TensorTerm<CycTuple, CycTuple> t{u, v};
                            auto bd = [](const CycTuple& w) { return simplex_boundary(w); };
                            KTensor lhs =
                                map_sum(eta(t),
                                        [&](const TensorTerm<CycTuple, CycTuple>& w) {
                                            return tensor_boundary(w, bd, bd);
                                        }) +
                                eta(tensor_boundary(t, bd, bd));
                            KTensor rhs = single(t) - epsilon(t);
                            if (!(lhs == rhs) || !epsilon(eta(t)).empty()) {
                                side = false;
                                ds = "side condition fails at " + t.str() + ": d.eta + eta.d = " +
                                     lhs.str() + " but id - eps = " + rhs.str();
                                stop = true;
                                break;
                            }
                        }
                        if (stop) break;
                    }
        for (int r = 1; r <= 5 && eps_mu; ++r)
            for (int n = 0; n <= 6 && eps_mu; ++n)
                for (int k = 0; k < r; ++k) {
                    WGen g{r, k, n};
                    if (!epsilon(mu_map(g) - nu_map(g)).empty()) {
                        eps_mu = false;
                        de = "eps(mu - nu) != 0 at " + g.str();
                        break;
                    }
                }
        s.check("eta.side-conditions", side, ds);
        s.check("eps.kills-mu-minus-nu", eps_mu, de);
    }
    return s.take();
}

// ---------------------------------------------------------------- criterion 6

std::vector<CheckResult> cartan_suite(const VerifyOptions& opt) {
    Suite s("cartan");
    const std::uint32_t p = opt.p;
    StandardSimplex d2(2);
    BoundarySimplex s3(3);
    struct Space {
        const SimplicialSetBase* set;
        std::string name;
    };
    std::vector<Space> spaces = {{&d2, "delta2"}, {&s3, "boundary3"}};
    for (const Space& sp : spaces) {
        struct Task {
            int i;
            Cochain a, b;
        };
        std::vector<Task> tasks;
        for (int i = 0; i <= 2; ++i)
            for (int da = 0; da <= std::min(opt.max_dim, sp.set->top_dim()); ++da)
                for (int db = 0; db <= std::min(opt.max_dim, sp.set->top_dim()); ++db)
                    for (const Cochain& a : cocycle_basis(sp.set, da, p))
                        for (const Cochain& b : cocycle_basis(sp.set, db, p))
                            tasks.push_back({i, a, b});
        // the relator cache is filled once up front; evaluation is then pure
        for (int i = 0; i <= 2; ++i) cartan_relator(p, i);
        std::vector<std::string> failures(tasks.size());
        parallel_for(tasks.size(), [&](size_t idx) {
            const Task& t = tasks[idx];
            Cochain dz = zeta(p, t.i, t.a, t.b).coboundary();
            Cochain c = cartan_lift(p, t.i, t.a, t.b);
            if (!dz.equal_mod(c, p))
                failures[idx] = "i=" + std::to_string(t.i) + " a=" + t.a.str() +
                                " b=" + t.b.str() + ": d.zeta = " + dz.str() + " but lift = " +
                                c.str();
        });
        std::string detail;
        for (const std::string& f : failures)
            if (!f.empty()) {
                detail = f;
                break;
            }
        s.check("headline." + sp.name + ".pairs" + std::to_string(tasks.size()), detail.empty(),
                detail);
    }
    {
        // naturality under the face inclusions into the triangle
        StandardSimplex d1(1);
        bool ok = true;
        std::string detail;
        for (int omit = 0; omit <= 2 && ok; ++omit) {
            SimplicialMap incl = SimplicialMap::face_inclusion(d1, d2, omit);
            for (int i = 0; i <= 2 && ok; ++i)
                for (int da = 0; da <= 1 && ok; ++da)
                    for (int db = 0; db <= 1 && ok; ++db)
                        for (const Cochain& a : cocycle_basis(&d2, da, p))
                            for (const Cochain& b : cocycle_basis(&d2, db, p)) {
                                Cochain lhs = zeta(p, i, a.pullback(incl), b.pullback(incl));
                                Cochain rhs = zeta(p, i, a, b).pullback(incl);
                                if (!(lhs - rhs).is_zero()) {
                                    ok = false;
                                    detail = "omit=" + std::to_string(omit) +
                                             " i=" + std::to_string(i) + ": " + lhs.str() +
                                             " vs " + rhs.str();
                                }
                            }
        }
        s.check("naturality.delta1-into-delta2", ok, detail);
    }
    {
        // naturality under the 2-face inclusions into the 2-sphere
        bool ok = true;
        std::string detail;
        for (int omit = 0; omit <= 3 && ok; ++omit) {
            SimplicialMap incl(&d2, &s3);
            for (int d = 0; d <= 2; ++d)
                for (int idx = 0; idx < d2.count(d); ++idx) {
                    std::vector<int> vs = d2.vertices(d, idx);
                    for (int& v : vs)
                        if (v >= omit) ++v;
                    std::string nm = "[";
                    for (size_t q = 0; q < vs.size(); ++q)
                        nm += (q ? "," : "") + std::to_string(vs[q]);
                    nm += "]";
                    incl.set_image(d, idx, GSimplex{&s3, d, s3.index_of(d, nm), {}});
                }
            for (int i = 0; i <= 2 && ok; ++i)
                for (const Cochain& a : cocycle_basis(&s3, 1, p))
                    for (const Cochain& b : cocycle_basis(&s3, 1, p)) {
                        Cochain lhs = zeta(p, i, a.pullback(incl), b.pullback(incl));
                        Cochain rhs = zeta(p, i, a, b).pullback(incl);
                        if (!(lhs - rhs).is_zero()) {
                            ok = false;
                            detail = "omit=" + std::to_string(omit) + " i=" + std::to_string(i);
                        }
                    }
        }
        s.check("naturality.delta2-into-boundary3", ok, detail);
    }
    {
        // the assembled relator identity in the operad, space-independent:
        // d H(e_i) + H(d e_i) = tau F(e_i) - G(e_i)
        bool ok = true;
        std::string detail;
        for (std::uint32_t q : {3u, 5u}) {
            int top = q == 3 ? 4 : 2;
            for (int i = 0; i <= top && ok; ++i) {
                WGen g{static_cast<int>(q), 0, i};
                ESum lhs = e_bd(cartan_relator(q, g)) +
                           map_sum(w_boundary(g),
                                   [&](const WGen& h) { return cartan_relator(q, h); });
                ESum rhs = tau_f_element(g) - g_element(g);
                if (!(lhs == rhs)) {
                    ok = false;
                    detail = "p=" + std::to_string(q) + " i=" + std::to_string(i) +
                             ": d.H + H.d = " + lhs.str() + " but tau.F - G = " + rhs.str();
                }
            }
        }
        s.check("relator.assembled-identity", ok, detail);
    }
    {
        // stretch: p = 5 at i = 0 on the interval
        StandardSimplex d1(1);
        bool ok = true;
        std::string detail;
        for (int da = 0; da <= 1 && ok; ++da)
            for (int db = 0; db <= 1 && ok; ++db)
                for (const Cochain& a : cocycle_basis(&d1, da, 5))
                    for (const Cochain& b : cocycle_basis(&d1, db, 5)) {
                        Cochain dz = zeta(5, 0, a, b).coboundary();
                        Cochain c = cartan_lift(5, 0, a, b);
                        if (!dz.equal_mod(c, 5)) {
                            ok = false;
                            detail = "a=" + a.str() + " b=" + b.str();
                        }
                    }
        s.check("stretch.p5.i0.delta1", ok, detail);
    }
    return s.take();
}

// ---------------------------------------------------------------- criterion 7

std::vector<CheckResult> steenrod_suite() {
    Suite s("steenrod");
    const std::uint32_t p = 3;
    std::vector<std::unique_ptr<SimplicialSetBase>> spaces;
    std::vector<std::string> names;
    for (int n = 0; n <= 3; ++n) {
        spaces.push_back(std::make_unique<StandardSimplex>(n));
        names.push_back("delta" + std::to_string(n));
    }
    for (int n = 1; n <= 3; ++n) {
        spaces.push_back(std::make_unique<BoundarySimplex>(n + 1));
        names.push_back("boundary" + std::to_string(n + 1));
    }
    for (size_t si = 0; si < spaces.size(); ++si) {
        const SimplicialSetBase* X = spaces[si].get();
        bool ok = true;
        std::string detail;
        for (int d = 0; d <= X->top_dim() && ok; ++d)
            for (const Cochain& a : cocycle_basis(X, d, p)) {
                for (int i = 3 * d - X->top_dim(); i <= 3 * d; ++i) {
                    if (i < 0) continue;
                    Cochain rep = d_rep(i, p, a);
                    if (!rep.is_cocycle_mod(p)) {
                        ok = false;
                        detail = "degree " + std::to_string(d) + " index " + std::to_string(i) +
                                 ": delta of " + rep.str() + " nonzero mod 3";
                        break;
                    }
                }
                if (!ok) break;
            }
        s.check("cocycle-to-cocycle." + names[si], ok, detail);
    }
    for (int n = 1; n <= 2; ++n) {
        BoundarySimplex sphere(n + 1);
        Cochain a = Cochain::dual(&sphere, n, 0).reduced_mod(p);
        Cochain rep = d_rep(n * (p - 1), p, a);
        Cochain diff = (rep - BigInt(nu(n, p)) * a).reduced_mod(p);
        bool ok = is_coboundary(diff, p).solvable && !is_coboundary(rep.reduced_mod(p), p).solvable;
        s.check("unstable.n" + std::to_string(n), ok,
                "representative " + rep.str() + " vs nu(n).a with nu = " +
                    std::to_string(nu(n, p)));
    }
    return s.take();
}

// ---------------------------------------------------------------- criterion 8

std::vector<PermTuple> tuples_over(const std::vector<Perm>& gens, int maxdeg) {
    std::vector<PermTuple> out;
    for (const Perm& g : gens) out.push_back(PermTuple{{g}});
    size_t lo = 0;
    for (int d = 1; d <= maxdeg; ++d) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i)
            for (const Perm& g : gens) {
                if (out[i].entries.back() == g) continue;
                PermTuple t = out[i];
                t.entries.push_back(g);
                out.push_back(t);
            }
        lo = hi;
    }
    return out;
}

bool phi_chain_map_ok(const ESum& x, int xdeg, const std::vector<Cochain>& cs,
                      const SimplicialSetBase* host, std::string* detail) {
    Cochain lhs = phi_apply(x, xdeg, cs, host).coboundary();
    int acc = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        std::vector<Cochain> mod = cs;
        mod[i] = cs[i].coboundary();
        int sign = (xdeg + acc) % 2 == 0 ? 1 : -1;
        lhs += BigInt(-sign) * phi_apply(x, xdeg, mod, host);
        acc += cs[i].cdeg();
    }
    Cochain rhs = phi_apply(e_bd(x), xdeg - 1, cs, host);
    if ((lhs - rhs).is_zero()) return true;
    if (detail) *detail = "d(phi x) side = " + lhs.str() + " but phi(dx) side = " + rhs.str();
    return false;
}

std::vector<CheckResult> structure_suite(const VerifyOptions& opt) {
    Suite s("structure");
    {
        bool ok = true;
        std::string detail;
        StandardSimplex d3(3);
        for (const PermTuple& t : tuples_over({Perm::identity(2), Perm({2, 1})}, 4)) {
            if (t.dim() < 1) continue;
            for (int da = 0; da <= 3 && ok; ++da)
                for (int db = 0; db <= 3 && ok; ++db)
                    for (int ia = 0; ia < d3.count(da) && ok; ++ia)
                        for (int ib = 0; ib < d3.count(db) && ok; ++ib)
                            if (!phi_chain_map_ok(single(t), t.dim(),
                                                  {Cochain::dual(&d3, da, ia),
                                                   Cochain::dual(&d3, db, ib)},
                                                  &d3, &detail)) {
                                ok = false;
                                detail = "x=" + t.str() + ": " + detail;
                            }
            if (!ok) break;
        }
        s.check("chain-map.arity2.delta3", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        StandardSimplex d2(2);
        std::vector<Perm> gens3 = {Perm::identity(3), Perm({2, 1, 3}), Perm({2, 3, 1}),
                                   Perm({3, 2, 1})};
        std::mt19937 rng(opt.seed);
        auto all3 = tuples_over(gens3, 4);
        std::shuffle(all3.begin(), all3.end(), rng);
        int used = 0;
        for (const PermTuple& t : all3) {
            if (t.dim() < 1) continue;
            if (++used > 25) break;
            for (int da = 0; da <= 2 && ok; ++da)
                for (int db = 0; db <= 2 && ok; ++db)
                    for (int ia = 0; ia < d2.count(da) && ok; ++ia)
                        for (int ib = 0; ib < d2.count(db) && ok; ++ib)
                            for (int ic = 0; ic < d2.count(1) && ok; ++ic)
                                if (!phi_chain_map_ok(single(t), t.dim(),
                                                      {Cochain::dual(&d2, da, ia),
                                                       Cochain::dual(&d2, db, ib),
                                                       Cochain::dual(&d2, 1, ic)},
                                                      &d2, &detail)) {
                                    ok = false;
                                    detail = "x=" + t.str() + ": " + detail;
                                }
            if (!ok) break;
        }
        s.check("chain-map.arity3.delta2.seeded", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 3 && ok; ++n) {
            StandardSimplex big(n), small(n - 1);
            for (int omit = 0; omit <= n && ok; ++omit) {
                SimplicialMap incl = SimplicialMap::face_inclusion(small, big, omit);
                for (const PermTuple& t : tuples_over({Perm::identity(2), Perm({2, 1})}, 3))
                    for (int da = 0; da <= n && ok; ++da)
                        for (int db = 0; db <= n && ok; ++db)
                            for (int ia = 0; ia < big.count(da); ++ia)
                                for (int ib = 0; ib < big.count(db); ++ib) {
                                    Cochain a = Cochain::dual(&big, da, ia);
                                    Cochain b = Cochain::dual(&big, db, ib);
                                    Cochain lhs = phi_apply(
                                        single(t), t.dim(),
                                        {a.pullback(incl), b.pullback(incl)}, &small);
                                    Cochain rhs =
                                        phi_apply(single(t), t.dim(), {a, b}, &big).pullback(incl);
                                    if (!(lhs - rhs).is_zero()) {
                                        ok = false;
                                        detail = "n=" + std::to_string(n) +
                                                 " omit=" + std::to_string(omit) +
                                                 " x=" + t.str();
                                    }
                                }
            }
        }
        s.check("naturality.face-inclusions", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        StandardSimplex d2(2);
        std::vector<std::pair<int, Perm>> actions = {{2, Perm({2, 1})}, {3, Perm({2, 3, 1})},
                                                     {3, Perm({3, 2, 1})}};
        for (const auto& [r, g] : actions) {
            std::vector<Perm> gens;
            if (r == 2) gens = {Perm::identity(2), Perm({2, 1})};
            else gens = {Perm::identity(3), Perm({2, 3, 1}), Perm({2, 1, 3})};
            for (const PermTuple& t : tuples_over(gens, 2)) {
                for (int da = 0; da <= 1 && ok; ++da)
                    for (int ia = 0; ia < d2.count(da) && ok; ++ia)
                        for (int ib = 0; ib < d2.count(1) && ok; ++ib) {
                            std::vector<Cochain> cs{Cochain::dual(&d2, da, ia),
                                                    Cochain::dual(&d2, 1, ib)};
                            if (r == 3) cs.push_back(Cochain::dual(&d2, 0, 0));
                            std::vector<Cochain> moved;
                            int sg = permute_cochains(g, cs, moved);
                            Cochain lhs = phi_apply(right_act(single(t), g), t.dim(), cs, &d2);
                            Cochain rhs = BigInt(sg) * phi_apply(single(t), t.dim(), moved, &d2);
                            if (!(lhs - rhs).is_zero()) {
                                ok = false;
                                detail = "x=" + t.str() + " g=" + g.str();
                            }
                        }
                if (!ok) break;
            }
            if (!ok) break;
        }
        s.check("equivariance.r2-r3", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        StandardSimplex d3(3);
        for (int da = 0; da <= 3 && ok; ++da)
            for (int db = 0; da + db <= 3 && ok; ++db)
                for (int ia = 0; ia < d3.count(da); ++ia)
                    for (int ib = 0; ib < d3.count(db); ++ib) {
                        Cochain a = Cochain::dual(&d3, da, ia), b = Cochain::dual(&d3, db, ib);
                        Cochain got = phi_apply(single(be_unit(2)), 0, {a, b}, &d3);
                        Cochain want = BigInt((da * db) % 2 == 0 ? 1 : -1) * aw_cup(a, b);
                        if (!(got - want).is_zero()) {
                            ok = false;
                            detail = "a=" + a.str() + " b=" + b.str() + ": got " + got.str();
                        }
                    }
        s.check("cup-restriction.delta3", ok, detail);
    }
    return s.take();
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"table1",  "table2", "contraction", "resolution",
            "homotopy", "cartan", "steenrod",   "structure"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "table1") return table1_suite();
    if (suite == "table2") return table2_suite();
    if (suite == "contraction") return contraction_suite();
    if (suite == "resolution") return resolution_suite();
    if (suite == "homotopy") return homotopy_suite();
    if (suite == "cartan") return cartan_suite(opt);
    if (suite == "steenrod") return steenrod_suite();
    if (suite == "structure") return structure_suite(opt);
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const std::string& name : suite_names()) {
            auto part = run_suite(name, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

int print_results(const std::vector<CheckResult>& results, std::ostream& os) {
    std::vector<CheckResult> sorted = results;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    int passed = 0;
    for (const CheckResult& r : sorted) {
        os << (r.pass ? "PASS " : "FAIL ") << r.id << "\n";
        if (!r.pass && !r.detail.empty()) os << "     " << r.detail << "\n";
        if (r.pass) ++passed;
    }
    os << passed << "/" << sorted.size() << " checks passed\n";
    return passed;
}

}  // namespace cartanlift
