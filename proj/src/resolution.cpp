#include "cartanlift/resolution.hpp"

#include <stdexcept>

#include "cartanlift/barratt_eccles.hpp"

namespace cartanlift {

FormalSum<WGen> w_boundary(const WGen& g) {
    FormalSum<WGen> out;
    if (g.n == 0) return out;
    WGen below{g.r, g.k, g.n - 1};
    if (g.n % 2 == 1) {
        // T = rho - 1
        out.add_term(below.shifted(1), BigInt(1));
        out.add_term(below, BigInt(-1));
    } else {
        // N = 1 + rho + ... + rho^{r-1}
        for (int j = 0; j < g.r; ++j) out.add_term(below.shifted(j), BigInt(1));
    }
    return out;
}

BigInt w_counit(const WGen& g) { return BigInt(g.n == 0 ? 1 : 0); }

FormalSum<TensorTerm<WGen, WGen>> w_coproduct(const WGen& g) {
    FormalSum<TensorTerm<WGen, WGen>> out;
    const int r = g.r;
    auto put = [&](WGen a, WGen b, BigInt c) {
        out.add_term(TensorTerm<WGen, WGen>{a.shifted(g.k), b.shifted(g.k)}, std::move(c));
    };
    if (g.n % 2 == 0) {
        int i = g.n / 2;
        for (int j = 0; j <= i; ++j) put(WGen{r, 0, 2 * j}, WGen{r, 0, 2 * (i - j)}, BigInt(1));
        for (int j = 0; j <= i - 1; ++j) {
            int k = i - 1 - j;
            for (int s = 0; s < r; ++s)
                for (int t = s + 1; t < r; ++t)
                    put(WGen{r, s, 2 * j + 1}, WGen{r, t, 2 * k + 1}, BigInt(1));
        }
    } else {
        int i = (g.n - 1) / 2;
        for (int j = 0; j <= i; ++j) {
            int k = i - j;
            put(WGen{r, 0, 2 * j}, WGen{r, 0, 2 * k + 1}, BigInt(1));
            put(WGen{r, 0, 2 * j + 1}, WGen{r, 1, 2 * k}, BigInt(1));
        }
    }
    return out;
}

FormalSum<CycTuple> iota(int r, int n) {
    FormalSum<CycTuple> out;
    const int m = n / 2;
    std::vector<int> s(m, 0);
    while (true) {
        CycTuple t{r, {}};
        t.entries.push_back(0);
        if (n % 2 == 1) t.entries.push_back(1 % r);
        for (int a = 0; a < m; ++a) {
            t.entries.push_back(s[a]);
            t.entries.push_back((s[a] + 1) % r);
        }
        if (!t.degenerate()) out.add_term(t, BigInt(1));
        int k = m - 1;
        while (k >= 0 && s[k] == r - 1) s[k--] = 0;
        if (k < 0) break;
        ++s[k];
    }
    return out;
}

FormalSum<CycTuple> iota(const WGen& g) {
    FormalSum<CycTuple> out;
    for (const auto& [t, c] : iota(g.r, g.n)) out.add_term(t.shift(g.k), c);
    return out;
}

Cochain cup_ri(int r, int i, const std::vector<Cochain>& cs) {
    if (static_cast<int>(cs.size()) != r) throw std::invalid_argument("cup_ri: arity mismatch");
    ESum x = map_sum(iota(r, i), [](const CycTuple& t) { return single(t.to_perm_tuple()); });
    return phi_apply(x, i, cs, cs.front().host());
}

}  // namespace cartanlift
