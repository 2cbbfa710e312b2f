#include "cartanlift/cartan.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "cartanlift/ez.hpp"

namespace cartanlift {

namespace {

/* Orientation constants for the three homotopies.  Each enters the relator
   through a different diagram edge; the signs are fixed so that the assembled
   identity d H + H d = tau F - G holds, which is the form the coboundary
   computation consumes. */
constexpr int kOrientK1 = -1;
constexpr int kOrientK2 = -1;
constexpr int kOrientK3 = -1;

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int rising_pairs(const std::vector<int>& vals) {
    int count = 0;
    for (size_t i = 0; i + 1 < vals.size(); ++i)
        if (vals[i] < vals[i + 1]) ++count;
    return count;
}

ESum f_image(const CycTuple& t) {
    PermTuple out;
    for (int e : t.entries) out.entries.push_back(f_hom(t.r, e));
    return out.degenerate() ? ESum{} : single(out);
}

ESum g_image(const CycTuple& t) {
    PermTuple out;
    for (int e : t.entries) out.entries.push_back(g_hom(t.r, e));
    return out.degenerate() ? ESum{} : single(out);
}

ESum tau_f_image(const CycTuple& t) {
    PermTuple out;
    Perm tw = tau(t.r);
    for (int e : t.entries) out.entries.push_back(f_hom(t.r, e) * tw);
    return out.degenerate() ? ESum{} : single(out);
}

ESum homotopy_k1(const CycTuple& t) {
    ESum out;
    const int n = t.dim();
    const Perm tw = tau(t.r);
    for (int i = 0; i <= n; ++i) {
        PermTuple term;
        for (int j = 0; j <= i; ++j) term.entries.push_back(f_hom(t.r, t.entries[j]) * tw);
        for (int j = i; j <= n; ++j) term.entries.push_back(g_hom(t.r, t.entries[j]));
        if (!term.degenerate()) out.add_term(term, BigInt(i % 2 == 0 ? 1 : -1));
    }
    return out;
}

ESum homotopy_k2(const CycTuple& t) {
    ESum out;
    PermTuple pt = t.to_perm_tuple();
    MultiSim<PermTuple> doubled{{pt, pt}};
    const Perm unit2 = Perm::identity(2);
    for (const auto& [z, c] : shi(doubled, 1)) {
        PermTuple composed;
        for (size_t pos = 0; pos < z.coords[0].entries.size(); ++pos)
            composed.entries.push_back(block_compose(
                unit2, {z.coords[0].entries[pos], z.coords[1].entries[pos]}));
        if (!composed.degenerate()) out.add_term(composed, c);
    }
    return out;
}

ESum pair_compose(const KTensor& kt) {
    ESum out;
    for (const auto& [term, c] : kt) {
        ESum part = be_compose(single(be_unit(2)),
                               std::vector<ESum>{single(term.left.to_perm_tuple()),
                                                 single(term.right.to_perm_tuple())});
        part *= c;
        out += part;
    }
    return out;
}

ESum bottom_row(const CycTuple& t) { return pair_compose(diag_aw(t)); }

KTensor homotopy_k3(int r, int n) {
    KTensor out;
    if (n < 2) return out;
    const int half = n / 2;
    const bool odd = n % 2 == 1;
    // sums over j >= 1, k >= 1 with j + k = half + 1
    for (int j = 1; j <= half; ++j) {
        int k = half + 1 - j;
        std::vector<int> s(j, 0), tvals(k, 0);
        auto advance = [r](std::vector<int>& v) {
            int idx = static_cast<int>(v.size()) - 1;
            while (idx >= 0 && v[idx] == r - 1) v[idx--] = 0;
            if (idx < 0) return false;
            ++v[idx];
            return true;
        };
        while (true) {
            // coefficient
            std::vector<int> key;
            int coeff;
            if (!odd) {
                key = s;
                key.push_back(tvals[0]);
                coeff = rising_pairs(key);
            } else {
                for (int v : s) key.push_back(((v - 1) % r + r) % r);
                key.push_back(((tvals[0] - 1) % r + r) % r);
                coeff = -rising_pairs(key);
            }
            if (coeff != 0) {
                CycTuple left{r, {}};
                left.entries.push_back(0);
                if (odd) left.entries.push_back(1 % r);
                for (int v : s) {
                    left.entries.push_back(v);
                    left.entries.push_back((v + 1) % r);
                }
                CycTuple right{r, {}};
                for (int v : tvals) {
                    right.entries.push_back(v);
                    right.entries.push_back((v + 1) % r);
                }
                if (!left.degenerate() && !right.degenerate())
                    out.add_term(TensorTerm<CycTuple, CycTuple>{left, right}, BigInt(coeff));
            }
            // advance (s, tvals) lexicographically
            if (!advance(tvals)) {
                if (!advance(s)) break;
            }
        }
    }
    return out;
}

KTensor homotopy_k3(const WGen& g) {
    KTensor out;
    for (const auto& [term, c] : homotopy_k3(g.r, g.n))
        out.add_term(TensorTerm<CycTuple, CycTuple>{term.left.shift(g.k), term.right.shift(g.k)},
                     c);
    return out;
}

ESum f_element(const WGen& g) {
    ESum base = map_sum(iota(g), [](const CycTuple& t) { return single(t.to_perm_tuple()); });
    std::vector<ESum> units(g.r, single(be_unit(2)));
    return be_compose(base, units);
}

ESum tau_f_element(const WGen& g) { return right_act(f_element(g), tau(g.r)); }

ESum g_element(const WGen& g) {
    ESum out;
    for (const auto& [term, c] : w_coproduct(g)) {
        ESum part = be_compose(
            single(be_unit(2)),
            std::vector<ESum>{
                map_sum(iota(term.left),
                        [](const CycTuple& t) { return single(t.to_perm_tuple()); }),
                map_sum(iota(term.right),
                        [](const CycTuple& t) { return single(t.to_perm_tuple()); })});
        part *= c;
        out += part;
    }
    return out;
}

const ESum& cartan_relator(std::uint32_t p, int i) {
    static std::map<std::pair<std::uint32_t, int>, ESum> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, i);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const int r = static_cast<int>(p);
    ESum h;
    for (const auto& [t, c] : iota(r, i)) {
        ESum k1 = homotopy_k1(t);
        k1 *= c * BigInt(kOrientK1);
        h += k1;
        ESum k2 = homotopy_k2(t);
        k2 *= c * BigInt(kOrientK2);
        h += k2;
    }
    ESum k3 = pair_compose(homotopy_k3(r, i));
    k3 *= BigInt(kOrientK3);
    h += k3;
    return cache.emplace(key, std::move(h)).first->second;
}

ESum cartan_relator(std::uint32_t p, const WGen& g) {
    return right_act(cartan_relator(p, g.n), splice_action(g.r, g.k));
}

Cochain cup(const Cochain& a, const Cochain& b) {
    return phi_apply(single(be_unit(2)), 0, {a, b}, a.host());
}

Cochain cartan_lift(std::uint32_t p, int i, const Cochain& a, const Cochain& b) {
    if (!a.is_cocycle_mod(p) || !b.is_cocycle_mod(p))
        throw std::invalid_argument("cartan_lift: inputs must be mod-p cocycles");
    const SimplicialSetBase* host = a.host();
    const int r = static_cast<int>(p);
    const int half = i / 2;
    int lead_exp = ((p - 1) / 2) * a.cdeg() * b.cdeg();
    Cochain ab = cup(a, b);
    Cochain out = BigInt(lead_exp % 2 == 0 ? 1 : -1) *
                  cup_ri(r, i, std::vector<Cochain>(p, ab));
    if (i % 2 == 0) {
        for (int j = 0; j <= half; ++j) {
            int k = half - j;
            Cochain left = cup_ri(r, 2 * j, std::vector<Cochain>(p, a));
            Cochain right = cup_ri(r, 2 * k, std::vector<Cochain>(p, b));
            out += BigInt(-1) * cup(left, right);
        }
    } else {
        for (int j = 0; j <= half; ++j) {
            int k = half - j;
            Cochain l1 = cup_ri(r, 2 * j + 1, std::vector<Cochain>(p, a));
            Cochain r1 = cup_ri(r, 2 * k, std::vector<Cochain>(p, b));
            out += BigInt(-1) * cup(l1, r1);
            Cochain l2 = cup_ri(r, 2 * j, std::vector<Cochain>(p, a));
            Cochain r2 = cup_ri(r, 2 * k + 1, std::vector<Cochain>(p, b));
            out += BigInt(a.cdeg() % 2 == 0 ? -1 : 1) * cup(l2, r2);
        }
    }
    return out;
}

Cochain zeta(std::uint32_t p, int i, const Cochain& a, const Cochain& b) {
    if (!is_odd_prime(p)) throw std::invalid_argument("zeta: p must be an odd prime");
    if (!a.is_cocycle_mod(p) || !b.is_cocycle_mod(p))
        throw std::invalid_argument("zeta: inputs must be mod-p cocycles");
    std::vector<Cochain> inputs;
    inputs.reserve(2 * p);
    for (std::uint32_t j = 0; j < p; ++j) inputs.push_back(a);
    for (std::uint32_t j = 0; j < p; ++j) inputs.push_back(b);
    return phi_apply(cartan_relator(p, i), i + 1, inputs, a.host());
}

}  // namespace cartanlift
