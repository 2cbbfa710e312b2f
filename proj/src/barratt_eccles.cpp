#include "cartanlift/barratt_eccles.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cartanlift {

PermTuple be_unit(int r) { return PermTuple{{Perm::identity(r)}}; }

ESum right_act(const ESum& x, const Perm& g) {
    ESum out;
    for (const auto& [t, c] : x) {
        PermTuple moved = t.right_mul(g);
        if (!moved.degenerate()) out.add_term(moved, c);
    }
    return out;
}

ESum be_compose(const PermTuple& x, const std::vector<PermTuple>& ys) {
    const int r = x.arity();
    if (static_cast<int>(ys.size()) != r) throw std::invalid_argument("be_compose: arity mismatch");
    using MS = MultiSim<PermTuple>;
    FormalSum<MS> acc = single(as_multi(x));
    for (const PermTuple& y : ys) {
        FormalSum<MS> next;
        for (const auto& [z, c] : acc) {
            FormalSum<MS> grown = ez(z, as_multi(y));
            grown *= c;
            next += grown;
        }
        acc = std::move(next);
    }
    ESum out;
    for (const auto& [z, c] : acc) {
        PermTuple t;
        for (int pos = 0; pos <= z.dim(); ++pos) {
            std::vector<Perm> inner;
            inner.reserve(r);
            for (int kcoord = 1; kcoord <= r; ++kcoord)
                inner.push_back(z.coords[kcoord].entries[pos]);
            t.entries.push_back(block_compose(z.coords[0].entries[pos], inner));
        }
        if (!t.degenerate()) out.add_term(t, c);
    }
    return out;
}

ESum be_compose(const ESum& x, const std::vector<ESum>& ys) {
    ESum out;
    std::vector<PermTuple> picked(ys.size());
    // multilinear expansion; factors stay in order, so no Koszul signs here
    struct Rec {
        const std::vector<ESum>& ys;
        std::vector<PermTuple>& picked;
        ESum& out;
        const PermTuple* xt;
        void go(size_t i, const BigInt& coeff) {
            if (i == ys.size()) {
                ESum part = be_compose(*xt, picked);
                part *= coeff;
                out += part;
                return;
            }
            for (const auto& [t, c] : ys[i]) {
                picked[i] = t;
                go(i + 1, coeff * c);
            }
        }
    } rec{ys, picked, out, nullptr};
    for (const auto& [t, c] : x) {
        rec.xt = &t;
        rec.go(0, c);
    }
    return out;
}

// ------------------------------------------------------------- surjections

bool Surj::valid() const {
    if (static_cast<int>(seq.size()) < arity) return false;
    std::vector<char> seen(arity, 0);
    for (size_t j = 0; j < seq.size(); ++j) {
        if (seq[j] < 1 || seq[j] > arity) return false;
        if (j + 1 < seq.size() && seq[j] == seq[j + 1]) return false;
        seen[seq[j] - 1] = 1;
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

Surj Surj::relabel(const Perm& g) const {
    Surj out{arity, seq};
    Perm inv = g.inverse();
    for (int& v : out.seq) v = inv(v);
    return out;
}

FormalSum<Surj> table_reduction(const PermTuple& t) {
    FormalSum<Surj> out;
    const int d = t.dim();
    const int r = t.arity();
    // compositions a_0 + ... + a_d = d + r with a_i >= 1
    std::vector<int> a(d + 1, 1);
    a[0] = r;  // start from (r,1,...,1) and iterate all compositions
    std::vector<int> comp(d + 1);
    struct Rec {
        int d, r;
        const PermTuple& t;
        FormalSum<Surj>& out;
        std::vector<int> comp;
        Rec(int d_, int r_, const PermTuple& t_, FormalSum<Surj>& o)
            : d(d_), r(r_), t(t_), out(o), comp(d_ + 1) {}
        void choose(int row, int left) {
            if (row == d) {
                comp[row] = left;
                if (left >= 1) build();
                return;
            }
            for (int v = 1; v <= left - (d - row); ++v) {
                comp[row] = v;
                choose(row + 1, left - v);
            }
        }
        void build() {
            std::vector<char> finished(r + 1, 0);
            std::vector<int> seq;
            seq.reserve(d + r);
            for (int row = 0; row <= d; ++row) {
                // row semantics: position j of the table feeds input sigma^{-1}(j)
                const Perm p = t.entries[row].inverse();
                std::vector<int> filtered;
                for (int pos = 1; pos <= r; ++pos) {
                    int v = p(pos);
                    if (!finished[v]) filtered.push_back(v);
                }
                if (static_cast<int>(filtered.size()) < comp[row]) return;
                for (int j = 0; j < comp[row]; ++j) {
                    if (!seq.empty() && seq.back() == filtered[j]) return;  // degenerate
                    seq.push_back(filtered[j]);
                    bool last_of_row = j == comp[row] - 1;
                    if (!last_of_row || row == d) finished[filtered[j]] = 1;
                }
            }
            Surj u{r, std::move(seq)};
            if (u.valid()) out.add_term(u, BigInt(1));
        }
    } rec(d, r, t, out);
    rec.choose(0, d + r);
    return out;
}

FormalSum<Surj> table_reduction(const ESum& x) {
    FormalSum<Surj> out;
    for (const auto& [t, c] : x) {
        FormalSum<Surj> part = table_reduction(t);
        part *= c;
        out += part;
    }
    return out;
}

// --------------------------------------------------------- interval cuts

namespace {

GSimplex face_on_vertices(const GSimplex& s, const std::vector<int>& keep) {
    GSimplex f = s;
    int at = static_cast<int>(keep.size()) - 1;
    for (int v = s.dim(); v >= 0; --v) {
        if (at >= 0 && keep[at] == v) {
            --at;
            continue;
        }
        f = f.face(v);
    }
    return f;
}

struct CutState {
    const Surj& u;
    const std::vector<Cochain>& cs;
    const GSimplex& target;
    std::vector<char> inner;              // position j is a caesura
    std::vector<int> need;                // |A_l| per label
    std::vector<std::vector<int>> parts;  // A_l so far
    std::vector<int> cutdim;              // interval dimensions per position
    BigInt total{0};

    void finish() {
        /* Sign: Koszul pairing of the cochains against the pieces, the
           regrouping of intervals by label with caesura intervals carrying an
           extra degree, and one twist per caesura by what lies after it. */
        const int L = static_cast<int>(u.seq.size());
        long long exp = 0;
        for (int l = 0; l < u.arity; ++l)
            for (int l2 = l + 1; l2 < u.arity; ++l2)
                exp += static_cast<long long>(need[l] - 1) * (need[l2] - 1);
        for (int j = 0; j < L; ++j)
            for (int j2 = j + 1; j2 < L; ++j2)
                if (u.seq[j] > u.seq[j2]) {
                    long long wj = cutdim[j] + (inner[j] ? 1 : 0);
                    long long wj2 = cutdim[j2] + (inner[j2] ? 1 : 0);
                    exp += wj * wj2;
                }
        long long suffix = 0;
        for (int j = L - 1; j >= 0; --j) {
            if (inner[j]) exp += suffix + 1;
            suffix += cutdim[j];
        }
        BigInt value(exp % 2 == 0 ? 1 : -1);
        for (int l = 0; l < u.arity; ++l) {
            GSimplex f = face_on_vertices(target, parts[l]);
            if (f.degenerate()) return;
            value *= cs[l](f);
            if (value.is_zero()) return;
        }
        total += value;
    }

    void extend(int j, int from) {
        const int L = static_cast<int>(u.seq.size());
        const int n = target.dim();
        const int label = u.seq[j] - 1;
        std::vector<int>& part = parts[label];
        const size_t rollback = part.size();
        // the j-th interval is [from..to]; last interval must end at n
        int lo = from, hi = n;
        if (j == L - 1) lo = n;
        for (int to = lo; to <= hi; ++to) {
            part.resize(rollback);
            bool ok = true;
            for (int v = from; v <= to; ++v) {
                if (!part.empty() && part.back() >= v) {
                    ok = false;
                    break;
                }
                part.push_back(v);
            }
            if (ok && static_cast<int>(part.size()) <= need[label]) {
                cutdim[j] = to - from;
                if (j == L - 1) {
                    bool full = true;
                    for (int l = 0; l < u.arity; ++l)
                        if (static_cast<int>(parts[l].size()) != need[l]) {
                            full = false;
                            break;
                        }
                    if (full) finish();
                } else {
                    extend(j + 1, to);
                }
            }
        }
        part.resize(rollback);
    }
};

}  // namespace

BigInt surj_eval(const Surj& u, const std::vector<Cochain>& cs, const GSimplex& target) {
    assert(static_cast<int>(cs.size()) == u.arity);
    if (target.degenerate()) return BigInt(0);
    int total_need = 0;
    for (const Cochain& c : cs) total_need += c.cdeg();
    if (target.dim() != total_need - u.deg()) return BigInt(0);
    if (target.dim() < 0) return BigInt(0);

    CutState st{u, cs, target, {}, {}, {}, {}};
    const int L = static_cast<int>(u.seq.size());
    st.inner.assign(L, 0);
    std::vector<int> last_pos(u.arity, -1);
    for (int j = 0; j < L; ++j) last_pos[u.seq[j] - 1] = j;
    for (int j = 0; j < L; ++j) st.inner[j] = j != last_pos[u.seq[j] - 1];
    st.need.resize(u.arity);
    for (int l = 0; l < u.arity; ++l) st.need[l] = cs[l].cdeg() + 1;
    st.parts.assign(u.arity, {});
    st.cutdim.assign(L, 0);
    st.extend(0, 0);
    return st.total;
}

Cochain phi_apply(const ESum& x, int x_degree, const std::vector<Cochain>& cs,
                  const SimplicialSetBase* host) {
    assert(x.empty() || x.degree() == x_degree);
    int out_deg = -x_degree;
    for (const Cochain& c : cs) {
        assert(c.host() == host);
        out_deg += c.cdeg();
    }
    Cochain out(host, out_deg);
    if (out_deg < 0 || out_deg > host->top_dim()) return out;
    FormalSum<Surj> surjs = table_reduction(x);
    for (int idx = 0; idx < host->count(out_deg); ++idx) {
        GSimplex s = host->simplex(out_deg, idx);
        BigInt v(0);
        for (const auto& [u, c] : surjs) v += c * surj_eval(u, cs, s);
        out.set(idx, v);
    }
    return out;
}

Cochain aw_cup(const Cochain& a, const Cochain& b) {
    const SimplicialSetBase* host = a.host();
    assert(b.host() == host);
    int out_deg = a.cdeg() + b.cdeg();
    Cochain out(host, out_deg);
    if (out_deg > host->top_dim()) return out;
    for (int idx = 0; idx < host->count(out_deg); ++idx) {
        GSimplex s = host->simplex(out_deg, idx);
        GSimplex front = s;
        for (int j = out_deg; j > a.cdeg(); --j) front = front.face(j);
        GSimplex back = s;
        for (int j = 0; j < a.cdeg(); ++j) back = back.face(0);
        out.set(idx, a(front) * b(back));
    }
    return out;
}

int permute_cochains(const Perm& g, const std::vector<Cochain>& cs, std::vector<Cochain>& out) {
    const int r = g.size();
    assert(static_cast<int>(cs.size()) == r);
    const Perm inv = g.inverse();
    std::vector<int> source(r);
    std::vector<int> degrees(r);
    for (int i = 0; i < r; ++i) degrees[i] = cs[i].cdeg();
    out.clear();
    for (int slot = 1; slot <= r; ++slot) {
        source[slot - 1] = inv(slot) - 1;
        out.push_back(cs[inv(slot) - 1]);
    }
    return koszul_sign(source, degrees);
}

}  // namespace cartanlift
