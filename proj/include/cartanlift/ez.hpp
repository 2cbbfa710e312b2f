#pragma once

#include <algorithm>
#include <cassert>
#include <iterator>
#include <string>
#include <vector>

#include "cartanlift/formal_sum.hpp"

namespace cartanlift {

/* Simplex of a finite product of simplicial sets, stored as one coordinate
   simplex per factor (all of the same dimension).  A single simplex is the
   one-coordinate case.  The product simplex is degenerate iff all coordinates
   share a degeneracy index. */
template <class Coord>
struct MultiSim {
    std::vector<Coord> coords;

    int dim() const { return coords.front().dim(); }
    int deg() const { return dim(); }

    MultiSim face(int i) const {
        MultiSim m = *this;
        for (Coord& c : m.coords) c = c.face(i);
        return m;
    }
    MultiSim degen(int i) const {
        MultiSim m = *this;
        for (Coord& c : m.coords) c = c.degen(i);
        return m;
    }
    std::vector<int> degeneracy_indices() const {
        std::vector<int> common = coords.front().degeneracy_indices();
        for (size_t k = 1; k < coords.size() && !common.empty(); ++k) {
            std::vector<int> next = coords[k].degeneracy_indices(), merged;
            std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                                  std::back_inserter(merged));
            common = std::move(merged);
        }
        return common;
    }
    bool degenerate() const { return !degeneracy_indices().empty(); }

    MultiSim slice(size_t from, size_t to) const {
        MultiSim m;
        m.coords.assign(coords.begin() + from, coords.begin() + to);
        return m;
    }
    static MultiSim concat(const MultiSim& a, const MultiSim& b) {
        MultiSim m = a;
        m.coords.insert(m.coords.end(), b.coords.begin(), b.coords.end());
        return m;
    }

    std::string str() const {
        std::string s = "<";
        for (size_t k = 0; k < coords.size(); ++k) {
            if (k) s += ";";
            s += coords[k].str();
        }
        return s + ">";
    }
    auto operator<=>(const MultiSim&) const = default;
};

template <class Coord>
MultiSim<Coord> as_multi(const Coord& c) {
    return MultiSim<Coord>{{c}};
}

namespace detail {

// Enumerate ascending position subsets of {0..total-1} of the given size.
inline void subsets_rec(int total, int size, int start, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < total; ++v) {
        cur.push_back(v);
        subsets_rec(total, size, v + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets(int total, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(total, size, 0, cur, out);
    return out;
}

// Shuffle signature: inversions between the two decks.
inline int shuffle_exponent(const std::vector<int>& first_deck_positions) {
    int e = 0;
    for (size_t i = 0; i < first_deck_positions.size(); ++i)
        e += first_deck_positions[i] - static_cast<int>(i);
    return e;
}

}  // namespace detail

/* Alexander-Whitney map on a product simplex, split into the first `split`
   coordinates and the rest: sum of front faces (x) back faces. */
template <class Coord>
FormalSum<TensorTerm<MultiSim<Coord>, MultiSim<Coord>>> aw(const MultiSim<Coord>& z,
                                                           size_t split) {
    using MS = MultiSim<Coord>;
    FormalSum<TensorTerm<MS, MS>> out;
    const int n = z.dim();
    MS x = z.slice(0, split), y = z.slice(split, z.coords.size());
    for (int i = 0; i <= n; ++i) {
        MS front = x;
        for (int j = n; j > i; --j) front = front.face(j);
        MS back = y;
        for (int j = 0; j < i; ++j) back = back.face(0);
        if (!front.degenerate() && !back.degenerate())
            out.add_term(TensorTerm<MS, MS>{front, back}, BigInt(1));
    }
    return out;
}

/* Eilenberg-Zilber shuffle map: chains(X) (x) chains(Y) -> chains(X x Y). */
template <class Coord>
FormalSum<MultiSim<Coord>> ez(const MultiSim<Coord>& x, const MultiSim<Coord>& y) {
    using MS = MultiSim<Coord>;
    FormalSum<MS> out;
    const int p = x.dim(), q = y.dim();
    for (const auto& mu : detail::subsets(p + q, p)) {
        // mu: positions where the x deck advances; complement nu for y.
        std::vector<int> nu;
        int at = 0;
        for (int v = 0; v < p + q; ++v) {
            if (at < p && mu[at] == v)
                ++at;
            else
                nu.push_back(v);
        }
        MS xs = x;
        for (int v : nu) xs = xs.degen(v);
        MS ys = y;
        for (int v : mu) ys = ys.degen(v);
        MS zr = MS::concat(xs, ys);
        if (zr.degenerate()) continue;
        int e = detail::shuffle_exponent(mu);
        out.add_term(zr, BigInt(e % 2 == 0 ? 1 : -1));
    }
    return out;
}

template <class Coord>
FormalSum<MultiSim<Coord>> ez(const FormalSum<TensorTerm<MultiSim<Coord>, MultiSim<Coord>>>& t) {
    FormalSum<MultiSim<Coord>> out;
    for (const auto& [term, c] : t) {
        auto img = ez(term.left, term.right);
        img *= c;
        out += img;
    }
    return out;
}

/* Contraction homotopy for the Eilenberg-Zilber reduction on a binary product:
   ez(aw(z)) - z = d shi(z) + shi(dz), with shi vanishing in dimension 0. */
template <class Coord>
FormalSum<MultiSim<Coord>> shi(const MultiSim<Coord>& z, size_t split) {
    using MS = MultiSim<Coord>;
    FormalSum<MS> out;
    const int m = z.dim();
    MS x = z.slice(0, split), y = z.slice(split, z.coords.size());
    for (int q = 0; q <= m - 1; ++q) {
        for (int pt = 0; pt <= m - 1 - q; ++pt) {
            const int mb = m - pt - q;
            MS x0 = x;
            for (int j = m; j > m - q; --j) x0 = x0.face(j);  // front (m-q)-face
            x0 = x0.degen(mb - 1);
            MS y0 = y;
            for (int j = m - q - 1; j >= mb; --j) y0 = y0.face(j);  // drop middle block
            for (const auto& alpha : detail::subsets(pt + q + 1, pt + 1)) {
                std::vector<int> beta;
                int at = 0;
                for (int v = 0; v < pt + q + 1; ++v) {
                    if (at < pt + 1 && alpha[at] == v)
                        ++at;
                    else
                        beta.push_back(v);
                }
                MS xs = x0;
                for (int v : beta) xs = xs.degen(v + mb);
                MS ys = y0;
                for (int v : alpha) ys = ys.degen(v + mb);
                MS zr = MS::concat(xs, ys);
                if (zr.degenerate()) continue;
                int e = mb + detail::shuffle_exponent(alpha) + 1;
                out.add_term(zr, BigInt(e % 2 == 0 ? 1 : -1));
            }
        }
    }
    return out;
}

}  // namespace cartanlift
