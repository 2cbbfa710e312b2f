#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "cartanlift/formal_sum.hpp"
#include "cartanlift/permutation.hpp"

namespace cartanlift {

/* Simplex of the total space of the symmetric group S_r: a tuple of
   permutations, nondegenerate iff adjacent entries differ.  Degree = length-1.
   Faces delete an entry, degeneracies repeat one. */
struct PermTuple {
    std::vector<Perm> entries;

    int dim() const { return static_cast<int>(entries.size()) - 1; }
    int deg() const { return dim(); }
    int arity() const { return entries.empty() ? 0 : entries.front().size(); }

    PermTuple face(int i) const {
        PermTuple t = *this;
        t.entries.erase(t.entries.begin() + i);
        return t;
    }
    PermTuple degen(int i) const {
        PermTuple t = *this;
        t.entries.insert(t.entries.begin() + i, entries[i]);
        return t;
    }
    std::vector<int> degeneracy_indices() const {
        std::vector<int> out;
        for (size_t j = 0; j + 1 < entries.size(); ++j)
            if (entries[j] == entries[j + 1]) out.push_back(static_cast<int>(j));
        return out;
    }
    bool degenerate() const {
        for (size_t j = 0; j + 1 < entries.size(); ++j)
            if (entries[j] == entries[j + 1]) return true;
        return false;
    }

    // Entrywise right translation (x_0,...,x_n).g = (x_0 g,...,x_n g).
    PermTuple right_mul(const Perm& g) const {
        PermTuple t = *this;
        for (Perm& p : t.entries) p = p * g;
        return t;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t j = 0; j < entries.size(); ++j) {
            if (j) s += ",";
            s += entries[j].str();
        }
        return s + ")";
    }
    auto operator<=>(const PermTuple&) const = default;
};

/* Simplex of the total space of the cyclic group C_r, entries written as
   integers 0..r-1 under k ~ rho^k. */
struct CycTuple {
    int r = 0;
    std::vector<int> entries;

    int dim() const { return static_cast<int>(entries.size()) - 1; }
    int deg() const { return dim(); }

    CycTuple face(int i) const {
        CycTuple t = *this;
        t.entries.erase(t.entries.begin() + i);
        return t;
    }
    CycTuple degen(int i) const {
        CycTuple t = *this;
        t.entries.insert(t.entries.begin() + i, entries[i]);
        return t;
    }
    std::vector<int> degeneracy_indices() const {
        std::vector<int> out;
        for (size_t j = 0; j + 1 < entries.size(); ++j)
            if (entries[j] == entries[j + 1]) out.push_back(static_cast<int>(j));
        return out;
    }
    bool degenerate() const {
        for (size_t j = 0; j + 1 < entries.size(); ++j)
            if (entries[j] == entries[j + 1]) return true;
        return false;
    }

    // Right action of rho^k: entrywise shift mod r.
    CycTuple shift(int k) const {
        CycTuple t = *this;
        for (int& e : t.entries) e = ((e + k) % r + r) % r;
        return t;
    }

    PermTuple to_perm_tuple() const {
        PermTuple t;
        t.entries.reserve(entries.size());
        for (int e : entries) t.entries.push_back(rho_power(r, e));
        return t;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t j = 0; j < entries.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(entries[j]);
        }
        return s + ")";
    }
    auto operator<=>(const CycTuple&) const = default;
};

/* Simplicial boundary with degenerate faces dropped (normalized chains).
   Usable for any simplex-like key. */
template <class T>
FormalSum<T> simplex_boundary(const T& t) {
    FormalSum<T> out;
    if (t.dim() == 0) return out;
    for (int i = 0; i <= t.dim(); ++i) {
        T f = t.face(i);
        if (!f.degenerate()) out.add_term(f, BigInt(i % 2 == 0 ? 1 : -1));
    }
    return out;
}

/* Alexander-Whitney coproduct of the diagonal: sum of front-back splittings. */
template <class T>
FormalSum<TensorTerm<T, T>> diag_aw(const T& t) {
    FormalSum<TensorTerm<T, T>> out;
    int n = t.dim();
    for (int i = 0; i <= n; ++i) {
        T front = t;
        for (int j = n; j > i; --j) front = front.face(j);
        T back = t;
        for (int j = 0; j < i; ++j) back = back.face(0);
        if (!front.degenerate() && !back.degenerate())
            out.add_term(TensorTerm<T, T>{front, back}, BigInt(1));
    }
    return out;
}

// All nondegenerate tuples over an alphabet of size r (entries 0..r-1) of the
// given simplicial degree; used by exhaustive checks over chains of E(C_r).
std::vector<CycTuple> all_cyc_tuples(int r, int degree);

}  // namespace cartanlift
