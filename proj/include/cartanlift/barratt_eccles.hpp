#pragma once

#include <string>
#include <vector>

#include "cartanlift/ez.hpp"
#include "cartanlift/formal_sum.hpp"
#include "cartanlift/simplicial.hpp"
#include "cartanlift/tuples.hpp"

namespace cartanlift {

using ESum = FormalSum<PermTuple>;
using CSum = FormalSum<CycTuple>;

/* Operad composition: assemble the factors into a chain of the product via
   left-iterated shuffle maps, then apply the block permutation entrywise. */
ESum be_compose(const PermTuple& x, const std::vector<PermTuple>& ys);
ESum be_compose(const ESum& x, const std::vector<ESum>& ys);

// The operad unit viewed in arity r: the one-entry identity tuple.
PermTuple be_unit(int r);

// Right S_r-action on a sum of tuples (entrywise right translation).
ESum right_act(const ESum& x, const Perm& g);

/* Basis element of the surjection operad: a sequence of values 1..arity with
   no adjacent repeats, hitting every value.  Degree = length - arity. */
struct Surj {
    int arity = 0;
    std::vector<int> seq;

    int deg() const { return static_cast<int>(seq.size()) - arity; }
    bool valid() const;  // surjective and without adjacent repeats
    Surj relabel(const Perm& g) const;  // right action: value v -> g^{-1}(v)

    std::string str() const {
        std::string s = "(";
        for (size_t j = 0; j < seq.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(seq[j]);
        }
        return s + ")";
    }
    auto operator<=>(const Surj&) const = default;
};

/* Table reduction: the operad morphism from tuples of permutations to
   surjection sequences.  Sums over row-length compositions; each composition
   reads its row from the corresponding permutation, skipping finished values
   and finishing all but the last value read per row. */
FormalSum<Surj> table_reduction(const PermTuple& t);
FormalSum<Surj> table_reduction(const ESum& x);

/* Interval-cut evaluation of a surjection on cochains: the value of
   <u>(c_1,...,c_r) on a simplex, summing over overlapping interval
   decompositions of its vertex range. */
BigInt surj_eval(const Surj& u, const std::vector<Cochain>& cs, const GSimplex& target);

/* The structure map: evaluate an operad element on cochains of a simplicial
   set, producing a cochain of degree (sum of input degrees) - (element degree). */
Cochain phi_apply(const ESum& x, int x_degree, const std::vector<Cochain>& cs,
                  const SimplicialSetBase* host);

// Alexander-Whitney cup product (front face against back face), the degree-0
// arity-2 instance of the structure map.
Cochain aw_cup(const Cochain& a, const Cochain& b);

/* Input-side action: permuting a tuple of cochains by g with the Koszul sign
   of the rearrangement.  Returns the sign and writes the permuted tuple. */
int permute_cochains(const Perm& g, const std::vector<Cochain>& cs, std::vector<Cochain>& out);

}  // namespace cartanlift
