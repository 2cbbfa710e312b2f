#pragma once

#include <string>
#include <vector>

namespace cartanlift {

/* Permutation of {1,...,r} in one-line notation.  Products compose as
   functions: (a*b)(x) = a(b(x)). */
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int r);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; }  // 1-based
    bool is_identity() const;

    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    int sign() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

    int deg() const { return 0; }
    std::string str() const;        // one-line: (1,3,2,4)
    std::string cycles_str() const; // cycle notation: (1 3)(2 4), "()" for id

private:
    std::vector<int> images_;
};

Perm parse_oneline(const std::string& text);
Perm parse_cycles(const std::string& text, int r);

// Cycle rho = (1,2,...,r) and its powers; {0,...,r-1} ~ C_r via k -> rho^k.
Perm rho_power(int r, int k);

/* The shuffle in S_{2r} sending the first deck to odd and the second deck to
   even positions: l -> 2l-1 for l <= r, l -> 2(l-r) for l > r. */
Perm tau(int r);

/* Operadic block permutation: blocks of sizes |inner_i| are permuted by outer
   while each is rearranged internally by inner_i. */
Perm block_compose(const Perm& outer, const std::vector<Perm>& inner);

// f(rho^k), g(rho^k): the two embeddings C_r -> S_{2r} used by the homotopies;
// f interleaves the two decks, g acts diagonally on each deck.
Perm f_hom(int r, int k);
Perm g_hom(int r, int k);
// The diagonal-then-split action of C_r on S(2r); equals g_hom.
Perm splice_action(int r, int k);

}  // namespace cartanlift
