#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cartanlift/formal_sum.hpp"

namespace cartanlift {

class SimplicialSetBase;

/* A simplex of a finite simplicial set: a degeneracy word in normal form
   (strictly decreasing indices) applied to a named nondegenerate simplex of
   the host.  dim = base dim + word length. */
struct GSimplex {
    const SimplicialSetBase* host = nullptr;
    int base_dim = 0;
    int base_idx = 0;
    std::vector<int> word;  // strictly decreasing

    int dim() const { return base_dim + static_cast<int>(word.size()); }
    int deg() const { return dim(); }
    bool degenerate() const { return !word.empty(); }

    GSimplex face(int i) const;
    GSimplex degen(int i) const;
    std::vector<int> degeneracy_indices() const {  // ascending
        return std::vector<int>(word.rbegin(), word.rend());
    }

    std::string str() const;
    auto operator<=>(const GSimplex&) const = default;
};

/* Finite simplicial set: named nondegenerate simplices per dimension with
   face maps landing in (possibly degenerate) simplices. */
class SimplicialSetBase {
public:
    virtual ~SimplicialSetBase() = default;

    virtual int top_dim() const = 0;
    virtual int count(int dim) const = 0;  // nondegenerate simplices in dim
    virtual GSimplex face(int dim, int idx, int i) const = 0;
    virtual std::string name(int dim, int idx) const = 0;
    virtual int index_of(int dim, const std::string& name) const;

    GSimplex simplex(int dim, int idx) const { return GSimplex{this, dim, idx, {}}; }
    std::vector<GSimplex> simplices(int dim) const;

    // d = sum of signed faces, degenerate faces dropped.
    FormalSum<GSimplex> boundary(const GSimplex& s) const;

    void validate() const;  // checks d_i d_j = d_{j-1} d_i for i < j
};

/* The standard simplex: nondegenerate faces are the nonempty vertex subsets
   of {0..n}, faces delete a vertex. */
class StandardSimplex : public SimplicialSetBase {
public:
    explicit StandardSimplex(int n);

    int top_dim() const override { return n_; }
    int count(int dim) const override;
    GSimplex face(int dim, int idx, int i) const override;
    std::string name(int dim, int idx) const override;

    const std::vector<int>& vertices(int dim, int idx) const { return table_[dim][idx]; }
    int index_of_vertices(const std::vector<int>& vs) const;

    // possibly-degenerate simplex from a weakly increasing vertex tuple
    GSimplex from_vertex_tuple(std::vector<int> verts) const;

private:
    int n_;
    std::vector<std::vector<std::vector<int>>> table_;  // [dim][idx] = vertex list
    std::map<std::vector<int>, int> index_;
};

/* The boundary of the standard (n+1)-simplex: all proper faces. */
class BoundarySimplex : public SimplicialSetBase {
public:
    explicit BoundarySimplex(int n);  // boundary of Delta^n, top_dim = n-1

    int top_dim() const override { return n_ - 1; }
    int count(int dim) const override;
    GSimplex face(int dim, int idx, int i) const override;
    std::string name(int dim, int idx) const override;

private:
    int n_;
    std::vector<std::vector<std::vector<int>>> table_;
    std::map<std::vector<int>, int> index_;
};

/* Simplicial set given by explicit tables (JSON input). */
class ExplicitSet : public SimplicialSetBase {
public:
    struct FaceEntry {
        int base_dim = 0;
        int base_idx = 0;
        std::vector<int> word;
    };

    ExplicitSet(std::vector<std::vector<std::string>> names,
                std::map<std::string, std::vector<FaceEntry>> faces);

    int top_dim() const override { return static_cast<int>(names_.size()) - 1; }
    int count(int dim) const override;
    GSimplex face(int dim, int idx, int i) const override;
    std::string name(int dim, int idx) const override;

private:
    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::vector<FaceEntry>>> faces_;  // [dim][idx][i]
};

/* Simplicial map, determined by images of nondegenerate simplices. */
class SimplicialMap {
public:
    SimplicialMap(const SimplicialSetBase* src, const SimplicialSetBase* dst)
        : src_(src), dst_(dst) {}

    void set_image(int dim, int idx, GSimplex img);
    GSimplex apply(const GSimplex& s) const;
    FormalSum<GSimplex> push(const FormalSum<GSimplex>& chain) const;

    const SimplicialSetBase* source() const { return src_; }
    const SimplicialSetBase* target() const { return dst_; }

    // The inclusion of the i-th face Delta^{n-1} -> Delta^n.
    static SimplicialMap face_inclusion(const StandardSimplex& small, const StandardSimplex& big,
                                        int omitted_vertex);

private:
    const SimplicialSetBase* src_;
    const SimplicialSetBase* dst_;
    std::map<std::pair<int, int>, GSimplex> images_;
};

/* Normalized cochain: finitely supported map from nondegenerate d-simplices
   to integers, housed in homological degree -d. */
class Cochain {
public:
    Cochain(const SimplicialSetBase* host, int cochain_degree)
        : host_(host), cdeg_(cochain_degree) {}

    const SimplicialSetBase* host() const { return host_; }
    int cdeg() const { return cdeg_; }
    int hdeg() const { return -cdeg_; }

    void set(int idx, BigInt v);
    BigInt value(int idx) const;
    BigInt operator()(const GSimplex& s) const;  // 0 on degenerate or wrong-dim
    BigInt eval(const FormalSum<GSimplex>& chain) const;

    static Cochain dual(const SimplicialSetBase* host, int dim, int idx);

    Cochain& operator+=(const Cochain& o);
    Cochain& operator*=(const BigInt& s);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator*(const BigInt& s, Cochain a) { return a *= s; }
    Cochain operator-() const;
    friend Cochain operator-(Cochain a, const Cochain& b) { return a += -b; }

    /* Coboundary from the global convention for duals: with c of cochain
       degree d, (delta c)(x) = (-1)^{d+1} c(dx). */
    Cochain coboundary() const;

    bool is_zero() const;
    bool is_zero_mod(std::uint32_t p) const;
    bool is_cocycle_mod(std::uint32_t p) const { return coboundary().is_zero_mod(p); }
    bool equal_mod(const Cochain& o, std::uint32_t p) const { return (*this - o).is_zero_mod(p); }

    Cochain reduced_mod(std::uint32_t p) const;
    const std::map<int, BigInt>& values() const { return vals_; }

    // Pullback along a simplicial map into this cochain's host.
    Cochain pullback(const SimplicialMap& f) const;

    std::string str() const;

private:
    const SimplicialSetBase* host_;
    int cdeg_;
    std::map<int, BigInt> vals_;
};

}  // namespace cartanlift
