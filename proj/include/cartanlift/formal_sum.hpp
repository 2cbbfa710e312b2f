#pragma once

#include <cassert>
#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartanlift/bigint.hpp"

namespace cartanlift {

/* Basis keys are ordered values exposing a homological degree and a canonical
   byte-string form.  A FormalSum is a normalized integer combination of keys:
   no zero coefficients are stored and all keys share one degree. */
template <class K>
concept BasisKey = requires(const K& k) {
    { k.deg() } -> std::convertible_to<int>;
    { k.str() } -> std::convertible_to<std::string>;
    { k < k } -> std::convertible_to<bool>;
    { k == k } -> std::convertible_to<bool>;
};

template <BasisKey K>
class FormalSum {
public:
    using key_type = K;

    FormalSum() = default;

    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int degree() const { return degree_; }  // meaningful only when non-empty
    const std::map<K, BigInt>& terms() const { return terms_; }

    void add_term(const K& k, BigInt c) {
        if (c.is_zero()) return;
        if (terms_.empty()) {
            degree_ = k.deg();
        } else {
            assert(k.deg() == degree_ && "mixed-degree formal sum");
        }
        auto [it, fresh] = terms_.try_emplace(k, BigInt(0));
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    FormalSum& operator*=(const BigInt& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const BigInt& s, FormalSum a) { return a *= s; }
    FormalSum operator-() const {
        FormalSum r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    bool operator==(const FormalSum& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        if (!terms_.empty() && degree_ != o.degree_) return false;
        return terms_ == o.terms_;
    }

    // Coefficientwise reduction to the representatives {0, ..., p-1}.
    FormalSum reduced_mod(std::uint32_t p) const {
        FormalSum r;
        for (const auto& [k, c] : terms_) r.add_term(k, BigInt(static_cast<long long>(c.mod(p))));
        return r;
    }
    bool equal_mod(const FormalSum& o, std::uint32_t p) const {
        return (*this - o).reduced_mod(p).empty();
    }

    BigInt coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Canonical text form, terms sorted by the byte-string form of their keys.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<std::string, const BigInt*>> parts;
        parts.reserve(terms_.size());
        for (const auto& [k, c] : terms_) parts.emplace_back(k.str(), &c);
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::string out;
        bool first = true;
        for (const auto& [ks, c] : parts) {
            BigInt a = *c;
            bool neg = a.sign() < 0;
            if (neg) a = -a;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            if (!(a == BigInt(1))) {
                out += a.str();
                out += "*";
            }
            out += ks;
        }
        return out;
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    int degree_ = 0;
    std::map<K, BigInt> terms_;
};

template <BasisKey K>
FormalSum<K> single(const K& k, BigInt c = BigInt(1)) {
    FormalSum<K> fs;
    fs.add_term(k, std::move(c));
    return fs;
}

/* Linear extension: f maps a basis key to a formal sum; map_sum applies it
   termwise with coefficients. */
template <BasisKey K, class F>
auto map_sum(const FormalSum<K>& fs, F&& f) {
    using R = decltype(f(std::declval<const K&>()));
    R out;
    for (const auto& [k, c] : fs) {
        R img = f(k);
        img *= c;
        out += img;
    }
    return out;
}

template <BasisKey A, BasisKey B>
struct TensorTerm {
    A left;
    B right;

    int deg() const { return left.deg() + right.deg(); }
    std::string str() const { return left.str() + "⊗" + right.str(); }
    auto operator<=>(const TensorTerm&) const = default;
};

// Bilinear tensor product of sums; signs from graded transpositions enter
// elsewhere (module actions and tensor differentials), not here.
template <BasisKey A, BasisKey B>
FormalSum<TensorTerm<A, B>> tensor(const FormalSum<A>& a, const FormalSum<B>& b) {
    FormalSum<TensorTerm<A, B>> out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add_term(TensorTerm<A, B>{ka, kb}, ca * cb);
    return out;
}

/* Differential on a tensor product: d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy. */
template <BasisKey A, BasisKey B, class BdA, class BdB>
FormalSum<TensorTerm<A, B>> tensor_boundary(const TensorTerm<A, B>& t, BdA&& bd_left,
                                            BdB&& bd_right) {
    FormalSum<TensorTerm<A, B>> out;
    FormalSum<A> dl = bd_left(t.left);
    for (const auto& [k, c] : dl) out.add_term(TensorTerm<A, B>{k, t.right}, c);
    FormalSum<B> dr = bd_right(t.right);
    BigInt sign(t.left.deg() % 2 == 0 ? 1 : -1);
    for (const auto& [k, c] : dr) out.add_term(TensorTerm<A, B>{t.left, k}, sign * c);
    return out;
}

/* Koszul sign of rearranging homogeneous factors x_1 (x) ... (x) x_r of the
   given degrees into x_{s(1)} (x) ... (x) x_{s(r)}, where s lists the source
   position of each output slot (0-based). */
inline int koszul_sign(const std::vector<int>& source_of_slot, const std::vector<int>& degrees) {
    long long exp = 0;
    for (size_t i = 0; i < source_of_slot.size(); ++i)
        for (size_t j = i + 1; j < source_of_slot.size(); ++j)
            if (source_of_slot[i] > source_of_slot[j])
                exp += static_cast<long long>(degrees[source_of_slot[i]]) *
                       degrees[source_of_slot[j]];
    return exp % 2 == 0 ? 1 : -1;
}

/* Differential of a degree-d map between complexes: (dF)(x) = d(F(x)) - (-1)^d F(dx).
   F, bd_src, bd_tgt map basis keys to formal sums; everything extends linearly. */
template <class F, class BdSrc, class BdTgt>
auto hom_boundary(F&& f, int deg_f, BdSrc&& bd_src, BdTgt&& bd_tgt) {
    return [f = std::forward<F>(f), deg_f, bd_src = std::forward<BdSrc>(bd_src),
            bd_tgt = std::forward<BdTgt>(bd_tgt)](const auto& x) {
        auto lhs = map_sum(f(x), bd_tgt);
        auto rhs = map_sum(bd_src(x), f);
        if (deg_f % 2 == 0)
            lhs -= rhs;
        else
            lhs += rhs;
        return lhs;
    };
}

}  // namespace cartanlift
