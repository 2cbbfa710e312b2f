#include "cartanlift/steenrod.hpp"

#include <stdexcept>

#include "cartanlift/resolution.hpp"

namespace cartanlift {

namespace {

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Cochain d_rep(int i, std::uint32_t p, const Cochain& a) {
    if (!a.is_cocycle_mod(p)) throw std::invalid_argument("d_rep: input is not a mod-p cocycle");
    return cup_ri(static_cast<int>(p), i, std::vector<Cochain>(p, a));
}

long long nu(long long n, std::uint32_t p) {
    long long m = (static_cast<long long>(p) - 1) / 2;
    std::uint64_t fact = 1;
    for (long long j = 2; j <= m; ++j) fact = fact * j % p;
    std::uint32_t mag =
        n >= 0 ? pow_mod(fact, n, p) : pow_mod(pow_mod(fact, p - 2, p), -n, p);
    long long half = n * (n - 1) / 2;
    bool negative = (half % 2 != 0) && (m % 2 != 0);
    long long value = negative ? (p - mag) % p : mag;
    if (value > p / 2) value -= p;  // balanced representative
    return value;
}

Cochain steenrod_rep(long long s, int eps, std::uint32_t p, const Cochain& a) {
    if (!a.is_cocycle_mod(p))
        throw std::invalid_argument("steenrod_rep: input is not a mod-p cocycle");
    long long n = -a.cdeg();
    long long index = (2 * s - n) * (static_cast<long long>(p) - 1) - eps;
    long long outd = a.cdeg() * static_cast<long long>(p) - index;
    if (index < 0) return Cochain(a.host(), static_cast<int>(outd > 0 ? outd : 0));
    long long scalar = nu(n, p);
    if (s % 2 != 0) scalar = -scalar;
    Cochain rep = d_rep(static_cast<int>(index), p, a);
    return BigInt(scalar) * rep;
}

}  // namespace cartanlift
