#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>
#include <iosfwd>

namespace cartanlift {

/* Signed arbitrary-precision integer, sign + base-2^32 magnitude.
   Only the operations needed for exact coefficient arithmetic are provided:
   add, subtract, multiply, comparison, and divmod by a machine word
   (for decimal printing and mod-p reduction). */
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    bool operator==(const BigInt& o) const = default;
    std::strong_ordering operator<=>(const BigInt& o) const;

    // Nonnegative representative of this mod m, 0 < m < 2^31.
    std::uint32_t mod(std::uint32_t m) const;

    // Fits in long long (used where a small value is known by construction).
    long long to_ll() const;

    std::string str() const;

private:
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    void trim();
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace cartanlift
