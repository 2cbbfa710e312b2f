#include "cartanlift/bigint.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace cartanlift {

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long u = negative_ ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
    while (u) {
        limbs_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

// requires |a| >= |b|
void BigInt::sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<std::uint32_t>(s);
    }
    assert(borrow == 0);
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (negative_ == o.negative_) {
        add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) {
            limbs_.clear();
            negative_ = false;
        } else if (c > 0) {
            sub_mag(limbs_, o.limbs_);
        } else {
            auto tmp = o.limbs_;
            sub_mag(tmp, limbs_);
            limbs_ = std::move(tmp);
            negative_ = o.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (is_zero() || o.is_zero()) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = out[i + j] + carry +
                                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out[i + o.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    limbs_ = std::move(out);
    negative_ = negative_ != o.negative_;
    trim();
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign() != o.sign()) return sign() <=> o.sign();
    int c = cmp_mag(limbs_, o.limbs_);
    if (negative_) c = -c;
    return c <=> 0;
}

std::uint32_t BigInt::mod(std::uint32_t m) const {
    assert(m > 0);
    std::uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 32) | limbs_[i]) % m;
    if (negative_ && rem != 0) rem = m - rem;
    return static_cast<std::uint32_t>(rem);
}

long long BigInt::to_ll() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigInt::to_ll: value too large");
    unsigned long long u = 0;
    for (size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
    if (!negative_ && u > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt::to_ll");
    if (negative_ && u > 0x8000000000000000ULL) throw std::overflow_error("BigInt::to_ll");
    return negative_ ? -static_cast<long long>(u - 1) - 1 : static_cast<long long>(u);
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

}  // namespace cartanlift
