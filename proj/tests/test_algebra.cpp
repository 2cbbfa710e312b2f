#include <doctest.h>

#include <cstdlib>
#include <string>

#include "cartanlift/bigint.hpp"
#include "cartanlift/formal_sum.hpp"
#include "cartanlift/tuples.hpp"

using namespace cartanlift;

namespace {

struct Key {
    std::string k;
    int d = 0;
    int deg() const { return d; }
    std::string str() const { return k; }
    auto operator<=>(const Key&) const = default;
};

}  // namespace

TEST_CASE("bigint arithmetic against long long") {
    std::srand(12345);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = (std::rand() % 200001) - 100000;
        long long b = (std::rand() % 200001) - 100000;
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK(BigInt(a).str() == std::to_string(a));
        long long m = 1 + std::rand() % 97;
        CHECK(BigInt(a).mod(static_cast<std::uint32_t>(m)) == ((a % m) + m) % m);
    }
}

TEST_CASE("bigint scales past 64 bits") {
    BigInt big(1);
    for (int i = 0; i < 5; ++i) big *= BigInt(1000000007LL);
    CHECK(big.str() == "1000000035000000490000003430000012005000016807");
    CHECK((big - big).is_zero());
    CHECK(big.mod(97) == [] {
        unsigned long long r = 1;
        for (int i = 0; i < 5; ++i) r = r * (1000000007ULL % 97) % 97;
        return r;
    }());
}

TEST_CASE("formal sums normalize: cancellation, merging, mod-p view") {
    FormalSum<Key> fs;
    fs.add_term(Key{"x", 0}, BigInt(2));
    fs.add_term(Key{"x", 0}, BigInt(-2));
    CHECK(fs.empty());

    fs.add_term(Key{"x", 0}, BigInt(1));
    fs.add_term(Key{"x", 0}, BigInt(1));
    CHECK(fs.coeff(Key{"x", 0}) == BigInt(2));

    FormalSum<Key> three = single(Key{"x", 0}, BigInt(3));
    CHECK(three.reduced_mod(3).empty());
    CHECK(three.str() == "3*x");
    CHECK((-three).str() == "-3*x");
}

TEST_CASE("serialization is canonical and sorted by key bytes") {
    FormalSum<Key> a, b;
    a.add_term(Key{"b", 1}, BigInt(1));
    a.add_term(Key{"a", 1}, BigInt(2));
    b.add_term(Key{"a", 1}, BigInt(2));
    b.add_term(Key{"b", 1}, BigInt(1));
    CHECK(a == b);
    CHECK(a.str() == b.str());
    CHECK(a.str() == "2*a + b");
}

TEST_CASE("tensor is bilinear") {
    std::srand(777);
    auto rnd = [] {
        FormalSum<Key> fs;
        for (int i = 0; i < 4; ++i)
            fs.add_term(Key{std::string(1, static_cast<char>('a' + std::rand() % 3)), 1},
                        BigInt((std::rand() % 7) - 3));
        return fs;
    };
    for (int t = 0; t < 200; ++t) {
        FormalSum<Key> a = rnd(), b = rnd(), c = rnd();
        CHECK(tensor(a + b, c) == tensor(a, c) + tensor(b, c));
        CHECK(tensor(a, b + c) == tensor(a, b) + tensor(a, c));
        CHECK(tensor(FormalSum<Key>{}, c).empty());
    }
}

TEST_CASE("tensor degree adds and Koszul sign of the basic reordering") {
    // tau(a^r (x) b^r) = (-1)^{r(r-1)/2 |a||b|} (a (x) b)^r for odd |a|,|b|.
    for (int r = 1; r <= 5; ++r) {
        std::vector<int> degrees(2 * r, 1);
        std::vector<int> source(2 * r);
        // slot 2i holds a-copy i (source i), slot 2i+1 holds b-copy i (source r+i)
        for (int i = 0; i < r; ++i) {
            source[2 * i] = i;
            source[2 * i + 1] = r + i;
        }
        int expected = (r * (r - 1) / 2) % 2 == 0 ? 1 : -1;
        CHECK(koszul_sign(source, degrees) == expected);
    }
}

TEST_CASE("hom_boundary vanishes on chain maps") {
    // identity map on chains of E(C_3)
    auto bd = [](const CycTuple& t) { return simplex_boundary(t); };
    auto id = [](const CycTuple& t) { return single(t); };
    auto h = hom_boundary(id, 0, bd, bd);
    for (int d = 0; d <= 3; ++d)
        for (const CycTuple& t : all_cyc_tuples(3, d)) CHECK(h(t).empty());
}
