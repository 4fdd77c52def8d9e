#include <doctest.h>

#include <random>

#include "gccl/bitset.hpp"

using gccl::Bitset;

TEST_CASE("bitset basics across word boundaries") {
    Bitset b(130);
    CHECK(b.size() == 130);
    CHECK(b.none());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(b.test(64));
    CHECK_FALSE(b.test(65));
    b.reset(63);
    CHECK(b.count() == 3);

    Bitset full(130, true);
    CHECK(full.count() == 130);
    CHECK(full.all());
    CHECK(b.is_subset_of(full));
    CHECK_FALSE(full.is_subset_of(b));
}

TEST_CASE("bitset set algebra") {
    Bitset a = Bitset::from_string("10110");
    Bitset b = Bitset::from_string("11010");
    CHECK((a & b) == Bitset::from_string("10010"));
    CHECK((a | b) == Bitset::from_string("11110"));
    CHECK(Bitset::from_string("10010").is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK_FALSE(Bitset::from_string("00001").intersects(a));
}

TEST_CASE("bitset string round trip") {
    const std::string s = "0110010111010001";
    CHECK(Bitset::from_string(s).to_string() == s);
    CHECK(Bitset::from_string("").to_string() == "");
}

TEST_CASE("lexicographic order matches string order") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 100);
    std::bernoulli_distribution bit(0.5);
    for (int it = 0; it < 300; ++it) {
        const int n = len(rng);
        std::string sa(n, '0'), sb(n, '0');
        for (int i = 0; i < n; ++i) {
            if (bit(rng)) sa[i] = '1';
            if (bit(rng)) sb[i] = '1';
        }
        const Bitset a = Bitset::from_string(sa);
        const Bitset b = Bitset::from_string(sb);
        CHECK(a.lex_less(b) == (sa < sb));
    }
}

TEST_CASE("prefix equality") {
    const Bitset a = Bitset::from_string("1010011");
    const Bitset b = Bitset::from_string("1010110");
    CHECK(a.prefix_equal(b, 0));
    CHECK(a.prefix_equal(b, 4));
    CHECK_FALSE(a.prefix_equal(b, 5));

    // across a word boundary
    Bitset c(80), d(80);
    c.set(70);
    d.set(70);
    d.set(79);
    CHECK(c.prefix_equal(d, 79));
    CHECK_FALSE(c.prefix_equal(d, 80));
}

TEST_CASE("resize preserves low bits and zero-fills") {
    Bitset b = Bitset::from_string("101");
    b.resize(68);
    CHECK(b.size() == 68);
    CHECK(b.count() == 2);
    CHECK(b.test(0));
    CHECK(b.test(2));
    b.set(67);
    b.resize(3);
    CHECK(b == Bitset::from_string("101"));

    // shrinking then growing must not resurrect bits
    Bitset c(64, true);
    c.resize(10);
    c.resize(64);
    CHECK(c.count() == 10);
}

TEST_CASE("set_all respects the tail") {
    Bitset b(67);
    b.set_all();
    CHECK(b.count() == 67);
    CHECK(b.all());
}

TEST_CASE("for_each visits ascending positions") {
    Bitset b(200);
    b.set(3);
    b.set(64);
    b.set(199);
    CHECK(b.positions() == std::vector<std::size_t>{3, 64, 199});
}

TEST_CASE("hash equality contract") {
    const Bitset a = Bitset::from_string("110100101");
    const Bitset b = Bitset::from_string("110100101");
    CHECK(a.hash() == b.hash());
    CHECK(a == b);
}
