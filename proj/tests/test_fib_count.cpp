#include "doctest.h"

#include <cstdint>
#include <vector>

#include "palcount/fib_count.hpp"
#include "palcount/oracle.hpp"
#include "palcount/sequences.hpp"

using palcount::BigInt;
namespace fc = palcount::fib_count;
namespace seq = palcount::sequences;

namespace {

const std::vector<int> first_values{1, 1, 2, 2, 2, 3, 2, 3, 3, 3, 4, 3, 3, 4, 3, 4,
                                    4, 4, 5, 3, 4, 4, 4, 5, 4, 4, 5, 4, 5, 5, 5, 6};

}  // namespace

TEST_SUITE("fib-count") {

TEST_CASE("the first 32 per-position counts") {
    for (std::size_t i = 0; i < first_values.size(); ++i)
        CHECK(fc::a(static_cast<long>(i) + 1) == first_values[i]);
}

TEST_CASE("descent against the palindromic tree") {
    palcount::oracle::PalTree tree;
    tree.build(seq::fib_prefix(3000).view());
    for (std::size_t n = 1; n <= 3000; ++n)
        CHECK(fc::a(static_cast<unsigned long>(n)) == tree.suffix_count_at(n));
}

TEST_CASE("block vectors tile the descent") {
    for (long m = 1; m <= 14; ++m) {
        const auto block = fc::a_block(m);
        CHECK(block.start == seq::fib(m) - 1);
        CHECK(block.end() == seq::fib(m + 1) - 2);
        for (BigInt n = block.start; n <= block.end(); ++n)
            CHECK(block.at_position(n) == fc::a(n));
    }
    // W_m = (W_{m-2} ++ W_{m-1}) + 1, checked on the materialized vectors.
    for (long m = 3; m <= 14; ++m) {
        const auto whole = fc::a_block(m);
        const auto left = fc::a_block(m - 2);
        const auto right = fc::a_block(m - 1);
        REQUIRE(whole.size() == left.size() + right.size());
        for (std::size_t i = 0; i < left.size(); ++i)
            CHECK(whole.values[i] == left.values[i] + 1);
        for (std::size_t i = 0; i < right.size(); ++i)
            CHECK(whole.values[left.size() + i] == right.values[i] + 1);
    }
}

TEST_CASE("window sums match their closed form") {
    CHECK(fc::c(1) == 1);
    CHECK(fc::c(2) == 3);
    CHECK(fc::c(3) == 7);
    CHECK(fc::c(4) == 15);
    for (long m = 1; m <= 14; ++m) {
        const auto block = fc::a_block(m);
        BigInt sum = 0;
        for (const BigInt& v : block.values)
            sum += v;
        CHECK(fc::c(m) == sum);
    }
    for (long m = 3; m <= 40; ++m)
        CHECK(fc::c(m) == fc::c(m - 1) + fc::c(m - 2) + seq::fib(m - 1));
}

TEST_CASE("landmark values") {
    for (long m = 2; m <= 25; ++m) {
        const auto lm = fc::a_closed_at_landmarks(m);
        CHECK(lm.at_fib_minus2 == fc::a(seq::fib(m) - 2));
        CHECK(lm.at_fib_minus1 == fc::a(seq::fib(m) - 1));
        CHECK(lm.at_fib == fc::a(seq::fib(m)));
        CHECK(lm.at_fib_minus2 == m - 1);
        CHECK(lm.at_fib_minus1 == (m + 1) / 2);
        CHECK(lm.at_fib == (m + 2) / 2);
    }
}

TEST_CASE("running totals against a brute prefix sum") {
    BigInt running = 0;
    for (long n = 1; n <= 2500; ++n) {
        running += fc::a(n);
        CHECK(fc::big_a(n) == running);
    }
}

TEST_CASE("partial sums cover exactly the current window") {
    for (long n = 1; n <= 1200; ++n) {
        const long m = seq::fib_window(n);
        BigInt window_sum = 0;
        for (BigInt i = seq::fib(m) - 1; i <= n; ++i)
            window_sum += fc::a(i);
        CHECK(fc::partial_sum_a(n) == window_sum);
    }
}

TEST_CASE("golden totals") {
    CHECK(fc::big_a(13) == 32);
    CHECK(fc::big_a(19) == 56);
    CHECK(fc::big_a(29) == 98);
    CHECK(fc::big_a(29) - fc::big_a(19) == 42);
    CHECK(fc::big_a(1) == 1);
}

TEST_CASE("closed forms at fibonacci landmarks") {
    for (long m = 0; m <= 32; ++m)
        CHECK(fc::big_a_at_fib(m) == fc::big_a(seq::fib(m)));
    for (long m = 2; m <= 32; ++m)
        CHECK(fc::big_a_at_fib_minus2(m) == fc::big_a(seq::fib(m) - 2));
}

TEST_CASE("table and block total agree with the descent") {
    const auto table = fc::a_table(20000);
    BigInt running = 0;
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        CHECK(table[n] == fc::a(static_cast<unsigned long>(n)));
        running += table[n];
    }
    CHECK(fc::big_a_via_blocks(20000) == running);
    CHECK(fc::big_a_via_blocks(20000) == fc::big_a(20000));
    CHECK(fc::big_a_via_blocks(1) == 1);
}

TEST_CASE("large arguments stay exact") {
    const BigInt n{"1000000000000000000"};
    const BigInt at_n = fc::big_a(n);
    CHECK(at_n > 0);
    CHECK(at_n - fc::big_a(n - 1) == fc::a(n));
    // Near-landmark stress: the descent crosses many windows.
    const long m = seq::fib_window(n);
    CHECK(fc::big_a(seq::fib(m)) == fc::big_a_at_fib(m));
}

}  // TEST_SUITE
