#include "doctest.h"

#include <vector>

#include "palcount/sequences.hpp"
#include "palcount/word.hpp"

using palcount::BigInt;
using palcount::Word;
namespace seq = palcount::sequences;

TEST_SUITE("sequences") {

TEST_CASE("fibonacci numbers, shifted indexing") {
    const std::vector<long> expected{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(seq::fib(static_cast<long>(i) - 2) == expected[i]);
    for (long m = 0; m <= 60; ++m)
        CHECK(seq::fib(m) == seq::fib(m - 1) + seq::fib(m - 2));
}

TEST_CASE("tribonacci numbers") {
    const std::vector<long> expected{0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(seq::trib(static_cast<long>(i) - 2) == expected[i]);
    for (long m = 1; m <= 60; ++m)
        CHECK(seq::trib(m) == seq::trib(m - 1) + seq::trib(m - 2) + seq::trib(m - 3));
}

TEST_CASE("kernel numbers") {
    const std::vector<long> expected{0, 1, 1, 1, 2, 3, 5, 9, 16, 29, 53, 97, 178, 327};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(seq::kernel_number(static_cast<long>(i)) == expected[i]);
    for (long m = 3; m <= 60; ++m)
        CHECK(seq::kernel_number(m) ==
              seq::kernel_number(m - 1) + seq::kernel_number(m - 2) + seq::kernel_number(m - 3) - 1);
    // k_m = k_{m-3} + t_{m-4} ties the kernel numbers to the tribonacci ones.
    for (long m = 3; m <= 60; ++m)
        CHECK(seq::kernel_number(m) == seq::kernel_number(m - 3) + seq::trib(m - 4));
}

TEST_CASE("prefix words") {
    CHECK(seq::fib_prefix(0).str() == "");
    CHECK(seq::fib_prefix(1).str() == "a");
    CHECK(seq::fib_prefix(2).str() == "ab");
    CHECK(seq::fib_prefix(13).str() == "abaababaabaab");
    CHECK(seq::trib_prefix(4).str() == "abac");
    CHECK(seq::trib_prefix(13).str() == "abacabaabacab");

    // Every prefix extends the previous ones.
    const Word big_f = seq::fib_prefix(4000);
    const Word big_t = seq::trib_prefix(4000);
    for (const long n : {1, 2, 3, 5, 21, 233, 987, 3999})
        CHECK(seq::fib_prefix(n).view() == big_f.view().substr(0, static_cast<std::size_t>(n)));
    for (const long n : {1, 2, 4, 7, 24, 149, 927, 3999})
        CHECK(seq::trib_prefix(n).view() == big_t.view().substr(0, static_cast<std::size_t>(n)));
}

TEST_CASE("abelian vectors against letter counts") {
    const Word f = seq::fib_prefix(600);
    const Word t = seq::trib_prefix(600);
    for (long n = 0; n <= 600; n += 7) {
        const Word fp = f.slice(1, static_cast<std::size_t>(n));
        const auto fa = seq::abelian_fib(n);
        CHECK(fa.a == fp.count('a'));
        CHECK(fa.b == fp.count('b'));
        CHECK(fa.c == 0);
        CHECK(fa.total() == n);

        const Word tp = t.slice(1, static_cast<std::size_t>(n));
        const auto ta = seq::abelian_trib(n);
        CHECK(ta.a == tp.count('a'));
        CHECK(ta.b == tp.count('b'));
        CHECK(ta.c == tp.count('c'));
        CHECK(ta.total() == n);
    }
}

TEST_CASE("abelian vectors at whole-word lengths") {
    for (long m = 2; m <= 40; ++m) {
        const auto v = seq::abelian_fib(seq::fib(m));
        CHECK(v.a == seq::fib(m - 1));
        CHECK(v.b == seq::fib(m - 2));
    }
    for (long m = 2; m <= 40; ++m) {
        const auto v = seq::abelian_trib(seq::trib(m));
        CHECK(v.a == seq::trib(m - 1));
        CHECK(v.b == seq::trib(m - 2));
        CHECK(v.c == seq::trib(m - 3));
    }
}

TEST_CASE("floor_phi counts a's of the shorter prefix") {
    // floor_phi(p) = |F[1, p-1]|_a, which equals floor(p / phi); the square
    // root form is an independent route to the same integer.
    const Word f = seq::fib_prefix(1200);
    for (long p = 1; p <= 1200; ++p) {
        const BigInt expected = f.slice(1, static_cast<std::size_t>(p - 1)).count('a');
        CHECK(seq::floor_phi(p) == expected);
        BigInt root = 5 * BigInt(p) * p;
        mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
        CHECK(seq::floor_phi(p) == (root - p) / 2);
    }
    CHECK(seq::floor_phi(0) == 0);
}

TEST_CASE("zeckendorf decomposition") {
    for (long n = 1; n <= 3000; ++n) {
        const std::vector<long> idx = seq::zeckendorf(n);
        REQUIRE(!idx.empty());
        BigInt sum = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            CHECK(idx[i] != 0);  // f_0 = f_{-1}; the convention picks index -1
            CHECK(idx[i] >= -1);
            if (i + 1 < idx.size())
                CHECK(idx[i] >= idx[i + 1] + 2);  // no consecutive indices
            sum += seq::fib(idx[i]);
        }
        CHECK(sum == n);
    }
}

TEST_CASE("greedy prefix block decompositions") {
    const Word f = seq::fib_prefix(2500);
    const Word t = seq::trib_prefix(2500);
    for (long n = 1; n <= 2500; n += 3) {
        std::string rebuilt;
        BigInt total = 0;
        long prev = -1;
        for (const long m : seq::fib_prefix_blocks(n)) {
            CHECK(m >= 0);
            if (prev >= 0)
                CHECK(m < prev);
            prev = m;
            rebuilt += seq::fib_prefix(seq::fib(m)).str();
            total += seq::fib(m);
        }
        CHECK(total == n);
        CHECK(rebuilt == f.slice(1, static_cast<std::size_t>(n)).str());

        rebuilt.clear();
        total = 0;
        prev = -1;
        for (const long m : seq::trib_prefix_blocks(n)) {
            CHECK(m >= 0);
            if (prev >= 0)
                CHECK(m < prev);
            prev = m;
            rebuilt += seq::trib_prefix(seq::trib(m)).str();
            total += seq::trib(m);
        }
        CHECK(total == n);
        CHECK(rebuilt == t.slice(1, static_cast<std::size_t>(n)).str());
    }
}

TEST_CASE("window locators") {
    for (long n = 1; n <= 5000; ++n) {
        const long m = seq::fib_window(n);
        CHECK(seq::fib(m) <= n + 1);
        CHECK(n + 1 < seq::fib(m + 1));
        const long mt = seq::trib_window(n);
        CHECK(seq::kernel_number(mt + 3) <= n + 1);
        CHECK(n + 1 < seq::kernel_number(mt + 4));
    }
    CHECK(seq::fib_window(1) == 1);
    CHECK(seq::trib_window(1) == 1);
    // Far beyond 64 bits the locator still terminates and brackets n + 1.
    const BigInt huge = BigInt("1" + std::string(30, '0'));
    const long m = seq::fib_window(huge);
    CHECK(seq::fib(m) <= huge + 1);
    CHECK(huge + 1 < seq::fib(m + 1));
}

}  // TEST_SUITE
