#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "palcount/fib_count.hpp"
#include "palcount/oracle.hpp"
#include "palcount/sequences.hpp"
#include "palcount/trib_count.hpp"
#include "palcount/word.hpp"

using palcount::BigInt;
using palcount::Family;
using palcount::Word;
namespace orc = palcount::oracle;
namespace seq = palcount::sequences;

TEST_SUITE("oracle") {

TEST_CASE("tree counts on toy words") {
    orc::PalTree tree;
    tree.build("aba");
    CHECK(tree.suffix_count_at(1) == 1);  // a
    CHECK(tree.suffix_count_at(2) == 1);  // b
    CHECK(tree.suffix_count_at(3) == 2);  // a, aba
    CHECK(tree.distinct() == 3);

    orc::PalTree aaa;
    aaa.build("aaa");
    CHECK(aaa.suffix_count_at(3) == 3);  // a, aa, aaa
    CHECK(aaa.distinct() == 3);

    orc::PalTree mixed;
    mixed.build("abaab");
    CHECK(mixed.distinct() == 5);  // a, b, aa, aba, baab
    CHECK(mixed.suffix_count_at(5) == 2);  // b, baab
}

TEST_CASE("incremental pushes match a one-shot build") {
    const Word prefix = seq::trib_prefix(500);
    orc::PalTree incremental;
    orc::PalTree whole;
    whole.build(prefix.view());
    for (std::size_t i = 1; i <= prefix.size(); ++i) {
        incremental.push(prefix.at(i));
        CHECK(incremental.suffix_count_at(i) == whole.suffix_count_at(i));
    }
    CHECK(incremental.distinct() == whole.distinct());
}

TEST_CASE("tree against center expansion") {
    for (const Family family : {Family::fib, Family::trib}) {
        const Word prefix = family == Family::fib ? seq::fib_prefix(800) : seq::trib_prefix(800);
        orc::PalTree tree;
        tree.build(prefix.view());
        CHECK(tree.suffix_counts() == orc::pal_suffix_counts_naive(prefix));
    }

    std::mt19937 rng(1234);
    for (int round = 0; round < 20; ++round) {
        std::string text;
        for (int i = 0; i < 200; ++i)
            text += static_cast<char>('a' + rng() % 3);
        const Word w{std::move(text)};
        orc::PalTree tree;
        tree.build(w.view());
        CHECK(tree.suffix_counts() == orc::pal_suffix_counts_naive(w));
    }
}

TEST_CASE("count slice wrapper") {
    const Word prefix = seq::fib_prefix(300);
    const auto slice = orc::pal_suffix_counts(prefix);
    CHECK(slice.start == 1);
    CHECK(slice.size() == 300);
    orc::PalTree tree;
    tree.build(prefix.view());
    for (std::size_t n = 1; n <= 300; ++n)
        CHECK(slice.at_position(n) == tree.suffix_count_at(n));
}

TEST_CASE("palindromic suffix lengths are genuine and complete") {
    const Word prefix = seq::trib_prefix(220);
    orc::PalTree tree;
    tree.build(prefix.view());
    for (std::size_t pos = 1; pos <= 220; ++pos) {
        const auto lengths = tree.palindromic_suffix_lengths(pos);
        CHECK(lengths.size() == tree.suffix_count_at(pos));
        CHECK(std::is_sorted(lengths.rbegin(), lengths.rend()));
        for (const std::size_t len : lengths)
            CHECK(prefix.slice(pos - len + 1, pos).is_palindrome());
    }
}

TEST_CASE("occurrence totals equal the running pair counts") {
    const Word f = seq::fib_prefix(500);
    orc::PalTree ft;
    ft.build(f.view());
    CHECK(ft.total_occurrences() == palcount::fib_count::big_a(500));

    const Word t = seq::trib_prefix(500);
    orc::PalTree tt;
    tt.build(t.view());
    CHECK(tt.total_occurrences() == palcount::trib_count::big_b(500));

    // Node-level occurrence counts sum to the same total.
    BigInt by_nodes = 0;
    for (const auto& node : tt.occurrence_counts())
        by_nodes += node.occurrences;
    CHECK(by_nodes == tt.total_occurrences());
}

TEST_CASE("distinct palindromes count the prefix length (richness)") {
    for (long n = 1; n <= 150; ++n) {
        CHECK(orc::distinct_palindromes(seq::fib_prefix(n)) == n);
        CHECK(orc::distinct_palindromes(seq::trib_prefix(n)) == n);
    }
}

TEST_CASE("literal occurrence scans") {
    const Word prefix{"abaababa"};
    const auto found = orc::occurrences(Word{"aba"}, prefix);
    REQUIRE(found.last_positions.size() == 3);
    CHECK(found.last_positions[0] == 3);
    CHECK(found.last_positions[1] == 6);  // overlapping occurrences count
    CHECK(found.last_positions[2] == 8);
    CHECK(orc::occurrences(Word{"bb"}, prefix).last_positions.empty());
}

TEST_CASE("gap kinds") {
    // In abaababa, consecutive "a" occurrences end at 1,3,4,6,8:
    // plain gap "b", then an adjacent pair, then plain gaps again.
    const auto gaps = orc::gap_sequence(Word{"a"}, Word{"abaababa"});
    REQUIRE(gaps.size() == 4);
    CHECK(gaps[0].kind == orc::Gap::Kind::plain);
    CHECK(gaps[0].content == Word{"b"});
    CHECK(gaps[1].kind == orc::Gap::Kind::empty);
    CHECK(gaps[2].kind == orc::Gap::Kind::plain);
    CHECK(gaps[3].kind == orc::Gap::Kind::plain);

    // In aaaa, "aa" ends at 2,3,4 and consecutive occurrences overlap in "a".
    const auto overlaps = orc::gap_sequence(Word{"aa"}, Word{"aaaa"});
    REQUIRE(overlaps.size() == 2);
    CHECK(overlaps[0].kind == orc::Gap::Kind::inverse);
    CHECK(overlaps[0].content == Word{"a"});
    CHECK(overlaps[1] == overlaps[0]);

    CHECK_THROWS_AS(orc::gap_sequence(Word{"abaababa"}, Word{"abaababa"}), std::domain_error);
}

TEST_CASE("gap projections reproduce the words themselves") {
    for (const std::string factor : {"a", "b", "aa", "aba", "bab", "aabaa"})
        CHECK(orc::gap_projection_check(Word{std::string(factor)}, Family::fib, 60));
    for (const std::string factor : {"a", "b", "c", "aa", "bab", "cabac", "aabacabaa"})
        CHECK(orc::gap_projection_check(Word{std::string(factor)}, Family::trib, 40));
    CHECK_THROWS_AS(orc::gap_projection_check(Word{"bb"}, Family::fib, 10),
                    palcount::not_a_factor_error);
}

}  // TEST_SUITE
