#pragma once

#include <cstdint>
#include <vector>

#include "palcount/bigint.hpp"
#include "palcount/counts.hpp"

// Counting (palindrome, occurrence) pairs in prefixes of the Fibonacci word.
// a(n) is the number of palindromic suffixes of F[1, n]; A(n) = sum of a(i)
// for i <= n is the number of repeated-palindrome pairs in F[1, n].
//
// The per-position values satisfy a block recursion: with W_m the window of
// positions [f_m - 1, f_{m+1} - 2], the value vector over W_m (m >= 3) is the
// concatenation of the vectors over W_{m-2} and W_{m-1}, plus one everywhere;
// bases W_1 = [1], W_2 = [1, 2].
namespace palcount::fib_count {

// Materialized value vector over W_m (m >= 1). Lengths grow like f_{m-1};
// orders whose window ends beyond the materialization cap are rejected.
CountSlice a_block(long m);

// a(n) by logarithmic descent through the block recursion. n >= 1.
BigInt a(const BigInt& n);

// C(m) = sum of a over W_m = ((m+1) f_{m+1} + (m-2) f_{m-1}) / 5, m >= 1.
// The division is asserted exact.
BigInt c(long m);

// Closed forms at the window landmarks, m >= 2:
// a(f_m - 2) = m - 1, a(f_m - 1) = floor((m+1)/2), a(f_m) = floor((m+2)/2).
struct Landmarks {
    BigInt at_fib_minus2;
    BigInt at_fib_minus1;
    BigInt at_fib;
};
Landmarks a_closed_at_landmarks(long m);

// A at Fibonacci landmarks, both via ((m-3) f_{m+2} + (m-1) f_m) / 5 + ...:
BigInt big_a_at_fib(long m);         // A(f_m),     m >= 0
BigInt big_a_at_fib_minus2(long m);  // A(f_m - 2), m >= 2

// Sum of a(i) over the current window, i from f_m - 1 to n where m is
// fib_window(n). Two-branch recursion on n - f_{m-1}; windows m <= 2 are
// summed directly from the base vectors. n >= 1.
BigInt partial_sum_a(const BigInt& n);

// A(n) = A(f_m - 2) + partial_sum_a(n). Works at any magnitude of n.
BigInt big_a(const BigInt& n);

// Materialized per-position values 1..n_max (index 0 unused). Capped; the
// fast paths above have no such limit.
std::vector<std::uint8_t> a_table(std::uint64_t n_max);

// A(n) by materializing the table and summing — the quadratic-space sibling
// of big_a, kept as an independent path for cross-checking and small n.
BigInt big_a_via_blocks(std::uint64_t n);

// Largest n the table/block path will materialize.
inline constexpr std::uint64_t table_cap = 10'000'000;

}  // namespace palcount::fib_count
