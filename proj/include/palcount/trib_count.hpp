#pragma once

#include <cstdint>
#include <vector>

#include "palcount/bigint.hpp"
#include "palcount/counts.hpp"

// Counting (palindrome, occurrence) pairs in prefixes of the Tribonacci word.
// b(n) is the number of palindromic suffixes of T[1, n]; B(n) = sum of b(i).
//
// Block recursion: with V_m the window [k_{m+3} - 1, k_{m+4} - 2] (length
// t_{m-1}), the vector over V_m (m >= 4) is the concatenation of the vectors
// over V_{m-3}, V_{m-2}, V_{m-1}, plus one everywhere; bases V_1 = [1],
// V_2 = [1, 2], V_3 = [1, 2, 2, 3].
namespace palcount::trib_count {

CountSlice b_block(long m);  // m >= 1, capped like fib_count::a_block

BigInt b(const BigInt& n);  // n >= 1, logarithmic descent

// D(m) = sum of b over V_m, via the closed form
// (m (3 t_m + 7 t_{m-1} + 2 t_{m-2}) + (3 t_m - 3 t_{m-1} + 4 t_{m-2})) / 22,
// m >= 1; division asserted exact. Equals the convolution
// sum_{i=-1}^{m-2} t_i t_{m-i-2} (tested, not assumed).
BigInt d(long m);

// B(k_{m+4} - 2), m >= 1: closed form over a common denominator of 44,
// divisibility asserted.
BigInt big_b_at_kernel_landmark(long m);

// The landmark the descent actually anchors on: B(k_{m+3} - 2), i.e. shifted
// one window down; m = 1 gives B(0) = 0. m >= 1.
BigInt big_b_window_landmark(long m);

// Sum of b(i), i from k_{m+3} - 1 to n, where m is trib_window(n).
// Three-branch recursion on n - t_{m-1}; the branch is selected by comparing
// n + 1 against alpha_m = k_{m+3} + t_{m-4} and beta_m = alpha_m + t_{m-3}.
// n <= 14 is summed from the literal base vectors. n >= 1.
BigInt partial_sum_b(const BigInt& n);

// B(n) = B(k_{m+3} - 2) + partial_sum_b(n). Works at any magnitude of n.
BigInt big_b(const BigInt& n);

// B(t_m), m >= 0: closed form over a denominator of 22, asserted exact.
BigInt big_b_at_trib(long m);

std::vector<std::uint8_t> b_table(std::uint64_t n_max);
BigInt big_b_via_blocks(std::uint64_t n);

inline constexpr std::uint64_t table_cap = 10'000'000;

}  // namespace palcount::trib_count
