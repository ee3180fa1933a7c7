#pragma once

#include <vector>

#include "palcount/bigint.hpp"
#include "palcount/word.hpp"

// Number sequences and numeration systems underlying both counting families.
//
// Conventions (indices may be negative):
//   fib:   f_{-2} = 0, f_{-1} = 1, f_m = f_{m-1} + f_{m-2}
//          so f_0 = 1, f_1 = 2, f_2 = 3, f_3 = 5, ...  (|F_m| = f_m)
//   trib:  t_{-2} = 0, t_{-1} = t_0 = 1, t_m = t_{m-1} + t_{m-2} + t_{m-3}
//   kernel_number: k_0 = 0, k_1 = k_2 = 1, k_m = k_{m-1} + k_{m-2} + k_{m-3} - 1
//
// F and T are the fixed points of a -> ab, b -> a and a -> ab, b -> ac, c -> a.
// All functions are pure; memo tables are thread_local, so concurrent use from
// parallel sweeps needs no locking.
namespace palcount::sequences {

BigInt fib(long m);            // m >= -2
BigInt trib(long m);           // m >= -2
BigInt kernel_number(long m);  // m >= 0

// Prefix of the infinite word, materialized. n must fit in memory.
Word fib_prefix(const BigInt& n);
Word trib_prefix(const BigInt& n);

// floor(phi * p) with phi = (sqrt(5)-1)/2, computed without floating point:
// equals the number of a's in F[1, p-1].
BigInt floor_phi(const BigInt& p);  // p >= 0

// Letter counts of F[1, n] / T[1, n] in O(polylog n) via greedy block
// decomposition of the prefix.
AbelianVector abelian_fib(const BigInt& n);   // n >= 0
AbelianVector abelian_trib(const BigInt& n);  // n >= 0

// Greedy Zeckendorf representation: strictly decreasing indices with gaps
// >= 2 and sum of f over them equal to n. The final unit, when present, is
// emitted as index -1 (f_{-1} = 1); index 0 never appears. n >= 1.
std::vector<long> zeckendorf(const BigInt& n);

// Greedy prefix decompositions: indices m_1 > m_2 > ... >= 0 such that
// F[1,n] = F_{m_1} F_{m_2} ... F_{m_k} (and likewise T[1,n] with T-blocks).
// These drive the abelianizations; tests validate them against materialized
// prefixes.
std::vector<long> fib_prefix_blocks(const BigInt& n);   // n >= 0
std::vector<long> trib_prefix_blocks(const BigInt& n);  // n >= 0

// Window indices of the two block recursions:
//   fib_window(n):  the m with f_m <= n+1 < f_{m+1}        (n >= 1, m >= 1)
//   trib_window(n): the m with k_{m+3} <= n+1 < k_{m+4}    (n >= 1, m >= 1)
long fib_window(const BigInt& n);
long trib_window(const BigInt& n);

}  // namespace palcount::sequences
