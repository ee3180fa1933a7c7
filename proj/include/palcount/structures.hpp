#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palcount/bigint.hpp"
#include "palcount/kernels.hpp"
#include "palcount/word.hpp"

// The interval machinery behind the block recursions: <K_m, p> is the set of
// end positions of all palindromes whose maximal kernel is the p-th
// occurrence of K_m. These intervals decompose recursively into intervals of
// lower kernel order, and at p = 1 they tile the positive integers.
namespace palcount::structures {

struct OccInterval {
    kernels::KernelId kernel;
    BigInt p;
    BigInt lo;  // both ends inclusive
    BigInt hi;

    BigInt size() const { return hi - lo + 1; }
    bool operator==(const OccInterval&) const = default;
};

// <K_m, p>: lo = P(K_m, p), size f_{m+1} (fib) resp. t_{m-1} (trib). p >= 1.
OccInterval interval(const kernels::KernelId& id, const BigInt& p);

// Ordered children of an interval, lowest first:
//   fib m >= 1:  <K_{m-2}, P(b,p)+1>, <K_{m-1}, P(a,p)+1>      (exact tiling)
//   fib m == 0:  <K_{-1}, P(a,p)+1>                            (parent's max)
//   trib m >= 4: <K_{m-3}, P(c,p)+1>, <K_{m-2}, P(b,p)+1>,
//                <K_{m-1}, P(a,p)+1>                           (exact tiling)
//   trib m == 3: <K_1, P(b,p)+1>, <K_2, P(a,p)+1>   (parent minus its min)
//   trib m == 2: <K_1, P(a,p)+1>                    (parent's max)
// Leaves (fib m == -1, trib m == 1) decompose to nothing.
std::vector<OccInterval> decompose(const OccInterval& iv);

// Whether the length-n prefix of the family's word is a palindrome:
// n = f_m - 2 for some m >= 2 (fib), n = k_{m+4} - 2 for some m >= 1 (trib).
bool is_palprefix(Family family, const BigInt& n);

// Cylinder classification of a palindromic factor: odd length by middle
// letter, even length always centered on aa.
enum class Cylinder { a, b, c, aa };
std::string to_string(Cylinder c);
Cylinder cylinder_of(const Word& w, Family family);

// Number of distinct palindromic factors of exactly length n, by enumerating
// kernel families whose offset range covers n. For fib this is 2 for odd n
// and 1 for even n; the enumeration is kept so the identity is testable.
long pal_count_by_length(Family family, const BigInt& n);

// <K_m, 1>. Consecutive orders tile the positive integers:
// fib spans [f_{m+2} - 1, f_{m+3} - 2], trib spans [k_{m+3} - 1, k_{m+4} - 2].
OccInterval chain(Family family, long m);

// Decomposition tree rooted at <K_m, p>, expanded depth levels (-1 = to the
// leaves). Edge-list form has one CSV row per edge; JSON form nests children.
// Node budget guards against runaway expansion.
std::string export_edges(Family family, long m, const BigInt& p, long depth);
std::string export_json(Family family, long m, const BigInt& p, long depth);

inline constexpr std::size_t export_node_budget = 200'000;

}  // namespace palcount::structures
