#pragma once

#include <cstddef>
#include <optional>

#include "palcount/bigint.hpp"
#include "palcount/word.hpp"

// Kernel (singular) words and the occurrence-position formulas built on them.
//
// Fibonacci family (order m >= -1): K_{-1} = a, K_0 = b, and K_m is F_m with
// the last letter of F_{m+1} prepended and its own last letter dropped;
// |K_m| = f_m. Tribonacci family (order m >= 1): K_1 = a, K_2 = b, K_3 = c,
// K_m = last(T_{m-1}) . T_{m-3}[1, k_m - 1]; |K_m| = k_m.
//
// Every palindromic factor contains exactly one maximal kernel word, centered;
// this yields a two-integer code (order m, offset i) for every palindrome:
//   fib:  w = K_{m+3}[i+1, f_{m+3}-i], 1 <= i <= f_{m+1}, |w| = f_{m+3} - 2i
//   trib: w = K_{m+4}[i+1, k_{m+4}-i], 1 <= i <= t_{m-1}, |w| = k_{m+4} - 2i
namespace palcount::kernels {

struct KernelId {
    Family family;
    long order;  // fib: >= -1, trib: >= 1
    bool operator==(const KernelId&) const = default;
};

// (order, offset) code of a palindromic factor; decodes to a concrete word.
struct PalCode {
    Family family;
    long order;
    BigInt offset;  // the i above
    bool operator==(const PalCode&) const = default;
};

Word kernel_word(const KernelId& id);

// Where the maximal kernel sits inside a factor w: its order and its 1-based
// start position in w. For palindromic w the PalCode offset is filled in.
struct KernelLocator {
    long order;
    std::size_t position;
    std::optional<BigInt> offset;
};

// Maximal kernel word occurring in w. w must be a nonempty factor of the
// family's infinite word (checked against a materialized prefix).
KernelLocator ker(const Word& w, Family family);

bool is_factor(const Word& w, Family family);

Word pal_decode(const PalCode& code);
PalCode pal_encode(const Word& w, Family family);  // w must be a palindromic factor

// Length of the encoded palindrome: f_{m+3} - 2i resp. k_{m+4} - 2i.
BigInt pal_length(const PalCode& code);

// End position of the p-th occurrence of K_m in F (resp. T), p >= 1:
//   fib:  P(K_m, p) = p f_{m+1} + (floor_phi(p) + 1) f_m - 1
//   trib: P(K_m, p) = p t_{m-1} + |T[1,p-1]|_a (t_{m-2} + t_{m-3})
//                     + |T[1,p-1]|_b t_{m-2} + k_m - 1
BigInt pos_kernel_fib(long m, const BigInt& p);
BigInt pos_kernel_trib(long m, const BigInt& p);

// End position of the p-th occurrence of the encoded palindrome:
// P(K_m, p) + f_{m+1} - i (fib) resp. P(K_m, p) + t_{m-1} - i (trib).
BigInt pos_palindrome(const PalCode& code, const BigInt& p);
BigInt pos_palindrome(const Word& w, Family family, const BigInt& p);

// True iff the palindrome's first occurrence ends exactly at its own length,
// i.e. the length-|w| prefix of the infinite word is w itself.
bool first_occurrence_length_check(const PalCode& code);

}  // namespace palcount::kernels
