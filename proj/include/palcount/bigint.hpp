#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace palcount {

// Exact arbitrary-precision integer used on every result path. Counting
// formulas divide by 5, 22 or 44 at the end; those divisions must be exact,
// so the helpers below abort loudly on a nonzero remainder instead of
// rounding.
using BigInt = mpz_class;

// Raised when a closed form violates one of its exactness guarantees
// (non-divisible numerator, inconsistent recursion target, ...). This is a
// bug trap, not an input error.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline BigInt exact_div(const BigInt& numerator, long divisor, const char* what) {
    if (divisor == 0 || numerator % divisor != 0)
        throw invariant_error(std::string(what) + ": non-exact division by " + std::to_string(divisor));
    return numerator / divisor;
}

inline std::uint64_t to_u64(const BigInt& n, const char* what) {
    if (n < 0 || !n.fits_ulong_p())
        throw std::domain_error(std::string(what) + ": value does not fit in 64 bits");
    return static_cast<std::uint64_t>(n.get_ui());
}

// Parses a non-negative decimal integer. Accepts a plain digit string or the
// shorthand <digits>e<digits> (e.g. "1e18"); anything else is rejected.
BigInt parse_decimal(const std::string& text);

}  // namespace palcount
