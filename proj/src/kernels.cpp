#include "palcount/kernels.hpp"

#include <string>

#include "palcount/sequences.hpp"

namespace palcount::kernels {

namespace {

namespace seq = palcount::sequences;

void require(bool cond, const std::string& message) {
    if (!cond)
        throw std::domain_error(message);
}

// Last letter of F_m (m >= -1): a iff m is even.
char delta_fib(long m) {
    return m % 2 == 0 ? 'a' : 'b';
}

// Last letter of T_m (m >= -1): a, b, c as m mod 3 = 0, 1, 2.
char delta_trib(long m) {
    switch (((m % 3) + 3) % 3) {
        case 0: return 'a';
        case 1: return 'b';
        default: return 'c';
    }
}

constexpr unsigned long materialize_cap = 100'000'000;

std::size_t small_length(const BigInt& len, const char* what) {
    if (!len.fits_ulong_p() || len.get_ui() > materialize_cap)
        throw std::domain_error(std::string(what) + ": too large to materialize");
    return len.get_ui();
}

long min_order(Family family) {
    return family == Family::fib ? -1 : 1;
}

BigInt kernel_length(const KernelId& id) {
    if (id.family == Family::fib) {
        require(id.order >= -1, "fib kernel order must be >= -1");
        return seq::fib(id.order);
    }
    require(id.order >= 1, "trib kernel order must be >= 1");
    return seq::kernel_number(id.order);
}

}  // namespace

Word kernel_word(const KernelId& id) {
    const std::size_t len = small_length(kernel_length(id), "kernel word");
    if (id.family == Family::fib) {
        // K_m = last(F_{m+1}) . F_m minus its own last letter. F_{-1} = b is
        // the only F-block that is not a prefix of the infinite word.
        std::string body = id.order >= 0 ? seq::fib_prefix(seq::fib(id.order)).str() : std::string("b");
        body.pop_back();
        return Word(delta_fib(id.order + 1) + body);
    }
    switch (id.order) {
        case 1: return Word("a");
        case 2: return Word("b");
        case 3: return Word("c");
        default: break;
    }
    // K_m = last(T_{m-1}) . T_{m-3}[1, k_m - 1]; T_{m-3} is a prefix of T.
    std::string body = seq::trib_prefix(BigInt(static_cast<long>(len) - 1)).str();
    return Word(delta_trib(id.order - 1) + body);
}

bool is_factor(const Word& w, Family family) {
    if (w.empty())
        return true;
    // Both words are linearly recurrent with small constants, so any genuine
    // factor of length L recurs well before position 32 L.
    const BigInt span = BigInt(32) * static_cast<unsigned long>(w.size()) + 64;
    const Word prefix = family == Family::fib ? seq::fib_prefix(span) : seq::trib_prefix(span);
    return prefix.view().find(w.view()) != std::string_view::npos;
}

namespace {

// Failure triage shared by the checks below: a structural violation on a
// genuine factor is a bug in the theory's invariants; on anything else it
// just means the input never occurs in the infinite word.
[[noreturn]] void reject(const Word& w, Family family, const char* violation) {
    if (is_factor(w, family))
        throw invariant_error(std::string(violation) + ": " + w.str());
    throw not_a_factor_error("not a factor of the " + to_string(family) + " word: " + w.str());
}

}  // namespace

KernelLocator ker(const Word& w, Family family) {
    require(!w.empty(), "ker needs a nonempty word");

    long top = min_order(family);
    while (kernel_length({family, top + 1}) <= static_cast<unsigned long>(w.size()))
        ++top;

    // Kernel lengths are nondecreasing in the order, so the first hit while
    // scanning downward is the maximal kernel.
    for (long m = top; m >= min_order(family); --m) {
        const Word k = kernel_word({family, m});
        const auto at = w.view().find(k.view());
        if (at == std::string_view::npos)
            continue;
        if (w.view().find(k.view(), at + 1) != std::string_view::npos)
            reject(w, family, "maximal kernel occurs twice");
        KernelLocator loc{m, at + 1, std::nullopt};
        if (!w.is_palindrome()) {
            if (!is_factor(w, family))
                throw not_a_factor_error("not a factor of the " + to_string(family) +
                                         " word: " + w.str());
            return loc;
        }
        // Palindromes skip the prefix scan: a centered kernel with a valid
        // offset decodes back to w exactly when w belongs to the family, and
        // family palindromes are factors by construction.
        const BigInt outer = family == Family::fib ? seq::fib(m + 3) : seq::kernel_number(m + 4);
        const BigInt twice_i = outer - static_cast<unsigned long>(w.size());
        if (twice_i % 2 != 0)
            reject(w, family, "palindrome length off the kernel family grid");
        const BigInt i = twice_i / 2;
        const BigInt i_max = family == Family::fib ? seq::fib(m + 1) : seq::trib(m - 1);
        if (i < 1 || i > i_max)
            reject(w, family, "palindrome offset out of range");
        if (loc.position != (w.size() - k.size()) / 2 + 1)
            reject(w, family, "kernel of a palindrome must sit centrally");
        if (pal_decode({family, m, i}) != w)
            reject(w, family, "palindrome does not decode from its kernel");
        loc.offset = i;
        return loc;
    }
    reject(w, family, "word contains no kernel");
}

Word pal_decode(const PalCode& code) {
    if (code.family == Family::fib) {
        require(code.order >= -1, "fib palindrome order must be >= -1");
        require(code.offset >= 1 && code.offset <= seq::fib(code.order + 1),
                "fib palindrome offset out of [1, f_{m+1}]");
        const Word outer = kernel_word({Family::fib, code.order + 3});
        const std::size_t i = small_length(code.offset, "palindrome offset");
        return outer.slice(i + 1, outer.size() - i);
    }
    require(code.order >= 1, "trib palindrome order must be >= 1");
    require(code.offset >= 1 && code.offset <= seq::trib(code.order - 1),
            "trib palindrome offset out of [1, t_{m-1}]");
    const Word outer = kernel_word({Family::trib, code.order + 4});
    const std::size_t i = small_length(code.offset, "palindrome offset");
    return outer.slice(i + 1, outer.size() - i);
}

PalCode pal_encode(const Word& w, Family family) {
    require(!w.empty(), "cannot encode the empty word");
    require(w.is_palindrome(), "not a palindrome: " + w.str());
    const KernelLocator loc = ker(w, family);
    if (!loc.offset)
        throw invariant_error("palindrome without an offset: " + w.str());
    return PalCode{family, loc.order, *loc.offset};
}

BigInt pal_length(const PalCode& code) {
    if (code.family == Family::fib) {
        require(code.order >= -1 && code.offset >= 1 && code.offset <= seq::fib(code.order + 1),
                "bad fib palindrome code");
        return seq::fib(code.order + 3) - 2 * code.offset;
    }
    require(code.order >= 1 && code.offset >= 1 && code.offset <= seq::trib(code.order - 1),
            "bad trib palindrome code");
    return seq::kernel_number(code.order + 4) - 2 * code.offset;
}

BigInt pos_kernel_fib(long m, const BigInt& p) {
    require(m >= -1, "fib kernel order must be >= -1");
    require(p >= 1, "occurrence index must be >= 1");
    return p * seq::fib(m + 1) + (seq::floor_phi(p) + 1) * seq::fib(m) - 1;
}

BigInt pos_kernel_trib(long m, const BigInt& p) {
    require(m >= 1, "trib kernel order must be >= 1");
    require(p >= 1, "occurrence index must be >= 1");
    const AbelianVector head = seq::abelian_trib(p - 1);
    return p * seq::trib(m - 1) + head.a * (seq::trib(m - 2) + seq::trib(m - 3)) +
           head.b * seq::trib(m - 2) + seq::kernel_number(m) - 1;
}

BigInt pos_palindrome(const PalCode& code, const BigInt& p) {
    pal_length(code);  // validates the code
    if (code.family == Family::fib)
        return pos_kernel_fib(code.order, p) + seq::fib(code.order + 1) - code.offset;
    return pos_kernel_trib(code.order, p) + seq::trib(code.order - 1) - code.offset;
}

BigInt pos_palindrome(const Word& w, Family family, const BigInt& p) {
    return pos_palindrome(pal_encode(w, family), p);
}

bool first_occurrence_length_check(const PalCode& code) {
    return pal_length(code) == pos_palindrome(code, 1);
}

}  // namespace palcount::kernels
