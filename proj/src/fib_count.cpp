#include "palcount/fib_count.hpp"

#include <array>
#include <stdexcept>

#include "palcount/sequences.hpp"

namespace palcount::fib_count {

namespace {

namespace seq = palcount::sequences;

void require(bool cond, const char* message) {
    if (!cond)
        throw std::domain_error(message);
}

// a over the three positions before the recursion kicks in: a(1), a(2), a(3).
constexpr std::array<int, 4> base_a{0, 1, 1, 2};

}  // namespace

CountSlice a_block(long m) {
    require(m >= 1, "window index must be >= 1");
    require(seq::fib(m - 1) <= table_cap, "window too large to materialize");
    std::vector<long> prev{1};     // values over W_1
    std::vector<long> cur{1, 2};   // values over W_2
    if (m == 1)
        cur = std::move(prev);
    for (long i = 3; i <= m; ++i) {
        std::vector<long> next;
        next.reserve(prev.size() + cur.size());
        for (long v : prev)
            next.push_back(v + 1);
        for (long v : cur)
            next.push_back(v + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    CountSlice slice;
    slice.start = seq::fib(m) - 1;
    slice.values.assign(cur.begin(), cur.end());
    return slice;
}

BigInt a(const BigInt& n) {
    require(n >= 1, "a(n) needs n >= 1");
    BigInt rest = n;
    long m = seq::fib_window(n);
    long lift = 0;
    while (m >= 3) {
        rest -= seq::fib(m - 1);
        ++lift;
        // The shifted position lands in W_{m-2} or W_{m-1}.
        m = rest + 1 < seq::fib(m - 1) ? m - 2 : m - 1;
    }
    return base_a[static_cast<std::size_t>(rest.get_ui())] + BigInt(lift);
}

BigInt c(long m) {
    require(m >= 1, "C(m) needs m >= 1");
    const BigInt numerator = (m + 1) * seq::fib(m + 1) + (m - 2) * seq::fib(m - 1);
    return exact_div(numerator, 5, "C(m)");
}

Landmarks a_closed_at_landmarks(long m) {
    require(m >= 2, "landmark closed forms need m >= 2");
    return Landmarks{BigInt(m - 1), BigInt((m + 1) / 2), BigInt((m + 2) / 2)};
}

namespace {

// Shared core of the two A landmarks: ((m-3) f_{m+2} + (m-1) f_m) / 5.
BigInt big_a_core(long m) {
    const BigInt numerator = (m - 3) * seq::fib(m + 2) + (m - 1) * seq::fib(m);
    return exact_div(numerator, 5, "A landmark");
}

}  // namespace

BigInt big_a_at_fib(long m) {
    require(m >= 0, "A(f_m) needs m >= 0");
    return big_a_core(m) + m + 3;
}

BigInt big_a_at_fib_minus2(long m) {
    require(m >= 2, "A(f_m - 2) needs m >= 2");
    return big_a_core(m) + 2;
}

BigInt partial_sum_a(const BigInt& n) {
    require(n >= 1, "partial sums need n >= 1");
    BigInt rest = n;
    long m = seq::fib_window(n);
    BigInt acc = 0;
    while (m >= 3) {
        // Every position from the window start f_m - 1 up to rest contributes
        // the +1 of the block recursion; the remainder is a partial sum over
        // W_{m-2} (possibly complete, then counted via C) and/or W_{m-1}.
        acc += rest - seq::fib(m) + 2;
        if (rest + 1 >= 2 * seq::fib(m - 1))
            acc += c(m - 2);
        rest -= seq::fib(m - 1);
        m = rest + 1 < seq::fib(m - 1) ? m - 2 : m - 1;
    }
    if (m == 1)
        acc += 1;                      // W_1 = [1]
    else
        acc += rest == 2 ? 1 : 3;      // W_2 = [1, 2] over positions 2, 3
    return acc;
}

BigInt big_a(const BigInt& n) {
    require(n >= 1, "A(n) needs n >= 1");
    const long m = seq::fib_window(n);
    const BigInt before_window = m >= 2 ? big_a_at_fib_minus2(m) : BigInt(0);
    return before_window + partial_sum_a(n);
}

std::vector<std::uint8_t> a_table(std::uint64_t n_max) {
    require(n_max >= 1 && n_max <= table_cap, "table size out of range");
    std::vector<std::uint8_t> v(n_max + 1, 0);
    v[1] = 1;
    if (n_max >= 2)
        v[2] = 1;
    if (n_max >= 3)
        v[3] = 2;
    long m = 3;
    std::uint64_t window_end = to_u64(seq::fib(m + 1), "window end") - 2;
    std::uint64_t shift = to_u64(seq::fib(m - 1), "window shift");
    for (std::uint64_t pos = 4; pos <= n_max; ++pos) {
        if (pos > window_end) {
            ++m;
            window_end = to_u64(seq::fib(m + 1), "window end") - 2;
            shift = to_u64(seq::fib(m - 1), "window shift");
        }
        v[pos] = static_cast<std::uint8_t>(v[pos - shift] + 1);
    }
    return v;
}

BigInt big_a_via_blocks(std::uint64_t n) {
    const std::vector<std::uint8_t> v = a_table(n);
    std::uint64_t acc = 0;  // bounded by 255 * table_cap, far below 2^64
    for (std::uint64_t pos = 1; pos <= n; ++pos)
        acc += v[pos];
    return BigInt(static_cast<unsigned long>(acc));
}

}  // namespace palcount::fib_count
