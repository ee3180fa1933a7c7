#include "palcount/trib_count.hpp"

#include <array>
#include <stdexcept>

#include "palcount/sequences.hpp"

namespace palcount::trib_count {

namespace {

namespace seq = palcount::sequences;

void require(bool cond, const char* message) {
    if (!cond)
        throw std::domain_error(message);
}

// b over windows V_1 through V_4, i.e. positions 1..14.
constexpr std::array<int, 15> base_b{0, 1, 1, 2, 1, 2, 2, 3, 2, 2, 3, 2, 3, 3, 4};

}  // namespace

CountSlice b_block(long m) {
    require(m >= 1, "window index must be >= 1");
    require(seq::trib(m - 1) <= table_cap, "window too large to materialize");
    std::array<std::vector<long>, 3> last{{{1}, {1, 2}, {1, 2, 2, 3}}};  // V_1, V_2, V_3
    for (long i = 4; i <= m; ++i) {
        std::vector<long> next;
        next.reserve(last[0].size() + last[1].size() + last[2].size());
        for (const auto& block : last)
            for (long v : block)
                next.push_back(v + 1);
        last = {std::move(last[1]), std::move(last[2]), std::move(next)};
    }
    CountSlice slice;
    slice.start = seq::kernel_number(m + 3) - 1;
    const auto& values = m >= 3 ? last[2] : last[static_cast<std::size_t>(m - 1)];
    slice.values.assign(values.begin(), values.end());
    return slice;
}

BigInt b(const BigInt& n) {
    require(n >= 1, "b(n) needs n >= 1");
    BigInt rest = n;
    long m = seq::trib_window(n);
    long lift = 0;
    while (m >= 4) {
        rest -= seq::trib(m - 1);
        ++lift;
        // The shifted position lands in V_{m-3}, V_{m-2} or V_{m-1}.
        if (rest + 1 < seq::kernel_number(m + 1))
            m -= 3;
        else if (rest + 1 < seq::kernel_number(m + 2))
            m -= 2;
        else
            m -= 1;
    }
    return base_b[static_cast<std::size_t>(rest.get_ui())] + BigInt(lift);
}

BigInt d(long m) {
    require(m >= 1, "D(m) needs m >= 1");
    const BigInt linear = 3 * seq::trib(m) + 7 * seq::trib(m - 1) + 2 * seq::trib(m - 2);
    const BigInt constant = 3 * seq::trib(m) - 3 * seq::trib(m - 1) + 4 * seq::trib(m - 2);
    return exact_div(m * linear + constant, 22, "D(m)");
}

BigInt big_b_at_kernel_landmark(long m) {
    require(m >= 1, "B(k_{m+4} - 2) needs m >= 1");
    const BigInt linear =
        8 * seq::trib(m + 2) + 4 * seq::trib(m + 1) - 2 * seq::trib(m);
    const BigInt constant = 9 * seq::trib(m + 2) - 3 * seq::trib(m);
    return exact_div(m * linear - constant + 33, 44, "B at kernel landmark");
}

BigInt big_b_window_landmark(long m) {
    require(m >= 1, "window landmark needs m >= 1");
    return m >= 2 ? big_b_at_kernel_landmark(m - 1) : BigInt(0);
}

BigInt partial_sum_b(const BigInt& n) {
    require(n >= 1, "partial sums need n >= 1");
    BigInt rest = n;
    long m = seq::trib_window(n);
    BigInt acc = 0;
    while (m >= 4 && rest > 14) {
        // Count the +1 for every position from the window start k_{m+3} - 1
        // up to rest, then fold in whole sub-blocks the position has passed.
        acc += rest - seq::kernel_number(m + 3) + 2;
        const BigInt alpha = seq::kernel_number(m + 3) + seq::trib(m - 4);
        const BigInt beta = alpha + seq::trib(m - 3);
        if (rest + 1 >= alpha)
            acc += d(m - 3);
        if (rest + 1 >= beta)
            acc += d(m - 2);
        rest -= seq::trib(m - 1);
        if (rest + 1 < seq::kernel_number(m + 1))
            m -= 3;
        else if (rest + 1 < seq::kernel_number(m + 2))
            m -= 2;
        else
            m -= 1;
    }
    // rest <= 14: sum the literal base values from the window start.
    const std::size_t lo = static_cast<std::size_t>(
        to_u64(seq::kernel_number(m + 3) - 1, "window start"));
    const std::size_t hi = static_cast<std::size_t>(rest.get_ui());
    for (std::size_t pos = lo; pos <= hi; ++pos)
        acc += base_b[pos];
    return acc;
}

BigInt big_b(const BigInt& n) {
    require(n >= 1, "B(n) needs n >= 1");
    const long m = seq::trib_window(n);
    return big_b_window_landmark(m) + partial_sum_b(n);
}

BigInt big_b_at_trib(long m) {
    require(m >= 0, "B(t_m) needs m >= 0");
    const BigInt linear =
        10 * seq::trib(m) + 5 * seq::trib(m - 1) + 3 * seq::trib(m - 2);
    const BigInt constant =
        -23 * seq::trib(m) + 12 * seq::trib(m - 1) - 5 * seq::trib(m - 2);
    return exact_div(m * linear + constant + 22 * BigInt(m) + 33, 22, "B(t_m)");
}

std::vector<std::uint8_t> b_table(std::uint64_t n_max) {
    require(n_max >= 1 && n_max <= table_cap, "table size out of range");
    std::vector<std::uint8_t> v(n_max + 1, 0);
    for (std::size_t pos = 1; pos <= 14 && pos <= n_max; ++pos)
        v[pos] = static_cast<std::uint8_t>(base_b[pos]);
    if (n_max <= 14)
        return v;
    long m = 5;
    std::uint64_t window_end = to_u64(seq::kernel_number(m + 4), "window end") - 2;
    std::uint64_t shift = to_u64(seq::trib(m - 1), "window shift");
    for (std::uint64_t pos = 15; pos <= n_max; ++pos) {
        if (pos > window_end) {
            ++m;
            window_end = to_u64(seq::kernel_number(m + 4), "window end") - 2;
            shift = to_u64(seq::trib(m - 1), "window shift");
        }
        v[pos] = static_cast<std::uint8_t>(v[pos - shift] + 1);
    }
    return v;
}

BigInt big_b_via_blocks(std::uint64_t n) {
    const std::vector<std::uint8_t> v = b_table(n);
    std::uint64_t acc = 0;  // bounded by 255 * table_cap, far below 2^64
    for (std::uint64_t pos = 1; pos <= n; ++pos)
        acc += v[pos];
    return BigInt(static_cast<unsigned long>(acc));
}

}  // namespace palcount::trib_count
