#include "palcount/sequences.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

namespace palcount::sequences {

namespace {

// Growable memo tables. thread_local keeps parallel sweeps lock-free; the
// tables hold a few hundred entries at most, so per-thread copies are cheap.
struct Tables {
    std::vector<BigInt> f{0, 1};     // index i holds f_{i-2}
    std::vector<BigInt> t{0, 1, 1};  // index i holds t_{i-2}
    std::vector<BigInt> k{0, 1, 1};  // index i holds k_i
};

Tables& tables() {
    thread_local Tables t;
    return t;
}

void require(bool cond, const char* message) {
    if (!cond)
        throw std::domain_error(message);
}

std::string raw_prefix(Family family, std::size_t len) {
    std::string s, prev1, prev2;
    if (family == Family::fib) {
        prev1 = "a";  // F_0
        s = "ab";     // F_1
        while (s.size() < len) {
            std::string next = s + prev1;  // F_{m+1} = F_m F_{m-1}
            prev1 = std::move(s);
            s = std::move(next);
        }
    } else {
        prev2 = "a";   // T_0
        prev1 = "ab";  // T_1
        s = "abac";    // T_2
        while (s.size() < len) {
            std::string next = s + prev1 + prev2;  // T_{m+1} = T_m T_{m-1} T_{m-2}
            prev2 = std::move(prev1);
            prev1 = std::move(s);
            s = std::move(next);
        }
    }
    s.resize(len);
    return s;
}

// Factor searches and kernel materializations request overlapping prefixes
// constantly; each thread keeps its longest prefix so far and serves shorter
// ones as substrings. Doubling growth keeps regeneration amortized linear.
constexpr std::size_t prefix_cache_cap = 64u << 20;

Word materialize(Family family, const BigInt& n) {
    require(n >= 0, "prefix length must be >= 0");
    if (!n.fits_ulong_p())
        throw std::domain_error("prefix length too large to materialize");
    const std::size_t len = n.get_ui();

    thread_local std::string cached_fib, cached_trib;
    std::string& cache = family == Family::fib ? cached_fib : cached_trib;
    if (len > prefix_cache_cap)
        return Word(raw_prefix(family, len));
    if (len > cache.size())
        cache = raw_prefix(family, std::min(prefix_cache_cap, std::max(len, 2 * cache.size())));
    return Word(cache.substr(0, len));
}

}  // namespace

BigInt fib(long m) {
    require(m >= -2, "fib index must be >= -2");
    auto& f = tables().f;
    while (static_cast<long>(f.size()) <= m + 2)
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f[m + 2];
}

BigInt trib(long m) {
    require(m >= -2, "trib index must be >= -2");
    auto& t = tables().t;
    while (static_cast<long>(t.size()) <= m + 2)
        t.push_back(t[t.size() - 1] + t[t.size() - 2] + t[t.size() - 3]);
    return t[m + 2];
}

BigInt kernel_number(long m) {
    require(m >= 0, "kernel_number index must be >= 0");
    auto& k = tables().k;
    while (static_cast<long>(k.size()) <= m)
        k.push_back(k[k.size() - 1] + k[k.size() - 2] + k[k.size() - 3] - 1);
    return k[m];
}

Word fib_prefix(const BigInt& n) {
    return materialize(Family::fib, n);
}

Word trib_prefix(const BigInt& n) {
    return materialize(Family::trib, n);
}

std::vector<long> fib_prefix_blocks(const BigInt& n) {
    require(n >= 0, "prefix decomposition needs n >= 0");
    std::vector<long> indices;
    BigInt rest = n;
    if (rest == 0)
        return indices;
    long m = 0;
    while (fib(m + 1) <= rest)
        ++m;
    // Greedy indices strictly decrease, so one downward scan suffices.
    while (true) {
        indices.push_back(m);
        rest -= fib(m);
        if (rest == 0)
            break;
        while (fib(m) > rest)
            --m;
    }
    return indices;
}

std::vector<long> trib_prefix_blocks(const BigInt& n) {
    require(n >= 0, "prefix decomposition needs n >= 0");
    std::vector<long> indices;
    BigInt rest = n;
    if (rest == 0)
        return indices;
    long m = 0;
    while (trib(m + 1) <= rest)
        ++m;
    while (true) {
        indices.push_back(m);
        rest -= trib(m);
        if (rest == 0)
            break;
        while (trib(m) > rest)
            --m;
    }
    return indices;
}

std::vector<long> zeckendorf(const BigInt& n) {
    require(n >= 1, "zeckendorf needs n >= 1");
    std::vector<long> indices = fib_prefix_blocks(n);
    // The greedy loop emits the unit as index 0; the representation writes it
    // in the f_{-1} digit position instead.
    if (!indices.empty() && indices.back() == 0)
        indices.back() = -1;
    return indices;
}

AbelianVector abelian_fib(const BigInt& n) {
    // |F_m|_a = f_{m-1}, |F_m|_b = f_{m-2}; sum over the prefix blocks.
    AbelianVector acc;
    for (long m : fib_prefix_blocks(n)) {
        acc.a += fib(m - 1);
        acc.b += fib(m - 2);
    }
    return acc;
}

AbelianVector abelian_trib(const BigInt& n) {
    // |T_m|_a = t_{m-1}, |T_m|_b = t_{m-2}, |T_m|_c = t_{m-3} (zero for m < 3).
    AbelianVector acc;
    for (long m : trib_prefix_blocks(n)) {
        acc.a += trib(m - 1);
        acc.b += trib(m - 2);
        if (m >= 1)
            acc.c += trib(m - 3);
    }
    return acc;
}

BigInt floor_phi(const BigInt& p) {
    require(p >= 0, "floor_phi needs p >= 0");
    if (p == 0)
        return 0;
    return abelian_fib(p - 1).a;
}

long fib_window(const BigInt& n) {
    require(n >= 1, "window index needs n >= 1");
    const BigInt x = n + 1;
    long m = 1;  // f_1 = 2 <= x always
    while (fib(m + 1) <= x)
        ++m;
    return m;
}

long trib_window(const BigInt& n) {
    require(n >= 1, "window index needs n >= 1");
    const BigInt x = n + 1;
    long m = 1;  // k_4 = 2 <= x always
    while (kernel_number(m + 4) <= x)
        ++m;
    return m;
}

}  // namespace palcount::sequences
