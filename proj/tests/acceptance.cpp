// Acceptance gate: one line per criterion, [PASS] or [FAIL], nonzero exit if
// anything failed. Each criterion is self-contained and states its own bound;
// the time budgets are part of the contract and are enforced, not advisory.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "palcount/fib_count.hpp"
#include "palcount/oracle.hpp"
#include "palcount/sequences.hpp"
#include "palcount/structures.hpp"
#include "palcount/sweep.hpp"
#include "palcount/trib_count.hpp"
#include "palcount/word.hpp"

namespace {

using palcount::BigInt;
using palcount::Family;
using palcount::Word;
namespace fc = palcount::fib_count;
namespace tc = palcount::trib_count;
namespace seq = palcount::sequences;
namespace st = palcount::structures;
namespace sw = palcount::sweep;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool ok = true;
    std::uint64_t checked = 0;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        ++checked;
        if (!cond) {
            if (ok)
                detail = what;
            ok = false;
        }
    }

    void absorb(const sw::SuiteResult& result) {
        checked += result.checked;
        if (!result.ok()) {
            if (ok)
                detail = result.name + ": " +
                         (result.notes.empty() ? std::to_string(result.failures) + " failures"
                                               : result.notes.front());
            ok = false;
        }
    }

    void enforce_budget(double elapsed, double budget) {
        if (elapsed > budget)
            expect(false, "time budget exceeded: " + std::to_string(elapsed) + "s > " +
                              std::to_string(budget) + "s");
    }
};

// ---------------------------------------------------------------------------
// 1. Golden values: the worked examples, window sums, and the literal
//    per-position vectors. Budget: 1 second.
Verdict golden_values(double& elapsed) {
    const auto t0 = Clock::now();
    Verdict v;

    v.expect(fc::big_a(13) == 32, "A(13) != 32");
    v.expect(fc::big_a(19) == 56, "A(19) != 56");
    v.expect(fc::big_a(29) == 98, "A(29) != 98");
    v.expect(fc::c(4) == 15, "C(4) != 15");
    v.expect(fc::big_a(29) - fc::big_a(19) == 42, "sum of a over [20,29] != 42");
    v.expect(tc::big_b(14) == 31, "B(14) != 31");
    v.expect(tc::big_b(24) == 61, "B(24) != 61");
    v.expect(tc::big_b(24) - tc::big_b(14) == 30, "sum of b over [15,24] != 30");

    const int a_vals[32] = {1, 1, 2, 2, 2, 3, 2, 3, 3, 3, 4, 3, 3, 4, 3, 4,
                            4, 4, 5, 3, 4, 4, 4, 5, 4, 4, 5, 4, 5, 5, 5, 6};
    for (int i = 0; i < 32; ++i)
        v.expect(fc::a(i + 1) == a_vals[i], "a(" + std::to_string(i + 1) + ") off");
    const int b_vals[27] = {1, 1, 2, 1, 2, 2, 3, 2, 2, 3, 2, 3, 3, 4,
                            2, 3, 2, 3, 3, 4, 3, 3, 4, 3, 4, 4, 5};
    for (int i = 0; i < 27; ++i)
        v.expect(tc::b(i + 1) == b_vals[i], "b(" + std::to_string(i + 1) + ") off");

    elapsed = seconds_since(t0);
    v.enforce_budget(elapsed, 1.0);
    return v;
}

// ---------------------------------------------------------------------------
// 2. Oracle equivalence to n = 100000, both families: per-position counts
//    from the block tables equal the tree's, and running sums equal the
//    closed-path totals. Budget: 60 seconds.
Verdict oracle_equivalence(double& elapsed) {
    const auto t0 = Clock::now();
    Verdict v;
    constexpr std::uint64_t n_max = 100'000;

    for (const Family family : {Family::fib, Family::trib}) {
        const std::string tag = palcount::to_string(family);
        const Word prefix =
            family == Family::fib ? seq::fib_prefix(n_max) : seq::trib_prefix(n_max);
        palcount::oracle::PalTree tree;
        tree.build(prefix.view());
        const auto table = family == Family::fib ? fc::a_table(n_max) : tc::b_table(n_max);

        BigInt running = 0;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            v.expect(table[n] == tree.suffix_count_at(n),
                     tag + ": table count != tree count at n=" + std::to_string(n));
            running += table[n];
            const BigInt total = family == Family::fib ? fc::big_a(n) : tc::big_b(n);
            v.expect(total == running,
                     tag + ": running total mismatch at n=" + std::to_string(n));
        }
    }

    elapsed = seconds_since(t0);
    v.enforce_budget(elapsed, 60.0);
    return v;
}

// ---------------------------------------------------------------------------
// 3. Closed forms against the general algorithms at every landmark up to
//    m = 40, with every exact division asserted along the way. Budget: 5 s.
Verdict closed_form_consistency(double& elapsed) {
    const auto t0 = Clock::now();
    Verdict v;
    // Empty prefixes hold zero pairs; the counting functions start at n = 1.
    const auto big_a = [](const BigInt& n) { return n <= 0 ? BigInt(0) : fc::big_a(n); };
    const auto big_b = [](const BigInt& n) { return n <= 0 ? BigInt(0) : tc::big_b(n); };

    for (long m = 2; m <= 40; ++m) {
        v.expect(fc::big_a_at_fib(m) == fc::big_a(seq::fib(m)),
                 "A(f_m) closed form off at m=" + std::to_string(m));
        v.expect(fc::big_a_at_fib_minus2(m) == fc::big_a(seq::fib(m) - 2),
                 "A(f_m - 2) closed form off at m=" + std::to_string(m));
        const fc::Landmarks lm = fc::a_closed_at_landmarks(m);
        v.expect(lm.at_fib_minus2 == fc::a(seq::fib(m) - 2), "a(f_m - 2) off");
        v.expect(lm.at_fib_minus1 == fc::a(seq::fib(m) - 1), "a(f_m - 1) off");
        v.expect(lm.at_fib == fc::a(seq::fib(m)), "a(f_m) off");
    }
    for (long m = 1; m <= 40; ++m) {
        v.expect(fc::c(m) == big_a(seq::fib(m + 1) - 2) - big_a(seq::fib(m) - 2),
                 "C(m) window sum off at m=" + std::to_string(m));
        v.expect(tc::big_b_at_kernel_landmark(m) == tc::big_b(seq::kernel_number(m + 4) - 2),
                 "B at kernel landmark off at m=" + std::to_string(m));
        v.expect(tc::d(m) == big_b(seq::kernel_number(m + 4) - 2) -
                                 big_b(seq::kernel_number(m + 3) - 2),
                 "D(m) window sum off at m=" + std::to_string(m));
    }
    for (long m = 0; m <= 40; ++m)
        v.expect(tc::big_b_at_trib(m) == tc::big_b(seq::trib(m)),
                 "B(t_m) closed form off at m=" + std::to_string(m));

    elapsed = seconds_since(t0);
    v.enforce_budget(elapsed, 5.0);
    return v;
}

// ---------------------------------------------------------------------------
// 4. Identity suites: the position-formula lemmas and the sequence algebra
//    every closed form rests on. Zero failures required.
Verdict identity_suites(double& elapsed) {
    const auto t0 = Clock::now();
    Verdict v;
    v.absorb(sw::verify_lemma_lf(1'000'000, sw::Exec::parallel));
    v.absorb(sw::verify_lemma_lt(10'000));
    v.absorb(sw::verify_identities(Family::fib, 30));
    v.absorb(sw::verify_identities(Family::trib, 30));
    elapsed = seconds_since(t0);
    return v;
}

// ---------------------------------------------------------------------------
// 5. Structural suites: interval partitions, chain tiling, palindromic
//    prefixes, cylinder census, richness, kernel containment. Zero failures.
Verdict structure_suites(double& elapsed) {
    const auto t0 = Clock::now();
    Verdict v;
    for (const Family family : {Family::fib, Family::trib}) {
        v.absorb(sw::verify_interval_partition(family, 12, 100));
        v.absorb(sw::verify_chain_tiling(family, 100'000));
        v.absorb(sw::verify_palprefix(family, 10'000, sw::Exec::parallel));
        v.absorb(sw::verify_cylinder_counts(family, 2'000));
        v.absorb(sw::verify_richness(family, 10'000));
        v.absorb(sw::verify_kernel_containment(family, 12));
    }
    for (long n = 1; n <= 2000; ++n)
        v.expect(st::pal_count_by_length(Family::fib, n) == (n % 2 == 1 ? 2 : 1),
                 "fib length census parity off at n=" + std::to_string(n));
    v.expect(st::pal_count_by_length(Family::trib, 1) == 3, "trib has three 1-letter palindromes");
    elapsed = seconds_since(t0);
    return v;
}

// ---------------------------------------------------------------------------
// 6. Scale and randomized agreement: totals at n = 10^18 inside 100 ms per
//    call, and 1000 random positions below 10^5 against the oracle.
Verdict scale_and_random(double& elapsed) {
    const auto t0 = Clock::now();
    Verdict v;

    const BigInt huge{"1000000000000000000"};
    {
        const auto t = Clock::now();
        const BigInt result = fc::big_a(huge);
        const double took = seconds_since(t);
        v.expect(result > 0, "A(10^18) not positive");
        v.expect(took < 0.1, "A(10^18) took " + std::to_string(took) + "s");
    }
    {
        const auto t = Clock::now();
        const BigInt result = tc::big_b(huge);
        const double took = seconds_since(t);
        v.expect(result > 0, "B(10^18) not positive");
        v.expect(took < 0.1, "B(10^18) took " + std::to_string(took) + "s");
    }

    v.absorb(sw::verify_random_oracle(Family::fib, 1000, 100'000, 20240817, sw::Exec::parallel));
    v.absorb(sw::verify_random_oracle(Family::trib, 1000, 100'000, 20240817, sw::Exec::parallel));

    elapsed = seconds_since(t0);
    return v;
}

struct Criterion {
    const char* label;
    Verdict (*run)(double&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"golden values and literal count vectors", golden_values},
        {"oracle equivalence to n=100000", oracle_equivalence},
        {"closed forms vs general algorithms to m=40", closed_form_consistency},
        {"position and sequence identities", identity_suites},
        {"interval, chain, prefix and census structure", structure_suites},
        {"n=10^18 latency and randomized oracle agreement", scale_and_random},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        double elapsed = 0.0;
        Verdict verdict;
        try {
            verdict = criteria[i].run(elapsed);
        } catch (const std::exception& e) {
            verdict.ok = false;
            verdict.detail = std::string("exception: ") + e.what();
        }
        if (verdict.ok) {
            std::printf("[PASS] criterion %zu: %s (%llu checks, %.3fs)\n", i + 1,
                        criteria[i].label,
                        static_cast<unsigned long long>(verdict.checked), elapsed);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %zu: %s — %s (%.3fs)\n", i + 1, criteria[i].label,
                        verdict.detail.c_str(), elapsed);
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
