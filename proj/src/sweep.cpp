#include "palcount/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "palcount/fib_count.hpp"
#include "palcount/kernels.hpp"
#include "palcount/oracle.hpp"
#include "palcount/sequences.hpp"
#include "palcount/structures.hpp"
#include "palcount/trib_count.hpp"

namespace palcount::sweep {

namespace {

namespace seq = palcount::sequences;

using Clock = std::chrono::steady_clock;

constexpr std::size_t max_notes = 5;

void require(bool cond, const char* message) {
    if (!cond)
        throw std::domain_error(message);
}

Word prefix_of(Family family, const BigInt& n) {
    return family == Family::fib ? seq::fib_prefix(n) : seq::trib_prefix(n);
}

BigInt count_of(Family family, const BigInt& n) {
    return family == Family::fib ? fib_count::a(n) : trib_count::b(n);
}

BigInt total_of(Family family, const BigInt& n) {
    return family == Family::fib ? fib_count::big_a(n) : trib_count::big_b(n);
}

// Failure bookkeeping shared by all suites. Parallel loops keep a private
// Tally per thread and absorb them under a critical section at the end.
struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes;

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++checked;
        if (!ok) {
            ++failures;
            if (notes.size() < max_notes)
                notes.push_back(describe());
        }
    }

    void absorb(const Tally& other) {
        checked += other.checked;
        failures += other.failures;
        for (const std::string& note : other.notes)
            if (notes.size() < max_notes)
                notes.push_back(note);
    }
};

SuiteResult finish(std::string name, Tally tally, Clock::time_point t0) {
    SuiteResult result;
    result.name = std::move(name);
    result.checked = tally.checked;
    result.failures = tally.failures;
    result.notes = std::move(tally.notes);
    result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return result;
}

std::string at_n(std::uint64_t n, const std::string& detail) {
    return "n=" + std::to_string(n) + ": " + detail;
}

}  // namespace

std::vector<std::uint64_t> count_range(Family family, std::uint64_t lo, std::uint64_t hi,
                                       Exec exec) {
    require(lo >= 1 && lo <= hi, "count_range needs 1 <= lo <= hi");
    std::vector<std::uint64_t> out(hi - lo + 1);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 1024) if (par)
    for (long long i = 0; i < static_cast<long long>(out.size()); ++i) {
        const BigInt n = static_cast<unsigned long>(lo + static_cast<std::uint64_t>(i));
        out[static_cast<std::size_t>(i)] = to_u64(count_of(family, n), "per-position count");
    }
    return out;
}

std::vector<std::uint64_t> pal_suffix_counts_naive_sweep(const Word& w, Exec exec) {
    if (exec == Exec::serial)
        return oracle::pal_suffix_counts_naive(w);
    const std::string_view s = w.view();
    const auto n = static_cast<long long>(s.size());
    std::vector<std::uint64_t> out(s.size(), 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(s.size(), 0);
#pragma omp for schedule(dynamic, 256) nowait
        for (long long center = 0; center < n; ++center) {
            for (long long r = 0; center - r >= 0 && center + r < n; ++r) {
                if (s[static_cast<std::size_t>(center - r)] !=
                    s[static_cast<std::size_t>(center + r)])
                    break;
                local[static_cast<std::size_t>(center + r)] += 1;
            }
            for (long long r = 0; center - r >= 0 && center + 1 + r < n; ++r) {
                if (s[static_cast<std::size_t>(center - r)] !=
                    s[static_cast<std::size_t>(center + 1 + r)])
                    break;
                local[static_cast<std::size_t>(center + 1 + r)] += 1;
            }
        }
#pragma omp critical
        {
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] += local[i];
        }
    }
    return out;
}

SuiteResult verify_oracle_equivalence(Family family, std::uint64_t n_max, Exec exec) {
    const auto t0 = Clock::now();
    require(n_max >= 1, "oracle equivalence needs n_max >= 1");
    Tally tally;
    const Word prefix = prefix_of(family, BigInt(static_cast<unsigned long>(n_max)));
    oracle::PalTree tree;
    tree.build(prefix.view());
    const std::vector<std::uint64_t>& via_tree = tree.suffix_counts();
    const std::vector<std::uint64_t> via_naive = pal_suffix_counts_naive_sweep(prefix, exec);
    const std::vector<std::uint64_t> via_fast = count_range(family, 1, n_max, exec);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const std::uint64_t t = via_tree[n - 1];
        const std::uint64_t nv = via_naive[n - 1];
        const std::uint64_t f = via_fast[n - 1];
        tally.expect(t == nv && t == f, [&] {
            return at_n(n, "tree=" + std::to_string(t) + " naive=" + std::to_string(nv) +
                               " fast=" + std::to_string(f));
        });
    }
    const BigInt total = tree.total_occurrences();
    const BigInt closed = total_of(family, BigInt(static_cast<unsigned long>(n_max)));
    tally.expect(total == closed, [&] {
        return "total occurrences: tree=" + total.get_str() + " closed=" + closed.get_str();
    });
    if (n_max <= fib_count::table_cap) {
        const BigInt via_blocks = family == Family::fib ? fib_count::big_a_via_blocks(n_max)
                                                        : trib_count::big_b_via_blocks(n_max);
        tally.expect(total == via_blocks, [&] {
            return "total occurrences: tree=" + total.get_str() +
                   " blocks=" + via_blocks.get_str();
        });
    }
    return finish("oracle", std::move(tally), t0);
}

SuiteResult verify_lemma_lf(std::uint64_t p_max, Exec exec) {
    const auto t0 = Clock::now();
    require(p_max >= 1, "lemma sweep needs p_max >= 1");
    Tally tally;
    const bool par = exec == Exec::parallel;
#pragma omp parallel if (par)
    {
        Tally local;
#pragma omp for schedule(dynamic, 512) nowait
        for (long long v = 1; v <= static_cast<long long>(p_max); ++v) {
            const BigInt p = static_cast<unsigned long>(v);
            const BigInt fp = seq::floor_phi(p);
            local.expect(seq::floor_phi(p + fp + 1) == p, [&] {
                return at_n(static_cast<std::uint64_t>(v), "phi-floor after P(a,p)");
            });
            local.expect(seq::floor_phi(2 * p + fp + 1) == p + fp, [&] {
                return at_n(static_cast<std::uint64_t>(v), "phi-floor after P(b,p)");
            });
            local.expect(seq::floor_phi(p + fp) == p - 1, [&] {
                return at_n(static_cast<std::uint64_t>(v), "phi-floor at P(a,p)");
            });
            local.expect(seq::floor_phi(2 * p + fp) == p + fp, [&] {
                return at_n(static_cast<std::uint64_t>(v), "phi-floor at P(b,p)");
            });
        }
#pragma omp critical
        tally.absorb(local);
    }
    return finish("lemma-lf", std::move(tally), t0);
}

SuiteResult verify_lemma_lt(std::uint64_t p_max) {
    const auto t0 = Clock::now();
    require(p_max >= 1, "lemma sweep needs p_max >= 1");
    Tally tally;
    for (std::uint64_t v = 1; v <= p_max; ++v) {
        const BigInt p = static_cast<unsigned long>(v);
        const BigInt pa = kernels::pos_kernel_trib(1, p);
        const BigInt pb = kernels::pos_kernel_trib(2, p);
        const BigInt pc = kernels::pos_kernel_trib(3, p);
        const AbelianVector head = seq::abelian_trib(p - 1);
        const AbelianVector at_a = seq::abelian_trib(pa);
        const AbelianVector at_b = seq::abelian_trib(pb);
        const AbelianVector at_c = seq::abelian_trib(pc);
        tally.expect(at_a.a == p, [&] { return at_n(v, "a-count at P(a,p)"); });
        tally.expect(at_b.b == p, [&] { return at_n(v, "b-count at P(b,p)"); });
        tally.expect(at_c.c == p, [&] { return at_n(v, "c-count at P(c,p)"); });
        tally.expect(at_b.a == pa, [&] { return at_n(v, "a-count at P(b,p)"); });
        tally.expect(at_a.b == head.a, [&] { return at_n(v, "b-count at P(a,p)"); });
        tally.expect(at_c.a == pb, [&] { return at_n(v, "a-count at P(c,p)"); });
        tally.expect(at_c.b == pa, [&] { return at_n(v, "b-count at P(c,p)"); });
    }
    return finish("lemma-lt", std::move(tally), t0);
}

SuiteResult verify_beatty(std::uint64_t p_max, Exec exec) {
    const auto t0 = Clock::now();
    require(p_max >= 1, "beatty sweep needs p_max >= 1");
    Tally tally;
    const bool par = exec == Exec::parallel;
#pragma omp parallel if (par)
    {
        Tally local;
#pragma omp for schedule(dynamic, 512) nowait
        for (long long v = 1; v <= static_cast<long long>(p_max); ++v) {
            const BigInt p = static_cast<unsigned long>(v);
            // floor(p (sqrt(5)-1)/2) through integer square roots only:
            // with s = floor(sqrt(5 p^2)), the value is floor((s - p) / 2).
            const BigInt s = sqrt(5 * p * p);
            BigInt expected = s - p;
            mpz_fdiv_q_ui(expected.get_mpz_t(), expected.get_mpz_t(), 2);
            local.expect(seq::floor_phi(p) == expected, [&] {
                return at_n(static_cast<std::uint64_t>(v),
                            "floor_phi=" + seq::floor_phi(p).get_str() +
                                " sqrt-based=" + expected.get_str());
            });
        }
#pragma omp critical
        tally.absorb(local);
    }
    return finish("beatty", std::move(tally), t0);
}

SuiteResult verify_abelian(Family family, std::uint64_t n_max, Exec exec) {
    const auto t0 = Clock::now();
    require(n_max >= 1, "abelian sweep needs n_max >= 1");
    Tally tally;
    const Word prefix = prefix_of(family, BigInt(static_cast<unsigned long>(n_max)));
    std::vector<std::uint64_t> run_a(n_max + 1, 0), run_b(n_max + 1, 0), run_c(n_max + 1, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const char ch = prefix.at(n);
        run_a[n] = run_a[n - 1] + (ch == 'a');
        run_b[n] = run_b[n - 1] + (ch == 'b');
        run_c[n] = run_c[n - 1] + (ch == 'c');
    }
    const bool par = exec == Exec::parallel;
#pragma omp parallel if (par)
    {
        Tally local;
#pragma omp for schedule(dynamic, 512) nowait
        for (long long v = 1; v <= static_cast<long long>(n_max); ++v) {
            const auto n = static_cast<std::uint64_t>(v);
            const AbelianVector counts = family == Family::fib
                                             ? seq::abelian_fib(BigInt(static_cast<unsigned long>(n)))
                                             : seq::abelian_trib(BigInt(static_cast<unsigned long>(n)));
            const bool ok =
                counts.a == run_a[n] && counts.b == run_b[n] && counts.c == run_c[n];
            local.expect(ok, [&] { return at_n(n, "letter counts disagree with the text"); });
        }
#pragma omp critical
        tally.absorb(local);
    }
    return finish("abelian", std::move(tally), t0);
}

SuiteResult verify_numeration(std::uint64_t n_max) {
    const auto t0 = Clock::now();
    require(n_max >= 1, "numeration sweep needs n_max >= 1");
    Tally tally;
    constexpr std::uint64_t text_check_max = 2000;
    const Word fib_text = seq::fib_prefix(std::min(n_max, text_check_max));
    const Word trib_text = seq::trib_prefix(std::min(n_max, text_check_max));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const BigInt big_n = static_cast<unsigned long>(n);
        {
            const std::vector<long> z = seq::zeckendorf(big_n);
            BigInt sum = 0;
            bool shape = !z.empty();
            for (std::size_t j = 0; j < z.size(); ++j) {
                shape = shape && z[j] != 0 && z[j] >= -1;
                if (j + 1 < z.size())
                    shape = shape && z[j] - z[j + 1] >= 2;
                sum += seq::fib(z[j]);
            }
            tally.expect(shape && sum == big_n,
                         [&] { return at_n(n, "zeckendorf shape or sum"); });
        }
        {
            const std::vector<long> blocks = seq::fib_prefix_blocks(big_n);
            BigInt sum = 0;
            bool shape = true;
            std::string text;
            for (std::size_t j = 0; j < blocks.size(); ++j) {
                shape = shape && blocks[j] >= 0;
                if (j + 1 < blocks.size())
                    shape = shape && blocks[j] > blocks[j + 1];
                sum += seq::fib(blocks[j]);
                if (n <= text_check_max)
                    text += seq::fib_prefix(seq::fib(blocks[j])).str();
            }
            bool text_ok = true;
            if (n <= text_check_max)
                text_ok = text == fib_text.view().substr(0, n);
            tally.expect(shape && sum == big_n && text_ok,
                         [&] { return at_n(n, "fib block decomposition"); });
        }
        {
            const std::vector<long> blocks = seq::trib_prefix_blocks(big_n);
            BigInt sum = 0;
            bool shape = true;
            std::string text;
            for (std::size_t j = 0; j < blocks.size(); ++j) {
                shape = shape && blocks[j] >= 0;
                if (j + 1 < blocks.size())
                    shape = shape && blocks[j] > blocks[j + 1];
                sum += seq::trib(blocks[j]);
                if (n <= text_check_max)
                    text += seq::trib_prefix(seq::trib(blocks[j])).str();
            }
            bool text_ok = true;
            if (n <= text_check_max)
                text_ok = text == trib_text.view().substr(0, n);
            tally.expect(shape && sum == big_n && text_ok,
                         [&] { return at_n(n, "trib block decomposition"); });
        }
    }
    return finish("numeration", std::move(tally), t0);
}

SuiteResult verify_identities(Family family, long m_max) {
    const auto t0 = Clock::now();
    require(m_max >= 1, "identity sweep needs m_max >= 1");
    Tally tally;
    const auto at_m = [](long m, const char* what) {
        return "m=" + std::to_string(m) + ": " + std::string(what);
    };
    if (family == Family::fib) {
        for (long m = 1; m <= m_max; ++m) {
            if (m >= 3) {
                tally.expect(fib_count::c(m) ==
                                 fib_count::c(m - 1) + fib_count::c(m - 2) + seq::fib(m - 1),
                             [&] { return at_m(m, "C recursion"); });
            }
            BigInt conv = 0;
            for (long i = -1; i <= m - 1; ++i)
                conv += seq::fib(i) * seq::fib(m - i - 2);
            tally.expect(fib_count::c(m) == conv - seq::fib(m - 1),
                         [&] { return at_m(m, "C convolution"); });
            BigInt conv_full = 0;
            for (long i = -1; i <= m; ++i)
                conv_full += seq::fib(i) * seq::fib(m - i - 1);
            tally.expect(
                5 * conv_full == (m + 2) * seq::fib(m + 2) + (m + 4) * seq::fib(m),
                [&] { return at_m(m, "weighted convolution"); });
            if (m >= 2) {
                tally.expect(fib_count::big_a_at_fib(m) ==
                                 fib_count::big_a_at_fib_minus2(m) + m + 1,
                             [&] { return at_m(m, "A landmark gap"); });
                const fib_count::Landmarks lm = fib_count::a_closed_at_landmarks(m);
                tally.expect(lm.at_fib_minus1 + lm.at_fib == m + 1,
                             [&] { return at_m(m, "landmark pair sum"); });
            }
        }
    } else {
        for (long m = 1; m <= m_max; ++m) {
            if (m >= 3) {
                tally.expect(seq::kernel_number(m) ==
                                 seq::kernel_number(m - 3) + seq::trib(m - 4),
                             [&] { return at_m(m, "kernel number split"); });
                tally.expect(2 * seq::kernel_number(m) ==
                                 seq::trib(m - 3) + seq::trib(m - 5) + 1,
                             [&] { return at_m(m, "kernel number half-sum"); });
            }
            BigInt t_sum = 0;
            for (long i = 0; i <= m; ++i)
                t_sum += seq::trib(i);
            tally.expect(2 * t_sum == seq::trib(m) + seq::trib(m + 2) - 3,
                         [&] { return at_m(m, "t prefix sum"); });
            BigInt k_sum = 0;
            for (long i = 1; i <= m; ++i)
                k_sum += seq::kernel_number(i);
            tally.expect(2 * k_sum == seq::trib(m - 2) + seq::trib(m - 3) + m,
                         [&] { return at_m(m, "k prefix sum"); });
            if (m >= 4) {
                tally.expect(trib_count::d(m) == trib_count::d(m - 1) + trib_count::d(m - 2) +
                                                     trib_count::d(m - 3) + seq::trib(m - 1),
                             [&] { return at_m(m, "D recursion"); });
            }
            BigInt conv = 0;
            for (long i = -1; i <= m - 2; ++i)
                conv += seq::trib(i) * seq::trib(m - i - 2);
            tally.expect(trib_count::d(m) == conv, [&] { return at_m(m, "D convolution"); });
            BigInt weighted = 0;
            for (long i = 0; i <= m; ++i)
                weighted += (i + 1) * seq::trib(i);
            tally.expect(2 * weighted == m * (seq::trib(m + 2) + seq::trib(m)) -
                                             (seq::trib(m - 1) + seq::trib(m - 2)) + 3,
                         [&] { return at_m(m, "weighted t sum"); });
            tally.expect(trib_count::big_b_at_kernel_landmark(m) ==
                             trib_count::big_b_window_landmark(m) + trib_count::d(m),
                         [&] { return at_m(m, "B landmark telescope"); });
            if (m >= 3) {
                tally.expect(trib_count::big_b_at_trib(m) - trib_count::big_b_at_trib(m - 3) ==
                                 trib_count::d(m) + trib_count::d(m - 1) -
                                     2 * seq::kernel_number(m + 1) + 4,
                             [&] { return at_m(m, "B at t landmarks"); });
            }
        }
    }
    return finish("identities", std::move(tally), t0);
}

SuiteResult verify_closed_forms(Family family, long m_max) {
    const auto t0 = Clock::now();
    require(m_max >= 1, "closed form sweep needs m_max >= 1");
    Tally tally;
    const auto at_m = [](long m, const char* what) {
        return "m=" + std::to_string(m) + ": " + std::string(what);
    };
    constexpr std::uint64_t block_cap = 1'000'000;
    if (family == Family::fib) {
        for (long m = 1; m <= m_max; ++m) {
            if (seq::fib(m - 1) <= block_cap) {
                const CountSlice block = fib_count::a_block(m);
                BigInt sum = 0;
                for (const BigInt& v : block.values)
                    sum += v;
                tally.expect(sum == fib_count::c(m),
                             [&] { return at_m(m, "C vs materialized window"); });
                tally.expect(block.start == seq::fib(m) - 1 &&
                                 block.end() == seq::fib(m + 1) - 2,
                             [&] { return at_m(m, "window span"); });
            }
            if (m >= 2) {
                const fib_count::Landmarks lm = fib_count::a_closed_at_landmarks(m);
                tally.expect(fib_count::a(seq::fib(m) - 2) == lm.at_fib_minus2,
                             [&] { return at_m(m, "a(f_m - 2)"); });
                tally.expect(fib_count::a(seq::fib(m) - 1) == lm.at_fib_minus1,
                             [&] { return at_m(m, "a(f_m - 1)"); });
                tally.expect(fib_count::a(seq::fib(m)) == lm.at_fib,
                             [&] { return at_m(m, "a(f_m)"); });
                tally.expect(fib_count::big_a(seq::fib(m) - 2) ==
                                 fib_count::big_a_at_fib_minus2(m),
                             [&] { return at_m(m, "A(f_m - 2)"); });
            }
            tally.expect(fib_count::big_a(seq::fib(m)) == fib_count::big_a_at_fib(m),
                         [&] { return at_m(m, "A(f_m)"); });
        }
    } else {
        for (long m = 1; m <= m_max; ++m) {
            if (seq::trib(m - 1) <= block_cap) {
                const CountSlice block = trib_count::b_block(m);
                BigInt sum = 0;
                for (const BigInt& v : block.values)
                    sum += v;
                tally.expect(sum == trib_count::d(m),
                             [&] { return at_m(m, "D vs materialized window"); });
                tally.expect(block.start == seq::kernel_number(m + 3) - 1 &&
                                 block.end() == seq::kernel_number(m + 4) - 2,
                             [&] { return at_m(m, "window span"); });
            }
            tally.expect(trib_count::big_b(seq::kernel_number(m + 4) - 2) ==
                             trib_count::big_b_at_kernel_landmark(m),
                         [&] { return at_m(m, "B(k_{m+4} - 2)"); });
            tally.expect(trib_count::big_b(seq::trib(m)) == trib_count::big_b_at_trib(m),
                         [&] { return at_m(m, "B(t_m)"); });
        }
    }
    return finish("closed-forms", std::move(tally), t0);
}

SuiteResult verify_interval_partition(Family family, long m_max, std::uint64_t p_max) {
    const auto t0 = Clock::now();
    require(p_max >= 1, "partition sweep needs p_max >= 1");
    Tally tally;
    const long min_order = family == Family::fib ? -1 : 1;
    const auto at_mp = [](long m, std::uint64_t p, const char* what) {
        return "m=" + std::to_string(m) + " p=" + std::to_string(p) + ": " + std::string(what);
    };
    for (long m = min_order; m <= m_max; ++m) {
        for (std::uint64_t pv = 1; pv <= p_max; ++pv) {
            const BigInt p = static_cast<unsigned long>(pv);
            const structures::OccInterval parent = structures::interval({family, m}, p);
            const std::vector<structures::OccInterval> children = structures::decompose(parent);
            const bool leaf = (family == Family::fib && m == -1) ||
                              (family == Family::trib && m == 1);
            if (leaf) {
                tally.expect(children.empty(), [&] { return at_mp(m, pv, "leaf decomposes"); });
                continue;
            }
            bool contiguous = true;
            for (std::size_t j = 0; j + 1 < children.size(); ++j)
                contiguous = contiguous && children[j + 1].lo == children[j].hi + 1;
            tally.expect(contiguous, [&] { return at_mp(m, pv, "children not contiguous"); });
            if ((family == Family::fib && m >= 1) || (family == Family::trib && m >= 4)) {
                tally.expect(children.front().lo == parent.lo && children.back().hi == parent.hi,
                             [&] { return at_mp(m, pv, "tiling misses the parent span"); });
            } else if (family == Family::fib || m == 2) {
                // single child sitting on the parent's maximum
                tally.expect(children.size() == 1 && children.front().lo == parent.hi &&
                                 children.front().hi == parent.hi,
                             [&] { return at_mp(m, pv, "base child is not the parent max"); });
            } else {  // trib m == 3: parent minus its minimum
                tally.expect(children.front().lo == parent.lo + 1 &&
                                 children.back().hi == parent.hi,
                             [&] { return at_mp(m, pv, "base children miss parent-minus-min"); });
            }
        }
    }
    return finish("interval-partition", std::move(tally), t0);
}

SuiteResult verify_chain_tiling(Family family, std::uint64_t n_max) {
    const auto t0 = Clock::now();
    require(n_max >= 1, "chain sweep needs n_max >= 1");
    Tally tally;
    long m = family == Family::fib ? -1 : 1;
    structures::OccInterval iv = structures::chain(family, m);
    tally.expect(iv.lo == 1, [&] { return "first chain interval does not start at 1"; });
    while (iv.hi < static_cast<unsigned long>(n_max)) {
        const structures::OccInterval next_iv = structures::chain(family, m + 1);
        tally.expect(next_iv.lo == iv.hi + 1, [&] {
            return "chain gap between orders " + std::to_string(m) + " and " +
                   std::to_string(m + 1);
        });
        iv = next_iv;
        ++m;
    }
    return finish("chain-tiling", std::move(tally), t0);
}

SuiteResult verify_palprefix(Family family, std::uint64_t n_max, Exec exec) {
    const auto t0 = Clock::now();
    require(n_max >= 1, "palprefix sweep needs n_max >= 1");
    Tally tally;
    const Word prefix = prefix_of(family, BigInt(static_cast<unsigned long>(n_max)));
    const std::string_view s = prefix.view();
    const bool par = exec == Exec::parallel;
#pragma omp parallel if (par)
    {
        Tally local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long v = 1; v <= static_cast<long long>(n_max); ++v) {
            const auto n = static_cast<std::size_t>(v);
            bool pal = true;
            for (std::size_t i = 0, j = n - 1; i < j; ++i, --j)
                if (s[i] != s[j]) {
                    pal = false;
                    break;
                }
            local.expect(structures::is_palprefix(
                             family, BigInt(static_cast<unsigned long>(n))) == pal,
                         [&] { return at_n(n, "palindromic prefix test"); });
        }
#pragma omp critical
        tally.absorb(local);
    }
    return finish("palprefix", std::move(tally), t0);
}

namespace {

// Distinct palindromic factors of the length-n prefix, via the incremental
// tree: at most one new palindrome appears per position, always the longest
// palindromic suffix.
std::vector<Word> distinct_palindromes_of_prefix(Family family, std::uint64_t n) {
    const Word prefix = prefix_of(family, BigInt(static_cast<unsigned long>(n)));
    oracle::PalTree tree;
    std::vector<Word> found;
    std::size_t seen = 0;
    for (std::uint64_t pos = 1; pos <= n; ++pos) {
        tree.push(prefix.at(pos));
        if (tree.distinct() > seen) {
            seen = tree.distinct();
            const std::size_t len = tree.palindromic_suffix_lengths(pos).front();
            found.push_back(prefix.slice(pos - len + 1, pos));
        }
    }
    return found;
}

}  // namespace

SuiteResult verify_cylinder_counts(Family family, std::uint64_t n_max) {
    const auto t0 = Clock::now();
    require(n_max >= 24, "cylinder sweep needs a usable prefix");
    Tally tally;
    const std::vector<Word> pals = distinct_palindromes_of_prefix(family, n_max);
    // All palindromes of length L live inside a prefix of about 3L (fib) or
    // 12L (trib); stay well inside so per-length counts are complete.
    const std::uint64_t len_cap = n_max / 12;
    std::vector<std::uint64_t> per_length(len_cap + 1, 0);
    for (const Word& w : pals) {
        const structures::Cylinder cyl = structures::cylinder_of(w, family);
        const bool even = w.size() % 2 == 0;
        tally.expect(even == (cyl == structures::Cylinder::aa),
                     [&] { return "cylinder parity mismatch for " + w.str(); });
        if (!even) {
            const char middle = w.at(w.size() / 2 + 1);
            const auto expected = middle == 'a'   ? structures::Cylinder::a
                                  : middle == 'b' ? structures::Cylinder::b
                                                  : structures::Cylinder::c;
            tally.expect(cyl == expected,
                         [&] { return "cylinder letter mismatch for " + w.str(); });
        }
        if (w.size() <= len_cap)
            per_length[w.size()] += 1;
    }
    for (std::uint64_t len = 1; len <= len_cap; ++len) {
        const long enumerated = structures::pal_count_by_length(
            family, BigInt(static_cast<unsigned long>(len)));
        tally.expect(enumerated == static_cast<long>(per_length[len]), [&] {
            return "length " + std::to_string(len) + ": enumerated " +
                   std::to_string(enumerated) + ", prefix has " +
                   std::to_string(per_length[len]);
        });
        if (family == Family::fib) {
            const long expected = len == 1 ? 2 : (len % 2 == 1 ? 2 : 1);
            tally.expect(enumerated == expected,
                         [&] { return "fib per-length count at " + std::to_string(len); });
        }
    }
    return finish("cylinders", std::move(tally), t0);
}

SuiteResult verify_richness(Family family, std::uint64_t n_max) {
    const auto t0 = Clock::now();
    require(n_max >= 1, "richness sweep needs n_max >= 1");
    Tally tally;
    const Word prefix = prefix_of(family, BigInt(static_cast<unsigned long>(n_max)));
    oracle::PalTree tree;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        tree.push(prefix.at(n));
        tally.expect(tree.distinct() == n,
                     [&] { return at_n(n, std::to_string(tree.distinct()) + " distinct"); });
    }
    return finish("richness", std::move(tally), t0);
}

SuiteResult verify_kernel_containment(Family family, long m_max) {
    const auto t0 = Clock::now();
    Tally tally;
    const auto contains = [](const Word& big, const Word& small) {
        return big.view().find(small.view()) != std::string_view::npos;
    };
    if (family == Family::fib) {
        require(m_max >= 0, "containment sweep needs m_max >= 0");
        for (long m = -1; m + 1 <= m_max; ++m) {
            const Word lower = kernels::kernel_word({family, m});
            const Word upper = kernels::kernel_word({family, m + 1});
            tally.expect(!contains(upper, lower), [&] {
                return "fib kernel " + std::to_string(m) + " occurs in its successor";
            });
        }
    } else {
        require(m_max >= 3, "containment sweep needs m_max >= 3");
        for (long m = 3; m <= m_max; ++m) {
            const Word current = kernels::kernel_word({family, m});
            tally.expect(!contains(current, kernels::kernel_word({family, m - 1})), [&] {
                return "trib kernel " + std::to_string(m - 1) + " occurs one order up";
            });
            tally.expect(!contains(current, kernels::kernel_word({family, m - 2})), [&] {
                return "trib kernel " + std::to_string(m - 2) + " occurs two orders up";
            });
            if (m >= 4) {
                tally.expect(contains(current, kernels::kernel_word({family, m - 3})), [&] {
                    return "trib kernel " + std::to_string(m - 3) + " missing three orders up";
                });
            }
        }
    }
    return finish("kernel-containment", std::move(tally), t0);
}

SuiteResult verify_gap_projection(Family family, std::size_t len_max, std::size_t depth) {
    const auto t0 = Clock::now();
    require(len_max >= 1 && depth >= 1, "gap sweep needs positive bounds");
    Tally tally;
    const std::uint64_t span = static_cast<std::uint64_t>(len_max) * 12 + 64;
    for (const Word& w : distinct_palindromes_of_prefix(family, span)) {
        if (w.size() > len_max)
            continue;
        tally.expect(oracle::gap_projection_check(w, family, depth),
                     [&] { return "gap sequence of " + w.str() + " is off-pattern"; });
    }
    return finish("gap-projection", std::move(tally), t0);
}

SuiteResult verify_kernel_shift(Family family, long m_max, std::uint64_t p_max) {
    const auto t0 = Clock::now();
    require(p_max >= 1, "shift sweep needs p_max >= 1");
    Tally tally;
    constexpr std::uint64_t materialize_cap = 10'000'000;
    const long min_order = family == Family::fib ? -1 : 1;
    for (long m = min_order; m <= m_max; ++m) {
        const BigInt last_end =
            family == Family::fib
                ? kernels::pos_kernel_fib(m, BigInt(static_cast<unsigned long>(p_max)))
                : kernels::pos_kernel_trib(m, BigInt(static_cast<unsigned long>(p_max)));
        if (last_end > materialize_cap)
            continue;
        const Word prefix = prefix_of(family, last_end);
        const oracle::Occurrences found =
            oracle::occurrences(kernels::kernel_word({family, m}), prefix);
        tally.expect(found.last_positions.size() >= p_max, [&] {
            return "kernel " + std::to_string(m) + ": only " +
                   std::to_string(found.last_positions.size()) + " of " +
                   std::to_string(p_max) + " occurrences found";
        });
        const std::size_t have = std::min<std::size_t>(found.last_positions.size(), p_max);
        for (std::size_t p = 1; p <= have; ++p) {
            const BigInt predicted =
                family == Family::fib
                    ? kernels::pos_kernel_fib(m, BigInt(static_cast<unsigned long>(p)))
                    : kernels::pos_kernel_trib(m, BigInt(static_cast<unsigned long>(p)));
            tally.expect(predicted == found.last_positions[p - 1], [&] {
                return "kernel " + std::to_string(m) + " occurrence " + std::to_string(p) +
                       ": predicted end " + predicted.get_str() + ", scanned " +
                       found.last_positions[p - 1].get_str();
            });
        }
    }
    return finish("kernel-shift", std::move(tally), t0);
}

SuiteResult verify_interval_oracle(Family family, long m_max, std::uint64_t p_max) {
    const auto t0 = Clock::now();
    require(p_max >= 1, "interval sweep needs p_max >= 1");
    Tally tally;
    constexpr std::uint64_t materialize_cap = 200'000;
    const long min_order = family == Family::fib ? -1 : 1;
    for (long m = min_order; m <= m_max; ++m) {
        // The inner loop reads size * max-palindrome-length characters.
        const BigInt work = family == Family::fib
                                ? seq::fib(m + 1) * seq::fib(m + 3)
                                : seq::trib(m - 1) * seq::kernel_number(m + 4);
        if (work > 20'000'000)
            continue;
        for (std::uint64_t pv = 1; pv <= p_max; ++pv) {
            const structures::OccInterval iv =
                structures::interval({family, m}, BigInt(static_cast<unsigned long>(pv)));
            if (iv.hi > materialize_cap)
                continue;
            const Word prefix = prefix_of(family, iv.hi);
            const BigInt span = family == Family::fib ? seq::fib(m + 1) : seq::trib(m - 1);
            for (BigInt n = iv.lo; n <= iv.hi; ++n) {
                const BigInt offset = iv.lo + span - n;
                const Word pal = kernels::pal_decode({family, m, offset});
                const auto end = static_cast<std::size_t>(n.get_ui());
                const bool fits = pal.size() <= end;
                const bool matches =
                    fits && prefix.slice(end - pal.size() + 1, end) == pal;
                tally.expect(matches, [&] {
                    return "m=" + std::to_string(m) + " p=" + std::to_string(pv) +
                           " end=" + n.get_str() + ": decoded palindrome absent";
                });
            }
        }
    }
    return finish("interval-oracle", std::move(tally), t0);
}

SuiteResult verify_shift_property(Family family, long m_max, std::uint64_t p_max) {
    const auto t0 = Clock::now();
    require(p_max >= 2, "shift property sweep needs p_max >= 2");
    Tally tally;
    constexpr std::uint64_t materialize_cap = 100'000;
    const long min_order = family == Family::fib ? -1 : 1;
    for (long m = min_order; m <= m_max; ++m) {
        const structures::OccInterval base = structures::chain(family, m);
        // One prefix and one tree per order, long enough for the farthest
        // occurrence this sweep will visit.
        std::uint64_t top_p = p_max;
        while (top_p >= 2 &&
               structures::interval({family, m}, BigInt(static_cast<unsigned long>(top_p))).hi >
                   materialize_cap)
            --top_p;
        if (top_p < 2)
            continue;
        const Word prefix = prefix_of(
            family, structures::interval({family, m}, BigInt(static_cast<unsigned long>(top_p))).hi);
        oracle::PalTree tree;
        tree.build(prefix.view());
        for (std::uint64_t pv = 2; pv <= top_p; ++pv) {
            const structures::OccInterval shifted =
                structures::interval({family, m}, BigInt(static_cast<unsigned long>(pv)));
            const auto size = static_cast<std::uint64_t>(to_u64(base.size(), "interval size"));
            for (std::uint64_t j = 0; j < size; ++j) {
                const auto n1 = static_cast<std::size_t>(to_u64(base.lo, "pos") + j);
                const auto np = static_cast<std::size_t>(to_u64(shifted.lo, "pos") + j);
                std::vector<std::string> at_base;
                for (std::size_t len : tree.palindromic_suffix_lengths(n1))
                    at_base.push_back(prefix.slice(n1 - len + 1, n1).str());
                std::vector<std::string> at_shifted;
                for (std::size_t len : tree.palindromic_suffix_lengths(np)) {
                    const Word w = prefix.slice(np - len + 1, np);
                    if (kernels::ker(w, family).order <= m)
                        at_shifted.push_back(w.str());
                }
                std::sort(at_base.begin(), at_base.end());
                std::sort(at_shifted.begin(), at_shifted.end());
                tally.expect(at_base == at_shifted, [&] {
                    return "m=" + std::to_string(m) + " p=" + std::to_string(pv) +
                           " slot=" + std::to_string(j) + ": suffix sets differ";
                });
            }
        }
    }
    return finish("shift-property", std::move(tally), t0);
}

SuiteResult verify_branch_coverage(std::uint64_t n_max) {
    const auto t0 = Clock::now();
    require(n_max >= 14 && n_max <= fib_count::table_cap, "branch sweep bounds");
    Tally tally;
    const std::vector<std::uint8_t> fib_table = fib_count::a_table(n_max);
    const std::vector<std::uint8_t> trib_table = trib_count::b_table(n_max);
    std::uint64_t fib_near = 0, fib_far = 0;
    std::uint64_t trib_near = 0, trib_mid = 0, trib_far = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const BigInt big_n = static_cast<unsigned long>(n);
        // Replicate the descents with branch accounting.
        {
            BigInt rest = big_n;
            long m = seq::fib_window(big_n);
            long lift = 0;
            while (m >= 3) {
                rest -= seq::fib(m - 1);
                ++lift;
                if (rest + 1 < seq::fib(m - 1)) {
                    m -= 2;
                    ++fib_far;
                } else {
                    m -= 1;
                    ++fib_near;
                }
            }
            const long base = rest == 3 ? 2 : 1;
            tally.expect(fib_count::a(big_n) == base + lift &&
                             fib_count::a(big_n) == fib_table[n],
                         [&] { return at_n(n, "fib descent vs table"); });
        }
        {
            BigInt rest = big_n;
            long m = seq::trib_window(big_n);
            long lift = 0;
            while (m >= 4) {
                rest -= seq::trib(m - 1);
                ++lift;
                if (rest + 1 < seq::kernel_number(m + 1)) {
                    m -= 3;
                    ++trib_far;
                } else if (rest + 1 < seq::kernel_number(m + 2)) {
                    m -= 2;
                    ++trib_mid;
                } else {
                    m -= 1;
                    ++trib_near;
                }
            }
            constexpr int base_b7[8] = {0, 1, 1, 2, 1, 2, 2, 3};
            const long base = base_b7[rest.get_ui()];
            tally.expect(trib_count::b(big_n) == base + lift &&
                             trib_count::b(big_n) == trib_table[n],
                         [&] { return at_n(n, "trib descent vs table"); });
        }
    }
    tally.expect(fib_near > 0 && fib_far > 0,
                 [&] { return std::string("a fib descent branch was never taken"); });
    tally.expect(trib_near > 0 && trib_mid > 0 && trib_far > 0,
                 [&] { return std::string("a trib descent branch was never taken"); });
    return finish("branch-coverage", std::move(tally), t0);
}

SuiteResult verify_random_oracle(Family family, std::uint64_t samples, std::uint64_t n_max,
                                 std::uint64_t seed, Exec exec) {
    const auto t0 = Clock::now();
    require(samples >= 1 && n_max >= 1, "random sweep needs positive bounds");
    Tally tally;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, n_max);
    std::vector<std::uint64_t> points(samples);
    for (std::uint64_t& n : points)
        n = pick(rng);
    std::vector<std::uint64_t> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::uint64_t top = sorted.back();
    const Word prefix = prefix_of(family, BigInt(static_cast<unsigned long>(top)));
    oracle::PalTree tree;
    std::vector<BigInt> totals(sorted.size());
    std::vector<std::uint64_t> counts(sorted.size());
    BigInt running = 0;
    std::size_t next = 0;
    for (std::uint64_t n = 1; n <= top && next < sorted.size(); ++n) {
        tree.push(prefix.at(n));
        running += tree.suffix_count_at(n);
        if (n == sorted[next]) {
            totals[next] = running;
            counts[next] = tree.suffix_count_at(n);
            ++next;
        }
    }
    const bool par = exec == Exec::parallel;
#pragma omp parallel if (par)
    {
        Tally local;
#pragma omp for schedule(dynamic, 16) nowait
        for (long long i = 0; i < static_cast<long long>(sorted.size()); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const BigInt n = static_cast<unsigned long>(sorted[idx]);
            local.expect(count_of(family, n) == counts[idx],
                         [&] { return at_n(sorted[idx], "per-position count vs tree"); });
            local.expect(total_of(family, n) == totals[idx],
                         [&] { return at_n(sorted[idx], "running total vs tree"); });
            if (sorted[idx] <= fib_count::table_cap) {
                const BigInt blocks = family == Family::fib
                                          ? fib_count::big_a_via_blocks(sorted[idx])
                                          : trib_count::big_b_via_blocks(sorted[idx]);
                local.expect(blocks == totals[idx],
                             [&] { return at_n(sorted[idx], "block total vs tree"); });
            }
        }
#pragma omp critical
        tally.absorb(local);
    }
    return finish("random-oracle", std::move(tally), t0);
}

std::vector<std::string> suite_names() {
    return {"oracle",          "lemma-lf",         "lemma-lt",
            "beatty",          "abelian",          "numeration",
            "identities",      "closed-forms",     "interval-partition",
            "chain-tiling",    "palprefix",        "cylinders",
            "richness",        "kernel-containment", "gap-projection",
            "kernel-shift",    "interval-oracle",  "shift-property",
            "branch-coverage", "random-oracle"};
}

SuiteResult run_suite(const std::string& name, Family family, std::uint64_t n_max,
                      std::uint64_t p_max, Exec exec) {
    const auto clamp64 = [](std::uint64_t v, std::uint64_t hi) { return std::min(v, hi); };
    const auto order_of = [&](std::uint64_t n) {
        const BigInt big_n = static_cast<unsigned long>(std::max<std::uint64_t>(n, 2));
        return family == Family::fib ? seq::fib_window(big_n) : seq::trib_window(big_n);
    };
    if (name == "oracle")
        return verify_oracle_equivalence(family, n_max, exec);
    if (name == "lemma-lf")
        return verify_lemma_lf(p_max, exec);
    if (name == "lemma-lt")
        return verify_lemma_lt(p_max);
    if (name == "beatty")
        return verify_beatty(p_max, exec);
    if (name == "abelian")
        return verify_abelian(family, n_max, exec);
    if (name == "numeration")
        return verify_numeration(clamp64(n_max, 100'000));
    if (name == "identities")
        return verify_identities(family, std::max<long>(2, order_of(n_max)));
    if (name == "closed-forms")
        return verify_closed_forms(family, std::max<long>(2, order_of(n_max)));
    if (name == "interval-partition")
        return verify_interval_partition(family, order_of(n_max), p_max);
    if (name == "chain-tiling")
        return verify_chain_tiling(family, n_max);
    if (name == "palprefix")
        return verify_palprefix(family, clamp64(n_max, 30'000), exec);
    if (name == "cylinders")
        return verify_cylinder_counts(family, clamp64(std::max<std::uint64_t>(n_max, 24), 30'000));
    if (name == "richness")
        return verify_richness(family, n_max);
    if (name == "kernel-containment")
        return verify_kernel_containment(family, std::max<long>(3, order_of(n_max)));
    if (name == "gap-projection")
        return verify_gap_projection(family, clamp64(std::max<std::uint64_t>(n_max / 500, 8), 60),
                                     clamp64(std::max<std::uint64_t>(p_max, 8), 80));
    if (name == "kernel-shift")
        return verify_kernel_shift(family, order_of(clamp64(n_max, 1'000'000)), p_max);
    if (name == "interval-oracle")
        return verify_interval_oracle(family, order_of(clamp64(n_max, 50'000)), p_max);
    if (name == "shift-property")
        return verify_shift_property(family, order_of(clamp64(n_max, 250)),
                                     std::max<std::uint64_t>(2, clamp64(p_max, 6)));
    if (name == "branch-coverage")
        return verify_branch_coverage(clamp64(std::max<std::uint64_t>(n_max, 14), 1'000'000));
    if (name == "random-oracle")
        return verify_random_oracle(family, clamp64(std::max<std::uint64_t>(p_max, 16), 5'000),
                                    std::max<std::uint64_t>(n_max, 2), 0xC0FFEEULL, exec);
    throw std::domain_error("unknown verification suite: " + name);
}

}  // namespace palcount::sweep
