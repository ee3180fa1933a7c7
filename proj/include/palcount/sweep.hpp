#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palcount/bigint.hpp"
#include "palcount/word.hpp"

// Bulk verification kernels. Each kernel exists in a serial and an
// OpenMP-parallel flavor selected by Exec; the serial flavor is the reference
// the parallel one is tested against, and the bench command compares the two.
// Everything here is safe to parallelize because the underlying functions are
// pure and their memo tables are thread_local.
namespace palcount::sweep {

enum class Exec { serial, parallel };

// Per-position fast-path counts a(n) / b(n) for n in [lo, hi].
std::vector<std::uint64_t> count_range(Family family, std::uint64_t lo, std::uint64_t hi, Exec exec);

// Center-expansion palindromic-suffix counts (the naive oracle check).
std::vector<std::uint64_t> pal_suffix_counts_naive_sweep(const Word& w, Exec exec);

// Outcome of one verification suite.
struct SuiteResult {
    std::string name;
    std::uint64_t checked{0};
    std::uint64_t failures{0};
    double seconds{0.0};
    std::vector<std::string> notes;  // first few failure descriptions

    bool ok() const { return failures == 0; }
};

// Identity and cross-validation suites. Bounds are inclusive maxima; suites
// apply them to whatever quantity they sweep (positions, occurrence indices,
// kernel orders). Each returns counts instead of throwing so the CLI can
// report every suite even after a failure.
SuiteResult verify_oracle_equivalence(Family family, std::uint64_t n_max, Exec exec);
SuiteResult verify_lemma_lf(std::uint64_t p_max, Exec exec);
SuiteResult verify_lemma_lt(std::uint64_t p_max);
SuiteResult verify_beatty(std::uint64_t p_max, Exec exec);
SuiteResult verify_abelian(Family family, std::uint64_t n_max, Exec exec);
SuiteResult verify_numeration(std::uint64_t n_max);
SuiteResult verify_identities(Family family, long m_max);
SuiteResult verify_closed_forms(Family family, long m_max);
SuiteResult verify_interval_partition(Family family, long m_max, std::uint64_t p_max);
SuiteResult verify_chain_tiling(Family family, std::uint64_t n_max);
SuiteResult verify_palprefix(Family family, std::uint64_t n_max, Exec exec);
SuiteResult verify_cylinder_counts(Family family, std::uint64_t n_max);
SuiteResult verify_richness(Family family, std::uint64_t n_max);
SuiteResult verify_kernel_containment(Family family, long m_max);
SuiteResult verify_gap_projection(Family family, std::size_t len_max, std::size_t depth);
SuiteResult verify_kernel_shift(Family family, long m_max, std::uint64_t p_max);
SuiteResult verify_interval_oracle(Family family, long m_max, std::uint64_t p_max);
SuiteResult verify_shift_property(Family family, long m_max, std::uint64_t p_max);
SuiteResult verify_branch_coverage(std::uint64_t n_max);
SuiteResult verify_random_oracle(Family family, std::uint64_t samples, std::uint64_t n_max,
                                 std::uint64_t seed, Exec exec);

// Names understood by the verify CLI command, in run order.
std::vector<std::string> suite_names();

// Runs one suite by name with the given bounds, for one family.
// Family-agnostic suites ignore the family argument.
SuiteResult run_suite(const std::string& name, Family family, std::uint64_t n_max,
                      std::uint64_t p_max, Exec exec);

}  // namespace palcount::sweep
