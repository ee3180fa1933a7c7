// Command-line front end: count / table / verify / bench / structure.
//
// Result integers are printed as decimal strings (they routinely exceed 64
// bits), so every record table carries them in text cells. Exit codes:
// 0 success, 1 a verification suite or internal invariant failed, 2 usage.

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "palcount/bigint.hpp"
#include "palcount/fib_count.hpp"
#include "palcount/oracle.hpp"
#include "palcount/output.hpp"
#include "palcount/sequences.hpp"
#include "palcount/structures.hpp"
#include "palcount/sweep.hpp"
#include "palcount/trib_count.hpp"
#include "palcount/word.hpp"

namespace {

using palcount::BigInt;
using palcount::Family;
namespace out = palcount::output;

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

BigInt parse_positive(const std::string& text, const char* what) {
    const BigInt value = palcount::parse_decimal(text);
    if (value < 1)
        throw std::domain_error(std::string(what) + " must be at least 1");
    return value;
}

BigInt total_pairs(Family family, const BigInt& n) {
    return family == Family::fib ? palcount::fib_count::big_a(n)
                                 : palcount::trib_count::big_b(n);
}

BigInt total_pairs_via_blocks(Family family, std::uint64_t n) {
    return family == Family::fib ? palcount::fib_count::big_a_via_blocks(n)
                                 : palcount::trib_count::big_b_via_blocks(n);
}

BigInt total_pairs_via_oracle(Family family, std::uint64_t n) {
    const palcount::Word prefix = family == Family::fib
                                      ? palcount::sequences::fib_prefix(BigInt(n))
                                      : palcount::sequences::trib_prefix(BigInt(n));
    palcount::oracle::PalTree tree;
    tree.build(prefix.view());
    return tree.total_occurrences();
}

BigInt count_at(Family family, const BigInt& n) {
    return family == Family::fib ? palcount::fib_count::a(n) : palcount::trib_count::b(n);
}

struct CountOpts {
    std::string family_text;
    std::string n_text;
    std::string method_text{"auto"};
    std::string format_text{"csv"};
    std::string oracle_max_text{"1000000"};
    std::string cutoff_text{"10000"};
};

int run_count(const CountOpts& opts) {
    const Family family = palcount::parse_family(opts.family_text);
    const out::Format format = out::parse_format(opts.format_text);
    const BigInt n = parse_positive(opts.n_text, "--n");
    const BigInt oracle_max = palcount::parse_decimal(opts.oracle_max_text);
    const BigInt cutoff = palcount::parse_decimal(opts.cutoff_text);
    const BigInt table_cap{static_cast<unsigned long>(palcount::fib_count::table_cap)};

    std::string method = opts.method_text;
    if (method == "auto")
        method = n <= cutoff && n <= table_cap ? "recursion" : "closed";

    const Stopwatch timer;
    BigInt result;
    std::string method_label;
    if (method == "closed") {
        result = total_pairs(family, n);
        method_label = "closed-form";
    } else if (method == "recursion") {
        if (n > table_cap)
            throw std::domain_error("the recursion method materializes per-position tables; n must be at most " + table_cap.get_str());
        result = total_pairs_via_blocks(family, palcount::to_u64(n, "--n"));
        method_label = "recursion";
    } else {
        if (n > oracle_max)
            throw std::domain_error("the oracle method holds the prefix in memory; n must be at most --oracle-max (" + oracle_max.get_str() + ")");
        result = total_pairs_via_oracle(family, palcount::to_u64(n, "--n"));
        method_label = "oracle";
    }
    const double elapsed = timer.ms();

    out::RecordTable table({"query", "family", "n", "result", "elapsed_ms", "method"});
    table.add_row({out::str_cell("count"), out::str_cell(palcount::to_string(family)),
                   out::str_cell(n.get_str()), out::str_cell(result.get_str()),
                   out::num_cell(elapsed), out::str_cell(method_label)});
    std::cout << table.render(format);
    return 0;
}

struct TableOpts {
    std::string family_text;
    std::string lo_text;
    std::string hi_text;
    std::string format_text{"csv"};
};

int run_table(const TableOpts& opts) {
    const Family family = palcount::parse_family(opts.family_text);
    const out::Format format = out::parse_format(opts.format_text);
    const BigInt lo = parse_positive(opts.lo_text, "--lo");
    const BigInt hi = palcount::parse_decimal(opts.hi_text);
    if (hi < lo)
        throw std::domain_error("--hi must be at least --lo");
    if (hi - lo >= 1'000'000)
        throw std::domain_error("table ranges are capped at 1000000 rows");

    BigInt running = lo == 1 ? BigInt(0) : total_pairs(family, lo - 1);
    out::RecordTable table({"family", "n", "count", "total"});
    for (BigInt n = lo; n <= hi; ++n) {
        const BigInt here = count_at(family, n);
        running += here;
        table.add_row({out::str_cell(palcount::to_string(family)), out::str_cell(n.get_str()),
                       out::str_cell(here.get_str()), out::str_cell(running.get_str())});
    }
    std::cout << table.render(format);
    return 0;
}

struct VerifyOpts {
    std::string family_text;
    std::string n_max_text{"100000"};
    std::string p_max_text{"1000"};
    std::vector<std::string> suites;
    std::string exec_text{"parallel"};
    std::string format_text{"csv"};
};

int run_verify(const VerifyOpts& opts) {
    const Family family = palcount::parse_family(opts.family_text);
    const out::Format format = out::parse_format(opts.format_text);
    const std::uint64_t n_max = palcount::to_u64(parse_positive(opts.n_max_text, "--n-max"), "--n-max");
    const std::uint64_t p_max = palcount::to_u64(parse_positive(opts.p_max_text, "--p-max"), "--p-max");
    const auto exec = opts.exec_text == "serial" ? palcount::sweep::Exec::serial
                                                 : palcount::sweep::Exec::parallel;

    const std::vector<std::string> selected =
        opts.suites.empty() ? palcount::sweep::suite_names() : opts.suites;

    out::RecordTable table({"suite", "family", "checked", "failures", "seconds", "status"});
    std::uint64_t total_failures = 0;
    for (const std::string& name : selected) {
        const auto result = palcount::sweep::run_suite(name, family, n_max, p_max, exec);
        total_failures += result.failures;
        table.add_row({out::str_cell(name), out::str_cell(palcount::to_string(family)),
                       out::str_cell(std::to_string(result.checked)),
                       out::str_cell(std::to_string(result.failures)),
                       out::num_cell(result.seconds),
                       out::str_cell(result.ok() ? "pass" : "FAIL")});
        for (const std::string& note : result.notes)
            std::cerr << name << ": " << note << "\n";
    }
    std::cout << table.render(format);
    return total_failures == 0 ? 0 : 1;
}

struct BenchOpts {
    std::string family_text;
    std::vector<std::string> size_texts{"1e3", "1e6", "1e12"};
    std::string oracle_max_text{"1000000"};
    bool sweep{false};
    std::string format_text{"csv"};
};

int run_bench(const BenchOpts& opts) {
    const Family family = palcount::parse_family(opts.family_text);
    const out::Format format = out::parse_format(opts.format_text);
    const BigInt oracle_max = palcount::parse_decimal(opts.oracle_max_text);

    out::RecordTable table({"query", "family", "n", "result", "elapsed_ms", "method"});
    const auto add = [&](const BigInt& n, const BigInt& result, double elapsed, const char* method) {
        table.add_row({out::str_cell("bench"), out::str_cell(palcount::to_string(family)),
                       out::str_cell(n.get_str()), out::str_cell(result.get_str()),
                       out::num_cell(elapsed), out::str_cell(method)});
    };

    for (const std::string& size_text : opts.size_texts) {
        const BigInt n = parse_positive(size_text, "--sizes entry");
        {
            const Stopwatch timer;
            const BigInt result = total_pairs(family, n);
            add(n, result, timer.ms(), "closed-form");
        }
        if (n <= BigInt(static_cast<unsigned long>(palcount::fib_count::table_cap))) {
            const std::uint64_t n64 = palcount::to_u64(n, "size");
            const Stopwatch timer;
            const BigInt result = total_pairs_via_blocks(family, n64);
            add(n, result, timer.ms(), "recursion");
        }
        if (n <= oracle_max) {
            const std::uint64_t n64 = palcount::to_u64(n, "size");
            const Stopwatch timer;
            const BigInt result = total_pairs_via_oracle(family, n64);
            add(n, result, timer.ms(), "oracle");
        }
        if (opts.sweep && n <= 1'000'000) {
            const std::uint64_t n64 = palcount::to_u64(n, "size");
            for (const auto exec : {palcount::sweep::Exec::serial, palcount::sweep::Exec::parallel}) {
                const Stopwatch timer;
                const auto counts = palcount::sweep::count_range(family, 1, n64, exec);
                const std::uint64_t sum = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
                add(n, BigInt(static_cast<unsigned long>(sum)), timer.ms(),
                    exec == palcount::sweep::Exec::serial ? "sweep-serial" : "sweep-parallel");
            }
        }
    }
    std::cout << table.render(format);
    return 0;
}

struct StructureOpts {
    std::string family_text;
    long m{4};
    std::string p_text{"1"};
    long depth{-1};
    std::string format_text{"csv"};
};

int run_structure(const StructureOpts& opts) {
    const Family family = palcount::parse_family(opts.family_text);
    const out::Format format = out::parse_format(opts.format_text);
    const BigInt p = parse_positive(opts.p_text, "--p");
    const std::string rendered = format == out::Format::csv
                                     ? palcount::structures::export_edges(family, opts.m, p, opts.depth)
                                     : palcount::structures::export_json(family, opts.m, p, opts.depth);
    std::cout << rendered;
    if (rendered.empty() || rendered.back() != '\n')
        std::cout << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palindrome (occurrence) pair counts in Fibonacci and Tribonacci word prefixes"};
    app.require_subcommand(1);

    const auto family_opt = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--family", target, "word family: fib or trib")
            ->required()
            ->check(CLI::IsMember({"fib", "trib"}));
    };
    const auto format_opt = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--format", target, "output format: csv (default) or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CountOpts count_opts;
    CLI::App* count_cmd = app.add_subcommand(
        "count", "total (palindrome, occurrence) pairs in the length-n prefix");
    family_opt(count_cmd, count_opts.family_text);
    count_cmd->add_option("--n", count_opts.n_text, "prefix length, decimal or <digits>e<digits>")
        ->required();
    count_cmd->add_option("--method", count_opts.method_text,
                          "auto (default), closed, recursion or oracle")
        ->check(CLI::IsMember({"auto", "closed", "recursion", "oracle"}));
    format_opt(count_cmd, count_opts.format_text);
    count_cmd->add_option("--oracle-max", count_opts.oracle_max_text,
                          "largest n the oracle method accepts");
    count_cmd->add_option("--cutoff", count_opts.cutoff_text,
                          "auto picks recursion at or below this n, closed above");

    TableOpts table_opts;
    CLI::App* table_cmd = app.add_subcommand(
        "table", "per-position counts and running totals over [lo, hi]");
    family_opt(table_cmd, table_opts.family_text);
    table_cmd->add_option("--lo", table_opts.lo_text, "first position")->required();
    table_cmd->add_option("--hi", table_opts.hi_text, "last position")->required();
    format_opt(table_cmd, table_opts.format_text);

    VerifyOpts verify_opts;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run verification suites and report per-suite results");
    family_opt(verify_cmd, verify_opts.family_text);
    verify_cmd->add_option("--n-max", verify_opts.n_max_text, "position sweep bound");
    verify_cmd->add_option("--p-max", verify_opts.p_max_text, "occurrence-index sweep bound");
    verify_cmd->add_option("--suite", verify_opts.suites,
                           "suite name, repeatable; default runs all suites");
    verify_cmd->add_option("--exec", verify_opts.exec_text, "serial or parallel (default)")
        ->check(CLI::IsMember({"serial", "parallel"}));
    format_opt(verify_cmd, verify_opts.format_text);

    BenchOpts bench_opts;
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "time the counting paths against each other");
    family_opt(bench_cmd, bench_opts.family_text);
    bench_cmd->add_option("--sizes", bench_opts.size_texts,
                          "prefix lengths to time (default 1e3 1e6 1e12)");
    bench_cmd->add_option("--oracle-max", bench_opts.oracle_max_text,
                          "skip the oracle path above this n");
    bench_cmd->add_flag("--sweep", bench_opts.sweep,
                        "also time the serial and OpenMP per-position sweeps");
    format_opt(bench_cmd, bench_opts.format_text);

    StructureOpts structure_opts;
    CLI::App* structure_cmd = app.add_subcommand(
        "structure", "export the occurrence-interval decomposition tree");
    family_opt(structure_cmd, structure_opts.family_text);
    structure_cmd->add_option("--m", structure_opts.m, "kernel order of the root interval")
        ->required();
    structure_cmd->add_option("--p", structure_opts.p_text, "occurrence index of the root (default 1)");
    structure_cmd->add_option("--depth", structure_opts.depth,
                              "levels to expand; -1 (default) expands to the leaves");
    format_opt(structure_cmd, structure_opts.format_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count_cmd)
            return run_count(count_opts);
        if (*table_cmd)
            return run_table(table_opts);
        if (*verify_cmd)
            return run_verify(verify_opts);
        if (*bench_cmd)
            return run_bench(bench_opts);
        if (*structure_cmd)
            return run_structure(structure_opts);
    } catch (const palcount::invariant_error& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
