#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "palcount/oracle.hpp"
#include "palcount/sequences.hpp"
#include "palcount/sweep.hpp"
#include "palcount/word.hpp"

using palcount::Family;
using palcount::Word;
namespace sw = palcount::sweep;
namespace seq = palcount::sequences;

TEST_SUITE("parallel") {

TEST_CASE("parallel count sweeps match the serial reference") {
    for (const Family family : {Family::fib, Family::trib}) {
        const auto serial = sw::count_range(family, 1, 50000, sw::Exec::serial);
        const auto parallel = sw::count_range(family, 1, 50000, sw::Exec::parallel);
        CHECK(serial == parallel);
        const auto offset_serial = sw::count_range(family, 777, 1500, sw::Exec::serial);
        const auto offset_parallel = sw::count_range(family, 777, 1500, sw::Exec::parallel);
        CHECK(offset_serial == offset_parallel);
        REQUIRE(offset_serial.size() == 1500 - 777 + 1);
    }
}

TEST_CASE("parallel naive counter matches serial and the tree") {
    const Word prefix = seq::trib_prefix(2500);
    const auto serial = sw::pal_suffix_counts_naive_sweep(prefix, sw::Exec::serial);
    const auto parallel = sw::pal_suffix_counts_naive_sweep(prefix, sw::Exec::parallel);
    CHECK(serial == parallel);
    palcount::oracle::PalTree tree;
    tree.build(prefix.view());
    CHECK(serial == tree.suffix_counts());
}

TEST_CASE("every verification suite passes at smoke bounds, both flavors") {
    for (const std::string& name : sw::suite_names()) {
        for (const Family family : {Family::fib, Family::trib}) {
            for (const auto exec : {sw::Exec::serial, sw::Exec::parallel}) {
                const auto result = sw::run_suite(name, family, 1500, 30, exec);
                INFO(name << " family=" << palcount::to_string(family) << " exec="
                          << (exec == sw::Exec::serial ? "serial" : "parallel"));
                INFO((result.notes.empty() ? std::string("no notes") : result.notes.front()));
                CHECK(result.failures == 0);
                CHECK(result.checked > 0);
            }
        }
    }
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(sw::run_suite("nope", Family::fib, 100, 10, sw::Exec::serial),
                    std::domain_error);
}

}  // TEST_SUITE
