#pragma once

#include <cstddef>
#include <vector>

#include "palcount/bigint.hpp"

namespace palcount {

// Contiguous run of per-position counts: values[k] is the count at position
// start + k. Used both by the block recursions and by the oracle, so it lives
// outside either module.
struct CountSlice {
    BigInt start{1};
    std::vector<BigInt> values;

    std::size_t size() const { return values.size(); }
    BigInt end() const { return start + static_cast<long>(values.size()) - 1; }

    // Count at absolute position pos (1-based), which must lie in the slice.
    const BigInt& at_position(const BigInt& pos) const;

    bool operator==(const CountSlice&) const = default;
};

}  // namespace palcount
