#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "palcount/bigint.hpp"

namespace palcount {

enum class Family { fib, trib };

std::string to_string(Family family);
Family parse_family(const std::string& text);

// Raised when a word handed to a factor-based operation does not occur in
// the selected infinite word.
struct not_a_factor_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Finite word over {a, b, c} with 1-based indexing, matching the conventions
// of the counting formulas (positions and slices start at 1, and slice(i, i-1)
// is the empty word).
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    char at(std::size_t i) const;                       // 1-based
    Word slice(std::size_t i, std::size_t j) const;     // 1-based, inclusive; j == i-1 gives ""
    Word reversed() const;
    bool is_palindrome() const;
    std::uint64_t count(char letter) const;

    std::string_view view() const { return letters_; }
    const std::string& str() const { return letters_; }

    Word operator+(const Word& rhs) const { return Word(letters_ + rhs.letters_); }
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Letter counts of a prefix. Fibonacci-word vectors always have c == 0.
struct AbelianVector {
    BigInt a{0};
    BigInt b{0};
    BigInt c{0};

    BigInt total() const { return a + b + c; }
    bool operator==(const AbelianVector&) const = default;
};

}  // namespace palcount
