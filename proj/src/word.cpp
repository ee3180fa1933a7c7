#include "palcount/word.hpp"

#include <algorithm>
#include <ostream>

#include "palcount/counts.hpp"

namespace palcount {

std::string to_string(Family family) {
    return family == Family::fib ? "fib" : "trib";
}

Family parse_family(const std::string& text) {
    if (text == "fib")
        return Family::fib;
    if (text == "trib")
        return Family::trib;
    throw std::invalid_argument("unknown family: " + text);
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char ch : letters_)
        if (ch != 'a' && ch != 'b' && ch != 'c')
            throw std::invalid_argument(std::string("letter outside {a,b,c}: '") + ch + "'");
}

char Word::at(std::size_t i) const {
    if (i < 1 || i > letters_.size())
        throw std::out_of_range("word index " + std::to_string(i) + " out of [1, " +
                                std::to_string(letters_.size()) + "]");
    return letters_[i - 1];
}

Word Word::slice(std::size_t i, std::size_t j) const {
    if (i < 1 || i > letters_.size() + 1 || j + 1 < i || j > letters_.size())
        throw std::out_of_range("bad slice [" + std::to_string(i) + ", " + std::to_string(j) + "]");
    Word out;
    out.letters_ = letters_.substr(i - 1, j - i + 1);
    return out;
}

Word Word::reversed() const {
    Word out;
    out.letters_.assign(letters_.rbegin(), letters_.rend());
    return out;
}

bool Word::is_palindrome() const {
    return std::equal(letters_.begin(), letters_.begin() + letters_.size() / 2, letters_.rbegin());
}

std::uint64_t Word::count(char letter) const {
    return static_cast<std::uint64_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.str();
}

const BigInt& CountSlice::at_position(const BigInt& pos) const {
    if (pos < start || pos > end())
        throw std::out_of_range("position outside slice");
    return values[mpz_class(pos - start).get_ui()];
}

}  // namespace palcount
