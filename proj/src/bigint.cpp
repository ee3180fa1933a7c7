#include "palcount/bigint.hpp"

#include <cctype>

namespace palcount {

BigInt parse_decimal(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty integer literal");

    auto digits = [](const std::string& s) {
        if (s.empty())
            return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };

    auto e = text.find('e');
    if (e == std::string::npos)
        e = text.find('E');
    if (e == std::string::npos) {
        if (!digits(text))
            throw std::invalid_argument("not a decimal integer: " + text);
        return BigInt(text);
    }

    const std::string mantissa = text.substr(0, e);
    const std::string exponent = text.substr(e + 1);
    if (!digits(mantissa) || !digits(exponent))
        throw std::invalid_argument("not a decimal integer: " + text);
    const unsigned long k = std::stoul(exponent);
    if (k > 100'000)
        throw std::invalid_argument("exponent out of range: " + text);

    BigInt value(mantissa);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    return value * scale;
}

}  // namespace palcount
