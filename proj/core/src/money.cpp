#include "interplan/money.hpp"

#include <cctype>
#include <stdexcept>

namespace interplan {

Money Money::parse(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("not a money value (expected e.g. \"25\" or \"12.5\"): '" +
                                    std::string(text) + "'");
    };

    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }

    std::size_t digits_begin = pos;
    std::int64_t units = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        int d = text[pos] - '0';
        if (units > (INT64_MAX - d) / 10) fail();
        units = units * 10 + d;
        ++pos;
    }
    if (pos == digits_begin) fail();

    std::int64_t tenth = 0;
    if (pos < text.size()) {
        if (text[pos] != '.') fail();
        ++pos;
        if (pos + 1 != text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        tenth = text[pos] - '0';
        ++pos;
    }

    if (units > (INT64_MAX - tenth) / 10) fail();
    std::int64_t tenths = units * 10 + tenth;
    return from_tenths(negative ? -tenths : tenths);
}

std::string Money::str() const {
    std::int64_t t = tenths_;
    std::string sign;
    if (t < 0) {
        sign = "-";
        t = -t;
    }
    std::string out = sign + std::to_string(t / 10);
    if (t % 10 != 0) {
        out += '.';
        out += static_cast<char>('0' + t % 10);
    }
    return out;
}

} // namespace interplan
