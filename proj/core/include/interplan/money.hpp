#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace interplan {

// Exact monetary amount held as an integer count of tenths of a unit.
// All arithmetic and comparisons are exact; there is no floating point
// anywhere on the money path.
class Money {
public:
    constexpr Money() = default;

    static constexpr Money from_tenths(std::int64_t tenths) {
        Money m;
        m.tenths_ = tenths;
        return m;
    }

    // Accepts an optional sign, digits, and at most one fractional digit:
    // "25", "12.5", "-0.4". Anything else throws std::invalid_argument.
    static Money parse(std::string_view text);

    constexpr std::int64_t tenths() const { return tenths_; }

    // Canonical rendering: no trailing ".0", one fractional digit otherwise.
    std::string str() const;

    constexpr Money& operator+=(Money other) {
        tenths_ += other.tenths_;
        return *this;
    }
    constexpr Money& operator-=(Money other) {
        tenths_ -= other.tenths_;
        return *this;
    }

    friend constexpr Money operator+(Money a, Money b) { return from_tenths(a.tenths_ + b.tenths_); }
    friend constexpr Money operator-(Money a, Money b) { return from_tenths(a.tenths_ - b.tenths_); }
    friend constexpr Money operator-(Money a) { return from_tenths(-a.tenths_); }
    friend constexpr Money operator*(Money a, std::int64_t n) { return from_tenths(a.tenths_ * n); }
    friend constexpr Money operator*(std::int64_t n, Money a) { return a * n; }

    friend constexpr auto operator<=>(Money, Money) = default;

private:
    std::int64_t tenths_ = 0;
};

} // namespace interplan
