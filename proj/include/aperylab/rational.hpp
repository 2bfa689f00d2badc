#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "aperylab/checked.hpp"

namespace aperylab {

/// Exact rational number in lowest terms with a positive denominator.
///
/// All arithmetic is overflow-checked; a result that does not fit in 64 bits
/// throws aperylab::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int value) : num_(value) {}  // NOLINT: implicit by intent
    Rational(Int numerator, Int denominator);

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "3/2", or "1" when the denominator is 1.
    std::string str() const;
    /// Decimal rendering with the given number of fractional digits.
    std::string decimal(int digits = 6) const;

    /// Parses "p/q" or "p".
    static Rational parse(const std::string& text);

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace aperylab
