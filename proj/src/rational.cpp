#include "aperylab/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace aperylab {

Rational::Rational(Int numerator, Int denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (denominator < 0) {
        numerator = checked_sub(0, numerator);
        denominator = checked_sub(0, denominator);
    }
    const Int g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << to_double();
    return os.str();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t used = 0;
    try {
        if (slash == std::string::npos) {
            const Int v = std::stoll(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return Rational(v);
        }
        const std::string lhs = text.substr(0, slash);
        const std::string rhs = text.substr(slash + 1);
        std::size_t used_rhs = 0;
        const Int n = std::stoll(lhs, &used);
        const Int d = std::stoll(rhs, &used_rhs);
        if (used != lhs.size() || used_rhs != rhs.size()) {
            throw std::invalid_argument(text);
        }
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    }
}

Rational& Rational::operator+=(const Rational& rhs) {
    // Cross-reduce through the denominators' gcd to keep intermediates small.
    const Int g = std::gcd(den_, rhs.den_);
    const Int lhs_scale = rhs.den_ / g;
    const Int rhs_scale = den_ / g;
    const Int n = checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale));
    const Int d = checked_mul(den_, lhs_scale);
    *this = Rational(n, d);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    const Int g1 = std::gcd(num_, rhs.den_);
    const Int g2 = std::gcd(rhs.num_, den_);
    // Denominators are positive, so both gcds are at least 1.
    const Int n = checked_mul(num_ / g1, rhs.num_ / g2);
    const Int d = checked_mul(den_ / g2, rhs.den_ / g1);
    *this = Rational(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) {
        throw std::domain_error("division by zero rational");
    }
    return *this *= Rational(rhs.den_, rhs.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_sub(0, num_);
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    // 128-bit cross products cannot overflow for 64-bit operands.
    const __int128 a = static_cast<__int128>(lhs.num_) * rhs.den_;
    const __int128 b = static_cast<__int128>(rhs.num_) * lhs.den_;
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace aperylab
