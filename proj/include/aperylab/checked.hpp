#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aperylab {

// Semigroup values and factorization counts are 64-bit signed integers.
using Int = std::int64_t;

/// Thrown when an intermediate value leaves the 64-bit range.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

}  // namespace aperylab
