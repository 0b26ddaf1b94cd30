#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fixedpoint {

/// Raised whenever a 64-bit coefficient, exponent or rational component
/// would leave its range. Results are never wrapped.
class ArithmeticOverflow : public std::overflow_error {
  public:
    explicit ArithmeticOverflow(const std::string &what)
        : std::overflow_error("arithmetic overflow: " + what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

} // namespace fixedpoint
