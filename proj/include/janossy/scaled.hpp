#pragma once

#include <cmath>
#include <cstdint>

namespace janossy {

// value = mantissa * 10^exponent, with |mantissa| in [1, 10) unless zero.
struct Scaled {
    double mantissa = 0.0;
    std::int64_t exponent = 0;

    static Scaled from_double(double v);
    // exp(log_magnitude) * sign without forming the exponential.
    static Scaled from_log(double log_magnitude, double sign = 1.0);

    Scaled normalized() const;
    double to_double() const;
    // natural log of |value|; -inf for zero
    double log_abs() const;
    bool is_zero() const { return mantissa == 0.0; }
};

Scaled operator*(const Scaled& a, const Scaled& b);
Scaled operator/(const Scaled& a, const Scaled& b);
Scaled operator*(const Scaled& a, double b);
Scaled operator-(const Scaled& a);
Scaled operator+(const Scaled& a, const Scaled& b);
Scaled operator-(const Scaled& a, const Scaled& b);

} // namespace janossy
