#include "janossy/scaled.hpp"

#include <cmath>
#include <limits>

namespace janossy {

namespace {
constexpr double kLn10 = 2.302585092994045684;
}

Scaled Scaled::from_double(double v)
{
    return Scaled{v, 0}.normalized();
}

Scaled Scaled::from_log(double log_magnitude, double sign)
{
    if (log_magnitude == -std::numeric_limits<double>::infinity() || sign == 0.0)
        return {};
    double l10 = log_magnitude / kLn10;
    double e = std::floor(l10);
    Scaled s{std::copysign(std::pow(10.0, l10 - e), sign), static_cast<std::int64_t>(e)};
    return s.normalized();
}

Scaled Scaled::normalized() const
{
    if (mantissa == 0.0 || !std::isfinite(mantissa))
        return {mantissa, mantissa == 0.0 ? 0 : exponent};
    int shift = static_cast<int>(std::floor(std::log10(std::abs(mantissa))));
    Scaled s{mantissa * std::pow(10.0, -shift), exponent + shift};
    if (std::abs(s.mantissa) >= 10.0) {
        s.mantissa /= 10.0;
        s.exponent += 1;
    } else if (std::abs(s.mantissa) < 1.0) {
        s.mantissa *= 10.0;
        s.exponent -= 1;
    }
    return s;
}

double Scaled::to_double() const
{
    if (mantissa == 0.0)
        return 0.0;
    if (exponent > 400)
        return std::copysign(std::numeric_limits<double>::infinity(), mantissa);
    if (exponent < -400)
        return std::copysign(0.0, mantissa);
    return mantissa * std::pow(10.0, static_cast<double>(exponent));
}

double Scaled::log_abs() const
{
    if (mantissa == 0.0)
        return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(mantissa)) + static_cast<double>(exponent) * kLn10;
}

Scaled operator*(const Scaled& a, const Scaled& b)
{
    return Scaled{a.mantissa * b.mantissa, a.exponent + b.exponent}.normalized();
}

Scaled operator/(const Scaled& a, const Scaled& b)
{
    return Scaled{a.mantissa / b.mantissa, a.exponent - b.exponent}.normalized();
}

Scaled operator*(const Scaled& a, double b)
{
    return Scaled{a.mantissa * b, a.exponent}.normalized();
}

Scaled operator-(const Scaled& a)
{
    return {-a.mantissa, a.exponent};
}

Scaled operator+(const Scaled& a, const Scaled& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const Scaled& big = a.exponent >= b.exponent ? a : b;
    const Scaled& small = a.exponent >= b.exponent ? b : a;
    std::int64_t d = big.exponent - small.exponent;
    if (d > 40)
        return big;
    double m = big.mantissa + small.mantissa * std::pow(10.0, -static_cast<double>(d));
    return Scaled{m, big.exponent}.normalized();
}

Scaled operator-(const Scaled& a, const Scaled& b)
{
    return a + (-b);
}

} // namespace janossy
