#include "janossy/specfun.hpp"

#include "janossy/errors.hpp"
#include "quad.hpp"

#include <cmath>

namespace janossy {

using detail::c128;
using detail::f128;

namespace {

const double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

f128 euler_gamma()
{
    static const f128 g = strtoflt128("0.57721566490153286060651209008240243104215933593992", nullptr);
    return g;
}

inline f128 qlog(f128 x)
{
    return logq(x);
}
inline c128 qlog(c128 z)
{
    return clogq(z);
}
inline f128 qmag2(f128 x)
{
    return x * x;
}
inline f128 qmag2(c128 z)
{
    return detail::abs2(z);
}

template <class T>
struct Series01 {
    T i0, i1, k0, k1;
};

// Ascending series for I0, I1, K0, K1; K's need w off the negative axis.
template <class T>
Series01<T> ascending(T w)
{
    T q = w * w / 4;
    T t = 1;
    T si0 = 1, si1 = 1, sk0 = 0, sk1 = -2 * euler_gamma() + 1; // k = 0 terms
    f128 hk = 0;                                            // harmonic H_k
    f128 biggest = 1;
    const f128 eps2 = f128(1e-72);
    for (int k = 1; k < 600; ++k) {
        f128 fk = k;
        t = t * q / (fk * fk);
        hk += 1 / fk;
        f128 hnext = hk + 1 / (fk + 1);
        si0 += t;
        si1 += t / (fk + 1);
        sk0 += hk * t;
        sk1 += (-2 * euler_gamma() + hk + hnext) * t / (fk + 1);
        f128 m2 = qmag2(t) * (hnext + 2) * (hnext + 2);
        if (m2 > biggest)
            biggest = m2;
        if (m2 < eps2 * biggest && k > 2)
            break;
    }
    T lg = qlog(w / 2);
    Series01<T> r;
    r.i0 = si0;
    r.i1 = w / 2 * si1;
    r.k0 = -(lg + euler_gamma()) * si0 + sk0;
    r.k1 = 1 / w + lg * r.i1 - w / 4 * sk1;
    return r;
}

// K_nu(r e^{i theta}) for nu = 0, 1 by the large-argument expansion. theta may
// leave (-pi, pi]; the expansion holds for |theta| < 3pi/2.
BesselPairC k_asymptotic(double r, double theta)
{
    cplx w = std::polar(r, theta);
    cplx pref = std::sqrt(kPi / (2.0 * r)) * std::polar(1.0, -0.5 * theta) * std::exp(-w);
    cplx inv = std::polar(1.0 / r, -theta);
    cplx s0 = 1.0, s1 = 1.0, p = 1.0;
    double a0 = 1.0, a1 = 1.0, last = 1.0;
    for (int k = 1; k < 400; ++k) {
        double odd = (2.0 * k - 1.0) * (2.0 * k - 1.0);
        a0 *= (0.0 - odd) / (8.0 * k);
        a1 *= (4.0 - odd) / (8.0 * k);
        p *= inv;
        double m = std::max(std::abs(a0), std::abs(a1)) * std::abs(p);
        if (m > last)
            break;
        s0 += a0 * p;
        s1 += a1 * p;
        last = m;
        if (m < 1e-18)
            break;
    }
    return {pref * s0, pref * s1};
}

// I_nu(x) e^{-x} for real x >= 17 by the large-argument expansion.
std::pair<double, double> i_asymptotic_scaled(double x)
{
    double inv = 1.0 / x;
    double s0 = 1.0, s1 = 1.0, p = 1.0, a0 = 1.0, a1 = 1.0, last = 1.0;
    for (int k = 1; k < 400; ++k) {
        double odd = (2.0 * k - 1.0) * (2.0 * k - 1.0);
        a0 *= (0.0 - odd) / (8.0 * k);
        a1 *= (4.0 - odd) / (8.0 * k);
        p *= -inv;
        double m = std::max(std::abs(a0), std::abs(a1)) * std::abs(p);
        if (m > last)
            break;
        s0 += a0 * p;
        s1 += a1 * p;
        last = m;
        if (m < 1e-18)
            break;
    }
    double pref = 1.0 / std::sqrt(2.0 * kPi * x);
    return {pref * s0, pref * s1};
}

void check_range(double r)
{
    if (!(r <= kBesselMaxRadius))
        throw DomainError("bessel: |argument| exceeds the validated range 200");
}

} // namespace

BesselPairC bessel_i01_series(cplx w)
{
    auto s = ascending<c128>(detail::to_c128(w));
    return {detail::to_cplx(s.i0), detail::to_cplx(s.i1)};
}

BesselPairC bessel_k01_series(cplx w)
{
    auto s = ascending<c128>(detail::to_c128(w));
    return {detail::to_cplx(s.k0), detail::to_cplx(s.k1)};
}

BesselPairC bessel_k01_asymptotic(cplx w)
{
    return k_asymptotic(std::abs(w), std::arg(w));
}

BesselPairC bessel_i01_asymptotic(cplx w)
{
    double r = std::abs(w), th = std::arg(w);
    if (th >= 0.0) {
        BesselPairC far = k_asymptotic(r, th - kPi);
        BesselPairC near = k_asymptotic(r, th);
        return {(far.order0 - near.order0) / (kPi * kI), (far.order1 + near.order1) / (kPi * kI)};
    }
    BesselPairC far = k_asymptotic(r, th + kPi);
    BesselPairC near = k_asymptotic(r, th);
    return {(near.order0 - far.order0) / (kPi * kI), (-near.order1 - far.order1) / (kPi * kI)};
}

BesselPairC bessel_i01(cplx w)
{
    double r = std::abs(w);
    check_range(r);
    return r <= kBesselSwitchRadius ? bessel_i01_series(w) : bessel_i01_asymptotic(w);
}

BesselPairC bessel_k01(cplx w)
{
    double r = std::abs(w);
    check_range(r);
    if (r == 0.0)
        throw DomainError("bessel_k: K is singular at 0");
    return r <= kBesselSwitchRadius ? bessel_k01_series(w) : bessel_k01_asymptotic(w);
}

cplx bessel_i0(cplx w)
{
    return bessel_i01(w).order0;
}
cplx bessel_i1(cplx w)
{
    return bessel_i01(w).order1;
}
cplx bessel_k0(cplx w)
{
    return bessel_k01(w).order0;
}
cplx bessel_k1(cplx w)
{
    return bessel_k01(w).order1;
}

Scaled bessel_i0_scaled(double x)
{
    x = std::abs(x);
    check_range(x);
    if (x <= kBesselSwitchRadius)
        return Scaled::from_double(static_cast<double>(ascending<f128>(x).i0));
    return Scaled::from_log(x + std::log(i_asymptotic_scaled(x).first));
}

Scaled bessel_i1_scaled(double x)
{
    double sign = x < 0.0 ? -1.0 : 1.0;
    x = std::abs(x);
    check_range(x);
    if (x <= kBesselSwitchRadius)
        return Scaled::from_double(sign * static_cast<double>(ascending<f128>(x).i1));
    return Scaled::from_log(x + std::log(i_asymptotic_scaled(x).second), sign);
}

double bessel_i0(double x)
{
    return bessel_i0_scaled(x).to_double();
}

double bessel_i1(double x)
{
    return bessel_i1_scaled(x).to_double();
}

double bessel_k0(double x)
{
    if (!(x > 0.0))
        throw DomainError("bessel_k0: argument must be positive");
    check_range(x);
    if (x <= kBesselSwitchRadius)
        return static_cast<double>(ascending<f128>(x).k0);
    return k_asymptotic(x, 0.0).order0.real();
}

double bessel_k1(double x)
{
    if (!(x > 0.0))
        throw DomainError("bessel_k1: argument must be positive");
    check_range(x);
    if (x <= kBesselSwitchRadius)
        return static_cast<double>(ascending<f128>(x).k1);
    return k_asymptotic(x, 0.0).order1.real();
}

// H^(1)_nu(z) = (2/pi) i^{-nu-1} K_nu(-iz), H^(2)_nu(z) = (2/pi) i^{nu+1} K_nu(iz)
cplx hankel_h0_1(cplx z)
{
    return -2.0 * kI / kPi * bessel_k0(-kI * z);
}
cplx hankel_h0_2(cplx z)
{
    return 2.0 * kI / kPi * bessel_k0(kI * z);
}
cplx hankel_h1_1(cplx z)
{
    return -2.0 / kPi * bessel_k1(-kI * z);
}
cplx hankel_h1_2(cplx z)
{
    return -2.0 / kPi * bessel_k1(kI * z);
}

} // namespace janossy
