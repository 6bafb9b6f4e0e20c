#include "janossy/specfun.hpp"

#include "janossy/errors.hpp"
#include "quad.hpp"

#include <cmath>

namespace janossy {

using detail::c128;
using detail::f128;

namespace {

const double kPi = 3.14159265358979323846;

inline f128 mag2(f128 x)
{
    return x * x;
}
inline f128 mag2(c128 z)
{
    return detail::abs2(z);
}

struct AiryConstants {
    f128 c1; // Ai(0)
    f128 c2; // -Ai'(0)
};

const AiryConstants& airy_constants()
{
    static const AiryConstants k = [] {
        f128 third = f128(1) / 3;
        return AiryConstants{1 / (cbrtq(f128(9)) * tgammaq(2 * third)),
                             1 / (cbrtq(f128(3)) * tgammaq(third))};
    }();
    return k;
}

// Ai = c1 f - c2 g, with f, g the two Maclaurin solutions of y'' = z y.
template <class T>
void maclaurin(T z, T& ai, T& aip)
{
    const auto& k = airy_constants();
    const f128 eps2 = f128(1e-70);
    T z3 = z * z * z;
    T t = 1, s = z, u = z * z / 2, v = 1;
    T f = t, g = s, fp = u, gp = v;
    for (int j = 1; j < 400; ++j) {
        f128 fj = j;
        t = t * z3 / ((3 * fj - 1) * (3 * fj));
        s = s * z3 / ((3 * fj) * (3 * fj + 1));
        v = v * z3 / ((3 * fj - 2) * (3 * fj));
        // u_1 = z^2/2 is already in fp; u_{j+1} = u_j z^3 / ((3j+2)(3j))
        u = u * z3 / ((3 * fj + 2) * (3 * fj));
        f += t;
        g += s;
        fp += u;
        gp += v;
        bool done = mag2(t) <= eps2 * mag2(f) && mag2(s) <= eps2 * mag2(g) &&
                    mag2(u) <= eps2 * mag2(fp) && mag2(v) <= eps2 * mag2(gp);
        if (done)
            break;
    }
    ai = k.c1 * f - k.c2 * g;
    aip = k.c1 * fp - k.c2 * gp;
}

} // namespace

AiryPairC airy_maclaurin(cplx z)
{
    c128 ai, aip;
    maclaurin<c128>(detail::to_c128(z), ai, aip);
    return {detail::to_cplx(ai), detail::to_cplx(aip)};
}

AiryPairC airy_asymptotic(cplx z)
{
    cplx sz = std::sqrt(z);
    cplx zeta = (2.0 / 3.0) * z * sz;
    cplx z14 = std::sqrt(sz);
    cplx e = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
    cplx inv = 1.0 / zeta;
    cplx su = 1.0, sv = 1.0, p = 1.0;
    double uk = 1.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        uk *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        double vk = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * uk;
        p *= -inv;
        cplx tu = uk * p, tv = vk * p;
        double m = std::max(std::abs(tu), std::abs(tv));
        if (m > last)
            break;
        su += tu;
        sv += tv;
        last = m;
        if (m < 1e-17 * std::min(std::abs(su), std::abs(sv)))
            break;
    }
    return {e / z14 * su, -z14 * e * sv};
}

AiryPairC airy(cplx z)
{
    double r = std::abs(z);
    if (!(r <= kAiryMaxRadius))
        throw DomainError("airy: |z| exceeds the validated range 40");
    if (r <= kAirySwitchRadius)
        return airy_maclaurin(z);
    if (std::abs(std::arg(z)) <= 2.0 * kPi / 3.0)
        return airy_asymptotic(z);
    const cplx w(-0.5, std::sqrt(3.0) / 2.0);
    const cplx w2 = std::conj(w);
    AiryPairC a = airy_asymptotic(w * z);
    AiryPairC b = airy_asymptotic(w2 * z);
    return {-w * a.ai - w2 * b.ai, -w2 * a.aip - w * b.aip};
}

cplx airy_ai(cplx z)
{
    return airy(z).ai;
}

cplx airy_ai_prime(cplx z)
{
    return airy(z).aip;
}

AiryPair airy(double x)
{
    if (std::abs(x) <= kAirySwitchRadius) {
        f128 ai, aip;
        maclaurin<f128>(x, ai, aip);
        return {static_cast<double>(ai), static_cast<double>(aip)};
    }
    AiryPairC c = airy(cplx(x, 0.0));
    return {c.ai.real(), c.aip.real()};
}

double airy_ai(double x)
{
    return airy(x).ai;
}

double airy_ai_prime(double x)
{
    return airy(x).aip;
}

} // namespace janossy
