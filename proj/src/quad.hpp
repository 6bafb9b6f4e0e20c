#pragma once

// Internal quad-precision helpers for power series whose terms cancel.

#include <quadmath.h>

#include <complex>

namespace janossy::detail {

using f128 = __float128;
using c128 = __complex128;

inline c128 make_c128(f128 re, f128 im)
{
    c128 z;
    __real__ z = re;
    __imag__ z = im;
    return z;
}

inline c128 to_c128(std::complex<double> z)
{
    return make_c128(z.real(), z.imag());
}

inline std::complex<double> to_cplx(c128 z)
{
    return {static_cast<double>(__real__ z), static_cast<double>(__imag__ z)};
}

inline f128 abs2(c128 z)
{
    return __real__ z * __real__ z + __imag__ z * __imag__ z;
}

} // namespace janossy::detail
