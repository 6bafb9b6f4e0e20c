#pragma once

#include "janossy/scaled.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace janossy {

using cplx = std::complex<double>;

// Maclaurin series inside this radius, asymptotic expansion outside.
inline constexpr double kAirySwitchRadius = 7.0;
inline constexpr double kBesselSwitchRadius = 17.0;
inline constexpr double kAiryMaxRadius = 40.0;
inline constexpr double kBesselMaxRadius = 200.0;

struct AiryPair {
    double ai = 0.0;
    double aip = 0.0;
};

struct AiryPairC {
    cplx ai;
    cplx aip;
};

AiryPair airy(double x);
double airy_ai(double x);
double airy_ai_prime(double x);

AiryPairC airy(cplx z);
cplx airy_ai(cplx z);
cplx airy_ai_prime(cplx z);

// The two representations, exposed so their agreement can be tested.
AiryPairC airy_maclaurin(cplx z);
// Valid for |arg z| <= 2pi/3.
AiryPairC airy_asymptotic(cplx z);

struct BesselPairC {
    cplx order0;
    cplx order1;
};

double bessel_i0(double x);
double bessel_i1(double x);
// I0, I1 with a separate decimal exponent; never overflows for x <= 200.
Scaled bessel_i0_scaled(double x);
Scaled bessel_i1_scaled(double x);
double bessel_k0(double x);
double bessel_k1(double x);

// Principal branches; validated for |w| <= 200, |arg w| <= 2pi/3 (K) and
// |arg w| <= pi/2 (I).
BesselPairC bessel_i01(cplx w);
BesselPairC bessel_k01(cplx w);
cplx bessel_i0(cplx w);
cplx bessel_i1(cplx w);
cplx bessel_k0(cplx w);
cplx bessel_k1(cplx w);

BesselPairC bessel_i01_series(cplx w);
BesselPairC bessel_k01_series(cplx w);
BesselPairC bessel_i01_asymptotic(cplx w);
BesselPairC bessel_k01_asymptotic(cplx w);

// Hankel functions of order 0 and 1, |arg z| < pi/2.
cplx hankel_h0_1(cplx z);
cplx hankel_h0_2(cplx z);
cplx hankel_h1_1(cplx z);
cplx hankel_h1_2(cplx z);

struct Matrix2 {
    cplx e11, e12, e21, e22;

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 diag(cplx a, cplx d) { return {a, 0.0, 0.0, d}; }
    cplx det() const { return e11 * e22 - e12 * e21; }
    Matrix2 inverse() const;
    double max_abs() const;
    bool finite() const;
};

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix2 operator-(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(cplx s, const Matrix2& a);

// Principal branches with the cut on the negative real axis. A signed-zero
// imaginary part selects the side of the cut: -2 + 0i is the upper limit,
// -2 - 0i the lower one.
struct BranchConvention {
    static cplx sqrt(cplx z) { return std::sqrt(z); }
    static cplx pow32(cplx z) { return z * std::sqrt(z); }
    static cplx pow14(cplx z) { return std::sqrt(std::sqrt(z)); }
    static cplx log(cplx z) { return std::log(z); }
};

// Sectors cut out by the negative real axis and the rays arg = +-2pi/3.
enum class QRegion { I, II, III };

// Region containing zeta; on R_- the sign of the imaginary zero decides.
QRegion q_region(cplx zeta);
Matrix2 bessel_Q(cplx zeta, QRegion region);
Matrix2 bessel_Q(cplx zeta);

// Airy model: sectors (0, 2pi/3), (2pi/3, pi), (-pi, -2pi/3), (-2pi/3, 0).
enum class PASector { upper_right, upper_left, lower_left, lower_right };

PASector pa_sector(cplx zeta);
Matrix2 model_PA(cplx zeta, PASector sector);
Matrix2 model_PA(cplx zeta);
// zeta^{-sigma3/4} (1/sqrt2) [[1,1],[-1,1]] e^{-i pi sigma3/4}
Matrix2 airy_twist(cplx zeta);

Matrix2 model_PB(cplx zeta, QRegion region);
Matrix2 model_PB(cplx zeta);
// zeta^{-sigma3/4} (1/sqrt2) [[1,i],[i,1]]
Matrix2 bessel_twist(cplx zeta);

// Boundary value approximated by evaluation at zeta + delta * side, with
// delta = 1e-8 max(1, |zeta|) and `side` a unit complex number pointing into
// the chosen sector.
Matrix2 directed_limit_offset(const std::function<Matrix2(cplx)>& model, cplx zeta, cplx side,
                              double rel_delta = 1e-8);

// Jump relation M_+ = M_- J on one contour point, with residual
// max|M_+ - M_- J| / max(1, max|M_+|).
struct JumpSample {
    std::string model;   // "Q", "PA" or "PB"
    std::string contour; // "R-", "R+", "ray+", "ray-"
    cplx zeta;
    double residual = 0.0;
};

// `points` samples per model, cycling over its contours with radii
// log-spaced in [r_min, r_max].
std::vector<JumpSample> parametrix_jumps(int points = 20, double r_min = 0.1, double r_max = 30.0);

} // namespace janossy
