#include "janossy/errors.hpp"
#include "janossy/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace janossy {

namespace {

const double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);
// Tolerance for a point on a ray counting as inside the adjacent sector.
const double kArgSlack = 1e-12;

double arg_signed(cplx z)
{
    // std::arg honours the sign of a zero imaginary part on the negative axis
    return std::arg(z);
}

bool upper(cplx z)
{
    return z.imag() > 0.0 || (z.imag() == 0.0 && !std::signbit(z.imag()));
}

Matrix2 sigma3_exp(cplx c)
{
    return Matrix2::diag(std::exp(c), std::exp(-c));
}

} // namespace

Matrix2 Matrix2::inverse() const
{
    cplx d = det();
    return {e22 / d, -e12 / d, -e21 / d, e11 / d};
}

double Matrix2::max_abs() const
{
    return std::max(std::max(std::abs(e11), std::abs(e12)), std::max(std::abs(e21), std::abs(e22)));
}

bool Matrix2::finite() const
{
    auto f = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    return f(e11) && f(e12) && f(e21) && f(e22);
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b)
{
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b)
{
    return {a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b)
{
    return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
}

Matrix2 operator*(cplx s, const Matrix2& a)
{
    return {s * a.e11, s * a.e12, s * a.e21, s * a.e22};
}

QRegion q_region(cplx zeta)
{
    double th = arg_signed(zeta);
    if (std::abs(th) < 2.0 * kPi / 3.0)
        return QRegion::I;
    return th > 0.0 ? QRegion::II : QRegion::III;
}

Matrix2 bessel_Q(cplx zeta, QRegion region)
{
    if (zeta == 0.0)
        throw DomainError("bessel_Q: zeta = 0 is the branch point");
    double th = arg_signed(zeta);
    const double ray = 2.0 * kPi / 3.0;
    bool ok = (region == QRegion::I && std::abs(th) <= ray + kArgSlack) ||
              (region == QRegion::II && th >= ray - kArgSlack) ||
              (region == QRegion::III && th <= -ray + kArgSlack);
    if (!ok)
        throw DomainError("bessel_Q: zeta does not lie in the requested region");
    cplx s = BranchConvention::sqrt(zeta);
    if (region == QRegion::I) {
        BesselPairC i = bessel_i01(s);
        BesselPairC k = bessel_k01(s);
        return {i.order0, kI / kPi * k.order0, 2.0 * kPi * kI * s * i.order1, 2.0 * s * k.order1};
    }
    cplx t = BranchConvention::sqrt(-zeta);
    cplx h1 = hankel_h0_1(t), h2 = hankel_h0_2(t);
    // d/dt H0 = -H1
    cplx dh1 = -hankel_h1_1(t), dh2 = -hankel_h1_2(t);
    if (region == QRegion::II)
        return {h1 / 2.0, h2 / 2.0, kPi * s * dh1, kPi * s * dh2};
    return {h2 / 2.0, -h1 / 2.0, -kPi * s * dh2, kPi * s * dh1};
}

Matrix2 bessel_Q(cplx zeta)
{
    return bessel_Q(zeta, q_region(zeta));
}

PASector pa_sector(cplx zeta)
{
    double th = arg_signed(zeta);
    const double ray = 2.0 * kPi / 3.0;
    if (upper(zeta))
        return th < ray ? PASector::upper_right : PASector::upper_left;
    return th > -ray ? PASector::lower_right : PASector::lower_left;
}

Matrix2 model_PA(cplx zeta, PASector sector)
{
    if (zeta == 0.0)
        throw DomainError("model_PA: zeta = 0 is the branch point");
    double th = arg_signed(zeta);
    const double ray = 2.0 * kPi / 3.0;
    bool up = upper(zeta);
    bool ok = false;
    switch (sector) {
    case PASector::upper_right:
        ok = th >= -kArgSlack && th <= ray + kArgSlack;
        break;
    case PASector::upper_left:
        ok = up && th >= ray - kArgSlack;
        break;
    case PASector::lower_left:
        ok = !up && th <= -ray + kArgSlack;
        break;
    case PASector::lower_right:
        ok = th <= kArgSlack && th >= -ray - kArgSlack;
        break;
    }
    if (!ok)
        throw DomainError("model_PA: zeta does not lie in the requested sector");

    const cplx w(-0.5, std::sqrt(3.0) / 2.0);
    const cplx w2 = std::conj(w);
    AiryPairC a = airy(zeta);
    Matrix2 p;
    if (sector == PASector::upper_right || sector == PASector::upper_left) {
        AiryPairC b = airy(w2 * zeta);
        p = {a.ai, b.ai, a.aip, w2 * b.aip};
    } else {
        AiryPairC b = airy(w * zeta);
        p = {a.ai, -w2 * b.ai, a.aip, -b.aip};
    }
    cplx z32 = BranchConvention::pow32(zeta);
    cplx pref = std::sqrt(2.0 * kPi) * std::exp(-kI * kPi / 12.0);
    Matrix2 m = pref * (p * sigma3_exp(2.0 / 3.0 * z32 - kI * kPi / 6.0));
    Matrix2 ups{1.0, 0.0, std::exp(4.0 / 3.0 * z32), 1.0};
    if (sector == PASector::upper_left)
        return m * ups.inverse();
    if (sector == PASector::lower_left)
        return m * ups;
    return m;
}

Matrix2 model_PA(cplx zeta)
{
    return model_PA(zeta, pa_sector(zeta));
}

Matrix2 airy_twist(cplx zeta)
{
    Matrix2 c{1.0, 1.0, -1.0, 1.0};
    return sigma3_exp(-BranchConvention::log(zeta) / 4.0) * ((1.0 / std::sqrt(2.0)) * c) *
           sigma3_exp(-kI * kPi / 4.0);
}

Matrix2 model_PB(cplx zeta, QRegion region)
{
    static const Matrix2 left =
        Matrix2{1.0, 0.0, 3.0 * kI / 8.0, 1.0} *
        Matrix2::diag(std::sqrt(kPi), 1.0 / (2.0 * std::sqrt(kPi)));
    return left * bessel_Q(zeta, region) * sigma3_exp(-BranchConvention::sqrt(zeta));
}

Matrix2 model_PB(cplx zeta)
{
    return model_PB(zeta, q_region(zeta));
}

Matrix2 bessel_twist(cplx zeta)
{
    Matrix2 c{1.0, kI, kI, 1.0};
    return sigma3_exp(-BranchConvention::log(zeta) / 4.0) * ((1.0 / std::sqrt(2.0)) * c);
}

Matrix2 directed_limit_offset(const std::function<Matrix2(cplx)>& model, cplx zeta, cplx side,
                              double rel_delta)
{
    double delta = rel_delta * std::max(1.0, std::abs(zeta));
    return model(zeta + delta * side / std::abs(side));
}

namespace {

double jump_residual(const Matrix2& plus, const Matrix2& minus, const Matrix2& J)
{
    return (plus - minus * J).max_abs() / std::max(1.0, plus.max_abs());
}

} // namespace

std::vector<JumpSample> parametrix_jumps(int points, double r_min, double r_max)
{
    if (points < 1 || !(r_min > 0.0) || !(r_max >= r_min))
        throw DomainError("parametrix_jumps: need points >= 1 and 0 < r_min <= r_max");
    const double ray = 2.0 * kPi / 3.0;
    const Matrix2 J{0.0, 1.0, -1.0, 0.0};
    auto radius = [&](int k) {
        return points == 1 ? r_min : r_min * std::pow(r_max / r_min, static_cast<double>(k) / (points - 1));
    };
    std::vector<JumpSample> out;
    for (int k = 0; k < points; ++k) {
        double r = radius(k);
        cplx up = std::polar(r, ray), dn = std::polar(r, -ray);
        cplx neg_up(-r, 0.0), neg_dn(-r, -0.0);
        JumpSample js{"Q", "", 0.0, 0.0};
        switch (k % 3) {
        case 0:
            js.contour = "R-";
            js.zeta = neg_up;
            js.residual = jump_residual(bessel_Q(neg_up, QRegion::II), bessel_Q(neg_dn, QRegion::III), J);
            break;
        case 1:
            js.contour = "ray+";
            js.zeta = up;
            js.residual = jump_residual(bessel_Q(up, QRegion::I), bessel_Q(up, QRegion::II),
                                        Matrix2{1.0, 0.0, 1.0, 1.0});
            break;
        default:
            js.contour = "ray-";
            js.zeta = dn;
            js.residual = jump_residual(bessel_Q(dn, QRegion::III), bessel_Q(dn, QRegion::I),
                                        Matrix2{1.0, 0.0, 1.0, 1.0});
        }
        out.push_back(js);
    }
    for (int k = 0; k < points; ++k) {
        double r = radius(k);
        cplx up = std::polar(r, ray), dn = std::polar(r, -ray);
        JumpSample js{"PA", "", 0.0, 0.0};
        switch (k % 4) {
        case 0: {
            cplx z(r, 0.0), zm(r, -0.0);
            Matrix2 JA{1.0, std::exp(-4.0 / 3.0 * BranchConvention::pow32(z)), 0.0, 1.0};
            js.contour = "R+";
            js.zeta = z;
            js.residual = jump_residual(model_PA(z, PASector::upper_right),
                                        model_PA(zm, PASector::lower_right), JA);
            break;
        }
        case 1: {
            cplx z(-r, 0.0), zm(-r, -0.0);
            js.contour = "R-";
            js.zeta = z;
            js.residual = jump_residual(model_PA(z, PASector::upper_left),
                                        model_PA(zm, PASector::lower_left), J);
            break;
        }
        case 2: {
            Matrix2 U{1.0, 0.0, std::exp(4.0 / 3.0 * BranchConvention::pow32(up)), 1.0};
            js.contour = "ray+";
            js.zeta = up;
            js.residual = jump_residual(model_PA(up, PASector::upper_right),
                                        model_PA(up, PASector::upper_left), U);
            break;
        }
        default: {
            Matrix2 D{1.0, 0.0, std::exp(4.0 / 3.0 * BranchConvention::pow32(dn)), 1.0};
            js.contour = "ray-";
            js.zeta = dn;
            js.residual = jump_residual(model_PA(dn, PASector::lower_left),
                                        model_PA(dn, PASector::lower_right), D);
        }
        }
        out.push_back(js);
    }
    for (int k = 0; k < points; ++k) {
        double r = radius(k);
        cplx up = std::polar(r, ray), dn = std::polar(r, -ray);
        JumpSample js{"PB", "", 0.0, 0.0};
        switch (k % 3) {
        case 0: {
            cplx z(-r, 0.0), zm(-r, -0.0);
            js.contour = "R-";
            js.zeta = z;
            js.residual = jump_residual(model_PB(z, QRegion::II), model_PB(zm, QRegion::III), J);
            break;
        }
        case 1: {
            Matrix2 U{1.0, 0.0, std::exp(-2.0 * BranchConvention::sqrt(up)), 1.0};
            js.contour = "ray+";
            js.zeta = up;
            js.residual = jump_residual(model_PB(up, QRegion::I), model_PB(up, QRegion::II), U);
            break;
        }
        default: {
            Matrix2 D{1.0, 0.0, std::exp(-2.0 * BranchConvention::sqrt(dn)), 1.0};
            js.contour = "ray-";
            js.zeta = dn;
            js.residual = jump_residual(model_PB(dn, QRegion::III), model_PB(dn, QRegion::I), D);
        }
        }
        out.push_back(js);
    }
    return out;
}

} // namespace janossy
