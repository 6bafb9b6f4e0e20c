#include "janossy/edge_laws.hpp"

#include "janossy/equilibrium.hpp"
#include "janossy/errors.hpp"
#include "janossy/specfun.hpp"

#include <cmath>
#include <string>

namespace janossy {

namespace {

struct FG {
    double f, g, df, dg;
};

// f, g and their z-derivatives at z = x - alpha
FG bessel_fg(double alpha, double z)
{
    const double a = std::abs(alpha);
    double A = a - 2.0 * z / 3.0;
    double rz = std::sqrt(z);
    double w = rz * A;
    double dw = A / (2.0 * rz) - 2.0 * rz / 3.0;
    double i0 = bessel_i0(w), i1 = bessel_i1(w);
    double di1 = i0 - i1 / w;
    double rA = std::sqrt(A);
    double dA = -2.0 / 3.0;
    FG o;
    o.f = rA * i0;
    o.df = 0.5 * dA / rA * i0 + rA * i1 * dw;
    o.g = rz * rA * i1;
    o.dg = 0.5 / rz * rA * i1 + rz * 0.5 * dA / rA * i1 + rz * rA * di1 * dw;
    return o;
}

} // namespace

BesselFormKernel::BesselFormKernel(double alpha, const LimitKernel& reference) : alpha_(alpha)
{
    if (alpha > -2.0)
        throw DomainError("bessel_form_kernel: needs alpha <= -2");
    if (reference.alpha() != alpha)
        throw DomainError("bessel_form_kernel: reference kernel at a different alpha");
    double x = alpha + kFitOffset;
    double r = raw(x, x);
    if (!(std::abs(r) > 0.0) || !std::isfinite(r))
        throw DomainError("bessel_form_kernel: degenerate diagonal at the fit point");
    kappa_ = reference(x, x) / r;
}

BesselFormKernel::BesselFormKernel(double alpha) : BesselFormKernel(alpha, LimitKernel(alpha)) {}

void BesselFormKernel::check(double x) const
{
    double z = x - alpha_;
    if (!(z > 0.0))
        throw DomainError("bessel_form_kernel: need x > alpha");
    if (!(z < 1.5 * std::abs(alpha_)))
        throw DomainError("bessel_form_kernel: x - alpha beyond 3|alpha|/2");
}

double BesselFormKernel::raw(double x, double y) const
{
    check(x);
    check(y);
    if (std::abs(x - y) <= 1e-7 * (1.0 + std::abs(x))) {
        FG m = bessel_fg(alpha_, 0.5 * (x + y) - alpha_);
        return m.g * m.df - m.f * m.dg;
    }
    FG a = bessel_fg(alpha_, x - alpha_), b = bessel_fg(alpha_, y - alpha_);
    return (a.f * b.g - a.g * b.f) / (x - y);
}

double bessel_form_kernel(double alpha, double x, double y)
{
    return BesselFormKernel(alpha)(x, y);
}

FiniteNEdgeKernel::FiniteNEdgeKernel(const Potential& V, int n, double alpha,
                                     const OrthoResolution& res)
    : n_(n), alpha_(alpha)
{
    if (n < 1)
        throw DomainError("finite_n_scaled_kernel: n must be positive");
    EquilibriumMeasure em = solve_full_line(V);
    cV_ = em.c_V;
    c_ = 1.0 + alpha / edge_scale();
    table_ = build_recurrence(WeightSpec{em.V, n, c_}, n, res);
}

double FiniteNEdgeKernel::operator()(double x, double y) const
{
    if (x < alpha_ || y < alpha_)
        throw DomainError("finite_n_scaled_kernel: arguments must be >= alpha");
    double E = edge_scale();
    return l_kernel_cd(table_, n_, 1.0 + x / E, 1.0 + y / E) / E;
}

double finite_n_scaled_kernel(const Potential& V, int n, double alpha, double x, double y)
{
    return FiniteNEdgeKernel(V, n, alpha)(x, y);
}

RateResult convergence_rate(const Potential& V, double alpha, const std::vector<int>& ns, double x,
                            double y, const OrthoResolution& res, int window_nodes)
{
    if (ns.size() < 2)
        throw DomainError("convergence_rate: need at least two values of n");
    RateResult out;
    out.ns = ns;
    double M = LimitKernel(alpha, window_nodes)(x, y);
    for (int n : ns) {
        double L = FiniteNEdgeKernel(V, n, alpha, res)(x, y);
        double e = std::abs(L - M);
        out.finite.push_back(L);
        out.limit.push_back(M);
        out.errors.push_back(e);
        if (e <= 1e-9 * std::max(1.0, std::abs(M)))
            out.noise_floor = true;
    }
    // least squares of log e against log n
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        double lx = std::log(static_cast<double>(ns[i]));
        double ly = std::log(std::max(out.errors[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double den = k * sxx - sx * sx;
    if (den == 0.0)
        throw DomainError("convergence_rate: values of n must differ");
    out.slope = (k * sxy - sx * sy) / den;
    out.intercept = (sy - out.slope * sx) / k;
    return out;
}

} // namespace janossy
