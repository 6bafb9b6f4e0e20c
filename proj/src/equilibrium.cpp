#include "janossy/equilibrium.hpp"

#include "janossy/errors.hpp"
#include "janossy/numcore.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>

namespace janossy {

namespace {

const double kPi = 3.14159265358979323846;

const QuadratureRule& gl_base(int m)
{
    thread_local int cached_m = -1;
    thread_local QuadratureRule rule;
    if (cached_m != m) {
        rule = gauss_legendre(m);
        cached_m = m;
    }
    return rule;
}

const QuadratureRule& theta_rule(int m)
{
    thread_local int cached_m = -1;
    thread_local QuadratureRule rule;
    if (cached_m != m) {
        rule = mapped_rule(gl_base(m), 0.0, kPi);
        cached_m = m;
    }
    return rule;
}

double ts_integrate(const std::function<double(double)>& f, double a, double b)
{
    if (!(b > a))
        return 0.0;
    thread_local boost::math::quadrature::tanh_sinh<double> ts(12);
    // Each half is mapped so that its endpoint sits at 0, where the abscissae
    // can approach the endpoint without rounding onto it.
    double h = 0.5 * (b - a);
    double left = ts.integrate([&](double t) { return f(a + t); }, 0.0, h, 1e-14);
    double right = ts.integrate([&](double t) { return f(b - t); }, 0.0, h, 1e-14);
    return left + right;
}

// Polynomial part of (V'(z)/2) sqrt((z - c)/(z - b)) at infinity.
std::vector<double> pinned_polynomial(const Potential& V, double b, double c)
{
    std::vector<double> d = V.derivative_coeffs();
    const int D = static_cast<int>(d.size()) - 1;
    std::vector<double> up(D + 1), dn(D + 1), sigma(D + 1, 0.0);
    double bin_half = 1.0, bin_central = 1.0;
    for (int i = 0; i <= D; ++i) {
        up[i] = bin_half * std::pow(-c, i);   // (1 - c t)^{1/2}
        dn[i] = bin_central * std::pow(b, i); // (1 - b t)^{-1/2}
        bin_half *= (0.5 - i) / (i + 1.0);
        bin_central *= (2.0 * i + 1.0) / (2.0 * (i + 1.0));
    }
    for (int k = 0; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            sigma[k] += up[i] * dn[k - i];
    std::vector<double> p(D + 1, 0.0);
    for (int q = 0; q <= D; ++q)
        for (int j = q; j <= D; ++j)
            p[q] += 0.5 * d[j] * sigma[j - q];
    return p;
}

// p(x) = (x - c) quotient(x) + p(c)
std::pair<std::vector<double>, double> divide_linear(const std::vector<double>& p, double c)
{
    const int D = static_cast<int>(p.size()) - 1;
    if (D == 0)
        return {{0.0}, p[0]};
    std::vector<double> r(D);
    r[D - 1] = p[D];
    for (int k = D - 1; k >= 1; --k)
        r[k - 1] = p[k] + c * r[k];
    return {r, p[0] + c * r[0]};
}

double theta_average(const Potential& V, double m, double r, int nodes, double (*w)(double))
{
    const auto& rule = theta_rule(nodes);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double th = rule.nodes[i];
        s += rule.weights[i] * V.derivative(m + r * std::cos(th)) * w(th);
    }
    return s;
}

void finish(OneCutMeasure& m)
{
    GPhiPair gp(std::make_shared<OneCutMeasure>(m));
    double x = m.midpoint();
    m.ell = 2.0 * gp.log_potential(x) - m.V(x);
}

} // namespace

double OneCutMeasure::density(double x) const
{
    if (!(x > b && x < c))
        return 0.0;
    double qx = eval_poly(q, x);
    double v = std::sqrt((x - b) * (c - x)) * qx;
    if (C != 0.0)
        v += C * std::sqrt((x - b) / (c - x));
    return std::max(0.0, v / kPi);
}

double OneCutMeasure::density_theta(double theta) const
{
    double r = halfwidth();
    double s = midpoint() + r * std::cos(theta);
    double sn = std::sin(theta);
    return (r * r * sn * sn * eval_poly(q, s) + C * r * (1.0 + std::cos(theta))) / kPi;
}

double OneCutMeasure::mass() const
{
    return theta_rule(theta_nodes).integrate([&](double th) { return density_theta(th); });
}

double OneCutMeasure::mass_right_of(double x) const
{
    if (x >= c)
        return 0.0;
    if (x <= b)
        return mass();
    double tx = std::acos(std::clamp((x - midpoint()) / halfwidth(), -1.0, 1.0));
    return mapped_rule(gl_base(theta_nodes), 0.0, tx).integrate([&](double th) {
        return density_theta(th);
    });
}

double EquilibriumMeasure::h_at(double x) const
{
    return eval_poly(h, x);
}

double ConstrainedMeasure::edge_inverse_sqrt() const
{
    return C * std::sqrt(c - b) / kPi;
}

EquilibriumMeasure solve_free_unscaled(const Potential& V, const SolveOptions& opt)
{
    const int d = V.degree();
    const double lead = V.coeffs().back();
    // pure monomial t x^d: r^d = 2^{d+1} / (d t binom(d, d/2))
    double binom = 1.0;
    for (int i = 1; i <= d / 2; ++i)
        binom *= static_cast<double>(d / 2 + i) / i;
    double r0 = std::pow(std::pow(2.0, d + 1) / (d * lead * binom), 1.0 / d);

    const int nodes = opt.theta_nodes;
    auto residual = [&](const Eigen::VectorXd& x) {
        double m = x(0), r = std::abs(x(1));
        Eigen::VectorXd f(2);
        f(0) = theta_average(V, m, r, nodes, [](double) { return 1.0; }) / kPi;
        f(1) = r / (2.0 * kPi) * theta_average(V, m, r, nodes, [](double t) { return std::cos(t); }) - 1.0;
        return f;
    };
    Eigen::VectorXd x0(2);
    x0 << 0.0, r0;
    NewtonOptions no;
    no.tol = opt.tol;
    no.max_iter = opt.max_iter;
    Eigen::VectorXd x;
    try {
        x = newton_solve(residual, x0, no);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(std::string("solve_full_line: endpoint Newton iteration failed: ") + e.what(),
                               e.best_iterate);
    }
    double m = x(0), r = std::abs(x(1));

    EquilibriumMeasure out;
    out.V = V;
    out.theta_nodes = nodes;
    out.b = m - r;
    out.c = m + r;
    auto p = pinned_polynomial(V, out.b, out.c);
    auto [quot, rem] = divide_linear(p, out.c);
    (void)rem;
    out.q = quot;
    out.C = 0.0;
    out.h = quot;
    for (auto& v : out.h)
        v *= 2.0;
    for (int i = 0; i <= 400; ++i) {
        double xx = out.b + (out.c - out.b) * i / 400.0;
        if (!(out.h_at(xx) > 0.0))
            throw UnsupportedPotential("solve_full_line: h_V changes sign on the band; the potential is not "
                                       "one-cut regular");
    }
    out.beta = std::sqrt(out.c - out.b) * eval_poly(out.q, out.c) / kPi;
    out.c_V = std::pow(kPi * out.beta, 2.0 / 3.0);
    finish(out);
    return out;
}

EquilibriumMeasure solve_full_line(const Potential& V, const SolveOptions& opt)
{
    EquilibriumMeasure raw = solve_free_unscaled(V, opt);
    double a = raw.c;
    if (!(a > 0.0))
        throw UnsupportedPotential("solve_full_line: right endpoint is not positive; cannot rescale to 1");
    EquilibriumMeasure out = solve_free_unscaled(V.rescaled(a), opt);
    out.scale = a;
    return out;
}

ConstrainedMeasure solve_constrained(const Potential& V, double c, const SolveOptions& opt)
{
    EquilibriumMeasure freem = solve_free_unscaled(V, opt);
    ConstrainedMeasure out;
    out.pin = c;
    out.free_right = freem.c;
    if (c >= freem.c) {
        static_cast<OneCutMeasure&>(out) = freem;
        out.is_free = true;
        return out;
    }
    if (!(c > freem.b))
        throw ConstraintInfeasible("solve_constrained: pin lies left of the free support");

    const int nodes = opt.theta_nodes;
    auto residual = [&](const Eigen::VectorXd& x) {
        double b = x(0);
        double m = 0.5 * (c + b), r = 0.5 * (c - b);
        Eigen::VectorXd f(1);
        f(0) = r / (2.0 * kPi) *
                   theta_average(V, m, r, nodes, [](double t) { return 1.0 - std::cos(t); }) +
               1.0;
        return f;
    };
    Eigen::VectorXd x0(1);
    x0 << freem.b;
    NewtonOptions no;
    no.tol = opt.tol;
    no.max_iter = opt.max_iter;
    Eigen::VectorXd x;
    try {
        x = newton_solve(residual, x0, no);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(std::string("solve_constrained: endpoint Newton iteration failed: ") + e.what(),
                               e.best_iterate);
    }
    out.V = V;
    out.theta_nodes = nodes;
    out.b = x(0);
    out.c = c;
    if (!(out.b < c))
        throw ConstraintInfeasible("solve_constrained: left endpoint does not lie left of the pin");
    auto p = pinned_polynomial(V, out.b, c);
    auto [quot, pc] = divide_linear(p, c);
    out.q = quot;
    out.C = -pc;
    if (out.C < 0.0)
        throw ConstraintInfeasible("solve_constrained: negative inverse-square-root coefficient at the pin");
    for (int i = 0; i <= 400; ++i) {
        double xx = out.b + (c - out.b) * i / 400.0;
        if (!(-eval_poly(p, xx) > 0.0) && i > 0 && i < 400)
            throw ConstraintInfeasible("solve_constrained: density is not positive on the band");
    }
    finish(out);
    return out;
}

double density_at(const OneCutMeasure& m, double x)
{
    return m.density(x);
}

double edge_constant(const EquilibriumMeasure& m)
{
    if (!(m.beta > 0.0))
        throw DomainError("edge_constant: edge coefficient must be positive");
    return std::pow(kPi * m.beta, 2.0 / 3.0);
}

GPhiPair::GPhiPair(std::shared_ptr<const OneCutMeasure> m) : m_(std::move(m)) {}

GPhiPair g_phi(const OneCutMeasure& m)
{
    return GPhiPair(std::make_shared<OneCutMeasure>(m));
}

double GPhiPair::log_potential(double x) const
{
    const OneCutMeasure& m = *m_;
    const double mid = m.midpoint(), r = m.halfwidth();
    if (x >= m.c) {
        return ts_integrate(
            [&](double th) {
                double sh = std::sin(0.5 * th);
                return std::log((x - m.c) + 2.0 * r * sh * sh) * m.density_theta(th);
            },
            0.0, kPi);
    }
    if (x <= m.b) {
        return ts_integrate(
            [&](double th) {
                double ch = std::cos(0.5 * th);
                return std::log((m.b - x) + 2.0 * r * ch * ch) * m.density_theta(th);
            },
            0.0, kPi);
    }
    double tx = std::acos(std::clamp((x - mid) / r, -1.0, 1.0));
    // integrate in the offset u from the log singularity at theta = tx
    auto below = [&](double u) {
        double d = 2.0 * r * std::sin(tx - 0.5 * u) * std::sin(0.5 * u);
        return std::log(d) * m.density_theta(tx - u);
    };
    auto above = [&](double u) {
        double d = 2.0 * r * std::sin(tx + 0.5 * u) * std::sin(0.5 * u);
        return std::log(d) * m.density_theta(tx + u);
    };
    return ts_integrate(below, 0.0, tx) + ts_integrate(above, 0.0, kPi - tx);
}

cplx GPhiPair::g(cplx z) const
{
    const OneCutMeasure& m = *m_;
    if (z.imag() == 0.0) {
        if (z.real() <= m.c)
            throw DomainError("g: z lies on the cut; use g_side to choose a boundary value");
        return {log_potential(z.real()), 0.0};
    }
    const double mid = m.midpoint(), r = m.halfwidth();
    double re = ts_integrate(
        [&](double th) { return std::log(std::abs(z - (mid + r * std::cos(th)))) * m.density_theta(th); }, 0.0,
        kPi);
    double im = ts_integrate(
        [&](double th) { return std::arg(z - (mid + r * std::cos(th))) * m.density_theta(th); }, 0.0, kPi);
    return {re, im};
}

cplx GPhiPair::g_side(double x, int side) const
{
    const OneCutMeasure& m = *m_;
    double s = side >= 0 ? 1.0 : -1.0;
    double re = log_potential(x);
    if (x >= m.c)
        return {re, 0.0};
    return {re, s * kPi * m.mass_right_of(x)};
}

double GPhiPair::euler_lagrange(double x) const
{
    return 2.0 * log_potential(x) - m_->V(x) - m_->ell;
}

double GPhiPair::phi(double x) const
{
    const OneCutMeasure& m = *m_;
    if (x < m.c)
        throw DomainError("phi: defined to the right of the support");
    if (x == m.c)
        return 0.0;
    // s = c + u^2 removes the endpoint square roots
    auto rule = mapped_rule(gl_base(m.theta_nodes), 0.0, std::sqrt(x - m.c));
    return rule.integrate([&](double u) {
        double s = m.c + u * u;
        return 4.0 * std::sqrt(s - m.b) * (u * u * eval_poly(m.q, s) - m.C);
    });
}

} // namespace janossy
