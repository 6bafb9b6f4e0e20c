#include "janossy/numcore.hpp"

#include "janossy/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace janossy {

namespace {

// Legendre P_m and P_m' at x by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int m, double x)
{
    double p0 = 1.0, p1 = x;
    if (m == 0)
        return {1.0, 0.0};
    for (int k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = m * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

} // namespace

QuadratureRule gauss_legendre(int m)
{
    if (m < 1)
        throw DomainError("gauss_legendre: m must be >= 1");
    QuadratureRule rule;
    rule.domain = {-1.0, 1.0, false};
    if (m == 1) {
        rule.nodes = {0.0};
        rule.weights = {2.0};
        return rule;
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd off(m - 1);
    for (int k = 1; k < m; ++k)
        off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    Eigen::VectorXd x = es.eigenvalues();

    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < m; ++i) {
        double xi = x(i);
        for (int it = 0; it < 3; ++it) {
            auto [p, dp] = legendre_with_derivative(m, xi);
            xi -= p / dp;
        }
        rule.nodes[i] = xi;
    }
    // exact symmetry about 0
    for (int i = 0; i < m / 2; ++i) {
        double s = 0.5 * (rule.nodes[m - 1 - i] - rule.nodes[i]);
        rule.nodes[i] = -s;
        rule.nodes[m - 1 - i] = s;
    }
    if (m % 2 == 1)
        rule.nodes[m / 2] = 0.0;
    for (int i = 0; i < m; ++i) {
        double xi = rule.nodes[i];
        auto [p, dp] = legendre_with_derivative(m, xi);
        (void)p;
        rule.weights[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
    return rule;
}

QuadratureRule mapped_rule(const QuadratureRule& base, double a, double b)
{
    return composite_rule(base, {{a, b}});
}

QuadratureRule composite_rule(const QuadratureRule& base,
                              const std::vector<std::pair<double, double>>& panels)
{
    if (panels.empty())
        throw DomainError("composite_rule: empty panel list");
    double blo = base.domain.lo, bhi = base.domain.hi;
    QuadratureRule out;
    out.nodes.reserve(panels.size() * base.size());
    out.weights.reserve(panels.size() * base.size());
    for (auto [a, b] : panels) {
        if (!(b > a) || !std::isfinite(a) || !std::isfinite(b))
            throw DomainError("composite_rule: panels must be finite with a < b");
        double scale = (b - a) / (bhi - blo);
        for (std::size_t i = 0; i < base.size(); ++i) {
            out.nodes.push_back(a + (base.nodes[i] - blo) * scale);
            out.weights.push_back(base.weights[i] * scale);
        }
    }
    std::vector<std::size_t> idx(out.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto i, auto j) { return out.nodes[i] < out.nodes[j]; });
    QuadratureRule sorted;
    for (auto i : idx) {
        sorted.nodes.push_back(out.nodes[i]);
        sorted.weights.push_back(out.weights[i]);
    }
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!(sorted.nodes[i] > sorted.nodes[i - 1]))
            throw DomainError("composite_rule: overlapping panels");
    double lo = panels.front().first, hi = panels.front().second;
    for (auto [a, b] : panels) {
        lo = std::min(lo, a);
        hi = std::max(hi, b);
    }
    sorted.domain = {lo, hi, false};
    return sorted;
}

QuadratureRule halfline_rule(double endpoint, Direction direction, double decay_scale, int m_per_panel)
{
    if (!(decay_scale > 0.0))
        throw DomainError("halfline_rule: decay_scale must be positive");
    // exp(-L / s) = 1e-300
    const double reach = 300.0 * std::log(10.0) * decay_scale;
    std::vector<std::pair<double, double>> panels;
    double dist = 0.0, width = decay_scale;
    while (dist < reach) {
        double next = dist + width;
        if (direction == Direction::right)
            panels.emplace_back(endpoint + dist, endpoint + next);
        else
            panels.emplace_back(endpoint - next, endpoint - dist);
        dist = next;
        width *= 2.0;
    }
    QuadratureRule rule = composite_rule(gauss_legendre(m_per_panel), panels);
    rule.domain.truncated = true;
    return rule;
}

SymmetricSpectrum sym_eigs(const Eigen::MatrixXd& a)
{
    if (a.rows() != a.cols())
        throw DomainError("sym_eigs: matrix not square");
    double scale = a.cwiseAbs().maxCoeff();
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1e-300))
        throw DomainError("sym_eigs: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("sym_eigs: eigensolver failed", {});
    SymmetricSpectrum s;
    s.eigenvalues = es.eigenvalues().reverse();
    s.eigenvectors = es.eigenvectors().rowwise().reverse();
    return s;
}

Eigen::VectorXd tridiag_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off)
{
    if (diag.size() == 1)
        return diag;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    return es.eigenvalues().reverse();
}

LinearSolution solve_linear(const Eigen::MatrixXd& a, const Eigen::VectorXd& b)
{
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw DomainError("solve_linear: dimension mismatch");
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    double rc = lu.rcond();
    LinearSolution out;
    out.condition = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(out.condition <= 1e14))
        throw ConditioningError("solve_linear: condition estimate " + std::to_string(out.condition) +
                                " exceeds 1e14");
    out.x = lu.solve(b);
    return out;
}

double determinant(const Eigen::MatrixXd& a)
{
    if (a.rows() == a.cols() && a.isApprox(a.transpose(), 0.0)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
        return es.eigenvalues().prod();
    }
    return a.partialPivLu().determinant();
}

std::vector<double> integrate_ivp(const VectorField& f, double t0, std::vector<double> y0, double t1,
                                  double tol)
{
    namespace ode = boost::numeric::odeint;
    using State = std::vector<double>;
    if (t1 == t0)
        return y0;
    auto rhs = [&](const State& y, State& dy, double t) { dy = f(t, y); };
    auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State>());
    double dt = (t1 - t0) * 1e-3;
    double t = t0;
    const double dt_min = std::abs(t1 - t0) * 1e-14;
    int fails = 0;
    while ((t1 - t) * (t1 > t0 ? 1.0 : -1.0) > 0.0) {
        if (std::abs(dt) > std::abs(t1 - t))
            dt = t1 - t;
        auto res = stepper.try_step(rhs, y0, t, dt);
        if (res == ode::success) {
            fails = 0;
            continue;
        }
        if (std::abs(dt) < dt_min || ++fails > 200)
            throw StiffnessError("integrate_ivp: step size underflow at t = " + std::to_string(t));
    }
    return y0;
}

Eigen::VectorXd newton_solve(const ResidualMap& f, Eigen::VectorXd x, const NewtonOptions& opt,
                             const JacobianMap& jac)
{
    auto fd_jacobian = [&](const Eigen::VectorXd& at, const Eigen::VectorXd& fx) {
        Eigen::MatrixXd j(fx.size(), at.size());
        for (Eigen::Index k = 0; k < at.size(); ++k) {
            double h = opt.fd_step * std::max(1.0, std::abs(at(k)));
            Eigen::VectorXd xp = at, xm = at;
            xp(k) += h;
            xm(k) -= h;
            j.col(k) = (f(xp) - f(xm)) / (2.0 * h);
        }
        return j;
    };
    Eigen::VectorXd fx = f(x);
    double norm = fx.norm();
    Eigen::VectorXd best = x;
    double best_norm = norm;
    for (int it = 0; it < opt.max_iter; ++it) {
        if (!std::isfinite(norm))
            break;
        if (norm <= opt.tol)
            return x;
        Eigen::MatrixXd j = jac ? jac(x) : fd_jacobian(x, fx);
        Eigen::VectorXd step = j.fullPivLu().solve(-fx);
        double lambda = 1.0;
        Eigen::VectorXd xn;
        Eigen::VectorXd fn;
        double nn = 0.0;
        for (int half = 0; half < 30; ++half) {
            xn = x + lambda * step;
            fn = f(xn);
            nn = fn.norm();
            if (std::isfinite(nn) && nn < norm)
                break;
            lambda *= 0.5;
        }
        if (!(std::isfinite(nn) && nn < norm)) {
            // no descent along the Newton direction; stagnated
            if (norm <= opt.tol)
                return x;
            break;
        }
        x = xn;
        fx = fn;
        norm = nn;
        if (norm < best_norm) {
            best_norm = norm;
            best = x;
        }
    }
    if (best_norm <= opt.tol)
        return best;
    throw ConvergenceError("newton_solve: residual " + std::to_string(best_norm) + " above tolerance",
                           std::vector<double>(best.data(), best.data() + best.size()));
}

} // namespace janossy
