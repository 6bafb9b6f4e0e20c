#include "janossy/edge_laws.hpp"

#include "janossy/errors.hpp"
#include "janossy/numcore.hpp"
#include "janossy/specfun.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include <cmath>
#include <string>

namespace janossy {

namespace {

const double kPi = 3.14159265358979323846;

// Chebyshev differentiation matrix on t_j = -cos(j pi / N), ascending.
Eigen::MatrixXd cheb_diff(int N, std::vector<double>& t)
{
    t.resize(N + 1);
    for (int j = 0; j <= N; ++j)
        t[j] = -std::cos(j * kPi / N);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N + 1, N + 1);
    auto c = [N](int j) { return (j == 0 || j == N ? 2.0 : 1.0) * (j % 2 ? -1.0 : 1.0); };
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
            if (i != j)
                D(i, j) = c(i) / c(j) / (t[i] - t[j]);
    // negative-sum trick for the diagonal
    for (int i = 0; i <= N; ++i)
        D(i, i) = -D.row(i).sum();
    return D;
}

double barycentric(const std::vector<double>& s, const std::vector<double>& f, double x)
{
    const int N = static_cast<int>(s.size()) - 1;
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= N; ++j) {
        double d = x - s[j];
        if (d == 0.0)
            return f[j];
        double w = (j % 2 ? -1.0 : 1.0) * (j == 0 || j == N ? 0.5 : 1.0) / d;
        num += w * f[j];
        den += w;
    }
    return num / den;
}

double left_closure(double s)
{
    double s3 = s * s * s;
    return std::sqrt(-s / 2.0) * (1.0 + 1.0 / (8.0 * s3) - 73.0 / (128.0 * s3 * s3));
}

} // namespace

double HastingsMcLeod::value(double x) const
{
    if (x < s_left || x > s_right)
        throw DomainError("HastingsMcLeod: point outside the solution grid");
    return barycentric(s, u, x);
}

double HastingsMcLeod::derivative(double x) const
{
    if (x < s_left || x > s_right)
        throw DomainError("HastingsMcLeod: point outside the solution grid");
    return barycentric(s, up, x);
}

HastingsMcLeod hastings_mcleod(double s_left, double s_right, int grid)
{
    if (s_right < 6.0 || s_left < -12.0 || s_left >= s_right)
        throw DomainError("hastings_mcleod: need -12 <= s_L < s_R with s_R >= 6");
    if (grid < 16)
        throw DomainError("hastings_mcleod: grid too small");
    const int N = grid;
    std::vector<double> t;
    Eigen::MatrixXd D = cheb_diff(N, t);
    const double half = 0.5 * (s_right - s_left);
    D /= half;
    Eigen::MatrixXd D2 = D * D;

    HastingsMcLeod hm;
    hm.s_left = s_left;
    hm.s_right = s_right;
    hm.s.resize(N + 1);
    Eigen::VectorXd s(N + 1), u(N + 1);
    for (int j = 0; j <= N; ++j) {
        s(j) = s_left + half * (1.0 + t[j]);
        // smooth start joining sqrt(-s/2) on the left to 0 on the right
        double h = 0.25 * (-s(j) + std::sqrt(s(j) * s(j) + 1.0));
        u(j) = std::sqrt(h);
    }
    s(0) = s_left;
    s(N) = s_right;
    const double uL = left_closure(s_left), uR = airy_ai(s_right);

    auto residual = [&](const Eigen::VectorXd& v) {
        Eigen::VectorXd r = D2 * v - (s.array() * v.array() + 2.0 * v.array().cube()).matrix();
        r(0) = v(0) - uL;
        r(N) = v(N) - uR;
        return r;
    };

    bool converged = false;
    for (int it = 0; it < 60; ++it) {
        Eigen::VectorXd r = residual(u);
        Eigen::MatrixXd J = D2;
        J.diagonal() -= (s.array() + 6.0 * u.array().square()).matrix();
        J.row(0).setZero();
        J(0, 0) = 1.0;
        J.row(N).setZero();
        J(N, N) = 1.0;
        Eigen::VectorXd step = J.partialPivLu().solve(-r);
        u += step;
        if (step.cwiseAbs().maxCoeff() < 1e-14 * (1.0 + u.cwiseAbs().maxCoeff())) {
            converged = true;
            break;
        }
    }
    if (!converged || !u.allFinite())
        throw ConvergenceError("hastings_mcleod: collocation Newton did not converge",
                               std::vector<double>(u.data(), u.data() + u.size()));

    Eigen::VectorXd r = residual(u);
    hm.residual = r.segment(1, N - 1).cwiseAbs().maxCoeff();
    Eigen::VectorXd up = D * u;
    hm.s.assign(s.data(), s.data() + N + 1);
    hm.u.assign(u.data(), u.data() + N + 1);
    hm.up.assign(up.data(), up.data() + N + 1);
    return hm;
}

const HastingsMcLeod& default_hastings_mcleod()
{
    static const HastingsMcLeod hm = hastings_mcleod();
    return hm;
}

namespace {

const QuadratureRule& tail_rule()
{
    static const QuadratureRule r = gauss_legendre(200);
    return r;
}

void check_alpha(double alpha, const HastingsMcLeod& hm)
{
    // right of the grid u = Ai to O(Ai^3) and the closed-form tails apply
    if (!(alpha >= hm.s_left))
        throw DomainError("tw_painleve: alpha = " + std::to_string(alpha) +
                          " left of the Hastings-McLeod grid");
}

} // namespace

double tw_painleve(double alpha, const HastingsMcLeod& hm)
{
    check_alpha(alpha, hm);
    const double R = std::max(hm.s_right, alpha);
    double I = 0.0;
    if (alpha < R)
        I = mapped_rule(tail_rule(), alpha, R).integrate([&](double s) {
            double v = hm.value(s);
            return (s - alpha) * v * v;
        });
    // beyond s_R, u = Ai up to O(Ai^3)
    AiryPair a = airy(R);
    double tail0 = a.aip * a.aip - R * a.ai * a.ai;
    double tail1 = -(R * R * a.ai * a.ai - R * a.aip * a.aip + a.ai * a.aip) / 3.0;
    I += tail1 - alpha * tail0;
    return std::exp(-I);
}

double tw_painleve(double alpha)
{
    return tw_painleve(alpha, default_hastings_mcleod());
}

double painleve_u2_tail(double alpha, const HastingsMcLeod& hm)
{
    check_alpha(alpha, hm);
    const double R = std::max(hm.s_right, alpha);
    double I = 0.0;
    if (alpha < R)
        I = mapped_rule(tail_rule(), alpha, R).integrate([&](double s) {
            double v = hm.value(s);
            return v * v;
        });
    AiryPair a = airy(R);
    return I + a.aip * a.aip - R * a.ai * a.ai;
}

double painleve_u2_tail(double alpha)
{
    return painleve_u2_tail(alpha, default_hastings_mcleod());
}

} // namespace janossy
