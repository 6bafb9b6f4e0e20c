#pragma once

#include <Eigen/Dense>

#include <functional>
#include <utility>
#include <vector>

namespace janossy {

enum class Direction { left, right };

struct QuadratureDomain {
    double lo = -1.0;
    double hi = 1.0;
    // Set when hi (or lo) is the truncation point of a half-line.
    bool truncated = false;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadratureDomain domain;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            s += weights[i] * f(nodes[i]);
        return s;
    }
};

// m-point Gauss-Legendre rule on [-1,1]: Golub-Welsch eigenvalues, then a
// Newton polish on the Legendre recurrence for nodes and weights.
QuadratureRule gauss_legendre(int m);

QuadratureRule composite_rule(const QuadratureRule& base,
                              const std::vector<std::pair<double, double>>& panels);

// Same base rule mapped onto [a,b].
QuadratureRule mapped_rule(const QuadratureRule& base, double a, double b);

// Half-line rule from `endpoint` towards +inf (right) or -inf (left). The
// caller declares the integrand envelope exp(-|x - endpoint| / decay_scale);
// panels double in width until the envelope is below 1e-300.
QuadratureRule halfline_rule(double endpoint, Direction direction, double decay_scale,
                             int m_per_panel);

struct SymmetricSpectrum {
    Eigen::VectorXd eigenvalues;  // descending
    Eigen::MatrixXd eigenvectors; // column j pairs with eigenvalues(j)
};

SymmetricSpectrum sym_eigs(const Eigen::MatrixXd& a);

// Eigenvalues (descending) of the symmetric tridiagonal matrix with the given
// diagonal and off-diagonal.
Eigen::VectorXd tridiag_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off);

struct LinearSolution {
    Eigen::VectorXd x;
    double condition = 1.0; // 1-norm estimate
};

LinearSolution solve_linear(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

double determinant(const Eigen::MatrixXd& a);

using VectorField = std::function<std::vector<double>(double, const std::vector<double>&)>;

// Adaptive Dormand-Prince 5(4) with absolute and relative error tolerance tol.
std::vector<double> integrate_ivp(const VectorField& f, double t0, std::vector<double> y0, double t1,
                                  double tol);

using ResidualMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using JacobianMap = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

struct NewtonOptions {
    double tol = 1e-12;
    int max_iter = 50;
    double fd_step = 1e-7; // relative step of the finite-difference Jacobian
};

// Damped Newton: the step is halved while the residual norm increases.
// Throws ConvergenceError carrying the best iterate after max_iter.
Eigen::VectorXd newton_solve(const ResidualMap& f, Eigen::VectorXd x0, const NewtonOptions& opt = {},
                             const JacobianMap& jac = {});

} // namespace janossy
