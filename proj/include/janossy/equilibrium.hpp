#pragma once

#include "janossy/potential.hpp"
#include "janossy/specfun.hpp"

#include <memory>
#include <vector>

namespace janossy {

// One-interval measure on [b, c] with density
//   psi(x) = (1/pi) [ sqrt((x-b)(c-x)) q(x) + C sqrt((x-b)/(c-x)) ].
// C = 0 is the free equilibrium measure (q = h_V / 2); C > 0 carries the
// inverse square root of a pinned right endpoint.
struct OneCutMeasure {
    Potential V;
    double b = -1.0;
    double c = 1.0;
    std::vector<double> q;
    double C = 0.0;
    double ell = 0.0; // Lagrange constant of g+ + g- - V - ell = 0 on the band
    int theta_nodes = 200;

    double midpoint() const { return 0.5 * (b + c); }
    double halfwidth() const { return 0.5 * (c - b); }
    // psi(x); 0 outside (b, c)
    double density(double x) const;
    // psi(s) ds in the variable s = midpoint + halfwidth cos(theta); smooth
    double density_theta(double theta) const;
    double mass() const;
    // integral of psi over (x, c)
    double mass_right_of(double x) const;
};

struct EquilibriumMeasure : OneCutMeasure {
    // The potential stored in V is the input potential rescaled so that the
    // right endpoint sits at 1: V(x) = V_input(scale * x).
    double scale = 1.0;
    std::vector<double> h; // h_V = 2 q
    double beta = 0.0;     // psi(x) ~ beta sqrt(1 - x) at the right edge
    double c_V = 0.0;

    double a() const { return c; }
    double h_at(double x) const;
};

struct ConstrainedMeasure : OneCutMeasure {
    // true when the pin lies at or beyond the free right endpoint, in which
    // case the free measure is returned unchanged
    bool is_free = false;
    double pin = 1.0;
    double free_right = 1.0;
    // coefficient of (c - x)^{-1/2} at the pinned edge: psi ~ edge_inverse_sqrt / sqrt(c - x)
    double edge_inverse_sqrt() const;
};

struct SolveOptions {
    int theta_nodes = 200;
    double tol = 1e-14;
    int max_iter = 60;
};

EquilibriumMeasure solve_full_line(const Potential& V, const SolveOptions& opt = {});
// Free measure of V on its own scale (no rescaling).
EquilibriumMeasure solve_free_unscaled(const Potential& V, const SolveOptions& opt = {});
ConstrainedMeasure solve_constrained(const Potential& V, double c, const SolveOptions& opt = {});

double density_at(const OneCutMeasure& m, double x);

// Edge scaling constant: with lambda = 1 + s / (c_V n^{2/3}) the local
// eigenvalue density matches the Airy kernel. c_V = (pi beta)^{2/3}.
double edge_constant(const EquilibriumMeasure& m);

class GPhiPair {
public:
    explicit GPhiPair(std::shared_ptr<const OneCutMeasure> m);

    // g(z) = integral log(z - s) psi(s) ds, z off (-inf, c]
    cplx g(cplx z) const;
    // boundary values on the real axis; side = +1 (upper) or -1 (lower)
    cplx g_side(double x, int side) const;
    // real part of g on the real axis: integral log|x - s| psi(s) ds
    double log_potential(double x) const;
    double ell() const { return m_->ell; }
    // phi(x) = integral_c^x phi'(s) ds for x > c, with
    // g+ + g- - V - ell = -phi
    double phi(double x) const;
    // g+ + g- - V - ell on the real axis
    double euler_lagrange(double x) const;

private:
    std::shared_ptr<const OneCutMeasure> m_;
};

GPhiPair g_phi(const OneCutMeasure& m);

} // namespace janossy
