#pragma once

#include "janossy/potential.hpp"
#include "janossy/scaled.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace janossy {

// Weight w_n(x) = exp(-n V(x)) on the real line, or on (-inf, c] when
// endpoint is set.
struct WeightSpec {
    Potential potential;
    int n = 1;
    std::optional<double> endpoint;

    bool half_line() const { return endpoint.has_value(); }
    // minimum of V over the support
    double v_min() const;
};

struct OrthoResolution {
    // Gauss-Legendre nodes per expected oscillation of the top polynomial
    int nodes_per_oscillation = 24;
    int nodes_per_panel = 16;
    // the support is cut where w_n falls below 10^weight_floor_log10 of its max,
    // then widened while the top orthonormal function is not negligible there
    double weight_floor_log10 = -300.0;
    int max_extensions = 12;
};

// Monic recurrence p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}, computed for
// the shifted weight exp(-n (V - v_shift)). Norms refer to the true weight.
struct RecurrenceTable {
    WeightSpec weight;
    double v_shift = 0.0;
    std::vector<double> alpha; // k = 0..K
    std::vector<double> beta;  // k = 0..K; beta_0 is the shifted total mass
    std::vector<double> log_h; // log of squared norms of monic p_k against exp(-nV)
    double lo = 0.0, hi = 0.0; // discretization support
    int nodes = 0;

    int K() const { return static_cast<int>(alpha.size()) - 1; }
    double h(int k) const;
    // leading coefficient of the orthonormal p_k, h_k^{-1/2}
    double gamma(int k) const;
    double log_gamma(int k) const { return -0.5 * log_h[k]; }
};

RecurrenceTable build_recurrence(const WeightSpec& w, int K, const OrthoResolution& res = {});

// phi_k(x) = p_k(x) exp(-n V(x) / 2) with p_k orthonormal.
Scaled eval_phi(const RecurrenceTable& t, int k, double x);

// p_{k-1}, p_k and their derivatives at x, all multiplied by exp(log_factor).
// exp(log_factor) carries both the recurrence rescaling and sqrt(w_n(x)).
struct PhiState {
    double prev = 0.0, cur = 0.0;
    double dprev = 0.0, dcur = 0.0;
    double log_factor = 0.0;
};

PhiState phi_state(const RecurrenceTable& t, int k, double x);

// K_n(x,y) = sum_{k<n} phi_k(x) phi_k(y) in Christoffel-Darboux form.
double cd_kernel(const RecurrenceTable& t, int n, double x, double y);
// The same kernel by the direct sum, for checking.
double cd_kernel_sum(const RecurrenceTable& t, int n, double x, double y);

// cd_kernel with the recurrence states at `nodes` precomputed; other points
// fall back to cd_kernel. Used to fill Nystrom matrices.
std::function<double(double, double)> cd_kernel_on_nodes(const RecurrenceTable& t, int n,
                                                         std::vector<double> nodes);

// Kernel of the half-line system evaluated in the counting window: x, y >= c.
double l_kernel_cd(const RecurrenceTable& tilde, int n, double x, double y);

// det[K_n(x_i, x_j)]
Scaled correlation_k(const RecurrenceTable& t, int n, const std::vector<double>& points);

// D * det[L(x_i, x_j)] with points in [c, inf)
double janossy_k(const RecurrenceTable& tilde, int n, const std::vector<double>& points, double D);

} // namespace janossy
