#pragma once

#include "janossy/numcore.hpp"

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <vector>

namespace janossy {

using SymmetricKernel = std::function<double(double, double)>;

// Resolvent and gap probabilities refuse operators with 1 - lambda_max below this.
inline constexpr double kResolventGate = 1e-8;

// Nystrom matrix M_ij = sqrt(w_i) K(x_i, x_j) sqrt(w_j). The spectrum is
// computed on first use; copies share it.
class NystromOperator {
public:
    NystromOperator(SymmetricKernel kernel, QuadratureRule rule);

    const QuadratureRule& rule() const;
    const Eigen::MatrixXd& matrix() const;
    double kernel(double x, double y) const;
    const SymmetricSpectrum& spectrum() const;
    double lambda_max() const;
    std::size_t size() const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

NystromOperator discretize(SymmetricKernel kernel, const QuadratureRule& rule);

// det(1 - theta K) = prod (1 - theta lambda_i)
double det1m(const NystromOperator& op, double theta = 1.0);

// R = K (1 - K)^{-1} at (x, y) by the Nystrom interpolation formula.
double resolvent(const NystromOperator& op, double x, double y);

// P(exactly m points) for m = 0..m_max: prod(1 - lambda) e_m(mu), mu = lambda / (1 - lambda).
// e_m comes from the product expansion of prod(1 + mu_i t).
std::vector<double> gap_probs(const NystromOperator& op, int m_max);

// The same probabilities from det(1 - M) and Newton's identities applied to
// tr(R^j), R = M (1 - M)^{-1} formed by matrix algebra.
std::vector<double> gap_probs_traces(const NystromOperator& op, int m_max);

} // namespace janossy
