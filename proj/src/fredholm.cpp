#include "janossy/fredholm.hpp"

#include "janossy/errors.hpp"

#include <cmath>
#include <mutex>
#include <string>

namespace janossy {

struct NystromOperator::State {
    SymmetricKernel kernel;
    QuadratureRule rule;
    Eigen::VectorXd sqrt_w;
    Eigen::MatrixXd M;
    std::once_flag once;
    SymmetricSpectrum spectrum;
};

NystromOperator::NystromOperator(SymmetricKernel kernel, QuadratureRule rule)
    : state_(std::make_shared<State>())
{
    auto& s = *state_;
    s.kernel = std::move(kernel);
    s.rule = std::move(rule);
    const int N = static_cast<int>(s.rule.size());
    s.sqrt_w.resize(N);
    for (int i = 0; i < N; ++i) {
        if (!(s.rule.weights[i] >= 0.0))
            throw DomainError("discretize: negative quadrature weight");
        s.sqrt_w(i) = std::sqrt(s.rule.weights[i]);
    }
    Eigen::MatrixXd K(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            K(i, j) = s.kernel(s.rule.nodes[i], s.rule.nodes[j]);
    double scale = N > 0 ? K.cwiseAbs().maxCoeff() : 0.0;
    if (!std::isfinite(scale))
        throw DomainError("discretize: kernel not finite on the nodes");
    double asym = N > 0 ? (K - K.transpose()).cwiseAbs().maxCoeff() : 0.0;
    if (asym > 1e-10 * std::max(1.0, scale))
        throw DomainError("discretize: kernel asymmetry " + std::to_string(asym));
    K = 0.5 * (K + K.transpose());
    s.M = s.sqrt_w.asDiagonal() * K * s.sqrt_w.asDiagonal();
}

const QuadratureRule& NystromOperator::rule() const
{
    return state_->rule;
}

const Eigen::MatrixXd& NystromOperator::matrix() const
{
    return state_->M;
}

double NystromOperator::kernel(double x, double y) const
{
    return state_->kernel(x, y);
}

std::size_t NystromOperator::size() const
{
    return state_->rule.size();
}

const SymmetricSpectrum& NystromOperator::spectrum() const
{
    auto& s = *state_;
    std::call_once(s.once, [&s] {
        if (s.M.rows() == 0) {
            s.spectrum = {};
            return;
        }
        s.spectrum = sym_eigs(s.M);
    });
    return s.spectrum;
}

double NystromOperator::lambda_max() const
{
    const auto& ev = spectrum().eigenvalues;
    return ev.size() ? ev(0) : 0.0;
}

NystromOperator discretize(SymmetricKernel kernel, const QuadratureRule& rule)
{
    return NystromOperator(std::move(kernel), rule);
}

double det1m(const NystromOperator& op, double theta)
{
    const auto& ev = op.spectrum().eigenvalues;
    double d = 1.0;
    for (int i = 0; i < ev.size(); ++i)
        d *= 1.0 - theta * ev(i);
    return d;
}

namespace {

void gate(const NystromOperator& op, const char* who)
{
    double gap = 1.0 - op.lambda_max();
    if (!(gap > kResolventGate))
        throw ConditioningError(std::string(who) + ": 1 - lambda_max = " + std::to_string(gap) +
                                " below the 1e-8 gate");
}

} // namespace

double resolvent(const NystromOperator& op, double x, double y)
{
    gate(op, "resolvent");
    const auto& rule = op.rule();
    const auto& sp = op.spectrum();
    const int N = static_cast<int>(rule.size());
    Eigen::VectorXd ax(N), ay(N);
    for (int i = 0; i < N; ++i)
        ax(i) = op.kernel(x, rule.nodes[i]) * std::sqrt(rule.weights[i]);
    for (int i = 0; i < N; ++i)
        ay(i) = op.kernel(rule.nodes[i], y) * std::sqrt(rule.weights[i]);
    Eigen::VectorXd px = sp.eigenvectors.transpose() * ax;
    Eigen::VectorXd py = sp.eigenvectors.transpose() * ay;
    double r = op.kernel(x, y);
    for (int k = 0; k < N; ++k)
        r += px(k) * py(k) / (1.0 - sp.eigenvalues(k));
    return r;
}

std::vector<double> gap_probs(const NystromOperator& op, int m_max)
{
    if (m_max < 0)
        throw DomainError("gap_probs: m_max must be nonnegative");
    gate(op, "gap_probs");
    const auto& ev = op.spectrum().eigenvalues;
    std::vector<double> e(m_max + 1, 0.0);
    e[0] = 1.0;
    double D = 1.0;
    // descending eigenvalues: largest mu first
    for (int i = 0; i < ev.size(); ++i) {
        double mu = ev(i) / (1.0 - ev(i));
        D *= 1.0 - ev(i);
        for (int m = m_max; m >= 1; --m)
            e[m] += mu * e[m - 1];
    }
    for (double& v : e)
        v *= D;
    return e;
}

std::vector<double> gap_probs_traces(const NystromOperator& op, int m_max)
{
    if (m_max < 0)
        throw DomainError("gap_probs_traces: m_max must be nonnegative");
    gate(op, "gap_probs_traces");
    const Eigen::MatrixXd& M = op.matrix();
    const int N = static_cast<int>(M.rows());
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(N, N);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(I - M);
    double D = lu.determinant();
    Eigen::MatrixXd R = lu.solve(M);
    std::vector<double> p(m_max + 1, 0.0);
    Eigen::MatrixXd Rj = R;
    for (int j = 1; j <= m_max; ++j) {
        p[j] = Rj.trace();
        if (j < m_max)
            Rj = Rj * R;
    }
    // Newton: m e_m = sum_{j=1}^m (-1)^{j-1} e_{m-j} p_j
    std::vector<double> e(m_max + 1, 0.0);
    e[0] = 1.0;
    for (int m = 1; m <= m_max; ++m) {
        double s = 0.0;
        for (int j = 1; j <= m; ++j)
            s += (j % 2 ? 1.0 : -1.0) * e[m - j] * p[j];
        e[m] = s / m;
    }
    for (double& v : e)
        v *= D;
    return e;
}

} // namespace janossy
