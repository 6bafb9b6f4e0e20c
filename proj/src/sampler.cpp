#include "janossy/sampler.hpp"

#include "janossy/errors.hpp"
#include "janossy/numcore.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace janossy {

SpectrumSample sample_spectrum(int n, std::uint64_t seed, std::uint64_t index)
{
    if (n < 1)
        throw DomainError("sample_spectrum: n must be positive");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i)
        diag(i) = normal(rng);
    for (int k = n - 1; k >= 1; --k) {
        std::gamma_distribution<double> gamma(static_cast<double>(k), 1.0);
        off(n - 1 - k) = std::sqrt(gamma(rng));
    }
    Eigen::VectorXd ev = tridiag_eigenvalues(diag, off);
    const double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
    SpectrumSample s;
    s.n = n;
    s.seed = seed;
    s.index = index;
    s.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i)
        s.eigenvalues[i] = ev(i) * scale;
    return s;
}

double scale_statistic(const SpectrumSample& s, int m, double c_V)
{
    if (m < 1 || m > s.n)
        throw DomainError("scale_statistic: need 1 <= m <= n");
    return c_V * std::pow(static_cast<double>(s.n), 2.0 / 3.0) * (s.eigenvalues[m - 1] - 1.0);
}

EmpiricalLaw::EmpiricalLaw(std::vector<double> values) : sorted_(std::move(values))
{
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalLaw::cdf(double x) const
{
    if (sorted_.empty())
        return 0.0;
    auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalLaw::quantile(double p) const
{
    if (sorted_.empty())
        throw DomainError("EmpiricalLaw: empty sample");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("EmpiricalLaw: probability outside [0, 1]");
    double pos = p * static_cast<double>(sorted_.size() - 1);
    std::size_t i = static_cast<std::size_t>(std::floor(pos));
    if (i + 1 >= sorted_.size())
        return sorted_.back();
    double t = pos - static_cast<double>(i);
    return sorted_[i] + t * (sorted_[i + 1] - sorted_[i]);
}

double ks_distance(const EmpiricalLaw& emp, const CdfFunction& theory)
{
    const auto& v = emp.sorted();
    const double N = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double F = theory(v[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / N - F));
        d = std::max(d, std::abs(F - static_cast<double>(i) / N));
    }
    return std::min(d, 1.0);
}

double ks_distance(const EmpiricalLaw& a, const EmpiricalLaw& b)
{
    double d = 0.0;
    for (double x : a.sorted())
        d = std::max(d, std::abs(a.cdf(x) - b.cdf(x)));
    for (double x : b.sorted())
        d = std::max(d, std::abs(a.cdf(x) - b.cdf(x)));
    return d;
}

std::vector<EmpiricalLaw> sample_edge_statistics(const EdgeSampleOptions& opt)
{
    if (opt.count < 1 || opt.m_max < 1 || opt.m_max > opt.n)
        throw DomainError("sample_edge_statistics: need count >= 1 and 1 <= m_max <= n");
    std::vector<std::vector<double>> stats(opt.m_max, std::vector<double>(opt.count));
    int threads = opt.threads > 0 ? opt.threads
                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, opt.count);
    // draw i always lands in slot i, so the result does not depend on threads
    auto work = [&](int t) {
        for (int i = t; i < opt.count; i += threads) {
            SpectrumSample s = sample_spectrum(opt.n, opt.seed, static_cast<std::uint64_t>(i));
            for (int m = 1; m <= opt.m_max; ++m)
                stats[m - 1][i] = scale_statistic(s, m, opt.c_V);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool)
        th.join();
    std::vector<EmpiricalLaw> out;
    for (auto& v : stats)
        out.emplace_back(std::move(v));
    return out;
}

} // namespace janossy
