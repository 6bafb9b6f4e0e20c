#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace janossy {

// Eigenvalues of the V = 2x^2 unitary ensemble, sorted descending.
struct SpectrumSample {
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
    std::vector<double> eigenvalues;
};

// Draw `index` of the stream `seed`: tridiagonal beta = 2 model
// (N(0,1) diagonal, sqrt(Gamma(k,1)) off-diagonal) scaled by 1/(2 sqrt(n)).
SpectrumSample sample_spectrum(int n, std::uint64_t seed, std::uint64_t index = 0);

// c_V n^{2/3} (lambda_m - 1), m counted from 1
double scale_statistic(const SpectrumSample& s, int m, double c_V);

class EmpiricalLaw {
public:
    EmpiricalLaw() = default;
    explicit EmpiricalLaw(std::vector<double> values);

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted() const { return sorted_; }
    // fraction of values <= x
    double cdf(double x) const;
    double quantile(double p) const;
    double median() const { return quantile(0.5); }

private:
    std::vector<double> sorted_;
};

using CdfFunction = std::function<double(double)>;

// sup |F_emp - F| over the sample points, both one-sided limits included.
double ks_distance(const EmpiricalLaw& emp, const CdfFunction& theory);
// two-sample version
double ks_distance(const EmpiricalLaw& a, const EmpiricalLaw& b);

struct EdgeSampleOptions {
    int n = 200;
    int count = 10000;
    std::uint64_t seed = 1;
    int m_max = 2;
    double c_V = 2.0;
    int threads = 0; // 0: hardware concurrency
};

// Scaled statistics of lambda_1 .. lambda_{m_max}; laws[m-1] belongs to lambda_m.
std::vector<EmpiricalLaw> sample_edge_statistics(const EdgeSampleOptions& opt);

} // namespace janossy
