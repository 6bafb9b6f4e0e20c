#include "janossy/potential.hpp"

#include "janossy/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace janossy {

double eval_poly(const std::vector<double>& c, double x)
{
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        s = s * x + *it;
    return s;
}

Potential::Potential(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0)
        coeffs_.pop_back();
    int d = degree();
    if (d < 2 || d % 2 != 0)
        throw DomainError("Potential: degree must be even and at least 2");
    if (!(coeffs_.back() > 0.0))
        throw DomainError("Potential: leading coefficient must be positive");
    for (double c : coeffs_)
        if (!std::isfinite(c))
            throw DomainError("Potential: non-finite coefficient");
}

double Potential::operator()(double x) const
{
    return eval_poly(coeffs_, x);
}

std::vector<double> Potential::derivative_coeffs() const
{
    std::vector<double> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(k * coeffs_[k]);
    return d;
}

double Potential::derivative(double x) const
{
    return eval_poly(derivative_coeffs(), x);
}

bool Potential::is_even() const
{
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (coeffs_[k] != 0.0)
            return false;
    return true;
}

Potential Potential::rescaled(double s) const
{
    std::vector<double> c(coeffs_);
    double p = 1.0;
    for (auto& ck : c) {
        ck *= p;
        p *= s;
    }
    return Potential(c);
}

std::vector<double> Potential::critical_points() const
{
    std::vector<double> d = derivative_coeffs();
    while (d.size() > 1 && d.back() == 0.0)
        d.pop_back();
    int n = static_cast<int>(d.size()) - 1;
    std::vector<double> out;
    if (n < 1)
        return out;
    // real eigenvalues of the companion matrix of V', polished by Newton
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        comp(0, i) = -d[n - 1 - i] / d[n];
    for (int i = 1; i < n; ++i)
        comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<double> dd;
    for (std::size_t k = 1; k < d.size(); ++k)
        dd.push_back(k * d[k]);
    for (int i = 0; i < n; ++i) {
        auto r = es.eigenvalues()(i);
        if (std::abs(r.imag()) > 1e-7 * (1.0 + std::abs(r.real())))
            continue;
        double x = r.real();
        for (int it = 0; it < 4; ++it) {
            double slope = eval_poly(dd, x);
            if (slope == 0.0)
                break;
            x -= eval_poly(d, x) / slope;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double Potential::minimum() const
{
    double best = (*this)(0.0);
    for (double x : critical_points())
        best = std::min(best, (*this)(x));
    return best;
}

double Potential::minimum_left_of(double c) const
{
    double best = (*this)(c);
    for (double x : critical_points())
        if (x <= c)
            best = std::min(best, (*this)(x));
    return best;
}

std::string Potential::to_string() const
{
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0.0)
            continue;
        if (!first)
            os << " + ";
        os << coeffs_[k];
        if (k >= 1)
            os << "*x";
        if (k >= 2)
            os << "^" << k;
        first = false;
    }
    return first ? "0" : os.str();
}

} // namespace janossy
