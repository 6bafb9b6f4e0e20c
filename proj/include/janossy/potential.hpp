#pragma once

#include <string>
#include <vector>

namespace janossy {

// Real polynomial V(x) = sum_k coeffs[k] x^k of even degree with positive
// leading coefficient.
class Potential {
public:
    Potential() = default;
    explicit Potential(std::vector<double> coeffs);

    static Potential gue() { return Potential({0.0, 0.0, 2.0}); }

    double operator()(double x) const;
    double derivative(double x) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    // coefficients of V'
    std::vector<double> derivative_coeffs() const;
    bool is_even() const;
    // V(s x)
    Potential rescaled(double s) const;
    double minimum() const;
    // real roots of V', ascending
    std::vector<double> critical_points() const;
    // minimum of V over (-inf, c]
    double minimum_left_of(double c) const;
    std::string to_string() const;

private:
    std::vector<double> coeffs_;
};

double eval_poly(const std::vector<double>& c, double x);

} // namespace janossy
