#pragma once

#include "janossy/fredholm.hpp"
#include "janossy/orthopoly.hpp"
#include "janossy/potential.hpp"

#include <cmath>
#include <memory>
#include <vector>

namespace janossy {

// (Ai(x)Ai'(y) - Ai'(x)Ai(y)) / (x - y), diagonal Ai'(x)^2 - x Ai(x)^2.
double airy_kernel(double x, double y);

// Lowest deterministic gates on the window edge alpha.
inline constexpr double kDeterminantGate = -7.0;
inline constexpr double kResolventAlphaGate = -6.0;
inline constexpr int kAiryWindowNodes = 160;

// Point beyond which Ai^2 < 1e-30.
double airy_tail_cut();

// Nystrom discretization of the Airy kernel on [alpha, alpha + T].
class AiryWindow {
public:
    explicit AiryWindow(double alpha, int m = kAiryWindowNodes);

    double alpha() const { return alpha_; }
    double upper() const { return upper_; }
    double truncation() const { return upper_ - alpha_; }
    int resolution() const { return m_; }
    const NystromOperator& op() const { return op_; }

private:
    double alpha_, upper_;
    int m_;
    NystromOperator op_;
};

double tw_fredholm(double alpha, int m = kAiryWindowNodes);

// Hastings-McLeod solution of u'' = s u + 2 u^3 on Chebyshev points of [s_L, s_R].
struct HastingsMcLeod {
    double s_left = -12.0, s_right = 8.0;
    std::vector<double> s; // ascending
    std::vector<double> u;
    std::vector<double> up;
    double residual = 0.0; // max |u'' - s u - 2u^3| at interior points

    // barycentric interpolation of u and u'
    double value(double x) const;
    double derivative(double x) const;
};

HastingsMcLeod hastings_mcleod(double s_left = -12.0, double s_right = 8.0, int grid = 240);
// shared default solution, built on first use
const HastingsMcLeod& default_hastings_mcleod();

// exp(-integral_alpha^inf (s - alpha) u^2 ds)
double tw_painleve(double alpha, const HastingsMcLeod& hm);
double tw_painleve(double alpha);
// integral_alpha^inf u^2 ds = d/dalpha log F_TW
double painleve_u2_tail(double alpha, const HastingsMcLeod& hm);
double painleve_u2_tail(double alpha);

enum class Regime { right, left }; // alpha > 0, alpha <= 0

// Airy resolvent on [alpha, inf).
class LimitKernel {
public:
    explicit LimitKernel(double alpha, int m = kAiryWindowNodes);

    double alpha() const { return window_->alpha(); }
    Regime regime() const { return alpha() > 0.0 ? Regime::right : Regime::left; }
    double operator()(double x, double y) const;
    const AiryWindow& window() const { return *window_; }

private:
    std::shared_ptr<const AiryWindow> window_;
};

LimitKernel limit_kernel(double alpha, int m = kAiryWindowNodes);

// |M_{+delta}(x, y) - M_{-delta}(x, y)|
double continuity_at_zero(double delta, double x, double y, int m = kAiryWindowNodes);

// Kernel assembled from the large-|alpha| forms
//   f(z) = A^{1/2} I0(w), g(z) = sqrt(z) A^{1/2} I1(w), A = |alpha| - 2z/3, w = sqrt(z) A,
// with z = x - alpha, scaled by kappa so that it matches the limit kernel on
// the diagonal at alpha + 0.7.
class BesselFormKernel {
public:
    BesselFormKernel(double alpha, const LimitKernel& reference);
    explicit BesselFormKernel(double alpha);

    double alpha() const { return alpha_; }
    double kappa() const { return kappa_; }
    double raw(double x, double y) const;
    double operator()(double x, double y) const { return kappa_ * raw(x, y); }

    static constexpr double kFitOffset = 0.7;

private:
    void check(double x) const;
    double alpha_;
    double kappa_ = 1.0;
};

double bessel_form_kernel(double alpha, double x, double y);

// P(lambda_m <= alpha) in the edge limit: F_TW(alpha) sum_{k<m} e_k(mu).
// Cross-checked against the cumulative gap probabilities.
double mth_law_limit(int m, double alpha, int res = kAiryWindowNodes);

struct MthLaw {
    int m = 1;
    std::vector<double> alpha;
    std::vector<double> F;
};

MthLaw mth_law_table(int m, const std::vector<double>& alphas, int res = kAiryWindowNodes);

// Piecewise-linear CDF over a tabulated grid; 0 below and 1 above.
class TabulatedCdf {
public:
    TabulatedCdf() = default;
    explicit TabulatedCdf(MthLaw law);
    double operator()(double alpha) const;
    const MthLaw& law() const { return law_; }

private:
    MthLaw law_;
};

// Edge-scaled finite-n kernel (1/(c_V n^{2/3})) L_{n,alpha}(1 + x/(c_V n^{2/3}), ...)
// for the potential normalized so that its band ends at 1.
class FiniteNEdgeKernel {
public:
    FiniteNEdgeKernel(const Potential& V, int n, double alpha, const OrthoResolution& res = {});

    double operator()(double x, double y) const;
    double c() const { return c_; }
    double c_V() const { return cV_; }
    double edge_scale() const { return cV_ * std::pow(static_cast<double>(n_), 2.0 / 3.0); }
    const RecurrenceTable& table() const { return table_; }

private:
    int n_;
    double alpha_, c_, cV_;
    RecurrenceTable table_;
};

double finite_n_scaled_kernel(const Potential& V, int n, double alpha, double x, double y);

struct RateResult {
    std::vector<int> ns;
    std::vector<double> finite;
    std::vector<double> limit;
    std::vector<double> errors;
    double slope = 0.0;
    double intercept = 0.0;
    // set when some error sample is already at quadrature noise
    bool noise_floor = false;
};

RateResult convergence_rate(const Potential& V, double alpha, const std::vector<int>& ns, double x,
                            double y, const OrthoResolution& res = {},
                            int window_nodes = kAiryWindowNodes);

} // namespace janossy
