#include "janossy/edge_laws.hpp"

#include "janossy/errors.hpp"
#include "janossy/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace janossy {

namespace {

double airy_kernel_from(double x, const AiryPair& a, double y, const AiryPair& b)
{
    if (x == y)
        return a.aip * a.aip - x * a.ai * a.ai;
    if (std::abs(x - y) <= 1e-7 * (1.0 + std::abs(x))) {
        // symmetric kernel: the midpoint diagonal is second-order accurate
        double m = 0.5 * (x + y);
        AiryPair c = airy(m);
        return c.aip * c.aip - m * c.ai * c.ai;
    }
    return (a.ai * b.aip - a.aip * b.ai) / (x - y);
}

// Airy values at the quadrature nodes, so the Nystrom matrix costs O(m)
// special-function calls.
struct NodeAiry {
    std::vector<double> x; // ascending
    std::vector<AiryPair> v;

    AiryPair at(double t) const
    {
        auto it = std::lower_bound(x.begin(), x.end(), t);
        if (it != x.end() && *it == t)
            return v[static_cast<std::size_t>(it - x.begin())];
        // resolvent rows evaluate K(t, x_i) for a fixed off-grid t
        thread_local double last_t = NAN;
        thread_local AiryPair last_v;
        if (t != last_t) {
            last_v = airy(t);
            last_t = t;
        }
        return last_v;
    }
};

SymmetricKernel cached_airy_kernel(const QuadratureRule& rule)
{
    auto c = std::make_shared<NodeAiry>();
    c->x = rule.nodes;
    std::sort(c->x.begin(), c->x.end());
    for (double t : c->x)
        c->v.push_back(airy(t));
    return [c](double x, double y) { return airy_kernel_from(x, c->at(x), y, c->at(y)); };
}

QuadratureRule window_rule(double alpha, double upper, int m)
{
    if (!std::isfinite(alpha))
        throw DomainError("AiryWindow: alpha not finite");
    if (m < 8)
        throw DomainError("AiryWindow: resolution too small");
    return mapped_rule(gauss_legendre(m), alpha, upper);
}

} // namespace

double airy_kernel(double x, double y)
{
    return airy_kernel_from(x, airy(x), y, airy(y));
}

double airy_tail_cut()
{
    static const double cut = [] {
        double lo = 2.0, hi = 30.0;
        for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
            double mid = 0.5 * (lo + hi);
            double a = airy_ai(mid);
            (a * a < 1e-30 ? hi : lo) = mid;
        }
        return hi;
    }();
    return cut;
}

AiryWindow::AiryWindow(double alpha, int m)
    : alpha_(alpha), upper_(std::max(airy_tail_cut(), alpha + 1.0)), m_(m),
      op_([&] {
          QuadratureRule r = window_rule(alpha_, upper_, m_);
          return discretize(cached_airy_kernel(r), r);
      }())
{
}

double tw_fredholm(double alpha, int m)
{
    if (alpha < kDeterminantGate)
        throw ConditioningError("tw_fredholm: alpha = " + std::to_string(alpha) +
                                " below the determinant gate -7");
    AiryWindow w(alpha, m);
    return det1m(w.op(), 1.0);
}

LimitKernel::LimitKernel(double alpha, int m)
{
    if (alpha < kResolventAlphaGate)
        throw ConditioningError("limit_kernel: alpha = " + std::to_string(alpha) +
                                " below the resolvent gate -6");
    window_ = std::make_shared<const AiryWindow>(alpha, m);
}

double LimitKernel::operator()(double x, double y) const
{
    double a = alpha();
    if (x < a || y < a)
        throw DomainError("limit_kernel: arguments must be >= alpha");
    return resolvent(window_->op(), x, y);
}

LimitKernel limit_kernel(double alpha, int m)
{
    return LimitKernel(alpha, m);
}

double continuity_at_zero(double delta, double x, double y, int m)
{
    if (delta < 0.0)
        throw DomainError("continuity_at_zero: delta must be nonnegative");
    if (x <= delta || y <= delta)
        throw DomainError("continuity_at_zero: need x, y > delta");
    if (delta == 0.0)
        return 0.0;
    return std::abs(LimitKernel(delta, m)(x, y) - LimitKernel(-delta, m)(x, y));
}

double mth_law_limit(int m, double alpha, int res)
{
    if (m < 1 || m > 6)
        throw DomainError("mth_law_limit: m must be in 1..6");
    if (alpha < kResolventAlphaGate)
        throw ConditioningError("mth_law_limit: alpha below the resolvent gate -6");
    AiryWindow w(alpha, res);
    if (m == 1)
        return det1m(w.op(), 1.0);
    std::vector<double> a = gap_probs_traces(w.op(), m - 1);
    std::vector<double> b = gap_probs(w.op(), m - 1);
    double A = 0.0, B = 0.0;
    for (int k = 0; k < m; ++k) {
        A += a[k];
        B += b[k];
    }
    if (!(std::abs(A - B) <= 1e-6))
        throw ConsistencyError("mth_law_limit: routes disagree by " + std::to_string(std::abs(A - B)));
    return A;
}

MthLaw mth_law_table(int m, const std::vector<double>& alphas, int res)
{
    MthLaw law;
    law.m = m;
    law.alpha = alphas;
    law.F.reserve(alphas.size());
    for (double a : alphas)
        law.F.push_back(mth_law_limit(m, a, res));
    return law;
}

TabulatedCdf::TabulatedCdf(MthLaw law) : law_(std::move(law))
{
    if (law_.alpha.size() < 2 || law_.alpha.size() != law_.F.size())
        throw DomainError("TabulatedCdf: need at least two tabulated points");
    if (!std::is_sorted(law_.alpha.begin(), law_.alpha.end()))
        throw DomainError("TabulatedCdf: grid must ascend");
}

double TabulatedCdf::operator()(double a) const
{
    const auto& x = law_.alpha;
    const auto& F = law_.F;
    if (a <= x.front())
        return a < x.front() ? 0.0 : F.front();
    if (a >= x.back())
        return a > x.back() ? 1.0 : F.back();
    auto it = std::upper_bound(x.begin(), x.end(), a);
    std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    double t = (a - x[i]) / (x[i + 1] - x[i]);
    return F[i] + t * (F[i + 1] - F[i]);
}

} // namespace janossy
