#include "acceptance.hpp"

#include "janossy/edge_laws.hpp"
#include "janossy/equilibrium.hpp"
#include "janossy/errors.hpp"
#include "janossy/fredholm.hpp"
#include "janossy/orthopoly.hpp"
#include "janossy/sampler.hpp"
#include "janossy/specfun.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>

namespace janossy::acceptance {

namespace {

std::string fmt(const char* f, ...)
{
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

class Timer {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CriterionResult tracy_widom_cross_method()
{
    Timer t;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        double a = -6.0 + 9.0 * i / 19.0;
        worst = std::max(worst, std::abs(tw_fredholm(a) - tw_painleve(a)));
    }
    double s = t.seconds();
    return {1, "", worst <= 1e-6 && s <= 60.0, fmt("max |F_fredholm - F_painleve| = %.3e over 20 points", worst), s};
}

CriterionResult triple_identity()
{
    double worst = 0.0;
    std::string detail;
    for (double a : {-2.0, 0.0, 1.0}) {
        const double h = 1e-4;
        double fd = (std::log(tw_fredholm(a + h)) - std::log(tw_fredholm(a - h))) / (2.0 * h);
        double m = LimitKernel(a)(a, a);
        double u = painleve_u2_tail(a);
        double d = std::max({std::abs(fd - m), std::abs(fd - u), std::abs(m - u)});
        worst = std::max(worst, d);
        detail += fmt("a=%g: %.9f %.9f %.9f; ", a, fd, m, u);
    }
    return {2, "", worst <= 1e-5, detail + fmt("max pairwise %.2e", worst), 0.0};
}

CriterionResult janossy_gap_equivalence()
{
    double worst = 0.0, worst_sum = 0.0;
    for (double a : {-3.0, -1.0, 0.0, 1.0}) {
        AiryWindow w(a);
        std::vector<double> A = gap_probs_traces(w.op(), 3);
        std::vector<double> B = gap_probs(w.op(), 3);
        double ca = 0.0, cb = 0.0;
        for (int m = 1; m <= 4; ++m) {
            ca += A[m - 1];
            cb += B[m - 1];
            worst = std::max(worst, std::abs(ca - cb));
            worst = std::max(worst, std::abs(mth_law_limit(m, a) - cb));
        }
        std::vector<double> all = gap_probs(w.op(), static_cast<int>(w.op().size()));
        double total = 0.0;
        for (double p : all)
            total += p;
        worst_sum = std::max(worst_sum, std::abs(total - 1.0));
    }
    return {3, "", worst <= 1e-8 && worst_sum <= 1e-10,
            fmt("max |A - B| = %.2e, max |sum P(m) - 1| = %.2e", worst, worst_sum), 0.0};
}

CriterionResult finite_n_kernel_identity()
{
    Timer t;
    double worst = 0.0;
    for (int n : {8, 12, 20}) {
        RecurrenceTable full = build_recurrence(WeightSpec{Potential::gue(), n, {}}, n);
        for (double c : {0.95, 1.0, 1.05}) {
            std::vector<std::pair<double, double>> panels;
            const int P = 30;
            for (int i = 0; i < P; ++i)
                panels.push_back({c + (full.hi - c) * i / P, c + (full.hi - c) * (i + 1) / P});
            QuadratureRule rule = composite_rule(gauss_legendre(20), panels);
            NystromOperator op = discretize(cd_kernel_on_nodes(full, n, rule.nodes), rule);
            RecurrenceTable tilde = build_recurrence(WeightSpec{Potential::gue(), n, c}, n);
            for (int k = 0; k < 10; ++k) {
                double x = c + 0.02 + 0.07 * k, y = c + 0.05 + 0.045 * k;
                double cd = l_kernel_cd(tilde, n, x, y);
                double rv = resolvent(op, x, y);
                worst = std::max(worst, std::abs(cd - rv) / std::abs(rv));
            }
        }
    }
    double s = t.seconds();
    return {4, "", worst <= 1e-6 && s <= 120.0, fmt("max relative difference %.2e over 90 pairs", worst), s};
}

CriterionResult universality_rate()
{
    Timer t;
    bool ok = true;
    std::string detail;
    for (double a : {0.0, 1.0}) {
        RateResult r = convergence_rate(Potential::gue(), a, {16, 32, 64, 128}, 2.0, 3.0);
        ok = ok && r.slope >= -0.85 && r.slope <= -0.50 && !r.noise_floor;
        detail += fmt("a=%g slope %.4f; ", a, r.slope);
    }
    double s = t.seconds();
    return {5, "", ok && s <= 600.0, detail, s};
}

CriterionResult airy_side()
{
    double sup[3];
    int i = 0;
    for (double a : {3.0, 4.0, 5.0}) {
        LimitKernel M(a);
        double m = 0.0;
        for (int p = 0; p <= 15; ++p)
            for (int q = 0; q <= 15; ++q) {
                double x = a + 0.5 + 1.5 * p / 15.0, y = a + 0.5 + 1.5 * q / 15.0;
                m = std::max(m, std::abs(M(x, y) - airy_kernel(x, y)));
            }
        sup[i++] = m;
    }
    bool ok = sup[1] <= 1e-3 && sup[0] > sup[1] && sup[1] > sup[2];
    return {6, "", ok, fmt("sup |M - K_Airy| = %.3e, %.3e, %.3e at alpha = 3, 4, 5", sup[0], sup[1], sup[2]), 0.0};
}

CriterionResult bessel_side()
{
    bool ok = true;
    std::string detail;
    const std::pair<double, double> pairs[] = {{0.5, 1.0}, {0.3, 0.9}};
    for (auto [dx, dy] : pairs) {
        double dev[2];
        int i = 0;
        for (double a : {-3.0, -5.0}) {
            LimitKernel M(a);
            BesselFormKernel B(a, M);
            double x = a + dx, y = a + dy;
            dev[i++] = std::abs(B(x, y) - M(x, y)) / std::abs(M(x, y));
        }
        double ratio = dev[0] / dev[1];
        ok = ok && ratio >= 1.2;
        detail += fmt("(a+%g, a+%g): %.4f -> %.4f, factor %.2f; ", dx, dy, dev[0], dev[1], ratio);
    }
    return {7, "", ok, detail, 0.0};
}

CriterionResult continuity()
{
    double c2 = continuity_at_zero(1e-2, 1.0, 2.0);
    double c3 = continuity_at_zero(1e-3, 1.0, 2.0);
    bool ok = c3 < c2 && c2 <= 5e-3 && c3 <= 5e-3;
    return {8, "", ok, fmt("delta=1e-2: %.3e, delta=1e-3: %.3e", c2, c3), 0.0};
}

CriterionResult parametrix_suite()
{
    double worst = 0.0;
    for (const JumpSample& j : parametrix_jumps(20))
        worst = std::max(worst, j.residual);
    cplx d0 = bessel_Q(cplx(1.0, 0.0)).det();
    double det_spread = 0.0;
    for (cplx z : {cplx(4.0, 0.0), cplx(2.0, 1.0)})
        det_spread = std::max(det_spread, std::abs(bessel_Q(z).det() - d0));
    double asym = 0.0;
    for (double th : {0.0, 0.7, 1.5, 2.5, -1.0, -2.6}) {
        cplx z = std::polar(100.0, th);
        asym = std::max(asym, (model_PB(z) * bessel_twist(z).inverse() - Matrix2::identity()).max_abs());
    }
    bool ok = worst <= 1e-8 && det_spread <= 1e-10 && asym <= 0.15;
    return {9, "", ok,
            fmt("max jump residual %.2e (60 points), det Q spread %.2e, P_B asymptotic deviation %.3e", worst,
                det_spread, asym),
            0.0};
}

CriterionResult monte_carlo()
{
    Timer t;
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i)
        grid.push_back(-6.0 + 0.05 * i);
    TabulatedCdf F1(mth_law_table(1, grid));
    TabulatedCdf F2(mth_law_table(2, grid));
    EdgeSampleOptions opt;
    opt.n = 200;
    opt.count = 10000;
    opt.seed = 20240601;
    opt.m_max = 2;
    opt.c_V = edge_constant(solve_full_line(Potential::gue()));
    std::vector<EmpiricalLaw> laws = sample_edge_statistics(opt);
    double ks1 = ks_distance(laws[0], F1);
    double ks2 = ks_distance(laws[1], F2);
    double s = t.seconds();
    return {10, "", ks1 <= 0.03 && ks2 <= 0.04 && s <= 300.0, fmt("KS1 = %.4f, KS2 = %.4f", ks1, ks2), s};
}

CriterionResult equilibrium_suite()
{
    bool ok = true;
    std::string detail;
    EquilibriumMeasure g = solve_full_line(Potential::gue());
    double band = std::max(std::abs(g.scale * g.b + 1.0), std::abs(g.scale * g.c - 1.0));
    ok = ok && band <= 1e-10;
    detail += fmt("GUE band error %.1e; ", band);

    double bc = 0.0;
    for (double c : {0.95, 0.9, 0.5, 0.0, -0.5}) {
        ConstrainedMeasure m = solve_constrained(Potential::gue(), c);
        bc = std::max(bc, std::abs(m.b - (c - 2.0 * std::sqrt(c * c + 3.0)) / 3.0));
    }
    ok = ok && bc <= 1e-10;
    detail += fmt("b(c) error %.1e; ", bc);

    EquilibriumMeasure q = solve_full_line(Potential({0.0, 0.0, 0.0, 0.0, 1.0}));
    double mass = std::max(std::abs(g.mass() - 1.0), std::abs(q.mass() - 1.0));
    ok = ok && mass <= 1e-10;
    detail += fmt("mass error %.1e; ", mass);

    double eq = 0.0, ineq = -INFINITY;
    for (const EquilibriumMeasure* m : {&g, &q}) {
        GPhiPair gp = g_phi(*m);
        for (int i = 1; i <= 10; ++i) {
            double x = m->b + (m->c - m->b) * i / 11.0;
            eq = std::max(eq, std::abs(gp.euler_lagrange(x)));
        }
        for (double d : {0.1, 1.0})
            ineq = std::max(ineq, gp.euler_lagrange(m->c + d));
    }
    ok = ok && eq <= 1e-8 && ineq < -1e-6;
    detail += fmt("EL band residual %.1e, max EL beyond edge %.3e", eq, ineq);
    return {11, "", ok, detail, 0.0};
}

template <CriterionResult (*F)()>
CriterionResult timed()
{
    Timer t;
    CriterionResult r = F();
    r.seconds = t.seconds();
    return r;
}

} // namespace

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list = {
        {1, "Tracy-Widom Fredholm vs Painleve", timed<tracy_widom_cross_method>},
        {2, "log-derivative triple identity", timed<triple_identity>},
        {3, "Janossy sum vs gap probabilities", timed<janossy_gap_equivalence>},
        {4, "finite-n CD kernel vs Nystrom resolvent", timed<finite_n_kernel_identity>},
        {5, "universality rate slope", timed<universality_rate>},
        {6, "large positive alpha: Airy kernel limit", timed<airy_side>},
        {7, "large negative alpha: Bessel form trend", timed<bessel_side>},
        {8, "continuity across alpha = 0", timed<continuity>},
        {9, "parametrix jumps and normalization", timed<parametrix_suite>},
        {10, "Monte Carlo edge laws", timed<monte_carlo>},
        {11, "equilibrium measures", timed<equilibrium_suite>},
    };
    return list;
}

std::vector<CriterionResult> run(const std::vector<int>& ids,
                                 const std::function<void(const CriterionResult&)>& on_result)
{
    std::vector<CriterionResult> out;
    for (const Criterion& c : criteria()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end())
            continue;
        CriterionResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';'))
            r.detail.pop_back();
        r.id = c.id;
        r.title = c.title;
        if (on_result)
            on_result(r);
        out.push_back(r);
    }
    return out;
}

std::string format(const CriterionResult& r)
{
    return fmt("%s %2d  %s: %s (%.1f s)", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str(),
               r.seconds);
}

} // namespace janossy::acceptance
