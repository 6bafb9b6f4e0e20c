#include "janossy/orthopoly.hpp"

#include "janossy/fredholm.hpp"

#include <doctest.h>

#include <cmath>

using namespace janossy;

namespace {

const double pi = std::acos(-1.0);

QuadratureRule panels_on(double lo, double hi, int panels, int m)
{
    std::vector<std::pair<double, double>> p;
    for (int i = 0; i < panels; ++i)
        p.push_back({lo + (hi - lo) * i / panels, lo + (hi - lo) * (i + 1) / panels});
    return composite_rule(gauss_legendre(m), p);
}

} // namespace

TEST_CASE("GUE recurrence coefficients")
{
    for (int n : {1, 8, 32}) {
        RecurrenceTable t = build_recurrence(WeightSpec{Potential::gue(), n, {}}, n);
        REQUIRE(t.K() == n);
        for (int k = 1; k <= n; ++k) {
            CHECK(std::abs(t.beta[k] - k / (4.0 * n)) < 1e-10);
            CHECK(t.beta[k] > 0.0);
        }
        for (int k = 0; k <= n; ++k)
            CHECK(std::abs(t.alpha[k]) < 1e-12);
        for (int k = 1; k <= n; ++k)
            CHECK(std::abs(t.log_gamma(k) - t.log_gamma(k - 1) - 0.5 * std::log(4.0 * n / k)) < 1e-12);
    }
}

TEST_CASE("even quartic has vanishing alpha; non-even does not")
{
    RecurrenceTable q = build_recurrence(WeightSpec{Potential({0.0, 0.0, 0.0, 0.0, 1.0}), 10, {}}, 10);
    for (double a : q.alpha)
        CHECK(std::abs(a) < 1e-12);
    RecurrenceTable r = build_recurrence(WeightSpec{Potential({0.0, 0.5, 1.0}), 4, {}}, 4);
    // V = x^2 + x/2: weight centred at -1/4
    for (double a : r.alpha)
        CHECK(std::abs(a + 0.25) < 1e-12);
}

TEST_CASE("half-line first moment")
{
    RecurrenceTable t = build_recurrence(WeightSpec{Potential::gue(), 1, 0.0}, 3);
    CHECK(std::abs(t.alpha[0] + 1.0 / std::sqrt(2.0 * pi)) < 1e-10);
    for (int k = 1; k <= 3; ++k)
        CHECK(t.beta[k] > 0.0);
}

TEST_CASE("phi_0 and direct Hermite evaluation")
{
    const int n = 8;
    RecurrenceTable t = build_recurrence(WeightSpec{Potential::gue(), n, {}}, n);
    for (double x : {-0.4, 0.0, 0.9}) {
        double want = t.gamma(0) * std::exp(-n * 2.0 * x * x / 2.0);
        CHECK(std::abs(eval_phi(t, 0, x).to_double() - want) < 1e-14 * want);
    }
    // e^{-2n x^2}: t = sqrt(2n) x, monic p_8(x) = H_8(t) / (2^8 (2n)^4)
    const double x = 0.5, s = std::sqrt(2.0 * n) * x;
    double H8 = (((256.0 * s * s - 3584.0) * s * s + 13440.0) * s * s - 13440.0) * s * s + 1680.0;
    double p8 = H8 / (256.0 * std::pow(2.0 * n, 4));
    double fact8 = 40320.0;
    double h8 = std::sqrt(pi) * fact8 / 256.0 / std::sqrt(2.0 * n) / std::pow(2.0 * n, 8);
    double want = p8 / std::sqrt(h8) * std::exp(-n * x * x);
    CHECK(std::abs(eval_phi(t, 8, x).to_double() - want) < 1e-9 * std::abs(want));
}

TEST_CASE("orthonormality on an independent grid")
{
    const int n = 12;
    Potential V({0.0, 0.3, 1.0, -0.2, 0.5});
    RecurrenceTable t = build_recurrence(WeightSpec{V, n, {}}, n);
    QuadratureRule g = panels_on(t.lo - 0.5, t.hi + 0.5, 97, 23);
    for (int j : {0, 3, 7, 12})
        for (int k : {0, 5, 7, 11, 12}) {
            double s = g.integrate([&](double x) { return eval_phi(t, j, x).to_double() * eval_phi(t, k, x).to_double(); });
            CHECK(std::abs(s - (j == k ? 1.0 : 0.0)) < 1e-8);
        }
}

TEST_CASE("half-line orthonormality")
{
    const int n = 10;
    RecurrenceTable t = build_recurrence(WeightSpec{Potential::gue(), n, 0.6}, n);
    QuadratureRule g = panels_on(t.lo, 0.6, 80, 20);
    for (int j : {0, 4, 10})
        for (int k : {0, 4, 9, 10}) {
            double s = g.integrate([&](double x) { return eval_phi(t, j, x).to_double() * eval_phi(t, k, x).to_double(); });
            CHECK(std::abs(s - (j == k ? 1.0 : 0.0)) < 1e-8);
        }
}

TEST_CASE("resolution doubling")
{
    const int n = 32;
    OrthoResolution fine;
    fine.nodes_per_oscillation *= 2;
    RecurrenceTable a = build_recurrence(WeightSpec{Potential({0.0, 0.0, 0.0, 0.0, 1.0}), n, {}}, n);
    RecurrenceTable b = build_recurrence(WeightSpec{Potential({0.0, 0.0, 0.0, 0.0, 1.0}), n, {}}, n, fine);
    for (int k = 1; k <= n; ++k)
        CHECK(std::abs(a.beta[k] - b.beta[k]) < 1e-12 * b.beta[k]);
}

TEST_CASE("Christoffel-Darboux kernel")
{
    const int n = 10;
    RecurrenceTable t = build_recurrence(WeightSpec{Potential::gue(), n, {}}, n);
    double r = cd_kernel(t, n, 0.3, 0.7), s = cd_kernel_sum(t, n, 0.3, 0.7);
    CHECK(std::abs(r - s) < 1e-10 * std::abs(s));
    CHECK(std::abs(cd_kernel(t, n, 0.4, 0.4) - cd_kernel_sum(t, n, 0.4, 0.4)) < 1e-12);
    CHECK(std::abs(cd_kernel(t, n, 0.4, 0.4 + 1e-7) - cd_kernel_sum(t, n, 0.4, 0.4 + 1e-7)) < 1e-9);

    QuadratureRule g = panels_on(-1.8, 1.8, 40, 16);
    CHECK(std::abs(g.integrate([&](double x) { return cd_kernel(t, n, x, x); }) - n) < 1e-8);
    double proj = g.integrate([&](double u) { return cd_kernel(t, n, 0.2, u) * cd_kernel(t, n, u, 0.4); });
    CHECK(std::abs(proj - cd_kernel(t, n, 0.2, 0.4)) < 1e-8);
}

TEST_CASE("correlation functions")
{
    const int n = 6;
    RecurrenceTable t = build_recurrence(WeightSpec{Potential::gue(), n, {}}, n);
    CHECK(std::abs(correlation_k(t, n, {0.25}).to_double() - cd_kernel(t, n, 0.25, 0.25)) < 1e-14);
    CHECK(correlation_k(t, n, {0.25}).to_double() >= 0.0);
    CHECK(std::abs(correlation_k(t, n, {0.3, 0.3}).to_double()) < 1e-10);
    QuadratureRule g = panels_on(-1.8, 1.8, 40, 16);
    CHECK(std::abs(g.integrate([&](double x) { return correlation_k(t, n, {x}).to_double(); }) - n) < 1e-8);
}

TEST_CASE("window kernel equals the resolvent of K_n")
{
    const int n = 12;
    const double c = 1.05;
    RecurrenceTable full = build_recurrence(WeightSpec{Potential::gue(), n, {}}, n);
    RecurrenceTable tilde = build_recurrence(WeightSpec{Potential::gue(), n, c}, n);
    QuadratureRule rule = panels_on(c, full.hi, 30, 20);
    NystromOperator op = discretize(cd_kernel_on_nodes(full, n, rule.nodes), rule);
    double L = l_kernel_cd(tilde, n, 1.1, 1.2), R = resolvent(op, 1.1, 1.2);
    CHECK(std::abs(L - R) < 1e-6 * std::abs(R));
    CHECK(std::abs(l_kernel_cd(tilde, n, 1.1, 1.2) - l_kernel_cd(tilde, n, 1.2, 1.1)) < 1e-12 * std::abs(L));
    for (int i = 0; i < 10; ++i)
        CHECK(l_kernel_cd(tilde, n, c + 0.01 + 0.05 * i, c + 0.01 + 0.05 * i) >= 0.0);
}

TEST_CASE("Janossy densities against gap probabilities")
{
    const int n = 8;
    const double c = 0.8;
    RecurrenceTable full = build_recurrence(WeightSpec{Potential::gue(), n, {}}, n);
    RecurrenceTable tilde = build_recurrence(WeightSpec{Potential::gue(), n, c}, n);
    QuadratureRule rule = panels_on(c, full.hi, 20, 12);
    NystromOperator op = discretize(cd_kernel_on_nodes(full, n, rule.nodes), rule);
    std::vector<double> P = gap_probs(op, 2);
    double D = P[0];
    CHECK(janossy_k(tilde, n, {}, D) == doctest::Approx(D).epsilon(1e-15));
    CHECK(janossy_k(tilde, n, {0.9, 1.1}, D) >= 0.0);
    CHECK(janossy_k(tilde, n, {0.85, 0.95, 1.2}, D) >= 0.0);

    std::vector<double> Ld(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        Ld[i] = l_kernel_cd(tilde, n, rule.nodes[i], rule.nodes[i]);
    double I1 = 0.0, I2 = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        I1 += rule.weights[i] * Ld[i];
        for (std::size_t j = 0; j < rule.size(); ++j) {
            double l = i == j ? Ld[i] : l_kernel_cd(tilde, n, rule.nodes[i], rule.nodes[j]);
            I2 += rule.weights[i] * rule.weights[j] * (Ld[i] * Ld[j] - l * l);
        }
    }
    CHECK(std::abs(D * I1 - P[1]) < 1e-7);
    CHECK(std::abs(D * I2 / 2.0 - P[2]) < 1e-7);
}
