#include "janossy/fredholm.hpp"

#include "janossy/edge_laws.hpp"
#include "janossy/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace janossy;

namespace {

QuadratureRule on(double a, double b, int m)
{
    return mapped_rule(gauss_legendre(m), a, b);
}

} // namespace

TEST_CASE("rank-one kernel")
{
    NystromOperator op = discretize([](double, double) { return 1.0; }, on(0.0, 1.0, 12));
    const auto& ev = op.spectrum().eigenvalues;
    CHECK(std::abs(ev(0) - 1.0) < 1e-14);
    for (int i = 1; i < ev.size(); ++i)
        CHECK(std::abs(ev(i)) < 1e-14);
    for (double th : {0.0, 0.3, 0.9})
        CHECK(std::abs(det1m(op, th) - (1.0 - th)) < 1e-14);
    CHECK_THROWS_AS(resolvent(op, 0.2, 0.3), ConditioningError);
}

TEST_CASE("zero kernel")
{
    NystromOperator op = discretize([](double, double) { return 0.0; }, on(-1.0, 2.0, 8));
    CHECK(op.matrix().norm() == 0.0);
    CHECK(det1m(op) == 1.0);
    CHECK(resolvent(op, 0.1, 1.7) == 0.0);
    std::vector<double> P = gap_probs(op, 3);
    CHECK(P[0] == 1.0);
    CHECK(P[1] == 0.0);
}

TEST_CASE("rank-one resolvent closed form")
{
    auto phi = [](double x) { return std::sqrt(0.8) * std::exp(-x); };
    QuadratureRule r = on(0.0, 3.0, 40);
    NystromOperator op = discretize([&](double x, double y) { return phi(x) * phi(y); }, r);
    double c = r.integrate([&](double x) { return phi(x) * phi(x); });
    for (auto [x, y] : {std::pair{0.3, 1.1}, std::pair{2.0, 0.5}, std::pair{1.0, 1.0}})
        CHECK(std::abs(resolvent(op, x, y) - phi(x) * phi(y) / (1.0 - c)) < 1e-12);
    CHECK(std::abs(det1m(op) - (1.0 - c)) < 1e-13);
}

TEST_CASE("asymmetric kernels are rejected")
{
    CHECK_THROWS_AS(discretize([](double x, double) { return x; }, on(0.0, 1.0, 6)), DomainError);
}

TEST_CASE("Airy kernel operator")
{
    NystromOperator op = discretize(airy_kernel, on(0.0, 14.0, 120));
    CHECK((op.matrix() - op.matrix().transpose()).norm() < 1e-12);
    const auto& ev = op.spectrum().eigenvalues;
    for (int i = 0; i < ev.size(); ++i) {
        CHECK(ev(i) >= -1e-10);
        CHECK(ev(i) < 1.0);
    }
    double t = airy_tail_cut();
    double d80 = det1m(discretize(airy_kernel, on(0.0, t, 80)));
    double d160 = det1m(discretize(airy_kernel, on(0.0, t, 160)));
    CHECK(std::abs(d80 - d160) < 1e-9);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int i = 0; i < 10; ++i) {
        double x = u(rng), y = u(rng);
        CHECK(std::abs(resolvent(op, x, y) - resolvent(op, y, x)) < 1e-10);
    }
}

TEST_CASE("gap probabilities")
{
    NystromOperator op = discretize(airy_kernel, on(-2.0, airy_tail_cut(), 120));
    std::vector<double> P = gap_probs(op, static_cast<int>(op.size()));
    CHECK(std::abs(P[0] - det1m(op)) < 1e-15);
    double sum = 0.0;
    for (double p : P) {
        CHECK(p >= -1e-15);
        sum += p;
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);
    const double h = 1e-5;
    double fd = -(det1m(op, 1.0 + h) - det1m(op, 1.0 - h)) / (2.0 * h);
    CHECK(std::abs(P[1] - fd) < 1e-7);

    std::vector<double> Q = gap_probs_traces(op, 4);
    for (int m = 0; m <= 4; ++m)
        CHECK(std::abs(P[m] - Q[m]) < 1e-10);
}
