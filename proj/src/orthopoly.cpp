#include "janossy/orthopoly.hpp"

#include "janossy/equilibrium.hpp"
#include "janossy/errors.hpp"
#include "janossy/numcore.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

namespace janossy {

namespace {

using ld = long double;

ld eval_poly_ld(const std::vector<double>& c, ld x)
{
    ld s = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        s = s * x + static_cast<ld>(*it);
    return s;
}

// First x beyond `from` (moving in direction dir = +-1) where n (V - vmin)
// reaches `thr`.
double weight_cut(const WeightSpec& w, double vmin, double from, int dir, double thr)
{
    auto excess = [&](double x) { return w.n * (w.potential(x) - vmin) - thr; };
    double step = 0.25;
    double far = from + dir * step;
    while (excess(far) < 0.0) {
        step *= 2.0;
        far = from + dir * step;
    }
    double near = from;
    for (int it = 0; it < 200 && std::abs(far - near) > 1e-13 * (1.0 + std::abs(far)); ++it) {
        double mid = 0.5 * (near + far);
        (excess(mid) < 0.0 ? near : far) = mid;
    }
    return far;
}

// Stieltjes procedure in the Gragg-Harrod form (RKPW): builds the Jacobi
// matrix of the discrete measure one node at a time by Givens-like updates.
void rkpw(const std::vector<ld>& x, const std::vector<ld>& wt, int K, std::vector<ld>& alpha,
          std::vector<ld>& beta)
{
    const int N = static_cast<int>(x.size());
    std::vector<ld> p0(x), p1(N, 0.0L);
    p1[0] = wt[0];
    for (int n = 0; n < N - 1; ++n) {
        ld pn = wt[n + 1], gam = 1.0L, sig = 0.0L, t = 0.0L, xlam = x[n + 1];
        for (int k = 0; k <= n + 1; ++k) {
            ld rho = p1[k] + pn;
            ld tmp = gam * rho;
            ld tsig = sig;
            if (rho <= 0.0L) {
                gam = 1.0L;
                sig = 0.0L;
            } else {
                gam = p1[k] / rho;
                sig = pn / rho;
            }
            ld tk = sig * (p0[k] - xlam) - gam * t;
            p0[k] = p0[k] - (tk - t);
            t = tk;
            if (sig <= 0.0L)
                pn = tsig * p1[k];
            else
                pn = (t * t) / sig;
            p1[k] = tmp;
        }
    }
    alpha.assign(p0.begin(), p0.begin() + K + 1);
    beta.assign(p1.begin(), p1.begin() + K + 1);
}

struct Discretization {
    std::vector<ld> x, wt;
};

Discretization discretize_weight(const WeightSpec& w, double vmin, double lo, double hi, double h,
                                 int m)
{
    static thread_local int cached_m = -1;
    static thread_local QuadratureRule base;
    if (cached_m != m) {
        base = gauss_legendre(m);
        cached_m = m;
    }
    int panels = std::max(8, static_cast<int>(std::ceil((hi - lo) / h)));
    ld width = (static_cast<ld>(hi) - lo) / panels;
    Discretization d;
    d.x.reserve(static_cast<std::size_t>(panels) * m);
    d.wt.reserve(d.x.capacity());
    const auto& V = w.potential.coeffs();
    for (int p = 0; p < panels; ++p) {
        ld a = lo + p * width;
        for (int i = 0; i < m; ++i) {
            ld xi = a + 0.5L * width * (1.0L + base.nodes[i]);
            ld e = w.n * (eval_poly_ld(V, xi) - vmin);
            d.x.push_back(xi);
            d.wt.push_back(0.5L * width * base.weights[i] * std::exp(-e));
        }
    }
    return d;
}

double log_abs_phi(const RecurrenceTable& t, int k, double x)
{
    PhiState s = phi_state(t, k, x);
    if (s.cur == 0.0)
        return -INFINITY;
    return std::log(std::abs(s.cur)) + s.log_factor;
}

} // namespace

double WeightSpec::v_min() const
{
    return endpoint ? potential.minimum_left_of(*endpoint) : potential.minimum();
}

double RecurrenceTable::h(int k) const
{
    return std::exp(log_h.at(k));
}

double RecurrenceTable::gamma(int k) const
{
    return std::exp(log_gamma(k));
}

RecurrenceTable build_recurrence(const WeightSpec& w, int K, const OrthoResolution& res)
{
    if (w.n < 1)
        throw DomainError("build_recurrence: n must be positive");
    if (K < 0)
        throw DomainError("build_recurrence: K must be nonnegative");
    if (res.nodes_per_oscillation < 20 || res.nodes_per_panel < 4)
        throw DomainError("build_recurrence: resolution below 20 nodes per oscillation");

    const double vmin = w.v_min();
    const double thr = -res.weight_floor_log10 * std::log(10.0);
    std::vector<double> crit = w.potential.critical_points();
    double left_start = crit.empty() ? 0.0 : crit.front();
    double right_start = crit.empty() ? 0.0 : crit.back();
    if (w.endpoint)
        left_start = std::min(left_start, *w.endpoint);

    double lo = weight_cut(w, vmin, left_start, -1, thr);
    double hi = w.endpoint ? *w.endpoint : weight_cut(w, vmin, right_start, +1, thr);

    // Zeros of p_K fill the band of the equilibrium measure of (n/K) V; its
    // width sets the oscillation length.
    int Kp = std::max(K, 1);
    std::vector<double> vk = w.potential.coeffs();
    for (double& c : vk)
        c *= static_cast<double>(w.n) / Kp;
    double band_lo = lo, band_hi = hi;
    try {
        EquilibriumMeasure em = solve_free_unscaled(Potential(vk));
        band_lo = em.b;
        band_hi = em.c;
    } catch (const Error&) {
    }
    lo = std::min(lo, band_lo);
    if (!w.endpoint)
        hi = std::max(hi, band_hi);
    double band = std::max(band_hi - band_lo, 1e-3);
    double wavelength = 2.0 * band / (Kp + 1);
    double h = std::min(wavelength * res.nodes_per_panel / res.nodes_per_oscillation, (hi - lo) / 8.0);

    RecurrenceTable t;
    t.weight = w;
    t.v_shift = vmin;
    for (int ext = 0;; ++ext) {
        Discretization d = discretize_weight(w, vmin, lo, hi, h, res.nodes_per_panel);
        if (static_cast<int>(d.x.size()) <= K + 1)
            throw ResolutionInsufficient("build_recurrence: fewer nodes than K + 2");
        std::vector<ld> a, b;
        rkpw(d.x, d.wt, K, a, b);
        t.alpha.assign(a.begin(), a.end());
        t.beta.assign(b.begin(), b.end());
        t.lo = lo;
        t.hi = hi;
        t.nodes = static_cast<int>(d.x.size());
        for (int k = 0; k <= K; ++k)
            if (!(t.beta[k] > 0.0) || !std::isfinite(t.beta[k]) || !std::isfinite(t.alpha[k]))
                throw ResolutionInsufficient("build_recurrence: beta_" + std::to_string(k) +
                                             " lost positivity");

        // the top function must be negligible at the cut ends
        double peak = -INFINITY;
        for (std::size_t i = 0; i < d.x.size(); i += 3)
            peak = std::max(peak, log_abs_phi(t, K, static_cast<double>(d.x[i])));
        const double margin = 40.0;
        bool left_ok = log_abs_phi(t, K, lo) < peak - margin;
        bool right_ok = w.endpoint || log_abs_phi(t, K, hi) < peak - margin;
        if (left_ok && right_ok)
            break;
        if (ext >= res.max_extensions)
            throw ResolutionInsufficient("build_recurrence: support truncation not negligible");
        double grow = 0.25 * (hi - lo);
        if (!left_ok)
            lo -= grow;
        if (!right_ok)
            hi += grow;
    }

    t.log_h.resize(K + 1);
    double acc = -w.n * vmin;
    for (int k = 0; k <= K; ++k) {
        acc += std::log(t.beta[k]);
        t.log_h[k] = acc;
    }
    return t;
}

PhiState phi_state(const RecurrenceTable& t, int k, double x)
{
    if (k < 0 || k > t.K())
        throw DomainError("phi_state: k outside the recurrence table");
    const auto& al = t.alpha;
    const auto& be = t.beta;
    double pm = 0.0, p = 1.0 / std::sqrt(be[0]);
    double dpm = 0.0, dp = 0.0;
    double log_scale = 0.0;
    for (int j = 0; j < k; ++j) {
        double sb = std::sqrt(be[j + 1]);
        double off = j > 0 ? std::sqrt(be[j]) : 0.0;
        double pn = ((x - al[j]) * p - off * pm) / sb;
        double dpn = (p + (x - al[j]) * dp - off * dpm) / sb;
        pm = p;
        p = pn;
        dpm = dp;
        dp = dpn;
        double mag = std::max(std::abs(p), std::abs(dp));
        if (mag > 1e150 || (mag < 1e-150 && mag > 0.0)) {
            pm /= mag;
            p /= mag;
            dpm /= mag;
            dp /= mag;
            log_scale += std::log(mag);
        }
    }
    const WeightSpec& w = t.weight;
    double log_weight = -0.5 * w.n * (w.potential(x) - t.v_shift);
    return {pm, p, dpm, dp, log_scale + log_weight};
}

Scaled eval_phi(const RecurrenceTable& t, int k, double x)
{
    if (k < 0 || k > t.K())
        throw DomainError("eval_phi: k outside the recurrence table");
    PhiState s = phi_state(t, k, x);
    if (s.cur == 0.0)
        return Scaled{};
    return Scaled::from_log(std::log(std::abs(s.cur)) + s.log_factor, s.cur < 0.0 ? -1.0 : 1.0);
}

namespace {

// a_n (p_n' p_{n-1} - p_{n-1}' p_n) without the exp(2 log_factor) factor
double diag_core(const RecurrenceTable& t, int n, const PhiState& s)
{
    return std::sqrt(t.beta[n]) * (s.dcur * s.prev - s.dprev * s.cur);
}

bool near_diagonal(double x, double y)
{
    return std::abs(x - y) <= 1e-5 * (1.0 + std::abs(x));
}

} // namespace

double cd_kernel(const RecurrenceTable& t, int n, double x, double y)
{
    if (n < 1 || n > t.K())
        throw DomainError("cd_kernel: need 1 <= n <= K");
    if (near_diagonal(x, y)) {
        // symmetric in (x, y), so the midpoint value is second-order accurate
        PhiState s = phi_state(t, n, 0.5 * (x + y));
        return diag_core(t, n, s) * std::exp(2.0 * s.log_factor);
    }
    PhiState sx = phi_state(t, n, x), sy = phi_state(t, n, y);
    double num = sx.cur * sy.prev - sx.prev * sy.cur;
    return std::sqrt(t.beta[n]) * num / (x - y) * std::exp(sx.log_factor + sy.log_factor);
}

std::function<double(double, double)> cd_kernel_on_nodes(const RecurrenceTable& t, int n,
                                                         std::vector<double> nodes)
{
    if (n < 1 || n > t.K())
        throw DomainError("cd_kernel_on_nodes: need 1 <= n <= K");
    struct Cache {
        std::vector<double> x;
        std::vector<PhiState> st;
    };
    auto c = std::make_shared<Cache>();
    std::sort(nodes.begin(), nodes.end());
    c->x = std::move(nodes);
    for (double x : c->x)
        c->st.push_back(phi_state(t, n, x));
    auto table = std::make_shared<const RecurrenceTable>(t);
    return [c, table, n](double x, double y) {
        auto find = [&c](double v) -> const PhiState* {
            auto it = std::lower_bound(c->x.begin(), c->x.end(), v);
            if (it != c->x.end() && *it == v)
                return &c->st[static_cast<std::size_t>(it - c->x.begin())];
            return nullptr;
        };
        const PhiState* sx = find(x);
        const PhiState* sy = find(y);
        if (!sx || !sy || near_diagonal(x, y)) {
            if (sx && x == y)
                return diag_core(*table, n, *sx) * std::exp(2.0 * sx->log_factor);
            return cd_kernel(*table, n, x, y);
        }
        double num = sx->cur * sy->prev - sx->prev * sy->cur;
        return std::sqrt(table->beta[n]) * num / (x - y) * std::exp(sx->log_factor + sy->log_factor);
    };
}

double cd_kernel_sum(const RecurrenceTable& t, int n, double x, double y)
{
    if (n < 1 || n > t.K())
        throw DomainError("cd_kernel_sum: need 1 <= n <= K");
    double s = 0.0;
    for (int k = 0; k < n; ++k)
        s += (eval_phi(t, k, x) * eval_phi(t, k, y)).to_double();
    return s;
}

double l_kernel_cd(const RecurrenceTable& tilde, int n, double x, double y)
{
    if (!tilde.weight.endpoint)
        throw DomainError("l_kernel_cd: needs a half-line table");
    double c = *tilde.weight.endpoint;
    if (x < c || y < c)
        throw DomainError("l_kernel_cd: arguments must lie in [c, inf)");
    return cd_kernel(tilde, n, x, y);
}

namespace {

Scaled kernel_determinant(const RecurrenceTable& t, int n, const std::vector<double>& pts)
{
    const int k = static_cast<int>(pts.size());
    if (k == 0)
        return Scaled::from_double(1.0);
    if (n < 1 || n > t.K())
        throw DomainError("kernel determinant: need 1 <= n <= K");
    std::vector<PhiState> st;
    st.reserve(k);
    for (double x : pts)
        st.push_back(phi_state(t, n, x));
    const double an = std::sqrt(t.beta[n]);
    // M_ij = K(x_i, x_j) exp(-f_i - f_j)
    Eigen::MatrixXd M(k, k);
    double log_scale = 0.0;
    for (int i = 0; i < k; ++i) {
        log_scale += 2.0 * st[i].log_factor;
        for (int j = 0; j < k; ++j) {
            if (i == j) {
                M(i, i) = diag_core(t, n, st[i]);
            } else if (near_diagonal(pts[i], pts[j])) {
                PhiState sm = phi_state(t, n, 0.5 * (pts[i] + pts[j]));
                M(i, j) = diag_core(t, n, sm) *
                          std::exp(2.0 * sm.log_factor - st[i].log_factor - st[j].log_factor);
            } else {
                double num = st[i].cur * st[j].prev - st[i].prev * st[j].cur;
                M(i, j) = an * num / (pts[i] - pts[j]);
            }
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    double log_det = 0.0, sign = lu.permutationP().determinant() * lu.permutationQ().determinant();
    for (int i = 0; i < k; ++i) {
        double u = lu.matrixLU()(i, i);
        if (u == 0.0)
            return Scaled{};
        log_det += std::log(std::abs(u));
        if (u < 0.0)
            sign = -sign;
    }
    return Scaled::from_log(log_det + log_scale, sign);
}

} // namespace

Scaled correlation_k(const RecurrenceTable& t, int n, const std::vector<double>& points)
{
    if (static_cast<int>(points.size()) > n)
        throw DomainError("correlation_k: more points than n");
    return kernel_determinant(t, n, points);
}

double janossy_k(const RecurrenceTable& tilde, int n, const std::vector<double>& points, double D)
{
    if (!tilde.weight.endpoint)
        throw DomainError("janossy_k: needs a half-line table");
    double c = *tilde.weight.endpoint;
    for (double x : points)
        if (x < c)
            throw DomainError("janossy_k: point outside the window [c, inf)");
    return (kernel_determinant(tilde, n, points) * D).to_double();
}

} // namespace janossy
