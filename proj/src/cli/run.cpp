#include "janossy/cli/run.hpp"

#include "janossy/cli/cache.hpp"
#include "janossy/cli/config.hpp"
#include "janossy/cli/output.hpp"
#include "janossy/cli/polyparse.hpp"
#include "janossy/edge_laws.hpp"
#include "janossy/equilibrium.hpp"
#include "janossy/errors.hpp"
#include "janossy/orthopoly.hpp"
#include "janossy/sampler.hpp"
#include "janossy/specfun.hpp"

#include "acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <set>

namespace janossy::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Output {
    Table table;
    json summary;
};

// Every flag of every subcommand; each subcommand binds the ones it uses.
struct Params {
    std::string V = "2*x^2";
    double c = kNaN;
    int points = 201;
    int n = 8;
    int K = 0;
    double endpoint = kNaN;
    int nodes_per_oscillation = OrthoResolution{}.nodes_per_oscillation;
    std::string kind = "M";
    double alpha = 0.0;
    double x_min = kNaN, x_max = kNaN;
    int res = kAiryWindowNodes;
    double alpha_min = -6.0, alpha_max = 3.0;
    int steps = 20;
    int m = 1;
    std::vector<double> alphas;
    double x = 2.0, y = 3.0;
    std::vector<int> ns{16, 32, 64, 128};
    double r_min = 0.1, r_max = 30.0;
    int count = 10000;
    std::uint64_t seed = 1;
    int m_max = 2;
    int threads = 0;
    double grid_step = 0.05;
    std::vector<int> criteria;

    std::string out, summary, format, cache_dir, config;
};

// flags that do not change the computed numbers
const std::set<std::string> kNonComputational = {"help", "out", "summary", "format", "cache-dir", "config", "threads"};

std::vector<double> linspace(double a, double b, int k)
{
    std::vector<double> v(k);
    for (int i = 0; i < k; ++i)
        v[i] = k == 1 ? a : a + (b - a) * i / (k - 1);
    return v;
}

Potential potential_flag(const std::string& text)
{
    try {
        return parse_potential(text);
    } catch (const PolyParseError& e) {
        throw UsageError(std::string("--V: ") + e.what());
    } catch (const DomainError& e) {
        throw UsageError(std::string("--V: ") + e.what());
    }
}

OrthoResolution ortho_res(const Params& p)
{
    OrthoResolution r;
    r.nodes_per_oscillation = p.nodes_per_oscillation;
    return r;
}

json pair(double a, double b) { return json::array({a, b}); }

Output cmd_equilibrium(const Params& p)
{
    Potential V = potential_flag(p.V);
    Output o{Table({"x", "psi"}), json::object()};
    auto fill = [&](const OneCutMeasure& m) {
        for (int i = 0; i < p.points; ++i) {
            double x = m.b + (m.c - m.b) * (i + 0.5) / p.points;
            o.table.add_row(std::vector<double>{x, density_at(m, x)});
        }
    };
    o.summary["potential"] = V.to_string();
    if (!std::isnan(p.c)) {
        ConstrainedMeasure m = solve_constrained(V, p.c);
        o.summary["paper_ref"] = "equilibrium measure of V constrained to (-inf, c]";
        o.summary["pin"] = m.pin;
        o.summary["band"] = pair(m.b, m.c);
        o.summary["is_free"] = m.is_free;
        o.summary["free_right"] = m.free_right;
        o.summary["C"] = m.C;
        o.summary["edge_inverse_sqrt"] = m.edge_inverse_sqrt();
        o.summary["ell"] = m.ell;
        o.summary["mass"] = m.mass();
        fill(m);
    } else {
        EquilibriumMeasure m = solve_free_unscaled(V);
        EquilibriumMeasure normalized = solve_full_line(V);
        o.summary["paper_ref"] = "one-cut equilibrium measure of V on the real line";
        o.summary["band"] = pair(m.b, m.c);
        o.summary["ell"] = m.ell;
        o.summary["mass"] = m.mass();
        o.summary["scale"] = normalized.scale;
        o.summary["beta"] = normalized.beta;
        o.summary["c_V"] = edge_constant(normalized);
        fill(m);
    }
    return o;
}

Output cmd_orthopoly(const Params& p)
{
    Potential V = potential_flag(p.V);
    WeightSpec w{V, p.n, {}};
    if (!std::isnan(p.endpoint))
        w.endpoint = p.endpoint;
    int K = p.K > 0 ? p.K : p.n;
    RecurrenceTable t = build_recurrence(w, K, ortho_res(p));
    Output o{Table({"k", "alpha", "beta", "log_h"}), json::object()};
    for (int k = 0; k <= t.K(); ++k)
        o.table.add_row({std::to_string(k), fmt17(t.alpha[k]), fmt17(t.beta[k]), fmt17(t.log_h[k])});
    o.summary["paper_ref"] = "three-term recurrence of the monic orthogonal polynomials for exp(-n V)";
    o.summary["potential"] = V.to_string();
    o.summary["support"] = pair(t.lo, t.hi);
    o.summary["nodes"] = t.nodes;
    o.summary["v_shift"] = t.v_shift;
    return o;
}

Output cmd_kernel(const Params& p)
{
    std::function<double(double, double)> f;
    double lo = p.x_min, hi = p.x_max;
    double dlo = 0.0, dhi = 0.0;
    std::string ref;
    if (p.kind == "M") {
        auto M = std::make_shared<LimitKernel>(p.alpha, p.res);
        f = [M](double x, double y) { return (*M)(x, y); };
        dlo = p.alpha + 0.5;
        dhi = p.alpha + 3.0;
        ref = "limit Janossy kernel: resolvent of the Airy kernel on [alpha, inf)";
    } else if (p.kind == "K") {
        Potential V = potential_flag(p.V);
        auto t = std::make_shared<RecurrenceTable>(build_recurrence(WeightSpec{V, p.n, {}}, p.n, ortho_res(p)));
        f = [t, n = p.n](double x, double y) { return cd_kernel(*t, n, x, y); };
        EquilibriumMeasure m = solve_free_unscaled(V);
        dlo = m.b;
        dhi = m.c;
        ref = "Christoffel-Darboux kernel K_n of the weight exp(-n V)";
    } else if (p.kind == "L") {
        if (std::isnan(p.c))
            throw UsageError("--c is required for --kind L");
        Potential V = potential_flag(p.V);
        auto t = std::make_shared<RecurrenceTable>(build_recurrence(WeightSpec{V, p.n, p.c}, p.n, ortho_res(p)));
        f = [t, n = p.n](double x, double y) { return l_kernel_cd(*t, n, x, y); };
        dlo = p.c + 0.05;
        dhi = p.c + 0.5;
        ref = "finite-n Janossy kernel on [c, inf) from the half-line orthogonal polynomials";
    } else {
        Potential V = potential_flag(p.V);
        auto E = std::make_shared<FiniteNEdgeKernel>(V, p.n, p.alpha, ortho_res(p));
        f = [E](double x, double y) { return (*E)(x, y); };
        dlo = p.alpha + 0.5;
        dhi = p.alpha + 3.0;
        ref = "edge-scaled finite-n Janossy kernel";
    }
    if (std::isnan(lo))
        lo = dlo;
    if (std::isnan(hi))
        hi = dhi;
    Output o{Table({"x", "y", "value"}), json::object()};
    std::vector<double> g = linspace(lo, hi, p.points);
    for (double x : g)
        for (double y : g)
            o.table.add_row(std::vector<double>{x, y, f(x, y)});
    o.summary["paper_ref"] = ref;
    o.summary["kind"] = p.kind;
    o.summary["range"] = pair(lo, hi);
    return o;
}

Output cmd_tw(const Params& p)
{
    Output o{Table({"alpha", "F_fredholm", "F_painleve", "abs_diff"}), json::object()};
    double worst = 0.0;
    for (double a : linspace(p.alpha_min, p.alpha_max, p.steps)) {
        double f = tw_fredholm(a, p.res), q = tw_painleve(a);
        worst = std::max(worst, std::abs(f - q));
        o.table.add_row(std::vector<double>{a, f, q, std::abs(f - q)});
    }
    o.summary["paper_ref"] = "Tracy-Widom distribution: Airy Fredholm determinant and Hastings-McLeod Painleve II";
    o.summary["max_abs_diff"] = worst;
    o.summary["painleve_residual"] = default_hastings_mcleod().residual;
    return o;
}

Output cmd_order_law(const Params& p)
{
    std::vector<double> grid = p.alphas.empty() ? linspace(p.alpha_min, p.alpha_max, p.steps) : p.alphas;
    MthLaw law = mth_law_table(p.m, grid, p.res);
    Output o{Table({"alpha", "F"}), json::object()};
    for (std::size_t i = 0; i < law.alpha.size(); ++i)
        o.table.add_row(std::vector<double>{law.alpha[i], law.F[i]});
    o.summary["paper_ref"] = "edge law of the m-th largest eigenvalue, F_TW times a finite sum of Janossy terms";
    o.summary["m"] = p.m;
    return o;
}

Output cmd_converge(const Params& p)
{
    Potential V = potential_flag(p.V);
    RateResult r = convergence_rate(V, p.alpha, p.ns, p.x, p.y, ortho_res(p), p.res);
    Output o{Table({"n", "finite", "limit", "error"}), json::object()};
    for (std::size_t i = 0; i < r.ns.size(); ++i)
        o.table.add_row({std::to_string(r.ns[i]), fmt17(r.finite[i]), fmt17(r.limit[i]), fmt17(r.errors[i])});
    o.summary["paper_ref"] = "convergence of the edge-scaled finite-n kernel to the limit kernel, n^(-2/3) rate";
    o.summary["point"] = pair(p.x, p.y);
    o.summary["slope"] = r.slope;
    o.summary["intercept"] = r.intercept;
    o.summary["noise_floor"] = r.noise_floor;
    return o;
}

Output cmd_parametrix(const Params& p)
{
    Output o{Table({"model", "contour", "zeta_re", "zeta_im", "residual"}), json::object()};
    json worst = json::object();
    double all = 0.0;
    for (const JumpSample& j : parametrix_jumps(p.points, p.r_min, p.r_max)) {
        o.table.add_row({j.model, j.contour, fmt17(j.zeta.real()), fmt17(j.zeta.imag()), fmt17(j.residual)});
        double w = worst.contains(j.model) ? worst[j.model].get<double>() : 0.0;
        worst[j.model] = std::max(w, j.residual);
        all = std::max(all, j.residual);
    }
    o.summary["paper_ref"] = "jump relations of the Bessel-type model Q and the local parametrices P_A, P_B";
    o.summary["max_residual"] = worst;
    o.summary["max_residual_all"] = all;
    return o;
}

Output cmd_sample(const Params& p)
{
    EdgeSampleOptions opt;
    opt.n = p.n;
    opt.count = p.count;
    opt.seed = p.seed;
    opt.m_max = p.m_max;
    opt.threads = p.threads;
    opt.c_V = edge_constant(solve_full_line(Potential::gue()));
    std::vector<EmpiricalLaw> laws = sample_edge_statistics(opt);

    std::vector<std::string> header{"draw"};
    for (int m = 1; m <= p.m_max; ++m)
        header.push_back("lambda" + std::to_string(m) + "_scaled");
    Output o{Table(header), json::object()};
    // EmpiricalLaw keeps sorted values; draw order is regenerated for the table
    for (int i = 0; i < p.count; ++i) {
        SpectrumSample s = sample_spectrum(p.n, p.seed, static_cast<std::uint64_t>(i));
        std::vector<std::string> row{std::to_string(i)};
        for (int m = 1; m <= p.m_max; ++m)
            row.push_back(fmt17(scale_statistic(s, m, opt.c_V)));
        o.table.add_row(std::move(row));
    }

    std::vector<double> grid;
    for (double a = -6.0; a <= 4.0 + 1e-12; a += p.grid_step)
        grid.push_back(a);
    json stats = json::array();
    for (int m = 1; m <= p.m_max; ++m) {
        TabulatedCdf F(mth_law_table(m, grid, p.res));
        stats.push_back({{"m", m}, {"median", laws[m - 1].median()}, {"ks", ks_distance(laws[m - 1], F)}});
    }
    o.summary["paper_ref"] = "Monte Carlo check of the edge laws for the V = 2x^2 ensemble";
    o.summary["c_V"] = opt.c_V;
    o.summary["statistics"] = stats;
    return o;
}

struct Command {
    std::string name;
    std::string help;
    std::string format;
    bool cacheable;
    std::function<void(CLI::App&, Params&)> bind;
    std::function<Output(const Params&)> compute;
};

void bind_potential(CLI::App& a, Params& p)
{
    a.add_option("--V", p.V, "potential, polynomial in x");
}

std::vector<Command> commands()
{
    return {
        {"equilibrium", "equilibrium measure: band, density on a grid, c_V, ell", "json", true,
         [](CLI::App& a, Params& p) {
             bind_potential(a, p);
             a.add_option("--c", p.c, "pin the support to (-inf, c]");
             a.add_option("--points", p.points, "density grid size")->check(CLI::PositiveNumber);
         },
         cmd_equilibrium},
        {"orthopoly", "recurrence coefficients of the orthogonal polynomials", "csv", true,
         [](CLI::App& a, Params& p) {
             bind_potential(a, p);
             a.add_option("--n", p.n, "weight exp(-n V)")->check(CLI::PositiveNumber);
             a.add_option("--K", p.K, "highest degree (default n)")->check(CLI::NonNegativeNumber);
             a.add_option("--endpoint", p.endpoint, "restrict the weight to (-inf, endpoint]");
             a.add_option("--nodes-per-oscillation", p.nodes_per_oscillation)->check(CLI::PositiveNumber);
         },
         cmd_orthopoly},
        {"kernel", "kernel values on a tensor grid", "csv", true,
         [](CLI::App& a, Params& p) {
             bind_potential(a, p);
             a.add_option("--kind", p.kind, "M (limit), K (Christoffel-Darboux), L (window), edge (scaled L)")
                 ->check(CLI::IsMember({"M", "K", "L", "edge"}));
             a.add_option("--n", p.n)->check(CLI::PositiveNumber);
             a.add_option("--alpha", p.alpha);
             a.add_option("--c", p.c, "window edge for --kind L");
             a.add_option("--x-min", p.x_min);
             a.add_option("--x-max", p.x_max);
             a.add_option("--points", p.points, "grid points per axis")->check(CLI::PositiveNumber);
             a.add_option("--res", p.res, "Airy window nodes")->check(CLI::PositiveNumber);
             a.add_option("--nodes-per-oscillation", p.nodes_per_oscillation)->check(CLI::PositiveNumber);
         },
         cmd_kernel},
        {"tw", "Tracy-Widom table by both methods", "csv", true,
         [](CLI::App& a, Params& p) {
             a.add_option("--alpha-min", p.alpha_min);
             a.add_option("--alpha-max", p.alpha_max);
             a.add_option("--steps", p.steps, "number of rows")->check(CLI::PositiveNumber);
             a.add_option("--res", p.res, "Airy window nodes")->check(CLI::PositiveNumber);
         },
         cmd_tw},
        {"order-law", "law of the m-th largest eigenvalue at the edge", "csv", true,
         [](CLI::App& a, Params& p) {
             a.add_option("--m", p.m)->check(CLI::PositiveNumber);
             a.add_option("--alpha", p.alphas, "explicit alpha values (overrides the grid)");
             a.add_option("--alpha-min", p.alpha_min);
             a.add_option("--alpha-max", p.alpha_max);
             a.add_option("--steps", p.steps)->check(CLI::PositiveNumber);
             a.add_option("--res", p.res, "Airy window nodes")->check(CLI::PositiveNumber);
         },
         cmd_order_law},
        {"converge", "finite-n kernel error against the limit and fitted log-log slope", "json", true,
         [](CLI::App& a, Params& p) {
             bind_potential(a, p);
             a.add_option("--alpha", p.alpha);
             a.add_option("--x", p.x);
             a.add_option("--y", p.y);
             a.add_option("--ns", p.ns, "list of n")->expected(1, -1);
             a.add_option("--res", p.res, "Airy window nodes")->check(CLI::PositiveNumber);
             a.add_option("--nodes-per-oscillation", p.nodes_per_oscillation)->check(CLI::PositiveNumber);
         },
         cmd_converge},
        {"parametrix-check", "jump residuals of Q, P_A, P_B", "json", false,
         [](CLI::App& a, Params& p) {
             p.points = 20;
             a.add_option("--points", p.points, "samples per model")->check(CLI::PositiveNumber);
             a.add_option("--r-min", p.r_min)->check(CLI::PositiveNumber);
             a.add_option("--r-max", p.r_max)->check(CLI::PositiveNumber);
         },
         cmd_parametrix},
        {"sample", "Monte Carlo edge statistics and KS distances", "json", true,
         [](CLI::App& a, Params& p) {
             p.n = 200;
             a.add_option("--n", p.n)->check(CLI::PositiveNumber);
             a.add_option("--count", p.count)->check(CLI::PositiveNumber);
             a.add_option("--seed", p.seed, "64-bit unsigned");
             a.add_option("--m-max", p.m_max)->check(CLI::PositiveNumber);
             a.add_option("--threads", p.threads, "0: all cores")->check(CLI::NonNegativeNumber);
             a.add_option("--grid-step", p.grid_step, "alpha step of the reference laws")
                 ->check(CLI::PositiveNumber);
             a.add_option("--res", p.res, "Airy window nodes")->check(CLI::PositiveNumber);
         },
         cmd_sample},
    };
}

// normalized value text for the cache key
std::string canonical_value(const std::string& name, const std::string& raw)
{
    if (name == "V") {
        try {
            std::string s;
            for (double c : parse_polynomial(raw))
                s += fmt17(c) + ",";
            return s;
        } catch (const PolyParseError&) {
            return raw;
        }
    }
    std::string s;
    for (char ch : raw)
        if (ch != '[' && ch != ']' && ch != ' ')
            s += ch;
    std::string out;
    std::size_t start = 0;
    for (;;) {
        std::size_t end = s.find(',', start);
        std::string tok = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        double v = 0.0;
        auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        out += (r.ec == std::errc() && r.ptr == tok.data() + tok.size()) ? fmt17(v) : tok;
        if (end == std::string::npos)
            break;
        out += ',';
        start = end + 1;
    }
    return out;
}

RunConfig make_config(const CLI::App& sub)
{
    RunConfig cfg;
    cfg.command = sub.get_name();
    for (const CLI::Option* opt : sub.get_options()) {
        std::string name = opt->get_single_name();
        if (kNonComputational.count(name))
            continue;
        std::string raw;
        if (opt->count()) {
            for (std::size_t i = 0; i < opt->results().size(); ++i)
                raw += (i ? "," : "") + opt->results()[i];
        } else {
            raw = opt->get_default_str();
        }
        cfg.params[name] = canonical_value(name, raw);
    }
    return cfg;
}

int selftest(const Params& p, std::ostream& out)
{
    bool ok = true;
    acceptance::run(p.criteria, [&](const acceptance::CriterionResult& r) {
        out << acceptance::format(r) << "\n" << std::flush;
        ok = ok && r.pass;
    });
    return ok ? kOk : kComputationError;
}

} // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Janossy kernels, edge eigenvalue laws and their limits", "janossy"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);

    std::vector<Command> cmds = commands();
    // one Params per subcommand so each keeps its own defaults
    std::vector<Params> params(cmds.size() + 1);
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        const Command& c = cmds[i];
        Params& p = params[i];
        CLI::App* s = app.add_subcommand(c.name, c.help);
        c.bind(*s, p);
        s->add_option("--out", p.out, "write the CSV table here");
        s->add_option("--summary", p.summary, "write the JSON summary here");
        s->add_option("--format", p.format, "stdout format when no file is given (default " + c.format + ")")
            ->check(CLI::IsMember({"csv", "json"}));
        if (c.cacheable)
            s->add_option("--cache-dir", p.cache_dir, "cache root (or JANOSSY_CACHE_DIR)");
        s->add_option("--config", p.config, "flat key = value file; flags take precedence");
        subs.push_back(s);
    }
    CLI::App* st = app.add_subcommand("selftest", "run the acceptance criteria");
    st->add_option("--criteria", params.back().criteria, "criterion ids (default all)")->expected(1, -1);
    st->add_option("--config", params.back().config);

    try {
        std::vector<std::string> args = inject_config(args_in);
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        if (app.get_subcommands().empty())
            err << app.help();
        return kUsageError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (st->parsed())
            return selftest(params.back(), out);
        std::size_t idx = 0;
        while (!subs[idx]->parsed())
            ++idx;
        const Command& cmd = cmds[idx];
        const Params& p = params[idx];
        RunConfig cfg = make_config(*subs[idx]);

        std::optional<Cache> cache;
        if (cmd.cacheable)
            if (auto root = cache_root(p.cache_dir))
                cache.emplace(*root);

        std::optional<CacheEntry> entry;
        if (cache) {
            entry = cache->lookup(cfg, err);
            if (entry)
                err << "note: read " << Cache::key(cfg) << " from " << cache->root().string() << "\n";
        }
        if (!entry) {
            Output o = cmd.compute(p);
            json s;
            s["command"] = cfg.command;
            s["columns"] = o.table.header();
            s["rows"] = o.table.rows();
            for (auto& [k, v] : o.summary.items())
                s[k] = v;
            json params = json::object();
            for (const auto& [k, v] : cfg.params)
                params[k] = v;
            s["params"] = params;
            entry = CacheEntry{o.table.to_csv(), s.dump(2) + "\n"};
            if (cache)
                cache->store(cfg, *entry);
        }

        if (!p.out.empty())
            write_atomic(p.out, entry->csv);
        if (!p.summary.empty())
            write_atomic(p.summary, entry->summary);
        if (p.out.empty() && p.summary.empty()) {
            std::string fmt = p.format.empty() ? cmd.format : p.format;
            out << (fmt == "csv" ? entry->csv : entry->summary);
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kComputationError;
    }
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace janossy::cli
