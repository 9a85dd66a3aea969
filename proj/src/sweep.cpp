#include "laghyp/sweep.hpp"

#include "laghyp/laguerre.hpp"
#include "laghyp/operators.hpp"
#include "laghyp/quadrature.hpp"
#include "laghyp/transform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

namespace laghyp {

void parallel_for(size_t n, int threads, const std::function<void(size_t)>& fn) {
    if (n == 0) return;
    threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    if (threads == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

std::vector<TheoremId> theorems_for_p(double p) {
    std::vector<TheoremId> out;
    if (p < 2.0) out.push_back(TheoremId::T15);
    if (p >= 2.0) out.push_back(TheoremId::T16);
    if (p == 2.0) out.push_back(TheoremId::T17);
    if (p <= 2.0) out.push_back(TheoremId::T18);
    return out;
}

struct AlphaWorkspace {
    HypergroupContext ctx;
    std::shared_ptr<const SpaceGrid> space;
    std::shared_ptr<const DualGrid> dual;
};

AlphaWorkspace make_workspace(double alpha, const SweepConfig& cfg) {
    AlphaWorkspace ws{HypergroupContext::make(alpha, cfg.rel_tol), nullptr, nullptr};
    ws.space = build_space_grid(ws.ctx, cfg.x_max, cfg.t_max, cfg.n_x, cfg.n_t);
    ws.dual = build_dual_grid(ws.ctx, cfg.lambda_max, cfg.n_lambda, cfg.m_max, cfg.nu_cap);
    return ws;
}

} // namespace

std::string csv_header() {
    return "entry_id,alpha,p,a,b,theorem,admissible,norm_p,wnorm_space,wnorm_dual,lhs,rhs,ratio,"
           "plancherel_defect,scale_defect,error";
}

std::string csv_format_row(const SweepRow& r) {
    std::string out;
    out += r.entry_id;
    out += ',';
    out += fmt(r.alpha);
    out += ',';
    out += fmt(r.p);
    out += ',';
    out += fmt(r.a);
    out += ',';
    out += fmt(r.b);
    out += ',';
    out += theorem_name(r.theorem);
    out += ',';
    out += r.admissible ? "true" : "false";
    out += ',';
    out += fmt(r.norm_p);
    out += ',';
    out += fmt(r.wnorm_space);
    out += ',';
    out += fmt(r.wnorm_dual);
    out += ',';
    out += fmt(r.lhs);
    out += ',';
    out += fmt(r.rhs);
    out += ',';
    out += fmt(r.ratio);
    out += ',';
    out += fmt(r.plancherel_defect);
    out += ',';
    out += fmt(r.scale_defect);
    out += ',';
    out += sanitize(r.error);
    return out;
}

std::vector<SweepRow> compute_sweep_rows(const SweepConfig& cfg, int threads) {
    const std::vector<CatalogEntry> entries = select_catalog(cfg.catalog);

    // per-alpha contexts and grids, built once
    std::vector<double> alphas = cfg.alpha_list;
    std::vector<AlphaWorkspace> spaces;
    spaces.reserve(alphas.size());
    for (double alpha : alphas) spaces.push_back(make_workspace(alpha, cfg));

    struct Unit {
        size_t entry_idx, alpha_idx;
    };
    std::vector<Unit> units;
    for (size_t e = 0; e < entries.size(); ++e)
        for (size_t a = 0; a < alphas.size(); ++a) units.push_back({e, a});

    const double scale_c = 3.0;
    const double scale_r = std::sqrt(2.0);

    std::vector<std::vector<SweepRow>> unit_rows(units.size());
    parallel_for(units.size(), threads, [&](size_t u) {
        const Unit& unit = units[u];
        const CatalogEntry& entry = entries[unit.entry_idx];
        const AlphaWorkspace& ws = spaces[unit.alpha_idx];
        std::vector<SweepRow>& rows = unit_rows[u];

        std::string unit_error;
        SampledFunction f, g;
        SpectralFunction fhat, ghat;
        double pdefect = 0.0;
        try {
            f = realize(entry, ws.space, ws.ctx);
            fhat = forward(f, ws.dual, ws.ctx);
            pdefect = plancherel_defect(f, fhat);
            g = dilate(f, scale_r, ws.ctx);
            for (auto& v : g.values) v *= scale_c;
            ghat = forward(g, ws.dual, ws.ctx);
        } catch (const std::exception& ex) {
            unit_error = ex.what();
        }

        for (double p : cfg.p_list) {
            for (TheoremId thm : theorems_for_p(p)) {
                for (double a : cfg.a_grid) {
                    for (double b : cfg.b_grid) {
                        SweepRow row;
                        row.entry_id = entry.id;
                        row.alpha = ws.ctx.alpha;
                        row.p = p;
                        row.a = a;
                        row.b = b;
                        row.theorem = thm;
                        row.plancherel_defect = pdefect;
                        if (!unit_error.empty()) {
                            row.error = unit_error;
                            rows.push_back(row);
                            continue;
                        }
                        try {
                            HpwRecord rec = hpw_ratio(f, fhat, p, a, b, ws.ctx, thm);
                            HpwRecord scaled = hpw_ratio(g, ghat, p, a, b, ws.ctx, thm);
                            row.admissible = rec.admissible;
                            row.norm_p = rec.norm_p;
                            row.wnorm_space = rec.wnorm_space;
                            row.wnorm_dual = rec.wnorm_dual;
                            row.lhs = rec.lhs;
                            row.rhs = rec.rhs;
                            row.ratio = rec.ratio;
                            row.scale_defect = std::abs(scaled.ratio - rec.ratio) / rec.ratio;
                        } catch (const std::exception& ex) {
                            row.error = ex.what();
                        }
                        rows.push_back(row);
                    }
                }
            }
        }
    });

    std::vector<SweepRow> all;
    for (auto& rows : unit_rows)
        for (auto& r : rows) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), [](const SweepRow& x, const SweepRow& y) {
        return std::tie(x.entry_id, x.alpha, x.p, x.a, x.b, x.theorem) <
               std::tie(y.entry_id, y.alpha, y.p, y.a, y.b, y.theorem);
    });
    return all;
}

int run_sweep(const SweepConfig& cfg, std::ostream& log) {
    const int threads = effective_threads(cfg.threads);
    std::vector<SweepRow> rows;
    try {
        rows = compute_sweep_rows(cfg, threads);
    } catch (const GridResolutionError& ex) {
        log << "sweep failed: " << ex.what() << "\n";
        return 1;
    }
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const std::string csv_path = cfg.out_dir + "/sweep.csv";
    {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) {
            log << "sweep failed: cannot write " << csv_path << "\n";
            return 1;
        }
        out << csv_header() << "\n";
        for (const auto& r : rows) out << csv_format_row(r) << "\n";
    }

    // plot data: ratio vs a (fixed mid b) and ratio vs p, for the first
    // entry/alpha under T18
    if (!rows.empty() && !cfg.p_list.empty()) {
        const std::string entry0 = select_catalog(cfg.catalog).front().id;
        const double alpha0 = cfg.alpha_list.front();
        const double b_mid = cfg.b_grid[cfg.b_grid.size() / 2];
        const double a_mid = cfg.a_grid[cfg.a_grid.size() / 2];
        double p_pick = -1.0;
        for (double p : cfg.p_list)
            if (p <= 2.0) p_pick = std::max(p_pick, p);
        if (p_pick > 0.0) {
            std::ofstream pa(cfg.out_dir + "/plot_ratio_vs_a.dat", std::ios::binary);
            std::ofstream ppp(cfg.out_dir + "/plot_ratio_vs_p.dat", std::ios::binary);
            for (const auto& r : rows) {
                if (r.entry_id != entry0 || r.alpha != alpha0 || r.theorem != TheoremId::T18)
                    continue;
                if (!r.error.empty()) continue;
                if (r.p == p_pick && r.b == b_mid) pa << fmt(r.a) << " " << fmt(r.ratio) << "\n";
                if (r.a == a_mid && r.b == b_mid) ppp << fmt(r.p) << " " << fmt(r.ratio) << "\n";
            }
        }
    }

    size_t failed = 0;
    for (const auto& r : rows)
        if (!r.error.empty()) ++failed;
    log << "sweep: " << rows.size() << " rows (" << failed << " with errors) -> " << csv_path
        << "\n";
    if (!rows.empty() && failed == rows.size()) return 1;
    return 0;
}

namespace {

struct CheckTable {
    std::ostream& out;
    bool all_ok = true;

    void row(const std::string& name, double measured, double threshold, bool ok) {
        out << (ok ? "[PASS] " : "[FAIL] ") << std::left << std::setw(44) << name << " measured="
            << std::scientific << std::setprecision(3) << measured << " threshold=" << threshold
            << std::defaultfloat << "\n";
        all_ok = all_ok && ok;
    }
    void fail(const std::string& name, const std::string& why) {
        out << "[FAIL] " << std::left << std::setw(44) << name << " " << why << "\n";
        all_ok = false;
    }
};

} // namespace

int run_selftest(const SweepConfig& cfg, std::ostream& out) {
    CheckTable table{out};
    const std::vector<CatalogEntry> entries = select_catalog(cfg.catalog);

    // eigenrelation checks are alpha-specific but fixed by contract
    {
        struct Probe {
            double lambda;
            int m;
            double alpha;
        } probes[] = {{1.0, 0, 0.0}, {0.5, 3, 1.0}, {2.0, 5, 0.5}};
        double worst = 0.0;
        try {
            for (const auto& pr : probes) {
                HypergroupContext c = HypergroupContext::make(pr.alpha, cfg.rel_tol);
                worst = std::max(worst,
                                 eigen_residual(DualPoint{pr.lambda, pr.m}, c, FdConfig{6, 1e-3}));
            }
            table.row("operators.eigen_residual", worst, 1e-6, worst < 1e-6);
        } catch (const std::exception& ex) {
            table.fail("operators.eigen_residual", ex.what());
        }
    }
    {
        double sup = 0.0;
        for (double b : {1.0, 2.0, 3.0}) sup = std::max(sup, elementary_bound_check(b).sup);
        table.row("uncertainty.elementary_bound", sup, 1.0 + 1e-12, sup <= 1.0 + 1e-12);
    }

    for (double alpha : cfg.alpha_list) {
        const std::string tag = "(alpha=" + std::to_string(alpha).substr(0, 4) + ")";
        AlphaWorkspace ws{HypergroupContext{}, nullptr, nullptr};
        try {
            ws.ctx = HypergroupContext::make(alpha, cfg.rel_tol);
        } catch (const std::exception& ex) {
            table.fail("constants.context " + tag, ex.what());
            continue;
        }
        {
            double bound = ws.ctx.series_detail.tail_bound / ws.ctx.series_constant;
            table.row("constants.series_tail " + tag, bound, cfg.rel_tol, bound < cfg.rel_tol);
        }
        {
            double closed = dual_ball_volume(1.0, ws.ctx);
            double brute = dual_ball_bruteforce(1.0, ws.ctx);
            double d = std::abs(closed - brute) / closed;
            table.row("constants.gamma_E1 " + tag, d, cfg.tol_fine, d < cfg.tol_fine);
        }
        {
            double c = 0.5 * ws.ctx.Q;
            double closed = space_ball_moment(c, 1.0, ws.ctx);
            double brute = ball_region_integral(c, 1.0, alpha, 1e-11);
            double d = std::abs(closed - brute) / closed;
            table.row("constants.ball_moment " + tag, d, cfg.tol_fine, d < cfg.tol_fine);
        }
        try {
            ws.space = build_space_grid(ws.ctx, cfg.x_max, cfg.t_max, cfg.n_x, cfg.n_t);
            table.row("grid.space " + tag, ws.space->gaussian_selftest_defect, 1e-6, true);
        } catch (const GridResolutionError& ex) {
            table.fail("grid.space " + tag, ex.what());
            continue;
        }
        try {
            ws.dual = build_dual_grid(ws.ctx, cfg.lambda_max, cfg.n_lambda, cfg.m_max, cfg.nu_cap);
            table.row("grid.dual " + tag,
                      std::max(ws.dual->gs_selftest_defect, ws.dual->ball_selftest_defect), 1e-6,
                      true);
        } catch (const GridResolutionError& ex) {
            table.fail("grid.dual " + tag, ex.what());
            continue;
        }

        double worst_plancherel = 0.0, worst_hy = 0.0;
        try {
            for (const auto& entry : entries) {
                SampledFunction f = realize(entry, ws.space, ws.ctx);
                SpectralFunction fhat = forward(f, ws.dual, ws.ctx);
                worst_plancherel = std::max(worst_plancherel, plancherel_defect(f, fhat));
                for (double p : {1.0, 1.25, 1.5, 2.0})
                    worst_hy = std::max(worst_hy, hausdorff_young_ratio(f, p, fhat));
            }
            table.row("transform.plancherel " + tag, worst_plancherel, cfg.tol_smooth,
                      worst_plancherel < cfg.tol_smooth);
            table.row("transform.hausdorff_young " + tag, worst_hy, 1.0 + 1e-6,
                      worst_hy <= 1.0 + 1e-6);
        } catch (const std::exception& ex) {
            table.fail("transform.catalog " + tag, ex.what());
        }
        try {
            double worst_dil = 0.0, worst_l1 = 0.0;
            size_t count = std::min<size_t>(entries.size(), 3);
            for (size_t e = 0; e < count; ++e) {
                SampledFunction f = realize(entries[e], ws.space, ws.ctx);
                for (double r : {M_SQRT1_2, M_SQRT2}) {
                    DilationDefect d = dilation_identity_defect(f, r, ws.dual, ws.ctx);
                    worst_dil = std::max(worst_dil, d.spectral_max);
                    worst_l1 = std::max(worst_l1, d.l1_defect);
                }
            }
            table.row("transform.dilation " + tag, worst_dil, 1e-5, worst_dil < 1e-5);
            table.row("transform.dilation_l1 " + tag, worst_l1, 1e-8, worst_l1 < 1e-8);
        } catch (const std::exception& ex) {
            table.fail("transform.dilation " + tag, ex.what());
        }
        {
            double worst = 0.0;
            for (double s : {0.25, 1.0, 4.0}) {
                for (double p : {1.0, 2.0, 3.0}) {
                    SpectralFunction gs = gs_spectral(s, ws.dual);
                    double grid_norm = lp_norm_dual(gs, p);
                    double closed = gs_norm(s, p, ws.ctx);
                    worst = std::max(worst, std::abs(grid_norm - closed) / closed);
                }
            }
            table.row("uncertainty.gs_norm " + tag, worst, cfg.tol_smooth, worst < cfg.tol_smooth);
        }
    }

    out << (table.all_ok ? "selftest: all checks passed\n" : "selftest: FAILURES present\n");
    return table.all_ok ? 0 : 1;
}

int run_constants(double alpha, std::optional<double> a, std::optional<double> b,
                  std::optional<double> p, std::ostream& out) {
    HypergroupContext ctx = HypergroupContext::make(alpha);
    out << "alpha = " << alpha << ", Q = " << ctx.Q << "\n\n";
    out << std::setprecision(12);
    out << std::left << std::setw(28) << "quantity" << std::setw(22) << "value"
        << "provenance / flags\n";
    auto line = [&](const std::string& name, double v, const std::string& prov) {
        out << std::left << std::setw(28) << name << std::setw(22) << v << prov << "\n";
    };
    line("Omega_alpha", ctx.omega_alpha, "quadrature (unit ball volume)");
    line("S_alpha", ctx.series_constant,
         "series + tail (bound " + fmt(ctx.series_detail.tail_bound) + ")");
    line("gamma(E_1) closed", dual_ball_volume(1.0, ctx), "closed form");
    line("gamma(E_1) brute", dual_ball_bruteforce(1.0, ctx), "per-m quadrature");
    const double av = a.value_or(1.0), bv = b.value_or(3.0), pv = p.value_or(1.5);
    if (bv > 0.5 * ctx.Q) {
        Case1Constant c1 = case1_constant(av, bv, ctx);
        line("case1 C(a=" + fmt(av) + ",b=" + fmt(bv) + ")", c1.value,
             "constructive (s0=" + fmt(c1.s0) + ", r1=" + fmt(c1.r1) + ", r2=" + fmt(c1.r2) + ")");
    } else {
        out << std::left << std::setw(28) << "case1 C" << std::setw(22) << "-"
            << "hypothesis flag: b <= Q/2 (requires b > " << 0.5 * ctx.Q << ")\n";
    }
    if (pv > 1.0 && pv < 2.0 && bv > ctx.Q * (1.0 / pv - 0.5)) {
        Case2Constant c2 = case2_constant(av, bv, pv, ctx);
        line("case2 C(a=" + fmt(av) + ",b=" + fmt(bv) + ",p=" + fmt(pv) + ")", c2.value,
             "constructive (s0=" + fmt(c2.s0) + ", r1=" + fmt(c2.r1) + ", r2=" + fmt(c2.r2) + ")");
    } else {
        out << std::left << std::setw(28) << "case2 C" << std::setw(22) << "-"
            << "hypothesis flag: needs 1 < p < 2 and b > Q(1/p - 1/2)\n";
    }
    for (double s : {0.25, 1.0, 4.0})
        for (double pn : {1.0, 2.0})
            line("||g_s||_p (s=" + fmt(s) + ", p=" + fmt(pn) + ")", gs_norm(s, pn, ctx),
                 "closed form");
    return 0;
}

} // namespace laghyp
