// kloss3: batch front end for the Kloosterman sum library.
//
// Exit status: 0 success, 1 precondition violation, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kloss3/analytic.hpp"
#include "kloss3/experiments.hpp"
#include "kloss3/ksums.hpp"
#include "kloss3/output.hpp"
#include "kloss3/sweeps.hpp"
#include "kloss3/whittaker.hpp"

using namespace kloss3;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Global {
    std::string out;
    std::string format = "csv";
    unsigned threads = default_threads();
    std::uint64_t seed = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// Argument parsing helpers

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

i64 parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (...) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw CLI::ValidationError(what, "'" + s + "' is not an integer");
    return v;
}

double parse_real(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (...) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw CLI::ValidationError(what, "'" + s + "' is not a number");
    return v;
}

std::vector<i64> parse_ints(const std::string& s, const std::string& what, std::size_t count) {
    const auto parts = split(s, ',');
    if (parts.size() != count)
        throw CLI::ValidationError(what, "expected " + std::to_string(count) + " comma-separated integers");
    std::vector<i64> out;
    for (const auto& p : parts) out.push_back(parse_int(p, what));
    return out;
}

IndexPair parse_pair(const std::string& s, const std::string& what) {
    const auto v = parse_ints(s, what, 2);
    return {v[0], v[1]};
}

/// "re" or "re,im".
cd parse_complex(const std::string& s, const std::string& what) {
    const auto parts = split(s, ',');
    if (parts.size() == 1) return {parse_real(parts[0], what), 0.0};
    if (parts.size() == 2) return {parse_real(parts[0], what), parse_real(parts[1], what)};
    throw CLI::ValidationError(what, "expected re or re,im");
}

std::vector<double> parse_reals(const std::string& s, const std::string& what) {
    std::vector<double> out;
    for (const auto& p : split(s, ',')) out.push_back(parse_real(p, what));
    return out;
}

std::string complex_str(cd z) { return format_double(z.real()) + "," + format_double(z.imag()); }

// ---------------------------------------------------------------------------
// Output

/// Streams rows as CSV, or as {"metadata", "rows", "summary"} JSON.
class RowSink {
public:
    RowSink(const Global& g, json metadata) : format_(g.format), metadata_(std::move(metadata)) {
        if (!g.out.empty()) {
            file_ = std::make_unique<std::ofstream>(g.out, std::ios::binary);
            if (!*file_) throw precondition_error("cannot open output file '" + g.out + "'");
        }
        os_ = file_ ? file_.get() : &std::cout;
        start_ = g.start;
    }

    void header(std::vector<std::string> columns) {
        columns_ = std::move(columns);
        if (format_ == "csv") {
            for (std::size_t i = 0; i < columns_.size(); ++i) *os_ << (i ? "," : "") << csv_escape(columns_[i]);
            *os_ << '\n';
        } else {
            json meta = metadata_;
            meta["columns"] = columns_;
            *os_ << "{\"metadata\":" << meta.dump() << ",\"rows\":[";
        }
    }

    void row(const std::vector<CellValue>& values) {
        if (values.size() != columns_.size()) throw std::logic_error("RowSink: row width does not match the header");
        if (format_ == "csv") {
            for (std::size_t i = 0; i < values.size(); ++i)
                *os_ << (i ? "," : "") << csv_escape(to_cell_string(values[i]));
            *os_ << '\n';
        } else {
            json obj = json::object();
            for (std::size_t i = 0; i < values.size(); ++i) obj[columns_[i]] = cell_json(values[i]);
            *os_ << (rows_ ? "," : "") << "\n" << obj.dump();
        }
        ++rows_;
    }

    void table(const Table& t) {
        header(t.columns);
        for (const auto& r : t.rows) row(r);
    }

    void finish(json summary = json::object()) {
        if (format_ == "json") {
            const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            summary["wall_time_s"] = wall;
            *os_ << "\n],\"summary\":" << summary.dump() << "}\n";
        }
        os_->flush();
        if (!*os_) throw std::runtime_error("write failed");
    }

private:
    std::string format_;
    json metadata_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_ = nullptr;
    std::vector<std::string> columns_;
    std::size_t rows_ = 0;
    std::chrono::steady_clock::time_point start_;
};

json metadata(const std::string& command, const Global& g, json config) {
    config["threads"] = g.threads;
    config["seed"] = g.seed;
    return {{"version", kVersion}, {"command", command}, {"config", std::move(config)}};
}

// ---------------------------------------------------------------------------
// sum

struct SumArgs {
    std::string weyl = "wl";
    std::string m, n, c;
    bool ungated = false;
    bool tally = false;
};

int run_sum(const Global& g, const SumArgs& a) {
    ExponentTally t;
    json config{{"weyl", a.weyl}, {"m", a.m}, {"n", a.n}, {"c", a.c}, {"gated", !a.ungated}};
    std::vector<std::string> cols;
    std::vector<CellValue> params;
    if (a.weyl == "classical") {
        const i64 x = parse_int(a.m, "--m"), y = parse_int(a.n, "--n"), c = parse_int(a.c, "--c");
        t = kloosterman_classical(x, y, c);
        cols = {"weyl", "a", "b", "c"};
        params = {a.weyl, x, y, c};
    } else {
        const WeylElement w = parse_weyl(a.weyl);
        const IndexPair m = parse_pair(a.m, "--m"), n = parse_pair(a.n, "--n"), cp = parse_pair(a.c, "--c");
        const ModPair c(cp.first, cp.second);
        switch (w) {
        case WeylElement::wl: t = s_wl_fast(CharPair(m.first, m.second), CharPair(n.first, n.second), c); break;
        case WeylElement::w4: t = s_w4(CharPair(m.first, m.second), CharPair(n.first, n.second), c, !a.ungated); break;
        case WeylElement::w5: t = s_w5(CharPair(m.first, m.second), CharPair(n.first, n.second), c, !a.ungated); break;
        default: t = s_degenerate(w, m, n, c);
        }
        cols = {"weyl", "m1", "m2", "n1", "n2", "c1", "c2", "gated"};
        params = {a.weyl, m.first, m.second, n.first, n.second, c.c1(), c.c2(), !a.ungated};
    }
    const auto v = t.value();
    std::cout << format_complex(v) << '\n';
    if (a.tally) std::cout << "tally: " << (t.is_zero() ? "0" : t.to_string()) << '\n';
    if (!g.out.empty()) {
        RowSink sink(g, metadata("sum", g, config));
        for (const char* col : {"re", "im", "terms", "tally"}) cols.emplace_back(col);
        params.insert(params.end(), {v.real(), v.imag(), t.term_count(), t.to_string()});
        sink.header(cols);
        sink.row(params);
        sink.finish();
    }
    return 0;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
    std::string m, n, c;
};

int run_table(const Global& g, const TableArgs& a) {
    const IndexPair m = parse_pair(a.m, "--m"), n = parse_pair(a.n, "--n"), cp = parse_pair(a.c, "--c");
    const ModPair c(cp.first, cp.second);
    RowSink sink(g, metadata("table", g, {{"m", a.m}, {"n", a.n}, {"c", a.c}}));
    sink.header({"weyl", "m1", "m2", "n1", "n2", "c1", "c2", "bruhat", "re", "im", "terms", "tally"});
    const bool nondeg = m.first && m.second && n.first && n.second;
    for (auto w : {WeylElement::I, WeylElement::w2, WeylElement::w3, WeylElement::w4, WeylElement::w5,
                   WeylElement::wl}) {
        ExponentTally t;
        if (w == WeylElement::I || w == WeylElement::w2 || w == WeylElement::w3) {
            t = s_degenerate(w, m, n, c);
        } else {
            if (!nondeg) continue;
            const CharPair cm(m.first, m.second), cn(n.first, n.second);
            if (w == WeylElement::w4) t = s_w4(cm, cn, c, true);
            if (w == WeylElement::w5) t = s_w5(cm, cn, c, true);
            if (w == WeylElement::wl) t = s_wl_fast(cm, cn, c);
        }
        const auto v = t.value();
        sink.row({to_string(w), m.first, m.second, n.first, n.second, c.c1(), c.c2(), bruhat_admissible(w, c),
                  v.real(), v.imag(), t.term_count(), t.to_string()});
    }
    sink.finish();
    return 0;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
    std::string kind = "stevens";
    i64 cmax = 50;
    i64 mmax = 3;
    std::vector<std::string> ab;
};

int run_bounds(const Global& g, const BoundsArgs& a) {
    if (a.kind != "weil" && a.kind != "stevens" && a.kind != "larsen")
        throw CLI::ValidationError("--kind", "must be weil, stevens or larsen");
    if (a.cmax < 1) throw precondition_error("bounds: --cmax must be >= 1");
    if (a.mmax < 1) throw precondition_error("bounds: --mmax must be >= 1");
    std::vector<IndexPair> pairs;
    if (a.kind == "weil") {
        for (const auto& s : a.ab) pairs.push_back(parse_pair(s, "--ab"));
        if (pairs.empty())
            for (i64 x = 1; x <= a.mmax; ++x)
                for (i64 y = 1; y <= a.mmax; ++y) pairs.push_back({x, y});
    }
    RowSink sink(g, metadata("bounds", g, {{"kind", a.kind}, {"cmax", a.cmax}, {"mmax", a.mmax}, {"ab", a.ab}}));
    sink.header({"kind", "weyl", "m1", "m2", "n1", "n2", "c1", "c2", "computed_abs", "bound", "holds"});
    i64 total = 0, violations = 0;
    double worst = 0.0;
    auto emit = [&](const std::vector<BoundRow>& rows) {
        for (const auto& r : rows) {
            sink.row({a.kind, to_string(r.w), r.m.first, r.m.second, r.n.first, r.n.second, r.c.c1(), r.c.c2(),
                      r.report.computed_abs, r.report.bound_value, r.report.holds});
            ++total;
            if (!r.report.holds) ++violations;
            worst = std::max(worst, r.report.computed_abs / r.report.bound_value);
        }
    };
    if (a.kind == "weil") {
        sweep_weil(a.cmax, pairs, g.threads, emit);
    } else if (a.kind == "stevens") {
        WlTermCache cache;
        sweep_stevens(a.cmax, a.mmax, g.threads, emit, &cache);
    } else {
        sweep_larsen(a.cmax, a.mmax, g.threads, emit);
    }
    sink.finish({{"rows", total}, {"violations", violations}, {"max_ratio", worst}});
    if (violations) std::cerr << "bounds: " << violations << " of " << total << " rows violate the bound\n";
    return 0;
}

// ---------------------------------------------------------------------------
// smooth

struct SmoothArgs {
    std::string m = "1,1", n = "1,1";
    double X = 0.0, Y = 0.0;
    std::string sweep;
    std::string window;
};

int run_smooth(const Global& g, const SmoothArgs& a) {
    const IndexPair mi = parse_pair(a.m, "--m"), ni = parse_pair(a.n, "--n");
    const CharPair m(mi.first, mi.second), n(ni.first, ni.second);
    SmoothWindow win;
    if (!a.window.empty()) {
        const auto w = parse_reals(a.window, "--window");
        if (w.size() != 4) throw CLI::ValidationError("--window", "expected lo1,hi1,lo2,hi2");
        win = {w[0], w[1], w[2], w[3]};
    }
    win.validate();
    std::vector<std::pair<double, double>> scales;
    if (!a.sweep.empty()) {
        for (double x : parse_reals(a.sweep, "--sweep")) scales.emplace_back(x, x);
    } else {
        if (!(a.X > 0.0 && a.Y > 0.0)) throw precondition_error("smooth: --X and --Y must be positive (or give --sweep)");
        scales.emplace_back(a.X, a.Y);
    }
    for (const auto& [x, y] : scales) {
        if (!(x > 0.0 && y > 0.0)) throw precondition_error("smooth: scales must be positive");
        smoothed_bounds(m, n, x, y, win);
    }
    RowSink sink(g, metadata("smooth", g, {{"m", a.m}, {"n", a.n}, {"X", a.X}, {"Y", a.Y}, {"sweep", a.sweep},
                                           {"window", {win.lo1, win.hi1, win.lo2, win.hi2}}}));
    sink.header({"m1", "m2", "n1", "n2", "X", "Y", "re", "im", "abs", "trivial", "ratio", "tail_share", "terms"});
    WlTermCache cache;
    std::vector<std::pair<double, double>> fit;
    for (const auto& [x, y] : scales) {
        const auto r = smoothed_wl_sum(m, n, x, y, win, g.threads, &cache);
        const double ratio = r.trivial > 0.0 ? std::abs(r.value) / r.trivial : 0.0;
        sink.row({m.m1(), m.m2(), n.m1(), n.m2(), x, y, r.value.real(), r.value.imag(), std::abs(r.value), r.trivial,
                  ratio, r.tail_share, r.terms});
        fit.emplace_back(x, std::abs(r.value));
    }
    json summary = json::object();
    if (fit.size() >= 4) {
        const auto f = fit_loglog(fit);
        summary = {{"fitted_slope", f.slope}, {"residual", f.residual}, {"points", f.points}};
    }
    sink.finish(summary);
    return 0;
}

// ---------------------------------------------------------------------------
// linnik

struct LinnikArgs {
    i64 n = 1, m = 1;
    double T = 0.0;
    double fit_min = 1024.0;
};

int run_linnik(const Global& g, const LinnikArgs& a) {
    if (!(a.T <= 1e5)) throw precondition_error("linnik: --T must be <= 1e5");
    const auto r = linnik_sum(a.n, a.m, a.T, g.threads, a.fit_min);
    RowSink sink(g, metadata("linnik", g, {{"n", a.n}, {"m", a.m}, {"T", a.T}, {"fit_min", a.fit_min}}));
    auto t1 = series_table(r.weighted, {{"variant", std::string("weighted")}, {"n", a.n}, {"m", a.m}, {"T", a.T}});
    const auto t2 =
        series_table(r.unweighted, {{"variant", std::string("unweighted")}, {"n", a.n}, {"m", a.m}, {"T", a.T}});
    t1.rows.insert(t1.rows.end(), t2.rows.begin(), t2.rows.end());
    sink.table(t1);
    sink.finish({{"weighted", series_summary(r.weighted)}, {"unweighted", series_summary(r.unweighted)}});
    return 0;
}

// ---------------------------------------------------------------------------
// zeta

struct ZetaArgs {
    std::string weyl = "wl";
    std::string m = "1,1", n = "1,1";
    std::string u;
    i64 cmax = 64;
};

int run_zeta(const Global& g, const ZetaArgs& a) {
    const WeylElement w = parse_weyl(a.weyl);
    const IndexPair mi = parse_pair(a.m, "--m"), ni = parse_pair(a.n, "--n");
    const CharPair m(mi.first, mi.second), n(ni.first, ni.second);
    const auto uv = parse_reals(a.u, "--u");
    if (uv.empty() || uv.size() > 2) throw CLI::ValidationError("--u", "expected u or u1,u2");
    const std::pair<double, double> u{uv[0], uv.size() == 2 ? uv[1] : uv[0]};
    WlTermCache cache;
    const auto s = zeta_partial_sum(w, m, n, u, a.cmax, g.threads, &cache);
    RowSink sink(g, metadata("zeta", g, {{"weyl", a.weyl}, {"m", a.m}, {"n", a.n}, {"u", a.u}, {"cmax", a.cmax}}));
    sink.header({"weyl", "m1", "m2", "n1", "n2", "u1", "u2", "scale", "re", "im", "abs", "terms", "increment"});
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        const auto& r = s.records[i];
        const double inc = i ? r.abs - s.records[i - 1].abs : r.abs;
        sink.row({a.weyl, m.m1(), m.m2(), n.m1(), n.m2(), u.first, u.second, r.scale, r.value.real(), r.value.imag(),
                  r.abs, r.term_count, inc});
    }
    const auto inc = increments(s);
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < inc.size(); ++i)
        if (s.records[i + 1].scale >= 64.0 && !(inc[i + 1] < inc[i])) decreasing = false;
    sink.finish({{"increments_decreasing_beyond_64", decreasing}});
    return 0;
}

// ---------------------------------------------------------------------------
// specfun

struct SpecArgs {
    std::string fn;
    std::string z = "1", a = "1", b = "1";
    std::string mu1 = "0", mu2 = "0";
    std::string u1 = "2", u2 = "2";
    double y1 = 1.0, y2 = 1.0;
    double delta = 0.1;
};

int run_specfun(const Global& g, const SpecArgs& a) {
    const SpectralPoint mu(parse_complex(a.mu1, "--mu1"), parse_complex(a.mu2, "--mu2"));
    const MellinPoint u{parse_complex(a.u1, "--u1"), parse_complex(a.u2, "--u2")};
    const DeltaParam delta(a.delta);
    const cd z = parse_complex(a.z, "--z");
    cd v;
    double err = 0.0;
    const std::string& f = a.fn;
    if (f == "lgamma") v = lgamma_c(z);
    else if (f == "gamma") v = gamma_c(z);
    else if (f == "beta") v = beta_c(parse_complex(a.a, "--a"), parse_complex(a.b, "--b"));
    else if (f == "lambda") v = big_lambda(mu);
    else if (f == "g") v = g_fn(u, mu);
    else if (f == "gstar") v = g_star(u, mu);
    else if (f == "gstar_left") v = g_star_residues(mu).left(u.u2);
    else if (f == "gstar_right") v = g_star_residues(mu).right(u.u1);
    else if (f == "gstar_both") v = g_star_residues(mu).both();
    else if (f == "kwl") v = k_wl(mu, delta);
    else if (f == "kadj") v = k_adj(mu, delta);
    else if (f == "cstar") v = c_star(mu, delta);
    else if (f == "ji") v = j_i(mu, delta);
    else if (f == "c3") v = c3_inv_sq(mu);
    else if (f == "whittaker") {
        const auto r = whittaker(a.y1, a.y2, mu);
        v = r.value;
        err = r.error_estimate;
    } else
        throw CLI::ValidationError("--fn", "unknown function '" + f + "'");
    RowSink sink(g, metadata("specfun", g,
                             {{"fn", f}, {"z", a.z}, {"a", a.a}, {"b", a.b}, {"mu1", a.mu1}, {"mu2", a.mu2},
                              {"u1", a.u1}, {"u2", a.u2}, {"y1", a.y1}, {"y2", a.y2}, {"delta", a.delta}}));
    sink.header({"fn", "z", "a", "b", "mu1", "mu2", "u1", "u2", "y1", "y2", "delta", "re", "im", "error_estimate"});
    sink.row({f, a.z, a.a, a.b, complex_str(mu.mu1()), complex_str(mu.mu2()), complex_str(u.u1), complex_str(u.u2),
              a.y1, a.y2, a.delta, v.real(), v.imag(), err});
    sink.finish();
    return 0;
}

// ---------------------------------------------------------------------------
// stade

struct StadeArgs {
    std::string mu1 = "0", mu2 = "0", mup1 = "0", mup2 = "0";
    std::string s = "1.1";
    int random = 0;
};

int run_stade(const Global& g, const StadeArgs& a) {
    const cd s = parse_complex(a.s, "--s");
    if (s.real() < 1.0) throw precondition_error("stade: requires Re(s) >= 1");
    if (a.random < 0) throw precondition_error("stade: --random must be >= 0");
    std::vector<std::pair<SpectralPoint, SpectralPoint>> points;
    if (a.random == 0) {
        points.emplace_back(SpectralPoint(parse_complex(a.mu1, "--mu1"), parse_complex(a.mu2, "--mu2")),
                            SpectralPoint(parse_complex(a.mup1, "--mup1"), parse_complex(a.mup2, "--mup2")));
    } else {
        std::mt19937_64 rng(g.seed);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (int k = 0; k < a.random; ++k) {
            const double a1 = d(rng), a2 = d(rng), b1 = d(rng), b2 = d(rng);
            points.emplace_back(SpectralPoint(cd(0, a1), cd(0, a2)), SpectralPoint(cd(0, b1), cd(0, b2)));
        }
    }
    std::vector<IdentityCheck> res(points.size());
    parallel_for(points.size(), g.threads, [&](std::size_t i) { res[i] = stade_check(points[i].first, points[i].second, s); });
    RowSink sink(g, metadata("stade", g,
                             {{"mu1", a.mu1}, {"mu2", a.mu2}, {"mup1", a.mup1}, {"mup2", a.mup2}, {"s", a.s},
                              {"random", a.random}}));
    sink.header({"mu1", "mu2", "mup1", "mup2", "s", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_err"});
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& [mu, mup] = points[i];
        sink.row({complex_str(mu.mu1()), complex_str(mu.mu2()), complex_str(mup.mu1()), complex_str(mup.mu2()),
                  complex_str(s), res[i].lhs.real(), res[i].lhs.imag(), res[i].rhs.real(), res[i].rhs.imag(),
                  res[i].rel_err});
        worst = std::max(worst, res[i].rel_err);
    }
    sink.finish({{"max_rel_err", worst}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical and SL(3, Z) Kloosterman sums, bounds, special functions and partial-sum experiments"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Global g;
    app.add_option("--out", g.out, "Output file (default: stdout)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", g.threads, "Worker threads (default: KLOSS3_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized sweeps");
    app.fallthrough();

    SumArgs sum;
    auto* c_sum = app.add_subcommand("sum", "Evaluate one Kloosterman sum");
    c_sum->add_option("--weyl", sum.weyl, "classical, I, w2, w3, w4, w5 or wl")->required();
    c_sum->add_option("--m", sum.m, "m1,m2 (a for classical)")->required();
    c_sum->add_option("--n", sum.n, "n1,n2 (b for classical)")->required();
    c_sum->add_option("--c", sum.c, "c1,c2 (c for classical)")->required();
    c_sum->add_flag("--ungated", sum.ungated, "w4/w5: skip the compatibility gate");
    c_sum->add_flag("--tally", sum.tally, "Also print the exact tally as count@t/L pairs");

    TableArgs table;
    auto* c_table = app.add_subcommand("table", "All Weyl-element sums for one (m, n, c)");
    c_table->add_option("--m", table.m, "m1,m2")->required();
    c_table->add_option("--n", table.n, "n1,n2")->required();
    c_table->add_option("--c", table.c, "c1,c2")->required();

    BoundsArgs bounds;
    auto* c_bounds = app.add_subcommand("bounds", "Sweep a bound over moduli and characters");
    c_bounds->add_option("--kind", bounds.kind, "weil, stevens or larsen")->required();
    c_bounds->add_option("--cmax", bounds.cmax, "Largest modulus")->required();
    c_bounds->add_option("--mmax", bounds.mmax, "Largest |m_i|, |n_i| (weil: a, b in 1..mmax)");
    c_bounds->add_option("--ab", bounds.ab, "weil: explicit a,b pairs (repeatable)");

    SmoothArgs smooth;
    auto* c_smooth = app.add_subcommand("smooth", "Smoothed long-element sum");
    c_smooth->add_option("--m", smooth.m, "m1,m2");
    c_smooth->add_option("--n", smooth.n, "n1,n2");
    c_smooth->add_option("--X", smooth.X, "Scale X");
    c_smooth->add_option("--Y", smooth.Y, "Scale Y");
    c_smooth->add_option("--sweep", smooth.sweep, "Comma-separated scales with X = Y; fits the growth slope");
    c_smooth->add_option("--window", smooth.window, "lo1,hi1,lo2,hi2 (default 0.5,2,0.5,2)");

    LinnikArgs linnik;
    auto* c_linnik = app.add_subcommand("linnik", "Partial sums of S(n, m, c)/c and S(n, m, c)");
    c_linnik->add_option("--n", linnik.n, "n");
    c_linnik->add_option("--m", linnik.m, "m");
    c_linnik->add_option("--T", linnik.T, "Upper limit (<= 1e5)")->required();
    c_linnik->add_option("--fit-min", linnik.fit_min, "Smallest checkpoint used in the slope fit");

    ZetaArgs zeta;
    auto* c_zeta = app.add_subcommand("zeta", "Kloosterman zeta partial sums of absolute values");
    c_zeta->add_option("--weyl", zeta.weyl, "w4, w5 or wl")->required();
    c_zeta->add_option("--m", zeta.m, "m1,m2");
    c_zeta->add_option("--n", zeta.n, "n1,n2");
    c_zeta->add_option("--u", zeta.u, "u (w4, w5) or u1,u2 (wl)")->required();
    c_zeta->add_option("--cmax", zeta.cmax, "Largest modulus");

    SpecArgs spec;
    auto* c_spec = app.add_subcommand("specfun", "Evaluate one special function");
    c_spec->add_option("--fn", spec.fn,
                       "lgamma, gamma, beta, lambda, g, gstar, gstar_left, gstar_right, gstar_both, kwl, kadj, "
                       "cstar, ji, c3, whittaker")
        ->required();
    c_spec->add_option("--z", spec.z, "Argument re[,im]");
    c_spec->add_option("--a", spec.a, "beta: first argument re[,im]");
    c_spec->add_option("--b", spec.b, "beta: second argument re[,im]");
    c_spec->add_option("--mu1", spec.mu1, "mu1 re[,im]");
    c_spec->add_option("--mu2", spec.mu2, "mu2 re[,im]");
    c_spec->add_option("--u1", spec.u1, "u1 re[,im]");
    c_spec->add_option("--u2", spec.u2, "u2 re[,im]");
    c_spec->add_option("--y1", spec.y1, "whittaker: y1");
    c_spec->add_option("--y2", spec.y2, "whittaker: y2");
    c_spec->add_option("--delta", spec.delta, "Delta in (0, 1]");

    StadeArgs stade;
    auto* c_stade = app.add_subcommand("stade", "Numerical check of Stade's integral");
    c_stade->add_option("--mu1", stade.mu1, "mu1 re[,im]");
    c_stade->add_option("--mu2", stade.mu2, "mu2 re[,im]");
    c_stade->add_option("--mup1", stade.mup1, "mu'1 re[,im]");
    c_stade->add_option("--mup2", stade.mup2, "mu'2 re[,im]");
    c_stade->add_option("--s", stade.s, "s re[,im], Re(s) >= 1");
    c_stade->add_option("--random", stade.random, "Use this many random tempered points (seeded)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_sum) return run_sum(g, sum);
        if (*c_table) return run_table(g, table);
        if (*c_bounds) return run_bounds(g, bounds);
        if (*c_smooth) return run_smooth(g, smooth);
        if (*c_linnik) return run_linnik(g, linnik);
        if (*c_zeta) return run_zeta(g, zeta);
        if (*c_spec) return run_specfun(g, spec);
        if (*c_stade) return run_stade(g, stade);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 1;
    } catch (const pole_error& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 1;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
