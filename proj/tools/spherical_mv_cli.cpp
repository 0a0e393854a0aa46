/*
 * Copyright 2026 The spherical_mv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line entry point: eval, certify, find-m, euclid, bench, selftest.
// Exit codes: 0 ok, 1 selftest failure, 2 config, 3 numeric,
// 4 certification fail, 5 search exhausted.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <spherical_mv/acceptance.hpp>
#include <spherical_mv/certifier.hpp>
#include <spherical_mv/complexgrp.hpp>
#include <spherical_mv/euclid.hpp>
#include <spherical_mv/euclid_json.hpp>
#include <spherical_mv/hcseries.hpp>
#include <spherical_mv/rankone.hpp>
#include <spherical_mv/report_io.hpp>

#include "cli_support.hpp"

namespace smv = spherical_mv;
using smv::cplx;
using smv::io::json;
using smv::io::num;
namespace cli = smv::cli;

namespace {

json space_json(const smv::RankOneSpace& sp) {
    return {{"name", sp.name}, {"p", sp.p}, {"q", sp.q}, {"n", sp.n}, {"rho", num(sp.rho)}};
}

json tolerance_json(const std::map<std::string, double>& tol) {
    json j = json::object();
    for (const auto& [k, v] : tol) j[k] = num(v);
    return j;
}

/// Writes the whole file at once; the directory must exist.
void write_file(const std::string& path, const std::string& text) {
    const auto dir = std::filesystem::path(path).parent_path();
    if (!dir.empty() && !std::filesystem::is_directory(dir))
        throw cli::ConfigError("output directory '" + dir.string() + "' does not exist");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cli::ConfigError("cannot write '" + path + "'");
    out << text;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") std::cout << text;
    else write_file(path, text);
}

smv::QuadratureSpec quad_spec(const std::map<std::string, double>& tol) {
    smv::QuadratureSpec q;
    q.abs_tol = tol.at("quad_abs_tol");
    q.oscillation_guard = tol.at("oscillation_guard");
    try {
        q.validate();
    } catch (const smv::DomainError& e) {
        throw cli::ConfigError(e.what());
    }
    return q;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string space = "H3";
    double t = 1.0;
    std::string lambda = "0:10:0.5";
    double lambda_im = 0.0;
    std::string route = "auto";
    int N = smv::kAutoSeriesOrder;
    int K = 60;
    std::string out;
    std::vector<std::string> tol;
};

struct EvalRow {
    cplx value;
    std::string route;
    double est_error;
};

EvalRow eval_point(const EvalArgs& a, const smv::RankOneSpace& sp, cplx z, const smv::QuadratureSpec& qs) {
    if (a.route == "hc") {
        try {
            const auto v = smv::phi_hc_detail(sp, a.t, z, a.K);
            return {v.value, "hc", v.tail_estimate};
        } catch (const smv::ResonanceError&) {
        } catch (const smv::PoleError&) {
        }
        const cplx v = smv::phi_hc_regularized(sp, a.t, z, a.K);
        const cplx w = smv::phi_hc_regularized(sp, a.t, z, a.K, 2e-3);
        return {v, "hc-regularized", std::abs(v - w)};
    }
    if (a.route == "complex") {
        const auto W = smv::weyl_group_A(1);
        const auto v = smv::phi_complex_regular_detail(smv::make_complex_point(W, {0.5 * a.t, -0.5 * a.t}, {z, -z}));
        return {v.value, "complex", v.est_error};
    }
    static const std::map<std::string, smv::Route> routes{{"auto", smv::Route::Auto},
                                                          {"oracle", smv::Route::Oracle},
                                                          {"recurrence", smv::Route::Recurrence},
                                                          {"series", smv::Route::Series}};
    const smv::Route r = routes.at(a.route);
    const smv::IValue I = smv::evaluate_I(sp, a.t, z, r, a.N, qs);
    const double pre = smv::koornwinder_prefactor(sp, a.t);
    return {I.value * pre, smv::route_name(I.route), I.est_error * pre};
}

int cmd_eval(const EvalArgs& a) {
    const auto tol = cli::parse_tolerances(a.tol, {{"quad_abs_tol", 1e-14}, {"oscillation_guard", 6.0}});
    const auto qs = quad_spec(tol);
    const auto sp = smv::resolve_space(a.space);
    if (!(a.t > 0.0)) throw cli::ConfigError("--t must be positive");
    if (a.route == "complex" && !(sp.p == 2 && sp.q == 0))
        throw cli::ConfigError("--route complex is the A1 complex group, which matches H3 only");
    const auto grid = cli::parse_grid(a.lambda, "--lambda");
    const auto rows = smv::parallel_map<EvalRow>(grid.size(), [&](std::size_t i) {
        return eval_point(a, sp, cplx{grid[i], a.lambda_im}, qs);
    });
    smv::io::CsvWriter w({"lambda_re", "lambda_im", "value_re", "value_im", "route", "est_error"});
    for (std::size_t i = 0; i < grid.size(); ++i)
        w.row({smv::io::csv_number(grid[i]), smv::io::csv_number(a.lambda_im), smv::io::csv_number(rows[i].value.real()),
               smv::io::csv_number(rows[i].value.imag()), rows[i].route, smv::io::csv_number(rows[i].est_error)});
    json meta = {{"schema_version", smv::io::kSchemaVersion},
                 {"command", "eval"},
                 {"space", space_json(sp)},
                 {"t", num(a.t)},
                 {"lambda", a.lambda},
                 {"lambda_im", num(a.lambda_im)},
                 {"route", a.route},
                 {"series_order", a.N},
                 {"hc_truncation", a.K},
                 {"rows", grid.size()},
                 {"tolerances", tolerance_json(tol)}};
    if (a.out.empty() || a.out == "-") {
        std::cout << w.str();
        std::cerr << meta.dump() << "\n";
    } else {
        write_file(a.out, w.str());
        write_file(a.out + ".meta.json", meta.dump(2) + "\n");
    }
    return cli::kOk;
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

struct CertifyArgs {
    std::string space = "H3";
    double t = 1.0;
    std::string synthetic;
    std::string out_dir;
    std::string prefix = "certify";
    double A = 0.0;
    double Xi = 1e4;
    int per_decade = 10;
    int samples = 512;
    std::string mode = "chord";
    std::string route = "auto";
    std::string target;
    std::vector<std::string> tol;
};

int cmd_certify(const CertifyArgs& a) {
    if (a.out_dir.empty()) throw cli::ConfigError("--out-dir is required");
    if (!std::filesystem::is_directory(a.out_dir))
        throw cli::ConfigError("output directory '" + a.out_dir + "' does not exist");
    const auto tol = cli::parse_tolerances(a.tol, {{"quad_abs_tol", 1e-14}, {"oscillation_guard", 6.0}, {"growth_slack", 1.0}});
    smv::CertifyConfig cfg;
    cfg.A = a.A;
    cfg.Xi = a.Xi;
    cfg.per_decade = a.per_decade;
    cfg.samples = a.samples;
    cfg.mode = a.mode == "disk" ? smv::Neighbourhood::Disk : smv::Neighbourhood::Chord;
    if (a.mode != "disk" && a.mode != "chord") throw cli::ConfigError("--mode must be chord or disk");
    static const std::map<std::string, smv::Route> routes{{"auto", smv::Route::Auto},
                                                          {"oracle", smv::Route::Oracle},
                                                          {"recurrence", smv::Route::Recurrence},
                                                          {"series", smv::Route::Series}};
    if (!routes.count(a.route)) throw cli::ConfigError("--route must be auto, oracle, recurrence or series for certify");
    cfg.route = routes.at(a.route);
    cfg.quad = quad_spec(tol);
    cfg.growth_slack = tol.at("growth_slack");
    if (!a.target.empty()) {
        const auto v = cli::parse_grid(a.target, "--target");
        if (v.size() != 3) throw cli::ConfigError("--target expects B,C,D");
        cfg.target = smv::BCD{v[0], v[1], v[2]};
    }
    if (!(a.t > 0.0 && a.t <= 5.0)) throw cli::ConfigError("--t must lie in (0, 5]");
    if (!(cfg.Xi >= 100.0)) throw cli::ConfigError("--Xi must be at least 100");

    json subject;
    smv::SpaceCertification C;
    if (!a.synthetic.empty()) {
        if (a.synthetic != "gauss") throw cli::ConfigError("--synthetic supports 'gauss' only");
        subject = {{"synthetic", "gauss"}, {"function", "exp(zeta^2)"}};
        C = smv::certify_function([](cplx z) { return std::exp(z * z); }, a.t, cfg);
    } else {
        const auto sp = smv::resolve_space(a.space);
        subject = space_json(sp);
        C = smv::certify_space(sp, a.t, cfg);
    }
    json doc = {{"schema_version", smv::io::kSchemaVersion},
                {"command", "certify"},
                {"subject", subject},
                {"config",
                 {{"t", num(a.t)},
                  {"A", num(a.A > 0.0 ? a.A : smv::default_disk_constant(a.t))},
                  {"Xi", num(a.Xi)},
                  {"per_decade", a.per_decade},
                  {"samples", a.samples},
                  {"mode", a.mode},
                  {"route", a.route},
                  {"growth_rectangle", {num(cfg.growth_re_max), num(cfg.growth_im_max)}},
                  {"growth_steps", {cfg.growth_re_steps, cfg.growth_im_steps}}}},
                {"tolerances", tolerance_json(tol)},
                {"result", smv::io::to_json(C)}};
    const std::string csv = C.slow_ran ? smv::io::slow_decrease_csv(C.slow) : smv::io::CsvWriter({"xi", "radius", "sup", "bound", "margin"}).str();
    const auto base = std::filesystem::path(a.out_dir) / a.prefix;
    write_file(base.string() + ".json", doc.dump(2) + "\n");
    write_file(base.string() + ".csv", csv);
    std::cout << (C.pass ? "PASS" : "FAIL") << " growth=" << (C.growth.pass ? "pass" : "fail");
    if (C.slow_ran) std::cout << " slow_decrease=" << (C.slow.pass ? "pass" : "fail") << " D=" << C.slow.fitted.D;
    else std::cout << " slow_decrease=skipped";
    std::cout << "\n";
    if (!C.pass) {
        std::cerr << "certification failed: " << (C.growth.pass ? C.slow.detail : C.growth.detail) << "\n";
        return cli::kCertificationFail;
    }
    return cli::kOk;
}

// ---------------------------------------------------------------------------
// find-m
// ---------------------------------------------------------------------------

struct FindMArgs {
    std::string space = "H3";
    double eta = 0.1;
    double H0 = 0.5;
    int K = 60;
    double check_at = 0.0;
    std::string out;
    std::vector<std::string> tol;
};

int cmd_find_m(const FindMArgs& a) {
    const auto tol = cli::parse_tolerances(a.tol, {{"lower_bound_margin", 0.0}});
    const auto sp = smv::resolve_space(a.space);
    const auto eta = smv::eta_conditions(sp, a.eta);
    if (!eta.all()) {
        for (const auto& c : eta.conditions)
            if (!c.pass) std::cerr << "eta condition (" << c.label << ") fails: " << c.detail << "\n";
        throw cli::ConfigError("eta = " + std::to_string(a.eta) + " is not admissible for " + sp.name);
    }
    const auto fm = smv::find_M(sp, a.eta, a.H0, a.K);
    json doc = {{"schema_version", smv::io::kSchemaVersion},
                {"command", "find-m"},
                {"space", space_json(sp)},
                {"eta_conditions", smv::io::to_json(eta)},
                {"hc_truncation", a.K},
                {"tolerances", tolerance_json(tol)},
                {"result", smv::io::to_json(fm)}};
    int rc = cli::kOk;
    if (a.check_at > 0.0) {
        std::vector<double> xi{0.0};
        for (int i = 0; i <= 160; ++i) xi.push_back(std::pow(10.0, -2.0 + 5.0 * i / 160.0));
        auto v = smv::lower_bound_check(sp, fm, a.check_at, xi, 1.0, a.K);
        v.pass = v.min_margin >= 1.0 - tol.at("lower_bound_margin");
        doc["lower_bound"] = smv::io::to_json(v);
        doc["lower_bound"]["H_scalar"] = num(a.check_at);
        if (!v.pass) rc = cli::kCertificationFail;
    }
    emit(a.out, doc.dump(2) + "\n");
    return rc;
}

// ---------------------------------------------------------------------------
// euclid
// ---------------------------------------------------------------------------

struct EuclidArgs {
    std::string input;
    double xi_max = 1e4;
    int per_decade = 4;
    double exponent_scale = 1.0;
    std::string out;
    std::vector<std::string> tol;
};

int cmd_euclid(const EuclidArgs& a) {
    const auto tol = cli::parse_tolerances(a.tol, {{"log_margin", 0.0}});
    std::ifstream in(a.input, std::ios::binary);
    if (!in) throw cli::ConfigError("cannot read distribution file '" + a.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const auto mu = smv::distribution_from_json_text(buf.str());
    std::vector<smv::rvec> points;
    smv::cvec weights;
    for (std::size_t j = 0; j < mu.terms.size(); ++j) {
        const auto& term = mu.terms[j];
        cplx c = term.weight;
        for (const auto& [mi, coeff] : term.poly) {
            if (std::any_of(mi.begin(), mi.end(), [](int e) { return e != 0; }))
                throw cli::ConfigError("term " + std::to_string(j) +
                                       " has a non-constant symbol; the explicit constant covers weighted delta sums");
        }
        if (!term.poly.empty()) c *= term.poly.begin()->second;
        points.push_back(term.point);
        weights.push_back(c);
    }
    if (!(a.xi_max >= 1.0)) throw cli::ConfigError("--xi-max must be at least 1");
    std::vector<smv::rvec> grid;
    const int n = std::max(1, static_cast<int>(std::ceil(std::log10(a.xi_max) * a.per_decade)));
    std::vector<double> mags{0.0};
    for (int i = 0; i <= n; ++i) mags.push_back(std::pow(a.xi_max, static_cast<double>(i) / n));
    for (double m : mags)
        for (int k = 0; k <= mu.dim; ++k) {
            smv::rvec v(static_cast<std::size_t>(mu.dim), 0.0);
            if (k < mu.dim) v[static_cast<std::size_t>(k)] = m;
            else
                for (auto& x : v) x = m / std::sqrt(static_cast<double>(mu.dim));
            grid.push_back(v);
        }
    auto V = smv::verify_delta_bound(points, weights, grid, a.exponent_scale);
    V.pass = V.min_log_margin >= -tol.at("log_margin");
    json doc = {{"schema_version", smv::io::kSchemaVersion},
                {"command", "euclid"},
                {"dim", mu.dim},
                {"terms", mu.terms.size()},
                {"exponent_scale", num(a.exponent_scale)},
                {"tolerances", tolerance_json(tol)},
                {"result", smv::io::to_json(V)}};
    emit(a.out, doc.dump(2) + "\n");
    if (!V.pass) {
        std::cerr << "bound violated: " << V.detail << "\n";
        return cli::kCertificationFail;
    }
    return cli::kOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchArgs {
    std::string spaces = "H2,H3,H4,CH2";
    double t = 1.0;
    std::string lambda = "1:200:9.95";
    std::vector<std::string> tol;
};

int cmd_bench(const BenchArgs& a) {
    const auto tol = cli::parse_tolerances(a.tol, {{"quad_abs_tol", 1e-14}, {"oscillation_guard", 6.0}});
    const auto qs = quad_spec(tol);
    const auto grid = cli::parse_grid(a.lambda, "--lambda");
    std::vector<std::string> names;
    std::stringstream ss(a.spaces);
    for (std::string s; std::getline(ss, s, ',');)
        if (!cli::trim(s).empty()) names.push_back(cli::trim(s));
    smv::io::CsvWriter w({"space", "route", "evaluations", "seconds", "microseconds_per_eval", "max_abs_diff_vs_oracle"});
    for (const auto& name : names) {
        const auto sp = smv::resolve_space(name);
        std::vector<std::pair<std::string, std::function<cplx(double)>>> routes;
        routes.emplace_back("oracle", [&](double l) { return smv::evaluate_I(sp, a.t, l, smv::Route::Oracle, 12, qs).value; });
        if (sp.odd_dimension() && sp.q == 0)
            routes.emplace_back("recurrence", [&](double l) { return smv::evaluate_I(sp, a.t, l, smv::Route::Recurrence).value; });
        if (!sp.odd_dimension())
            routes.emplace_back("series", [&](double l) { return smv::evaluate_I(sp, a.t, l, smv::Route::Series, 12).value; });
        if (a.t >= smv::kHCMinT)
            routes.emplace_back("hc", [&](double l) { return smv::phi_hc(sp, a.t, l) / smv::koornwinder_prefactor(sp, a.t); });
        std::vector<cplx> ref;
        for (double l : grid) ref.push_back(routes.front().second(l));
        for (const auto& [rname, f] : routes) {
            double diff = 0.0;
            const auto t0 = std::chrono::steady_clock::now();
            for (std::size_t i = 0; i < grid.size(); ++i) diff = std::max(diff, std::abs(f(grid[i]) - ref[i]));
            const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            w.row({sp.name, rname, std::to_string(grid.size()), smv::io::csv_number(sec),
                   smv::io::csv_number(1e6 * sec / static_cast<double>(grid.size())), smv::io::csv_number(diff)});
        }
    }
    std::cout << w.str();
    return cli::kOk;
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

int cmd_selftest(bool full, bool corrupt, const std::vector<std::string>& tol_overrides) {
    if (!tol_overrides.empty()) throw cli::ConfigError("selftest runs the acceptance criteria at fixed tolerances; --tol is not accepted");
    smv::acceptance::Options o;
    o.reduced = !full;
    o.corrupt_constant = corrupt;
    int failed = 0;
    smv::acceptance::run_all(o, [&](const smv::acceptance::Result& r) {
        std::cout << smv::acceptance::format_line(r) << std::endl;
        if (!r.pass) ++failed;
    });
    std::cout << (failed == 0 ? "selftest: all 13 criteria pass" : "selftest: " + std::to_string(failed) + " criteria fail")
              << std::endl;
    return failed == 0 ? cli::kOk : cli::kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> commands{"eval", "certify", "find-m", "euclid", "bench", "selftest"};
    CLI::App app{"Zonal spherical functions on rank-one and complex symmetric spaces, and slow-decrease certification"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.add_option("--config", "flat key=value file; explicit flags override it");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "tabulate phi_lambda(exp tH) on a lambda grid (CSV)");
    eval->add_option("--space", ea.space, "H<n>, CH<m>, HH<m> or p,q")->capture_default_str();
    eval->add_option("--t", ea.t, "radial coordinate t = alpha(H)")->capture_default_str();
    eval->add_option("--lambda", ea.lambda, "start:stop:step or a comma list")->capture_default_str();
    eval->add_option("--lambda-im", ea.lambda_im, "imaginary part added to every grid point")->capture_default_str();
    eval->add_option("--route", ea.route, "auto|oracle|recurrence|series|hc|complex")
        ->check(CLI::IsMember({"auto", "oracle", "recurrence", "series", "hc", "complex"}))
        ->capture_default_str();
    eval->add_option("--N", ea.N, "Bessel series order (1..12)")->capture_default_str();
    eval->add_option("--K", ea.K, "Harish-Chandra truncation")->capture_default_str();
    eval->add_option("--out", ea.out, "CSV path (metadata goes to <out>.meta.json); default stdout");
    eval->add_option("--tol", ea.tol, "key=value: quad_abs_tol, oscillation_guard")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    CertifyArgs ca;
    auto* cert = app.add_subcommand("certify", "certify slow decrease and growth type of lambda -> phi_lambda(exp tH)");
    cert->add_option("--space", ca.space, "rank-one space")->capture_default_str();
    cert->add_option("--t", ca.t, "t in (0, 5]")->capture_default_str();
    cert->add_option("--synthetic", ca.synthetic, "certify a synthetic function instead (gauss = exp(zeta^2))");
    cert->add_option("--out-dir", ca.out_dir, "existing directory for <prefix>.json and <prefix>.csv");
    cert->add_option("--prefix", ca.prefix, "report file stem")->capture_default_str();
    cert->add_option("--A", ca.A, "neighbourhood constant; 0 selects max(7/t, 2 pi/t)")->capture_default_str();
    cert->add_option("--Xi", ca.Xi, "largest xi of the grid (>= 100)")->capture_default_str();
    cert->add_option("--per-decade", ca.per_decade, "grid points per decade")->capture_default_str();
    cert->add_option("--samples", ca.samples, "samples per neighbourhood")->capture_default_str();
    cert->add_option("--mode", ca.mode, "chord|disk")->capture_default_str();
    cert->add_option("--route", ca.route, "auto|oracle|recurrence|series")->capture_default_str();
    cert->add_option("--target", ca.target, "B,C,D to verify instead of reporting fitted constants");
    cert->add_option("--tol", ca.tol, "key=value: quad_abs_tol, oscillation_guard, growth_slack")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    FindMArgs fa;
    auto* findm = app.add_subcommand("find-m", "search the constant M of the lower bound (JSON)");
    findm->add_option("--space", fa.space, "rank-one space")->capture_default_str();
    findm->add_option("--eta", fa.eta, "shift eta")->capture_default_str();
    findm->add_option("--H0", fa.H0, "H0 scalar in (0, 1]")->capture_default_str();
    findm->add_option("--K", fa.K, "Gamma truncation")->capture_default_str();
    findm->add_option("--check-at", fa.check_at, "also verify the lower bound at this alpha(H) (> M*)");
    findm->add_option("--out", fa.out, "JSON path; default stdout");
    findm->add_option("--tol", fa.tol, "key=value: lower_bound_margin")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    EuclidArgs ua;
    auto* euclid = app.add_subcommand("euclid", "explicit invertibility constant of a weighted delta sum (JSON)");
    euclid->add_option("--input", ua.input, "distribution JSON")->required();
    euclid->add_option("--xi-max", ua.xi_max, "largest |xi| checked")->capture_default_str();
    euclid->add_option("--per-decade", ua.per_decade, "radii per decade")->capture_default_str();
    euclid->add_option("--exponent-scale", ua.exponent_scale, "multiplies the exponent A|x_1| (sanity inversion > 1)")
        ->capture_default_str();
    euclid->add_option("--out", ua.out, "JSON path; default stdout");
    euclid->add_option("--tol", ua.tol, "key=value: log_margin")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "time the evaluation routes (CSV; timings vary between runs)");
    bench->add_option("--spaces", ba.spaces, "comma list of spaces")->capture_default_str();
    bench->add_option("--t", ba.t, "t")->capture_default_str();
    bench->add_option("--lambda", ba.lambda, "lambda grid")->capture_default_str();
    bench->add_option("--tol", ba.tol, "key=value: quad_abs_tol, oscillation_guard")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    bool full = false, corrupt = false;
    std::vector<std::string> st_tol;
    auto* self = app.add_subcommand("selftest", "run the acceptance criteria on reduced grids");
    self->add_flag("--full", full, "use the full acceptance grids");
    self->add_flag("--corrupt-constant", corrupt, "test hook: perturb the reference constants")->group("");
    self->add_option("--tol", st_tol, "not accepted (fixed tolerances)")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    std::vector<std::string> args;
    try {
        std::vector<std::string> raw(argv + 1, argv + argc);
        args = cli::expand_config(raw, commands);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kConfig;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? cli::kOk : cli::kConfig;
    }
    try {
        if (*eval) return cmd_eval(ea);
        if (*cert) return cmd_certify(ca);
        if (*findm) return cmd_find_m(fa);
        if (*euclid) return cmd_euclid(ua);
        if (*bench) return cmd_bench(ba);
        if (*self) return cmd_selftest(full, corrupt, st_tol);
    } catch (const std::exception& e) {
        const int rc = cli::exit_code_for(e);
        std::cerr << "error: " << e.what() << "\n";
        return rc;
    }
    return cli::kConfig;
}
