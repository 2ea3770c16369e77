// Batch front end for the spinga shared library: correlation curves,
// single-spin probability tables, Gram matrices, and seeded differential
// reports against the standard-QM oracle, as CSV or JSON.
//
// Exit codes: 0 all checks within tolerance, 1 tolerance violation,
// 2 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinga/rng.hpp"
#include "spinga/spinga.h"

namespace {

using json = nlohmann::ordered_json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct Options {
    int state = 0;
    std::string variant = "y";
    std::string u_angles = "0,0";  // "theta,phi" in degrees
    std::string plane = "zx";
    int samples = 181;
    std::uint64_t seed = 42;
    double tol = 1e-12;
    std::string format = "csv";
    std::string out;
    int dim = 0;  // 0 = both algebras
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + opt.out);
    f << text;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    std::string text;
    for (std::size_t i = 0; i < header.size(); ++i)
        text += (i ? "," : "") + header[i];
    text += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            text += (i ? "," : "") + fmt(row[i]);
        text += "\n";
    }
    return text;
}

json json_report(const char* command, const Options& opt) {
    json config;
    config["command"] = command;
    config["state"] = opt.state;
    config["variant"] = opt.variant;
    config["u"] = opt.u_angles;
    config["plane"] = opt.plane;
    config["samples"] = opt.samples;
    config["seed"] = opt.seed;
    config["tol"] = opt.tol;
    json j;
    j["version"] = spinga_version();
    j["config"] = config;
    return j;
}

json rows_to_json(const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json r;
        for (std::size_t i = 0; i < header.size(); ++i) r[header[i]] = row[i];
        out.push_back(r);
    }
    return out;
}

void check_call(spinga_status st, const char* what) {
    if (st != SPINGA_OK)
        throw std::runtime_error(std::string(what) + ": " + spinga_last_error());
}

spinga_variant parse_variant(const std::string& name) {
    if (name == "y") return SPINGA_VARIANT_Y;
    if (name == "yprime") return SPINGA_VARIANT_Y_PRIME;
    if (name == "ydoubleprime") return SPINGA_VARIANT_Y_DOUBLE_PRIME;
    throw CLI::ValidationError("--variant", "must be y, yprime or ydoubleprime");
}

std::array<double, 3> direction_from_angles(const std::string& angles) {
    double theta_deg = 0.0, phi_deg = 0.0;
    if (std::sscanf(angles.c_str(), "%lf,%lf", &theta_deg, &phi_deg) < 1)
        throw CLI::ValidationError("--u", "expected \"theta_deg,phi_deg\"");
    const double t = theta_deg * kDegToRad;
    const double p = phi_deg * kDegToRad;
    return {std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
}

struct Plane {
    std::array<double, 3> first;
    std::array<double, 3> second;
};

Plane parse_plane(const std::string& name) {
    if (name == "zx") return {{0, 0, 1}, {1, 0, 0}};
    if (name == "zy") return {{0, 0, 1}, {0, 1, 0}};
    if (name == "xy") return {{1, 0, 0}, {0, 1, 0}};
    throw CLI::ValidationError("--plane", "must be zx, zy or xy");
}

int emit(const Options& opt, const char* command, const std::vector<std::string>& header,
         const std::vector<std::vector<double>>& rows, double max_dev, json extra = {}) {
    const bool pass = max_dev < opt.tol;
    if (opt.format == "json") {
        json j = json_report(command, opt);
        j["rows"] = rows_to_json(header, rows);
        for (auto& [k, v] : extra.items()) j[k] = v;
        j["summary"] = {{"max_abs_diff", max_dev}, {"tol", opt.tol}, {"pass", pass}};
        write_output(opt, j.dump(2) + "\n");
    } else {
        std::string text = csv_table(header, rows);
        text += "# max_abs_diff=" + fmt(max_dev) + " tol=" + fmt(opt.tol) +
                (pass ? " pass\n" : " FAIL\n");
        write_output(opt, text);
    }
    return pass ? 0 : 1;
}

int run_curve(const Options& opt) {
    if (opt.samples < 2) throw CLI::ValidationError("--samples", "need at least 2");
    const Plane plane = parse_plane(opt.plane);
    const auto u = direction_from_angles(opt.u_angles);
    const double a = u[0] * plane.first[0] + u[1] * plane.first[1] + u[2] * plane.first[2];
    const double b = u[0] * plane.second[0] + u[1] * plane.second[1] + u[2] * plane.second[2];
    if (std::abs(a * a + b * b - 1.0) > 1e-9)
        throw CLI::ValidationError("--u", "direction must lie in the sweep plane");
    const std::array<double, 3> w = {-b * plane.first[0] + a * plane.second[0],
                                     -b * plane.first[1] + a * plane.second[1],
                                     -b * plane.first[2] + a * plane.second[2]};

    spinga_bell* bell = nullptr;
    check_call(spinga_bell_create(opt.state, parse_variant(opt.variant), &bell), "bell_create");

    std::vector<std::vector<double>> rows;
    double max_dev = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const double theta_deg = 180.0 * i / (opt.samples - 1);
        const double t = theta_deg * kDegToRad;
        const double ct = std::cos(t), st = std::sin(t);
        const double v[3] = {ct * u[0] + st * w[0], ct * u[1] + st * w[1], ct * u[2] + st * w[2]};
        double e_model = 0.0, e_oracle = 0.0;
        check_call(spinga_bell_bipartite(bell, u.data(), v, &e_model), "bipartite");
        check_call(spinga_oracle_bipartite(opt.state, u.data(), v, &e_oracle), "oracle");
        const double diff = std::abs(e_model - e_oracle);
        max_dev = std::max(max_dev, diff);
        rows.push_back({theta_deg, e_model, e_oracle, diff});
    }
    spinga_bell_destroy(bell);
    return emit(opt, "curve", {"theta_uv_deg", "e_model", "e_oracle", "abs_diff"}, rows, max_dev);
}

int run_single(const Options& opt) {
    if (opt.samples < 2) throw CLI::ValidationError("--samples", "need at least 2");
    spinga_spin* spin = nullptr;
    check_call(spinga_spin_create_up(&spin), "spin_create");
    const double axis[3] = {0.0, 0.0, 1.0};

    std::vector<std::vector<double>> rows;
    double max_dev = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const double theta_deg = 180.0 * i / (opt.samples - 1);
        const double t = theta_deg * kDegToRad;
        const double detector[3] = {std::sin(t), 0.0, std::cos(t)};
        spinga_measurement m{};
        double p_plus = 0.0, p_minus = 0.0;
        check_call(spinga_spin_measure(spin, detector, &m), "measure");
        check_call(spinga_oracle_born(axis, detector, &p_plus, &p_minus), "born");
        const double diff = std::max(std::abs(m.p_coincide - p_plus),
                                     std::abs(m.correlation - (p_plus - p_minus)));
        max_dev = std::max(max_dev, diff);
        rows.push_back({theta_deg, m.p_coincide, m.p_anti, m.correlation, p_plus, p_minus, diff});
    }
    spinga_spin_destroy(spin);
    return emit(opt, "single",
                {"theta_deg", "p_coincide", "p_anti", "correlation", "oracle_p_plus",
                 "oracle_p_minus", "abs_diff"},
                rows, max_dev);
}

int run_gram(const Options& opt) {
    double full[16], sg[16];
    check_call(spinga_bell_gram(1, full), "gram full");
    check_call(spinga_bell_gram(0, sg), "gram sg");
    std::vector<std::vector<double>> rows;
    double max_off = 0.0;
    for (int which = 0; which < 2; ++which) {
        const double* m = which == 0 ? full : sg;
        for (int r = 0; r < 4; ++r) {
            std::vector<double> row{static_cast<double>(which), static_cast<double>(r)};
            for (int c = 0; c < 4; ++c) {
                row.push_back(m[4 * r + c]);
                if (r != c) max_off = std::max(max_off, std::abs(m[4 * r + c]));
            }
            rows.push_back(row);
        }
    }
    json extra;
    if (opt.format == "json") {
        json jf = json::array(), js = json::array();
        for (int r = 0; r < 4; ++r) {
            json rf = json::array(), rs = json::array();
            for (int c = 0; c < 4; ++c) {
                rf.push_back(full[4 * r + c]);
                rs.push_back(sg[4 * r + c]);
            }
            jf.push_back(rf);
            js.push_back(rs);
        }
        extra["full_spin_gram"] = jf;
        extra["sg_gram"] = js;
    }
    return emit(opt, "gram", {"matrix", "row", "c0", "c1", "c2", "c3"}, rows, max_off, extra);
}

int run_difftest(const Options& opt) {
    if (opt.samples < 1) throw CLI::ValidationError("--samples", "need at least 1");
    std::vector<std::vector<double>> rows;
    double max_dev = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        spinga_bell* bell = nullptr;
        check_call(spinga_bell_create(mu, SPINGA_VARIANT_Y, &bell), "bell_create");
        // The double-prime form (all partials zero) is the one comparable to
        // the standard states, which have maximally mixed marginals.
        spinga_bell* bell_partial = nullptr;
        const spinga_variant pv =
            (mu == 1 || mu == 2) ? SPINGA_VARIANT_Y_DOUBLE_PRIME : SPINGA_VARIANT_Y;
        check_call(spinga_bell_create(mu, pv, &bell_partial), "bell_create");

        spinga::Rng rng(opt.seed + static_cast<std::uint64_t>(mu));
        double d_oracle = 0.0, d_closed = 0.0, d_partial = 0.0;
        for (int i = 0; i < opt.samples; ++i) {
            const auto u = rng.unit_vector();
            const auto v = rng.unit_vector();
            double model = 0.0, closed = 0.0, oracle = 0.0;
            check_call(spinga_bell_bipartite(bell, u.data(), v.data(), &model), "bipartite");
            check_call(spinga_bell_closed_form(mu, u.data(), v.data(), &closed), "closed form");
            check_call(spinga_oracle_bipartite(mu, u.data(), v.data(), &oracle), "oracle");
            d_oracle = std::max(d_oracle, std::abs(model - oracle));
            d_closed = std::max(d_closed, std::abs(model - closed));
            for (int which = 1; which <= 2; ++which) {
                const double* dir = which == 1 ? u.data() : v.data();
                double pm = 0.0, po = 0.0;
                check_call(spinga_bell_partial(bell_partial, dir, which, &pm), "partial");
                check_call(spinga_oracle_partial(mu, dir, which, &po), "oracle partial");
                d_partial = std::max(d_partial, std::abs(pm - po));
            }
        }
        spinga_bell_destroy(bell);
        spinga_bell_destroy(bell_partial);
        max_dev = std::max({max_dev, d_oracle, d_closed, d_partial});
        rows.push_back({static_cast<double>(mu), d_oracle, d_closed, d_partial});
    }
    return emit(opt, "difftest",
                {"state", "max_dev_oracle", "max_dev_closed_form", "max_dev_partial"}, rows,
                max_dev);
}

int run_algebra_check(const Options& opt) {
    std::vector<int> dims;
    if (opt.dim == 0)
        dims = {3, 5};
    else if (opt.dim == 3 || opt.dim == 5)
        dims = {opt.dim};
    else
        throw CLI::ValidationError("--dim", "must be 3 or 5");

    std::vector<std::vector<double>> rows;
    double max_dev = 0.0;
    for (int dim : dims) {
        spinga_algebra_report r{};
        check_call(spinga_algebra_selftest(dim, opt.seed, opt.samples, &r), "selftest");
        max_dev = std::max({max_dev, r.associativity, r.metric, r.centrality,
                            r.reverse_antiautomorphism});
        rows.push_back({static_cast<double>(dim), r.associativity, r.metric, r.centrality,
                        r.reverse_antiautomorphism});
    }
    return emit(opt, "algebra-check",
                {"dim", "associativity", "metric", "centrality", "reverse_antiautomorphism"},
                rows, max_dev);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"spinga: vector-with-phase spin-1/2 engine (CSV/JSON batch reports)"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", opt.tol, "pass/fail tolerance");
        cmd->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "output path (default: stdout)");
    };

    auto* curve = app.add_subcommand(
        "curve", "Bipartite correlation vs detector angle, model and oracle columns");
    curve->add_option("--state", opt.state, "Bell state index 0..3")->check(CLI::Range(0, 3));
    curve->add_option("--variant", opt.variant, "y, yprime or ydoubleprime");
    curve->add_option("--u", opt.u_angles, "first detector as theta_deg,phi_deg");
    curve->add_option("--plane", opt.plane, "sweep plane: zx, zy or xy");
    curve->add_option("--samples", opt.samples, "number of angle samples");
    add_common(curve);

    auto* single = app.add_subcommand(
        "single", "Stern-Gerlach probabilities and correlation for a spin-up state");
    single->add_option("--samples", opt.samples, "number of angle samples");
    add_common(single);

    auto* gram = app.add_subcommand("gram", "Full-spin and measured 4x4 Gram matrices");
    add_common(gram);

    auto* difftest = app.add_subcommand(
        "difftest", "Seeded random sweep of model vs oracle bipartite/partial values");
    difftest->add_option("--seed", opt.seed, "RNG seed");
    difftest->add_option("--samples", opt.samples, "pairs per state")->default_val(1000);
    add_common(difftest);

    auto* algebra = app.add_subcommand("algebra-check",
                                       "Randomized product-identity suite for both algebras");
    algebra->add_option("--dim", opt.dim, "3, 5, or omit for both");
    algebra->add_option("--seed", opt.seed, "RNG seed");
    algebra->add_option("--samples", opt.samples, "random samples")->default_val(10000);
    add_common(algebra);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (curve->parsed()) return run_curve(opt);
        if (single->parsed()) return run_single(opt);
        if (gram->parsed()) return run_gram(opt);
        if (difftest->parsed()) return run_difftest(opt);
        if (algebra->parsed()) return run_algebra_check(opt);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
