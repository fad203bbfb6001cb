#include "relmaser/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "relmaser/bounds.hpp"
#include "relmaser/explorer.hpp"
#include "relmaser/io.hpp"
#include "relmaser/numerics.hpp"
#include "relmaser/thermo.hpp"

namespace relmaser::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double parse_double(const std::string& text) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw usage_error("not a number: '" + text + "'");
    }
    if (pos != text.size()) throw usage_error("not a number: '" + text + "'");
    return v;
}

}  // namespace

std::vector<double> parse_value_list(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        const auto c1 = text.find(':');
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw usage_error("sweep must be lo:hi:step, got '" + text + "'");
        const double lo = parse_double(text.substr(0, c1));
        const double hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
        const double step = parse_double(text.substr(c2 + 1));
        if (!(step > 0.0) || hi < lo)
            throw usage_error("sweep must have hi >= lo and step > 0: '" + text + "'");
        const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
        std::vector<double> out(n + 1);
        for (std::size_t k = 0; k <= n; ++k) out[k] = lo + static_cast<double>(k) * step;
        return out;
    }
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = (comma == std::string::npos) ? text.size() : comma;
        out.push_back(parse_double(text.substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw usage_error("empty value list");
    return out;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto c = text.find(':');
    if (c == std::string::npos || text.find(':', c + 1) != std::string::npos)
        throw usage_error("range must be lo:hi, got '" + text + "'");
    return {parse_double(text.substr(0, c)), parse_double(text.substr(c + 1))};
}

namespace {

// ---------------------------------------------------------------------------
// parameter resolution

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw usage_error("bad config JSON in " + path + ": " + e.what());
    }
    if (doc.contains("params")) return doc["params"];  // accept a run manifest
    return doc;
}

// Overlays config-file values and then flag strings onto the defaults.
// Each value is coerced to the type of its default.
json resolve_params(json defaults, const json& config,
                    const std::vector<std::pair<std::string, std::string>>& flags) {
    for (const auto& [key, value] : config.items()) {
        if (!defaults.contains(key)) {
            std::cerr << "warning: ignoring unknown config key '" << key << "'\n";
            continue;
        }
        defaults[key] = value;
    }
    for (const auto& [key, text] : flags) {
        if (!defaults.contains(key))
            throw usage_error("flag --" + key + " does not apply to this command");
        json& slot = defaults.at(key);
        if (slot.is_array()) {
            slot = parse_value_list(text);
        } else if (slot.is_number_unsigned() || slot.is_number_integer()) {
            slot = static_cast<std::uint64_t>(std::llround(parse_double(text)));
        } else if (slot.is_number_float()) {
            slot = parse_double(text);
        } else {
            slot = text;
        }
    }
    return defaults;
}

// Flag spec shared by the resolver-driven commands: every option arrives as
// a raw string and is recorded only if the user passed it.
class FlagSet {
public:
    FlagSet(CLI::App* cmd, std::initializer_list<const char*> names) {
        values_.reserve(names.size());  // CLI11 keeps references into the slots
        for (const char* name : names) {
            values_.emplace_back(name, std::string{});
            auto& slot = values_.back();
            cmd->add_option("--" + slot.first, slot.second);
        }
        cmd_ = cmd;
    }

    std::vector<std::pair<std::string, std::string>> provided() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [name, value] : values_)
            if (cmd_->count("--" + name) > 0) out.emplace_back(name, value);
        return out;
    }

private:
    CLI::App* cmd_;
    std::vector<std::pair<std::string, std::string>> values_;
};

EngineConfig config_from_params(const json& p) {
    EngineConfig cfg;
    cfg.omega_h = p.at("omega-h").get<double>();
    cfg.omega_c = p.at("omega-c").get<double>();
    cfg.xi = p.at("xi").get<double>();
    cfg.hot = {p.at("beta-h").get<double>(), p.at("u-h").get<double>(),
               p.at("gamma-h").get<double>()};
    cfg.cold = {p.at("beta-c").get<double>(), p.at("u-c").get<double>(),
                p.at("gamma-c").get<double>()};
    cfg.validate();
    return cfg;
}

// ---------------------------------------------------------------------------
// occupation

int run_occupation(const json& params, const std::optional<std::string>& out_dir) {
    const auto omegas = params.at("omega").get<std::vector<double>>();
    const auto betas = params.at("beta").get<std::vector<double>>();
    const auto us = params.at("u").get<std::vector<double>>();

    CsvWriter csv({"omega", "beta", "u", "N"});
    for (double omega : omegas)
        for (double beta : betas)
            for (double u : us) {
                csv.add_cell(omega);
                csv.add_cell(beta);
                csv.add_cell(u);
                csv.add_cell(relativistic_occupation(omega, BathParams{beta, u, 1.0}));
                csv.end_row();
            }

    if (out_dir) {
        fs::create_directories(*out_dir);
        const fs::path file = fs::path(*out_dir) / "occupation.csv";
        csv.write(file);
        RunManifest manifest("occupation", params);
        manifest.record_output(file, csv.rows());
        manifest.write(*out_dir);
        std::cout << file.string() << ": " << csv.rows() << " rows\n";
    } else {
        std::cout << csv.buffer();
    }
    return 0;
}

// ---------------------------------------------------------------------------
// performance

json performance_record(const EngineConfig& cfg, const std::string& oracle) {
    SteadyState state;
    Performance perf;
    if (oracle == "liouvillian") {
        state = liouvillian_steady_state(cfg);
        perf = performance_from_state(cfg, state);
    } else if (oracle == "closed") {
        state = steady_state_linear(cfg);
        perf = performance(cfg);
    } else {
        throw usage_error("unknown oracle '" + oracle + "' (closed|liouvillian)");
    }
    json rec;
    rec["power"] = perf.power;
    rec["q_hot"] = perf.q_hot;
    rec["q_cold"] = perf.q_cold;
    rec["efficiency"] = perf.efficiency ? json(*perf.efficiency) : json(nullptr);
    rec["mode"] = to_string(perf.mode);
    rec["steady_state"] = {{"p_g", state.p_g},
                           {"p_e", state.p_e},
                           {"p_r", state.p_r},
                           {"coherence_re", state.coherence.real()},
                           {"coherence_im", state.coherence.imag()}};
    rec["oracle"] = oracle;
    return rec;
}

int run_performance(const json& params, const std::optional<std::string>& out_dir) {
    const EngineConfig cfg = config_from_params(params);
    const json rec = performance_record(cfg, params.at("oracle").get<std::string>());
    const std::string format = params.at("format").get<std::string>();

    std::string payload;
    std::string filename;
    if (format == "json") {
        payload = rec.dump(2) + "\n";
        filename = "performance.json";
    } else if (format == "csv") {
        CsvWriter csv({"power", "q_hot", "q_cold", "efficiency", "mode",
                       "p_g", "p_e", "p_r", "coherence_re", "coherence_im"});
        csv.add_cell(rec["power"].get<double>());
        csv.add_cell(rec["q_hot"].get<double>());
        csv.add_cell(rec["q_cold"].get<double>());
        csv.add_cell(rec["efficiency"].is_null()
                         ? std::string("nan")
                         : format_double(rec["efficiency"].get<double>()));
        csv.add_cell(rec["mode"].get<std::string>());
        csv.add_cell(rec["steady_state"]["p_g"].get<double>());
        csv.add_cell(rec["steady_state"]["p_e"].get<double>());
        csv.add_cell(rec["steady_state"]["p_r"].get<double>());
        csv.add_cell(rec["steady_state"]["coherence_re"].get<double>());
        csv.add_cell(rec["steady_state"]["coherence_im"].get<double>());
        csv.end_row();
        payload = csv.buffer();
        filename = "performance.csv";
    } else {
        throw usage_error("unknown format '" + format + "' (csv|json)");
    }

    std::cout << payload;
    if (out_dir) {
        fs::create_directories(*out_dir);
        const fs::path file = fs::path(*out_dir) / filename;
        std::ofstream out(file, std::ios::binary);
        out << payload;
        out.close();
        RunManifest manifest("performance", params);
        manifest.record_output(file, 1);
        manifest.write(*out_dir);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// figures

json figure_defaults(const std::string& name) {
    if (name == "fig2")
        return {{"tau", json::array({0.5, 0.25, 0.1})},
                {"u", json::array({0.5, 1.0, 1.5})},
                {"model", "asymptotic"},
                {"points", 400},
                {"omega-h", 1.0},
                {"gamma", 1.0},
                {"beta-h", 1e-4},
                {"xi", 1e3}};
    if (name == "fig3")
        return {{"u", json::array({0.5, 1.0, 1.5})},
                {"beta-h", 0.4},
                {"beta-c", 0.8},
                {"u-h", 0.0},
                {"gamma-h", 1.0},
                {"gamma-c", 1.0},
                {"xi", 1.0},
                {"omega-c-range", json::array({0.01, 5.0})},
                {"omega-h-range", json::array({0.01, 10.0})},
                {"samples", 100000},
                {"seed", 42},
                {"threads", 1}};
    if (name == "fig4")
        return {{"u", json::array({0.5, 1.0, 1.5})},
                {"eta-c-range", json::array({0.0, 0.95})},
                {"points", 400}};
    if (name == "fig5a" || name == "fig5b")
        return {{"beta-h", 0.01},
                {"beta-c", name == "fig5a" ? 0.08 : 0.01},
                {"omega-h", 10.0},
                {"omega-c", 5.0},
                {"gamma-h", 1.0},
                {"gamma-c", 1.0},
                {"xi", 1.0},
                {"u-h-range", json::array({0.0, 5.0})},
                {"u-c-range", json::array({0.0, 5.0})},
                {"nx", 201},
                {"ny", 201},
                {"threads", 1}};
    if (name == "fig5c" || name == "fig5d")
        return {{"beta-h", 0.04},
                {"beta-c", 0.08},
                {"u-h", name == "fig5c" ? 2.0 : 0.0},
                {"u-c", name == "fig5c" ? 0.0 : 2.0},
                {"gamma-h", 1.0},
                {"gamma-c", 1.0},
                {"xi", 1.0},
                {"omega-c-range", json::array({0.1, 10.0})},
                {"omega-h-range", json::array({0.1, 10.0})},
                {"nx", 201},
                {"ny", 201},
                {"threads", 1}};
    throw usage_error("unknown figure '" + name +
                      "' (fig2|fig3|fig4|fig5a|fig5b|fig5c|fig5d)");
}

void write_grid_csv(const ScanGrid& grid, const char* xcol, const char* ycol,
                    const fs::path& file, RunManifest& manifest) {
    CsvWriter csv({xcol, ycol, "power", "mode"});
    for (std::size_t iy = 0; iy < grid.ys.size(); ++iy)
        for (std::size_t ix = 0; ix < grid.xs.size(); ++ix) {
            csv.add_cell(grid.xs[ix]);
            csv.add_cell(grid.ys[iy]);
            csv.add_cell(grid.power[grid.index(iy, ix)]);
            csv.add_cell(std::string(to_string(grid.mode[grid.index(iy, ix)])));
            csv.end_row();
        }
    csv.write(file);
    manifest.record_output(file, csv.rows());
    std::cout << file.string() << ": " << csv.rows() << " rows\n";
}

int run_figure(const std::string& name, const json& params, const std::string& out_dir) {
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    json manifest_params = params;
    manifest_params["name"] = name;
    RunManifest manifest("figure", manifest_params);

    if (name == "fig2") {
        CurveConfig curve_cfg;
        curve_cfg.model = params.at("model").get<std::string>() == "full"
                              ? CurveModel::Full
                              : CurveModel::Asymptotic;
        curve_cfg.n_points = params.at("points").get<std::size_t>();
        curve_cfg.omega_h = params.at("omega-h").get<double>();
        curve_cfg.gamma = params.at("gamma").get<double>();
        curve_cfg.beta_h = params.at("beta-h").get<double>();
        curve_cfg.xi = params.at("xi").get<double>();
        CsvWriter csv({"tau", "u", "omega_c", "efficiency", "power"});
        for (double tau : params.at("tau").get<std::vector<double>>())
            for (double u : params.at("u").get<std::vector<double>>()) {
                curve_cfg.tau = tau;
                curve_cfg.u = u;
                for (const CurvePoint& pt : eta_power_curve(curve_cfg)) {
                    csv.add_cell(tau);
                    csv.add_cell(u);
                    csv.add_cell(pt.omega_c);
                    csv.add_cell(pt.efficiency);
                    csv.add_cell(pt.power);
                    csv.end_row();
                }
            }
        const fs::path file = dir / "fig2.csv";
        csv.write(file);
        manifest.record_output(file, csv.rows());
        std::cout << file.string() << ": " << csv.rows() << " rows\n";
    } else if (name == "fig3") {
        SampleSpec spec;
        spec.n_samples = params.at("samples").get<std::size_t>();
        spec.seed = params.at("seed").get<std::uint64_t>();
        spec.beta_h = params.at("beta-h").get<double>();
        spec.beta_c = params.at("beta-c").get<double>();
        spec.u_h = params.at("u-h").get<double>();
        spec.gamma_h = params.at("gamma-h").get<double>();
        spec.gamma_c = params.at("gamma-c").get<double>();
        spec.xi = params.at("xi").get<double>();
        const auto rc = params.at("omega-c-range").get<std::vector<double>>();
        const auto rh = params.at("omega-h-range").get<std::vector<double>>();
        spec.omega_c_lo = rc.at(0); spec.omega_c_hi = rc.at(1);
        spec.omega_h_lo = rh.at(0); spec.omega_h_hi = rh.at(1);
        const auto n_threads =
            static_cast<unsigned>(params.at("threads").get<std::uint64_t>());
        const double tau = spec.beta_h / spec.beta_c;

        json panels = json::array();
        for (double u : params.at("u").get<std::vector<double>>()) {
            spec.u_c = u;
            const auto cloud = sample_cloud(spec, n_threads);
            CsvWriter csv({"index", "omega_c", "omega_h", "power", "efficiency", "mode"});
            std::size_t engine_points = 0, violations = 0;
            const double bound = generalized_carnot_bound({tau, u});
            for (std::size_t i = 0; i < cloud.size(); ++i) {
                const auto& pt = cloud[i];
                csv.add_cell(static_cast<std::uint64_t>(i));
                csv.add_cell(pt.omega_c);
                csv.add_cell(pt.omega_h);
                csv.add_cell(pt.power);
                csv.add_cell(pt.efficiency);
                csv.add_cell(std::string(to_string(pt.mode)));
                csv.end_row();
                if (pt.mode == OpMode::Engine) {
                    ++engine_points;
                    if (pt.efficiency > bound + 1e-12) ++violations;
                }
            }
            const std::string tag = "fig3_u" + format_double(u);
            const fs::path file = dir / (tag + ".csv");
            csv.write(file);
            manifest.record_output(file, csv.rows());
            std::cout << file.string() << ": " << csv.rows() << " rows\n";

            const Frontier frontier = upper_frontier(cloud);
            CsvWriter fcsv({"power", "efficiency"});
            for (const auto& [p, e] : frontier.chain) {
                fcsv.add_cell(p);
                fcsv.add_cell(e);
                fcsv.end_row();
            }
            const fs::path ffile = dir / (tag + "_frontier.csv");
            fcsv.write(ffile);
            manifest.record_output(ffile, fcsv.rows());

            panels.push_back({{"u", u},
                              {"eta_up", bound},
                              {"eta_intercept", frontier.eta_intercept},
                              {"eta_intercept_extrapolated",
                               frontier.eta_intercept_extrapolated},
                              {"engine_points", engine_points},
                              {"bound_violations", violations}});
        }
        manifest.set_derived("panels", panels);
    } else if (name == "fig4") {
        const auto range = params.at("eta-c-range").get<std::vector<double>>();
        const auto n = params.at("points").get<std::size_t>();
        CsvWriter csv({"u", "eta_c", "eta_mp", "eta_ca", "eta_up"});
        for (double u : params.at("u").get<std::vector<double>>())
            for (std::size_t k = 0; k < n; ++k) {
                const double eta_c = range.at(0) + (range.at(1) - range.at(0))
                                   * static_cast<double>(k) / static_cast<double>(n - 1);
                const BoundInputs b{1.0 - eta_c, u};
                csv.add_cell(u);
                csv.add_cell(eta_c);
                csv.add_cell(emp_analytic(b));
                csv.add_cell(curzon_ahlborn(eta_c));
                csv.add_cell(generalized_carnot_bound(b));
                csv.end_row();
            }
        const fs::path file = dir / "fig4.csv";
        csv.write(file);
        manifest.record_output(file, csv.rows());
        std::cout << file.string() << ": " << csv.rows() << " rows\n";
    } else if (name == "fig5a" || name == "fig5b") {
        EngineConfig base = config_from_params(json{
            {"omega-h", params.at("omega-h")}, {"omega-c", params.at("omega-c")},
            {"xi", params.at("xi")}, {"beta-h", params.at("beta-h")},
            {"beta-c", params.at("beta-c")}, {"gamma-h", params.at("gamma-h")},
            {"gamma-c", params.at("gamma-c")}, {"u-h", 0.0}, {"u-c", 0.0}});
        const auto rh = params.at("u-h-range").get<std::vector<double>>();
        const auto rc = params.at("u-c-range").get<std::vector<double>>();
        const ScanGrid grid = power_grid(
            rh.at(0), rh.at(1), rc.at(0), rc.at(1),
            params.at("nx").get<std::size_t>(), params.at("ny").get<std::size_t>(),
            base, static_cast<unsigned>(params.at("threads").get<std::uint64_t>()));
        write_grid_csv(grid, "u_h", "u_c", dir / (name + ".csv"), manifest);
    } else {  // fig5c / fig5d
        EngineConfig base = config_from_params(json{
            {"omega-h", 1.0}, {"omega-c", 1.0},
            {"xi", params.at("xi")}, {"beta-h", params.at("beta-h")},
            {"beta-c", params.at("beta-c")}, {"gamma-h", params.at("gamma-h")},
            {"gamma-c", params.at("gamma-c")}, {"u-h", params.at("u-h")},
            {"u-c", params.at("u-c")}});
        const auto rc = params.at("omega-c-range").get<std::vector<double>>();
        const auto rh = params.at("omega-h-range").get<std::vector<double>>();
        const ScanGrid grid = mode_map(
            rc.at(0), rc.at(1), rh.at(0), rh.at(1),
            params.at("nx").get<std::size_t>(), params.at("ny").get<std::size_t>(),
            base, static_cast<unsigned>(params.at("threads").get<std::uint64_t>()));
        write_grid_csv(grid, "omega_c", "omega_h", dir / (name + ".csv"), manifest);
    }

    manifest.write(dir);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Steady-state thermodynamics of a three-level maser coupled to "
                 "relativistically moving thermal reservoirs"};
    app.require_subcommand(1);

    auto* occ = app.add_subcommand("occupation", "occupation-number table");
    FlagSet occ_flags(occ, {"omega", "beta", "u"});
    std::string occ_out, occ_config;
    occ->add_option("--out", occ_out);
    occ->add_option("--config", occ_config);

    auto* perf = app.add_subcommand("performance", "steady-state observables");
    FlagSet perf_flags(perf, {"omega-h", "omega-c", "xi", "gamma-h", "gamma-c",
                              "beta-h", "beta-c", "u-h", "u-c", "oracle", "format"});
    std::string perf_out, perf_config;
    perf->add_option("--out", perf_out);
    perf->add_option("--config", perf_config);

    auto* fig = app.add_subcommand("figure", "canonical CSV datasets");
    std::string fig_name;
    fig->add_option("name", fig_name, "fig2|fig3|fig4|fig5a|fig5b|fig5c|fig5d")
        ->required();
    FlagSet fig_flags(fig, {"tau", "u", "model", "points", "omega-h", "omega-c",
                            "gamma", "gamma-h", "gamma-c", "beta-h", "beta-c",
                            "u-h", "u-c", "xi", "omega-c-range", "omega-h-range",
                            "u-h-range", "u-c-range", "eta-c-range", "samples",
                            "seed", "threads", "nx", "ny"});
    std::string fig_out = "out", fig_config;
    fig->add_option("--out", fig_out);
    fig->add_option("--config", fig_config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (occ->parsed()) {
            const json cfg = occ_config.empty() ? json::object() : load_config(occ_config);
            const json defaults = {{"omega", json::array({1.0})},
                                   {"beta", json::array({1.0})},
                                   {"u", json::array({0.0})}};
            const json params = resolve_params(defaults, cfg, occ_flags.provided());
            return run_occupation(params, occ->count("--out")
                                              ? std::optional<std::string>(occ_out)
                                              : std::nullopt);
        }
        if (perf->parsed()) {
            const json cfg = perf_config.empty() ? json::object() : load_config(perf_config);
            const json defaults = {{"omega-h", 10.0}, {"omega-c", 5.0}, {"xi", 1.0},
                                   {"gamma-h", 1.0}, {"gamma-c", 1.0},
                                   {"beta-h", 0.01}, {"beta-c", 0.08},
                                   {"u-h", 0.0},     {"u-c", 0.0},
                                   {"oracle", "closed"}, {"format", "json"}};
            const json params = resolve_params(defaults, cfg, perf_flags.provided());
            return run_performance(params, perf->count("--out")
                                               ? std::optional<std::string>(perf_out)
                                               : std::nullopt);
        }
        const json cfg = fig_config.empty() ? json::object() : load_config(fig_config);
        json defaults = figure_defaults(fig_name);
        const json params = resolve_params(defaults, cfg, fig_flags.provided());
        return run_figure(fig_name, params, fig_out);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace relmaser::cli
