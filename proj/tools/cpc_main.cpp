// Command-line front end: capacity per unit cost of noisy bosonic Gaussian
// channels for on-off keying with photon-counting receivers.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpc/capacity.hpp"
#include "cpc/channel_spec.hpp"
#include "cpc/cli.hpp"

namespace {

using nlohmann::json;

struct ChannelArgs {
    std::string spec_file;
    std::string spec_inline;
    std::vector<double> pure_loss;     // tau
    std::vector<double> thermal_loss;  // tau nth
    std::vector<double> amplifier;     // gain nth
    std::vector<double> fiducial;      // eta y s
    std::vector<double> mat_x;         // 4 entries row-major
    std::vector<double> mat_y;

    void attach(CLI::App* cmd) {
        cmd->add_option("--channel", spec_file, "channel spec file (JSON)");
        cmd->add_option("--json", spec_inline, "inline channel spec (JSON)");
        cmd->add_option("--pure-loss", pure_loss, "pure loss channel: TAU")->expected(1);
        cmd->add_option("--thermal-loss", thermal_loss, "thermal loss channel: TAU NTH")
            ->expected(2);
        cmd->add_option("--amplifier", amplifier, "amplifier channel: GAIN NTH")->expected(2);
        cmd->add_option("--fiducial", fiducial, "fiducial channel: ETA Y S")->expected(3);
        cmd->add_option("--X", mat_x, "first-moment map, 4 reals row-major")->expected(4);
        cmd->add_option("--Y", mat_y, "added-noise matrix, 4 reals row-major")->expected(4);
    }

    // Flags take precedence over a spec file.
    json to_spec() const {
        int given = !pure_loss.empty() + !thermal_loss.empty() + !amplifier.empty() +
                    !fiducial.empty() + (!mat_x.empty() || !mat_y.empty());
        given += !spec_inline.empty();
        if (given > 1) {
            throw cpc::Error(cpc::Errc::parse_error, "more than one channel specification given");
        }
        if (!pure_loss.empty()) return {{"pure_loss", {{"tau", pure_loss[0]}}}};
        if (!thermal_loss.empty()) {
            return {{"thermal_loss", {{"tau", thermal_loss[0]}, {"nth", thermal_loss[1]}}}};
        }
        if (!amplifier.empty()) {
            return {{"amplifier", {{"gain", amplifier[0]}, {"nth", amplifier[1]}}}};
        }
        if (!fiducial.empty()) {
            return {{"fiducial", {{"eta", fiducial[0]}, {"y", fiducial[1]}, {"s", fiducial[2]}}}};
        }
        if (!mat_x.empty() || !mat_y.empty()) {
            if (mat_x.empty() || mat_y.empty()) {
                throw cpc::Error(cpc::Errc::parse_error, "matrix channels need both --X and --Y");
            }
            return {{"matrices", {{"X", mat_x}, {"Y", mat_y}}}};
        }
        if (!spec_inline.empty()) {
            try {
                return json::parse(spec_inline);
            } catch (const json::parse_error& e) {
                throw cpc::Error(cpc::Errc::parse_error, std::string("--json: ") + e.what());
            }
        }
        if (!spec_file.empty()) return cpc::cli::load_json_file(spec_file);
        throw cpc::Error(cpc::Errc::parse_error, "no channel specified (see --help)");
    }

    cpc::cli::ResolvedChannel resolve() const { return cpc::cli::resolve_channel(to_spec()); }
};

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        throw cpc::Error(cpc::Errc::invalid_argument, "cannot open output file " + output_path);
    }
    out << text;
}

cpc::cli::Format parse_format(const std::string& name) {
    if (name == "text") return cpc::cli::Format::text;
    if (name == "csv") return cpc::cli::Format::csv;
    throw cpc::Error(cpc::Errc::parse_error, "--format must be text or csv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacity per unit cost of noisy bosonic Gaussian channels"};
    app.require_subcommand(1);
    app.fallthrough();  // --output may follow the subcommand

    std::string output_path;
    app.add_option("--output", output_path, "write results to this file instead of stdout")
        ->configurable(false);

    ChannelArgs validate_ch, decompose_ch, bound_ch, dist_ch, point_ch, sweep_ch, mi_ch;
    std::string point_format = "text", mi_format = "text", validate_format = "text",
                decompose_format = "text", bound_format = "text";

    auto* cmd_validate = app.add_subcommand("validate", "check physicality, report canonical form");
    validate_ch.attach(cmd_validate);
    cmd_validate->add_option("--format", validate_format, "text or csv");

    auto* cmd_decompose = app.add_subcommand("decompose", "fiducial decomposition factors");
    decompose_ch.attach(cmd_decompose);
    cmd_decompose->add_option("--format", decompose_format, "text or csv");

    auto* cmd_bound = app.add_subcommand("bound", "ultimate quantum CPC bound");
    bound_ch.attach(cmd_bound);
    cmd_bound->add_option("--format", bound_format, "text or csv");

    auto* cmd_dist = app.add_subcommand("dist", "photocount distribution as CSV");
    dist_ch.attach(cmd_dist);
    double dist_ns = 0.0, dist_eps_tail = cpc::photostats::kDefaultTailEps;
    cmd_dist->add_option("--ns", dist_ns, "signal cost n_s (0 for the vacuum output)");
    cmd_dist->add_option("--eps-tail", dist_eps_tail, "truncation tolerance");

    auto* cmd_point = app.add_subcommand("point", "CPC at a single operating point");
    point_ch.attach(cmd_point);
    double point_ns = 0.0, point_eps = 0.1, point_eps_tail = cpc::photostats::kDefaultTailEps;
    std::string point_scheme;
    std::int64_t point_kth = -1;
    cmd_point->add_option("--ns", point_ns, "signal cost n_s")->required();
    cmd_point->add_option("--scheme", point_scheme, "pnr or threshold")->required();
    cmd_point->add_option("--kth", point_kth, "threshold count (default floor((1-eps) gamma2))");
    cmd_point->add_option("--eps", point_eps, "threshold fraction eps");
    cmd_point->add_option("--eps-tail", point_eps_tail, "truncation tolerance");
    cmd_point->add_option("--format", point_format, "text or csv");

    auto* cmd_sweep = app.add_subcommand("sweep", "CPC vs output signal cost, CSV");
    sweep_ch.attach(cmd_sweep);
    std::string sweep_config_file, sweep_schemes;
    cpc::cli::SweepConfig sweep_defaults;
    double sweep_min = -1.0, sweep_max = -1.0, sweep_eps = -1.0, sweep_eps_tail = -1.0;
    int sweep_points = -1;
    cmd_sweep->add_option("--config", sweep_config_file, "sweep config file (JSON)");
    cmd_sweep->add_option("--min", sweep_min, "smallest |eta| n_s");
    cmd_sweep->add_option("--max", sweep_max, "largest |eta| n_s");
    cmd_sweep->add_option("--points", sweep_points, "grid points (geometric)");
    cmd_sweep->add_option("--schemes", sweep_schemes, "comma-separated subset of pnr,threshold");
    cmd_sweep->add_option("--eps", sweep_eps, "threshold fraction eps");
    cmd_sweep->add_option("--eps-tail", sweep_eps_tail, "truncation tolerance");

    auto* cmd_mi = app.add_subcommand("mi", "on-off keying mutual information");
    mi_ch.attach(cmd_mi);
    double mi_ns = 0.0, mi_lambda = 0.0, mi_eps_tail = cpc::photostats::kDefaultTailEps;
    cmd_mi->add_option("--ns", mi_ns, "signal cost n_s")->required();
    cmd_mi->add_option("--lambda", mi_lambda, "signal-state probability")->required();
    cmd_mi->add_option("--eps-tail", mi_eps_tail, "truncation tolerance");
    cmd_mi->add_option("--format", mi_format, "text or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_validate) {
            emit(cpc::cli::validate_report(validate_ch.resolve(), parse_format(validate_format)),
                 output_path);
        } else if (*cmd_decompose) {
            emit(cpc::cli::decompose_report(decompose_ch.resolve().fiducial,
                                            parse_format(decompose_format)),
                 output_path);
        } else if (*cmd_bound) {
            emit(cpc::cli::bound_report(bound_ch.resolve(), parse_format(bound_format)),
                 output_path);
        } else if (*cmd_dist) {
            emit(cpc::cli::dist_csv(dist_ch.resolve().fiducial, dist_ns, dist_eps_tail),
                 output_path);
        } else if (*cmd_point) {
            const cpc::cli::ResolvedChannel ch = point_ch.resolve();
            cpc::capacity::CPCResult res{};
            if (point_scheme == "pnr") {
                res = cpc::capacity::pnr_cpc(point_ns, ch.fiducial, point_eps_tail);
            } else if (point_scheme == "threshold") {
                const double gamma2 = cpc::channel::gamma_displacement(ch.fiducial, point_ns);
                const std::uint64_t k_th =
                    point_kth >= 0 ? static_cast<std::uint64_t>(point_kth)
                                   : cpc::capacity::default_threshold(gamma2, point_eps);
                res = cpc::capacity::threshold_cpc(point_ns, k_th, ch.fiducial, point_eps_tail);
            } else {
                throw cpc::Error(cpc::Errc::parse_error, "--scheme must be pnr or threshold");
            }
            emit(cpc::cli::point_report(res, ch, parse_format(point_format)), output_path);
        } else if (*cmd_sweep) {
            cpc::cli::SweepConfig cfg = sweep_defaults;
            json channel_spec;
            if (!sweep_config_file.empty()) {
                const json file_cfg = cpc::cli::load_json_file(sweep_config_file);
                if (file_cfg.contains("channel")) channel_spec = file_cfg.at("channel");
                if (file_cfg.contains("grid")) {
                    const json& grid = file_cfg.at("grid");
                    if (grid.contains("min")) cfg.min_cost = grid.at("min").get<double>();
                    if (grid.contains("max")) cfg.max_cost = grid.at("max").get<double>();
                    if (grid.contains("points")) cfg.points = grid.at("points").get<int>();
                }
                if (file_cfg.contains("schemes")) {
                    cfg.pnr = cfg.threshold = false;
                    for (const auto& s : file_cfg.at("schemes")) {
                        if (s == "pnr") cfg.pnr = true;
                        if (s == "threshold") cfg.threshold = true;
                    }
                }
                if (file_cfg.contains("eps")) cfg.eps = file_cfg.at("eps").get<double>();
                if (file_cfg.contains("eps_tail")) {
                    cfg.eps_tail = file_cfg.at("eps_tail").get<double>();
                }
                if (file_cfg.contains("output") && output_path.empty()) {
                    output_path = file_cfg.at("output").get<std::string>();
                }
            }
            if (sweep_min > 0) cfg.min_cost = sweep_min;
            if (sweep_max > 0) cfg.max_cost = sweep_max;
            if (sweep_points > 0) cfg.points = sweep_points;
            if (sweep_eps > 0) cfg.eps = sweep_eps;
            if (sweep_eps_tail > 0) cfg.eps_tail = sweep_eps_tail;
            if (!sweep_schemes.empty()) {
                cfg.pnr = sweep_schemes.find("pnr") != std::string::npos;
                cfg.threshold = sweep_schemes.find("threshold") != std::string::npos;
            }
            cpc::cli::ResolvedChannel ch =
                channel_spec.is_null() ? sweep_ch.resolve()
                                       : cpc::cli::resolve_channel(channel_spec);
            emit(cpc::cli::sweep_csv(ch.fiducial, cfg), output_path);
        } else if (*cmd_mi) {
            const cpc::cli::ResolvedChannel ch = mi_ch.resolve();
            const cpc::capacity::OOKParams params{mi_lambda, mi_ns};
            const cpc::capacity::MutualInfo mi =
                cpc::capacity::ook_mutual_information(params, ch.fiducial, mi_eps_tail);
            emit(cpc::cli::mi_report(params, mi,
                                     cpc::channel::gamma_displacement(ch.fiducial, mi_ns),
                                     parse_format(mi_format)),
                 output_path);
        }
    } catch (const cpc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cpc::cli::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
