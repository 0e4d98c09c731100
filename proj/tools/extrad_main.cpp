// Command-line front end: `verify` and `sweep` run the diagnostic pipeline on
// a configured surface family; `radius` solves the smallest enclosing
// geodesic ball of a point file.  Exit codes: 0 success, 1 invariant
// violation, 2 configuration error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "extrad/lab.hpp"

namespace {

int emit(const std::vector<extrad::PinchReport>& rows, const std::string& format,
         const std::string& path)
{
    std::ostringstream buf;
    if (format == "json")
        extrad::write_json(rows, buf);
    else
        extrad::write_csv(rows, buf);
    if (path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << path << "\n";
            return 2;
        }
        out << buf.str();
    }
    for (const auto& r : rows)
        if (r.status != "ok")
            return 1;
    return 0;
}

std::vector<extrad::Vec> read_points(const std::string& path, int coord_dim)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open point file " + path);
    std::vector<extrad::Vec> pts;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<double> vals;
        double v;
        while (ls >> v)
            vals.push_back(v);
        if (vals.empty())
            continue;
        if ((int)vals.size() != coord_dim)
            throw std::invalid_argument("point file: expected " + std::to_string(coord_dim) +
                                        " coordinates per line, got " +
                                        std::to_string(vals.size()));
        pts.push_back(Eigen::Map<const extrad::Vec>(vals.data(), vals.size()));
    }
    return pts;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"extrinsic-geometry lab for hypersurfaces in space forms"};
    app.require_subcommand(1);

    std::string config_path, out_path, format;
    std::string sweep_param, sweep_values;
    std::string points_path;
    double delta = 0.0;

    auto* verify = app.add_subcommand("verify", "run the diagnostics for one configured surface");
    verify->add_option("--config", config_path, "JSON config")->required();
    verify->add_option("--out", out_path, "output path (default stdout)");
    verify->add_option("--format", format, "csv|json (overrides config)");

    auto* sweep = app.add_subcommand("sweep", "run the diagnostics along a parameter sweep");
    sweep->add_option("--config", config_path, "JSON config")->required();
    sweep->add_option("--param", sweep_param, "swept parameter (overrides config)");
    sweep->add_option("--values", sweep_values, "comma-separated values (overrides config)");
    sweep->add_option("--out", out_path, "output path (default stdout)");
    sweep->add_option("--format", format, "csv|json (overrides config)");

    auto* radius = app.add_subcommand("radius", "smallest enclosing geodesic ball of a point file");
    radius->add_option("--points", points_path, "whitespace-separated points, '#' comments")->required();
    radius->add_option("--delta", delta, "ambient curvature")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify) || app.got_subcommand(sweep)) {
            extrad::ExperimentConfig cfg = extrad::load_config(config_path);
            if (!format.empty()) {
                if (format != "csv" && format != "json")
                    throw std::invalid_argument("config: --format must be csv or json");
                cfg.out_format = format;
            }
            if (!out_path.empty())
                cfg.out_path = out_path;
            if (app.got_subcommand(verify))
                return emit(extrad::run_verify(cfg), cfg.out_format, cfg.out_path);

            if (!sweep_param.empty())
                cfg.sweep_param = sweep_param;
            if (!sweep_values.empty()) {
                cfg.sweep_values.clear();
                std::istringstream vs(sweep_values);
                std::string tok;
                while (std::getline(vs, tok, ','))
                    cfg.sweep_values.push_back(std::stod(tok));
            }
            return emit(extrad::run_sweep(cfg), cfg.out_format, cfg.out_path);
        }

        // radius subcommand; surfaces in this lab are 2-dimensional, so flat
        // points carry 3 coordinates and curved-model points 4
        const extrad::SpaceForm sf(delta, 3);
        const auto pts = read_points(points_path, sf.coord_dim());
        for (const auto& p : pts)
            if (extrad::model_residual(sf, p) > 1e-9)
                throw std::runtime_error("radius: point is not on the ambient model");
        const extrad::EnclosingBall ball = extrad::min_enclosing_ball(sf, pts);
        std::cout << "center";
        for (int i = 0; i < ball.center.size(); ++i) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", ball.center[i]);
            std::cout << ' ' << buf;
        }
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", ball.radius);
        std::cout << "\nradius " << buf << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
