#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fpl/errors.hpp"
#include "fpl/scenarios.hpp"

namespace fpl::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GridSpec parse_grid(const json& j, GridSpec grid) {
    grid.min = j.value("min", grid.min);
    grid.max = j.value("max", grid.max);
    grid.points = j.value("points", grid.points);
    if (!(grid.max > grid.min) || grid.points < 2) throw ConfigError("grid must satisfy min < max and points >= 2");
    return grid;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

}  // namespace

std::vector<double> GridSpec::nodes() const {
    std::vector<double> x(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) x[static_cast<std::size_t>(i)] = min + (max - min) * i / (points - 1);
    return x;
}

CliConfig parse_config(const std::string& text, const fs::path& base) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> known{"schema", "scenario", "gamma", "lambda", "M",       "M0",
                                                "dt",     "t_end",    "snapshots", "cache", "outdir", "grid"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config key '" + key + "'");
    for (const char* key : {"scenario", "gamma", "M", "M0", "t_end", "cache"})
        if (!j.contains(key)) throw ConfigError(std::string("config is missing '") + key + "'");

    CliConfig c;
    try {
        c.schema = j.value("schema", 1);
        if (c.schema != 1) throw ConfigError("unsupported config schema " + std::to_string(c.schema));
        auto& r = c.run;
        r.scenario = j.at("scenario").get<std::string>();
        parse_scenario(r.scenario);
        r.kernel.gamma = j.at("gamma").get<double>();
        r.kernel.lambda = j.value("lambda", 1.0);
        r.M = j.at("M").get<int>();
        r.M0 = j.at("M0").get<int>();
        r.dt = j.value("dt", 0.01);
        r.t_end = j.at("t_end").get<double>();
        r.snapshots = j.value("snapshots", std::vector<double>{});
        fs::path cache = j.at("cache").get<std::string>();
        fs::path outdir = j.value("outdir", std::string("."));
        r.cache = (cache.is_relative() ? base / cache : cache).lexically_normal().string();
        r.outdir = (outdir.is_relative() ? base / outdir : outdir).lexically_normal().string();
        if (j.contains("grid")) {
            const auto& g = j.at("grid");
            if (g.contains("g")) c.g_grid = parse_grid(g.at("g"), c.g_grid);
            if (g.contains("h")) c.h_grid = parse_grid(g.at("h"), c.h_grid);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
    c.run.kernel.validate();
    c.run.validate();
    return c;
}

CliConfig load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.parent_path());
}

std::string snapshot_name(const char* prefix, double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_t%g.csv", prefix, t);
    return buf;
}

void write_moments_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,rho,u1,u2,u3,theta,sigma11,sigma22,sigma33,sigma12,sigma13,sigma23,q1,q2,q3\n";
    const double nan = std::nan("");
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const Moments& m = traj.moments[k];
        out << fmt(traj.times[k]) << ',' << fmt(m.rho);
        for (int i = 0; i < 3; ++i) out << ',' << fmt(m.has_velocity ? m.u(i) : nan);
        out << ',' << fmt(m.has_stress ? m.theta : nan);
        for (const auto& [i, j] : {std::pair{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}})
            out << ',' << fmt(m.has_stress ? m.sigma(i, j) : nan);
        for (int i = 0; i < 3; ++i) out << ',' << fmt(m.has_heat_flux ? m.q(i) : nan);
        out << '\n';
    }
}

int cmd_precompute(double gamma, double lambda, int m0, const fs::path& out, std::ostream& log, std::ostream& err) {
    try {
        const KernelParams params{gamma, lambda};
        params.validate();
        if (m0 < 2) throw ConfigError("M0 must be at least 2");
        const auto start = std::chrono::steady_clock::now();
        const auto tensor = build_tensor(params, m0);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ofstream file(out, std::ios::binary);
        if (!file) throw IoError("cannot write " + out.string());
        save_tensor(tensor, file);
        file.close();
        if (!file) throw IoError("write failed for " + out.string());
        log << "gamma=" << gamma << " lambda=" << lambda << " M0=" << m0 << ": " << tensor.entries.size()
            << " entries in " << seconds << " s -> " << out.string() << '\n';
        return kOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

int cmd_solve(const fs::path& config_path, std::ostream& log, std::ostream& err) {
    try {
        const CliConfig cfg = load_config(config_path);
        const RunConfig& run = cfg.run;
        if (!fs::exists(run.cache)) {
            char cmd[256];
            std::snprintf(cmd, sizeof cmd, "fpl precompute --gamma %g --lambda %g --m0 %d --out %s", run.kernel.gamma,
                          run.kernel.lambda, run.M0, run.cache.c_str());
            throw IoError("cache " + run.cache + " not found; create it with: " + cmd);
        }
        std::ifstream cache(run.cache, std::ios::binary);
        if (!cache) throw IoError("cannot read cache " + run.cache);
        const auto tensor = load_tensor(cache, {run.kernel.gamma, run.kernel.lambda, run.M0});

        const auto initial = initial_state(parse_scenario(run.scenario), run.M);
        if (const auto warn = normalization_warning(initial)) err << "warning: " << *warn << '\n';
        for (const double t : run.snapshots)
            if (t > run.t_end) err << "warning: snapshot t=" << t << " is past t_end, the final state is written\n";
        const auto traj = evolve(run, tensor, initial);

        fs::create_directories(run.outdir);
        auto moments_file = open_out(fs::path(run.outdir) / "moments.csv");
        write_moments_csv(moments_file, traj);

        const auto g_nodes = cfg.g_grid.nodes();
        const auto h_nodes = cfg.h_grid.nodes();
        for (const auto& snap : traj.snapshots) {
            auto g_file = open_out(fs::path(run.outdir) / snapshot_name("g", snap.requested));
            g_file << "v1,g\n";
            const auto g = marginal_1d(snap.state, g_nodes);
            for (std::size_t i = 0; i < g_nodes.size(); ++i)
                g_file << fmt(g_nodes[i]) << ',' << fmt(g(static_cast<Eigen::Index>(i))) << '\n';

            auto h_file = open_out(fs::path(run.outdir) / snapshot_name("h", snap.requested));
            h_file << "v1,v2,h\n";
            const auto h = marginal_2d(snap.state, h_nodes, h_nodes);
            for (std::size_t i = 0; i < h_nodes.size(); ++i)
                for (std::size_t j = 0; j < h_nodes.size(); ++j)
                    h_file << fmt(h_nodes[i]) << ',' << fmt(h_nodes[j]) << ','
                           << fmt(h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) << '\n';
        }
        char line[256];
        std::snprintf(line, sizeof line, "%s: %zu steps to t=%g, drift mass %.3e momentum %.3e energy %.3e\n",
                      run.scenario.c_str(), traj.times.size() - 1, traj.times.back(), traj.drift.mass,
                      traj.drift.momentum, traj.drift.energy);
        log << line << "wrote " << (fs::path(run.outdir) / "moments.csv").string() << " and "
            << 2 * traj.snapshots.size() << " marginal files\n";
        return kOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const FormatError& e) {
        err << "error: unreadable cache: " << e.what() << '\n';
        return kIo;
    } catch (const CompatibilityError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BlowupError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailed;
    }
}

int cmd_validate(const ValidationOptions& options, std::ostream& log, std::ostream&) {
    const auto report = run_validation(options);
    log << format_report(report);
    return report.passed() ? kOk : kValidationFailed;
}

}  // namespace fpl::cli
