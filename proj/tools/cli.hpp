#ifndef FPL_TOOLS_CLI_HPP
#define FPL_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fpl/dynamics.hpp"
#include "fpl/validation.hpp"

namespace fpl::cli {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kUsage = 2, kIo = 3 };

struct GridSpec {
    double min = -6.0;
    double max = 6.0;
    int points = 121;

    std::vector<double> nodes() const;
};

struct CliConfig {
    int schema = 1;
    RunConfig run;
    GridSpec g_grid{-6.0, 6.0, 241};
    GridSpec h_grid{-6.0, 6.0, 121};
};

/// Parses the JSON run configuration; relative cache/outdir paths resolve against `base`.
CliConfig parse_config(const std::string& text, const std::filesystem::path& base = {});
CliConfig load_config(const std::filesystem::path& path);

std::string snapshot_name(const char* prefix, double t);

void write_moments_csv(std::ostream& out, const Trajectory& traj);

int cmd_precompute(double gamma, double lambda, int m0, const std::filesystem::path& out, std::ostream& log,
                   std::ostream& err);
int cmd_solve(const std::filesystem::path& config, std::ostream& log, std::ostream& err);
int cmd_validate(const ValidationOptions& options, std::ostream& log, std::ostream& err);

}  // namespace fpl::cli

#endif
