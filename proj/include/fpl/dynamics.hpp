#ifndef FPL_DYNAMICS_HPP
#define FPL_DYNAMICS_HPP

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fpl/collision_kernel.hpp"
#include "fpl/observables.hpp"
#include "fpl/spectral_state.hpp"

namespace fpl {

using RhsFunction = std::function<Eigen::VectorXd(const SpectralState&)>;

/// Classical RK4 step; BlowupError (carrying `step`) if any stage is non-finite.
SpectralState rk4_step(const RhsFunction& rhs, const SpectralState& state, double dt, long step = 0);

struct RunConfig {
    std::string scenario = "bkw";
    KernelParams kernel;
    int M = 9;
    int M0 = 5;
    double dt = 0.01;
    double t_end = 0.0;
    std::vector<double> snapshots;
    std::string cache;
    std::string outdir = ".";

    /// ConfigError on dt <= 0, t_end < 0, M0 < 2, M < M0 or a negative snapshot time.
    void validate() const;
};

/// Fixed-step schedule: `steps` steps of size dt, snapshot requests rounded to the nearest step.
struct StepPlan {
    double dt = 0.01;
    long steps = 0;
    std::vector<double> snapshots;

    static StepPlan make(double dt, double t_end, std::vector<double> snapshots = {});
};

struct Snapshot {
    double requested;
    SpectralState state;
};

/// Largest change from the initial values of f_0, f_{e_i} and sum f_{2e_i} seen along a run.
struct ConservationDrift {
    double mass = 0.0;
    double momentum = 0.0;
    double energy = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Moments> moments;
    std::vector<Snapshot> snapshots;
    SpectralState final_state;
    ConservationDrift drift;
};

/// Integrates with RK4, recording moments after every step (and at t = 0).
/// `observer`, if set, sees every state including the initial one.
Trajectory evolve(const RhsFunction& rhs, const SpectralState& initial, const StepPlan& plan,
                  const std::function<void(const SpectralState&)>& observer = {});

/// Quadratic model when M == M0, hybrid when M > M0.
Trajectory evolve(const RunConfig& config, const CollisionTensor& tensor, const SpectralState& initial);

/// Right-hand side used by evolve(config, ...).
RhsFunction model_rhs(const CollisionTensor& tensor, int M);

}  // namespace fpl

#endif  // FPL_DYNAMICS_HPP
