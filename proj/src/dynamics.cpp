#include "fpl/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpl/collision_models.hpp"
#include "fpl/errors.hpp"

namespace fpl {

namespace {

Eigen::VectorXd checked(const RhsFunction& rhs, const SpectralState& s, long step) {
    Eigen::VectorXd k = rhs(s);
    if (!k.allFinite()) throw BlowupError("non-finite right-hand side at step " + std::to_string(step), step);
    return k;
}

struct Invariants {
    double mass;
    Eigen::Vector3d momentum;
    double energy;
};

Invariants invariants(const SpectralState& s) {
    Invariants v{s.coeffs(0), Eigen::Vector3d::Zero(), 0.0};
    for (int i = 0; i < 3 && s.M >= 1; ++i) v.momentum(i) = s[MultiIndex::unit(i)];
    for (int i = 0; i < 3 && s.M >= 2; ++i) v.energy += s[2 * MultiIndex::unit(i)];
    return v;
}

}  // namespace

SpectralState rk4_step(const RhsFunction& rhs, const SpectralState& state, double dt, long step) {
    if (!(dt > 0.0)) throw ConfigError("time step must be positive");
    SpectralState stage = state;
    const Eigen::VectorXd k1 = checked(rhs, state, step);
    stage.coeffs = state.coeffs + 0.5 * dt * k1;
    stage.t = state.t + 0.5 * dt;
    const Eigen::VectorXd k2 = checked(rhs, stage, step);
    stage.coeffs = state.coeffs + 0.5 * dt * k2;
    const Eigen::VectorXd k3 = checked(rhs, stage, step);
    stage.coeffs = state.coeffs + dt * k3;
    stage.t = state.t + dt;
    const Eigen::VectorXd k4 = checked(rhs, stage, step);
    stage.coeffs = state.coeffs + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!stage.coeffs.allFinite()) throw BlowupError("non-finite state at step " + std::to_string(step), step);
    return stage;
}

void RunConfig::validate() const {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(t_end >= 0.0)) throw ConfigError("t_end must be non-negative");
    if (M0 < 2) throw ConfigError("M0 must be at least 2");
    if (M < M0) throw ConfigError("M must be at least M0");
    if (M > kMaxDegree) throw ConfigError("M too large");
    for (const double s : snapshots)
        if (!(s >= 0.0)) throw ConfigError("snapshot times must be non-negative");
    kernel.validate();
}

StepPlan StepPlan::make(double dt, double t_end, std::vector<double> snapshots) {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(t_end >= 0.0)) throw ConfigError("t_end must be non-negative");
    StepPlan plan;
    plan.dt = dt;
    plan.steps = std::lround(t_end / dt);
    plan.snapshots = std::move(snapshots);
    std::sort(plan.snapshots.begin(), plan.snapshots.end());
    return plan;
}

Trajectory evolve(const RhsFunction& rhs, const SpectralState& initial, const StepPlan& plan,
                  const std::function<void(const SpectralState&)>& observer) {
    Trajectory traj;
    const Invariants start = invariants(initial);
    SpectralState state = initial;
    const double t0 = initial.t;
    std::size_t next_snapshot = 0;

    auto record = [&](long step) {
        traj.times.push_back(state.t);
        traj.moments.push_back(moments(state));
        const Invariants now = invariants(state);
        traj.drift.mass = std::max(traj.drift.mass, std::abs(now.mass - start.mass));
        traj.drift.momentum = std::max(traj.drift.momentum, (now.momentum - start.momentum).cwiseAbs().maxCoeff());
        traj.drift.energy = std::max(traj.drift.energy, std::abs(now.energy - start.energy));
        while (next_snapshot < plan.snapshots.size()) {
            const long target = std::clamp(std::lround(plan.snapshots[next_snapshot] / plan.dt), 0L, plan.steps);
            if (target != step) break;
            traj.snapshots.push_back({plan.snapshots[next_snapshot], state});
            ++next_snapshot;
        }
        if (observer) observer(state);
    };

    record(0);
    for (long k = 1; k <= plan.steps; ++k) {
        state = rk4_step(rhs, state, plan.dt, k);
        state.t = t0 + static_cast<double>(k) * plan.dt;
        record(k);
    }
    traj.final_state = state;
    return traj;
}

RhsFunction model_rhs(const CollisionTensor& tensor, int M) {
    if (M == tensor.M0) return [&tensor](const SpectralState& s) { return quadratic_rhs(tensor, s); };
    if (M < tensor.M0) throw ConfigError("M must be at least M0");
    return [&tensor](const SpectralState& s) { return hybrid_rhs(tensor, s); };
}

Trajectory evolve(const RunConfig& config, const CollisionTensor& tensor, const SpectralState& initial) {
    config.validate();
    if (tensor.M0 != config.M0 || !(tensor.params == config.kernel))
        throw CompatibilityError("tensor does not match the run configuration");
    if (initial.M != config.M) throw CompatibilityError("initial state degree differs from M");
    return evolve(model_rhs(tensor, config.M), initial, StepPlan::make(config.dt, config.t_end, config.snapshots));
}

}  // namespace fpl
