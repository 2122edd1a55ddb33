#ifndef CLOCKWORK_ODE_HPP
#define CLOCKWORK_ODE_HPP

/**
 * @file ode.hpp
 * @brief Stiff adaptive integration of the clock system with dense output
 *        and switchover-event detection.
 *
 * The dimensionless system is stiff: beta relaxes on the O(1) tau scale
 * while the inhibitor drains on the O(1/eps) scale, so an implicit
 * (Rosenbrock) stepper is used.  Accepted steps are recorded together with
 * their derivatives, which gives a cubic Hermite interpolant between
 * samples; event refinement and resampling both use it.
 *
 * Integration is single-threaded per run; concurrent runs share no state.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clockwork/kinetics.hpp"
#include "clockwork/types.hpp"

namespace clockwork::ode {

struct SolverConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    std::size_t max_steps = 1000000;
    double t_end = 0.0;        ///< required, > 0 (tau or seconds)
    double initial_step = 0.0; ///< 0 selects 1e-3 of the initial-adjustment timescale
};

enum class SolveStatus {
    ok,
    step_budget_exhausted,  ///< max_steps hit before t_end; trajectory is partial
    step_failure,           ///< controller could not make progress; trajectory is partial
};

const char* to_string(SolveStatus status);

/// Upward crossing of the iodine fraction through a threshold.
struct SwitchoverEvent {
    double tau_event;  ///< crossing time (tau, or seconds for dimensional runs)
    double threshold;  ///< beta level that was crossed
};

/// Dimensionless trajectory: samples at accepted solver steps, with
/// derivatives for interpolation.  Sample times are strictly increasing.
struct Trajectory {
    std::vector<DimlessState> samples;
    std::vector<DimlessRates> derivatives;
    DimensionlessGroups groups;
    SolverConfig config;
    SolveStatus status = SolveStatus::ok;
    std::size_t steps_accepted = 0;
    std::vector<std::string> warnings;
};

/// Dimensional trajectory of (t, a, b, c).
struct DimensionalTrajectory {
    std::vector<DimensionalState> samples;
    std::vector<Derivatives3> derivatives;
    RateConstants rates;
    InitialConcentrations init;
    SolverConfig config;
    SolveStatus status = SolveStatus::ok;
    std::size_t steps_accepted = 0;
    std::vector<std::string> warnings;
};

/// Integrate the dimensionless system from beta(0) = phi, gamma(0) = 1.
/// A rho*phi >= 1 input is flagged as a warning, not an error.
Trajectory integrate(const DimensionlessGroups& groups, double phi, const SolverConfig& config);

/// Integrate from an arbitrary initial state (beta0, gamma0) at tau = 0.
Trajectory integrate_from(const DimensionlessGroups& groups, double beta0, double gamma0,
                          const SolverConfig& config);

/// Integrate the full 3-variable dimensional system.
DimensionalTrajectory integrate_dimensional(const RateConstants& rates,
                                            const InitialConcentrations& init,
                                            const SolverConfig& config);

/// Default event threshold: the iodine level at the centre of the switchover
/// corner, beta* = sqrt(2 eps / pi).  At this level the trajectory leaves the
/// induction plateau, so the crossing time tracks the induction-period
/// formula (c0 - phi m0)/(m0^2 k0) across the whole eps range.
double corner_threshold(const DimensionlessGroups& groups);

/// Interpolated state at an arbitrary time inside the sampled range.
DimlessState sample_at(const Trajectory& traj, double tau);
DimensionalState sample_at(const DimensionalTrajectory& traj, double t);

/// Locate the upward crossing beta = threshold, refined on the interpolant
/// to |dtau| <= 1e-6 * tau_event.  Absence of a crossing returns nullopt.
std::optional<SwitchoverEvent> detect_switchover(const Trajectory& traj, double threshold);
std::optional<SwitchoverEvent> detect_switchover(const Trajectory& traj);  ///< corner threshold

/// Dimensional variant; the threshold applies to b/m0 and the event time is
/// in seconds.
std::optional<SwitchoverEvent> detect_switchover(const DimensionalTrajectory& traj,
                                                 double threshold);
std::optional<SwitchoverEvent> detect_switchover(const DimensionalTrajectory& traj);

}  // namespace clockwork::ode

#endif  // CLOCKWORK_ODE_HPP
