#include "clockwork/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <boost/numeric/odeint.hpp>

namespace clockwork::ode {

namespace {

namespace odeint = boost::numeric::odeint;
using Vec = boost::numeric::ublas::vector<double>;
using Mat = boost::numeric::ublas::matrix<double>;

void validate(const SolverConfig& config) {
    if (!(config.rel_tol > 0.0) || !(config.rel_tol < 1.0)) {
        throw std::invalid_argument("SolverConfig: rel_tol must lie in (0, 1)");
    }
    if (!(config.abs_tol > 0.0)) {
        throw std::invalid_argument("SolverConfig: abs_tol must be positive");
    }
    if (config.max_steps == 0) {
        throw std::invalid_argument("SolverConfig: max_steps must be positive");
    }
    if (!(config.t_end > 0.0)) {
        throw std::invalid_argument("SolverConfig: t_end must be positive");
    }
    if (config.initial_step < 0.0) {
        throw std::invalid_argument("SolverConfig: initial_step must be non-negative");
    }
}

// 1e-3 of the initial-adjustment timescale, which is 1/(1 - rho*phi) in tau
// (unit_time converts to seconds for dimensional runs).
double default_initial_step(const DimensionlessGroups& groups, double unit_time, double t_end) {
    const double decay = 1.0 - groups.rho * groups.phi;
    const double timescale = (decay > 0.0) ? 1.0 / decay : 1.0;
    return std::min(1e-3 * timescale * unit_time, 0.1 * t_end);
}

// Shared stepping loop.  Record is called with (time, state_vector) for the
// initial point, every accepted step, and the clamped final point at t_end.
template <typename System, typename JacobianF, typename Record>
std::pair<SolveStatus, std::size_t> run(System sys, JacobianF jac, Vec x0, double dt0,
                                        const SolverConfig& config, Record record) {
    auto stepper =
        odeint::make_dense_output(config.abs_tol, config.rel_tol, odeint::rosenbrock4<double>());
    stepper.initialize(x0, 0.0, dt0);
    record(0.0, x0);

    std::size_t accepted = 0;
    auto system = std::make_pair(sys, jac);
    while (stepper.current_time() < config.t_end) {
        if (accepted >= config.max_steps) {
            return {SolveStatus::step_budget_exhausted, accepted};
        }
        try {
            stepper.do_step(system);
        } catch (const std::runtime_error&) {
            // Controller could not make progress at this tolerance.
            return {SolveStatus::step_failure, accepted};
        }
        ++accepted;
        if (stepper.current_time() < config.t_end) {
            record(stepper.current_time(), stepper.current_state());
        } else {
            Vec xe(x0.size());
            stepper.calc_state(config.t_end, xe);
            record(config.t_end, xe);
        }
    }
    return {SolveStatus::ok, accepted};
}

// Cubic Hermite value on [t0, t1] from endpoint values and derivatives.
double hermite(double t, double t0, double t1, double y0, double y1, double d0, double d1) {
    const double h = t1 - t0;
    const double u = (t - t0) / h;
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2.0 * u3 - 3.0 * u2 + 1.0) * y0 + (u3 - 2.0 * u2 + u) * h * d0 +
           (-2.0 * u3 + 3.0 * u2) * y1 + (u3 - u2) * h * d1;
}

// Bisection for the upward crossing of beta(t) = threshold inside one
// sampling interval, to |dt| <= 1e-6 * t_event.
template <typename BetaAt>
double refine_crossing(double lo, double hi, double threshold, BetaAt beta_at) {
    for (int i = 0; i < 200 && (hi - lo) > 5e-7 * std::max(std::abs(hi), 1e-30); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (beta_at(mid) < threshold) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

template <typename GetTime, typename GetBeta, typename GetDBeta>
std::optional<SwitchoverEvent> find_event(std::size_t n, double threshold, GetTime time,
                                          GetBeta beta, GetDBeta dbeta) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (beta(i) < threshold && beta(i + 1) >= threshold) {
            const double t0 = time(i);
            const double t1 = time(i + 1);
            auto beta_at = [&](double t) {
                return hermite(t, t0, t1, beta(i), beta(i + 1), dbeta(i), dbeta(i + 1));
            };
            return SwitchoverEvent{refine_crossing(t0, t1, threshold, beta_at), threshold};
        }
    }
    return std::nullopt;
}

// Index of the sampling interval containing t.
template <typename GetTime>
std::size_t locate(std::size_t n, double t, GetTime time) {
    if (n < 2 || t < time(0) || t > time(n - 1)) {
        throw std::out_of_range("sample_at: time outside the sampled range");
    }
    std::size_t lo = 0, hi = n - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (time(mid) <= t) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::ok: return "ok";
        case SolveStatus::step_budget_exhausted: return "step_budget_exhausted";
        case SolveStatus::step_failure: return "step_failure";
    }
    return "unknown";
}

Trajectory integrate_from(const DimensionlessGroups& groups, double beta0, double gamma0,
                          const SolverConfig& config) {
    validate(config);
    Trajectory traj{{}, {}, groups, config};
    if (!groups.clock_valid()) {
        traj.warnings.push_back("rho*phi >= 1: inhibitor does not survive the initial transient");
    }

    auto sys = [groups](const Vec& x, Vec& dxdt, double) {
        const DimlessRates r = rhs_dimensionless({0.0, x[0], x[1]}, groups);
        dxdt[0] = r.dbeta;
        dxdt[1] = r.dgamma;
    };
    auto jac = [groups](const Vec& x, Mat& J, const double&, Vec& dfdt) {
        const Jacobian2 j = jacobian_dimensionless({0.0, x[0], x[1]}, groups);
        J(0, 0) = j.a11;
        J(0, 1) = j.a12;
        J(1, 0) = j.a21;
        J(1, 1) = j.a22;
        dfdt[0] = 0.0;
        dfdt[1] = 0.0;
    };

    Vec x0(2);
    x0[0] = beta0;
    x0[1] = gamma0;
    const double dt0 = (config.initial_step > 0.0)
                           ? config.initial_step
                           : default_initial_step(groups, 1.0, config.t_end);

    auto [status, accepted] = run(sys, jac, x0, dt0, config, [&](double t, const Vec& x) {
        traj.samples.push_back({t, x[0], x[1]});
        traj.derivatives.push_back(rhs_dimensionless({t, x[0], x[1]}, groups));
    });
    traj.status = status;
    traj.steps_accepted = accepted;
    return traj;
}

Trajectory integrate(const DimensionlessGroups& groups, double phi, const SolverConfig& config) {
    return integrate_from(groups, phi, 1.0, config);
}

DimensionalTrajectory integrate_dimensional(const RateConstants& rates,
                                            const InitialConcentrations& init,
                                            const SolverConfig& config) {
    validate(config);
    const DimensionlessGroups groups = derive_groups(rates, init);
    DimensionalTrajectory traj{{}, {}, rates, init, config};
    if (!groups.clock_valid()) {
        traj.warnings.push_back("rho*phi >= 1: inhibitor does not survive the initial transient");
    }

    auto sys = [rates](const Vec& x, Vec& dxdt, double) {
        const Derivatives3 r = rhs_full({0.0, x[0], x[1], x[2]}, rates);
        dxdt[0] = r.da;
        dxdt[1] = r.db;
        dxdt[2] = r.dc;
    };
    auto jac = [rates](const Vec& x, Mat& J, const double&, Vec& dfdt) {
        const double a = x[0], b = x[1], c = x[2];
        const double k0 = rates.k0, k1 = rates.k1;
        J(0, 0) = -4.0 * k0 * a;
        J(0, 1) = 2.0 * k1 * c;
        J(0, 2) = 2.0 * k1 * b;
        J(1, 0) = 2.0 * k0 * a;
        J(1, 1) = -k1 * c;
        J(1, 2) = -k1 * b;
        J(2, 0) = 0.0;
        J(2, 1) = -k1 * c;
        J(2, 2) = -k1 * b;
        dfdt[0] = dfdt[1] = dfdt[2] = 0.0;
    };

    Vec x0(3);
    x0[0] = init.a0;
    x0[1] = init.b0;
    x0[2] = init.c0;
    const double unit_time = derive_scales(rates, init).time;
    const double dt0 = (config.initial_step > 0.0)
                           ? config.initial_step
                           : default_initial_step(groups, unit_time, config.t_end);

    auto [status, accepted] = run(sys, jac, x0, dt0, config, [&](double t, const Vec& x) {
        traj.samples.push_back({t, x[0], x[1], x[2]});
        traj.derivatives.push_back(rhs_full({t, x[0], x[1], x[2]}, rates));
    });
    traj.status = status;
    traj.steps_accepted = accepted;
    return traj;
}

double corner_threshold(const DimensionlessGroups& groups) {
    return std::sqrt(2.0 * groups.eps / M_PI);
}

DimlessState sample_at(const Trajectory& traj, double tau) {
    const auto& s = traj.samples;
    const std::size_t i = locate(s.size(), tau, [&](std::size_t k) { return s[k].tau; });
    const auto& d = traj.derivatives;
    return {tau,
            hermite(tau, s[i].tau, s[i + 1].tau, s[i].beta, s[i + 1].beta, d[i].dbeta,
                    d[i + 1].dbeta),
            hermite(tau, s[i].tau, s[i + 1].tau, s[i].gamma, s[i + 1].gamma, d[i].dgamma,
                    d[i + 1].dgamma)};
}

DimensionalState sample_at(const DimensionalTrajectory& traj, double t) {
    const auto& s = traj.samples;
    const std::size_t i = locate(s.size(), t, [&](std::size_t k) { return s[k].t; });
    const auto& d = traj.derivatives;
    return {t,
            hermite(t, s[i].t, s[i + 1].t, s[i].a, s[i + 1].a, d[i].da, d[i + 1].da),
            hermite(t, s[i].t, s[i + 1].t, s[i].b, s[i + 1].b, d[i].db, d[i + 1].db),
            hermite(t, s[i].t, s[i + 1].t, s[i].c, s[i + 1].c, d[i].dc, d[i + 1].dc)};
}

std::optional<SwitchoverEvent> detect_switchover(const Trajectory& traj, double threshold) {
    const auto& s = traj.samples;
    const auto& d = traj.derivatives;
    return find_event(
        s.size(), threshold, [&](std::size_t i) { return s[i].tau; },
        [&](std::size_t i) { return s[i].beta; }, [&](std::size_t i) { return d[i].dbeta; });
}

std::optional<SwitchoverEvent> detect_switchover(const Trajectory& traj) {
    return detect_switchover(traj, corner_threshold(traj.groups));
}

std::optional<SwitchoverEvent> detect_switchover(const DimensionalTrajectory& traj,
                                                 double threshold) {
    const double m0 = traj.init.m0();
    const auto& s = traj.samples;
    const auto& d = traj.derivatives;
    return find_event(
        s.size(), threshold, [&](std::size_t i) { return s[i].t; },
        [&](std::size_t i) { return s[i].b / m0; }, [&](std::size_t i) { return d[i].db / m0; });
}

std::optional<SwitchoverEvent> detect_switchover(const DimensionalTrajectory& traj) {
    return detect_switchover(traj, corner_threshold(derive_groups(traj.rates, traj.init)));
}

}  // namespace clockwork::ode
