#ifndef CLOCKWORK_ASYMPTOTICS_HPP
#define CLOCKWORK_ASYMPTOTICS_HPP

/**
 * @file asymptotics.hpp
 * @brief Closed-form approximations in the four time regions of the clock.
 *
 * With eps = k0/k1 small the trajectory splits into
 *   I   initial adjustment,  tau = O(1): fast reactions equilibrate,
 *       roughly b0/c0 of the inhibitor is consumed;
 *   II  induction,           tau = O(1/eps): quasi-steady drift, the
 *       inhibitor drains along the line gamma = 1 - rho*phi - rho^2*eps*tau;
 *   III corner,              width O(eps^-1/2) around the switchover time:
 *       an error-function ramp joins induction to the long-term branch;
 *   IV  long-term approach,  tau = O(1/eps): the inhibitor is gone and
 *       beta climbs to the equilibrium 1/2.
 *
 * The matched constants tie the pieces together:
 *   c1 = 1 - rho*phi (induction intercept), c2 = 1 + 2 phi - 2/rho
 *   (long-term origin), c3 = 0 and c4 = 1 (corner centering and amplitude).
 *
 * All functions are pure and thread-safe.
 */

#include "clockwork/types.hpp"

namespace clockwork::asymptotics {

enum class RegionLabel { I, II, III, IV };

const char* to_string(RegionLabel label);

/// Matching constants derived from the groups (stored for inspection).
struct MatchingConstants {
    double c1;  ///< 1 - rho*phi
    double c2;  ///< 1 + 2*phi - 2/rho
    double c3;  ///< 0
    double c4;  ///< 1
};

MatchingConstants matching_constants(const DimensionlessGroups& groups);

/// Region-classifier knobs.  The paper-level scalings only fix orders of
/// magnitude, so the concrete boundaries are configuration.
struct RegionConfig {
    double t_init = 0.0;       ///< end of region I; 0 selects 10/(1 - rho*phi)
    double corner_width = 3.0; ///< region III half-width in units of eps^-1/2 / rho
};

struct PhasePoint {
    double beta;
    double gamma;
};

/// Region I: beta = phi (1-rho phi) E / (1 - rho phi E) with
/// E = exp((rho phi - 1) tau); gamma = rho beta + 1 - rho phi.
/// Throws std::domain_error when rho*phi >= 1 (denominator can vanish).
PhasePoint region1(double tau, const DimensionlessGroups& groups);

/// Region II: beta = eps rho / gamma, gamma = 1 - rho phi - rho^2 eps tau.
/// Throws std::domain_error at or beyond the blow-up time
/// (1 - rho phi)/(rho^2 eps), where the induction expansion loses validity.
PhasePoint region2(double tau, const DimensionlessGroups& groups);

/// Region III: the error-function corner solution centred on the switchover
/// time.  Both components share the exponent -(x^2)/(2 eps) with
/// x = rho eps tau - (1/rho - phi); the denominator is evaluated through
/// erfc to stay accurate far into the induction tail.
PhasePoint region3(double tau, const DimensionlessGroups& groups);

/// Region IV: beta = 1/2 - 1/(2 (1 + 2 [phi - 1/rho + rho eps tau])),
/// gamma = 0 beyond all orders.  Throws std::domain_error when the
/// denominator is not positive (call only after switchover).
PhasePoint region4(double tau, const DimensionlessGroups& groups);

/// Deterministic partition of the tau axis (I, then III around the
/// switchover, II between, IV after).  Requires tau >= 0 and rho*phi < 1.
RegionLabel classify_region(double tau, const DimensionlessGroups& groups,
                            const RegionConfig& config = {});

struct CompositePoint {
    RegionLabel region;
    double beta;
    double gamma;
};

/// Evaluate the classified region's formula at tau.
CompositePoint composite_eval(double tau, const DimensionlessGroups& groups,
                              const RegionConfig& config = {});

/// Classified point bundled with the groups and derived constants.
struct AsymptoticSolution {
    RegionLabel region;
    DimensionlessGroups groups;
    MatchingConstants constants;
};

AsymptoticSolution solution_at(double tau, const DimensionlessGroups& groups,
                               const RegionConfig& config = {});

/// Switchover (end-of-induction) time in seconds:
///   t_sw = (c0 - phi m0) / (m0^2 k0),  phi m0 = b0.
/// Equality c0 = b0 returns 0 (clock fires immediately); c0 < b0 throws
/// std::domain_error (the inhibitor never controls the iodine).
double switchover_time(const RateConstants& rates, const InitialConcentrations& init);

/// Dimensionless form tau_sw = (rho^-2 - rho^-1 phi)/eps; same validity rule
/// expressed as rho*phi <= 1.
double switchover_time_dimless(const DimensionlessGroups& groups);

}  // namespace clockwork::asymptotics

#endif  // CLOCKWORK_ASYMPTOTICS_HPP
