#ifndef CLOCKWORK_KINETICS_HPP
#define CLOCKWORK_KINETICS_HPP

/**
 * @file kinetics.hpp
 * @brief Right-hand sides, conservation, scaling, and phase-plane analysis.
 *
 * Three formulations of the same mass-action kinetics:
 *   - full dimensional, 3 variables (a, b, c);
 *   - reduced dimensional, 2 variables (b, c) with a = m0 - 2b eliminated
 *     through the conserved iodine-atom total;
 *   - dimensionless (beta, gamma) with groups (eps, rho, phi).
 *
 * All functions are pure; safe for unrestricted concurrent use.
 */

#include <array>

#include "clockwork/types.hpp"

namespace clockwork {

/// Time derivatives of the full dimensional system.
struct Derivatives3 {
    double da;
    double db;
    double dc;
};

/// Time derivatives of the reduced dimensional system.
struct Derivatives2 {
    double db;
    double dc;
};

/// tau-derivatives of the dimensionless system.
struct DimlessRates {
    double dbeta;
    double dgamma;
};

/// 2x2 Jacobian of the dimensionless right-hand side, row-major:
/// [d(dbeta)/dbeta, d(dbeta)/dgamma; d(dgamma)/dbeta, d(dgamma)/dgamma].
struct Jacobian2 {
    double a11, a12;
    double a21, a22;
};

/// da/dt = 2 k1 b c - 2 k0 a^2,  db/dt = -k1 b c + k0 a^2,  dc/dt = -k1 b c.
/// Satisfies da/dt + 2 db/dt = 0 identically.
Derivatives3 rhs_full(const DimensionalState& state, const RateConstants& rates);

/// Reduced system with a = m0 - 2b:
/// db/dt = -k1 b c + k0 (m0 - 2b)^2,  dc/dt = -k1 b c.
Derivatives2 rhs_reduced(double b, double c, double m0, const RateConstants& rates);

/// dbeta/dtau = -beta gamma + eps rho (1 - 2 beta)^2,  dgamma/dtau = -rho beta gamma.
DimlessRates rhs_dimensionless(const DimlessState& state, const DimensionlessGroups& groups);

/// Analytic Jacobian of rhs_dimensionless at the given state.
Jacobian2 jacobian_dimensionless(const DimlessState& state, const DimensionlessGroups& groups);

/// Dimensionless groups from rate constants and initial concentrations.
DimensionlessGroups derive_groups(const RateConstants& rates, const InitialConcentrations& init);

/// Characteristic scales (k1 c0)^-1, m0, c0 reported alongside the groups.
Scales derive_scales(const RateConstants& rates, const InitialConcentrations& init);

/// Map a dimensional state to (tau, beta, gamma).
DimlessState nondimensionalise(const DimensionalState& state, const RateConstants& rates,
                               const InitialConcentrations& init);

/// Map (tau, beta, gamma) back to a dimensional state; a is recovered from
/// the conservation law a = m0 (1 - 2 beta).
DimensionalState redimensionalise(const DimlessState& state, const RateConstants& rates,
                                  const InitialConcentrations& init);

/// Dimensionless iodide alpha = a/m0 = 1 - 2 beta, a derived quantity only
/// (no equation evolves it independently).
inline double iodide_fraction(double beta) { return 1.0 - 2.0 * beta; }

/// One eigenvalue with its (unnormalised) eigenvector.
struct EigenPair {
    double value;
    std::array<double, 2> vector;
};

/// Eigenstructure of the linearisation at the equilibrium (beta, gamma) = (1/2, 0).
struct EquilibriumAnalysis {
    EigenPair slow;    ///< zero eigenvalue; tangent to the slow manifold {gamma = 0}
    EigenPair stable;  ///< eigenvalue -rho/2 with eigenvector (1, rho)
};

/// Eigenvalues/eigenvectors of the analytic Jacobian at (1/2, 0).
/// Computed from jacobian_dimensionless, not hard-coded.
EquilibriumAnalysis equilibrium_analysis(const DimensionlessGroups& groups);

/// Quasi-steady iodine level: the smaller root of
///   4 eps rho beta^2 - (gamma + 4 eps rho) beta + eps rho = 0,
/// i.e. the branch of beta*gamma = eps*rho*(1-2 beta)^2 that lies in (0, 1/2].
/// For gamma >> eps this is approximately eps*rho/gamma; gamma = 0 gives 1/2.
/// Throws std::domain_error for gamma < 0.
double quasi_steady_beta(double gamma, const DimensionlessGroups& groups);

}  // namespace clockwork

#endif  // CLOCKWORK_KINETICS_HPP
