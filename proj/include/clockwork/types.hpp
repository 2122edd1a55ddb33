#ifndef CLOCKWORK_TYPES_HPP
#define CLOCKWORK_TYPES_HPP

/**
 * @file types.hpp
 * @brief Domain value types for the vitamin C / iodine clock reaction model.
 *
 * The reaction network is two steps: a slow iodide-to-iodine conversion
 * (2A -> B, rate k0 a^2) and a fast iodine reduction by ascorbic acid
 * (B + C -> 2A, rate k1 b c).  The iodine-atom total a + 2b is conserved,
 * so the system reduces to two ODEs, and after nondimensionalisation the
 * whole dynamics is governed by three groups: eps = k0/k1, rho = m0/c0,
 * phi = b0/m0.
 *
 * All types here are immutable values; construction validates invariants
 * and throws std::invalid_argument on violation.
 */

#include <stdexcept>
#include <string>

namespace clockwork {

/// Rate coefficients of the two reactions, both in l mol^-1 s^-1.
/// k0: slow iodine production (2A -> B).  k1: fast iodine removal (B+C -> 2A).
struct RateConstants {
    double k0;
    double k1;

    RateConstants(double k0_, double k1_) : k0(k0_), k1(k1_) {
        if (!(k0 > 0.0) || !(k1 > 0.0)) {
            throw std::invalid_argument("RateConstants: k0 and k1 must be positive");
        }
        const double ratio = k0 / k1;
        if (!(ratio > 0.0) || !(ratio < 1e300)) {
            throw std::invalid_argument("RateConstants: k0/k1 must be finite and positive");
        }
    }
};

/// Initial concentrations in mol/l: a0 iodide, b0 iodine, c0 ascorbic acid.
/// The iodine-atom total m0 = a0 + 2 b0 must be positive.
struct InitialConcentrations {
    double a0;
    double b0;
    double c0;

    InitialConcentrations(double a0_, double b0_, double c0_) : a0(a0_), b0(b0_), c0(c0_) {
        if (a0 < 0.0 || b0 < 0.0) {
            throw std::invalid_argument("InitialConcentrations: a0 and b0 must be non-negative");
        }
        if (!(c0 > 0.0)) {
            throw std::invalid_argument("InitialConcentrations: c0 must be positive");
        }
        if (!(m0() > 0.0)) {
            throw std::invalid_argument("InitialConcentrations: a0 + 2 b0 must be positive");
        }
    }

    /// Conserved iodine-atom concentration a0 + 2 b0 [mol/l].
    double m0() const { return a0 + 2.0 * b0; }
};

/**
 * Dimensionless groups of the reduced model.
 *
 *   eps = k0/k1   (rate ratio, small for a working clock)
 *   rho = m0/c0   (iodine atoms per initial inhibitor)
 *   phi = b0/m0   (initial iodine fraction, in [0, 1/2] since a0 >= 0)
 *
 * The induction phase exists only when rho*phi < 1 (enough inhibitor to
 * survive the initial transient); query clock_valid() for that.
 */
struct DimensionlessGroups {
    double eps;
    double rho;
    double phi;

    DimensionlessGroups(double eps_, double rho_, double phi_) : eps(eps_), rho(rho_), phi(phi_) {
        if (!(eps > 0.0)) {
            throw std::invalid_argument("DimensionlessGroups: eps must be positive");
        }
        if (!(rho > 0.0)) {
            throw std::invalid_argument("DimensionlessGroups: rho must be positive");
        }
        if (phi < 0.0 || phi > 0.5) {
            throw std::invalid_argument("DimensionlessGroups: phi must lie in [0, 1/2]");
        }
    }

    /// True when rho*phi < 1, i.e. the inhibitor outlasts the initial transient.
    bool clock_valid() const { return rho * phi < 1.0; }
};

/// Dimensionless state: tau = k1 c0 t, beta = b/m0, gamma = c/c0.
struct DimlessState {
    double tau;
    double beta;
    double gamma;
};

/// Dimensional state at time t [s], concentrations in mol/l.
struct DimensionalState {
    double t;
    double a;
    double b;
    double c;
};

/// Characteristic scales used by the nondimensionalisation.
struct Scales {
    double time;      ///< (k1 c0)^-1 [s]
    double iodine;    ///< m0 [mol/l], scale of b
    double inhibitor; ///< c0 [mol/l], scale of c
};

}  // namespace clockwork

#endif  // CLOCKWORK_TYPES_HPP
