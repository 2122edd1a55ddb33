#include "clockwork/kinetics.hpp"

#include <cmath>
#include <stdexcept>

namespace clockwork {

Derivatives3 rhs_full(const DimensionalState& state, const RateConstants& rates) {
    const double removal = rates.k1 * state.b * state.c;
    const double production = rates.k0 * state.a * state.a;
    return {2.0 * removal - 2.0 * production, -removal + production, -removal};
}

Derivatives2 rhs_reduced(double b, double c, double m0, const RateConstants& rates) {
    const double a = m0 - 2.0 * b;
    const double removal = rates.k1 * b * c;
    const double production = rates.k0 * a * a;
    return {-removal + production, -removal};
}

DimlessRates rhs_dimensionless(const DimlessState& state, const DimensionlessGroups& groups) {
    const double iodide = 1.0 - 2.0 * state.beta;
    const double removal = state.beta * state.gamma;
    return {-removal + groups.eps * groups.rho * iodide * iodide, -groups.rho * removal};
}

Jacobian2 jacobian_dimensionless(const DimlessState& state, const DimensionlessGroups& groups) {
    const double iodide = 1.0 - 2.0 * state.beta;
    return {
        -state.gamma - 4.0 * groups.eps * groups.rho * iodide,
        -state.beta,
        -groups.rho * state.gamma,
        -groups.rho * state.beta,
    };
}

DimensionlessGroups derive_groups(const RateConstants& rates, const InitialConcentrations& init) {
    const double m0 = init.m0();
    return DimensionlessGroups(rates.k0 / rates.k1, m0 / init.c0, init.b0 / m0);
}

Scales derive_scales(const RateConstants& rates, const InitialConcentrations& init) {
    return {1.0 / (rates.k1 * init.c0), init.m0(), init.c0};
}

DimlessState nondimensionalise(const DimensionalState& state, const RateConstants& rates,
                               const InitialConcentrations& init) {
    const Scales s = derive_scales(rates, init);
    return {state.t / s.time, state.b / s.iodine, state.c / s.inhibitor};
}

DimensionalState redimensionalise(const DimlessState& state, const RateConstants& rates,
                                  const InitialConcentrations& init) {
    const Scales s = derive_scales(rates, init);
    const double b = s.iodine * state.beta;
    return {state.tau * s.time, s.iodine - 2.0 * b, b, s.inhibitor * state.gamma};
}

namespace {

// Eigen decomposition of a 2x2 matrix with real spectrum.  Eigenvectors come
// from the row of (J - lambda I) with the larger norm; if the matrix is
// already diagonal in a coordinate the unit vector is returned.
EigenPair eigen_pair(const Jacobian2& j, double lambda) {
    const double r1[2] = {j.a11 - lambda, j.a12};
    const double r2[2] = {j.a21, j.a22 - lambda};
    const double n1 = std::abs(r1[0]) + std::abs(r1[1]);
    const double n2 = std::abs(r2[0]) + std::abs(r2[1]);
    const double* row = (n1 >= n2) ? r1 : r2;
    std::array<double, 2> v{};
    if (std::abs(row[0]) + std::abs(row[1]) == 0.0) {
        v = {1.0, 0.0};
    } else {
        v = {-row[1], row[0]};  // orthogonal to the chosen row
    }
    // Scale so the first nonzero component is 1.
    const double pivot = (std::abs(v[0]) > 0.0) ? v[0] : v[1];
    v[0] /= pivot;
    v[1] /= pivot;
    return {lambda, v};
}

}  // namespace

EquilibriumAnalysis equilibrium_analysis(const DimensionlessGroups& groups) {
    if (!(groups.rho > 0.0)) {
        throw std::invalid_argument("equilibrium_analysis: rho must be positive");
    }
    const Jacobian2 j = jacobian_dimensionless({0.0, 0.5, 0.0}, groups);
    const double tr = j.a11 + j.a22;
    const double det = j.a11 * j.a22 - j.a12 * j.a21;
    const double disc = std::sqrt(tr * tr - 4.0 * det);
    const double l1 = 0.5 * (tr + disc);
    const double l2 = 0.5 * (tr - disc);
    // Larger eigenvalue is the zero one (tr = -rho/2 < 0, det = 0).
    return {eigen_pair(j, l1), eigen_pair(j, l2)};
}

double quasi_steady_beta(double gamma, const DimensionlessGroups& groups) {
    if (gamma < 0.0) {
        throw std::domain_error("quasi_steady_beta: gamma must be non-negative");
    }
    const double er = groups.eps * groups.rho;
    // 4 er beta^2 - (gamma + 4 er) beta + er = 0; smaller root via the
    // product-of-roots form, which stays accurate when gamma >> eps.
    const double b = gamma + 4.0 * er;
    const double disc = b * b - 16.0 * er * er;
    return 2.0 * er / (b + std::sqrt(disc));
}

}  // namespace clockwork
