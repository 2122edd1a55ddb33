#include "clockwork/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace clockwork::asymptotics {

namespace {

constexpr double kSqrtHalfPi = 1.2533141373155003;  // sqrt(pi/2)

// exp(-z^2) / erfc(-z).  Direct evaluation underflows to 0/0 once
// z < -27 or so; beyond that use the erfc asymptotic series
// erfc(w) = exp(-w^2)/(w sqrt(pi)) * S(w), giving the ratio w sqrt(pi)/S.
double corner_ratio(double z) {
    if (z > -25.0) {
        return std::exp(-z * z) / std::erfc(-z);
    }
    const double w = -z;
    const double iw2 = 1.0 / (w * w);
    const double s =
        1.0 + iw2 * (-0.5 + iw2 * (0.75 + iw2 * (-1.875 + iw2 * 6.5625)));
    return w * std::sqrt(M_PI) / s;
}

}  // namespace

const char* to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::I: return "I";
        case RegionLabel::II: return "II";
        case RegionLabel::III: return "III";
        case RegionLabel::IV: return "IV";
    }
    return "?";
}

MatchingConstants matching_constants(const DimensionlessGroups& groups) {
    return {1.0 - groups.rho * groups.phi, 1.0 + 2.0 * groups.phi - 2.0 / groups.rho, 0.0, 1.0};
}

PhasePoint region1(double tau, const DimensionlessGroups& groups) {
    const double rp = groups.rho * groups.phi;
    if (rp >= 1.0) {
        throw std::domain_error("region1: requires rho*phi < 1");
    }
    const double e = std::exp((rp - 1.0) * tau);
    const double beta = groups.phi * (1.0 - rp) * e / (1.0 - rp * e);
    return {beta, groups.rho * beta + 1.0 - rp};
}

PhasePoint region2(double tau, const DimensionlessGroups& groups) {
    const double gamma = 1.0 - groups.rho * groups.phi -
                         groups.rho * groups.rho * groups.eps * tau;
    if (gamma <= 0.0) {
        throw std::domain_error("region2: tau at or beyond the induction blow-up time");
    }
    return {groups.eps * groups.rho / gamma, gamma};
}

PhasePoint region3(double tau, const DimensionlessGroups& groups) {
    const double x = groups.rho * groups.eps * tau - (1.0 / groups.rho - groups.phi);
    const double z = x / std::sqrt(2.0 * groups.eps);
    const double bump = std::sqrt(groups.eps) * corner_ratio(z) / kSqrtHalfPi;
    return {bump + x, groups.rho * bump};
}

PhasePoint region4(double tau, const DimensionlessGroups& groups) {
    const double den =
        1.0 + 2.0 * (groups.phi - 1.0 / groups.rho + groups.rho * groups.eps * tau);
    if (den <= 0.0) {
        throw std::domain_error("region4: denominator not positive before switchover");
    }
    return {0.5 - 0.5 / den, 0.0};
}

RegionLabel classify_region(double tau, const DimensionlessGroups& groups,
                            const RegionConfig& config) {
    if (tau < 0.0) {
        throw std::domain_error("classify_region: tau must be non-negative");
    }
    const double rp = groups.rho * groups.phi;
    if (rp >= 1.0) {
        throw std::domain_error("classify_region: requires rho*phi < 1");
    }
    const double t_init = (config.t_init > 0.0) ? config.t_init : 10.0 / (1.0 - rp);
    if (tau <= t_init) {
        return RegionLabel::I;
    }
    const double tau_sw = switchover_time_dimless(groups);
    const double half_width = config.corner_width / (groups.rho * std::sqrt(groups.eps));
    if (std::abs(tau - tau_sw) <= half_width) {
        return RegionLabel::III;
    }
    return (tau < tau_sw) ? RegionLabel::II : RegionLabel::IV;
}

CompositePoint composite_eval(double tau, const DimensionlessGroups& groups,
                              const RegionConfig& config) {
    const RegionLabel label = classify_region(tau, groups, config);
    PhasePoint p{};
    switch (label) {
        case RegionLabel::I: p = region1(tau, groups); break;
        case RegionLabel::II: p = region2(tau, groups); break;
        case RegionLabel::III: p = region3(tau, groups); break;
        case RegionLabel::IV: p = region4(tau, groups); break;
    }
    return {label, p.beta, p.gamma};
}

AsymptoticSolution solution_at(double tau, const DimensionlessGroups& groups,
                               const RegionConfig& config) {
    return {classify_region(tau, groups, config), groups, matching_constants(groups)};
}

double switchover_time(const RateConstants& rates, const InitialConcentrations& init) {
    // phi*m0 collapses exactly to b0.
    if (init.c0 < init.b0) {
        throw std::domain_error("switchover_time: c0 < b0, the clock never resets");
    }
    const double m0 = init.m0();
    return (init.c0 - init.b0) / (m0 * m0 * rates.k0);
}

double switchover_time_dimless(const DimensionlessGroups& groups) {
    if (groups.rho * groups.phi > 1.0) {
        throw std::domain_error("switchover_time_dimless: requires rho*phi <= 1");
    }
    const double inv_rho = 1.0 / groups.rho;
    return (inv_rho * inv_rho - inv_rho * groups.phi) / groups.eps;
}

}  // namespace clockwork::asymptotics
