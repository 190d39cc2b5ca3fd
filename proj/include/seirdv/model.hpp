#ifndef SEIRDV_MODEL_HPP
#define SEIRDV_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace seirdv {

/// Abundances of the seven compartments at one instant.
///
/// The system is closed: the flow field conserves S+E+I+R_E+R_I+D+V.
/// Abundances are real-valued means, not integer counts.
struct CompartmentState {
    double S = 0.0;   ///< susceptible
    double E = 0.0;   ///< exposed (asymptomatic)
    double I = 0.0;   ///< actively infected
    double R_E = 0.0; ///< recovered directly from exposure (latent)
    double R_I = 0.0; ///< recovered after infection (cumulative)
    double D = 0.0;   ///< deaths (cumulative)
    double V = 0.0;   ///< vaccinated

    static constexpr int n_compartments = 7;

    double total() const { return S + E + I + R_E + R_I + D + V; }

    double& operator[](int i);
    double operator[](int i) const;

    /// Compartment symbol for CSV headers and diagnostics ("S", "E", ...).
    static const char* label(int i);
};

/// One point in parameter space: every rate of the switched system.
///
/// alpha and gamma hold one value per regime; which entry applies at a
/// given time is decided by an InterventionSchedule.
struct ParameterSet {
    std::vector<double> alpha; ///< S->E transmission rate per regime (day^-1 individual^-1)
    double beta_star = 0.0;    ///< impulse magnitude at day tau (dimensionless)
    double beta = 0.0;         ///< E->I progression rate (day^-1)
    std::vector<double> gamma; ///< recovery rate per regime, shared by E->R_E and I->R_I (day^-1)
    double zeta = 0.0;         ///< I->D mortality rate (day^-1)
    double rho = 0.0;          ///< vaccination rate once active (day^-1)

    std::size_t count() const { return alpha.size() + gamma.size() + 4; }

    /// Canonical flat order: alpha0.., beta_star, beta, gamma0.., zeta, rho.
    std::vector<double> flatten() const;
    static ParameterSet unflatten(const std::vector<double>& values,
                                  std::size_t n_alpha, std::size_t n_gamma);

    /// Column names in flat order (alpha0, ..., beta_star, beta, gamma0, ..., zeta, rho).
    std::vector<std::string> names() const;
};

/// Change-point days for the switched rates plus the impulse day and the
/// vaccination activation day. All days are integers on the observation grid.
struct InterventionSchedule {
    std::vector<int> alpha_days; ///< strictly increasing days t_1..t_m
    std::vector<int> gamma_days; ///< strictly increasing, at most as many as alpha_days
    int tau = -1;                ///< impulse day; outside [0, t_end] disables the impulse
    int t_vaccine = 0;           ///< T_V: rho is 0 before this day, params.rho from it on

    /// Throws ConfigError when the invariants above are violated
    /// or the regime counts disagree with a parameter set.
    void validate(const ParameterSet& params) const;
};

/// Transmission rate in force at time t.
///
/// A change placed at day t_m takes effect strictly after t_m: the returned
/// regime index is the number of change days < t, so the rate is constant
/// on each interval (t_m, t_{m+1}].
double alpha_at(double t, const ParameterSet& params, const InterventionSchedule& sched);

/// Recovery rate in force at time t; same convention as alpha_at.
double gamma_at(double t, const ParameterSet& params, const InterventionSchedule& sched);

/// Vaccination rate in force at time t: 0 before t_vaccine, params.rho from it on.
double rho_at(double t, const ParameterSet& params, const InterventionSchedule& sched);

/// Flow field with the switched rates already resolved to constants.
/// The impulse term is not part of the flow; see apply_impulse.
CompartmentState rhs_rates(const CompartmentState& x, double alpha, double gamma,
                           double rho, double beta, double zeta);

/// Flow field at time t (resolves alpha/gamma/rho through the schedule).
CompartmentState rhs(double t, const CompartmentState& x, const ParameterSet& params,
                     const InterventionSchedule& sched);

/// Instantaneous E->I transfer of the Dirac impulse.
///
/// Integrating dE/dt = -beta_star * E * delta(t - tau) across the impulse
/// gives E -> E * exp(-beta_star) exactly, so the transferred mass is
/// E * (1 - exp(-beta_star)). This keeps E >= 0 for any beta_star >= 0 and
/// moves the mass to I, leaving the total population unchanged.
CompartmentState apply_impulse(const CompartmentState& x, double beta_star);

} // namespace seirdv

#endif
