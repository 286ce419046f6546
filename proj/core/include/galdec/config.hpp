#pragma once

#include <string>

namespace galdec {

// CODATA reduced Planck constant. The config's hbar slot is a free field;
// the shipped Stern-Gerlach scenario puts Planck's h here instead (see
// PLANCK_H and SgReport).
inline constexpr double HBAR_SI = 1.054571817e-34;   // J s
inline constexpr double PLANCK_H = 6.62607015e-34;   // J s

/// Global fluctuation parameters of the modified theory.
struct GalileanConfig {
    double hbar;     // action slot [J s]
    double alpha;    // spatial-fluctuation rate [m^2/s]
    double beta;     // boost-fluctuation rate [m^2/s^3]
    double delta_t;  // process duration [s]
};

/// Throws std::domain_error unless all fields are strictly positive.
void validate(const GalileanConfig& cfg);

/// Closed-form scales of the theory for a given mass and duration.
struct DerivedQuantities {
    double tau;        // maximal decoherence time [s]
    double sigma_x;    // coherent-state position width [m]
    double sigma_u;    // coherent-state velocity width [m/s]
    double delta_eta;  // position damping width at delta_t [m]
    double delta_mu;   // velocity damping width at delta_t [m/s]
    double m_sf;       // dimensionless decoherence parameter
};

// tau       = hbar / (2 m sqrt(alpha beta))
// sigma_x   = (alpha/beta)^(1/4) sqrt(hbar / 2m)
// sigma_u   = (beta/alpha)^(1/4) sqrt(hbar / 2m)
// delta_eta = hbar / (m sqrt(beta dt)),  delta_mu = hbar / (m sqrt(alpha dt))
// m_sf      = sigma_x / delta_eta = sqrt(m dt / 2 hbar) (alpha beta)^(1/4)
DerivedQuantities derive_quantities(const GalileanConfig& cfg, double mass, double delta_t);

inline DerivedQuantities derive_quantities(const GalileanConfig& cfg, double mass) {
    return derive_quantities(cfg, mass, cfg.delta_t);
}

/// Classical-regime criterion: m_sf >= 1/2.
bool decoherence_condition(const DerivedQuantities& dq);

/// Wave-packet dissipation time 2 d^2 m / hbar.
double dissipation_time(double mass, double d, double hbar);

/// Inputs of the simplified Stern-Gerlach measurement scenario.
struct SternGerlachScenario {
    double m1;           // silver atom mass [kg]
    double m2;           // pointer mass [kg]
    double u;            // horizontal beam speed [m/s]
    double L;            // magnet length [m]
    double dBdz;         // field gradient [T/m]
    double mu_B;         // magnetic moment [J/T]
    double A;            // flight distance to pointer [m]
    double d1;           // silver-atom packet width [m]
    double v0_strength;  // delta-potential strength [J m]
    double C;            // vertical screen coordinate [m]; derived when <= 0

    // d2 is never an input.
    double d2() const;
};

void validate(const SternGerlachScenario& s);

/// End-to-end consistency report for the scenario.
struct SgReport {
    double v;             // vertical speed acquired in the magnet [m/s]
    double t1;            // time of flight through the magnet, L/u [s]
    double t3;            // collision time 2A/u [s]
    double d2;            // pointer width from the equal-dissipation rule [m]
    double delta_z;       // vertical beam separation at the screen [m]
    double delta_x;       // pointer displacement over delta_t (u-based) [m]
    double delta_x_v;     // v-based variant of the pointer displacement [m]
    double delta_eta;     // pointer damping width at delta_t = tau [m]
    double delta_eta1;    // silver-atom damping width at delta_t [m]
    double t_diss_atom;   // 2 d1^2 m1 / hbar [s]
    double t_diss_pointer;// 2 d2^2 m2 / hbar [s]
    double theta;         // delta_t * hbar / (d2^2 m2), pointer spread parameter

    // Condition flags with the factors they were decided on.
    bool macdis_ok;       double macdis_factor;    // delta_x / d2 >= 10
    bool thetall_ok;      double thetall_factor;   // delta_t / t_diss_pointer <= 1/10
    bool dissneg_ok;      double dissneg_factor;   // t3 / t_diss_atom <= 1/10
    bool beam_sep_ok;     double beam_overlap;     // Gaussian overlap of the
                                                   // down-beam with the pointer < 1e-8

    bool all_ok() const { return macdis_ok && thetall_ok && dissneg_ok && beam_sep_ok; }
};

SgReport sg_derived_numbers(const SternGerlachScenario& s, const GalileanConfig& cfg);

}  // namespace galdec
