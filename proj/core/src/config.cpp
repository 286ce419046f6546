#include "galdec/config.hpp"

#include <cmath>
#include <stdexcept>

namespace galdec {

namespace {
void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error(std::string(name) + " must be strictly positive");
}
}  // namespace

void validate(const GalileanConfig& cfg) {
    require_positive(cfg.hbar, "hbar");
    require_positive(cfg.alpha, "alpha");
    require_positive(cfg.beta, "beta");
    require_positive(cfg.delta_t, "delta_t");
}

DerivedQuantities derive_quantities(const GalileanConfig& cfg, double mass, double delta_t) {
    require_positive(cfg.hbar, "hbar");
    require_positive(cfg.alpha, "alpha");
    require_positive(cfg.beta, "beta");
    require_positive(mass, "mass");
    require_positive(delta_t, "delta_t");

    DerivedQuantities dq;
    dq.tau = cfg.hbar / (2.0 * mass * std::sqrt(cfg.alpha * cfg.beta));
    dq.sigma_x = std::pow(cfg.alpha / cfg.beta, 0.25) * std::sqrt(cfg.hbar / (2.0 * mass));
    dq.sigma_u = std::pow(cfg.beta / cfg.alpha, 0.25) * std::sqrt(cfg.hbar / (2.0 * mass));
    dq.delta_eta = cfg.hbar / (mass * std::sqrt(cfg.beta * delta_t));
    dq.delta_mu = cfg.hbar / (mass * std::sqrt(cfg.alpha * delta_t));
    dq.m_sf = std::sqrt(mass * delta_t / (2.0 * cfg.hbar)) * std::pow(cfg.alpha * cfg.beta, 0.25);
    return dq;
}

bool decoherence_condition(const DerivedQuantities& dq) {
    return dq.m_sf >= 0.5;
}

double dissipation_time(double mass, double d, double hbar) {
    require_positive(mass, "mass");
    require_positive(hbar, "hbar");
    if (d < 0.0) throw std::domain_error("width must be non-negative");
    return 2.0 * d * d * mass / hbar;
}

double SternGerlachScenario::d2() const {
    return d1 * std::sqrt(m1 / m2);
}

void validate(const SternGerlachScenario& s) {
    require_positive(s.m1, "m1");
    require_positive(s.m2, "m2");
    require_positive(s.u, "u");
    require_positive(s.L, "L");
    require_positive(s.mu_B, "mu_B");
    require_positive(s.A, "A");
    require_positive(s.d1, "d1");
    require_positive(s.v0_strength, "v0_strength");
    if (s.dBdz < 0.0) throw std::domain_error("dBdz must be non-negative");
    if (!(s.m1 < s.m2)) throw std::domain_error("pointer must be heavier than the atom (m1 < m2)");
}

SgReport sg_derived_numbers(const SternGerlachScenario& s, const GalileanConfig& cfg) {
    validate(s);
    validate(cfg);

    SgReport r{};
    r.d2 = s.d2();
    r.t1 = s.L / s.u;
    r.v = s.dBdz * s.mu_B * r.t1 / s.m1;
    r.t3 = 2.0 * s.A / s.u;
    r.delta_z = 2.0 * r.t3 * r.v;

    const double M = s.m1 + s.m2;
    r.delta_x = 2.0 * s.m1 * s.u * cfg.delta_t / M;
    r.delta_x_v = 2.0 * s.m1 * r.v * cfg.delta_t / M;

    const DerivedQuantities dq2 = derive_quantities(cfg, s.m2, cfg.delta_t);
    r.delta_eta = cfg.hbar / (s.m2 * std::sqrt(cfg.beta * dq2.tau));
    r.delta_eta1 = cfg.hbar / (s.m1 * std::sqrt(cfg.beta * cfg.delta_t));

    r.t_diss_atom = dissipation_time(s.m1, s.d1, cfg.hbar);
    r.t_diss_pointer = dissipation_time(s.m2, r.d2, cfg.hbar);
    r.theta = cfg.delta_t * cfg.hbar / (r.d2 * r.d2 * s.m2);

    r.macdis_factor = r.delta_x / r.d2;
    r.macdis_ok = r.macdis_factor >= 10.0;
    r.thetall_factor = cfg.delta_t / r.t_diss_pointer;
    r.thetall_ok = r.thetall_factor <= 0.1;
    r.dissneg_factor = r.t3 / r.t_diss_atom;
    r.dissneg_ok = r.dissneg_factor <= 0.1;

    // Beam separation: the down-deflected atom (width d1) must miss the
    // pointer (width d2) sitting a distance delta_z away. Gaussian overlap
    // criterion, matching the no-initial-overlap rule of the collision setup.
    const double s2 = s.d1 * s.d1 + r.d2 * r.d2;
    r.beam_overlap = std::exp(-r.delta_z * r.delta_z / (4.0 * s2));
    r.beam_sep_ok = r.beam_overlap < 1e-8;

    return r;
}

}  // namespace galdec
