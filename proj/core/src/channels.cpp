#include "galdec/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace galdec {

void validate(const ChannelParams& p) {
    if (!(p.rate > 0.0) || !(p.mass > 0.0) || !(p.hbar > 0.0))
        throw std::domain_error("channel rate, mass and hbar must be positive");
    if (p.delta_t < 0.0) throw std::domain_error("channel duration must be non-negative");
}

double damping_profile(const ChannelParams& p, double separation) {
    validate(p);
    if (separation < 0.0) throw std::domain_error("separation must be non-negative");
    const double c = p.mass * p.mass * p.rate * p.delta_t / (2.0 * p.hbar * p.hbar);
    return std::exp(-c * separation * separation);
}

namespace {

// Multiply entry (i,j) by exp(-c (g_i - g_j)^2) in the kernel's current rep.
void apply_diff_multiplier(DensityKernel& k, double c) {
    const auto n = static_cast<Eigen::Index>(k.grid.n);
    const double step = k.grid.step();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sep = step * static_cast<double>(i - j);
            k.data(i, j) *= std::exp(-c * sep * sep);
        }
    }
}

DensityKernel apply_in_rep(const DensityKernel& k, const ChannelParams& p, Rep natural) {
    validate(p);
    const double c = p.mass * p.mass * p.rate * p.delta_t / (2.0 * p.hbar * p.hbar);
    if (k.rep == natural) {
        DensityKernel out = k;
        apply_diff_multiplier(out, c);
        return out;
    }
    DensityKernel converted = natural == Rep::Velocity ? to_velocity_rep(k) : to_position_rep(k);
    apply_diff_multiplier(converted, c);
    return natural == Rep::Velocity ? to_position_rep(converted) : to_velocity_rep(converted);
}

}  // namespace

DensityKernel apply_translation_channel(const DensityKernel& k, const ChannelParams& p) {
    return apply_in_rep(k, p, Rep::Velocity);
}

DensityKernel apply_boost_channel(const DensityKernel& k, const ChannelParams& p) {
    return apply_in_rep(k, p, Rep::Position);
}

DensityKernel apply_galilean_decoherence(const DensityKernel& k, const GalileanConfig& cfg) {
    if (cfg.delta_t == 0.0) return k;
    validate(cfg);
    const ChannelParams ts{cfg.alpha, cfg.delta_t, k.mass, k.hbar};
    const ChannelParams tb{cfg.beta, cfg.delta_t, k.mass, k.hbar};
    return apply_boost_channel(apply_translation_channel(k, ts), tb);
}

}  // namespace galdec
