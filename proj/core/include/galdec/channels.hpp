#pragma once

#include "galdec/config.hpp"
#include "galdec/density_kernel.hpp"

namespace galdec {

/// One averaged Galilean fluctuation channel (rate = alpha for translations,
/// beta for boosts).
struct ChannelParams {
    double rate;     // alpha [m^2/s] or beta [m^2/s^3]
    double delta_t;  // [s]
    double mass;     // [kg]
    double hbar;     // [J s]
};

void validate(const ChannelParams& p);

/// Gaussian damping multiplier exp(-m^2 rate dt sep^2 / 2 hbar^2)
/// = exp(-sep^2 / (2 width^2)) with width = hbar / (m sqrt(rate dt)).
double damping_profile(const ChannelParams& p, double separation);

/// T_S: W(v,w) -> exp(-m^2 alpha dt (v-w)^2 / 2 hbar^2) W(v,w).
/// Kernels in position rep are converted, multiplied, and converted back.
DensityKernel apply_translation_channel(const DensityKernel& k, const ChannelParams& p);

/// T_B: W(x,y) -> exp(-m^2 beta dt (x-y)^2 / 2 hbar^2) W(x,y).
DensityKernel apply_boost_channel(const DensityKernel& k, const ChannelParams& p);

/// T_B T_S with the rates taken from cfg; delta_t = cfg.delta_t.
DensityKernel apply_galilean_decoherence(const DensityKernel& k, const GalileanConfig& cfg);

}  // namespace galdec
