#pragma once

#include <complex>
#include <optional>

#include "galdec/wavefunction.hpp"

namespace galdec {

/// Free Gaussian wave packet: minimum-uncertainty state of width d launched
/// from `center` with velocity v at t = 0.
struct GaussianPacketSpec {
    double mass;    // [kg]
    double v;       // velocity parameter [m/s]
    double d;       // initial width [m]
    double center;  // [m]
};

/// Closed-form value of the free packet at coordinate r and time t.
std::complex<double> gaussian_packet_value(const GaussianPacketSpec& spec, double r, double t,
                                           double hbar);

/// Position standard deviation sqrt(d^2 + t^2 hbar^2 / 4 d^2 m^2).
double packet_width(const GaussianPacketSpec& spec, double t, double hbar);

/// Sample the packet on a grid (position rep, normalized on the grid).
WaveFunction sample_packet(const GaussianPacketSpec& spec, const Grid1D& grid, double t,
                           double hbar);

/// Hamiltonian for the split-step integrator: free, or free plus a narrow
/// Gaussian barrier (width = one grid step, area = strength) standing in for
/// a repulsive delta potential.
struct DeltaWall {
    double strength;  // [J m]
    double position;  // [m]
};

/// Strang-split FFT propagation over time t in `steps` equal steps.
/// Throws std::domain_error if the grid under-resolves the packet
/// (< 16 points per width) or the per-step phase at the occupied
/// bandwidth exceeds pi/4.
WaveFunction split_step_propagate(const WaveFunction& psi, const std::optional<DeltaWall>& wall,
                                  double t, int steps);

/// Center-of-mass / relative coordinates.
struct CmRel {
    double X;  // (m1 x1 + m2 x2) / (m1 + m2)
    double x;  // x1 - x2
};
CmRel cm_relative(double x1, double x2, double m1, double m2);
std::pair<double, double> cm_relative_inverse(const CmRel& c, double m1, double m2);

}  // namespace galdec
