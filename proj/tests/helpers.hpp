#pragma once

#include <complex>
#include <random>

#include "galdec/channels.hpp"
#include "galdec/coherent.hpp"
#include "galdec/density_kernel.hpp"

namespace galdec::test {

// Natural units: hbar = 1, mass = 1, sigma_x = 1, sigma_u = 1/2, tau = 1/2.
inline GalileanConfig natural_config(double delta_t = 0.5) {
    return GalileanConfig{1.0, 2.0, 0.5, delta_t};
}
inline constexpr double kMass = 1.0;
inline constexpr double kTau = 0.5;
inline constexpr double kSigmaX = 1.0;
inline constexpr double kSigmaU = 0.5;

inline Grid1D default_grid() { return make_centered_grid(256, 12.0); }

// Random normalized superposition of 2-4 coherent components within the
// grid's comfortable support.
inline WaveFunction random_pure_state(std::mt19937_64& rng, const Grid1D& grid) {
    std::uniform_int_distribution<int> ncomp(2, 4);
    std::uniform_real_distribution<double> pos(-5.0, 5.0), vel(-2.0, 2.0), amp(0.3, 1.0),
        phase(0.0, 6.283185307179586);
    WaveFunction psi;
    psi.rep = Rep::Position;
    psi.grid = grid;
    psi.mass = kMass;
    psi.hbar = 1.0;
    psi.data = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid.n));
    const int k = ncomp(rng);
    for (int c = 0; c < k; ++c) {
        const CoherentLabel l{pos(rng), vel(rng), kSigmaX, kMass, 1.0};
        const auto comp = coherent_wavefunction(l, grid);
        psi.data += amp(rng) * std::exp(std::complex<double>(0.0, phase(rng))) * comp.data;
    }
    psi.normalize();
    return psi;
}

inline DensityKernel random_kernel(std::mt19937_64& rng, const Grid1D& grid, bool mixed) {
    const DensityKernel a = kernel_from_wavefunction(random_pure_state(rng, grid));
    if (!mixed) return a;
    const DensityKernel b = kernel_from_wavefunction(random_pure_state(rng, grid));
    std::uniform_real_distribution<double> wdist(0.2, 0.8);
    const double w = wdist(rng);
    return mix({{w, &a}, {1.0 - w, &b}});
}

inline double frobenius(const DensityKernel& k) { return k.grid.step() * k.data.norm(); }

inline double rel_frobenius_diff(const DensityKernel& a, const DensityKernel& b) {
    return (a.data - b.data).norm() / b.data.norm();
}

}  // namespace galdec::test
