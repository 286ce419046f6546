#pragma once

#include <complex>
#include <vector>

#include "galdec/config.hpp"
#include "galdec/density_kernel.hpp"
#include "galdec/gaussian_kernel2d.hpp"

namespace galdec {

/// Squeezed coherent state |x0, v0> of position width sigma_x;
/// velocity width sigma_u = hbar / (2 m sigma_x) is implied.
struct CoherentLabel {
    double x0;       // [m]
    double v0;       // [m/s]
    double sigma_x;  // [m]
    double mass;     // [kg]
    double hbar;     // [J s]

    double sigma_u() const { return hbar / (2.0 * mass * sigma_x); }
};

/// <x|Omega> = (2 pi sigma_x^2)^{-1/4} exp(-(x-x0)^2/4 sigma_x^2) exp(i m v0 x / hbar),
/// sampled and renormalized on the grid. Throws std::domain_error when the
/// grid under-resolves sigma_x or clips the 6-sigma support.
WaveFunction coherent_wavefunction(const CoherentLabel& l, const Grid1D& grid);

/// Closed-form <Omega1|Omega2>; labels must share sigma_x, mass, hbar.
std::complex<double> coherent_overlap(const CoherentLabel& l1, const CoherentLabel& l2);

/// <Omega'|W|Omega> = step^2 * bra^H W ket by double quadrature
/// (l1 is the bra, l2 the ket). W is converted to position rep if needed.
std::complex<double> overlap_kernel(const DensityKernel& W, const CoherentLabel& l1,
                                    const CoherentLabel& l2);

/// Rigorous per-axis bound on |<Omega'|W''|Omega>| after the boost channel,
/// from |W''(x,y)| <= w_sup exp(-(x-y)^2 / 2 (sigma_x/m_sf)^2):
///   2 sqrt(2 pi) sigma_x / sqrt(1+4 m_sf^2)
///     * exp(-m_sf^2 eta0^2 / (2 (1+4 m_sf^2) sigma_x^2)) * w_sup.
/// eta0 is the position offset between the labels. 3D value = product of axes.
double a1_upper_bound(double m_sf, double sigma_x, double eta0, double w_sup);

struct MixtureResult {
    DensityKernel kernel;    // trace-renormalized
    double trace_deviation;  // |trace - 1| before renormalization
};

/// Husimi smoothing W~ = Int |Omega><Omega|W|Omega><Omega| dOmega over a
/// coherent-state lattice (spacing sigma_x/2 by sigma_u/2, measure
/// m dx0 dv0 / 2 pi hbar). sigma_x, sigma_u from cfg at the kernel's mass.
/// Throws std::domain_error when the lattice leaves a trace error > 1e-3.
MixtureResult mixture_of_coherent_states(const DensityKernel& W, const GalileanConfig& cfg);

/// Exact image T_B T_S (|Omega_mu><Omega_nu|) as a Gaussian kernel in
/// position rep; duration and rates from cfg. Labels must share sigma_x,
/// mass, hbar.
GaussianKernel2D pointer_dyad_after_channels(const CoherentLabel& l_mu,
                                             const CoherentLabel& l_nu,
                                             const GalileanConfig& cfg);

struct BranchSpec {
    double weight;  // c_mu > 0, sum of squares = 1
    CoherentLabel label;
};

struct MeasurementVerdict {
    DensityKernel mixture;               // sum c_mu^2 * channels(|Omega_mu><Omega_mu|)
    DensityKernel evolved;               // channels of the full superposition kernel
    double max_offdiag_residual;         // max over mu != nu of sup|dyad| / sup|diagonal|
    bool proper_mixture;                 // residual <= 1e-6
    std::vector<double> recovered_weights;  // normalized Husimi diagonal of `evolved`
};

/// Pointer factor of a branching measurement: superposition
/// sum c_mu |Omega_mu> pushed through the channels. Branch labels must be
/// pairwise macroscopically distinct (|dx| >= 10 sigma_x or |dv| >= 10 sigma_u);
/// violations throw naming the offending pair. The residual is computed from
/// the exact Gaussian dyads, so it is meaningful far below grid precision.
MeasurementVerdict measurement_mixture(const std::vector<BranchSpec>& branches,
                                       const GalileanConfig& cfg, const Grid1D& grid);

}  // namespace galdec
