#pragma once

#include <Eigen/Dense>
#include <complex>

#include "galdec/grid.hpp"
#include "galdec/wavefunction.hpp"

namespace galdec {

/// Discretized integral kernel W(x,y) or W(v,w) of a statistical operator;
/// entry (i,j) = W(g_i, g_j), normalized so that step * trace(data) = 1.
struct DensityKernel {
    Rep rep = Rep::Position;
    Grid1D grid;
    Grid1D dual;  // companion grid, see WaveFunction::dual
    double mass = 0.0;
    double hbar = 0.0;
    Eigen::MatrixXcd data;
    bool aliasing_warning = false;

    std::size_t n() const { return grid.n; }
};

/// Hermiticity / unit trace checks; positivity (O(n^3)) only when strict or
/// n <= 512. Throws std::domain_error on violation.
void validate(const DensityKernel& k, bool strict = false);

/// Rank-one kernel psi(i) conj(psi(j)) from a normalized wave function.
DensityKernel kernel_from_wavefunction(const WaveFunction& psi);

DensityKernel to_velocity_rep(const DensityKernel& k);
DensityKernel to_position_rep(const DensityKernel& k);

double trace(const DensityKernel& k);
double purity(const DensityKernel& k);
double von_neumann_entropy(const DensityKernel& k);
double sup_abs(const DensityKernel& k);

/// Eigenvalues of step * data, ascending.
Eigen::VectorXd spectrum(const DensityKernel& k);

/// Convex combination sum_i w_i k_i; kernels must share grid/rep/mass.
DensityKernel mix(const std::vector<std::pair<double, const DensityKernel*>>& parts);

}  // namespace galdec
