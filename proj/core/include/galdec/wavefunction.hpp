#pragma once

#include <Eigen/Dense>
#include <complex>

#include "galdec/grid.hpp"

namespace galdec {

struct WaveFunction {
    Rep rep = Rep::Position;
    Grid1D grid;
    // Companion grid of the other representation; filled by the transforms so
    // that a round trip lands on the original (possibly off-center) grid.
    Grid1D dual;
    double mass = 0.0;
    double hbar = 0.0;
    Eigen::VectorXcd data;

    double norm_squared() const { return grid.step() * data.squaredNorm(); }
    void normalize();
};

/// Throws std::domain_error if the norm deviates from 1 by more than 1e-10
/// or grid/mass are invalid.
void validate(const WaveFunction& psi);

WaveFunction to_velocity_rep(const WaveFunction& psi);
WaveFunction to_position_rep(const WaveFunction& psi);

double mean(const WaveFunction& psi);
double std_dev(const WaveFunction& psi);

/// <a|b> = step * sum conj(a_i) b_i; grids must match.
std::complex<double> inner(const WaveFunction& a, const WaveFunction& b);

}  // namespace galdec
