#pragma once

#include <string>
#include <vector>

#include "galdec/packet.hpp"

namespace galdec {

/// Elastic 1D collision of a light atom with a heavy pointer through a
/// repulsive delta potential at contact.
struct CollisionSetup {
    GaussianPacketSpec atom;     // mass m1, speed v, width d1, center 0
    GaussianPacketSpec pointer;  // mass m2, speed 0, width d2 = d1 sqrt(m1/m2), center A
    double v0_strength;          // [J m], >= 100 hbar v
    double hbar;

    double t3() const { return 2.0 * pointer.center / atom.v; }
    double theta(double t) const;  // t hbar / (d2^2 m2)
};

/// Checks the equal-dissipation width rule, initial overlap < 1e-8 and
/// v0_strength >= 100 hbar v. Throws std::domain_error with the violated
/// condition, reporting the factorization residual when the width rule fails.
void validate(const CollisionSetup& s);

/// Cross-term residual of the CM/relative factorization; zero iff
/// d2 = d1 sqrt(m1/m2).
double factorization_residual(const CollisionSetup& s);

struct CollisionResult {
    GaussianPacketSpec atom_out;     // reflected atom: velocity (m1-m2)v/M
    GaussianPacketSpec pointer_out;  // velocity 2 m1 v / M
    double x0;                       // pointer coherent-state center at time t
    double v0;                       // pointer coherent-state velocity
};

/// Closed-form post-collision factors at t >= t3 (perfect-mirror solution of
/// the relative motion, refactorized into single-particle packets).
/// The packets' `center` fields hold the t = 0 backcast of each trajectory,
/// so sample_packet(result.X_out, grid, t, hbar) is the state at time t.
CollisionResult collide(const CollisionSetup& s, double t);

/// Sample the post-collision factors on grids as normalized states.
WaveFunction atom_state(const CollisionResult& r, const Grid1D& grid, double t, double hbar);
WaveFunction pointer_state(const CollisionResult& r, const Grid1D& grid, double t, double hbar);

/// Exact coefficients of the post-collision pointer exponent
/// psi+(x2,t) = f(t) exp[R_coeff (x2-x0-v0 t')^2 + i (I1 x2 + I2 x2^2)]
/// together with their leading theta-series values.
struct PointerExpansion {
    double theta;
    double R_coeff, R_series;    // quadratic envelope coefficient [1/m^2]
    double I1, I1_series;        // linear phase [1/m]
    double I2, I2_series;        // quadratic phase [1/m^2]
    double x0;                   // [m]
    double v0;                   // [m/s]
};

/// Throws std::domain_error when theta >= 1 (expansion invalid).
PointerExpansion pointer_expansion(const CollisionSetup& s, double t);

struct TrajectoryRow {
    double t;
    double atom_mean, atom_width;
    double pointer_mean, pointer_width;
    double overlap_with_coherent;  // |<x0,v0|pointer>| at width d2
};

/// Closed-form trajectory samples of the post-collision factors.
std::vector<TrajectoryRow> collision_trajectory(const CollisionSetup& s,
                                                const std::vector<double>& times);

}  // namespace galdec
