#pragma once

#include <cstddef>
#include <vector>

namespace galdec {

enum class Rep { Position, Velocity };

/// Uniform endpoint-exclusive 1D grid; points are min + i*step, i = 0..n-1.
struct Grid1D {
    std::size_t n = 0;
    double min = 0.0;
    double max = 0.0;

    double step() const { return (max - min) / static_cast<double>(n); }
    double point(std::size_t i) const { return min + static_cast<double>(i) * step(); }
    std::vector<double> points() const;
};

/// n must be a power of two >= 16 and min < max.
void validate(const Grid1D& g);

/// Grid centered at zero (zero is the sample at index n/2).
Grid1D make_centered_grid(std::size_t n, double half_span);

/// The velocity grid dual to a position grid under the mass-scaled Fourier
/// transform: dv = 2*pi*hbar / (m * n * dx), centered at zero.
Grid1D dual_velocity_grid(const Grid1D& position_grid, double mass, double hbar);

/// Inverse of dual_velocity_grid (dx = 2*pi*hbar / (m * n * dv)).
Grid1D dual_position_grid(const Grid1D& velocity_grid, double mass, double hbar);

}  // namespace galdec
