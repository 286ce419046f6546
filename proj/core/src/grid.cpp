#include "galdec/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace galdec {

std::vector<double> Grid1D::points() const {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = point(i);
    return p;
}

void validate(const Grid1D& g) {
    if (g.n < 16) throw std::domain_error("grid needs at least 16 points");
    if ((g.n & (g.n - 1)) != 0) throw std::domain_error("grid size must be a power of two");
    if (!(g.min < g.max)) throw std::domain_error("grid bounds must satisfy min < max");
}

Grid1D make_centered_grid(std::size_t n, double half_span) {
    Grid1D g{n, -half_span, half_span};
    validate(g);
    return g;
}

Grid1D dual_velocity_grid(const Grid1D& position_grid, double mass, double hbar) {
    const double dv =
        2.0 * std::numbers::pi * hbar / (mass * static_cast<double>(position_grid.n) * position_grid.step());
    const double half = dv * static_cast<double>(position_grid.n) / 2.0;
    return Grid1D{position_grid.n, -half, half};
}

Grid1D dual_position_grid(const Grid1D& velocity_grid, double mass, double hbar) {
    const double dx =
        2.0 * std::numbers::pi * hbar / (mass * static_cast<double>(velocity_grid.n) * velocity_grid.step());
    const double half = dx * static_cast<double>(velocity_grid.n) / 2.0;
    return Grid1D{velocity_grid.n, -half, half};
}

}  // namespace galdec
