#include "galdec/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "galdec/fourier.hpp"

namespace galdec {

void WaveFunction::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) throw std::domain_error("cannot normalize a zero wave function");
    data /= std::sqrt(n2);
}

void validate(const WaveFunction& psi) {
    validate(psi.grid);
    if (!(psi.mass > 0.0)) throw std::domain_error("mass must be positive");
    if (!(psi.hbar > 0.0)) throw std::domain_error("hbar must be positive");
    if (psi.data.size() != static_cast<Eigen::Index>(psi.grid.n))
        throw std::domain_error("wave function size does not match grid");
    if (std::abs(psi.norm_squared() - 1.0) > 1e-10)
        throw std::domain_error("wave function is not normalized");
}

WaveFunction to_velocity_rep(const WaveFunction& psi) {
    if (psi.rep == Rep::Velocity) return psi;
    WaveFunction out;
    out.rep = Rep::Velocity;
    out.grid = dual_velocity_grid(psi.grid, psi.mass, psi.hbar);
    out.dual = psi.grid;
    out.mass = psi.mass;
    out.hbar = psi.hbar;
    out.data = position_to_velocity(psi.data, psi.grid, psi.mass, psi.hbar);
    return out;
}

WaveFunction to_position_rep(const WaveFunction& psi) {
    if (psi.rep == Rep::Position) return psi;
    WaveFunction out;
    out.rep = Rep::Position;
    out.grid = psi.dual.n == psi.grid.n ? psi.dual
                                        : dual_position_grid(psi.grid, psi.mass, psi.hbar);
    out.dual = psi.grid;
    out.mass = psi.mass;
    out.hbar = psi.hbar;
    out.data = velocity_to_position(psi.data, out.grid, psi.mass, psi.hbar);
    return out;
}

double mean(const WaveFunction& psi) {
    double m = 0.0;
    for (std::size_t i = 0; i < psi.grid.n; ++i)
        m += psi.grid.point(i) * std::norm(psi.data(static_cast<Eigen::Index>(i)));
    return m * psi.grid.step();
}

double std_dev(const WaveFunction& psi) {
    const double m = mean(psi);
    double v = 0.0;
    for (std::size_t i = 0; i < psi.grid.n; ++i) {
        const double d = psi.grid.point(i) - m;
        v += d * d * std::norm(psi.data(static_cast<Eigen::Index>(i)));
    }
    return std::sqrt(v * psi.grid.step());
}

std::complex<double> inner(const WaveFunction& a, const WaveFunction& b) {
    if (a.grid.n != b.grid.n || a.rep != b.rep)
        throw std::domain_error("inner product requires matching grids and representations");
    return a.grid.step() * a.data.dot(b.data);
}

}  // namespace galdec
