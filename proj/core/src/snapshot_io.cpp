#include "galdec/snapshot_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace galdec {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_snapshot(std::ostream& out, const DensityKernel& k) {
    out << "rep = " << (k.rep == Rep::Position ? "position" : "velocity") << "\n";
    out << "n = " << k.grid.n << "\n";
    out << "min = " << format_g17(k.grid.min) << "\n";
    out << "max = " << format_g17(k.grid.max) << "\n";
    out << "mass = " << format_g17(k.mass) << "\n";
    out << "hbar = " << format_g17(k.hbar) << "\n";
    out << "---\n";
    const auto n = static_cast<Eigen::Index>(k.grid.n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out << format_g17(k.data(i, j).real()) << ',' << format_g17(k.data(i, j).imag())
                << '\n';
    if (!out) throw std::runtime_error("snapshot write failed");
}

void write_snapshot_file(const std::string& path, const DensityKernel& k) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open snapshot file for writing: " + path);
    write_snapshot(out, k);
}

DensityKernel read_snapshot(std::istream& in) {
    std::map<std::string, std::string> header;
    std::string line;
    while (std::getline(in, line)) {
        if (line == "---") break;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("snapshot header: expected 'key = value', got '" + line + "'");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        header[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    for (const char* key : {"rep", "n", "min", "max", "mass", "hbar"})
        if (!header.count(key))
            throw std::runtime_error(std::string("snapshot header missing '") + key + "'");

    DensityKernel k;
    if (header["rep"] == "position")
        k.rep = Rep::Position;
    else if (header["rep"] == "velocity")
        k.rep = Rep::Velocity;
    else
        throw std::runtime_error("snapshot rep must be 'position' or 'velocity'");
    k.grid.n = std::stoul(header["n"]);
    k.grid.min = std::stod(header["min"]);
    k.grid.max = std::stod(header["max"]);
    k.mass = std::stod(header["mass"]);
    k.hbar = std::stod(header["hbar"]);
    validate(k.grid);

    const auto n = static_cast<Eigen::Index>(k.grid.n);
    k.data.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!std::getline(in, line)) throw std::runtime_error("snapshot truncated");
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::runtime_error("snapshot entry is not 're,im': '" + line + "'");
            k.data(i, j) = {std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))};
        }
    return k;
}

DensityKernel read_snapshot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open snapshot file: " + path);
    return read_snapshot(in);
}

}  // namespace galdec
