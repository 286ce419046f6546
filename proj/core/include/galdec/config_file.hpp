#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galdec/config.hpp"
#include "galdec/collision.hpp"

namespace galdec {

/// Parse error carrying the line number and offending text.
struct ConfigParseError : std::runtime_error {
    ConfigParseError(const std::string& what, int line);
    int line;
};

/// Desk-scale collision inputs ([collision] section); d2 is derived.
struct CollisionConfig {
    double m1, m2, v, d1, A, v0_strength;
    double t_final;  // defaults to 2 * t3
    int samples;     // trajectory rows, default 50

    CollisionSetup setup(double hbar) const;
};

/// Contents of a configuration file.
///
///   hbar = 6.62607015e-34        # top level: hbar, alpha, beta, delta_t
///   alpha = 2.5e-13
///   [stern_gerlach]              # m1 m2 u L dBdz mu_B A d1 v0_strength [C]
///   [collision]                  # m1 m2 v d1 A v0_strength [t_final samples]
///
/// delta_t may be omitted; it then defaults to tau per mass (reported by the
/// CLI). d2 is never an input.
struct ParsedConfig {
    double hbar;
    double alpha;
    double beta;
    std::optional<double> delta_t;
    std::vector<double> masses;  // optional `masses` key, comma separated
    std::optional<SternGerlachScenario> stern_gerlach;
    std::optional<CollisionConfig> collision;

    bool delta_t_defaulted() const { return !delta_t.has_value(); }

    /// Config with delta_t resolved (tau for the given mass when omitted).
    GalileanConfig galilean(double mass) const;
};

ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config_file(const std::string& path);

}  // namespace galdec
