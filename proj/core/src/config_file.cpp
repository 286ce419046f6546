#include "galdec/config_file.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace galdec {

ConfigParseError::ConfigParseError(const std::string& what, int l)
    : std::runtime_error("config line " + std::to_string(l) + ": " + what), line(l) {}

CollisionSetup CollisionConfig::setup(double hbar) const {
    CollisionSetup s;
    s.atom = GaussianPacketSpec{m1, v, d1, 0.0};
    s.pointer = GaussianPacketSpec{m2, 0.0, d1 * std::sqrt(m1 / m2), A};
    s.v0_strength = v0_strength;
    s.hbar = hbar;
    return s;
}

GalileanConfig ParsedConfig::galilean(double mass) const {
    GalileanConfig cfg{hbar, alpha, beta, 0.0};
    cfg.delta_t = delta_t ? *delta_t : hbar / (2.0 * mass * std::sqrt(alpha * beta));
    validate(cfg);
    return cfg;
}

namespace {

struct RawEntry {
    std::string value;
    int line;
    mutable bool used = false;
};

using Section = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_number(const RawEntry& e, const std::string& key) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(e.value, &pos);
    } catch (const std::exception&) {
        throw ConfigParseError("value of '" + key + "' is not a number: '" + e.value + "'", e.line);
    }
    if (pos != e.value.size())
        throw ConfigParseError("trailing garbage after number in '" + key + "'", e.line);
    return v;
}

class SectionView {
  public:
    SectionView(const Section& s, std::string name, int line)
        : sec_(s), name_(std::move(name)), line_(line) {}

    double require(const std::string& key) const {
        const auto it = sec_.find(key);
        if (it == sec_.end())
            throw ConfigParseError("missing key '" + key + "' in " + name_, line_);
        it->second.used = true;
        return to_number(it->second, key);
    }

    std::optional<double> optional(const std::string& key) const {
        const auto it = sec_.find(key);
        if (it == sec_.end()) return std::nullopt;
        it->second.used = true;
        return to_number(it->second, key);
    }

    std::optional<std::string> optional_raw(const std::string& key) const {
        const auto it = sec_.find(key);
        if (it == sec_.end()) return std::nullopt;
        it->second.used = true;
        return it->second.value;
    }

    void reject_unused() const {
        for (const auto& [key, entry] : sec_)
            if (!entry.used)
                throw ConfigParseError("unknown key '" + key + "' in " + name_, entry.line);
    }

  private:
    const Section& sec_;
    std::string name_;
    int line_;
};

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
    std::map<std::string, Section> sections;
    std::map<std::string, int> section_lines{{"", 0}};
    std::istringstream in(text);
    std::string raw;
    std::string current;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigParseError("unterminated section header", lineno);
            current = trim(line.substr(1, line.size() - 2));
            if (current.empty()) throw ConfigParseError("empty section name", lineno);
            section_lines.emplace(current, lineno);
            sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError("expected 'key = value', got '" + line + "'", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigParseError("empty key or value in '" + line + "'", lineno);
        if (!sections[current].emplace(key, RawEntry{value, lineno}).second)
            throw ConfigParseError("duplicate key '" + key + "'", lineno);
    }

    ParsedConfig out{};
    const SectionView top(sections[""], "top level", 0);
    out.hbar = top.require("hbar");
    out.alpha = top.require("alpha");
    out.beta = top.require("beta");
    out.delta_t = top.optional("delta_t");
    if (!(out.hbar > 0.0) || !(out.alpha > 0.0) || !(out.beta > 0.0))
        throw ConfigParseError("hbar, alpha, beta must be positive", 0);
    if (out.delta_t && !(*out.delta_t > 0.0))
        throw ConfigParseError("delta_t must be positive", 0);

    if (const auto m = top.optional_raw("masses")) {
        std::istringstream ms(*m);
        std::string tok;
        while (std::getline(ms, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            out.masses.push_back(std::stod(tok));
        }
    }

    if (const auto it = sections.find("stern_gerlach"); it != sections.end()) {
        const SectionView sg(it->second, "[stern_gerlach]", section_lines["stern_gerlach"]);
        SternGerlachScenario s{};
        s.m1 = sg.require("m1");
        s.m2 = sg.require("m2");
        s.u = sg.require("u");
        s.L = sg.require("L");
        s.dBdz = sg.require("dBdz");
        s.mu_B = sg.require("mu_B");
        s.A = sg.require("A");
        s.d1 = sg.require("d1");
        s.v0_strength = sg.require("v0_strength");
        s.C = sg.optional("C").value_or(0.0);
        sg.reject_unused();
        validate(s);
        out.stern_gerlach = s;
    }

    if (const auto it = sections.find("collision"); it != sections.end()) {
        const SectionView co(it->second, "[collision]", section_lines["collision"]);
        CollisionConfig c{};
        c.m1 = co.require("m1");
        c.m2 = co.require("m2");
        c.v = co.require("v");
        c.d1 = co.require("d1");
        c.A = co.require("A");
        c.v0_strength = co.require("v0_strength");
        c.t_final = co.optional("t_final").value_or(0.0);
        c.samples = static_cast<int>(co.optional("samples").value_or(50.0));
        co.reject_unused();
        if (c.t_final == 0.0) c.t_final = 2.0 * (2.0 * c.A / c.v);
        validate(c.setup(out.hbar));
        out.collision = c;
    }

    top.reject_unused();
    return out;
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace galdec
