#include "galdec_tools/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "galdec/channels.hpp"
#include "galdec/coherent.hpp"
#include "galdec/collision.hpp"
#include "galdec/config_file.hpp"
#include "galdec/packet.hpp"
#include "galdec/snapshot_io.hpp"

namespace galdec::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Collects output files and named checks, then writes the JSON manifest and
// produces the exit code (0 all pass, 1 otherwise).
class Manifest {
  public:
    Manifest(std::string command, const Options& opt) : opt_(opt) {
        fs::create_directories(opt.out_dir);
        doc_["command"] = std::move(command);
        doc_["started_at"] = utc_now();
        doc_["seed"] = opt.seed;
        std::ifstream in(opt.config_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open config file: " + opt.config_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        doc_["config_digest"] = fnv1a_hex(buf.str());
        doc_["outputs"] = json::array();
        doc_["checks"] = json::array();
        doc_["notes"] = json::array();
    }

    std::string path(const std::string& name) {
        const std::string p = (fs::path(opt_.out_dir) / name).string();
        doc_["outputs"].push_back(p);
        return p;
    }

    void note(const std::string& text) { doc_["notes"].push_back(text); }

    bool check(const std::string& name, bool pass, double observed,
               const std::string& requirement) {
        doc_["checks"].push_back(
            {{"name", name}, {"pass", pass}, {"observed", observed}, {"requirement", requirement}});
        all_pass_ &= pass;
        return pass;
    }

    int finish(const std::string& manifest_name) {
        doc_["finished_at"] = utc_now();
        doc_["all_pass"] = all_pass_;
        for (const auto& out : doc_["outputs"])
            if (!fs::exists(out.get<std::string>()))
                throw std::runtime_error("manifest lists missing output " + out.get<std::string>());
        std::ofstream out((fs::path(opt_.out_dir) / manifest_name).string());
        out << doc_.dump(2) << "\n";
        return all_pass_ ? 0 : 1;
    }

    json& doc() { return doc_; }

  private:
    const Options& opt_;
    json doc_;
    bool all_pass_ = true;
};

struct Csv {
    explicit Csv(const std::string& path, const std::string& header) : out(path) {
        if (!out) throw std::runtime_error("cannot open " + path);
        out << header << "\n";
    }
    void row(std::initializer_list<double> values) {
        bool first = true;
        for (double v : values) {
            if (!first) out << ',';
            out << format_g17(v);
            first = false;
        }
        out << "\n";
    }
    std::ofstream out;
};

double reference_mass(const ParsedConfig& cfg) {
    if (cfg.stern_gerlach) return cfg.stern_gerlach->m2;
    if (!cfg.masses.empty()) return cfg.masses.front();
    throw std::runtime_error("config declares no mass (need [stern_gerlach] or `masses`)");
}

json quantities_json(const DerivedQuantities& q) {
    return {{"tau", q.tau},           {"sigma_x", q.sigma_x},     {"sigma_u", q.sigma_u},
            {"delta_eta", q.delta_eta}, {"delta_mu", q.delta_mu}, {"m_sf", q.m_sf}};
}

WaveFunction make_state(const std::string& kind, const Grid1D& grid, double mass, double hbar,
                        double sigma_x) {
    if (kind == "gaussian")
        return coherent_wavefunction(CoherentLabel{0.0, 0.0, sigma_x, mass, hbar}, grid);
    if (kind == "cat" || kind == "coherent-mixture") {
        const auto left =
            coherent_wavefunction(CoherentLabel{-5.0 * sigma_x, 0.0, sigma_x, mass, hbar}, grid);
        const auto right =
            coherent_wavefunction(CoherentLabel{5.0 * sigma_x, 0.0, sigma_x, mass, hbar}, grid);
        WaveFunction cat = left;
        cat.data = (left.data + right.data) / std::numbers::sqrt2;
        cat.normalize();
        return cat;
    }
    throw std::runtime_error("unknown state spec '" + kind + "'");
}

}  // namespace

int cmd_params(const Options& opt) {
    const ParsedConfig cfg = parse_config_file(opt.config_path);
    Manifest man("params", opt);

    std::vector<std::pair<std::string, double>> masses;
    if (cfg.stern_gerlach) {
        masses.emplace_back("m1", cfg.stern_gerlach->m1);
        masses.emplace_back("m2", cfg.stern_gerlach->m2);
    }
    for (std::size_t i = 0; i < cfg.masses.size(); ++i)
        masses.emplace_back("mass" + std::to_string(i + 1), cfg.masses[i]);
    if (masses.empty()) throw std::runtime_error("config declares no mass");
    if (cfg.delta_t_defaulted())
        man.note("delta_t omitted; defaulted to tau for each mass");

    json tables = json::array();
    std::ofstream txt(man.path("params.txt"));
    for (const auto& [name, m] : masses) {
        const GalileanConfig gc = cfg.galilean(m);
        const DerivedQuantities q = derive_quantities(gc, m);
        json entry{{"mass_label", name}, {"mass", m},      {"hbar", gc.hbar},
                   {"delta_t", gc.delta_t}, {"derived", quantities_json(q)}};
        txt << name << " (" << format_g17(m) << " kg, delta_t " << format_g17(gc.delta_t)
            << " s)\n";
        txt << "  tau       " << format_g17(q.tau) << " s\n";
        txt << "  sigma_x   " << format_g17(q.sigma_x) << " m\n";
        txt << "  sigma_u   " << format_g17(q.sigma_u) << " m/s\n";
        txt << "  delta_eta " << format_g17(q.delta_eta) << " m\n";
        txt << "  delta_mu  " << format_g17(q.delta_mu) << " m/s\n";
        txt << "  m_sf      " << format_g17(q.m_sf) << "\n";

        if (opt.both_hbar) {
            ParsedConfig alt = cfg;
            alt.hbar = HBAR_SI;
            const GalileanConfig gs = alt.galilean(m);
            const DerivedQuantities qs = derive_quantities(gs, m);
            entry["derived_si_hbar"] = quantities_json(qs);
            entry["ratio_tau"] = q.tau / qs.tau;           // 2 pi when the slot holds h
            entry["ratio_sigma_x"] = q.sigma_x / qs.sigma_x;  // sqrt(2 pi)
            txt << "  with SI hbar: tau " << format_g17(qs.tau) << " s (ratio "
                << format_g17(q.tau / qs.tau) << "), sigma_x " << format_g17(qs.sigma_x)
                << " m (ratio " << format_g17(q.sigma_x / qs.sigma_x) << ")\n";
        }

        const double product = q.sigma_x * m * q.sigma_u;
        man.check("uncertainty_product_" + name,
                  std::abs(product - gc.hbar / 2.0) <= 1e-12 * gc.hbar / 2.0, product,
                  "sigma_x * m * sigma_u = hbar/2 (rel 1e-12)");
        tables.push_back(std::move(entry));
        txt << "\n";
    }
    std::ofstream(man.path("params.json")) << tables.dump(2) << "\n";
    return man.finish("params_manifest.json");
}

int cmd_sg_report(const Options& opt) {
    const ParsedConfig cfg = parse_config_file(opt.config_path);
    if (!cfg.stern_gerlach) throw std::runtime_error("config has no [stern_gerlach] section");
    const SternGerlachScenario& s = *cfg.stern_gerlach;
    Manifest man("sg-report", opt);

    const GalileanConfig gc = cfg.galilean(s.m2);
    const SgReport r = sg_derived_numbers(s, gc);
    const DerivedQuantities q2 = derive_quantities(gc, s.m2);

    ParsedConfig alt = cfg;
    alt.hbar = HBAR_SI;
    const GalileanConfig gs = alt.galilean(s.m2);
    const SgReport rs = sg_derived_numbers(s, gs);
    const DerivedQuantities q2s = derive_quantities(gs, s.m2);

    struct Row {
        const char* name;
        double printed;  // reference value as printed in the source scenario
        double computed;
        double computed_si;
    };
    const Row rows[] = {
        {"v [m/s]", 2.5905, r.v, rs.v},
        {"tau [s]", 5.235e-3, q2.tau, q2s.tau},
        {"d2 [m]", 3.618e-8, r.d2, rs.d2},
        {"d1 [m]", 3.618e-4, s.d1, s.d1},
        {"sigma_u [m/s]", 5.116e-10, q2.sigma_u, q2s.sigma_u},
        {"delta_z [m]", 3.454e-3, r.delta_z, rs.delta_z},
        {"delta_x [m]", 6.28e-6, r.delta_x, rs.delta_x},
        {"t_diss_pointer [s]", 70.71, r.t_diss_pointer, rs.t_diss_pointer},
        {"delta_eta [m]", 7.2353e-8, r.delta_eta, rs.delta_eta},
        {"delta_eta1 [m]", 0.72353, r.delta_eta1, rs.delta_eta1},
    };

    std::ofstream txt(man.path("sg_report.txt"));
    txt << "quantity            reference       computed        rel.dev    with SI hbar    "
           "h/hbar ratio\n";
    json jrows = json::array();
    for (const Row& row : rows) {
        const double dev = std::abs(row.computed - row.printed) / std::abs(row.printed);
        const bool pass = dev <= 5e-3;
        txt << row.name << "  " << format_g17(row.printed) << "  " << format_g17(row.computed)
            << "  " << format_g17(dev) << "  " << format_g17(row.computed_si) << "  "
            << format_g17(row.computed / row.computed_si) << (pass ? "  PASS" : "  FAIL") << "\n";
        jrows.push_back({{"name", row.name},
                         {"reference", row.printed},
                         {"computed", row.computed},
                         {"computed_si_hbar", row.computed_si},
                         {"rel_dev", dev}});
        man.check(row.name, pass, row.computed, "within 0.5% of reference");
    }

    txt << "\nconditions:\n";
    txt << "  macroscopic displacement  delta_x/d2 = " << format_g17(r.macdis_factor)
        << (r.macdis_ok ? "  PASS" : "  FAIL") << "\n";
    txt << "  pointer spread            delta_t/t_diss = " << format_g17(r.thetall_factor)
        << (r.thetall_ok ? "  PASS" : "  FAIL") << "\n";
    txt << "  atom spread               t3/t_diss_atom = " << format_g17(r.dissneg_factor)
        << (r.dissneg_ok ? "  PASS" : "  FAIL") << "\n";
    txt << "  beam separation           overlap = " << format_g17(r.beam_overlap)
        << (r.beam_sep_ok ? "  PASS" : "  FAIL") << "\n";
    man.check("macdis", r.macdis_ok, r.macdis_factor, "delta_x >= 10 d2");
    man.check("thetall", r.thetall_ok, r.thetall_factor, "delta_t <= t_diss_pointer / 10");
    man.check("dissneg", r.dissneg_ok, r.dissneg_factor, "t3 <= t_diss_atom / 10");
    man.check("beam_separation", r.beam_sep_ok, r.beam_overlap, "beam overlap < 1e-8");

    json jr{{"rows", jrows},
            {"t1", r.t1},
            {"t3", r.t3},
            {"theta_at_delta_t", r.theta},
            {"delta_x_v_based", r.delta_x_v},
            {"conditions",
             {{"macdis", r.macdis_ok},
              {"thetall", r.thetall_ok},
              {"dissneg", r.dissneg_ok},
              {"beam_separation", r.beam_sep_ok}}}};
    std::ofstream(man.path("sg_report.json")) << jr.dump(2) << "\n";
    return man.finish("sg_report_manifest.json");
}

int cmd_figure1(const Options& opt) {
    const ParsedConfig cfg = parse_config_file(opt.config_path);
    Manifest man("figure1", opt);

    const double mass = reference_mass(cfg);
    const GalileanConfig gc = cfg.galilean(mass);
    const DerivedQuantities q = derive_quantities(gc, mass, gc.hbar / (2.0 * mass * std::sqrt(gc.alpha * gc.beta)));
    const double sx = q.sigma_x;

    const Grid1D grid = make_centered_grid(256, 12.0 * sx);
    const WaveFunction cat = make_state("cat", grid, mass, gc.hbar, sx);
    const DensityKernel W = kernel_from_wavefunction(cat);

    const double sep = 10.0 * sx;  // |A - B| with branches at -/+ 5 sigma_x
    const double eta_narrow = sep / 20.0;
    const double eta_wide = 20.0 * sep;

    const auto n = static_cast<Eigen::Index>(grid.n);
    Eigen::MatrixXd absW(n, n), damp_n(n, n), damp_w(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) {
            const double d = grid.point(static_cast<std::size_t>(i)) -
                             grid.point(static_cast<std::size_t>(j));
            absW(i, j) = std::abs(W.data(i, j));
            damp_n(i, j) = std::exp(-d * d / (2.0 * eta_narrow * eta_narrow));
            damp_w(i, j) = std::exp(-d * d / (2.0 * eta_wide * eta_wide));
        }
    const Eigen::MatrixXd prod_n = absW.cwiseProduct(damp_n);
    const Eigen::MatrixXd prod_w = absW.cwiseProduct(damp_w);

    const auto emit = [&](const std::string& name, const Eigen::MatrixXd& surf) {
        Csv csv(man.path(name), "x,y,value");
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                csv.row({grid.point(static_cast<std::size_t>(i)),
                         grid.point(static_cast<std::size_t>(j)), surf(i, j)});
    };
    emit("figure1_cat_abs.csv", absW);
    emit("figure1_damping_strong.csv", damp_n);
    emit("figure1_damping_weak.csv", damp_w);
    emit("figure1_product_strong.csv", prod_n);
    emit("figure1_product_weak.csv", prod_w);

    // off-diagonal block (x > 2.5 sx, y < -2.5 sx) vs diagonal peak
    double offdiag = 0.0, diag = 0.0, max_rel = 0.0, asym = 0.0;
    const double sup = absW.maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double x = grid.point(static_cast<std::size_t>(i));
            const double y = grid.point(static_cast<std::size_t>(j));
            if (x > 2.5 * sx && y < -2.5 * sx) offdiag = std::max(offdiag, prod_n(i, j));
            diag = std::max(diag, prod_n(i, j));
            max_rel = std::max(max_rel,
                               std::abs(prod_w(i, j) - absW(i, j)) /
                                   std::max(absW(i, j), 1e-12 * sup));
            asym = std::max(asym, std::abs(prod_n(i, j) - prod_n(j, i)));
        }
    man.check("offdiag_suppressed", offdiag <= 1e-12 * diag, offdiag / diag,
              "off-diagonal peaks < 1e-12 of diagonal at delta_eta = |A-B|/20");
    man.check("weak_damping_negligible", max_rel <= 0.01, max_rel,
              "surface within 1% of original at delta_eta = 20|A-B|");
    man.check("symmetry", asym <= 1e-12 * sup, asym, "surface symmetric under (x,y) swap");
    return man.finish("figure1_manifest.json");
}

int cmd_evolve(const Options& opt) {
    const ParsedConfig cfg = parse_config_file(opt.config_path);
    Manifest man("evolve", opt);
    if (opt.dt_over_tau.empty()) {
        man.note("empty delta_t list: no-op");
        return man.finish("evolve_manifest.json");
    }

    const double mass = reference_mass(cfg);
    const double tau = cfg.hbar / (2.0 * mass * std::sqrt(cfg.alpha * cfg.beta));
    const DerivedQuantities q = derive_quantities(cfg.galilean(mass), mass, tau);
    const double sx = q.sigma_x;

    const Grid1D grid = make_centered_grid(256, 12.0 * sx);
    const WaveFunction psi = make_state(opt.state, grid, mass, cfg.hbar, sx);
    DensityKernel W = kernel_from_wavefunction(psi);
    if (opt.state == "coherent-mixture") {
        const auto l = coherent_wavefunction(CoherentLabel{-5.0 * sx, 0.0, sx, mass, cfg.hbar}, grid);
        const auto r = coherent_wavefunction(CoherentLabel{5.0 * sx, 0.0, sx, mass, cfg.hbar}, grid);
        const DensityKernel kl = kernel_from_wavefunction(l);
        const DensityKernel kr = kernel_from_wavefunction(r);
        W = mix({{0.5, &kl}, {0.5, &kr}});
    }

    std::vector<double> dts = opt.dt_over_tau;
    std::sort(dts.begin(), dts.end());

    // measured off-diagonal ratio at the (+5 sx, -5 sx) peak vs the exact
    // Gaussian-dyad prediction
    const CoherentLabel la{5.0 * sx, 0.0, sx, mass, cfg.hbar};
    const CoherentLabel lb{-5.0 * sx, 0.0, sx, mass, cfg.hbar};
    const auto ia = static_cast<Eigen::Index>(std::llround((5.0 * sx - grid.min) / grid.step()));
    const auto ib = static_cast<Eigen::Index>(std::llround((-5.0 * sx - grid.min) / grid.step()));

    Csv ts(man.path("evolve_timeseries.csv"),
           "delta_t,purity,entropy,sup_abs,offdiag_ratio,offdiag_ratio_closed_form");
    double prev_entropy = -1.0;
    bool entropy_monotone = true, identity_ok = true;
    double max_ratio_err = 0.0;
    for (std::size_t i = 0; i < dts.size(); ++i) {
        GalileanConfig step = cfg.galilean(mass);
        step.delta_t = dts[i] * tau;
        const DensityKernel out = apply_galilean_decoherence(W, step);
        write_snapshot_file(man.path("evolve_" + std::to_string(i) + ".snap"), out);

        const double ratio = std::abs(out.data(ia, ib)) / std::abs(W.data(ia, ib));
        const GaussianKernel2D dyad = pointer_dyad_after_channels(la, lb, step);
        const GaussianKernel2D dyad0 = pointer_dyad_after_channels(la, lb, GalileanConfig{cfg.hbar, cfg.alpha, cfg.beta, 0.0});
        const double predicted =
            std::abs(dyad(grid.point(static_cast<std::size_t>(ia)), grid.point(static_cast<std::size_t>(ib)))) /
            std::abs(dyad0(grid.point(static_cast<std::size_t>(ia)), grid.point(static_cast<std::size_t>(ib))));
        max_ratio_err = std::max(max_ratio_err, std::abs(ratio - predicted));

        const double ent = von_neumann_entropy(out);
        ts.row({step.delta_t, purity(out), ent, sup_abs(out), ratio, predicted});
        if (ent < prev_entropy - 1e-9) entropy_monotone = false;
        prev_entropy = ent;
        if (dts[i] == 0.0 && (out.data - W.data).cwiseAbs().maxCoeff() != 0.0) identity_ok = false;
    }
    man.check("entropy_monotone", entropy_monotone, prev_entropy,
              "entropy non-decreasing along the delta_t sweep");
    man.check("offdiag_ratio_matches_closed_form", max_ratio_err <= 1e-6, max_ratio_err,
              "grid off-diagonal ratio within 1e-6 of the exact Gaussian dyad");
    man.check("zero_dt_identity", identity_ok, 0.0, "delta_t = 0 leaves the kernel unchanged");
    return man.finish("evolve_manifest.json");
}

int cmd_collide(const Options& opt) {
    const ParsedConfig cfg = parse_config_file(opt.config_path);
    if (!cfg.collision) throw std::runtime_error("config has no [collision] section");
    Manifest man("collide", opt);

    const CollisionSetup setup = cfg.collision->setup(cfg.hbar);
    const double t3 = setup.t3();
    const double t_final = cfg.collision->t_final;
    const int samples = std::max(2, cfg.collision->samples);

    std::vector<double> times(samples);
    for (int i = 0; i < samples; ++i)
        times[i] = t3 + (t_final - t3) * static_cast<double>(i) / (samples - 1);
    const auto rows = collision_trajectory(setup, times);

    Csv csv(man.path("collision_trajectory.csv"),
            "t,atom_mean,atom_width,pointer_mean,pointer_width,overlap_with_coherent");
    for (const auto& r : rows)
        csv.row({r.t, r.atom_mean, r.atom_width, r.pointer_mean, r.pointer_width,
                 r.overlap_with_coherent});

    const PointerExpansion e = pointer_expansion(setup, t_final);
    json je{{"theta", e.theta},
            {"R_coeff", e.R_coeff},     {"R_series", e.R_series},
            {"I1", e.I1},               {"I1_series", e.I1_series},
            {"I2", e.I2},               {"I2_series", e.I2_series},
            {"x0", e.x0},               {"v0", e.v0}};
    std::ofstream(man.path("collision_expansion.json")) << je.dump(2) << "\n";

    const double fidelity =
        rows.back().overlap_with_coherent * rows.back().overlap_with_coherent;
    man.check("pointer_fidelity", fidelity >= 1.0 - e.theta * e.theta / 2.0, fidelity,
              "final pointer fidelity to |x0,v0> >= 1 - theta^2/2");
    const CollisionResult res = collide(setup, t_final);
    const double p_in = setup.atom.mass * setup.atom.v;
    const double p_out = setup.atom.mass * res.atom_out.v + setup.pointer.mass * res.pointer_out.v;
    man.check("momentum_conserved", std::abs(p_out - p_in) <= 1e-12 * std::abs(p_in), p_out,
              "elastic momentum balance");
    return man.finish("collide_manifest.json");
}

int cmd_overlap(const Options& opt) {
    const ParsedConfig cfg = parse_config_file(opt.config_path);
    Manifest man("overlap", opt);

    const double mass = reference_mass(cfg);
    const double tau = cfg.hbar / (2.0 * mass * std::sqrt(cfg.alpha * cfg.beta));
    GalileanConfig gc = cfg.galilean(mass);
    gc.delta_t = tau;
    const DerivedQuantities q = derive_quantities(gc, mass);
    const double sx = q.sigma_x;
    const double su = q.sigma_u;

    const Grid1D grid = make_centered_grid(256, 12.0 * sx);
    const WaveFunction cat = make_state("cat", grid, mass, cfg.hbar, sx);
    const DensityKernel W = apply_galilean_decoherence(kernel_from_wavefunction(cat), gc);
    const double w_sup = sup_abs(W);

    const CoherentLabel center{5.0 * sx, 0.0, sx, mass, cfg.hbar};

    Csv csv(man.path("overlap_map.csv"), "x0_offset,v0_offset,abs_overlap,bound");
    bool dominated = true;
    const double at_center = std::abs(overlap_kernel(W, center, center));
    double half_x = 6.0 * sx, half_v = 6.0 * su;
    for (int a = -24; a <= 24; ++a)
        for (int b = -24; b <= 24; ++b) {
            const double dx0 = a * sx / 4.0;
            const double dv0 = b * su / 4.0;
            const CoherentLabel probe{center.x0 + dx0, center.v0 + dv0, sx, mass, cfg.hbar};
            const double ov = std::abs(overlap_kernel(W, probe, center));
            const double bound = a1_upper_bound(q.m_sf, sx, dx0, w_sup);
            csv.row({dx0, dv0, ov, bound});
            if (ov > bound * (1.0 + 1e-9)) dominated = false;
            if (b == 0 && a > 0 && ov < at_center / 2.0) half_x = std::min(half_x, dx0);
            if (a == 0 && b > 0 && ov < at_center / 2.0) half_v = std::min(half_v, dv0);
        }
    man.check("bound_dominates", dominated, 0.0, "quadrature overlap <= closed-form bound");
    man.check("tube_width_x", half_x >= sx / 3.0 && half_x <= 3.0 * sx, half_x / sx,
              "x half-width within factor 3 of sigma_x");
    man.check("tube_width_v", half_v >= su / 3.0 && half_v <= 3.0 * su, half_v / su,
              "v half-width within factor 3 of sigma_u");
    return man.finish("overlap_manifest.json");
}

}  // namespace galdec::cli
