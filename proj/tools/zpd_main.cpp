// zpd: command-line front end for the zero-point / two-slit numerics library.
//
// Every computation is exposed as a subcommand emitting CSV or JSON with a
// machine-recoverable parameter block; `verify <suite>` re-runs the module
// invariant suites and gates on them.
//
// Exit codes: 0 success, 2 usage or validation error, 3 numeric
// non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zpd/blackbody.hpp"
#include "zpd/maxwell.hpp"
#include "zpd/specfun.hpp"
#include "zpd/twoslit.hpp"
#include "zpd/vacuum.hpp"
#include "zpd/verify.hpp"

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Param {
    std::string key;
    std::string value;  // preformatted
    bool quoted;        // JSON string vs number/bool
};

struct Document {
    std::vector<Param> params;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void param(const std::string& k, double v) { params.push_back({k, fmt17(v), false}); }
    void param(const std::string& k, const std::string& v) {
        params.push_back({k, v, true});
    }
    void param(const std::string& k, bool v) {
        params.push_back({k, v ? "true" : "false", false});
    }
};

void emit_csv(const Document& doc, std::ostream& os) {
    for (const auto& p : doc.params) {
        os << "# " << p.key << "=" << p.value << "\n";
    }
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        os << (i ? "," : "") << doc.columns[i];
    }
    os << "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << fmt17(row[i]);
        }
        os << "\n";
    }
}

void emit_json(const Document& doc, std::ostream& os) {
    os << "{\"params\":{";
    for (std::size_t i = 0; i < doc.params.size(); ++i) {
        const auto& p = doc.params[i];
        os << (i ? "," : "") << "\"" << p.key << "\":";
        if (p.quoted) {
            os << "\"" << p.value << "\"";
        } else {
            os << p.value;
        }
    }
    os << "},\"columns\":[";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        os << (i ? "," : "") << "\"" << doc.columns[i] << "\"";
    }
    os << "],\"rows\":[";
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (std::size_t j = 0; j < doc.rows[i].size(); ++j) {
            os << (j ? "," : "") << fmt17(doc.rows[i][j]);
        }
        os << "]";
    }
    os << "]}\n";
}

struct OutputSpec {
    std::string format = "csv";
    std::string path;

    void write(const Document& doc) const {
        std::ostringstream buf;
        if (format == "json") {
            emit_json(doc, buf);
        } else {
            emit_csv(doc, buf);
        }
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw CLI::ValidationError("--output", "cannot open " + path);
            f << buf.str();
        }
    }
};

// Flags override values from the optional --config JSON file.
struct ConfigOverlay {
    nlohmann::json cfg = nlohmann::json::object();

    void load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw CLI::ValidationError("--config", "cannot open " + path);
        f >> cfg;
        if (!cfg.is_object()) {
            throw CLI::ValidationError("--config", "expected a flat JSON object");
        }
    }

    template <class T>
    void apply(const CLI::Option* opt, T& var, const std::string& key) const {
        if (opt->count() == 0 && cfg.contains(key)) {
            var = cfg.at(key).get<T>();
        }
    }
};

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1) throw CLI::ValidationError("grid", "points must be >= 1");
    std::vector<double> xs;
    xs.reserve(points);
    if (points == 1) {
        xs.push_back(lo);
        return xs;
    }
    for (int i = 0; i < points; ++i) {
        xs.push_back(lo + (hi - lo) * i / (points - 1));
    }
    return xs;
}

int run_verify_report(const std::vector<zpd::verify::CheckResult>& checks) {
    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                  << " (measured=" << fmt17(c.measured)
                  << ", threshold=" << fmt17(c.threshold) << ")\n";
        all = all && c.pass;
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Numerics for photon zero-point energy, charged-field vacuum breakdown "
        "and two-slit diffraction"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON parameter file; explicit flags take precedence");

    OutputSpec out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", out.path, "Output file (default: stdout)");

    ConfigOverlay overlay;

    // ---- blackbody ------------------------------------------------------
    auto* bb = app.add_subcommand(
        "blackbody",
        "Planck single-mode energetics: occupation, mean energy, energy with "
        "zero point, and the high-temperature excess, vs x = hbar*omega/kT");
    double bb_xmin = 0.01, bb_xmax = 10.0;
    int bb_points = 100;
    auto* o_bb_xmin = bb->add_option("--x-min", bb_xmin, "Smallest x (> 0)");
    auto* o_bb_xmax = bb->add_option("--x-max", bb_xmax, "Largest x");
    auto* o_bb_points = bb->add_option("--points", bb_points, "Grid size");

    // ---- vacuum-energy --------------------------------------------------
    auto* ve = app.add_subcommand(
        "vacuum-energy",
        "Renormalized scalar vacuum energy density U(b) in a magnetic field "
        "(critical units)");
    double ve_b = -1.0, ve_bmin = 1e-3, ve_bmax = 1.0;
    int ve_points = 50;
    auto* o_ve_b = ve->add_option("--b", ve_b, "Single field value");
    auto* o_ve_bmin = ve->add_option("--b-min", ve_bmin, "Grid start");
    auto* o_ve_bmax = ve->add_option("--b-max", ve_bmax, "Grid end");
    auto* o_ve_points = ve->add_option("--points", ve_points, "Grid size");

    // ---- magnetization --------------------------------------------------
    auto* mg = app.add_subcommand(
        "magnetization", "Vacuum magnetization M = -dU/db (critical units)");
    double mg_b = -1.0, mg_bmin = 0.1, mg_bmax = 1.0;
    int mg_points = 10;
    auto* o_mg_b = mg->add_option("--b", mg_b, "Single field value");
    auto* o_mg_bmin = mg->add_option("--b-min", mg_bmin, "Grid start");
    auto* o_mg_bmax = mg->add_option("--b-max", mg_bmax, "Grid end");
    auto* o_mg_points = mg->add_option("--points", mg_points, "Grid size");

    // ---- pair-rate ------------------------------------------------------
    auto* pr = app.add_subcommand(
        "pair-rate",
        "Pair production rate per unit time and volume for a charged field of "
        "given spin in an electric field eps (critical units)");
    double pr_eps = 1.0, pr_spin = 0.0;
    auto* o_pr_eps = pr->add_option("--eps", pr_eps, "Electric field, critical units");
    auto* o_pr_spin = pr->add_option("--spin", pr_spin, "Spin (half-integer >= 0)");

    // ---- pair-rate-1d ---------------------------------------------------
    auto* p1 = app.add_subcommand(
        "pair-rate-1d",
        "1+1 dimensional pair production rate per unit time and length");
    double p1_eps = 1.0;
    auto* o_p1_eps = p1->add_option("--eps", p1_eps, "Electric field, critical units");

    // ---- unruh ----------------------------------------------------------
    auto* ur = app.add_subcommand(
        "unruh",
        "Unruh temperature from a proper acceleration (natural units) or from "
        "an electric field via the tunneling-path chain (units mc^2/k_B)");
    double ur_accel = 0.0, ur_eps = 0.0;
    auto* o_ur_accel = ur->add_option("--accel", ur_accel, "Proper acceleration");
    auto* o_ur_eps = ur->add_option("--eps", ur_eps, "Electric field, critical units");

    // ---- path -----------------------------------------------------------
    auto* pa = app.add_subcommand(
        "path", "Classical hyperbolic particle/anti-particle path x(t), c = 1");
    double pa_accel = 1.0, pa_tmin = -5.0, pa_tmax = 5.0;
    int pa_points = 101;
    std::string pa_branch = "forward";
    auto* o_pa_accel = pa->add_option("--accel", pa_accel, "Proper acceleration (> 0)");
    auto* o_pa_branch = pa->add_option("--branch", pa_branch, "forward|backward")
                            ->check(CLI::IsMember({"forward", "backward"}));
    auto* o_pa_tmin = pa->add_option("--t-min", pa_tmin, "Grid start");
    auto* o_pa_tmax = pa->add_option("--t-max", pa_tmax, "Grid end");
    auto* o_pa_points = pa->add_option("--points", pa_points, "Grid size");

    // ---- twoslit --------------------------------------------------------
    auto* ts = app.add_subcommand(
        "twoslit",
        "Two-slit screen pattern: closed Young x Fraunhofer form, brute-force "
        "integral oracles, or the zero-width interference limit");
    double ts_lambda = 0.58, ts_d = 50.0, ts_w = 5.0, ts_D = 1.0;
    double ts_span = 5.0;
    int ts_points = 1001;
    std::string ts_mode = "closed";
    auto* o_ts_lambda = ts->add_option("--lambda-um", ts_lambda, "Wavelength, um");
    auto* o_ts_d = ts->add_option("--d-um", ts_d, "Slit half-separation, um");
    auto* o_ts_w = ts->add_option("--w-um", ts_w, "Slit width, um");
    auto* o_ts_D = ts->add_option("--D-m", ts_D, "Screen distance, m");
    auto* o_ts_mode =
        ts->add_option("--mode", ts_mode, "closed|quadratic|exact|limit")
            ->check(CLI::IsMember({"closed", "quadratic", "exact", "limit"}));
    auto* o_ts_points = ts->add_option("--points", ts_points, "Grid size");
    auto* o_ts_span = ts->add_option("--span-fringes", ts_span,
                                     "Half-span of the grid in fringe spacings");

    // ---- single-slit ----------------------------------------------------
    auto* ss = app.add_subcommand(
        "single-slit", "Single-slit diffractive factor sinc^2(2 pi x w/(lambda D))");
    double ss_lambda = 0.579, ss_w = 6000.0, ss_D = 1.0, ss_xmax = -1.0;
    int ss_points = 1001;
    auto* o_ss_lambda = ss->add_option("--lambda-um", ss_lambda, "Wavelength, um");
    auto* o_ss_w = ss->add_option("--w-um", ss_w, "Aperture size, um");
    auto* o_ss_D = ss->add_option("--D-m", ss_D, "Screen distance, m");
    auto* o_ss_xmax =
        ss->add_option("--x-max-m", ss_xmax, "Grid half-span, m (default 4 minima)");
    auto* o_ss_points = ss->add_option("--points", ss_points, "Grid size");

    // ---- aperture -------------------------------------------------------
    auto* ap = app.add_subcommand(
        "aperture", "Circular-aperture factor [2 J1(eta)/eta]^2 with dark rings "
                    "at the zeros of J1");
    double ap_lambda = 0.58, ap_w = 5.0, ap_D = 1.0, ap_rmax = -1.0;
    int ap_points = 501;
    auto* o_ap_lambda = ap->add_option("--lambda-um", ap_lambda, "Wavelength, um");
    auto* o_ap_w = ap->add_option("--w-um", ap_w, "Aperture size, um");
    auto* o_ap_D = ap->add_option("--D-m", ap_D, "Screen distance, m");
    auto* o_ap_rmax = ap->add_option("--r-max-m", ap_rmax,
                                     "Radial half-span, m (default 3 dark rings)");
    auto* o_ap_points = ap->add_option("--points", ap_points, "Grid size");

    // ---- state-count ----------------------------------------------------
    auto* sc = app.add_subcommand(
        "state-count",
        "Transversal photon state count through a slit, N = (pi^2/2)(w/lambda)^2, "
        "with the ground-state confinement flag w < lambda/pi");
    double sc_lambda = 0.58, sc_w = 5.0;
    auto* o_sc_lambda = sc->add_option("--lambda-um", sc_lambda, "Wavelength, um");
    auto* o_sc_w = sc->add_option("--w-um", sc_w, "Slit width, um");

    // ---- maxwell-check --------------------------------------------------
    auto* mc = app.add_subcommand(
        "maxwell-check",
        "Spin-1 operator algebra checks: spin matrices, 6x6 Hamiltonian "
        "spectrum, projectors and transversal velocity commutators");

    // ---- verify ---------------------------------------------------------
    auto* vf = app.add_subcommand(
        "verify", "Run a module invariant suite and gate on the result");
    std::string vf_suite = "all";
    vf->add_option("suite", vf_suite, "blackbody|vacuum|maxwell|twoslit|all")
        ->check(CLI::IsMember({"blackbody", "vacuum", "maxwell", "twoslit", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) overlay.load(config_path);

        if (app.got_subcommand(bb)) {
            overlay.apply(o_bb_xmin, bb_xmin, "x-min");
            overlay.apply(o_bb_xmax, bb_xmax, "x-max");
            overlay.apply(o_bb_points, bb_points, "points");
            if (!(bb_xmin > 0.0) || !(bb_xmax > bb_xmin)) {
                throw zpd::DomainError("blackbody: requires 0 < x-min < x-max");
            }
            Document doc;
            doc.param("subcommand", std::string("blackbody"));
            doc.param("x-min", bb_xmin);
            doc.param("x-max", bb_xmax);
            doc.param("points", static_cast<double>(bb_points));
            doc.columns = {"x", "occupation", "energy", "energy_with_zpe", "excess"};
            for (double x : linspace(bb_xmin, bb_xmax, bb_points)) {
                doc.rows.push_back({x, zpd::blackbody::mean_occupation(x),
                                    zpd::blackbody::mean_energy(x),
                                    zpd::blackbody::energy_with_zpe(x),
                                    zpd::blackbody::einstein_stern_excess(x)});
            }
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(ve) || app.got_subcommand(mg)) {
            const bool is_u = app.got_subcommand(ve);
            double single = is_u ? ve_b : mg_b;
            double bmin = is_u ? ve_bmin : mg_bmin;
            double bmax = is_u ? ve_bmax : mg_bmax;
            int points = is_u ? ve_points : mg_points;
            overlay.apply(is_u ? o_ve_b : o_mg_b, single, "b");
            overlay.apply(is_u ? o_ve_bmin : o_mg_bmin, bmin, "b-min");
            overlay.apply(is_u ? o_ve_bmax : o_mg_bmax, bmax, "b-max");
            overlay.apply(is_u ? o_ve_points : o_mg_points, points, "points");
            const auto spec = zpd::vacuum::ChargedFieldSpec::boson();
            const bool single_given =
                (is_u ? o_ve_b : o_mg_b)->count() > 0 || overlay.cfg.contains("b");
            const std::vector<double> grid =
                single_given ? std::vector<double>{single}
                             : linspace(bmin, bmax, points);
            Document doc;
            doc.param("subcommand", std::string(is_u ? "vacuum-energy" : "magnetization"));
            doc.param("units", std::string(is_u ? "hbar*c*kappa^4 vs b in hbar*c*kappa^2/e"
                                                : "hbar*c*kappa^4 per critical field"));
            doc.columns = {"b", is_u ? "u" : "m"};
            for (double b : grid) {
                const double v = is_u ? zpd::vacuum::vacuum_energy_density(b, spec)
                                      : zpd::vacuum::magnetization(b, spec);
                doc.rows.push_back({b, v});
            }
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(pr)) {
            overlay.apply(o_pr_eps, pr_eps, "eps");
            overlay.apply(o_pr_spin, pr_spin, "spin");
            const zpd::vacuum::ChargedFieldSpec spec(1.0, pr_spin);
            const auto rate = zpd::vacuum::pair_rate_spin(pr_eps, spec);
            Document doc;
            doc.param("subcommand", std::string("pair-rate"));
            doc.param("eps", pr_eps);
            doc.param("spin", pr_spin);
            doc.param("eta", static_cast<double>(spec.eta));
            doc.param("units", std::string("c*kappa^4"));
            doc.columns = {"value", "terms_used", "last_term_magnitude"};
            doc.rows.push_back({rate.value, static_cast<double>(rate.terms_used),
                                rate.last_term_magnitude});
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(p1)) {
            overlay.apply(o_p1_eps, p1_eps, "eps");
            const auto spec = zpd::vacuum::ChargedFieldSpec::boson();
            const double log_form = zpd::vacuum::pair_rate_1d(p1_eps, spec);
            const auto series = zpd::vacuum::pair_rate_1d_series(p1_eps, spec);
            Document doc;
            doc.param("subcommand", std::string("pair-rate-1d"));
            doc.param("eps", p1_eps);
            doc.param("units", std::string("c*kappa^2"));
            doc.columns = {"eps", "gamma1", "gamma1_series", "terms_used"};
            doc.rows.push_back({p1_eps, log_form, series.value,
                                static_cast<double>(series.terms_used)});
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(ur)) {
            overlay.apply(o_ur_accel, ur_accel, "accel");
            overlay.apply(o_ur_eps, ur_eps, "eps");
            const bool have_accel = ur_accel > 0.0;
            const bool have_eps = ur_eps > 0.0;
            if (have_accel == have_eps) {
                throw zpd::DomainError("unruh: give exactly one of --accel or --eps");
            }
            Document doc;
            doc.param("subcommand", std::string("unruh"));
            if (have_accel) {
                doc.param("accel", ur_accel);
                doc.param("units", std::string("hbar=c=k_B=1"));
                doc.columns = {"temperature"};
                doc.rows.push_back({zpd::vacuum::unruh_temperature(ur_accel)});
            } else {
                doc.param("eps", ur_eps);
                doc.param("units", std::string("mc^2/k_B"));
                doc.columns = {"temperature"};
                doc.rows.push_back({zpd::vacuum::unruh_temperature_field(ur_eps)});
            }
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(pa)) {
            overlay.apply(o_pa_accel, pa_accel, "accel");
            overlay.apply(o_pa_branch, pa_branch, "branch");
            overlay.apply(o_pa_tmin, pa_tmin, "t-min");
            overlay.apply(o_pa_tmax, pa_tmax, "t-max");
            overlay.apply(o_pa_points, pa_points, "points");
            const zpd::vacuum::HyperbolicPath path{
                pa_accel, pa_branch == "forward" ? zpd::vacuum::PathBranch::forward
                                                 : zpd::vacuum::PathBranch::backward};
            Document doc;
            doc.param("subcommand", std::string("path"));
            doc.param("accel", pa_accel);
            doc.param("branch", pa_branch);
            doc.columns = {"t", "x"};
            for (double t : linspace(pa_tmin, pa_tmax, pa_points)) {
                doc.rows.push_back({t, zpd::vacuum::classical_path(t, path)});
            }
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(ts)) {
            overlay.apply(o_ts_lambda, ts_lambda, "lambda-um");
            overlay.apply(o_ts_d, ts_d, "d-um");
            overlay.apply(o_ts_w, ts_w, "w-um");
            overlay.apply(o_ts_D, ts_D, "D-m");
            overlay.apply(o_ts_mode, ts_mode, "mode");
            overlay.apply(o_ts_points, ts_points, "points");
            overlay.apply(o_ts_span, ts_span, "span-fringes");
            const zpd::twoslit::SlitGeometry g(ts_w * 1e-6, ts_d * 1e-6, ts_D,
                                               ts_lambda * 1e-6);
            Document doc;
            doc.param("subcommand", std::string("twoslit"));
            doc.param("lambda-um", ts_lambda);
            doc.param("d-um", ts_d);
            doc.param("w-um", ts_w);
            doc.param("D-m", ts_D);
            doc.param("mode", ts_mode);
            doc.param("fraunhofer_warning", g.fraunhofer_warning());
            doc.param("subwavelength", g.subwavelength());
            doc.param("ground_state_confined", g.ground_state_confined());
            doc.param("state_count",
                      zpd::maxwell::slit_state_count(g.slit_width, g.wavelength).count);
            doc.columns = {"x_m", "intensity"};
            const double k = zpd::twoslit::wavenumber(g);
            const double half = ts_span * g.fringe_spacing();
            for (double x : linspace(-half, half, ts_points)) {
                double v;
                if (ts_mode == "closed") {
                    v = zpd::twoslit::intensity(x, g);
                } else if (ts_mode == "limit") {
                    v = zpd::twoslit::interference_limit(x, k);
                } else {
                    const auto mode = ts_mode == "quadratic"
                                          ? zpd::twoslit::PhaseMode::quadratic
                                          : zpd::twoslit::PhaseMode::exact;
                    v = zpd::twoslit::brute_force_intensity(x, g, mode).value;
                }
                doc.rows.push_back({x, v});
            }
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(ss)) {
            overlay.apply(o_ss_lambda, ss_lambda, "lambda-um");
            overlay.apply(o_ss_w, ss_w, "w-um");
            overlay.apply(o_ss_D, ss_D, "D-m");
            overlay.apply(o_ss_xmax, ss_xmax, "x-max-m");
            overlay.apply(o_ss_points, ss_points, "points");
            const double lambda = ss_lambda * 1e-6;
            const double w = ss_w * 1e-6;
            const double x1 = lambda * ss_D / (2.0 * w);
            const double half = ss_xmax > 0.0 ? ss_xmax : 4.0 * x1;
            Document doc;
            doc.param("subcommand", std::string("single-slit"));
            doc.param("lambda-um", ss_lambda);
            doc.param("w-um", ss_w);
            doc.param("D-m", ss_D);
            doc.param("first_minimum_m", x1);
            doc.columns = {"x_m", "s"};
            for (double x : linspace(-half, half, ss_points)) {
                doc.rows.push_back({x, zpd::twoslit::single_slit(x, w, lambda, ss_D)});
            }
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(ap)) {
            overlay.apply(o_ap_lambda, ap_lambda, "lambda-um");
            overlay.apply(o_ap_w, ap_w, "w-um");
            overlay.apply(o_ap_D, ap_D, "D-m");
            overlay.apply(o_ap_rmax, ap_rmax, "r-max-m");
            overlay.apply(o_ap_points, ap_points, "points");
            const double lambda = ap_lambda * 1e-6;
            const double w = ap_w * 1e-6;
            const auto rings = zpd::bessel_j1_zeros(3);
            const double ring_scale =
                lambda * ap_D / (2.0 * zpd::twoslit::kPi * w);
            const double rmax = ap_rmax > 0.0 ? ap_rmax : rings[2] * ring_scale;
            Document doc;
            doc.param("subcommand", std::string("aperture"));
            doc.param("lambda-um", ap_lambda);
            doc.param("w-um", ap_w);
            doc.param("D-m", ap_D);
            doc.param("first_dark_ring_m", rings[0] * ring_scale);
            doc.columns = {"r_m", "f"};
            for (double r : linspace(0.0, rmax, ap_points)) {
                doc.rows.push_back({r, zpd::twoslit::circular_pattern(r, w, lambda, ap_D)});
            }
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(sc)) {
            overlay.apply(o_sc_lambda, sc_lambda, "lambda-um");
            overlay.apply(o_sc_w, sc_w, "w-um");
            const auto states =
                zpd::maxwell::slit_state_count(sc_w * 1e-6, sc_lambda * 1e-6);
            Document doc;
            doc.param("subcommand", std::string("state-count"));
            doc.param("lambda-um", sc_lambda);
            doc.param("w-um", sc_w);
            doc.columns = {"n_states", "ground_state_confined"};
            doc.rows.push_back({states.count, states.ground_state_confined ? 1.0 : 0.0});
            out.write(doc);
            return 0;
        }

        if (app.got_subcommand(mc)) {
            return run_verify_report(zpd::verify::verify_maxwell());
        }

        if (app.got_subcommand(vf)) {
            if (vf_suite == "blackbody") {
                return run_verify_report(zpd::verify::verify_blackbody());
            }
            if (vf_suite == "vacuum") {
                return run_verify_report(zpd::verify::verify_vacuum());
            }
            if (vf_suite == "maxwell") {
                return run_verify_report(zpd::verify::verify_maxwell());
            }
            if (vf_suite == "twoslit") {
                return run_verify_report(zpd::verify::verify_twoslit());
            }
            return run_verify_report(zpd::verify::verify_all());
        }
    } catch (const zpd::NonConvergence& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const zpd::DomainError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "validation error: " << e.get_name() << ": " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
