// rydgrav command line: single transition evaluations, parameter sweeps,
// and detector feasibility reports.  Exit codes: 0 success, 2 usage or
// input error, 3 numeric domain error, 4 internal error.

#include "rydgrav/catalog.hpp"
#include "rydgrav/detector.hpp"
#include "rydgrav/gw.hpp"
#include "rydgrav/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace rydgrav;

constexpr const char* tool_version = "0.1.0";
constexpr int schema_version = 1;

// scientific notation with explicit exponent sign; 17 significant digits
// round-trip doubles exactly, keeping CSV diffs bit-stable
std::string sci(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

ordered_json schema_header(const char* name)
{
    ordered_json j;
    j["name"] = name;
    j["version"] = schema_version;
    j["tool_version"] = tool_version;
    return j;
}

// j is taken either as "p/2" or as the doubled value 2j directly.
long parse_twoj(const std::string& text)
{
    try {
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            if (text.substr(slash + 1) != "2")
                throw CLI::ValidationError("--j", "half-integer j must use the form p/2");
            return std::stol(text.substr(0, slash));
        }
        return std::stol(text);
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--j", "expected an integer 2j or a string p/2, got '" + text + "'");
    }
}

ordered_json state_json(const QuantumState& s)
{
    ordered_json j;
    j["n"] = s.n;
    j["l"] = s.l;
    j["j"] = std::to_string(s.twoj) + "/2";
    j["z"] = s.z;
    return j;
}

// ---------------------------------------------------------------------
// transition
// ---------------------------------------------------------------------

struct TransitionArgs {
    long n = 0;
    long l = 0;
    std::string j_text;
    int z = 1;
    int dn = 1;
    int dj = 2;
    std::optional<double> amplitude;
    std::optional<double> spectral_flux;
    std::string mode = "auto";
    std::string format = "table";
};

// Upper-state quantum numbers implied by (lower, dj); for a spin-1/2
// system the quadrupole rules fix (delta l, spin alignment) uniquely
// given the lower state.  Throws invalid_state for the circular-overflow
// case l' > n'-1, which the caller turns into the chain evaluation.
QuantumState implied_upper(const QuantumState& lower, int dn, int dj)
{
    const long twojp = lower.twoj + 2 * dj;
    for (long lp : {lower.l - 2, lower.l, lower.l + 2}) {
        if (lp < 0)
            continue;
        if (twojp == 2 * lp + 1 || twojp == 2 * lp - 1)
            return QuantumState(lower.n + dn, lp, twojp, lower.z);
    }
    throw invalid_transition("no quadrupole-allowed upper state for dj="
                             + std::to_string(dj) + " from " + lower.label());
}

int cmd_transition(const TransitionArgs& args)
{
    const long twoj = args.j_text.empty() ? 2 * args.l + 1 : parse_twoj(args.j_text);
    const QuantumState lower(args.n, args.l, twoj, args.z);

    gw::RadialMode mode = gw::RadialMode::automatic;
    if (args.mode == "exact")
        mode = gw::RadialMode::exact;
    else if (args.mode == "asymptotic")
        mode = gw::RadialMode::asymptotic;
    else if (args.mode != "auto")
        throw CLI::ValidationError("--mode", "expected auto, exact or asymptotic");

    // General two-state path when the implied upper state exists; the
    // idealized circular chain when the ladder runs over the l <= n-1
    // edge (nearly circular lower states only).
    gw::TransitionFactor factor;
    double g_ratio = 0.0;
    std::string path;
    QuantumState upper;
    try {
        upper = implied_upper(lower, args.dn, args.dj);
        factor = gw::transition_factor(lower, upper, mode);
        g_ratio = static_cast<double>(lower.degeneracy()) / upper.degeneracy();
        path = "general";
    } catch (const invalid_state&) {
        const auto chain = gw::circular_chain(lower, args.dn, args.dj);
        factor = chain.factor;
        g_ratio = chain.g_ratio;
        upper = chain.upper;
        path = "circular_chain";
    }

    const auto& pc = PhysicalConstants::si();
    const double omega = to_physical_omega(factor.omega_tilde, args.z, pc);
    const double sigma = (16.0 * std::numbers::pi / 15.0) * pc.planck_length * pc.planck_length
                       / std::pow(pc.fine_structure, 3) / (static_cast<double>(args.z) * args.z)
                       * factor.f;
    const double alpha_z = pc.fine_structure * args.z;
    const double eta = (8.0 / 15.0) * pc.grav_em_ratio * alpha_z * alpha_z * g_ratio * factor.c2
                     * factor.radial_sq * std::pow(factor.omega_tilde, 5) * factor.tau_tilde;
    const double tau_pair = to_physical_lifetime(factor.tau_tilde, args.z, pc);
    const double gamma_gr = eta / tau_pair;

    std::optional<double> rate_mono;
    if (args.amplitude) {
        const auto field = gw::WaveField::monochromatic_amplitudes(omega, *args.amplitude,
                                                                   *args.amplitude, pc);
        rate_mono = (1.0 / 30.0) * pc.speed_of_light / pc.classical_electron_radius
                  * field.amp_sq() * factor.omega_tilde * factor.f;
    }
    std::optional<double> rate_broad;
    if (args.spectral_flux) {
        rate_broad = (16.0 * std::numbers::pi / 15.0) * pc.planck_length * pc.planck_length
                   / std::pow(pc.fine_structure, 5) / std::pow(static_cast<double>(args.z), 4)
                   * *args.spectral_flux / pc.electron_mass_energy / factor.omega_tilde * factor.f;
    }

    if (args.format == "json") {
        ordered_json out;
        out["schema"] = schema_header("rydgrav.transition");
        out["lower"] = state_json(lower);
        out["upper"] = state_json(upper);
        out["dn"] = args.dn;
        out["dj"] = args.dj;
        out["path"] = path;
        ordered_json comp;
        comp["c2"] = factor.c2;
        comp["radial_sq"] = factor.radial_sq;
        comp["radial_method"] = hydrogenic::method_name(factor.radial_method);
        comp["bound_flag"] = factor.bound_flag;
        comp["omega_tilde"] = factor.omega_tilde;
        comp["tau_tilde"] = factor.tau_tilde;
        comp["f"] = factor.f;
        out["components"] = comp;
        out["omega_rad_per_s"] = omega;
        out["pair_lifetime_s"] = tau_pair;
        out["sigma_abs_max_m2"] = sigma;
        out["spontaneous_gw_rate_per_s"] = gamma_gr;
        out["branching_ratio"] = eta;
        if (rate_mono) {
            out["amplitude"] = *args.amplitude;
            out["rate_monochromatic_per_s"] = *rate_mono;
        }
        if (rate_broad) {
            out["spectral_flux_w_per_m2_per_radps"] = *args.spectral_flux;
            out["rate_broadband_per_radps"] = *rate_broad;
        }
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "n,l,twoj,z,dn,dj,path,c2,radial_sq,radial_method,bound_flag,"
                     "omega_tilde,tau_tilde,f,omega_rad_per_s,sigma_abs_max_m2,"
                     "spontaneous_gw_rate_per_s,branching_ratio,rate_monochromatic_per_s,"
                     "rate_broadband_per_radps\n";
        std::cout << lower.n << "," << lower.l << "," << lower.twoj << "," << lower.z << ","
                  << args.dn << "," << args.dj << "," << path << "," << sci(factor.c2) << ","
                  << sci(factor.radial_sq) << "," << hydrogenic::method_name(factor.radial_method)
                  << "," << (factor.bound_flag ? 1 : 0) << "," << sci(factor.omega_tilde) << ","
                  << sci(factor.tau_tilde) << "," << sci(factor.f) << "," << sci(omega) << ","
                  << sci(sigma) << "," << sci(gamma_gr) << "," << sci(eta) << ","
                  << (rate_mono ? sci(*rate_mono) : "") << ","
                  << (rate_broad ? sci(*rate_broad) : "") << "\n";
    } else if (args.format == "table") {
        std::printf("transition %s -> %s  [%s]\n", lower.label().c_str(), upper.label().c_str(),
                    path.c_str());
        std::printf("  %-28s %s\n", "angular factor C", sci(factor.c2).c_str());
        std::printf("  %-28s %s  (%s%s)\n", "radial integral^2", sci(factor.radial_sq).c_str(),
                    hydrogenic::method_name(factor.radial_method),
                    factor.bound_flag ? ", upper bound" : "");
        std::printf("  %-28s %s\n", "omega (normalized)", sci(factor.omega_tilde).c_str());
        std::printf("  %-28s %s\n", "pair lifetime (normalized)", sci(factor.tau_tilde).c_str());
        std::printf("  %-28s %s\n", "strength factor f", sci(factor.f).c_str());
        std::printf("  %-28s %s\n", "omega [rad/s]", sci(omega).c_str());
        std::printf("  %-28s %s\n", "pair lifetime [s]", sci(tau_pair).c_str());
        std::printf("  %-28s %s\n", "sigma_abs max [m^2]", sci(sigma).c_str());
        std::printf("  %-28s %s\n", "spontaneous gw rate [1/s]", sci(gamma_gr).c_str());
        std::printf("  %-28s %s\n", "branching ratio", sci(eta).c_str());
        if (rate_mono)
            std::printf("  %-28s %s\n", "monochromatic rate [1/s]", sci(*rate_mono).c_str());
        if (rate_broad)
            std::printf("  %-28s %s\n", "broadband rate [1/(s rad/s)]", sci(*rate_broad).c_str());
    } else {
        throw CLI::ValidationError("--format", "expected table, json or csv");
    }
    return 0;
}

// ---------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------

struct SweepArgs {
    std::string var = "n";
    double from = 0.0;
    double to = 0.0;
    long points = 0;
    double step = 0.0;
    bool log_scale = false;
    int z = 1;
    int dn = 1;
    int dj = 2;
    long n_fixed = 0;
    double amplitude = 0.0;
    double spectral_flux = 0.0;
    bool serial = false;
    std::string format = "csv";
};

int cmd_sweep(const SweepArgs& args)
{
    sweep::SweepSpec spec;
    if (args.var == "n")
        spec.variable = sweep::Variable::n;
    else if (args.var == "l")
        spec.variable = sweep::Variable::l;
    else if (args.var == "omega")
        spec.variable = sweep::Variable::omega;
    else if (args.var == "amplitude")
        spec.variable = sweep::Variable::amplitude;
    else
        throw CLI::ValidationError("--var", "expected n, l, omega or amplitude");

    spec.start = args.from;
    spec.stop = args.to;
    spec.count = args.points;
    spec.step = args.step;
    spec.scale = args.log_scale ? sweep::Scale::log : sweep::Scale::linear;
    spec.z = args.z;
    spec.dn = args.dn;
    spec.dj = args.dj;
    spec.n_fixed = args.n_fixed;
    spec.amplitude = args.amplitude;
    spec.spectral_flux = args.spectral_flux;

    const auto rows = sweep::run_sweep(spec, args.serial ? sweep::Execution::serial
                                                         : sweep::Execution::parallel);

    if (args.format == "csv") {
        std::cout << "x,n,l,twoj,omega_rad_per_s,f,sigma_abs_max_m2,"
                     "rate_monochromatic_per_s,rate_broadband_per_radps,radial_method,bound_flag\n";
        for (const auto& r : rows) {
            std::cout << sci(r.x) << "," << r.n << "," << r.l << "," << r.twoj << ","
                      << sci(r.omega) << "," << sci(r.f) << "," << sci(r.sigma_max) << ","
                      << sci(r.rate_monochromatic) << "," << sci(r.rate_broadband) << ","
                      << hydrogenic::method_name(r.radial_method) << ","
                      << (r.bound_flag ? 1 : 0) << "\n";
        }
    } else if (args.format == "json") {
        ordered_json out;
        out["schema"] = schema_header("rydgrav.sweep");
        out["variable"] = args.var;
        ordered_json jrows = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json jr;
            jr["x"] = r.x;
            jr["n"] = r.n;
            jr["l"] = r.l;
            jr["twoj"] = r.twoj;
            jr["omega_rad_per_s"] = r.omega;
            jr["f"] = r.f;
            jr["sigma_abs_max_m2"] = r.sigma_max;
            jr["rate_monochromatic_per_s"] = r.rate_monochromatic;
            jr["rate_broadband_per_radps"] = r.rate_broadband;
            jr["radial_method"] = hydrogenic::method_name(r.radial_method);
            jr["bound_flag"] = r.bound_flag;
            jrows.push_back(jr);
        }
        out["rows"] = jrows;
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "table") {
        std::printf("%-14s %-9s %-9s %-14s %-14s %-14s\n", "x", "n", "l", "omega[rad/s]", "f",
                    "rate[1/s]");
        for (const auto& r : rows)
            std::printf("%-14.6g %-9ld %-9ld %-14.6g %-14.6g %-14.6g\n", r.x, r.n, r.l, r.omega,
                        r.f, r.rate_monochromatic);
    } else {
        throw CLI::ValidationError("--format", "expected csv, json or table");
    }
    return 0;
}

// ---------------------------------------------------------------------
// feasibility
// ---------------------------------------------------------------------

struct FeasibilityArgs {
    std::string catalog_path;
    std::string source_name;
    int z = 1;
    int dn = 1;
    int dj = 2;
    double target_events = 3.0;
    std::string format = "table";
};

ordered_json feasibility_json(const detector::FeasibilityReport& r)
{
    ordered_json out;
    out["schema"] = schema_header("rydgrav.feasibility");
    out["source"] = r.source_name;
    out["z"] = r.z;
    out["dn"] = r.dn;
    out["matched_n"] = r.matched_n;
    out["residual_detuning_linewidths"] = r.residual_detuning;
    out["omega_source_rad_per_s"] = r.omega_source;
    out["omega_resonant_rad_per_s"] = r.omega_resonant;
    out["amplitude_used"] = r.amplitude_used;
    out["rate_per_atom_per_s"] = r.rate_per_atom;
    out["target_events_per_year"] = r.target_events_per_year;
    if (std::isfinite(r.atoms_for_target))
        out["atoms_for_target"] = r.atoms_for_target;
    else
        out["atoms_for_target"] = nullptr; // infinite: the rate vanishes
    out["single_state_lifetime_years"] = r.single_state_lifetime_years;
    out["combined_lifetime_years"] = r.combined_lifetime_years;
    out["bandwidth_rel"] = r.bandwidth_rel;
    out["b_ceiling_gauss"] = r.b_ceiling_gauss;
    out["b_ceiling_tesla"] = r.b_ceiling_tesla;
    out["doppler_amplitude"] = r.doppler_amplitude;
    out["in_band_fraction_per_day"] = r.in_band_fraction_per_day;
    if (std::isfinite(r.in_band_dwell_seconds))
        out["in_band_dwell_seconds"] = r.in_band_dwell_seconds;
    else
        out["in_band_dwell_seconds"] = nullptr; // always in band
    out["always_in_band"] = r.always_in_band;
    out["required_velocity_stability_mps"] = r.required_velocity_stability_mps;
    out["source_coherence_bandwidth_rad_per_s"] = r.source_coherence_bandwidth;
    out["transition_width_rad_per_s"] = r.transition_width;
    out["monochromaticity"] = r.monochromaticity_satisfied ? "satisfied" : "violated";
    return out;
}

int cmd_feasibility(const FeasibilityArgs& args)
{
    std::string path = args.catalog_path;
    if (path.empty()) {
        if (const char* env = std::getenv("RYDGRAV_CATALOG"))
            path = env;
    }
    if (path.empty())
        throw CLI::ValidationError("--catalog",
                                   "no catalog given (flag --catalog or RYDGRAV_CATALOG)");

    const auto catalog = detector::load_catalog_file(path);
    const auto& source = detector::find_source(catalog, args.source_name);

    detector::FeasibilityOptions options;
    options.z = args.z;
    options.dn = args.dn;
    options.dj = args.dj;
    options.target_events_per_year = args.target_events;
    const auto report = detector::feasibility_report(source, options);

    if (args.format == "json") {
        std::cout << feasibility_json(report).dump(2) << "\n";
        return 0;
    }
    if (args.format != "table")
        throw CLI::ValidationError("--format", "expected table or json");

    std::printf("feasibility: %s (Z=%d, dn=%d)\n", report.source_name.c_str(), report.z, report.dn);
    std::printf("  %-34s %ld\n", "matched principal n", report.matched_n);
    std::printf("  %-34s %.6g\n", "residual detuning [linewidths]", report.residual_detuning);
    std::printf("  %-34s %.6g\n", "source omega [rad/s]", report.omega_source);
    std::printf("  %-34s %.6g\n", "resonant omega [rad/s]", report.omega_resonant);
    std::printf("  %-34s %.3g\n", "strain amplitude |A|", report.amplitude_used);
    std::printf("  %-34s %.6g\n", "rate per atom [1/s]", report.rate_per_atom);
    std::printf("  %-34s %.3g\n", "target events per year", report.target_events_per_year);
    if (std::isfinite(report.atoms_for_target))
        std::printf("  %-34s %.6g\n", "atoms for target", report.atoms_for_target);
    else
        std::printf("  %-34s %s\n", "atoms for target", "infinite (zero rate)");
    std::printf("  %-34s %.6g\n", "circular-state lifetime [yr]",
                report.single_state_lifetime_years);
    std::printf("  %-34s %.6g\n", "pair lifetime [yr]", report.combined_lifetime_years);
    std::printf("  %-34s %.6g\n", "detector bandwidth df/f", report.bandwidth_rel);
    std::printf("  %-34s %.6g (%.6g T)\n", "B ceiling [gauss]", report.b_ceiling_gauss,
                report.b_ceiling_tesla);
    std::printf("  %-34s %.6g\n", "Doppler amplitude", report.doppler_amplitude);
    std::printf("  %-34s %.6g\n", "in-band fraction per day", report.in_band_fraction_per_day);
    if (std::isfinite(report.in_band_dwell_seconds))
        std::printf("  %-34s %.6g\n", "in-band dwell [s]", report.in_band_dwell_seconds);
    else
        std::printf("  %-34s %s\n", "in-band dwell [s]", "always in band");
    std::printf("  %-34s %.6g\n", "required velocity stability [m/s]",
                report.required_velocity_stability_mps);
    std::printf("  %-34s %s\n", "monochromaticity",
                report.monochromaticity_satisfied ? "satisfied" : "VIOLATED");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gravitational-wave absorption by Rydberg atoms"};
    app.require_subcommand(1);

    TransitionArgs targs;
    auto* transition = app.add_subcommand("transition", "evaluate one transition");
    transition->add_option("--n", targs.n, "principal quantum number of the lower state")->required();
    transition->add_option("--l", targs.l, "orbital quantum number of the lower state")->required();
    transition->add_option("--j", targs.j_text,
                           "total angular momentum: 2j integer or p/2 (default l+1/2)");
    transition->add_option("--z", targs.z, "core charge number");
    transition->add_option("--dn", targs.dn, "principal quantum number step");
    transition->add_option("--dj", targs.dj, "total angular momentum step");
    transition->add_option("--amplitude", targs.amplitude, "strain amplitude |A| per polarization");
    transition->add_option("--spectral-flux", targs.spectral_flux,
                           "spectral flux [W/m^2 per rad/s]");
    transition->add_option("--mode", targs.mode, "radial mode: auto, exact, asymptotic");
    transition->add_option("--format", targs.format, "output: table, json, csv");

    SweepArgs sargs;
    auto* sw = app.add_subcommand("sweep", "sweep a variable along a transition ladder");
    sw->add_option("--var", sargs.var, "swept variable: n, l, omega, amplitude")->required();
    sw->add_option("--from", sargs.from, "range start")->required();
    sw->add_option("--to", sargs.to, "range stop")->required();
    sw->add_option("--points", sargs.points, "number of grid points");
    sw->add_option("--step", sargs.step, "linear step (integer for n and l)");
    sw->add_flag("--log", sargs.log_scale, "log-spaced grid");
    sw->add_option("--z", sargs.z, "core charge number");
    sw->add_option("--dn", sargs.dn, "principal quantum number step");
    sw->add_option("--dj", sargs.dj, "total angular momentum step (0, +1, +2)");
    sw->add_option("--n-fixed", sargs.n_fixed, "anchor n for l and amplitude sweeps");
    sw->add_option("--amplitude", sargs.amplitude, "strain amplitude |A| per polarization");
    sw->add_option("--spectral-flux", sargs.spectral_flux, "spectral flux [W/m^2 per rad/s]");
    sw->add_flag("--serial", sargs.serial, "use the serial reference path");
    sw->add_option("--format", sargs.format, "output: csv, json, table");

    FeasibilityArgs fargs;
    auto* feas = app.add_subcommand("feasibility",
                                    "detector feasibility report for a catalog source");
    feas->add_option("--catalog", fargs.catalog_path,
                     "source catalog file (default $RYDGRAV_CATALOG)");
    feas->add_option("--source", fargs.source_name, "source name in the catalog")->required();
    feas->add_option("--z", fargs.z, "core charge number");
    feas->add_option("--dn", fargs.dn, "principal quantum number step");
    feas->add_option("--dj", fargs.dj, "total angular momentum step");
    feas->add_option("--target-events", fargs.target_events, "events per year to budget atoms for");
    feas->add_option("--format", fargs.format, "output: table, json");

    try {
        app.parse(argc, argv);
        if (transition->parsed())
            return cmd_transition(targs);
        if (sw->parsed())
            return cmd_sweep(sargs);
        if (feas->parsed())
            return cmd_feasibility(fargs);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const invalid_state& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_transition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const detector::CatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const capability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
