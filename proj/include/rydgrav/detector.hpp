#pragma once

/// Source-to-experiment feasibility: matching a wave frequency to a
/// principal quantum number, magnetic-field ceilings for n to stay a good
/// quantum number, Doppler duty cycles, and the composed feasibility
/// report for a catalog source.

#include "rydgrav/constants.hpp"
#include "rydgrav/gw.hpp"
#include "rydgrav/quantum_state.hpp"

#include <optional>
#include <string>

namespace rydgrav::detector {

/// Pulsar-like continuous-wave emitter.  Exactly one of strain amplitude
/// and flux is given; the other representation is derived where needed.
struct GwSource {
    std::string name;
    double omega = 0.0; // rad/s (angular frequency)
    std::optional<double> amplitude;      // characteristic |A|, dimensionless
    std::optional<double> flux;           // W/m^2 total
    std::optional<double> amplitude_min;  // optional published range
    std::optional<double> amplitude_max;
    double spindown_years = 0.0;          // source coherence time
    double los_velocity_mps = 0.0;        // line-of-sight Doppler amplitude
};

struct MatchResult {
    long n = 0;
    double residual_linewidths = 0.0; // (omega - omega_n) / Gamma at that n
    double omega_resonant = 0.0;      // rad/s of the matched transition
};

/// n = round((dn * omega_unit(Z) / omega)^(1/3)), with the published
/// rounded frequency unit so published level assignments are reproduced.
/// Exact resonance requires an integer n; the residual is reported in
/// units of the circular-transition linewidth at the matched n and is
/// astronomically large for generic frequencies.
MatchResult match_principal_n(double omega, int z, int dn = 1,
                              const PhysicalConstants& pc = PhysicalConstants::si());

/// Ceiling on the ambient magnetic field for n to remain a good quantum
/// number: semiclassical diamagnetic energy of the circular orbit equal
/// to the level spacing,
///   B = sqrt(8) Z^2 a0^-1 (2 Ryd / r0)^(1/2) n^-3.5
/// evaluated in Gaussian units (about 6.6e9 Z^2 n^-3.5 gauss).
double b_field_ceiling_gauss(double n, int z, const PhysicalConstants& pc = PhysicalConstants::si());
double b_field_ceiling_tesla(double n, int z, const PhysicalConstants& pc = PhysicalConstants::si());

struct DutyCycle {
    double fraction_per_day = 0.0;
    double dwell_seconds = 0.0; // per band crossing
    bool always_in_band = false;
};

/// Diurnal sinusoidal Doppler model: the relative shift sweeps
/// D sin(2 pi t / day); the detector is in band while the shift sits
/// within +-bandwidth_rel of resonance.  The band is crossed twice a day;
/// the dwell is the crossing time at the maximum slew rate 2 pi D / day.
DutyCycle duty_cycle(double doppler_amplitude_rel, double bandwidth_rel);
DutyCycle duty_cycle(const GwSource& source, double bandwidth_rel,
                     const PhysicalConstants& pc = PhysicalConstants::si());

/// ceil(target / (rate * seconds_per_year)); at least one atom.
double atoms_for_events(double rate_per_atom, double target_events_per_year);

struct FeasibilityOptions {
    int z = 1;
    int dn = 1;
    int dj = +2;
    double target_events_per_year = 3.0;
};

struct FeasibilityReport {
    std::string source_name;
    int z = 1;
    int dn = 1;

    long matched_n = 0;
    double residual_detuning = 0.0;  // linewidths
    double omega_source = 0.0;       // rad/s
    double omega_resonant = 0.0;     // rad/s

    double amplitude_used = 0.0;
    double rate_per_atom = 0.0;          // 1/s
    double target_events_per_year = 0.0;
    double atoms_for_target = 0.0;       // +inf when the rate vanishes

    double single_state_lifetime_years = 0.0; // circular state at matched n
    double combined_lifetime_years = 0.0;     // transition pair
    double bandwidth_rel = 0.0;               // df/f of the detector

    double b_ceiling_gauss = 0.0;
    double b_ceiling_tesla = 0.0;

    double doppler_amplitude = 0.0;
    double in_band_fraction_per_day = 0.0;
    double in_band_dwell_seconds = 0.0;
    bool always_in_band = false;
    double required_velocity_stability_mps = 0.0;

    double source_coherence_bandwidth = 0.0; // rad/s, ~1/spindown time
    double transition_width = 0.0;           // rad/s
    bool monochromaticity_satisfied = false;
};

/// Composes the matched resonance, circular-chain absorption rate, atom
/// budget, field ceiling and duty cycle for one source.  Pure function of
/// its inputs; byte-reproducible.
FeasibilityReport feasibility_report(const GwSource& source, const FeasibilityOptions& options = {},
                                     const PhysicalConstants& pc = PhysicalConstants::si());

} // namespace rydgrav::detector
