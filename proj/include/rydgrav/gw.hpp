#pragma once

/// Gravitational-wave coupling of quasi-hydrogenic transitions: the
/// dimensionless strength factor
///
///     f = C * I~^2 * w~^3 * tau~
///
/// (reduced angular factor, normalized radial integral squared,
/// normalized frequency cubed, normalized combined lifetime), peak
/// absorption cross sections, spontaneous emission rates, branching
/// ratios, absorption rates for broadband and monochromatic waves, and
/// the classical-limit consistency ratio for circular orbits.

#include "rydgrav/angular.hpp"
#include "rydgrav/constants.hpp"
#include "rydgrav/hydrogenic.hpp"
#include "rydgrav/lifetimes.hpp"
#include "rydgrav/quantum_state.hpp"

namespace rydgrav::gw {

using hydrogenic::RadialMethod;
using hydrogenic::RadialMode;

/// Normalized transition frequency.  Uses delta_n / n^3 deep in the
/// Rydberg regime (delta_n / n < 1e-2) and the exact level difference
/// (1/n^2 - 1/n'^2)/2 otherwise.
double omega_tilde_transition(const QuantumState& a, const QuantumState& b);

struct TransitionFactor {
    double f = 0.0;
    double c2 = 0.0;              // reduced angular factor
    double radial_sq = 0.0;       // I~^2
    double omega_tilde = 0.0;
    double omega_tilde_cubed = 0.0;
    double tau_tilde = 0.0;       // combined lifetime bound
    RadialMethod radial_method = RadialMethod::exact_quadrature;
    /// True when the radial integral came from a bound (asymptotic or
    /// Schwarz), making f an upper bound rather than a value.
    bool bound_flag = false;
};

TransitionFactor transition_factor(const QuantumState& a, const QuantumState& b,
                                   RadialMode mode = RadialMode::automatic);

/// Peak absorption cross section (16 pi / 15) L*^2 alpha^-3 Z^-2 f, m^2.
double sigma_abs_max(const QuantumState& a, const QuantumState& b,
                     RadialMode mode = RadialMode::automatic,
                     const PhysicalConstants& pc = PhysicalConstants::si());

/// Same cross section through the branching-ratio route
/// 2 pi c^2 (g'/g) w^-2 eta; independent arithmetic path kept for
/// cross-checking.
double sigma_abs_max_via_branching(const QuantumState& a, const QuantumState& b,
                                   RadialMode mode = RadialMode::automatic,
                                   const PhysicalConstants& pc = PhysicalConstants::si());

struct ProfiledCrossSection {
    double value = 0.0; // m^2
    /// The Lorentzian profile is valid near resonance; false when the
    /// requested detuning is a sizeable fraction of the line frequency.
    bool within_validity = true;
};

ProfiledCrossSection sigma_abs_profile(const QuantumState& a, const QuantumState& b,
                                       double omega_tilde,
                                       RadialMode mode = RadialMode::automatic,
                                       const PhysicalConstants& pc = PhysicalConstants::si());

/// Total spontaneous gravitational emission rate upper -> lower, 1/s.
double spontaneous_gw_rate(const QuantumState& upper, const QuantumState& lower,
                           RadialMode mode = RadialMode::automatic,
                           const PhysicalConstants& pc = PhysicalConstants::si());

/// Branching ratio eta = gravitational rate / electromagnetic width,
/// evaluated in normalized form
///   (8/15) (m_e^2 G / e^2) (alpha Z)^2 (g/g') C I~^2 w~^5 tau~.
double branching_ratio(const QuantumState& upper, const QuantumState& lower,
                       RadialMode mode = RadialMode::automatic,
                       const PhysicalConstants& pc = PhysicalConstants::si());

struct WaveField {
    enum class Mode { broadband_spectral, monochromatic };

    Mode mode = Mode::monochromatic;
    double omega = 0.0;         // rad/s; ties flux to strain amplitudes
    double spectral_flux = 0.0; // W m^-2 per rad/s, at resonance
    double total_flux = 0.0;    // W m^-2
    double a_plus = 0.0;        // dimensionless strain
    double a_cross = 0.0;

    double amp_sq() const { return a_plus * a_plus + a_cross * a_cross; }

    static WaveField broadband(double omega, double spectral_flux);
    /// Monochromatic wave from polarization amplitudes; fills the total
    /// flux S = c^3 w^2 (|Ax|^2 + |A+|^2) / (32 pi G).
    static WaveField monochromatic_amplitudes(double omega, double a_plus, double a_cross,
                                              const PhysicalConstants& pc = PhysicalConstants::si());
    /// Monochromatic wave from total flux; fills the characteristic
    /// amplitude |A| = sqrt(16 pi G S / (c^3 w^2)) into both polarizations.
    static WaveField monochromatic_flux(double omega, double total_flux,
                                        const PhysicalConstants& pc = PhysicalConstants::si());
};

/// Fills whichever representation (flux or amplitudes) is missing from a
/// monochromatic field; round-trips to ~1e-12 relative.
WaveField amplitude_flux_convert(const WaveField& field,
                                 const PhysicalConstants& pc = PhysicalConstants::si());

/// Resonant absorption rate per unit (angular) frequency interval for a
/// broadband spectral flux:
///   (16 pi / 15) L*^2 alpha^-5 Z^-4 (S(w0)/m_e c^2) w~0^-1 f.
double absorption_rate_broadband(const QuantumState& a, const QuantumState& b,
                                 const WaveField& field,
                                 RadialMode mode = RadialMode::automatic,
                                 const PhysicalConstants& pc = PhysicalConstants::si());

/// Absorption rate for nearly monochromatic waves (bandwidth much below
/// the transition width; the caller asserts that condition):
///   (1/30) (c/r0) (|Ax|^2 + |A+|^2) w~ f,   1/s.
double absorption_rate_monochromatic(const QuantumState& a, const QuantumState& b,
                                     const WaveField& field,
                                     RadialMode mode = RadialMode::automatic,
                                     const PhysicalConstants& pc = PhysicalConstants::si());

/// Closed form of the monochromatic rate for transitions between nearly
/// circular orbits:
///   (1/80) (c/r0) (|Ax|^2 + |A+|^2) C (dn)^4 (l+1/2)^2 / n.
/// Takes the orbital parameters directly so the idealized circular chain
/// (where the bookkeeping upper state has no exact quantum numbers) can
/// be evaluated.
double absorption_rate_monochromatic_circular(double n, double l_plus_half, double c2, int dn,
                                              const WaveField& field,
                                              const PhysicalConstants& pc = PhysicalConstants::si());

/// Same fast path from a lower state plus (dn, dj); the angular factor
/// comes from the table row at the state's j.
double absorption_rate_monochromatic_circular(const QuantumState& lower, int dn, int dj,
                                              const WaveField& field,
                                              const PhysicalConstants& pc = PhysicalConstants::si());

/// Idealized delta-n chain between nearly circular orbits, used where the
/// bookkeeping upper state of a transition has no exact quantum numbers
/// (e.g. delta j = +2 from an exactly circular state).  The angular
/// factor comes from the table row at the lower state's j, the radial
/// factor from the circular geometric-mean asymptote, and the lifetime
/// from the circular pair at (n, n + dn).
struct CircularChain {
    QuantumState lower;
    QuantumState upper; // circular bookkeeping state at n + dn
    int dj = +2;
    double g_ratio = 0.0; // g_lower / g_upper with j_upper = j + dj
    TransitionFactor factor;
};

CircularChain circular_chain(const QuantumState& lower, int dn = 1, int dj = +2);

double sigma_abs_max(const CircularChain& chain,
                     const PhysicalConstants& pc = PhysicalConstants::si());
double spontaneous_gw_rate(const CircularChain& chain,
                           const PhysicalConstants& pc = PhysicalConstants::si());
double branching_ratio(const CircularChain& chain,
                       const PhysicalConstants& pc = PhysicalConstants::si());
double absorption_rate_monochromatic(const CircularChain& chain, const WaveField& field,
                                     const PhysicalConstants& pc = PhysicalConstants::si());
double absorption_rate_broadband(const CircularChain& chain, const WaveField& field,
                                 const PhysicalConstants& pc = PhysicalConstants::si());

/// Peak absorption cross section over the geometric cross section
/// 4 pi <r^2> of the initial state:
///   (8/15) (G m_e^2 / e^2) f / ((5 n^2 + 1 - 3 l (l+1)) n^2).
/// Contains no hbar; purely classical combination of G, e, m_e.
double cross_section_ratio(const QuantumState& a, const QuantumState& b,
                           RadialMode mode = RadialMode::automatic,
                           const PhysicalConstants& pc = PhysicalConstants::si());

/// Correspondence-principle ratio for a circular state: spontaneous
/// quantum rate over the classical quadrupole emission rate
/// P/(hbar w) with P = (1/10) (G m_e^2 / c^5) w^6 r^4 at r = n^2 a0 / Z.
/// Tends to 1 from above as n grows.
double classical_limit_check(const QuantumState& circular, int dn = 1,
                             const PhysicalConstants& pc = PhysicalConstants::si());

} // namespace rydgrav::gw
