#pragma once

/// Physical constants and the normalization scheme used throughout the
/// library.
///
/// Everything downstream of this header works with dimensionless "tilde"
/// quantities: angular frequencies in units of the atomic frequency
/// 4.134e16 Z^2 rad/s, lifetimes in units of 1.245e-10 Z^-4 s, lengths in
/// units of a0/Z.  Physical units enter and leave only through the
/// conversion helpers below.  Keeping the core dimensionless avoids the
/// Gaussian-vs-SI traps of expressions like e^2 = alpha*hbar*c and keeps
/// intermediate values finite at principal quantum numbers ~1e5.
///
/// Two constant sets are provided: the CODATA set used for computation,
/// and the rounded values printed in the literature this library
/// reproduces, kept as golden numbers for regression tests.

#include "rydgrav/errors.hpp"

namespace rydgrav {

/// SI values; immutable after construction, safe for concurrent reads.
struct PhysicalConstants {
    double speed_of_light;            // m/s
    double hbar;                      // J s
    double fine_structure;            // dimensionless
    double electron_mass_energy;      // J (m_e c^2)
    double gravitational_constant;    // m^3 kg^-1 s^-2
    double bohr_radius;               // m
    double classical_electron_radius; // m
    double rydberg_energy;            // J
    double planck_length;             // m
    double grav_em_ratio;             // m_e^2 G / e^2 (Gaussian e^2 = alpha hbar c)

    double electron_mass() const { return electron_mass_energy / (speed_of_light * speed_of_light); }

    /// e^2 in the Gaussian sense, J m.
    double gaussian_e_squared() const { return fine_structure * hbar * speed_of_light; }

    /// CODATA 2018 values.
    static const PhysicalConstants& si();

    /// Same constants converted to cm/g/s (erg for energies).  Used by the
    /// units-audit tests to confirm formulas scale covariantly.
    PhysicalConstants to_cgs() const;
};

/// Rounded constants as printed in the source literature; golden values
/// for tests, never used in computation.
struct PaperValues {
    static constexpr double planck_length = 1.616e-35;            // m
    static constexpr double classical_electron_radius = 2.817e-15; // m
    static constexpr double grav_em_ratio = 2.4e-43;
    static constexpr double omega_unit = 4.134e16;                // rad/s at Z=1
    static constexpr double tau_unit = 1.245e-10;                 // s at Z=1
};

/// Conversion factors between tilde quantities and physical units for a
/// given core charge.
struct NormalizationSet {
    double omega_unit;  // rad/s per unit omega-tilde (already includes Z^2)
    double tau_unit;    // s per unit tau-tilde (already includes Z^-4)
    double length_unit; // m, a0/Z
    double r2_unit;     // m^2, (a0/Z)^2

    static NormalizationSet for_charge(int z, const PhysicalConstants& pc = PhysicalConstants::si());
};

/// omega = omega_tilde * m_e c^2 (alpha Z)^2 / hbar, in rad/s.
double to_physical_omega(double omega_tilde, int z, const PhysicalConstants& pc = PhysicalConstants::si());
double from_physical_omega(double omega, int z, const PhysicalConstants& pc = PhysicalConstants::si());

/// tau = tau_tilde * 2 hbar / (m_e c^2 alpha^5 Z^4), in seconds.
double to_physical_lifetime(double tau_tilde, int z, const PhysicalConstants& pc = PhysicalConstants::si());
double from_physical_lifetime(double tau, int z, const PhysicalConstants& pc = PhysicalConstants::si());

inline constexpr double seconds_per_year = 3.156e7;

} // namespace rydgrav
