#include "rydgrav/constants.hpp"

#include <cmath>

namespace rydgrav {

const PhysicalConstants& PhysicalConstants::si()
{
    // CODATA 2018 primaries; the combination constants (Bohr radius,
    // Planck length, gravitational/electromagnetic ratio) are derived from
    // them so that cross-section and branching identities hold to full
    // double precision rather than to the printed digits.
    static const PhysicalConstants c = [] {
        PhysicalConstants p{};
        p.speed_of_light = 299792458.0;
        p.hbar = 1.054571817e-34;
        p.fine_structure = 7.2973525693e-3;
        p.electron_mass_energy = 8.1871057769e-14;
        p.gravitational_constant = 6.67430e-11;
        p.classical_electron_radius = 2.8179403262e-15;
        p.rydberg_energy = 2.1798723611035e-18;
        p.bohr_radius = p.hbar / (p.electron_mass() * p.speed_of_light * p.fine_structure);
        p.planck_length = std::sqrt(p.hbar * p.gravitational_constant
                                    / std::pow(p.speed_of_light, 3));
        p.grav_em_ratio = p.electron_mass() * p.electron_mass() * p.gravitational_constant
                        / p.gaussian_e_squared();
        return p;
    }();
    return c;
}

PhysicalConstants PhysicalConstants::to_cgs() const
{
    PhysicalConstants c = *this;
    c.speed_of_light *= 1e2;             // cm/s
    c.hbar *= 1e7;                       // erg s
    c.electron_mass_energy *= 1e7;       // erg
    c.gravitational_constant *= 1e3;     // cm^3 g^-1 s^-2
    c.bohr_radius *= 1e2;                // cm
    c.classical_electron_radius *= 1e2;  // cm
    c.rydberg_energy *= 1e7;             // erg
    c.planck_length *= 1e2;              // cm
    // grav_em_ratio and alpha are dimensionless
    return c;
}

NormalizationSet NormalizationSet::for_charge(int z, const PhysicalConstants& pc)
{
    if (z < 1)
        throw invalid_state("core charge Z must be a positive integer");
    const double zz = static_cast<double>(z) * z;
    const double alpha = pc.fine_structure;
    NormalizationSet n;
    n.omega_unit = pc.electron_mass_energy * alpha * alpha / pc.hbar * zz;
    n.tau_unit = 2.0 * pc.hbar / (pc.electron_mass_energy * std::pow(alpha, 5) * zz * zz);
    n.length_unit = pc.bohr_radius / z;
    n.r2_unit = n.length_unit * n.length_unit;
    return n;
}

double to_physical_omega(double omega_tilde, int z, const PhysicalConstants& pc)
{
    if (!(omega_tilde > 0.0))
        throw std::domain_error("omega_tilde must be positive");
    return omega_tilde * NormalizationSet::for_charge(z, pc).omega_unit;
}

double from_physical_omega(double omega, int z, const PhysicalConstants& pc)
{
    if (!(omega > 0.0))
        throw std::domain_error("omega must be positive");
    return omega / NormalizationSet::for_charge(z, pc).omega_unit;
}

double to_physical_lifetime(double tau_tilde, int z, const PhysicalConstants& pc)
{
    if (!(tau_tilde > 0.0))
        throw std::domain_error("tau_tilde must be positive");
    return tau_tilde * NormalizationSet::for_charge(z, pc).tau_unit;
}

double from_physical_lifetime(double tau, int z, const PhysicalConstants& pc)
{
    if (!(tau > 0.0))
        throw std::domain_error("tau must be positive");
    return tau / NormalizationSet::for_charge(z, pc).tau_unit;
}

} // namespace rydgrav
