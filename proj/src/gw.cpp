#include "rydgrav/gw.hpp"

#include <cmath>
#include <numbers>

namespace rydgrav::gw {

namespace {

using std::numbers::pi;

constexpr double rydberg_frequency_threshold = 1e-2; // delta_n / n

void require_same_charge(const QuantumState& a, const QuantumState& b)
{
    if (a.z != b.z)
        throw std::domain_error("transition requires equal core charge Z");
}

// (16 pi / 15) L*^2 alpha^-3 Z^-2 f
double sigma_from_factor(double f, int z, const PhysicalConstants& pc)
{
    const double lp2 = pc.planck_length * pc.planck_length;
    return (16.0 * pi / 15.0) * lp2 / std::pow(pc.fine_structure, 3)
         / (static_cast<double>(z) * z) * f;
}

// Spontaneous gravitational rate from components, 1/s:
// (4/15) (G m_e^2 / (hbar c^5)) (a0/Z)^4 w^5 (g/g') C I~^2
double spontaneous_rate_from_components(double omega, double g_ratio, double c2,
                                        double radial_sq, int z, const PhysicalConstants& pc)
{
    const double me = pc.electron_mass();
    const double c5 = std::pow(pc.speed_of_light, 5);
    const double length = pc.bohr_radius / z;
    const double w = omega;
    return (4.0 / 15.0) * pc.gravitational_constant * me * me / (pc.hbar * c5)
         * std::pow(length, 4) * std::pow(w, 5) * g_ratio * c2 * radial_sq;
}

} // namespace

double omega_tilde_transition(const QuantumState& a, const QuantumState& b)
{
    require_same_charge(a, b);
    const auto [lower, upper] = lifetimes::order_pair(a, b);
    if (lower.n == upper.n)
        throw std::domain_error("degenerate pair: fine-structure splitting carries no "
                                "transition frequency here");
    const double n = static_cast<double>(lower.n);
    const double np = static_cast<double>(upper.n);
    const double dn = np - n;
    if (dn / n < rydberg_frequency_threshold)
        return dn / (n * n * n);
    return 0.5 * (1.0 / (n * n) - 1.0 / (np * np));
}

TransitionFactor transition_factor(const QuantumState& a, const QuantumState& b, RadialMode mode)
{
    require_same_charge(a, b);
    const auto [lower, upper] = lifetimes::order_pair(a, b);

    TransitionFactor t;
    t.c2 = angular::reduced_c2(lower, upper);
    const auto radial = hydrogenic::radial_integral(lower, upper, mode);
    t.radial_sq = radial.value * radial.value;
    t.radial_method = radial.method;
    t.bound_flag = radial.is_bound();
    t.omega_tilde = omega_tilde_transition(lower, upper);
    t.omega_tilde_cubed = t.omega_tilde * t.omega_tilde * t.omega_tilde;
    t.tau_tilde = lifetimes::combined_lifetime(lower, upper);
    t.f = t.c2 * t.radial_sq * t.omega_tilde_cubed * t.tau_tilde;
    return t;
}

double sigma_abs_max(const QuantumState& a, const QuantumState& b, RadialMode mode,
                     const PhysicalConstants& pc)
{
    return sigma_from_factor(transition_factor(a, b, mode).f, a.z, pc);
}

double sigma_abs_max_via_branching(const QuantumState& a, const QuantumState& b, RadialMode mode,
                                   const PhysicalConstants& pc)
{
    const auto [lower, upper] = lifetimes::order_pair(a, b);
    const double eta = branching_ratio(upper, lower, mode, pc);
    const double omega = to_physical_omega(omega_tilde_transition(lower, upper), lower.z, pc);
    const double g_ratio = static_cast<double>(upper.degeneracy()) / lower.degeneracy();
    const double c = pc.speed_of_light;
    return 2.0 * pi * c * c * g_ratio / (omega * omega) * eta;
}

ProfiledCrossSection sigma_abs_profile(const QuantumState& a, const QuantumState& b,
                                       double omega_tilde, RadialMode mode,
                                       const PhysicalConstants& pc)
{
    const auto t = transition_factor(a, b, mode);
    const double peak = sigma_abs_max(a, b, mode, pc);
    const double gamma = 1.0 / t.tau_tilde;
    const double d = omega_tilde - t.omega_tilde;
    const double hw2 = 0.25 * gamma * gamma;

    ProfiledCrossSection out;
    out.value = peak * hw2 / (d * d + hw2);
    out.within_validity = std::fabs(d) < 0.1 * t.omega_tilde;
    return out;
}

double spontaneous_gw_rate(const QuantumState& upper, const QuantumState& lower, RadialMode mode,
                           const PhysicalConstants& pc)
{
    require_same_charge(upper, lower);
    const auto [lo, up] = lifetimes::order_pair(lower, upper);
    if (!(lo == lower) || !(up == upper))
        throw std::domain_error("spontaneous rate expects (upper, lower) ordered by energy");

    const double c2 = angular::reduced_c2(lower, upper);
    const auto radial = hydrogenic::radial_integral(lower, upper, mode);
    const double omega = to_physical_omega(omega_tilde_transition(lower, upper), lower.z, pc);
    const double g_ratio = static_cast<double>(lower.degeneracy()) / upper.degeneracy();
    return spontaneous_rate_from_components(omega, g_ratio, c2, radial.value * radial.value,
                                            lower.z, pc);
}

double branching_ratio(const QuantumState& upper, const QuantumState& lower, RadialMode mode,
                       const PhysicalConstants& pc)
{
    require_same_charge(upper, lower);
    const auto [lo, up] = lifetimes::order_pair(lower, upper);
    if (!(lo == lower) || !(up == upper))
        throw std::domain_error("branching ratio expects (upper, lower) ordered by energy");

    const double c2 = angular::reduced_c2(lower, upper);
    const auto radial = hydrogenic::radial_integral(lower, upper, mode);
    const double w = omega_tilde_transition(lower, upper);
    const double tau = lifetimes::combined_lifetime(lower, upper);
    const double g_ratio = static_cast<double>(lower.degeneracy()) / upper.degeneracy();
    const double alpha_z = pc.fine_structure * lower.z;
    return (8.0 / 15.0) * pc.grav_em_ratio * alpha_z * alpha_z * g_ratio * c2
         * radial.value * radial.value * std::pow(w, 5) * tau;
}

WaveField WaveField::broadband(double omega, double spectral_flux)
{
    if (!(omega > 0.0))
        throw std::domain_error("wave frequency must be positive");
    if (spectral_flux < 0.0)
        throw std::domain_error("spectral flux must be non-negative");
    WaveField f;
    f.mode = Mode::broadband_spectral;
    f.omega = omega;
    f.spectral_flux = spectral_flux;
    return f;
}

WaveField WaveField::monochromatic_amplitudes(double omega, double a_plus, double a_cross,
                                              const PhysicalConstants& pc)
{
    if (!(omega > 0.0))
        throw std::domain_error("wave frequency must be positive");
    WaveField f;
    f.mode = Mode::monochromatic;
    f.omega = omega;
    f.a_plus = a_plus;
    f.a_cross = a_cross;
    const double c3 = std::pow(pc.speed_of_light, 3);
    f.total_flux = c3 * omega * omega * f.amp_sq() / (32.0 * pi * pc.gravitational_constant);
    return f;
}

WaveField WaveField::monochromatic_flux(double omega, double total_flux, const PhysicalConstants& pc)
{
    if (!(omega > 0.0))
        throw std::domain_error("wave frequency must be positive");
    if (total_flux < 0.0)
        throw std::domain_error("flux must be non-negative");
    WaveField f;
    f.mode = Mode::monochromatic;
    f.omega = omega;
    f.total_flux = total_flux;
    const double c3 = std::pow(pc.speed_of_light, 3);
    const double amp = std::sqrt(16.0 * pi * pc.gravitational_constant * total_flux / (c3 * omega * omega));
    f.a_plus = amp;
    f.a_cross = amp;
    return f;
}

WaveField amplitude_flux_convert(const WaveField& field, const PhysicalConstants& pc)
{
    if (field.mode != WaveField::Mode::monochromatic)
        throw std::domain_error("amplitude/flux conversion applies to monochromatic fields");
    if (!(field.omega > 0.0))
        throw std::domain_error("wave frequency must be positive");
    if (field.amp_sq() > 0.0)
        return WaveField::monochromatic_amplitudes(field.omega, field.a_plus, field.a_cross, pc);
    return WaveField::monochromatic_flux(field.omega, field.total_flux, pc);
}

double absorption_rate_broadband(const QuantumState& a, const QuantumState& b,
                                 const WaveField& field, RadialMode mode,
                                 const PhysicalConstants& pc)
{
    if (field.mode != WaveField::Mode::broadband_spectral)
        throw std::domain_error("broadband rate needs a spectral flux at resonance");
    const auto t = transition_factor(a, b, mode);
    const double lp2 = pc.planck_length * pc.planck_length;
    const double alpha = pc.fine_structure;
    const double z4 = std::pow(static_cast<double>(a.z), 4);
    return (16.0 * pi / 15.0) * lp2 / std::pow(alpha, 5) / z4
         * field.spectral_flux / pc.electron_mass_energy / t.omega_tilde * t.f;
}

double absorption_rate_monochromatic(const QuantumState& a, const QuantumState& b,
                                     const WaveField& field, RadialMode mode,
                                     const PhysicalConstants& pc)
{
    if (field.mode != WaveField::Mode::monochromatic)
        throw std::domain_error("monochromatic rate needs polarization amplitudes");
    const auto t = transition_factor(a, b, mode);
    const double c_over_r0 = pc.speed_of_light / pc.classical_electron_radius;
    return (1.0 / 30.0) * c_over_r0 * field.amp_sq() * t.omega_tilde * t.f;
}

double absorption_rate_monochromatic_circular(double n, double l_plus_half, double c2, int dn,
                                              const WaveField& field, const PhysicalConstants& pc)
{
    if (field.mode != WaveField::Mode::monochromatic)
        throw std::domain_error("monochromatic rate needs polarization amplitudes");
    if (!(n > 0.0) || dn < 1)
        throw std::domain_error("circular-chain rate needs n > 0 and dn >= 1");
    const double c_over_r0 = pc.speed_of_light / pc.classical_electron_radius;
    const double dn4 = std::pow(static_cast<double>(dn), 4);
    return (1.0 / 80.0) * c_over_r0 * field.amp_sq() * c2 * dn4 * l_plus_half * l_plus_half / n;
}

double absorption_rate_monochromatic_circular(const QuantumState& lower, int dn, int dj,
                                              const WaveField& field, const PhysicalConstants& pc)
{
    const bool preserved = dj % 2 == 0;
    const double c2 = angular::reduced_c2_row(dj, lower.twoj, preserved);
    const double l_plus_half = static_cast<double>(lower.l) + 0.5;
    return absorption_rate_monochromatic_circular(static_cast<double>(lower.n), l_plus_half, c2,
                                                  dn, field, pc);
}

CircularChain circular_chain(const QuantumState& lower, int dn, int dj)
{
    if (dn < 1)
        throw std::domain_error("circular chain needs dn >= 1");
    if (lower.radial_nodes() > 4)
        throw std::domain_error("circular-chain evaluation needs a nearly circular lower state");
    if (lower.twoj + 2 * dj < 1)
        throw std::domain_error("chain target j would be unphysical");

    CircularChain chain;
    chain.lower = lower;
    chain.upper = QuantumState::circular(lower.n + dn, lower.z);
    chain.dj = dj;
    chain.g_ratio = static_cast<double>(lower.degeneracy())
                  / static_cast<double>(lower.twoj + 2 * dj + 1);

    TransitionFactor& t = chain.factor;
    t.c2 = angular::reduced_c2_row(dj, lower.twoj, dj % 2 == 0);
    t.radial_sq = hydrogenic::mean_r2(lower) * hydrogenic::mean_r2(chain.upper);
    t.radial_method = RadialMethod::asymptotic_circular;
    t.bound_flag = true;
    t.omega_tilde = omega_tilde_transition(lower, chain.upper);
    t.omega_tilde_cubed = t.omega_tilde * t.omega_tilde * t.omega_tilde;
    t.tau_tilde = lifetimes::combined_lifetime(lower, chain.upper);
    t.f = t.c2 * t.radial_sq * t.omega_tilde_cubed * t.tau_tilde;
    return chain;
}

double sigma_abs_max(const CircularChain& chain, const PhysicalConstants& pc)
{
    return sigma_from_factor(chain.factor.f, chain.lower.z, pc);
}

double spontaneous_gw_rate(const CircularChain& chain, const PhysicalConstants& pc)
{
    const double omega = to_physical_omega(chain.factor.omega_tilde, chain.lower.z, pc);
    return spontaneous_rate_from_components(omega, chain.g_ratio, chain.factor.c2,
                                            chain.factor.radial_sq, chain.lower.z, pc);
}

double branching_ratio(const CircularChain& chain, const PhysicalConstants& pc)
{
    const auto& t = chain.factor;
    const double alpha_z = pc.fine_structure * chain.lower.z;
    return (8.0 / 15.0) * pc.grav_em_ratio * alpha_z * alpha_z * chain.g_ratio * t.c2
         * t.radial_sq * std::pow(t.omega_tilde, 5) * t.tau_tilde;
}

double absorption_rate_monochromatic(const CircularChain& chain, const WaveField& field,
                                     const PhysicalConstants& pc)
{
    if (field.mode != WaveField::Mode::monochromatic)
        throw std::domain_error("monochromatic rate needs polarization amplitudes");
    const double c_over_r0 = pc.speed_of_light / pc.classical_electron_radius;
    return (1.0 / 30.0) * c_over_r0 * field.amp_sq() * chain.factor.omega_tilde * chain.factor.f;
}

double absorption_rate_broadband(const CircularChain& chain, const WaveField& field,
                                 const PhysicalConstants& pc)
{
    if (field.mode != WaveField::Mode::broadband_spectral)
        throw std::domain_error("broadband rate needs a spectral flux at resonance");
    const double lp2 = pc.planck_length * pc.planck_length;
    const double z4 = std::pow(static_cast<double>(chain.lower.z), 4);
    return (16.0 * pi / 15.0) * lp2 / std::pow(pc.fine_structure, 5) / z4
         * field.spectral_flux / pc.electron_mass_energy / chain.factor.omega_tilde
         * chain.factor.f;
}

double cross_section_ratio(const QuantumState& a, const QuantumState& b, RadialMode mode,
                           const PhysicalConstants& pc)
{
    const auto [lower, upper] = lifetimes::order_pair(a, b);
    const auto t = transition_factor(lower, upper, mode);
    const double n = static_cast<double>(lower.n);
    const double l = static_cast<double>(lower.l);
    const double geometric = (5.0 * n * n + 1.0 - 3.0 * l * (l + 1.0)) * n * n;
    return (8.0 / 15.0) * pc.grav_em_ratio * t.f / geometric;
}

double classical_limit_check(const QuantumState& circular, int dn, const PhysicalConstants& pc)
{
    if (!circular.is_circular() || circular.spin_alignment() != +1)
        throw std::domain_error("classical limit defined for circular states (l = n-1, j = l+1/2)");
    if (circular.n < 100)
        throw std::domain_error("classical limit evaluated for n >= 100");

    const auto chain = circular_chain(circular, dn, +2);
    const double quantum = spontaneous_gw_rate(chain, pc);

    const double omega = to_physical_omega(chain.factor.omega_tilde, circular.z, pc);
    const double me = pc.electron_mass();
    const double r = static_cast<double>(circular.n) * circular.n * pc.bohr_radius / circular.z;
    const double classical = 0.1 * pc.gravitational_constant * me * me
                           / (pc.hbar * std::pow(pc.speed_of_light, 5))
                           * std::pow(omega, 5) * std::pow(r, 4);
    return quantum / classical;
}

} // namespace rydgrav::gw
