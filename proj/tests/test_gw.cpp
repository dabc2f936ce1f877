#include "rydgrav/gw.hpp"
#include "rydgrav/sweep.hpp"

#include "support/reference.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace rydgrav;
using namespace rydgrav::gw;
using std::numbers::pi;

namespace {

// Lower/upper pair of the delta n = 1, delta j = +2 Rydberg chain:
// (n, n-2, j = l+1/2) -> (n+1, n, j' = j+2).
std::pair<QuantumState, QuantumState> chain_dj2(long n, int z = 1)
{
    return {QuantumState(n, n - 2, 2 * n - 3, z), QuantumState(n + 1, n, 2 * n + 1, z)};
}

double rel(double a, double b)
{
    return std::fabs(a - b) / std::fabs(b);
}

} // namespace

TEST_SUITE_BEGIN("gw");

TEST_CASE("normalized transition frequency")
{
    // deep Rydberg regime: delta n / n^3
    const auto [lo, up] = chain_dj2(47746);
    CHECK(omega_tilde_transition(lo, up)
          == doctest::Approx(1.0 / std::pow(47746.0, 3)).epsilon(1e-12));

    // low n: exact level difference
    const QuantumState a(1, 0, 1);
    const QuantumState b(2, 1, 3);
    CHECK(omega_tilde_transition(a, b) == doctest::Approx(0.5 * (1.0 - 0.25)).epsilon(1e-14));

    CHECK_THROWS_AS(omega_tilde_transition(QuantumState(3, 1, 3), QuantumState(3, 1, 1)),
                    std::domain_error);
}

TEST_CASE("transition factor composes its components exactly")
{
    const auto [lo, up] = chain_dj2(2000);
    const auto t = transition_factor(lo, up);
    CHECK(t.f == t.c2 * t.radial_sq * t.omega_tilde_cubed * t.tau_tilde);
    CHECK(t.f >= 0.0);
    CHECK(t.bound_flag); // asymptotic radial above the exact cutoff
    CHECK(t.radial_method == hydrogenic::RadialMethod::asymptotic_circular);

    const auto small = transition_factor(QuantumState(3, 1, 3), QuantumState(4, 3, 7));
    CHECK_FALSE(small.bound_flag);
    CHECK(small.radial_method == hydrogenic::RadialMethod::exact_quadrature);

    CHECK_THROWS_AS(transition_factor(QuantumState(3, 1, 3), QuantumState(4, 2, 5)),
                    invalid_transition);
}

TEST_CASE("circular-chain factor approaches (9/64) n^4 for delta j = +2 and (3/32) n^4 for delta j = 0")
{
    const long n = 100000;
    const auto [lo2, up2] = chain_dj2(n);
    const double f2 = transition_factor(lo2, up2).f;
    CHECK(rel(f2, 9.0 / 64.0 * std::pow(static_cast<double>(n), 4)) < 1e-3);

    const QuantumState lo0 = QuantumState::circular(n);
    const QuantumState up0(n + 1, n - 1, 2 * n - 1);
    const double f0 = transition_factor(lo0, up0).f;
    CHECK(rel(f0, 3.0 / 32.0 * std::pow(static_cast<double>(n), 4)) < 1e-3);
}

TEST_CASE("peak cross section")
{
    const auto& pc = PhysicalConstants::si();
    const auto [lo, up] = chain_dj2(47746);

    SUBCASE("definitional rearrangement")
    {
        const double f = transition_factor(lo, up).f;
        const double sigma = sigma_abs_max(lo, up);
        const double scale = pc.planck_length * pc.planck_length
                           / std::pow(pc.fine_structure, 3);
        CHECK(rel(sigma / scale, 16.0 * pi / 15.0 * f) < 1e-12);
    }

    SUBCASE("circular asymptote (2 pi / 5) L*^2 alpha^-3 C (dn)^3 (n (l+1/2))^2")
    {
        const double c2 = angular::reduced_c2(lo, up);
        const double nl = 47746.0 * (static_cast<double>(lo.l) + 0.5);
        const double asymptote = 2.0 * pi / 5.0 * pc.planck_length * pc.planck_length
                               / std::pow(pc.fine_structure, 3) * c2 * nl * nl;
        CHECK(rel(sigma_abs_max(lo, up), asymptote) < 1e-3);
    }

    SUBCASE("coefficient reduction (16 pi / 15)(9/64) = (2 pi / 5)(3/8)")
    {
        CHECK(rel(16.0 * pi / 15.0 * 9.0 / 64.0, 2.0 * pi / 5.0 * 3.0 / 8.0) < 1e-14);
    }

    SUBCASE("Z^-2 scaling at identical quantum numbers")
    {
        const auto [lo2, up2] = chain_dj2(300, 2);
        const auto [lo1, up1] = chain_dj2(300, 1);
        CHECK(rel(sigma_abs_max(lo2, up2), sigma_abs_max(lo1, up1) / 4.0) < 1e-12);
    }
}

TEST_CASE("cross section via branching equals cross section via the strength factor")
{
    for (long n : {3L, 20L, 47746L}) {
        const auto [lo, up] = n > 2 && n < 100 ? std::pair{QuantumState(n, 1, 3), QuantumState(n + 1, 3, 7)}
                                               : chain_dj2(n);
        const double via_f = sigma_abs_max(lo, up);
        const double via_eta = sigma_abs_max_via_branching(lo, up);
        CHECK(rel(via_eta, via_f) < 1e-10);
    }
}

TEST_CASE("profiled cross section")
{
    const auto [lo, up] = chain_dj2(5000);
    const auto t = transition_factor(lo, up);
    const double peak = sigma_abs_max(lo, up);
    const double gamma = 1.0 / t.tau_tilde;

    CHECK(sigma_abs_profile(lo, up, t.omega_tilde).value == doctest::Approx(peak).epsilon(1e-12));
    CHECK(sigma_abs_profile(lo, up, t.omega_tilde + 0.5 * gamma).value
          == doctest::Approx(0.5 * peak).epsilon(1e-12));

    const auto far = sigma_abs_profile(lo, up, t.omega_tilde + 1e3 * gamma);
    CHECK(rel(far.value, peak / 4e6) < 1e-3);
    CHECK(far.within_validity); // 1e3 linewidths is still tiny against omega

    const auto detuned = sigma_abs_profile(lo, up, 1.5 * t.omega_tilde);
    CHECK_FALSE(detuned.within_validity);
}

TEST_CASE("spontaneous rate and branching ratio")
{
    const auto& pc = PhysicalConstants::si();

    SUBCASE("branching ratio equals rate times lifetime to 1e-10")
    {
        for (long n : {4L, 30L, 47746L}) {
            const auto [lo, up] = n < 100 ? std::pair{QuantumState(n, 1, 3), QuantumState(n + 1, 3, 7)}
                                          : chain_dj2(n);
            const double gamma_gr = spontaneous_gw_rate(up, lo);
            const double tau = to_physical_lifetime(lifetimes::combined_lifetime(lo, up), lo.z, pc);
            const double eta = branching_ratio(up, lo);
            CHECK(rel(gamma_gr * tau, eta) < 1e-10);
        }
    }

    SUBCASE("branching for the Crab chain is far below 1e-50")
    {
        const auto [lo, up] = chain_dj2(47746);
        CHECK(branching_ratio(up, lo) < 1e-50);
        CHECK(branching_ratio(up, lo) > 0.0);
    }

    SUBCASE("branching is linear in the gravitational/electromagnetic ratio")
    {
        const auto [lo, up] = chain_dj2(1000);
        PhysicalConstants doubled = pc;
        doubled.grav_em_ratio *= 2.0;
        CHECK(rel(branching_ratio(up, lo, RadialMode::automatic, doubled),
                  2.0 * branching_ratio(up, lo)) < 1e-14);
    }

    SUBCASE("vanishing angular factor gives exactly zero rate")
    {
        // delta j = 0 from j = 1/2 has a structural zero in the table
        const QuantumState lo(3, 1, 1);
        const QuantumState up(4, 1, 1);
        CHECK(spontaneous_gw_rate(up, lo) == 0.0);
        CHECK(branching_ratio(up, lo) == 0.0);
        CHECK(sigma_abs_max(lo, up) == 0.0);
    }

    SUBCASE("argument order is enforced")
    {
        const auto [lo, up] = chain_dj2(500);
        CHECK_THROWS_AS(spontaneous_gw_rate(lo, up), std::domain_error);
        CHECK_THROWS_AS(branching_ratio(lo, up), std::domain_error);
    }
}

TEST_CASE("wave field construction and conversion")
{
    const auto& pc = PhysicalConstants::si();
    const double omega = 379.8;

    SUBCASE("amplitude to flux round trip")
    {
        const auto f = WaveField::monochromatic_amplitudes(omega, 1e-25, 1e-25);
        const auto back = WaveField::monochromatic_flux(omega, f.total_flux);
        CHECK(rel(back.amp_sq(), f.amp_sq()) < 1e-12);

        WaveField amp_only;
        amp_only.mode = WaveField::Mode::monochromatic;
        amp_only.omega = omega;
        amp_only.a_plus = 3e-26;
        amp_only.a_cross = 1e-26;
        const auto filled = amplitude_flux_convert(amp_only);
        CHECK(filled.total_flux > 0.0);
        CHECK(rel(filled.total_flux,
                  std::pow(pc.speed_of_light, 3) * omega * omega * amp_only.amp_sq()
                      / (32.0 * pi * pc.gravitational_constant)) < 1e-14);
    }

    SUBCASE("the two flux relations are mutually consistent")
    {
        // |A| = sqrt(16 pi G S / (c^3 w^2)) with |A+| = |Ax| = |A| feeds back
        // S = c^3 w^2 (2 |A|^2) / (32 pi G) exactly
        const double s = 4.7e-13;
        const auto f = WaveField::monochromatic_flux(omega, s);
        CHECK(rel(f.total_flux, s) < 1e-15);
        const auto round = WaveField::monochromatic_amplitudes(omega, f.a_plus, f.a_cross);
        CHECK(rel(round.total_flux, s) < 1e-12);
    }

    SUBCASE("zero flux gives zero amplitude")
    {
        const auto f = WaveField::monochromatic_flux(omega, 0.0);
        CHECK(f.a_plus == 0.0);
        CHECK(f.amp_sq() == 0.0);
    }

    SUBCASE("zero frequency is rejected")
    {
        CHECK_THROWS_AS(WaveField::monochromatic_flux(0.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(WaveField::broadband(-1.0, 1.0), std::domain_error);
    }
}

TEST_CASE("broadband resonant absorption rate")
{
    const auto [lo, up] = chain_dj2(10000);
    const double omega = to_physical_omega(omega_tilde_transition(lo, up), 1);

    SUBCASE("linear in the spectral flux, zero at zero")
    {
        const double r1 = absorption_rate_broadband(lo, up, WaveField::broadband(omega, 1e-20));
        const double r2 = absorption_rate_broadband(lo, up, WaveField::broadband(omega, 2e-20));
        CHECK(rel(r2, 2.0 * r1) < 1e-14);
        CHECK(absorption_rate_broadband(lo, up, WaveField::broadband(omega, 0.0)) == 0.0);
    }

    SUBCASE("matches the circular-orbit closed form at large n")
    {
        const auto& pc = PhysicalConstants::si();
        const double s = 3e-22;
        const double rate = absorption_rate_broadband(lo, up, WaveField::broadband(omega, s));
        const double c2 = angular::reduced_c2(lo, up);
        const double closed = 2.0 * pi / 5.0 * pc.planck_length * pc.planck_length
                            / std::pow(pc.fine_structure, 5) * c2 * s / pc.electron_mass_energy
                            * std::pow(1e4, 5) * std::pow(static_cast<double>(lo.l) + 0.5, 2);
        CHECK(rel(rate, closed) < 15.0 / 1e4); // corrections are O(10/n)
    }

    SUBCASE("monochromatic field is rejected")
    {
        const auto mono = WaveField::monochromatic_amplitudes(omega, 1e-25, 1e-25);
        CHECK_THROWS_AS(absorption_rate_broadband(lo, up, mono), std::domain_error);
    }
}

TEST_CASE("monochromatic absorption rate")
{
    const auto& pc = PhysicalConstants::si();

    SUBCASE("circular closed-form coefficient reproduces ~1e21 per |A|^2 per n")
    {
        // idealized chain: C = 3/8 exactly, l + 1/2 = n
        const double n = 47746.0;
        const auto field = WaveField::monochromatic_amplitudes(379.8, 1.0, 1.0);
        const double rate = absorption_rate_monochromatic_circular(n, n, 3.0 / 8.0, 1, field);
        const double coeff = rate / (1.0 * n); // |A|^2 = 1 per polarization
        CHECK(rel(coeff, 9.98e20) < 5e-3);
        CHECK(rel(coeff, 1e21) < 5e-2);
    }

    SUBCASE("fast path agrees with the general path on the physical chain")
    {
        const auto [lo, up] = chain_dj2(10000);
        const double omega = to_physical_omega(omega_tilde_transition(lo, up), 1);
        const auto field = WaveField::monochromatic_amplitudes(omega, 1e-24, 1e-24);
        const double general = absorption_rate_monochromatic(lo, up, field);
        const double fast = absorption_rate_monochromatic_circular(lo, 1, +2, field);
        CHECK(rel(fast, general) < 15.0 / 1e4); // corrections are O(10/n)
    }

    SUBCASE("reported transition rates at n = 1e5 and n = 1e4")
    {
        const auto [lo5, up5] = chain_dj2(100000);
        const double w5 = to_physical_omega(omega_tilde_transition(lo5, up5), 1);
        const double r5 = absorption_rate_monochromatic(
            lo5, up5, WaveField::monochromatic_amplitudes(w5, 1e-25, 1e-25));
        CHECK(r5 > 0.5e-24);
        CHECK(r5 < 2e-24);

        const auto [lo4, up4] = chain_dj2(10000);
        const double w4 = to_physical_omega(omega_tilde_transition(lo4, up4), 1);
        const double r4 = absorption_rate_monochromatic(
            lo4, up4, WaveField::monochromatic_amplitudes(w4, 1e-20, 1e-20));
        CHECK(r4 > 0.5e-15);
        CHECK(r4 < 2e-15);
    }

    SUBCASE("rate depends on polarizations only through the total power")
    {
        const auto [lo, up] = chain_dj2(20000);
        const double omega = to_physical_omega(omega_tilde_transition(lo, up), 1);
        const double amp = 1e-25;
        const double both = absorption_rate_monochromatic(
            lo, up, WaveField::monochromatic_amplitudes(omega, amp, amp));
        const double single = absorption_rate_monochromatic(
            lo, up, WaveField::monochromatic_amplitudes(omega, std::sqrt(2.0) * amp, 0.0));
        CHECK(rel(single, both) < 1e-14);
    }

    SUBCASE("zero amplitudes give zero rate, not an error")
    {
        const auto [lo, up] = chain_dj2(20000);
        const double omega = to_physical_omega(omega_tilde_transition(lo, up), 1);
        CHECK(absorption_rate_monochromatic(lo, up,
                                            WaveField::monochromatic_amplitudes(omega, 0.0, 0.0))
              == 0.0);
    }

    (void)pc;
}

TEST_CASE("cross section relative to the geometric atom size")
{
    const auto& pc = PhysicalConstants::si();
    const auto [lo, up] = chain_dj2(10000);

    SUBCASE("agrees with the direct sigma / (4 pi <r^2>) route")
    {
        const double sigma = sigma_abs_max(lo, up);
        const double r2 = hydrogenic::mean_r2(lo) * NormalizationSet::for_charge(1, pc).r2_unit;
        const double direct = sigma / (4.0 * pi * r2);
        CHECK(rel(cross_section_ratio(lo, up), direct) < 1e-12);
    }

    SUBCASE("circular limit is (3/80) of the gravitational/electromagnetic ratio")
    {
        // The strength factor tends to (9/64) n^4 and the geometric
        // denominator to 2 n^4, so (8/15)(9/64)/2 = 3/80.
        const double r = cross_section_ratio(lo, up) / pc.grav_em_ratio;
        CHECK(r > 0.0370);
        CHECK(r < 0.0380);

        const auto [lo2, up2] = chain_dj2(100000);
        const double r2 = cross_section_ratio(lo2, up2) / pc.grav_em_ratio;
        CHECK(rel(r2, 3.0 / 80.0) < 1e-3);
    }
}

TEST_CASE("idealized circular chain evaluation")
{
    const auto lower = QuantumState::circular(10000);
    const auto chain = circular_chain(lower, 1, +2);

    CHECK(chain.upper.n == 10001);
    CHECK(chain.factor.bound_flag);
    CHECK(chain.g_ratio == doctest::Approx(20000.0 / 20004.0).epsilon(1e-14));

    // matches the general path on the nearest constructible chain
    const auto [lo, up] = chain_dj2(10000);
    CHECK(rel(chain.factor.f, transition_factor(lo, up).f) < 2e-3);
    CHECK(rel(sigma_abs_max(chain), sigma_abs_max(lo, up)) < 2e-3);
    CHECK(rel(branching_ratio(chain), branching_ratio(up, lo)) < 2e-3);
    CHECK(rel(spontaneous_gw_rate(chain), spontaneous_gw_rate(up, lo)) < 2e-3);

    // matches the closed-form monochromatic fast path
    const double omega = to_physical_omega(chain.factor.omega_tilde, 1);
    const auto field = WaveField::monochromatic_amplitudes(omega, 1e-25, 1e-25);
    const double via_chain = absorption_rate_monochromatic(chain, field);
    const double via_closed = absorption_rate_monochromatic_circular(lower, 1, +2, field);
    CHECK(rel(via_chain, via_closed) < 2e-3);

    const auto broadband = WaveField::broadband(omega, 1e-22);
    CHECK(absorption_rate_broadband(chain, broadband) > 0.0);

    CHECK_THROWS_AS(circular_chain(QuantumState(10000, 10, 21), 1, +2), std::domain_error);
    CHECK_THROWS_AS(circular_chain(lower, 0, +2), std::domain_error);
}

TEST_CASE("correspondence principle along the circular ladder")
{
    double previous = 1.0;
    for (long n : {100L, 1000L, 10000L}) {
        const double ratio = classical_limit_check(QuantumState::circular(n));
        const double err = std::fabs(ratio - 1.0);
        CHECK(ratio > 1.0); // finite-n corrections approach 1 from above
        CHECK(err < previous);
        previous = err;
    }
    CHECK(std::fabs(classical_limit_check(QuantumState::circular(10000)) - 1.0) < 1e-2);
    CHECK(std::fabs(classical_limit_check(QuantumState::circular(100)) - 1.0) < 1e-1);

    CHECK_THROWS_AS(classical_limit_check(QuantumState(200, 100, 201)), std::domain_error);
    CHECK_THROWS_AS(classical_limit_check(QuantumState::circular(50)), std::domain_error);
}

TEST_CASE("scaling laws across the Rydberg ladder")
{
    std::vector<double> ns;
    std::vector<double> mono;
    std::vector<double> broad;
    for (double x = 3.0; x <= 5.0 + 1e-9; x += 0.25) {
        const long n = std::lround(std::pow(10.0, x));
        const auto [lo, up] = chain_dj2(n);
        const double omega = to_physical_omega(omega_tilde_transition(lo, up), 1);
        ns.push_back(static_cast<double>(n));
        mono.push_back(absorption_rate_monochromatic(
            lo, up, WaveField::monochromatic_amplitudes(omega, 1e-25, 1e-25)));
        broad.push_back(absorption_rate_broadband(lo, up, WaveField::broadband(omega, 1e-22)));
    }
    const double slope_mono = sweep::log_log_slope(ns, mono);
    const double slope_broad = sweep::log_log_slope(ns, broad);
    CHECK(std::fabs(slope_mono - 1.0) < 0.02);
    CHECK(std::fabs(slope_broad - 7.0) < 0.1);
}

TEST_CASE("formulas scale covariantly between SI and CGS constants")
{
    const auto& si = PhysicalConstants::si();
    const auto cgs = si.to_cgs();
    const auto [lo, up] = chain_dj2(2000);
    const double omega = to_physical_omega(omega_tilde_transition(lo, up), 1, si);

    // cross sections carry (length)^2
    CHECK(rel(sigma_abs_max(lo, up, RadialMode::automatic, cgs),
              1e4 * sigma_abs_max(lo, up, RadialMode::automatic, si)) < 1e-12);

    // rates are pure 1/s whichever unit system feeds them
    const auto field_si = WaveField::monochromatic_amplitudes(omega, 1e-24, 1e-24, si);
    const auto field_cgs = WaveField::monochromatic_amplitudes(omega, 1e-24, 1e-24, cgs);
    CHECK(rel(absorption_rate_monochromatic(lo, up, field_cgs, RadialMode::automatic, cgs),
              absorption_rate_monochromatic(lo, up, field_si, RadialMode::automatic, si)) < 1e-12);

    CHECK(rel(spontaneous_gw_rate(up, lo, RadialMode::automatic, cgs),
              spontaneous_gw_rate(up, lo, RadialMode::automatic, si)) < 1e-12);

    // spectral flux in erg/s/cm^2 per rad/s is 1e3 times the SI number
    CHECK(rel(absorption_rate_broadband(lo, up, WaveField::broadband(omega, 1e3 * 1e-22),
                                        RadialMode::automatic, cgs),
              absorption_rate_broadband(lo, up, WaveField::broadband(omega, 1e-22),
                                        RadialMode::automatic, si)) < 1e-12);

    // frequency and lifetime conversions are 1/s and s in both systems
    CHECK(rel(to_physical_omega(1e-14, 1, cgs), to_physical_omega(1e-14, 1, si)) < 1e-12);
    CHECK(rel(to_physical_lifetime(1e20, 1, cgs), to_physical_lifetime(1e20, 1, si)) < 1e-12);
}

TEST_SUITE_END();
