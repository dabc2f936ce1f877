#pragma once

/// Electromagnetic lifetimes in normalized units and the Lorentzian line
/// profile.  The lifetime model is the closed-form upper bound
///
///     tau(n, l) <= (3/4) n^3 (l + 1/2)^2
///
/// which sits within ~10% above the true hydrogenic values and becomes
/// tight for circular states.  No dipole-sum lifetime computation is
/// attempted here.

#include "rydgrav/quantum_state.hpp"

namespace rydgrav::lifetimes {

/// Normalized single-state lifetime bound (3/4) n^3 (l+1/2)^2.  The value
/// exists formally for the ground state too; check has_decay_channel.
double lifetime_bound(const QuantumState& s);

/// Ground states have no radiative decay channel.
bool has_decay_channel(const QuantumState& s);

enum class RydbergSimplification { off, on };

/// Combined lifetime of the pair, tau = (1/tau_a + 1/tau_b)^-1 with the
/// bound above for each state.  With the Rydberg simplification the
/// (n/n')^3 factor is dropped (valid for delta n << n).  States with no
/// decay channel contribute zero width; a pair with no width at all is a
/// domain error.
double combined_lifetime(const QuantumState& a, const QuantumState& b,
                         RydbergSimplification simplify = RydbergSimplification::off);

/// Orders a transition pair by energy: larger n is the upper state, ties
/// broken by larger l.
std::pair<QuantumState, QuantumState> order_pair(const QuantumState& a, const QuantumState& b);

struct LineProfile {
    double center = 0.0; // omega-tilde at resonance
    double width = 0.0;  // Gamma-tilde = 1 / tau-tilde (combined)
};

/// Unit-normalized Lorentzian (Gamma/2pi) / ((w - w0)^2 + Gamma^2/4);
/// peak value 2 / (pi Gamma).
double lorentzian(double omega_tilde, const LineProfile& profile);

/// Relative detector bandwidth df/f = 1 / (f tau) for a transition at
/// (physical) angular frequency omega with combined lifetime tau.
double bandwidth_rel(double omega, double tau_seconds);

} // namespace rydgrav::lifetimes
