#include "rydgrav/lifetimes.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace rydgrav::lifetimes {

double lifetime_bound(const QuantumState& s)
{
    const double n = static_cast<double>(s.n);
    const double lh = static_cast<double>(s.l) + 0.5;
    return 0.75 * n * n * n * lh * lh;
}

bool has_decay_channel(const QuantumState& s)
{
    return s.n > 1;
}

std::pair<QuantumState, QuantumState> order_pair(const QuantumState& a, const QuantumState& b)
{
    const bool a_upper = a.n != b.n ? a.n > b.n : a.l > b.l;
    return a_upper ? std::make_pair(b, a) : std::make_pair(a, b);
}

double combined_lifetime(const QuantumState& a, const QuantumState& b, RydbergSimplification simplify)
{
    const auto [lower, upper] = order_pair(a, b);

    if (!has_decay_channel(lower) && !has_decay_channel(upper))
        throw std::domain_error("transition pair has no radiative width");

    if (simplify == RydbergSimplification::on) {
        // tau = (3/4) n^3 (l+1/2)^2 (1 + ((l+1/2)/(l'+1/2))^2)^-1
        const double ratio = (lower.l + 0.5) / (upper.l + 0.5);
        return lifetime_bound(lower) / (1.0 + ratio * ratio);
    }

    double width = 0.0;
    if (has_decay_channel(lower))
        width += 1.0 / lifetime_bound(lower);
    if (has_decay_channel(upper))
        width += 1.0 / lifetime_bound(upper);
    return 1.0 / width;
}

double lorentzian(double omega_tilde, const LineProfile& profile)
{
    if (!(profile.width > 0.0))
        throw std::domain_error("line profile width must be positive");
    const double d = omega_tilde - profile.center;
    const double hw = 0.5 * profile.width;
    return profile.width / (2.0 * std::numbers::pi) / (d * d + hw * hw);
}

double bandwidth_rel(double omega, double tau_seconds)
{
    if (!(omega > 0.0) || !(tau_seconds > 0.0))
        throw std::domain_error("bandwidth needs positive frequency and lifetime");
    const double f = omega / (2.0 * std::numbers::pi);
    return 1.0 / (f * tau_seconds);
}

} // namespace rydgrav::lifetimes
