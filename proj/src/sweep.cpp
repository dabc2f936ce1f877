#include "rydgrav/sweep.hpp"

#include "rydgrav/detector.hpp"

#include <cmath>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace rydgrav::sweep {

namespace {

bool integer_variable(Variable v)
{
    return v == Variable::n || v == Variable::l;
}

// Lower/upper states of the delta-n chain anchored at (n, dj).
std::pair<QuantumState, QuantumState> chain_states(long n, long l, int z, int dn, int dj)
{
    switch (dj) {
    case +2: {
        QuantumState lower(n, l, 2 * l + 1, z);
        QuantumState upper(n + dn, l + 2, 2 * l + 5, z);
        return {lower, upper};
    }
    case +1: {
        QuantumState lower(n, l, 2 * l + 1, z);
        QuantumState upper(n + dn, l + 2, 2 * l + 3, z);
        return {lower, upper};
    }
    case 0: {
        QuantumState lower(n, l, 2 * l + 1, z);
        QuantumState upper(n + dn, l, 2 * l + 1, z);
        return {lower, upper};
    }
    default:
        throw std::invalid_argument("sweep chains support dj in {0, +1, +2}");
    }
}

long default_lower_l(long n, int dj)
{
    return dj == 0 ? n - 1 : n - 2;
}

SweepRow compute_row(const SweepSpec& spec, double x, const PhysicalConstants& pc)
{
    long n = 0;
    long l = 0;
    double amplitude = spec.amplitude;

    switch (spec.variable) {
    case Variable::n:
        n = static_cast<long>(std::llround(x));
        l = default_lower_l(n, spec.dj);
        break;
    case Variable::l:
        n = spec.n_fixed;
        l = static_cast<long>(std::llround(x));
        break;
    case Variable::omega: {
        const auto match = detector::match_principal_n(x, spec.z, spec.dn, pc);
        n = match.n;
        l = default_lower_l(n, spec.dj);
        break;
    }
    case Variable::amplitude:
        n = spec.n_fixed;
        l = default_lower_l(n, spec.dj);
        amplitude = x;
        break;
    }

    const auto [lower, upper] = chain_states(n, l, spec.z, spec.dn, spec.dj);
    const auto t = gw::transition_factor(lower, upper);

    SweepRow row;
    row.x = x;
    row.n = lower.n;
    row.l = lower.l;
    row.twoj = lower.twoj;
    row.omega = to_physical_omega(t.omega_tilde, spec.z, pc);
    row.f = t.f;
    row.sigma_max = gw::sigma_abs_max(lower, upper, gw::RadialMode::automatic, pc);
    row.radial_method = t.radial_method;
    row.bound_flag = t.bound_flag;

    if (amplitude > 0.0) {
        const auto field = gw::WaveField::monochromatic_amplitudes(row.omega, amplitude, amplitude, pc);
        row.rate_monochromatic = gw::absorption_rate_monochromatic(lower, upper, field,
                                                                   gw::RadialMode::automatic, pc);
    }
    if (spec.spectral_flux > 0.0) {
        const auto field = gw::WaveField::broadband(row.omega, spec.spectral_flux);
        row.rate_broadband = gw::absorption_rate_broadband(lower, upper, field,
                                                           gw::RadialMode::automatic, pc);
    }
    return row;
}

} // namespace

std::vector<double> sweep_grid(const SweepSpec& spec)
{
    if (spec.count < 0)
        throw std::invalid_argument("sweep count must be non-negative");
    if (spec.count == 0 && !(spec.step > 0.0))
        throw std::invalid_argument("sweep needs a point count or a positive step");
    if (spec.stop < spec.start)
        throw std::invalid_argument("sweep range is empty (stop < start)");

    std::vector<double> xs;
    if (spec.step > 0.0) {
        if (spec.scale == Scale::log)
            throw std::invalid_argument("step-based sweeps are linear only");
        if (integer_variable(spec.variable)
            && std::fabs(spec.step - std::round(spec.step)) > 1e-12)
            throw std::invalid_argument("quantum-number sweeps need integer steps");
        for (double x = spec.start; x <= spec.stop * (1.0 + 1e-12); x += spec.step)
            xs.push_back(x);
    } else {
        if (spec.scale == Scale::log && !(spec.start > 0.0))
            throw std::invalid_argument("log sweeps need a positive start");
        if (spec.count == 1) {
            xs.push_back(spec.start);
        } else {
            for (long i = 0; i < spec.count; ++i) {
                const double u = static_cast<double>(i) / static_cast<double>(spec.count - 1);
                xs.push_back(spec.scale == Scale::log
                                 ? spec.start * std::pow(spec.stop / spec.start, u)
                                 : spec.start + (spec.stop - spec.start) * u);
            }
        }
    }

    if (integer_variable(spec.variable)) {
        for (auto& x : xs)
            x = std::round(x);
        // deduplicate after rounding, preserving order
        std::vector<double> unique;
        for (double x : xs)
            if (unique.empty() || unique.back() != x)
                unique.push_back(x);
        xs = std::move(unique);
    }
    if (xs.empty())
        throw std::invalid_argument("sweep range is empty");
    return xs;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, Execution exec, const PhysicalConstants& pc)
{
    const auto xs = sweep_grid(spec);
    std::vector<SweepRow> rows(xs.size());

#if defined(_OPENMP)
    if (exec == Execution::parallel) {
        // Rows are independent; results land in their grid slot so output
        // order and bit patterns match the serial path.  Exceptions may
        // not escape the parallel region, so remember the first one by
        // grid index and rethrow after.
        std::exception_ptr error;
        long error_index = -1;
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < static_cast<long>(xs.size()); ++i) {
            try {
                rows[static_cast<size_t>(i)] = compute_row(spec, xs[static_cast<size_t>(i)], pc);
            } catch (...) {
#pragma omp critical(rydgrav_sweep_error)
                if (error_index < 0 || i < error_index) {
                    error = std::current_exception();
                    error_index = i;
                }
            }
        }
        if (error)
            std::rethrow_exception(error);
        return rows;
    }
#else
    (void)exec;
#endif

    for (size_t i = 0; i < xs.size(); ++i)
        rows[i] = compute_row(spec, xs[i], pc);
    return rows;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("slope fit needs equal-length samples");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long m = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            continue;
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    if (m < 2)
        throw std::invalid_argument("slope fit needs at least two positive samples");
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0)
        throw std::invalid_argument("slope fit is degenerate");
    return (m * sxy - sx * sy) / denom;
}

} // namespace rydgrav::sweep
