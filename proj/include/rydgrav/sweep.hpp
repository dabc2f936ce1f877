#pragma once

/// Parameter sweeps over transition ladders.  Each row is an independent
/// pure computation, so the engine offers a serial reference path and an
/// OpenMP path that must produce bit-identical rows; output order always
/// follows the grid regardless of scheduling.
///
/// Sweeps follow the physical delta-n chains: for dj = +2 the lower state
/// is (n, l = n-2, j = l+1/2) and the upper (n+dn, l+2, j+2); dj = +1
/// flips the upper spin alignment; dj = 0 runs along l = n-1 with
/// delta l = 0.

#include "rydgrav/constants.hpp"
#include "rydgrav/gw.hpp"
#include "rydgrav/hydrogenic.hpp"

#include <string>
#include <vector>

namespace rydgrav::sweep {

enum class Variable { n, l, omega, amplitude };
enum class Scale { linear, log };
enum class Execution { serial, parallel };

struct SweepSpec {
    Variable variable = Variable::n;
    double start = 0.0;
    double stop = 0.0;
    long count = 0;    // number of grid points (inclusive ends); or
    double step = 0.0; // linear step (integer for quantum numbers)
    Scale scale = Scale::linear;

    int z = 1;
    int dn = 1;
    int dj = +2;
    long n_fixed = 0;          // anchor for l and amplitude sweeps
    double amplitude = 0.0;    // |A| per polarization; 0 disables the monochromatic column
    double spectral_flux = 0.0; // W m^-2 per rad/s; 0 disables the broadband column
};

struct SweepRow {
    double x = 0.0; // swept value
    long n = 0;
    long l = 0;
    long twoj = 0;
    double omega = 0.0;     // rad/s
    double f = 0.0;
    double sigma_max = 0.0; // m^2
    double rate_monochromatic = 0.0; // 1/s
    double rate_broadband = 0.0;     // 1/s per rad/s
    hydrogenic::RadialMethod radial_method = hydrogenic::RadialMethod::exact_quadrature;
    bool bound_flag = false;
};

/// Grid of swept values; throws std::invalid_argument for empty or
/// malformed ranges (non-integer steps for quantum numbers, log scale
/// across zero, ...).
std::vector<double> sweep_grid(const SweepSpec& spec);

std::vector<SweepRow> run_sweep(const SweepSpec& spec, Execution exec = Execution::parallel,
                                const PhysicalConstants& pc = PhysicalConstants::si());

/// Least-squares slope of log y against log x; ignores non-positive
/// entries.  Used to check the scaling laws the sweeps exist to produce.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace rydgrav::sweep
