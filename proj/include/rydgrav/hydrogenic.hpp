#pragma once

/// Radial structure of quasi-hydrogenic states: mean square radius in
/// closed form, normalized radial integrals of r^2, the Schwarz upper
/// bound, and the near-circular asymptotic value.
///
/// All lengths are in units of a0/Z, so every quantity here is
/// dimensionless.  The radial integral of interest is
///
///     I(a, b) = integral_0^inf  x^4 R_a(x) R_b(x) dx
///
/// with R_nl the bound Coulomb radial functions normalized to
/// integral x^2 R^2 dx = 1 and taken positive at the origin (positive
/// coefficient on the leading x^l power).

#include "rydgrav/quantum_state.hpp"

namespace rydgrav::hydrogenic {

/// Largest principal quantum number for which exact quadrature keeps
/// ~1e-10 relative accuracy in double precision.
inline constexpr long exact_n_cutoff = 64;

/// <r^2> for the state (n, l): (n^2/2) (5 n^2 + 1 - 3 l (l+1)).
double mean_r2(const QuantumState& s);

/// <r^2>/n^4 = 5/2 + 1/(2 n^2) - 3 l (l+1)/(2 n^2); tends to 1 for
/// circular states.
double i_diagonal(long n, long l);

/// sqrt(mean_r2(a) mean_r2(b)); dominates |I(a, b)| in every mode.
double schwarz_bound(const QuantumState& a, const QuantumState& b);

enum class RadialMethod {
    exact_quadrature,
    asymptotic_circular,
    schwarz_bracket,
};

enum class RadialMode {
    automatic,
    exact,
    asymptotic,
};

struct RadialIntegralResult {
    double value = 0.0;
    RadialMethod method = RadialMethod::exact_quadrature;
    double abs_error_estimate = 0.0;

    /// True when value is an upper-bound magnitude rather than the signed
    /// integral: asymptotic_circular and schwarz_bracket results.  A
    /// schwarz_bracket result stands for the interval [-value, +value].
    bool is_bound() const { return method != RadialMethod::exact_quadrature; }
};

/// Exact mode runs generalized Gauss-Laguerre quadrature on the Laguerre
/// product (both n below exact_n_cutoff).  Asymptotic mode returns the
/// geometric-mean value sqrt(mean_r2(a) mean_r2(b)), accurate only for
/// near-circular Rydberg pairs.  Automatic picks exact below the cutoff,
/// the asymptotic value for near-circular pairs above it, and otherwise
/// degrades to the Schwarz bracket.
RadialIntegralResult radial_integral(const QuantumState& a, const QuantumState& b,
                                     RadialMode mode = RadialMode::automatic);

/// integral x^2 R_a R_b dx; equals delta_{n n'} for equal l.  Exercises
/// the quadrature machinery independently of the r^2 weighting.
double radial_overlap(const QuantumState& a, const QuantumState& b);

const char* method_name(RadialMethod m);

} // namespace rydgrav::hydrogenic
