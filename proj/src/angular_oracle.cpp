#include "rydgrav/angular_oracle.hpp"

#include <gsl/gsl_sf_coupling.h>

#include <cmath>
#include <cstdlib>

namespace rydgrav::angular {

namespace {

// Clebsch-Gordan <j1 m1 j2 m2 | J M> from the 3-j symbol, doubled
// arguments throughout.
double clebsch(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M)
{
    if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_M) > two_J)
        return 0.0;
    if (two_m1 + two_m2 != two_M)
        return 0.0;
    const double threej = gsl_sf_coupling_3j(two_j1, two_j2, two_J, two_m1, two_m2, -two_M);
    const int phase_exp = (two_j1 - two_j2 + two_M) / 2;
    const double phase = (phase_exp % 2 == 0) ? 1.0 : -1.0;
    return phase * std::sqrt(two_J + 1.0) * threej;
}

// <l' ml' | C^2_q | l ml> with C^2_q = sqrt(4 pi / 5) Y_{2q}:
// sqrt((2l+1)/(2l'+1)) <l ml 2 q | l' ml'> <l 0 2 0 | l' 0>
double orbital_c2(long lp, long mlp, long l, long ml, long q)
{
    const double scale = std::sqrt((2.0 * l + 1.0) / (2.0 * lp + 1.0));
    const double geometric = clebsch(static_cast<int>(2 * l), static_cast<int>(2 * ml),
                                     4, static_cast<int>(2 * q),
                                     static_cast<int>(2 * lp), static_cast<int>(2 * mlp));
    const double parity = clebsch(static_cast<int>(2 * l), 0, 4, 0, static_cast<int>(2 * lp), 0);
    return scale * geometric * parity;
}

} // namespace

double reduced_c2_oracle(const QuantumState& a, const QuantumState& b)
{
    const long l = a.l;
    const long lp = b.l;
    const int two_j = static_cast<int>(a.twoj);
    const int two_jp = static_cast<int>(b.twoj);

    double sum = 0.0;
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
        for (long q = -2; q <= 2; ++q) {
            const int two_mp = two_m + static_cast<int>(2 * q);
            if (std::abs(two_mp) > two_jp)
                continue;
            // coherent sum over the spin projection
            double me = 0.0;
            for (int two_ms = -1; two_ms <= 1; two_ms += 2) {
                const int two_ml = two_m - two_ms;
                const int two_mlp = two_mp - two_ms;
                if (two_ml % 2 != 0 || two_mlp % 2 != 0)
                    continue;
                const double cg_in = clebsch(static_cast<int>(2 * l), two_ml, 1, two_ms, two_j, two_m);
                const double cg_out = clebsch(static_cast<int>(2 * lp), two_mlp, 1, two_ms, two_jp, two_mp);
                me += cg_out * cg_in * orbital_c2(lp, two_mlp / 2, l, two_ml / 2, q);
            }
            sum += me * me;
        }
    }
    return sum / (two_j + 1.0);
}

} // namespace rydgrav::angular
