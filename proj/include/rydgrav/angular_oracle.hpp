#pragma once

/// First-principles evaluation of the reduced quadrupole factor, kept
/// deliberately independent of the closed-form table in angular.hpp.
/// Builds |(l s) j m> states from Clebsch-Gordan sums, takes matrix
/// elements of C^2_q between spherical harmonics, and sums the squares:
///
///   C_oracle = (2j+1)^-1 sum_{m m' q} |< (l' 1/2) j' m' | C^2_q | (l 1/2) j m >|^2
///
/// Verification path only; feasible for small j (cost grows with 2j+1).

#include "rydgrav/quantum_state.hpp"

namespace rydgrav::angular {

double reduced_c2_oracle(const QuantumState& a, const QuantumState& b);

} // namespace rydgrav::angular
