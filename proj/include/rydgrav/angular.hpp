#pragma once

/// Angular and spin factors for quadrupole (rank-2 tensor) transitions
/// between fine-structure levels: selection rules, the reduced-matrix-
/// element factor
///
///     C(l j -> l' j') = |( (1/2) l' j' || C^(2) || (1/2) l j )|^2 / (2j+1)
///
/// in exact rational form, and degeneracy-weighted combinations.
/// An independent Wigner-algebra evaluation lives in angular_oracle.hpp
/// and is used only for verification.

#include "rydgrav/quantum_state.hpp"

#include <string>

namespace rydgrav::angular {

enum RuleViolation : unsigned {
    rule_none = 0,
    rule_delta_j = 1u << 0,   // |j' - j| > 2
    rule_delta_l = 1u << 1,   // l' - l not in {-2, 0, +2}
    rule_l_sum = 1u << 2,     // l + l' < 2
    rule_parity_pairing = 1u << 3, // (j-l) parity inconsistent with delta j
};

struct SelectionRuleOutcome {
    bool allowed = false;
    long delta_j = 0; // j' - j, integer for spin-1/2 systems
    long delta_l = 0;
    unsigned violations = rule_none;

    std::string describe() const;
};

SelectionRuleOutcome selection_rules(const QuantumState& a, const QuantumState& b);

/// Table value for the transition a -> b.  Throws invalid_transition
/// naming the violated rule when the pair is not quadrupole-allowed.
double reduced_c2(const QuantumState& a, const QuantumState& b);

/// Raw table row, keyed by delta j, doubled initial j, and whether the
/// spin alignment (sign of j - l) is preserved.  Evaluated as a ratio of
/// exact integers, converted to floating point last.  Structural zeros of
/// the table return 0 exactly.
double reduced_c2_row(int delta_j, long twoj, bool parity_preserved);

/// (g_lower / g_upper) * C(lower -> upper); tends to 3/8 for delta j = +2
/// and 1/4 for delta j = 0 as j grows.
double degeneracy_weighted_c2(const QuantumState& lower, const QuantumState& upper);

} // namespace rydgrav::angular
