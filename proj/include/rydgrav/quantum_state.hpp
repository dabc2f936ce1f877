#pragma once

#include "rydgrav/errors.hpp"

#include <string>

namespace rydgrav {

/// One fine-structure level (n, l, j) of a quasi-hydrogenic atom with core
/// charge Z.  j is stored doubled so half-integers stay exact.
struct QuantumState {
    long n = 1;
    long l = 0;
    long twoj = 1;
    int z = 1;

    QuantumState() = default;

    QuantumState(long n_, long l_, long twoj_, int z_ = 1)
        : n(n_), l(l_), twoj(twoj_), z(z_)
    {
        validate();
    }

    double j() const { return 0.5 * static_cast<double>(twoj); }

    /// g = 2j + 1, always a positive even integer.
    long degeneracy() const { return twoj + 1; }

    /// Radial node count n_r = n - l - 1; zero for circular states.
    long radial_nodes() const { return n - l - 1; }

    bool is_circular() const { return l == n - 1; }

    /// Spin orientation relative to l: +1 for j = l + 1/2, -1 for j = l - 1/2.
    int spin_alignment() const { return twoj == 2 * l + 1 ? +1 : -1; }

    static QuantumState circular(long n, int z = 1) { return QuantumState(n, n - 1, 2 * n - 1, z); }

    std::string label() const;

    bool operator==(const QuantumState&) const = default;

private:
    void validate() const;
};

} // namespace rydgrav
