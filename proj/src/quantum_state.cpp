#include "rydgrav/quantum_state.hpp"

#include <sstream>

namespace rydgrav {

void QuantumState::validate() const
{
    std::ostringstream msg;
    if (n < 1) {
        msg << "principal quantum number n=" << n << " must be >= 1";
        throw invalid_state(msg.str());
    }
    if (l < 0 || l > n - 1) {
        msg << "orbital quantum number l=" << l << " outside [0, n-1] for n=" << n;
        throw invalid_state(msg.str());
    }
    if (twoj != 2 * l + 1 && twoj != 2 * l - 1) {
        msg << "2j=" << twoj << " must be 2l+1 or 2l-1 for l=" << l;
        throw invalid_state(msg.str());
    }
    if (twoj < 1) {
        msg << "2j=" << twoj << " must be a positive odd integer";
        throw invalid_state(msg.str());
    }
    if (z < 1) {
        msg << "core charge Z=" << z << " must be >= 1";
        throw invalid_state(msg.str());
    }
}

std::string QuantumState::label() const
{
    std::ostringstream out;
    out << "(n=" << n << ", l=" << l << ", j=" << twoj << "/2";
    if (z != 1)
        out << ", Z=" << z;
    out << ")";
    return out.str();
}

} // namespace rydgrav
