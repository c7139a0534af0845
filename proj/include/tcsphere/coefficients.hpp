#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tcsphere {

/// Arbitrary-precision integer used for every ring coefficient.
using Coeff = boost::multiprecision::cpp_int;

enum class CoefficientRing { Integers, ModTwo };

inline const char* to_string(CoefficientRing ring) {
    return ring == CoefficientRing::Integers ? "Z" : "Z2";
}

/// Canonical representative of `c` in the coefficient ring: unchanged over Z,
/// 0 or 1 over Z2.
inline Coeff normalize(CoefficientRing ring, Coeff c) {
    if (ring == CoefficientRing::ModTwo) {
        return (c % 2 != 0) ? Coeff(1) : Coeff(0);
    }
    return c;
}

inline std::string coeff_string(const Coeff& c) { return c.str(); }

}  // namespace tcsphere
