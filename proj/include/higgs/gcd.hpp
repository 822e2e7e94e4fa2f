#pragma once

#include "higgs/poly.hpp"

namespace higgs {

/// Greatest common divisor in Z[v, e, z], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// gcd plus the cofactors a / g and b / g.
struct GcdResult {
    Poly g, ca, cb;
};
GcdResult gcdWithCofactors(const Poly& a, const Poly& b);

/// Counters for the heuristic/fallback split, exposed for diagnostics.
struct GcdStats {
    unsigned long calls = 0;
    unsigned long heuristicHits = 0;
    unsigned long prsFallbacks = 0;
};
GcdStats gcdStats();

}  // namespace higgs
