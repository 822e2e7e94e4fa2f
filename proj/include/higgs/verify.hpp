#pragma once

#include <string>
#include <vector>

#include "higgs/invariants.hpp"
#include "higgs/oracle_p1.hpp"

namespace higgs {

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Counterexample or summary; empty for a plain pass.
    std::string detail;
    double seconds = 0;
    /// Non-blocking checks are reported but do not affect allPass().
    bool blocking = true;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool allPass() const;
    /// One "PASS name (t s)" / "FAIL name (t s)" line per check, details
    /// indented below; non-blocking checks are tagged.
    std::string toText() const;
};

/// Engine against the P1 brute force at genus 0: I+_{D,nil} for each q0,
/// and for l = 0 also the all-maps series against Exp(q A+ / (q - 1)).
/// Mismatches carry the lambda-term and splitting-type breakdowns.
VerifyReport verifyOracle(long l, const std::vector<long>& q0s, int rmax, int dmax, const p1::OracleOptions& oracle,
                          const EngineOptions& engine);

/// rho identity, Exp/Log algebra, rank-1 closed forms and the two routes to
/// Omega+_K on a symbolic curve of the given genus.
VerifyReport verifyIdentities(int genus, int rmax, int dmax, const EngineOptions& engine, unsigned seed = 1);

/// d-independence of Omega_D(r, d) over one period for r <= rmax, reported
/// both for generic e_k and after imposing the functional equation.
VerifyReport verifyConjecture(int genus, long l, bool canonical, int rmax, const EngineOptions& engine);

}  // namespace higgs
