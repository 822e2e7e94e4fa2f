#pragma once

// Small hand-rolled generators for property tests. Seeds are fixed so a
// failure reproduces exactly.

#include <random>
#include <vector>

#include "higgs/poly.hpp"

namespace higgs::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    /// Random polynomial over the given lanes with small coefficients.
    Poly poly(std::initializer_list<Var> vars, int terms, int maxDeg, int maxCoef = 5) {
        return poly(std::vector<Var>(vars), terms, maxDeg, maxCoef);
    }

    Poly poly(const std::vector<Var>& vars, int terms, int maxDeg, int maxCoef = 5) {
        std::vector<Monomial> mons;
        std::vector<mpz_class> coefs;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (Var x : vars) m.set(x, static_cast<unsigned>(uniform(0, maxDeg)));
            int c = uniform(-maxCoef, maxCoef);
            if (c == 0) c = 1;
            mons.push_back(m);
            coefs.emplace_back(c);
        }
        return Poly::fromTerms(std::move(mons), std::move(coefs));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace higgs::testing
