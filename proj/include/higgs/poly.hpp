#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "higgs/monomial.hpp"

namespace higgs {

/// Sparse multivariate polynomial over Z in the variables v, e1..e8, z1..z6.
/// Terms are kept sorted by strictly decreasing graded-lex monomial with
/// nonzero coefficients, so equal polynomials are structurally equal.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor): integer literals are polynomials
    explicit Poly(const mpz_class& c);

    static Poly variable(Var x, unsigned k = 1);
    static Poly term(const Monomial& m, const mpz_class& c);
    /// Builds from unsorted terms; duplicates are combined, zeros dropped.
    static Poly fromTerms(std::vector<Monomial> mons, std::vector<mpz_class> coefs);

    bool isZero() const { return mons_.empty(); }
    bool isConstant() const { return mons_.empty() || (mons_.size() == 1 && mons_[0].isOne()); }
    bool isOne() const { return isConstant() && !isZero() && coefs_[0] == 1; }
    bool isMonomial() const { return mons_.size() == 1; }
    std::size_t size() const { return mons_.size(); }

    const std::vector<Monomial>& monomials() const { return mons_; }
    const std::vector<mpz_class>& coefficients() const { return coefs_; }
    const Monomial& leadMonomial() const { return mons_.front(); }
    const mpz_class& leadCoefficient() const { return coefs_.front(); }
    mpz_class constantTerm() const;
    int sign() const { return isZero() ? 0 : sgn(coefs_.front()); }

    unsigned degree(Var x) const;
    unsigned totalDegree() const { return isZero() ? 0 : mons_.front().degree(); }
    /// Lane-wise max / min exponent over all terms (zero monomial if empty).
    Monomial degrees() const;
    Monomial minDegrees() const;
    bool contains(Var x) const { return degree(x) > 0; }
    /// Bit i set when lane i occurs with positive exponent.
    std::uint32_t variableMask() const;
    /// Largest absolute value of a coefficient.
    mpz_class maxNorm() const;
    /// Nonnegative gcd of the coefficients.
    mpz_class content() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Poly& b);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.mons_ == b.mons_ && a.coefs_ == b.coefs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const mpz_class& c) const;
    /// Divides every coefficient by c, which must divide each exactly.
    Poly divideContent(const mpz_class& c) const;
    Poly shifted(const Monomial& m) const;
    /// Divides by the monomial m, which must divide every term.
    Poly unshifted(const Monomial& m) const;
    Poly pow(unsigned k) const;

    /// Exact quotient a / b, or nullopt if b does not divide a in Z[vars].
    std::optional<Poly> divExact(const Poly& b) const;
    bool isDivisibleBy(const Poly& b) const { return divExact(b).has_value(); }

    Poly evaluate(Var x, const mpz_class& value) const;
    /// Replaces x by p.
    Poly substitute(Var x, const Poly& p) const;
    /// Divided derivative (1/k!) d^k/dx^k, exact over Z.
    Poly hasse(Var x, unsigned k) const;
    /// Coefficient of x^k, as a polynomial free of x.
    Poly coefficient(Var x, unsigned k) const;
    /// Coefficients indexed by the power of x.
    std::vector<Poly> coefficientsIn(Var x) const;
    /// Applies v -> v^n to every term (used by the Adams operations).
    Poly stretchV(unsigned n) const;

    std::string toString() const;
    std::size_t hash() const;

private:
    std::vector<Monomial> mons_;
    std::vector<mpz_class> coefs_;

    friend class PolyBuilder;
};

/// Accumulates sorted runs of terms and merges them (used by products).
class PolyBuilder {
public:
    /// Adds a run sorted by decreasing monomial.
    void addSortedRun(std::vector<Monomial> mons, std::vector<mpz_class> coefs);
    Poly finish();

private:
    struct Run {
        std::vector<Monomial> mons;
        std::vector<mpz_class> coefs;
        int level = 0;
    };
    std::vector<Run> stack_;
    static Run merge(Run a, Run b);
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace higgs
