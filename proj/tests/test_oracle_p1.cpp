#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "higgs/invariants.hpp"
#include "higgs/oracle_p1.hpp"

using namespace higgs;
using namespace higgs::p1;

namespace {

mpq_class valueAt(const ScalarExpr& x, long q0) {
    const auto v = scalar::specialize(x, q0, {});
    REQUIRE(v.isRational());
    return v.a;
}

void checkSeriesEqual(const GradedSeries& engine, const GradedSeries& oracle, long q0) {
    for (int r = 0; r <= oracle.rmax(); ++r)
        for (int d = 0; d <= oracle.dmax(); ++d) {
            CAPTURE(r);
            CAPTURE(d);
            CHECK(scalar::specialize(engine.at(r, d), q0, {}) == scalar::specialize(oracle.at(r, d), q0, {}));
        }
}

// Nilpotent 2x2 matrices over F_p counted by trace and determinant.
long nilpotent2x2(long p) {
    long n = 0;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d)
                    if ((a + d) % p == 0 && (a * d - b * c) % p == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("splitting types") {
    CHECK(splittingTypes(2, 2) == std::vector<SplittingType>{{{2, 0}}, {{1, 1}}});
    CHECK(splittingTypes(1, 3) == std::vector<SplittingType>{{{3}}});
    CHECK(splittingTypes(3, 0) == std::vector<SplittingType>{{{0, 0, 0}}});
    CHECK(splittingTypes(3, 4).size() == 4);  // partitions of 4 into at most 3 parts
    for (const auto& t : splittingTypes(3, 5)) CHECK(t.degree() == 5);
    CHECK_THROWS(splittingTypes(0, 1));
    CHECK(SplittingType{{2, 1, 0}}.toString() == "(2,1,0)");
}

TEST_CASE("hom dimensions and automorphisms") {
    for (long q0 : {2L, 3L, 5L}) {
        CHECK(autCount({{0, 0}}, q0) == (q0 * q0 - 1) * (q0 * q0 - q0));
        CHECK(autCount({{1, 0}}, q0) == (q0 - 1) * (q0 - 1) * q0 * q0);
        CHECK(autCount({{4}}, q0) == q0 - 1);
        CHECK(glOrder(3, q0) == (q0 * q0 * q0 - 1) * (q0 * q0 * q0 - q0) * (q0 * q0 * q0 - q0 * q0));
    }
    CHECK(homDim({{0, 0}}, {{0, 0}}, -1) == 0);
    CHECK(homDim({{1, 0}}, {{1, 0}}, 0) == 4);
    CHECK(homDim({{2}}, {{0}}, 1) == 0);
}

TEST_CASE("nilpotent counts") {
    for (long q0 : {2L, 3L}) {
        CHECK(nilCount({{0, 0}}, 0, q0) == q0 * q0);
        CHECK(nilCount({{0, 0}}, 0, q0) == nilpotent2x2(q0));
        // theta_11, theta_22 scalars, theta_12 of degree <= 1, theta_21 = 0.
        CHECK(nilCount({{1, 0}}, 0, q0) == q0 * q0);
        for (long l : {0L, -1L, -2L}) CHECK(nilCount({{3}}, l, q0) == 1);
        CHECK(nilCount({{0, 0}}, -1, q0) == 1);
        CHECK(allCount({{0, 0}}, 0, q0) == q0 * q0 * q0 * q0);
    }
    CHECK_THROWS_WITH(nilCount({{0, 0}}, 0, 4), "the P1 oracle supports prime q0 only");
    OracleOptions tiny;
    tiny.cap = 10;
    CHECK_THROWS_WITH(nilCount({{0, 0}}, 0, 2, tiny), "enumeration cap exceeded for type (0,0): need cap >= 16");
}

TEST_CASE("nilpotent counts never exceed all maps") {
    for (long q0 : {2L, 3L})
        for (int d = 0; d <= 3; ++d)
            for (const auto& t : splittingTypes(2, d))
                for (long l : {0L, -1L}) {
                    const auto n = nilCount(t, l, q0);
                    CHECK(n >= 1);
                    CHECK(n <= allCount(t, l, q0));
                }
}

TEST_CASE("thread count does not change counts") {
    OracleOptions one, four;
    one.threads = 1;
    four.threads = 4;
    for (const auto& t : splittingTypes(2, 4)) CHECK(nilCount(t, 0, 3, one) == nilCount(t, 0, 3, four));
}

TEST_CASE("oracle series examples") {
    for (long q0 : {2L, 3L}) {
        const auto nil = oracleSeries(0, q0, 2, 3, true);
        mpq_class expected(q0 * q0, (q0 * q0 - 1) * (q0 * q0 - q0));
        expected.canonicalize();
        CHECK(valueAt(nil.at(2, 0), q0) == expected);
        const auto all = oracleSeries(0, q0, 1, 3, false);
        for (int d = 0; d <= 3; ++d) {
            CHECK(valueAt(nil.at(1, d), q0) == mpq_class(1, q0 - 1));
            CHECK(valueAt(all.at(1, d), q0) == mpq_class(q0, q0 - 1));
        }
        CHECK(nil.at(0, 0).isOne());
    }
    // Odd l r^2 leaves a sqrt(q0) factor.
    const auto odd = oracleSeries(-1, 2, 1, 1, true);
    CHECK(scalar::specialize(odd.at(1, 0), 2, {}).b == mpq_class(-1, 1));
}

TEST_CASE("engine matches the oracle on P1") {
    const auto g0 = CurveModel::symbolic(0);
    for (long q0 : {2L, 3L})
        for (long l : {0L, -1L}) {
            CAPTURE(q0);
            CAPTURE(l);
            checkSeriesEqual(nilBundleSeries(l, g0, 2, 4), oracleSeries(l, q0, 2, 4, true), q0);
        }
}

TEST_CASE("all-maps counts match Exp of A+") {
    const auto g0 = CurveModel::symbolic(0);
    const GradedSeries a = aPlusSeries(g0, 2, 4);
    const GradedSeries viaA = plethExp(a.scaled(scalar::q() / (scalar::q() - 1)));
    for (long q0 : {2L, 3L}) checkSeriesEqual(viaA, oracleSeries(0, q0, 2, 4, false), q0);
    for (int d = 0; d <= 4; ++d) CHECK(a.at(2, d).isZero());
}

TEST_CASE("engine matches the oracle in rank 3") {
    const auto g0 = CurveModel::symbolic(0);
    for (long l : {0L, -1L, -2L}) {
        const auto eng = nilBundleSeries(l, g0, 3, 3);
        for (long q0 : {2L, 3L}) {
            CAPTURE(q0);
            CAPTURE(l);
            checkSeriesEqual(eng, oracleSeries(l, q0, 3, 3, true), q0);
        }
    }
}
