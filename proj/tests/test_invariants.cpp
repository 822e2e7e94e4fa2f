#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "higgs/invariants.hpp"
#include "support/generators.hpp"

using namespace higgs;

namespace {

ScalarExpr S(const char* s) { return ScalarExpr::parse(s); }
const ScalarExpr qm1 = S("v^2-1");

GradedSeries randomOmega(testing::Gen& gen, int window) {
    GradedSeries s(window, window, 0);
    for (int r = 0; r <= window; ++r)
        for (int d = 0; d <= window; ++d)
            if ((r || d) && gen.coin()) s.set(r, d, ScalarExpr(gen.poly({Var::v()}, 2, 3, 4)));
    return s;
}

}  // namespace

TEST_CASE("omegaFromI") {
    for (int g = 0; g <= 2; ++g) {
        const auto c = CurveModel::symbolic(g);
        for (long l : {0L, -1L}) {
            const auto om = omegaFromI(nilBundleSeries(l, c, 1, 4));
            for (int d = 0; d <= 4; ++d) CHECK(om.at(1, d) == scalar::minusVPow(-l) * c.picZero());
        }
    }
    testing::Gen gen(11);
    const GradedSeries x = randomOmega(gen, 3);
    CHECK(omegaFromI(plethExp(x.scaled(qm1.inverse()))) == x);
    CHECK(omegaFromI(GradedSeries::one(2, 2, 0)) == GradedSeries(2, 2, 0));
}

TEST_CASE("hPlusFromOmega") {
    GradedSeries om(3, 3, 2);
    om.set(1, 1, S("e1+v"));
    const auto h = hPlusFromOmega(om);
    CHECK(h.at(1, 1) == S("(e1+v)/(v^2-1)"));
    GradedSeries single(3, 3, 2);
    single.set(1, 1, S("(e1+v)/(v^2-1)"));
    CHECK(h.at(2, 2) == plethExp(single).at(2, 2));
    CHECK(hPlusFromOmega(GradedSeries(3, 3, 0)) == GradedSeries::one(3, 3, 0));

    testing::Gen gen(12);
    for (int round = 0; round < 5; ++round) {
        const GradedSeries w = randomOmega(gen, 3);
        GradedSeries w0 = w;
        w0.set(0, 0, 0);
        const GradedSeries hp = hPlusFromOmega(w0);
        for (int r = 1; r <= 3; ++r)
            for (int d = 0; d <= 3; ++d)
                if (std::gcd(r, d) == 1) CHECK(hp.at(r, d) * qm1 == w0.at(r, d));
    }
}

TEST_CASE("omegaPlusForDivisor") {
    const auto g0 = CurveModel::symbolic(0);
    const auto om = omegaPlusForDivisor(2, false, g0, 1, 3);
    for (int d = 0; d <= 3; ++d) CHECK(om.at(1, d) == S("v^4"));
    for (int g = 0; g <= 2; ++g) {
        const auto c = CurveModel::symbolic(g);
        const auto k = omegaPlusForDivisor(2 * g - 2, true, c, 1, 3);
        for (int d = 0; d <= 3; ++d) CHECK(k.at(1, d) == scalar::q() * c.picZero());
    }
    CHECK_THROWS_AS(omegaPlusForDivisor(2, false, CurveModel::symbolic(2), 1, 1), UnsupportedRegime);
    CHECK_THROWS_WITH(omegaPlusForDivisor(2, false, CurveModel::symbolic(2), 1, 1),
                      "unsupported degree: pipeline has no route for non-canonical divisors of degree 2g-2");
    CHECK_THROWS_AS(omegaPlusForDivisor(-3, false, g0, 1, 1), UnsupportedRegime);
    CHECK_THROWS_AS(omegaPlusForDivisor(0, true, g0, 1, 1), std::invalid_argument);
}

TEST_CASE("A+ from the nilpotent series") {
    for (int g = 0; g <= 2; ++g) {
        const auto c = CurveModel::symbolic(g);
        const auto t = aPlusFromNil(c, 1, 4);
        for (int d = 0; d <= 4; ++d) CHECK(t.at(1, d) == c.picZero());
    }
    const auto a0 = aPlusSeries(CurveModel::symbolic(0), 3, 5);
    for (int d = 0; d <= 5; ++d) {
        CHECK(a0.at(1, d).isOne());
        CHECK(a0.at(2, d).isZero());
        CHECK(a0.at(3, d).isZero());
    }
    for (int g = 0; g <= 1; ++g) {
        const auto c = CurveModel::symbolic(g);
        const auto nil = nilBundleSeries(0, c, 3, 4);
        CHECK(aPlusByPeeling(nil) == omegaFromI(nil));
    }
}

TEST_CASE("stabilization") {
    CHECK(stableRepresentative(1, 0, 5) == 1);
    CHECK(stableRepresentative(1, 3, 5) == 1);
    CHECK(stableRepresentative(2, 0, 2) == 4);
    CHECK(stableRepresentative(2, 1, 2) == 3);
    CHECK(stableRepresentative(3, 2, -1) == 2);

    GradedSeries plus(2, 3, 0);
    for (int r = 1; r <= 2; ++r)
        for (int d = 0; d <= 3; ++d) plus.set(r, d, 10 * r + d);
    CHECK_THROWS_WITH(stabilizeAndExtend(plus, 2, 0, false, Kind::H), "window too small: rank 2 needs d_max >= 4");

    GradedSeries wide(2, 6, 0);
    for (int r = 1; r <= 2; ++r)
        for (int d = 0; d <= 6; ++d) wide.set(r, d, 10 * r + d);
    const auto t = stabilizeAndExtend(wide, 2, 0, false, Kind::H);
    CHECK(t.at(2, 0) == ScalarExpr(24));
    CHECK(t.entries.at({2, 0}).provenance == Provenance::ExtendedByPeriodicity);
    CHECK(t.at(2, 5) == ScalarExpr(25));
    CHECK(t.entries.at({2, 5}).provenance == Provenance::StableRegion);
    CHECK(t.at(1, 0) == ScalarExpr(11));
    CHECK(t.at(1, 4) == ScalarExpr(14));
}

TEST_CASE("rank-1 moduli volumes") {
    for (int g = 0; g <= 2; ++g) {
        const auto c = CurveModel::symbolic(g);
        for (long l : {2L * g - 1, 2L * g, 2L * g + 1}) {
            const auto m = computeTable(Kind::ModuliVolume, l, false, c, 1, 3);
            for (int d = 0; d <= 3; ++d) CHECK(m.at(1, d) == c.picZero() * scalar::q().pow(l + 1 - g));
        }
        const auto mk = computeTable(Kind::ModuliVolume, 2L * g - 2, true, c, 1, 3);
        for (int d = 0; d <= 3; ++d) CHECK(mk.at(1, d) == c.picZero() * scalar::q().pow(g));
        const auto sk = computeTable(Kind::StackVolume, 2L * g - 2, true, c, 1, 3);
        CHECK(sk.at(1, 0) * qm1 == mk.at(1, 0));
    }
    // Genus 0 volumes at small q are positive.
    for (long q0 : {2L, 3L}) {
        const auto c = CurveModel::numeric(0, {1}, q0);
        const auto m = computeTable(Kind::ModuliVolume, 1, false, CurveModel::symbolic(0), 2, 6);
        for (const auto& [key, e] : m.entries) {
            const auto x = c.specialize(e.value);
            CHECK(x.isRational());
            CHECK(x.a > 0);
        }
    }
}

TEST_CASE("coprime shortcut on computed tables") {
    const auto c = CurveModel::symbolic(1);
    const auto h = computeTable(Kind::H, 1, false, c, 3, 6);
    const auto om = computeTable(Kind::Omega, 1, false, c, 3, 6);
    for (const auto& [key, e] : h.entries)
        if (std::gcd(key.first, key.second) == 1) CHECK(e.value * qm1 == om.at(key.first, key.second));
}

TEST_CASE("I+ routes agree") {
    // For g = 1 the canonical divisor and the zero divisor coincide.
    const auto c = CurveModel::symbolic(1);
    const auto viaK = computeTable(Kind::IPlus, 0, true, c, 2, 3);
    const auto viaZero = computeTable(Kind::IPlus, 0, false, c, 2, 3);
    CHECK(viaK.entries == viaZero.entries);
    // I+_D = I+_{K-D,nil} for deg D > 2g-2.
    const auto ip = computeTable(Kind::IPlus, 1, false, c, 2, 3);
    const auto nil = computeTable(Kind::INil, -1, false, c, 2, 3);
    CHECK(ip.entries == nil.entries);
    CHECK_THROWS_AS(computeTable(Kind::INil, 1, false, c, 1, 1), UnsupportedRegime);
}

TEST_CASE("table export round trip") {
    const auto t = computeTable(Kind::H, 1, false, CurveModel::symbolic(1), 2, 4);
    CHECK(InvariantTable::fromJson(t.toJson()) == t);
    const std::string csv = t.toCsv();
    CHECK(csv.rfind("l,r,d,kind,value,provenance\n", 0) == 0);
    CHECK(csv.find("\n1,2,0,h,\"") != std::string::npos);
    CHECK(parseKind("moduli-volume") == Kind::ModuliVolume);
    CHECK_THROWS(parseKind("bogus"));
}
