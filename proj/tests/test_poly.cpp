#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "higgs/gcd.hpp"
#include "higgs/poly.hpp"
#include "higgs/simd/exponent_kernels.hpp"
#include "support/generators.hpp"

using namespace higgs;

namespace {

const Poly v = Poly::variable(Var::v());
const Poly e1 = Poly::variable(Var::e(1));
const Poly e2 = Poly::variable(Var::e(2));
const Poly z1 = Poly::variable(Var::z(1));
const Poly z2 = Poly::variable(Var::z(2));

}  // namespace

TEST_CASE("monomial order is graded lex with v first") {
    CHECK(compare(Monomial::of(Var::v(), 2), Monomial::of(Var::e(1), 1)) > 0);
    CHECK(compare(Monomial::of(Var::v()), Monomial::of(Var::e(1))) > 0);
    CHECK(compare(Monomial::of(Var::e(1)), Monomial::of(Var::z(1))) > 0);
    CHECK(Monomial::of(Var::z(3), 4).degree() == 4);
}

TEST_CASE("ring arithmetic") {
    const Poly a = v * v - 1;
    const Poly b = v * v + 1;
    CHECK(a * b == v.pow(4) - 1);
    CHECK((a + b) == 2 * v * v);
    CHECK((a - a).isZero());
    CHECK((v + 1).pow(3) == v.pow(3) + 3 * v * v + 3 * v + 1);
    CHECK((v + 1).pow(3).toString() == "v^3+3*v^2+3*v+1");
    CHECK((e1 * z1 - 2).toString() == "e1*z1-2");
}

TEST_CASE("exact division") {
    const Poly a = (v * v - 1) * (e1 + z1 * z2 - 3);
    auto q = a.divExact(v * v - 1);
    REQUIRE(q);
    CHECK(*q == e1 + z1 * z2 - 3);
    CHECK_FALSE(a.divExact(v + 2));
    CHECK_FALSE((v * v + 1).divExact(2 * v));
    CHECK(*(v.pow(3) * e1).divExact(v * e1) == v * v);
}

TEST_CASE("substitution, evaluation and derivatives") {
    const Poly p = z1 * z1 + v * z1 + 1;
    CHECK(p.evaluate(Var::z(1), 2) == 5 + 2 * v);
    CHECK(p.substitute(Var::z(1), z2 + 1) == z2 * z2 + 2 * z2 + 1 + v * z2 + v + 1);
    CHECK(p.hasse(Var::z(1), 1) == 2 * z1 + v);
    CHECK(p.hasse(Var::z(1), 2) == Poly(1));
    CHECK(p.coefficient(Var::z(1), 1) == v);
    CHECK((v * e1 + v.pow(2)).stretchV(2) == v.pow(2) * e1 + v.pow(4));
}

TEST_CASE("gcd of structured inputs") {
    CHECK(gcd(v.pow(4) - 1, v * v - 1) == v * v - 1);
    CHECK(gcd(6 * v, 4 * v * v) == 2 * v);
    CHECK(gcd(Poly(0), -(v + 1)) == v + 1);
    CHECK(gcd(v + 1, v - 1) == Poly(1));
    const Poly f = (e1 - v * z1 + 2) * (v * v - e2);
    const Poly g = (e1 - v * z1 + 2) * (z2 + e1 * v + 7);
    CHECK(gcd(f, g) == v * z1 - e1 - 2);
    CHECK(gcd(f * z2, g * z2 * z1) == (v * z1 - e1 - 2) * z2);
}

TEST_CASE("gcd property: gcd(a*c, b*c) is divisible by c") {
    testing::Gen gen(17);
    for (int round = 0; round < 60; ++round) {
        const Poly a = gen.poly({Var::v(), Var::e(1), Var::z(1)}, gen.uniform(1, 5), 3);
        const Poly b = gen.poly({Var::v(), Var::e(2), Var::z(1)}, gen.uniform(1, 5), 3);
        const Poly c = gen.poly({Var::v(), Var::e(1), Var::e(2)}, gen.uniform(1, 4), 2);
        if (a.isZero() || b.isZero() || c.isZero()) continue;
        const Poly g = gcd(a * c, b * c);
        CHECK((a * c).isDivisibleBy(g));
        CHECK((b * c).isDivisibleBy(g));
        CHECK(g.isDivisibleBy(c.sign() < 0 ? -c : c));
        const auto r = gcdWithCofactors(a * c, b * c);
        CHECK(gcd(r.ca, r.cb).isOne());
    }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    const auto* wide = simd::avx2Kernels();
    if (wide == nullptr || !simd::cpuHasAvx2()) {
        MESSAGE("AVX2 kernels unavailable; reference path only");
        return;
    }
    const auto& ref = simd::scalarKernels();
    testing::Gen gen(5);
    for (int round = 0; round < 200; ++round) {
        std::vector<Monomial> in(static_cast<std::size_t>(gen.uniform(1, 40)));
        for (auto& m : in)
            for (int lane = 1; lane < kLanes; ++lane) m.set(Var::fromLane(lane), gen.uniform(0, 9));
        Monomial s;
        for (int lane = 1; lane < kLanes; ++lane) s.set(Var::fromLane(lane), gen.uniform(0, 2));

        std::vector<Monomial> a(in.size()), b(in.size());
        ref.shift_up(a, in, s);
        wide->shift_up(b, in, s);
        CHECK(a == b);
        std::vector<Monomial> c(in.size()), d(in.size());
        ref.shift_down(c, a, s);
        wide->shift_down(d, a, s);
        CHECK(c == d);
        CHECK(c == in);
        CHECK(ref.lane_min(in) == wide->lane_min(in));
        CHECK(ref.lane_max(in) == wide->lane_max(in));
        CHECK(ref.count_divisible(in, s) == wide->count_divisible(in, s));
    }
}

TEST_CASE("polynomial products are independent of the kernel table") {
    testing::Gen gen(11);
    const Poly a = gen.poly({Var::v(), Var::e(1), Var::z(1), Var::z(2)}, 30, 4);
    const Poly b = gen.poly({Var::v(), Var::e(2), Var::z(2)}, 30, 4);
    const auto& saved = simd::kernels();
    simd::setKernels(simd::scalarKernels());
    const Poly ref = a * b;
    const Poly g1 = gcd(a * b, a * (b + 1));
    if (const auto* wide = simd::avx2Kernels(); wide != nullptr && simd::cpuHasAvx2()) simd::setKernels(*wide);
    CHECK(a * b == ref);
    CHECK(gcd(a * b, a * (b + 1)) == g1);
    simd::setKernels(saved);
}
