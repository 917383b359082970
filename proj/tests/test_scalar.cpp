#include <doctest.h>

#include <cmath>
#include <random>

#include "qsl2/scalar.hpp"

using namespace qsl2;

namespace {

Scalar random_scalar(const FieldContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    Scalar acc = Scalar::zero(ctx);
    const int deg = ctx.is_root_of_unity() ? ctx.degree() : 1;
    for (int i = 0; i < deg; ++i) {
        Rational x(num(rng), 1 + std::abs(num(rng)));
        x.canonicalize();
        acc += Scalar::of_rational(ctx, x) * Scalar::q_power(ctx, i);
    }
    return acc;
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("context validation") {
    CHECK_THROWS_AS(FieldContext::root_of_unity(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::root_of_unity(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::rational_q(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::rational_q(Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::rational_q(Rational(0)), std::invalid_argument);
    CHECK(FieldContext::root_of_unity(3)->degree() == 2);
    CHECK(FieldContext::root_of_unity(5)->degree() == 4);
    CHECK(FieldContext::root_of_unity(7)->degree() == 6);
    CHECK(FieldContext::root_of_unity(9)->degree() == 6);   // x^6 + x^3 + 1
    CHECK(FieldContext::root_of_unity(15)->degree() == 8);
}

TEST_CASE("root of unity basics") {
    for (int r : {3, 5, 7, 9}) {
        auto ctx = FieldContext::root_of_unity(r);
        const Scalar q = Scalar::q_power(*ctx, 1);
        // q^r = 1
        CHECK(Scalar::q_power(*ctx, r) == Scalar::one(*ctx));
        // 1 + q + ... + q^{r-1} = 0
        Scalar sum = Scalar::zero(*ctx);
        for (int i = 0; i < r; ++i) sum += Scalar::q_power(*ctx, i);
        CHECK(sum.is_zero());
        CHECK(q * q.inverse() == Scalar::one(*ctx));
    }
}

TEST_CASE("q-integers") {
    auto r3 = FieldContext::root_of_unity(3);
    auto r5 = FieldContext::root_of_unity(5);
    auto q2 = FieldContext::rational_q(Rational(2));

    // [2] = q + q^{-1}
    for (const FieldContext* ctx : {r3.get(), r5.get(), q2.get()}) {
        CHECK(q_int(*ctx, 2) == Scalar::q_power(*ctx, 1) + Scalar::q_power(*ctx, -1));
    }
    CHECK(q_int(*r3, 3).is_zero());
    CHECK(q_int(*q2, 3) == Scalar::of_rational(*q2, Rational(21, 4)));

    CHECK(q2_int(*r3, 1) == Scalar::one(*r3));
    CHECK(q2_int(*r5, 2) == Scalar::one(*r5) + Scalar::q_power(*r5, 2));
    CHECK(q2_int(*r3, 3).is_zero());

    CHECK(mu(*q2) == Scalar::of_rational(*q2, Rational(3, 4)));
    CHECK(mu(*r3) == Scalar::one(*r3) - Scalar::q_power(*r3, 1));  // q^{-2} = q at r = 3
    for (const FieldContext* ctx : {r3.get(), r5.get(), q2.get()}) CHECK_FALSE(mu(*ctx).is_zero());

    // periodicity at a root of unity: [n + r] = [n]
    for (int r : {3, 5, 7}) {
        auto ctx = FieldContext::root_of_unity(r);
        for (int n = 0; n < r; ++n) CHECK(q_int(*ctx, n + r) == q_int(*ctx, n));
    }
}

TEST_CASE("inversion") {
    auto r5 = FieldContext::root_of_unity(5);
    CHECK(Scalar::one(*r5).inverse() == Scalar::one(*r5));
    const Scalar x = Scalar::one(*r5) + Scalar::q_power(*r5, 2);
    CHECK(x.inverse() * x == Scalar::one(*r5));
    CHECK_THROWS_AS(Scalar::zero(*r5).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    auto r7 = FieldContext::root_of_unity(7);
    auto q32 = FieldContext::rational_q(Rational(3, 2));
    for (const FieldContext* ctx : {r7.get(), q32.get()}) {
        for (int trial = 0; trial < 40; ++trial) {
            Scalar a = random_scalar(*ctx, rng);
            Scalar b = random_scalar(*ctx, rng);
            Scalar c = random_scalar(*ctx, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(*ctx));
        }
    }
}

TEST_CASE("reduction idempotence via arithmetic closure") {
    // multiplying high powers twice lands in canonical form: q^{r+k} == q^k etc.
    for (int r : {3, 9}) {
        auto ctx = FieldContext::root_of_unity(r);
        for (int k = 0; k < 2 * r; ++k) {
            Scalar direct = Scalar::q_power(*ctx, k);
            Scalar split = Scalar::q_power(*ctx, k / 2) * Scalar::q_power(*ctx, k - k / 2);
            CHECK(direct == split);
        }
    }
}

TEST_CASE("complex embedding") {
    auto r3 = FieldContext::root_of_unity(3);
    auto z = Scalar::q_power(*r3, 1).embed(1);
    CHECK(std::abs(z.real() - (-0.5)) < 1e-12);
    CHECK(std::abs(z.imag() - std::sqrt(3.0) / 2.0) < 1e-12);

    auto r7 = FieldContext::root_of_unity(7);
    auto off7 = (q_int(*r7, 3) / q_int(*r7, 4)).embed(1);
    CHECK(std::abs(off7.real() - (-1.0)) < 1e-10);
    CHECK(std::abs(off7.imag()) < 1e-10);

    auto r5 = FieldContext::root_of_unity(5);
    auto off5 = (q_int(*r5, 3) / q_int(*r5, 4)).embed(1);
    CHECK(std::abs(off5.real() - 0.6180339887) < 1e-10);
    CHECK(std::abs(off5.imag()) < 1e-10);

    CHECK_THROWS_AS(Scalar::one(*r3).embed(3), std::invalid_argument);

    // other primitive embeddings: q at k = 2, r = 5 lands on exp(4 pi i / 5)
    auto z2 = Scalar::q_power(*r5, 1).embed(2);
    CHECK(std::abs(z2.real() - std::cos(4.0 * M_PI / 5.0)) < 1e-12);
    CHECK(std::abs(z2.imag() - std::sin(4.0 * M_PI / 5.0)) < 1e-12);

    // ring homomorphism on random pairs
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Scalar a = random_scalar(*r7, rng);
        Scalar b = random_scalar(*r7, rng);
        auto lhs = (a * b).embed(1);
        auto rhs = a.embed(1) * b.embed(1);
        CHECK(std::abs(lhs - rhs) < 1e-12);
        CHECK(std::abs((a + b).embed(1) - (a.embed(1) + b.embed(1))) < 1e-12);
    }
}

TEST_CASE("q conjugation") {
    auto r5 = FieldContext::root_of_unity(5);
    CHECK(Scalar::q_power(*r5, 1).conjugate_q() == Scalar::q_power(*r5, -1));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar a = random_scalar(*r5, rng);
        Scalar b = random_scalar(*r5, rng);
        CHECK(a.conjugate_q().conjugate_q() == a);
        CHECK((a * b).conjugate_q() == a.conjugate_q() * b.conjugate_q());
    }
}

TEST_CASE("null scalar adopts context") {
    auto r3 = FieldContext::root_of_unity(3);
    Scalar z;  // context-free zero
    Scalar x = Scalar::q_power(*r3, 1);
    CHECK(z.is_zero());
    CHECK(z + x == x);
    CHECK((z * x).is_zero());
    CHECK(z == Scalar::zero(*r3));
}

}  // TEST_SUITE
