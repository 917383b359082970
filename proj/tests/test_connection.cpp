#include <doctest.h>

#include <random>

#include "qsl2/connection.hpp"
#include "qsl2/curvature.hpp"
#include "qsl2/reference.hpp"

using namespace qsl2;

namespace {

Connection random_constant_connection(const FieldContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> v(-3, 3);
    Connection A;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            Rational x(v(rng), 1 + std::abs(v(rng)));
            x.canonicalize();
            if (x != 0) A.set_component(j, i, AlgebraElement::monomial(ctx, Monomial{}, Scalar::of_rational(ctx, x)));
        }
    return A;
}

}  // namespace

TEST_SUITE("connection") {

TEST_CASE("residuals at the zero connection reduce to d e_i") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const auto tor = torsion_residual(calc, Connection::zero());
    const auto cot = cotorsion_residual(calc, Connection::zero());
    for (int i = 0; i < 4; ++i) {
        CHECK(tor[i] == calc.d1(calc.basis_form(i)));
        CHECK(cot[i] == calc.d1(calc.basis_form(i)));
        CHECK_FALSE(tor[i].is_zero());
    }
}

TEST_CASE("torsion residual is affine in the connection") {
    auto ctx = FieldContext::rational_q(Rational(3, 2));
    Calculus calc(ctx);
    std::mt19937 rng(777);
    for (int trial = 0; trial < 5; ++trial) {
        const Connection A = random_constant_connection(*ctx, rng);
        const Connection B = random_constant_connection(*ctx, rng);
        Connection AB;
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i) AB.set_component(j, i, A.component(j, i) + B.component(j, i));
        const auto rAB = torsion_residual(calc, AB);
        const auto rB = torsion_residual(calc, B);
        const auto rA = torsion_residual(calc, A);
        const auto r0 = torsion_residual(calc, Connection::zero());
        for (int i = 0; i < 4; ++i) CHECK(rAB[i] - rB[i] == rA[i] - r0[i]);
    }
}

TEST_CASE("constant solve closed-form values at q = 2") {
    auto ctx = FieldContext::rational_q(Rational(2));
    Calculus calc(ctx);
    const Connection A = solve_constant(calc);
    auto val = [&](int j, int i) { return A.component(j, i).coefficient(Monomial{}); };
    // alpha = 16/85, beta = 4/17
    CHECK(val(EA, EA) == Scalar::of_rational(*ctx, Rational(4, 85)));    // alpha q^{-2}
    CHECK(val(ED, EA) == Scalar::of_rational(*ctx, Rational(-16, 85)));  // -alpha
    CHECK(val(EB, EB) == Scalar::of_rational(*ctx, Rational(4, 17)));    // beta
    CHECK(val(EC, EC) == Scalar::of_rational(*ctx, Rational(4, 17)));
    CHECK(val(EA, ED) == Scalar::of_rational(*ctx, Rational(-4, 85)));
    CHECK(val(ED, ED) == Scalar::of_rational(*ctx, Rational(16, 85)));
    CHECK(val(EB, EC).is_zero());
}

TEST_CASE("general solve at r = 3") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const auto res = solve_general(calc);
    CHECK(res.joint_nullity == 0);
    CHECK(res.torsion_nullity == 81);
    CHECK(res.particular == Connection::canonical(calc));
}

TEST_CASE("torsion equals cotorsion moduli dimensions") {
    for (int r : {3, 5}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);
        CHECK(torsion_equals_cotorsion_dimension(calc, true) == 6);
    }
    auto q2 = FieldContext::rational_q(Rational(2));
    Calculus calcq(q2);
    CHECK(torsion_equals_cotorsion_dimension(calcq, true) == 6);

    auto r3 = FieldContext::root_of_unity(3);
    Calculus calc3(r3);
    CHECK(torsion_equals_cotorsion_dimension(calc3, false) == 74);
}

TEST_CASE("covariant derivative is tensorial in the curvature input") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const Connection A = Connection::canonical(calc);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> e(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const AlgebraElement f = AlgebraElement::monomial(*ctx, Monomial{e(rng), e(rng), e(rng)});
        for (int i = 0; i < 4; ++i) {
            Form1 fei;
            fei.c[i] = f;
            const Tensor11 lhs = nabla1(calc, A, fei);
            // d f (x) e_i + f nabla e_i
            Tensor11 rhs = nabla1(calc, A, calc.basis_form(i));
            for (int p = 0; p < 4; ++p)
                for (int s = 0; s < 4; ++s) rhs.c[p][s] = f * rhs.c[p][s];
            const Form1 df = calc.d0(f);
            for (int p = 0; p < 4; ++p) rhs.c[p][i] += df.c[p];
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("skew residual of the zero tensor vanishes for any connection") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    std::mt19937 rng(8);
    const Connection A = random_constant_connection(*ctx, rng);
    CHECK(skew_compat_residual(calc, A, Tensor11{}).is_zero());
}

TEST_CASE("nabla on theta (x) theta vanishes") {
    auto ctx = FieldContext::rational_q(Rational(2));
    Calculus calc(ctx);
    Tensor11 tt;
    const auto& th = calc.theta();
    for (int i : {EA, ED})
        for (int j : {EA, ED})
            tt.c[i][j] = AlgebraElement::monomial(*ctx, Monomial{}, th[i] * th[j]);
    CHECK(nabla_on_tensor(calc, Connection::canonical(calc), tt).is_zero());
}

TEST_CASE("regularity residual") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const Connection A = Connection::canonical(calc);
    const auto kernel = calc.ker_tilde_pi_basis();
    REQUIRE(kernel.size() >= 2);

    SUBCASE("rejects arguments outside the kernel") {
        CHECK_THROWS_AS(regularity_residual(calc, A, generator(*ctx, 'c')), std::invalid_argument);
    }
    SUBCASE("linear in f") {
        const Form2 r0 = regularity_residual(calc, A, kernel[0]);
        const Form2 r1 = regularity_residual(calc, A, kernel[1]);
        CHECK(regularity_residual(calc, A, kernel[0] + kernel[1]) == r0 + r1);
    }
    SUBCASE("a witness of non-regularity exists") {
        bool found = false;
        for (const auto& f : kernel)
            if (!regularity_residual(calc, A, f).is_zero()) found = true;
        CHECK(found);
    }
    SUBCASE("the connection with only A_b proportional to e_c is regular") {
        Connection R;
        R.set_component(EC, EB, AlgebraElement::unit(*ctx));  // A_b = e_c
        for (const auto& f : kernel) CHECK(regularity_residual(calc, R, f).is_zero());
    }
}

TEST_CASE("canonical residuals vanish at q = -2 as well") {
    auto ctx = FieldContext::rational_q(Rational(-2));
    Calculus calc(ctx);
    const Connection A = Connection::canonical(calc);
    for (const auto& f : torsion_residual(calc, A)) CHECK(f.is_zero());
    for (const auto& f : cotorsion_residual(calc, A)) CHECK(f.is_zero());
}

}  // TEST_SUITE
