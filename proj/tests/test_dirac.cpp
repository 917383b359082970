#include <doctest.h>

#include <random>

#include "qsl2/dirac.hpp"
#include "qsl2/json_io.hpp"

using namespace qsl2;

TEST_SUITE("dirac") {

TEST_CASE("gamma matrices") {
    auto ctx = FieldContext::root_of_unity(3);
    const Mat2 ga = gamma_matrix(*ctx, EA);
    const Mat2 gb = gamma_matrix(*ctx, EB);
    const Mat2 gd = gamma_matrix(*ctx, ED);
    CHECK(ga.m[0][0] == Scalar::one(*ctx));
    CHECK(gb.m[0][1] == Scalar::one(*ctx));
    CHECK(gb.m[0][0].is_zero());
    // gamma(e_a) + gamma(e_d) = identity
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Scalar want = (i == j) ? Scalar::one(*ctx) : Scalar::zero(*ctx);
            CHECK(ga.m[i][j] + gd.m[i][j] == want);
        }
}

TEST_CASE("operator application matches the block structure") {
    for (int r : {3, 5}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);
        const DiracMatrix D = assemble_dirac(calc, true, true);
        if (r == 5) CHECK_FALSE(D.offset.is_zero());
        std::mt19937 rng(5150);
        std::uniform_int_distribution<int> e(0, r - 1);
        for (int trial = 0; trial < 10; ++trial) {
            Spinor psi{AlgebraElement::monomial(*ctx, Monomial{e(rng), e(rng), e(rng)}),
                       AlgebraElement::monomial(*ctx, Monomial{e(rng), e(rng), e(rng)})};
            const Spinor got = apply_dirac(calc, D, psi);
            const auto p1 = calc.partials(psi.c1);
            const auto p2 = calc.partials(psi.c2);
            Spinor want{p1[EA] + p2[EB] + psi.c1.scaled(D.offset), p1[EC] + p2[ED] + psi.c2.scaled(D.offset)};
            CHECK(got == want);
        }
    }
}

TEST_CASE("unnormalized operator is mu times the normalized one") {
    auto ctx = FieldContext::root_of_unity(5);
    Calculus calc(ctx);
    const DiracMatrix Dn = assemble_dirac(calc, true, false);
    const DiracMatrix Du = assemble_dirac(calc, false, false);
    const Scalar m = mu(*ctx);
    const int n = 2 * basis_dimension(*ctx);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : Dn.mat.row(i)) CHECK(Du.mat.get(i, j) == m * v);
    // d(1) = 0: the unit column of the first component block vanishes
    Spinor unit{AlgebraElement::unit(*ctx), AlgebraElement::zero(*ctx)};
    const Spinor img = apply_dirac(calc, Du, unit);
    CHECK(img.c1.is_zero());
    CHECK(img.c2.is_zero());
}

TEST_CASE("spectrum at r = 3") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const auto spec = dirac_spectrum(calc, true, 1);
    REQUIRE(spec.size() == 3);
    CHECK(spec[0].eigenvalue.is_zero());
    CHECK(spec[0].dim == 14);
    CHECK(spec[1].eigenvalue == Scalar::of_int(*ctx, -1));
    CHECK(spec[1].dim == 12);
    CHECK(spec[2].eigenvalue == Scalar::q_power(*ctx, 2));
    CHECK(spec[2].dim == 12);
    int gen = 0;
    for (const auto& rec : spec) gen += rec.generalized_dim;
    CHECK(gen == 54);
    // 16 non-diagonalizable directions
    CHECK(gen - (14 + 12 + 12) == 16);
}

TEST_CASE("unnormalized eigenvalues are q^m - 1") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const auto spec = dirac_spectrum(calc, false, 1);
    for (int m = 0; m < 3; ++m) {
        CHECK(spec[m].eigenvalue == Scalar::q_power(*ctx, m) - Scalar::one(*ctx));
        CHECK(spec[m].dim >= 1);
    }
}

TEST_CASE("charge conjugation") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const AlgebraElement one = AlgebraElement::unit(*ctx);
    const AlgebraElement zero = AlgebraElement::zero(*ctx);

    // (0, 1) -> (1, 0)
    Spinor v{zero, one};
    Spinor flipped{one, zero};
    CHECK(charge_conjugate(calc, v) == flipped);

    // conjugate of (-b, q a) is (q^{-1} d, -c) = (q^2 d, -c) at r = 3
    Spinor mode{-generator(*ctx, 'b'), generator(*ctx, 'a').scaled(Scalar::q_power(*ctx, 1))};
    Spinor conj = charge_conjugate(calc, mode);
    CHECK(conj.c1 == generator(*ctx, 'd').scaled(Scalar::q_power(*ctx, 2)));
    CHECK(conj.c2 == -generator(*ctx, 'c'));

    // involutivity on random spinors
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Spinor w{AlgebraElement::monomial(*ctx, Monomial{e(rng), e(rng), e(rng)}, Scalar::q_power(*ctx, e(rng))),
                 AlgebraElement::monomial(*ctx, Monomial{e(rng), e(rng), e(rng)})};
        CHECK(charge_conjugate(calc, charge_conjugate(calc, w)) == w);
    }

    // the conjugation respects the defining relations (algebra map after q-conjugation)
    const AlgebraElement b = generator(*ctx, 'b');
    const AlgebraElement d = generator(*ctx, 'd');
    CHECK(charge_conjugate(calc, b * d) == charge_conjugate(calc, b) * charge_conjugate(calc, d));
}

TEST_CASE("block-decomposed nullities agree with the whole-matrix ones") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const DiracMatrix D = assemble_dirac(calc, true, false);
    const auto spec = dirac_spectrum(calc, true, 1);
    const int n = 2 * basis_dimension(*ctx);
    for (const auto& rec : spec) {
        ScalarMatrix M(*ctx, n, n);
        for (int i = 0; i < n; ++i)
            for (const auto& [j, v] : D.mat.row(i)) M.set(i, j, v);
        for (int i = 0; i < n; ++i) M.add(i, i, -rec.eigenvalue);
        CHECK(nullity(M) == rec.dim);
        const auto dims = power_kernel_dims(M, 3);
        CHECK(dims.back() == rec.generalized_dim);
    }
}

TEST_CASE("offset report") {
    auto r3 = FieldContext::root_of_unity(3);
    CHECK(offset_report(*r3).exact.is_zero());
    auto r9 = FieldContext::root_of_unity(9);
    const auto rep = offset_report(*r9);
    CHECK(std::abs(rep.embedded.real() - 2.53) < 0.01);
    CHECK(std::abs(rep.sine_ratio - rep.embedded.real()) < 1e-9);
}

TEST_CASE("spectrum does not depend on the parallelism degree") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const auto serial = dirac_spectrum(calc, true, 1);
    const auto parallel = dirac_spectrum(calc, true, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t m = 0; m < serial.size(); ++m) {
        CHECK(serial[m].eigenvalue == parallel[m].eigenvalue);
        CHECK(serial[m].dim == parallel[m].dim);
        CHECK(serial[m].generalized_dim == parallel[m].generalized_dim);
    }
}

TEST_CASE("json round trip") {
    auto ctx = FieldContext::root_of_unity(5);
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> e(0, 4), v(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar s = Scalar::zero(*ctx);
        for (int i = 0; i < 4; ++i) {
            Rational x(v(rng), 1 + std::abs(v(rng)));
            x.canonicalize();
            s += Scalar::of_rational(*ctx, x) * Scalar::q_power(*ctx, i);
        }
        CHECK(scalar_from_json(*ctx, scalar_to_json(s)) == s);

        AlgebraElement f = AlgebraElement::monomial(*ctx, Monomial{e(rng), e(rng), e(rng)}, s);
        f.add_term(Monomial{e(rng), e(rng), e(rng)}, Scalar::q_power(*ctx, v(rng)));
        CHECK(element_from_json(*ctx, element_to_json(f)) == f);
    }
    auto q2 = FieldContext::rational_q(Rational(2));
    const Scalar s = Scalar::of_rational(*q2, Rational(-7, 3));
    CHECK(scalar_from_json(*q2, scalar_to_json(s)) == s);
}

}  // TEST_SUITE
