#include <doctest.h>

#include <random>

#include "qsl2/calculus.hpp"
#include "qsl2/linalg.hpp"

using namespace qsl2;

namespace {

Monomial random_monomial(int r, std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, r - 1);
    return Monomial{e(rng), e(rng), e(rng)};
}

// omega . f with coefficients pushed back to the left
Form1 right_mul(const Calculus& calc, const Form1& omega, const AlgebraElement& f) {
    Form1 out;
    for (int i = 0; i < 4; ++i) {
        if (omega.c[i].is_zero()) continue;
        Form1 pushed = calc.push_left(i, f);
        out = out + pushed.left_mul(omega.c[i]);
    }
    return out;
}

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("push_left on generators matches the bimodule relations") {
    for (int r : {3, 5, 7}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);
        const AlgebraElement a = generator(*ctx, 'a');
        const AlgebraElement b = generator(*ctx, 'b');
        const AlgebraElement c = generator(*ctx, 'c');
        const AlgebraElement d = generator(*ctx, 'd');
        const Scalar q = Scalar::q_power(*ctx, 1);
        const Scalar qi = Scalar::q_power(*ctx, -1);
        const Scalar m = mu(*ctx);

        auto form = [&](const AlgebraElement& fa, const AlgebraElement& fb, const AlgebraElement& fc,
                        const AlgebraElement& fd) {
            Form1 w;
            w.c[EA] = fa;
            w.c[EB] = fb;
            w.c[EC] = fc;
            w.c[ED] = fd;
            return w;
        };
        const AlgebraElement zero = AlgebraElement::zero(*ctx);

        // e_a x = q^{+-1} x e_a for x = a,b,c,d
        CHECK(calc.push_left(EA, a) == form(a.scaled(q), zero, zero, zero));
        CHECK(calc.push_left(EA, b) == form(b.scaled(qi), zero, zero, zero));
        CHECK(calc.push_left(EA, c) == form(c.scaled(q), zero, zero, zero));
        CHECK(calc.push_left(EA, d) == form(d.scaled(qi), zero, zero, zero));

        // [e_c, b] = [e_c, d] = [e_b, a] = [e_b, c] = 0
        CHECK(calc.push_left(EC, b) == form(zero, zero, b, zero));
        CHECK(calc.push_left(EC, d) == form(zero, zero, d, zero));
        CHECK(calc.push_left(EB, a) == form(zero, a, zero, zero));
        CHECK(calc.push_left(EB, c) == form(zero, c, zero, zero));

        // [e_c, a] = q mu b e_a ; [e_c, c] = q mu d e_a
        CHECK(calc.push_left(EC, a) == form(b.scaled(q * m), zero, a, zero));
        CHECK(calc.push_left(EC, c) == form(d.scaled(q * m), zero, c, zero));
        // [e_b, b] = q mu a e_a ; [e_b, d] = q mu c e_a
        CHECK(calc.push_left(EB, b) == form(a.scaled(q * m), b, zero, zero));
        CHECK(calc.push_left(EB, d) == form(c.scaled(q * m), d, zero, zero));

        // [e_d, a]_{q^{-1}} = mu b e_b ; [e_d, c]_{q^{-1}} = mu d e_b
        CHECK(calc.push_left(ED, a) == form(zero, b.scaled(m), zero, a.scaled(qi)));
        CHECK(calc.push_left(ED, c) == form(zero, d.scaled(m), zero, c.scaled(qi)));
        // [e_d, b]_q = mu a e_c + q mu^2 b e_a ; [e_d, d]_q = mu c e_c + q mu^2 d e_a
        CHECK(calc.push_left(ED, b) == form(b.scaled(q * m * m), zero, a.scaled(m), b.scaled(q)));
        CHECK(calc.push_left(ED, d) == form(d.scaled(q * m * m), zero, c.scaled(m), d.scaled(q)));
    }
}

TEST_CASE("push_left spec examples") {
    auto ctx = FieldContext::root_of_unity(5);
    Calculus calc(ctx);
    const AlgebraElement c = generator(*ctx, 'c');
    Form1 pc = calc.push_left(EA, c);
    CHECK(pc.c[EA] == c.scaled(Scalar::q_power(*ctx, 1)));
    CHECK(pc.c[EB].is_zero());
}

TEST_CASE("bimodule consistency: push through a product composes") {
    std::mt19937 rng(31337);
    for (int r : {3, 5}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);
        for (int trial = 0; trial < 40; ++trial) {
            auto f = AlgebraElement::monomial(*ctx, random_monomial(r, rng));
            auto g = AlgebraElement::monomial(*ctx, random_monomial(r, rng));
            for (int i = 0; i < 4; ++i) {
                Form1 direct = calc.push_left(i, f * g);
                Form1 staged;
                Form1 first = calc.push_left(i, f);
                staged = right_mul(calc, first, g);
                CHECK(direct == staged);
            }
        }
    }
}

TEST_CASE("wedge relations") {
    for (int r : {3, 5}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);
        const Scalar m = mu(*ctx);

        // e_a ^ e_a = 0
        CHECK(calc.wedge11(calc.basis_form(EA), calc.basis_form(EA)).is_zero());
        // e_d ^ e_d = mu e_c ^ e_b = -mu e_bc
        Form2 dd = calc.wedge11(calc.basis_form(ED), calc.basis_form(ED));
        CHECK(dd.c[EBC] == AlgebraElement::monomial(*ctx, Monomial{}, -m));
        for (int t : {EAB, EAC, EAD, EBD, ECD}) CHECK(dd.c[t].is_zero());

        // e_z ^ e_z = (1 - q^{-4}) e_c ^ e_b = -(1 - q^{-4}) e_bc
        Form1 ez = calc.constant_form(calc.e_z());
        Form2 zz = calc.wedge11(ez, ez);
        Scalar want = -(Scalar::one(*ctx) - Scalar::q_power(*ctx, -4));
        CHECK(zz.c[EBC] == AlgebraElement::monomial(*ctx, Monomial{}, want));
        for (int t : {EAB, EAC, EAD, EBD, ECD}) CHECK(zz.c[t].is_zero());

        // eq. (wedgez): e_z ^ e_c + q^2 e_c ^ e_z = 0 and e_b ^ e_z + q^2 e_z ^ e_b = 0
        Form1 eb = calc.basis_form(EB), ec = calc.basis_form(EC);
        const Scalar q2 = Scalar::q_power(*ctx, 2);
        CHECK((calc.wedge11(ez, ec) + calc.wedge11(ec, ez).scaled(q2)).is_zero());
        CHECK((calc.wedge11(eb, ez) + calc.wedge11(ez, eb).scaled(q2)).is_zero());

        // the 16 basis wedges span exactly 6 dimensions
        ScalarMatrix span(*ctx, 16, 6);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const auto& w = calc.wedge_basis(i, j);
                for (int t = 0; t < 6; ++t) span.set(i * 4 + j, t, w[t]);
            }
        CHECK(rank(span) == 6);
    }
}

TEST_CASE("exterior derivative on functions") {
    auto ctx = FieldContext::root_of_unity(5);
    Calculus calc(ctx);
    const AlgebraElement c = generator(*ctx, 'c');
    const AlgebraElement d = generator(*ctx, 'd');
    const Scalar mi = mu(*ctx).inverse();

    CHECK(calc.d0(AlgebraElement::unit(*ctx)).is_zero());

    // d c = mu^{-1}(q^{-1} - 1) c e_d + d e_b + mu^{-1}(q - 1) c e_a
    Form1 dc = calc.d0(c);
    CHECK(dc.c[EA] == c.scaled(mi * (Scalar::q_power(*ctx, 1) - Scalar::one(*ctx))));
    CHECK(dc.c[EB] == d);
    CHECK(dc.c[EC].is_zero());
    CHECK(dc.c[ED] == c.scaled(mi * (Scalar::q_power(*ctx, -1) - Scalar::one(*ctx))));

    // partial^b(c) = d
    auto parts = calc.partials(c);
    CHECK(parts[EB] == d);

    // Leibniz on random pairs
    std::mt19937 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = AlgebraElement::monomial(*ctx, random_monomial(5, rng));
        auto g = AlgebraElement::monomial(*ctx, random_monomial(5, rng));
        Form1 lhs = calc.d0(f * g);
        Form1 rhs = right_mul(calc, calc.d0(f), g) + calc.d0(g).left_mul(f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exterior derivative on forms") {
    for (int r : {3, 5}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);

        // d e_z = -(q^{-2} + 1) e_c ^ e_b = (q^{-2} + 1) e_bc
        Form2 dz = calc.d1(calc.constant_form(calc.e_z()));
        Scalar want = Scalar::q_power(*ctx, -2) + Scalar::one(*ctx);
        CHECK(dz.c[EBC] == AlgebraElement::monomial(*ctx, Monomial{}, want));
        for (int t : {EAB, EAC, EAD, EBD, ECD}) CHECK(dz.c[t].is_zero());

        // d theta = 0
        CHECK(calc.d1(calc.constant_form(calc.theta())).is_zero());

        // d^2 = 0 on every basis monomial
        const int dim = basis_dimension(*ctx);
        for (int idx = 0; idx < dim; ++idx) {
            auto f = AlgebraElement::monomial(*ctx, monomial_at(*ctx, idx));
            CHECK(calc.d1(calc.d0(f)).is_zero());
        }
    }
}

TEST_CASE("d on 1-forms is the graded bracket with theta") {
    // d omega = mu^{-1} (theta ^ omega + omega ^ theta), the same bracket that
    // defines d on functions; exercises the wedge tables instead of the d table
    std::mt19937 rng(2718);
    for (int r : {3, 5}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);
        const Form1 theta = calc.constant_form(calc.theta());
        const Scalar mi = mu(*ctx).inverse();
        for (int i = 0; i < 4; ++i) {
            Form1 w = calc.basis_form(i);
            CHECK(calc.d1(w) == (calc.wedge11(theta, w) + calc.wedge11(w, theta)).scaled(mi));
        }
        std::uniform_int_distribution<int> e(0, r - 1);
        for (int trial = 0; trial < 20; ++trial) {
            Form1 w;
            w.c[static_cast<size_t>(trial % 4)] = AlgebraElement::monomial(*ctx, Monomial{e(rng), e(rng), e(rng)});
            CHECK(calc.d1(w) == (calc.wedge11(theta, w) + calc.wedge11(w, theta)).scaled(mi));
        }
    }
}

TEST_CASE("tilde pi on generators") {
    for (int r : {3, 5, 7}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);
        const Scalar q = Scalar::q_power(*ctx, 1);
        const Scalar q2 = Scalar::q_power(*ctx, 2);
        const Scalar one = Scalar::one(*ctx);
        const Scalar geo2 = one + q;  // (1 - q^2)/(1 - q)

        auto pa = calc.tilde_pi(generator(*ctx, 'a'));
        // (q/(1+q))(q e_a - e_d)
        CHECK(pa[EA] == q * q / geo2);
        CHECK(pa[EB].is_zero());
        CHECK(pa[EC].is_zero());
        CHECK(pa[ED] == -(q / geo2));

        auto pc = calc.tilde_pi(generator(*ctx, 'c'));
        CHECK(pc[EB] == one);
        CHECK(pc[EA].is_zero());
        CHECK(pc[EC].is_zero());
        CHECK(pc[ED].is_zero());

        auto pb = calc.tilde_pi(generator(*ctx, 'b'));
        CHECK(pb[EC] == one);
        CHECK(pb[EA].is_zero());

        auto pd = calc.tilde_pi(generator(*ctx, 'd'));
        // (1/(1+q))(q^2 e_d + (q^2 - q^{-1} - 1) e_a)
        CHECK(pd[ED] == q2 / geo2);
        CHECK(pd[EA] == (q2 - Scalar::q_power(*ctx, -1) - one) / geo2);
        CHECK(pd[EB].is_zero());
        CHECK(pd[EC].is_zero());

        CHECK(calc.tilde_pi_form(AlgebraElement::unit(*ctx)).is_zero());
    }
}

TEST_CASE("kernel of tilde pi") {
    for (int r : {3, 5}) {
        auto ctx = FieldContext::root_of_unity(r);
        Calculus calc(ctx);
        auto basis = calc.ker_tilde_pi_basis();
        // pi~ is onto the invariant 1-forms, so the kernel has codimension 4
        CHECK(static_cast<int>(basis.size()) == basis_dimension(*ctx) - 4);
        for (const auto& f : basis) CHECK(calc.tilde_pi_form(f).is_zero());

        // c^2 b is in the kernel
        auto c2b = AlgebraElement::monomial(*ctx, Monomial{2, 1, 0});
        CHECK(calc.tilde_pi_form(c2b).is_zero());
    }
}

TEST_CASE("ad structure constants") {
    auto ctx = FieldContext::root_of_unity(5);
    Calculus calc(ctx);
    const auto& ad = calc.ad();
    const Scalar one = Scalar::one(*ctx);

    // ad_R(e_a) = e_c(x)e_b - e_b(x)e_c + mu(e_a - q^2 e_d)(x)e_a
    CHECK(ad.R[EC][EB][EA] == one);
    CHECK(ad.R[EB][EC][EA] == -one);
    CHECK(ad.R[EA][EA][EA] == mu(*ctx));
    CHECK(ad.R[ED][EA][EA] == -(Scalar::q_power(*ctx, 2) * mu(*ctx)));

    // ad_L(e_a) + ad_L(e_d) = 0 and ad_R(e_a) + ad_R(e_d) = 0 entrywise
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            CHECK((ad.L[j][k][EA] + ad.L[j][k][ED]).is_zero());
            CHECK((ad.R[j][k][EA] + ad.R[j][k][ED]).is_zero());
        }
}

TEST_CASE("tensor normalization") {
    auto ctx = FieldContext::root_of_unity(3);
    Calculus calc(ctx);
    const AlgebraElement f = generator(*ctx, 'b');
    const AlgebraElement one = AlgebraElement::unit(*ctx);

    // (f) e_a (x) (1) e_b is already normal
    Tensor11 t = calc.tensor_normalize({{f, EA, one, EB}});
    CHECK(t.c[EA][EB] == f);

    // (1) e_a (x) (f) e_b spreads through the pushed coefficients
    Tensor11 s = calc.tensor_normalize({{one, EA, f, EB}});
    Form1 pushed = calc.push_left(EA, f);
    for (int p = 0; p < 4; ++p) CHECK(s.c[p][EB] == pushed.c[p]);

    // idempotence: renormalizing the left-normal output is the identity
    std::vector<std::tuple<AlgebraElement, int, AlgebraElement, int>> again;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!s.c[i][j].is_zero()) again.push_back({s.c[i][j], i, one, j});
    CHECK(calc.tensor_normalize(again) == s);
}

TEST_CASE("rational mode calculus stays scalar") {
    auto ctx = FieldContext::rational_q(Rational(2));
    Calculus calc(ctx);
    const AlgebraElement s = AlgebraElement::monomial(*ctx, Monomial{}, Scalar::of_rational(*ctx, Rational(5, 3)));
    Form1 p = calc.push_left(ED, s);
    CHECK(p.c[ED] == s);
    CHECK(calc.d0(s).is_zero());
    Form1 ez = calc.constant_form(calc.e_z());
    CHECK_FALSE(calc.wedge11(ez, ez).is_zero());
}

}  // TEST_SUITE
