#include "qsl2/reference.hpp"

namespace qsl2 {

Form1 reference_monomial_differential(const Calculus& calc, Monomial mon) {
    const FieldContext& ctx = calc.context();
    const int r = ctx.order();
    const int k = mon.k, n = mon.n, m = mon.m;
    const Scalar muv = mu(ctx);
    const Scalar mui = muv.inverse();
    auto qp = [&](long e) { return Scalar::q_power(ctx, e); };
    auto qq = [&](long e) { return q2_int(ctx, e); };
    auto wrap = [&](int mm) { return ((mm % r) + r) % r; };

    Form1 out;
    auto put = [&](int form, int kk, int nn, int mm, const Scalar& coeff) {
        if (coeff.is_zero() || kk < 0 || nn < 0 || kk >= r || nn >= r) return;
        out.c[static_cast<size_t>(form)].add_term(Monomial{kk, nn, wrap(mm)}, coeff);
    };

    put(ED, k, n, m, mui * (qp(m + n - k) - Scalar::one(ctx)));
    put(EB, k - 1, n, m + 1, qp(n - k + 1) * qq(k));
    put(EC, k + 1, n, m - 1, qp(-k - n) * qq(m + n));
    put(EC, k, n - 1, m - 1, qp(-k - n) * qp(1) * qq(n));
    put(EA, k, n, m, muv * qp(-k - m - n + 2) * qq(k + 1) * qq(m + n));
    put(EA, k - 1, n - 1, m, muv * qp(-k - m - n + 2) * qp(1) * qq(n) * qq(k));
    put(EA, k, n, m, mui * (qp(-m - n + k) - Scalar::one(ctx)));
    return out;
}

std::array<Scalar, 4> reference_tilde_pi(const FieldContext& ctx, char gen) {
    const Scalar q = Scalar::q_power(ctx, 1);
    const Scalar q2 = Scalar::q_power(ctx, 2);
    const Scalar one = Scalar::one(ctx);
    const Scalar two_q = one + q;  // geometric [2]_q
    std::array<Scalar, 4> out{Scalar::zero(ctx), Scalar::zero(ctx), Scalar::zero(ctx), Scalar::zero(ctx)};
    switch (gen) {
        case 'a':
            out[EA] = q / two_q * q;
            out[ED] = -(q / two_q);
            break;
        case 'c':
            out[EB] = one;
            break;
        case 'b':
            out[EC] = one;
            break;
        case 'd':
            out[ED] = q2 / two_q;
            out[EA] = (q2 - Scalar::q_power(ctx, -1) - one) / two_q;
            break;
        default:
            throw std::invalid_argument("unknown generator");
    }
    return out;
}

std::array<std::array<Scalar, 4>, 4> reference_metric_components(const FieldContext& ctx) {
    const Scalar q = Scalar::q_power(ctx, 1);
    const Scalar q2 = Scalar::q_power(ctx, 2);
    const Scalar one = Scalar::one(ctx);
    const Scalar w = (one + q).inverse();
    const Scalar lambda = q * (one - q - q2) * w;

    std::array<std::array<Scalar, 4>, 4> comp;
    for (auto& row : comp) row.fill(Scalar::zero(ctx));
    comp[EC][EB] += one;
    comp[EB][EC] += q2;
    comp[EA][EA] += w;
    comp[EA][ED] += -(q * w);
    comp[ED][EA] += -(q * w);
    comp[ED][ED] += q * (q2 + q - one) * w;
    // + lambda theta (x) theta
    const std::array<int, 2> th = {EA, ED};
    for (int i : th)
        for (int j : th) comp[static_cast<size_t>(i)][static_cast<size_t>(j)] += lambda;
    return comp;
}

Connection reference_torsion_family(const Calculus& calc, const Scalar& x, const Scalar& y,
                                    const Scalar& z) {
    // canonical solution plus the displayed deformation
    //   tau_a = q^2 x e_z + z e_c + y e_b
    //   tau_d = x (q^4 - q^2 + q^{-2}) e_z + q^{-6} z e_c + (q^4 - 1 + q^{-2}) y e_b
    //   tau_b = -mu z e_z - q^{-2} x (1 - q^4) e_b
    //   tau_c = q^4 mu y e_z + x (1 - q^4) e_c
    const FieldContext& ctx = calc.context();
    auto qp = [&](long e) { return Scalar::q_power(ctx, e); };
    const Scalar one = Scalar::one(ctx);
    const Scalar m = mu(ctx);

    std::array<std::array<Scalar, 4>, 4> tau;  // tau[j][i] = coefficient of e_j in tau_i
    for (auto& row : tau) row.fill(Scalar::zero(ctx));
    auto add_ez = [&](int i, const Scalar& s) {
        tau[EA][static_cast<size_t>(i)] += s * qp(-2);
        tau[ED][static_cast<size_t>(i)] += -s;
    };
    add_ez(EA, qp(2) * x);
    tau[EC][EA] += z;
    tau[EB][EA] += y;
    add_ez(ED, x * (qp(4) - qp(2) + qp(-2)));
    tau[EC][ED] += qp(-6) * z;
    tau[EB][ED] += (qp(4) - one + qp(-2)) * y;
    add_ez(EB, -(m * z));
    tau[EB][EB] += -(qp(-2) * x * (one - qp(4)));
    add_ez(EC, qp(4) * m * y);
    tau[EC][EC] += x * (one - qp(4));

    Connection A = Connection::canonical(calc);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i)
            if (!tau[static_cast<size_t>(j)][static_cast<size_t>(i)].is_zero()) {
                AlgebraElement cur = A.component(j, i);
                cur += AlgebraElement::monomial(ctx, Monomial{}, tau[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                A.set_component(j, i, cur);
            }
    return A;
}

namespace {

// helper: add s * e_p (x) e_s patterns written against e_z and theta
void add_tensor(Tensor11& t, const FieldContext& ctx, const std::array<Scalar, 4>& left,
                const std::array<Scalar, 4>& right, const Scalar& scale) {
    for (int p = 0; p < 4; ++p)
        for (int s = 0; s < 4; ++s) {
            const Scalar v = scale * left[static_cast<size_t>(p)] * right[static_cast<size_t>(s)];
            if (!v.is_zero()) t.c[static_cast<size_t>(p)][static_cast<size_t>(s)] += AlgebraElement::monomial(ctx, Monomial{}, v);
        }
}

std::array<Scalar, 4> unit_dir(const FieldContext& ctx, int i) {
    std::array<Scalar, 4> e{Scalar::zero(ctx), Scalar::zero(ctx), Scalar::zero(ctx), Scalar::zero(ctx)};
    e[static_cast<size_t>(i)] = Scalar::one(ctx);
    return e;
}

}  // namespace

Tensor11 reference_nabla_basis(const Calculus& calc, int i) {
    const FieldContext& ctx = calc.context();
    const Scalar one = Scalar::one(ctx);
    const Scalar beta = (Scalar::q_power(ctx, 2) + Scalar::q_power(ctx, -2)).inverse();
    const Scalar four = q2_int(ctx, 4);
    const auto ez = calc.e_z();

    Tensor11 out;
    switch (i) {
        case EA:
        case ED: {
            // nabla e_a = -nabla e_d = beta (e_b (x) e_c - e_c (x) e_b) - mu q^6/[4]_{q^2} e_z (x) e_z
            const Scalar sign = (i == EA) ? one : -one;
            add_tensor(out, ctx, unit_dir(ctx, EB), unit_dir(ctx, EC), sign * beta);
            add_tensor(out, ctx, unit_dir(ctx, EC), unit_dir(ctx, EB), -(sign * beta));
            add_tensor(out, ctx, ez, ez, -(sign * mu(ctx) * Scalar::q_power(ctx, 6) / four));
            break;
        }
        case EB:
            // q^4(1+q^{-2})/[4]_{q^2} e_z (x) e_b - q^2 beta e_b (x) e_z
            add_tensor(out, ctx, ez, unit_dir(ctx, EB),
                       Scalar::q_power(ctx, 4) * (one + Scalar::q_power(ctx, -2)) / four);
            add_tensor(out, ctx, unit_dir(ctx, EB), ez, -(Scalar::q_power(ctx, 2) * beta));
            break;
        case EC:
            // -q^4(1+q^2)/[4]_{q^2} e_z (x) e_c + beta e_c (x) e_z
            add_tensor(out, ctx, ez, unit_dir(ctx, EC),
                       -(Scalar::q_power(ctx, 4) * (one + Scalar::q_power(ctx, 2)) / four));
            add_tensor(out, ctx, unit_dir(ctx, EC), ez, beta);
            break;
        default:
            throw std::invalid_argument("bad basis index");
    }
    return out;
}

namespace {

// e_b ^ e_z, e_c ^ e_z, e_c ^ e_b in the ordered Lambda^2 basis
std::array<Scalar, 6> two_form_bz(const FieldContext& ctx) {
    std::array<Scalar, 6> v;
    v.fill(Scalar::zero(ctx));
    v[EAB] = -Scalar::q_power(ctx, -2);
    v[EBD] = -Scalar::one(ctx);
    return v;
}
std::array<Scalar, 6> two_form_cz(const FieldContext& ctx) {
    std::array<Scalar, 6> v;
    v.fill(Scalar::zero(ctx));
    v[EAC] = -Scalar::q_power(ctx, -2);
    v[ECD] = -Scalar::one(ctx);
    return v;
}
std::array<Scalar, 6> two_form_cb(const FieldContext& ctx) {
    std::array<Scalar, 6> v;
    v.fill(Scalar::zero(ctx));
    v[EBC] = -Scalar::one(ctx);
    return v;
}

void add_21(Tensor21& t, const FieldContext& ctx, const std::array<Scalar, 6>& two,
            int right, const Scalar& scale) {
    for (int I = 0; I < 6; ++I) {
        const Scalar v = scale * two[static_cast<size_t>(I)];
        if (!v.is_zero()) t.c[static_cast<size_t>(I)][static_cast<size_t>(right)] += AlgebraElement::monomial(ctx, Monomial{}, v);
    }
}

void add_21_dir(Tensor21& t, const FieldContext& ctx, const std::array<Scalar, 6>& two,
                const std::array<Scalar, 4>& right, const Scalar& scale) {
    for (int s = 0; s < 4; ++s)
        if (!right[static_cast<size_t>(s)].is_zero()) add_21(t, ctx, two, s, scale * right[static_cast<size_t>(s)]);
}

}  // namespace

Tensor21 reference_riemann_basis(const Calculus& calc, int i) {
    const FieldContext& ctx = calc.context();
    const Scalar one = Scalar::one(ctx);
    const Scalar q2 = Scalar::q_power(ctx, 2);
    const Scalar qm2 = Scalar::q_power(ctx, -2);
    const Scalar pre = Scalar::q_power(ctx, 6) * ((one + Scalar::q_power(ctx, 4)) * (one + Scalar::q_power(ctx, 4))).inverse();

    Tensor21 out;
    switch (i) {
        case EA:
        case ED: {
            const Scalar sign = (i == EA) ? one : -one;
            add_21(out, ctx, two_form_cz(ctx), EB, sign * pre);
            add_21(out, ctx, two_form_bz(ctx), EC, sign * pre * qm2);
            add_21_dir(out, ctx, two_form_cb(ctx), calc.e_z(), -(sign * pre * mu(ctx)));
            break;
        }
        case EB:
            add_21_dir(out, ctx, two_form_bz(ctx), calc.e_z(), -pre);
            add_21(out, ctx, two_form_cb(ctx), EB, pre * qm2 * (one + qm2));
            break;
        case EC:
            add_21_dir(out, ctx, two_form_cz(ctx), calc.e_z(), -pre);
            add_21(out, ctx, two_form_cb(ctx), EC, -(pre * (one + qm2)));
            break;
        default:
            throw std::invalid_argument("bad basis index");
    }
    return out;
}

Tensor11 reference_lift_bz(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const Scalar w = q2_int(ctx, 2).inverse();
    const Scalar q2 = Scalar::q_power(ctx, 2);
    const Scalar m = mu(ctx);
    Tensor11 out;
    add_tensor(out, ctx, unit_dir(ctx, EA), unit_dir(ctx, EB), w * q2 * (m - Scalar::q_power(ctx, -2)));
    add_tensor(out, ctx, unit_dir(ctx, EB), unit_dir(ctx, EA), w * q2);
    add_tensor(out, ctx, unit_dir(ctx, ED), unit_dir(ctx, EB), w * q2);
    add_tensor(out, ctx, unit_dir(ctx, EB), unit_dir(ctx, ED), -(w * q2));
    return out;
}

Tensor11 reference_lift_cz(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const Scalar w = q2_int(ctx, 2).inverse();
    const Scalar m = mu(ctx);
    Tensor11 out;
    add_tensor(out, ctx, unit_dir(ctx, EC), unit_dir(ctx, EA), w * (Scalar::q_power(ctx, -2) - m));
    add_tensor(out, ctx, unit_dir(ctx, EA), unit_dir(ctx, EC), -w);
    add_tensor(out, ctx, unit_dir(ctx, ED), unit_dir(ctx, EC), w);
    add_tensor(out, ctx, unit_dir(ctx, EC), unit_dir(ctx, ED), -w);
    return out;
}

Tensor11 reference_lift_cb(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const Scalar w = q2_int(ctx, 2).inverse();
    const Scalar q2 = Scalar::q_power(ctx, 2);
    const Scalar m = mu(ctx);
    const Scalar two = Scalar::of_int(ctx, 2);
    const Scalar pre = w * w * q2 * two;
    const Scalar half = Scalar::of_rational(ctx, Rational(1, 2));
    Tensor11 out;
    add_tensor(out, ctx, unit_dir(ctx, EC), unit_dir(ctx, EB), pre);
    add_tensor(out, ctx, unit_dir(ctx, EB), unit_dir(ctx, EC), -pre);
    add_tensor(out, ctx, unit_dir(ctx, EA), unit_dir(ctx, ED), -(pre * q2 * m * half));
    add_tensor(out, ctx, unit_dir(ctx, ED), unit_dir(ctx, EA), -(pre * q2 * m * half));
    add_tensor(out, ctx, unit_dir(ctx, EA), unit_dir(ctx, EA), pre * m);
    return out;
}

Tensor11 reference_ricci(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    // -(2 q^2/[4]_{q^2}) (eta + q^4/(1+q^2) theta (x) theta)
    const Scalar coef = -(Scalar::of_int(ctx, 2) * Scalar::q_power(ctx, 2) / q2_int(ctx, 4));
    const Scalar shift = Scalar::q_power(ctx, 4) / q2_int(ctx, 2);
    const Scalar s = Scalar::q_power(ctx, 4) / q2_int(ctx, 2);
    const auto& ez = calc.e_z();
    const auto& th = calc.theta();

    Tensor11 out;
    add_tensor(out, ctx, unit_dir(ctx, EC), unit_dir(ctx, EB), coef);
    add_tensor(out, ctx, unit_dir(ctx, EB), unit_dir(ctx, EC), coef * Scalar::q_power(ctx, 2));
    add_tensor(out, ctx, ez, ez, coef * s);
    add_tensor(out, ctx, th, th, coef * (shift - s));
    return out;
}

}  // namespace qsl2
