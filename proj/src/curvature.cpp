#include "qsl2/curvature.hpp"
#include <optional>

#include <map>

#include "qsl2/linalg.hpp"

namespace qsl2 {

namespace {

std::optional<std::array<std::array<Scalar, 4>, 4>> invert4(
    const FieldContext& ctx, const std::array<std::array<Scalar, 4>, 4>& m) {
    ScalarMatrix M(ctx, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) M.set(i, j, m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    std::array<std::array<Scalar, 4>, 4> inv;
    for (int col = 0; col < 4; ++col) {
        std::vector<Scalar> e(4, Scalar::zero(ctx));
        e[static_cast<size_t>(col)] = Scalar::one(ctx);
        auto sol = solve(M, e);
        if (!sol.consistent || !sol.kernel.empty()) return std::nullopt;
        for (int rowi = 0; rowi < 4; ++rowi) {
            inv[static_cast<size_t>(rowi)][static_cast<size_t>(col)] = sol.particular[static_cast<size_t>(rowi)];
            if (!inv[static_cast<size_t>(rowi)][static_cast<size_t>(col)].context())
                inv[static_cast<size_t>(rowi)][static_cast<size_t>(col)] = Scalar::zero(ctx);
        }
    }
    return inv;
}

Metric make_metric(const Calculus& calc, const Scalar& extra_shift) {
    const FieldContext& ctx = calc.context();
    const Scalar q2 = Scalar::q_power(ctx, 2);
    const Scalar s = Scalar::q_power(ctx, 4) / q2_int(ctx, 2);  // q^4 / (1 + q^2)
    const auto& ez = calc.e_z();
    const auto& th = calc.theta();

    Metric g;
    for (auto& row : g.comp) row.fill(Scalar::zero(ctx));
    g.comp[EC][EB] += Scalar::one(ctx);
    g.comp[EB][EC] += q2;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            g.comp[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                s * (ez[static_cast<size_t>(i)] * ez[static_cast<size_t>(j)] -
                     th[static_cast<size_t>(i)] * th[static_cast<size_t>(j)]);
            g.comp[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                extra_shift * th[static_cast<size_t>(i)] * th[static_cast<size_t>(j)];
        }

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!g.comp[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
                g.tensor.c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    AlgebraElement::monomial(ctx, Monomial{}, g.comp[static_cast<size_t>(i)][static_cast<size_t>(j)]);

    if (auto inv = invert4(ctx, g.comp)) {
        g.invertible = true;
        g.inv = *inv;
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                Scalar acc = Scalar::zero(ctx);
                for (int i = 0; i < 4; ++i)
                    acc += g.comp[static_cast<size_t>(i)][static_cast<size_t>(j)] * g.inv[static_cast<size_t>(i)][static_cast<size_t>(k)];
                g.qtrace[static_cast<size_t>(j)][static_cast<size_t>(k)] = acc;
            }
    }
    return g;
}

}  // namespace

Metric metric(const Calculus& calc) { return make_metric(calc, Scalar::zero(calc.context())); }

Metric metric_shifted(const Calculus& calc, const Scalar& extra) { return make_metric(calc, extra); }

Form2 wedge_apply(const Calculus& calc, const Tensor11& t) {
    Form2 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const AlgebraElement& f = t.c[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (f.is_zero()) continue;
            const auto& w = calc.wedge_basis(i, j);
            for (int s = 0; s < 6; ++s)
                if (!w[static_cast<size_t>(s)].is_zero()) out.c[static_cast<size_t>(s)] += f.scaled(w[static_cast<size_t>(s)]);
        }
    return out;
}

Tensor21 riemann(const Calculus& calc, const Connection& A, const Form1& omega) {
    const Tensor11 T = nabla1(calc, A, omega);
    std::array<Tensor11, 4> nablaE;
    for (int l = 0; l < 4; ++l) nablaE[static_cast<size_t>(l)] = nabla1(calc, A, calc.basis_form(l));

    Tensor21 out;
    for (int l = 0; l < 4; ++l) {
        // d (x) id on the first leg
        Form1 first;
        for (int k = 0; k < 4; ++k) first.c[static_cast<size_t>(k)] = T.c[static_cast<size_t>(k)][static_cast<size_t>(l)];
        if (!first.is_zero()) {
            const Form2 dfirst = calc.d1(first);
            for (int t = 0; t < 6; ++t)
                if (!dfirst.c[static_cast<size_t>(t)].is_zero())
                    out.c[static_cast<size_t>(t)][static_cast<size_t>(l)] -= dfirst.c[static_cast<size_t>(t)];
        }
        // id ^ nabla on the second leg
        for (int k = 0; k < 4; ++k) {
            const AlgebraElement& f = T.c[static_cast<size_t>(k)][static_cast<size_t>(l)];
            if (f.is_zero()) continue;
            Form1 w;
            w.c[static_cast<size_t>(k)] = f;
            for (int n = 0; n < 4; ++n) {
                Form1 G;
                for (int m = 0; m < 4; ++m) G.c[static_cast<size_t>(m)] = nablaE[static_cast<size_t>(l)].c[static_cast<size_t>(m)][static_cast<size_t>(n)];
                if (G.is_zero()) continue;
                const Form2 wedged = calc.wedge11(w, G);
                for (int t = 0; t < 6; ++t)
                    if (!wedged.c[static_cast<size_t>(t)].is_zero())
                        out.c[static_cast<size_t>(t)][static_cast<size_t>(n)] += wedged.c[static_cast<size_t>(t)];
            }
        }
    }
    return out;
}

// --- lifting map -----------------------------------------------------------------

LiftTable lift_i_table(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const Scalar one = Scalar::one(ctx);
    const Scalar q2 = Scalar::q_power(ctx, 2);
    const Scalar w = q2_int(ctx, 2).inverse();  // 1/(1+q^2)
    const Scalar m = mu(ctx);

    LiftTable tab;
    for (auto& a : tab.img)
        for (auto& b : a) b.fill(Scalar::zero(ctx));

    auto& AB = tab.img[EAB];
    auto& AC = tab.img[EAC];
    auto& BC = tab.img[EBC];
    auto& AD = tab.img[EAD];
    auto& BD = tab.img[EBD];
    auto& CD = tab.img[ECD];

    // i(e_ac) = w (q^2 e_a(x)e_c - e_c(x)e_a)
    AC[EA][EC] = w * q2;
    AC[EC][EA] = -w;
    // i(e_ab) = w (e_a(x)e_b - q^2 e_b(x)e_a)
    AB[EA][EB] = w;
    AB[EB][EA] = -(w * q2);
    // i(e_cd) = w (e_c(x)e_d - e_d(x)e_c + mu e_c(x)e_a)
    CD[EC][ED] = w;
    CD[ED][EC] = -w;
    CD[EC][EA] = w * m;

    // u = i(e_ad - q^{-2} e_cb), v = i(e_ad + e_cb); e_cb = -e_bc
    std::array<std::array<Scalar, 4>, 4> u{}, v{};
    for (auto& rr : u) rr.fill(Scalar::zero(ctx));
    for (auto& rr : v) rr.fill(Scalar::zero(ctx));
    u[EA][ED] = w * q2;
    u[ED][EA] = -w;
    u[EB][EC] = w;
    u[EC][EB] = -w;
    u[EA][EA] = -(w * m);
    v[EA][ED] = w;
    v[ED][EA] = -(w * q2);
    v[EC][EB] = w;
    v[EB][EC] = -w;
    v[EA][EA] = w * m;

    // e_ad = (u-part + q^{-2} v-part)/(1 + q^{-2}); e_bc = (u - v)/(1 + q^{-2})
    const Scalar qm2 = Scalar::q_power(ctx, -2);
    const Scalar denom = (one + qm2).inverse();
    for (int p = 0; p < 4; ++p)
        for (int s = 0; s < 4; ++s) {
            AD[static_cast<size_t>(p)][static_cast<size_t>(s)] =
                (u[static_cast<size_t>(p)][static_cast<size_t>(s)] + qm2 * v[static_cast<size_t>(p)][static_cast<size_t>(s)]) * denom;
            BC[static_cast<size_t>(p)][static_cast<size_t>(s)] =
                (u[static_cast<size_t>(p)][static_cast<size_t>(s)] - v[static_cast<size_t>(p)][static_cast<size_t>(s)]) * denom;
        }

    // i(e_bd) = i(e_bd - mu e_ab) + mu i(e_ab)
    BD[EB][ED] = w * q2;
    BD[ED][EB] = -(w * q2);
    BD[EA][EB] = -(w * q2 * m);
    for (int p = 0; p < 4; ++p)
        for (int s = 0; s < 4; ++s)
            BD[static_cast<size_t>(p)][static_cast<size_t>(s)] += m * AB[static_cast<size_t>(p)][static_cast<size_t>(s)];

    return tab;
}

Tensor11 lift_i(const Calculus& calc, const Form2& omega) {
    const LiftTable tab = lift_i_table(calc);
    Tensor11 out;
    for (int I = 0; I < 6; ++I) {
        const AlgebraElement& f = omega.c[static_cast<size_t>(I)];
        if (f.is_zero()) continue;
        const auto& img = tab.img[static_cast<size_t>(I)];
        for (int p = 0; p < 4; ++p)
            for (int s = 0; s < 4; ++s)
                if (!img[static_cast<size_t>(p)][static_cast<size_t>(s)].is_zero())
                    out.c[static_cast<size_t>(p)][static_cast<size_t>(s)] += f.scaled(img[static_cast<size_t>(p)][static_cast<size_t>(s)]);
    }
    return out;
}

std::pair<Form2, Form2> selfdual_split(const Calculus& calc, const Form2& omega) {
    const FieldContext& ctx = calc.context();
    const Scalar one = Scalar::one(ctx);
    const Scalar m = mu(ctx);

    // columns: the self-dual basis then the antiself-dual basis
    std::array<std::array<Scalar, 6>, 6> cols;
    for (auto& col : cols) col.fill(Scalar::zero(ctx));
    cols[0][EAC] = one;                                   // e_ac
    cols[1][EBD] = one;                                   // e_bd - mu e_ab
    cols[1][EAB] = -m;
    cols[2][EAD] = one;                                   // e_ad - q^{-2} e_cb = e_ad + q^{-2} e_bc
    cols[2][EBC] = Scalar::q_power(ctx, -2);
    cols[3][EAB] = one;                                   // e_ab
    cols[4][ECD] = one;                                   // e_cd
    cols[5][EAD] = one;                                   // e_ad + e_cb = e_ad - e_bc
    cols[5][EBC] = -one;

    ScalarMatrix B(ctx, 6, 6);
    for (int j = 0; j < 6; ++j)
        for (int t = 0; t < 6; ++t) B.set(t, j, cols[static_cast<size_t>(j)][static_cast<size_t>(t)]);

    Form2 plus, minus;
    for (int I = 0; I < 6; ++I) {
        const AlgebraElement& f = omega.c[static_cast<size_t>(I)];
        if (f.is_zero()) continue;
        std::vector<Scalar> e(6, Scalar::zero(ctx));
        e[static_cast<size_t>(I)] = one;
        auto sol = solve(B, e);
        if (!sol.consistent || !sol.kernel.empty()) throw std::logic_error("self-dual basis change is singular");
        for (int j = 0; j < 6; ++j) {
            const Scalar& x = sol.particular[static_cast<size_t>(j)];
            if (!x.context() || x.is_zero()) continue;
            Form2& target = (j < 3) ? plus : minus;
            for (int t = 0; t < 6; ++t)
                if (!cols[static_cast<size_t>(j)][static_cast<size_t>(t)].is_zero())
                    target.c[static_cast<size_t>(t)] += f.scaled(x * cols[static_cast<size_t>(j)][static_cast<size_t>(t)]);
        }
    }
    return {plus, minus};
}

Tensor11 ricci(const Calculus& calc, const Connection& A, const Metric& g) {
    const LiftTable tab = lift_i_table(calc);
    Tensor11 out;
    for (int j = 0; j < 4; ++j) {
        const Tensor21 R = riemann(calc, A, calc.basis_form(j));
        for (int k = 0; k < 4; ++k) {
            const Scalar& u = g.qtrace[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (u.is_zero()) continue;
            for (int I = 0; I < 6; ++I) {
                const auto& img = tab.img[static_cast<size_t>(I)];
                for (int n = 0; n < 4; ++n) {
                    const AlgebraElement& f = R.c[static_cast<size_t>(I)][static_cast<size_t>(n)];
                    if (f.is_zero()) continue;
                    for (int s = 0; s < 4; ++s) {
                        const Scalar& li = img[static_cast<size_t>(k)][static_cast<size_t>(s)];
                        if (li.is_zero()) continue;
                        out.c[static_cast<size_t>(s)][static_cast<size_t>(n)] += f.scaled(u * li);
                    }
                }
            }
        }
    }
    return out;
}

Scalar det4(const std::array<std::array<Scalar, 4>, 4>& m) {
    // Laplace expansion along the first row
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    Scalar acc = m[0][0] * det3(1, 2, 3, 1, 2, 3);
    acc -= m[0][1] * det3(1, 2, 3, 0, 2, 3);
    acc += m[0][2] * det3(1, 2, 3, 0, 1, 3);
    acc -= m[0][3] * det3(1, 2, 3, 0, 1, 2);
    return acc;
}

}  // namespace qsl2
