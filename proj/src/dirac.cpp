#include "qsl2/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace qsl2 {

Mat2 gamma_matrix(const FieldContext& ctx, int i) {
    Mat2 g;
    for (auto& row : g.m) row.fill(Scalar::zero(ctx));
    const Scalar one = Scalar::one(ctx);
    switch (i) {
        case EA: g.m[0][0] = one; break;
        case EB: g.m[0][1] = one; break;
        case EC: g.m[1][0] = one; break;
        case ED: g.m[1][1] = one; break;
        default: throw std::invalid_argument("bad basis index");
    }
    return g;
}

Mat2 aslash(const Calculus& calc, const Connection& A) {
    const FieldContext& ctx = calc.context();
    // pi~ S^{-1} on the generator matrix: S^{-1}a = d, S^{-1}d = a,
    // S^{-1}b = -q^{-1} b, S^{-1}c = -q c.
    std::array<std::array<Scalar, 4>, 4> piS;  // piS[gamma*2+beta] -> components
    const auto pi_a = calc.tilde_pi(generator(ctx, 'a'));
    const auto pi_b = calc.tilde_pi(generator(ctx, 'b'));
    const auto pi_c = calc.tilde_pi(generator(ctx, 'c'));
    const auto pi_d = calc.tilde_pi(generator(ctx, 'd'));
    const Scalar mb = -Scalar::q_power(ctx, -1);
    const Scalar mc = -Scalar::q_power(ctx, 1);
    for (int t = 0; t < 4; ++t) {
        piS[0][static_cast<size_t>(t)] = pi_d[static_cast<size_t>(t)];       // t^1_1 = a
        piS[1][static_cast<size_t>(t)] = mb * pi_b[static_cast<size_t>(t)];  // t^1_2 = b
        piS[2][static_cast<size_t>(t)] = mc * pi_c[static_cast<size_t>(t)];  // t^2_1 = c
        piS[3][static_cast<size_t>(t)] = pi_a[static_cast<size_t>(t)];       // t^2_2 = d
    }

    Mat2 out;
    for (auto& row : out.m) row.fill(Scalar::zero(ctx));
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta) {
            Scalar acc = Scalar::zero(ctx);
            for (int gamma = 0; gamma < 2; ++gamma) {
                // W = A(pi~ S^{-1} t^gamma_beta) is a 1-form; take its
                // (alpha, gamma) spinor component via the gamma map.
                const auto& p = piS[static_cast<size_t>(gamma * 2 + beta)];
                for (int i = 0; i < 4; ++i) {
                    if (p[static_cast<size_t>(i)].is_zero()) continue;
                    for (int l = 0; l < 4; ++l) {
                        const AlgebraElement& comp = A.component(l, i);
                        if (comp.is_zero()) continue;
                        const Scalar sc = comp.coefficient(Monomial{0, 0, 0});
                        const Mat2 g = gamma_matrix(ctx, l);
                        if (!g.m[static_cast<size_t>(alpha)][static_cast<size_t>(gamma)].is_zero())
                            acc += p[static_cast<size_t>(i)] * sc * g.m[static_cast<size_t>(alpha)][static_cast<size_t>(gamma)];
                    }
                }
            }
            out.m[static_cast<size_t>(alpha)][static_cast<size_t>(beta)] = acc;
        }
    return out;
}

DiracMatrix assemble_dirac(const Calculus& calc, bool normalized, bool with_connection) {
    const FieldContext& ctx = calc.context();
    if (!ctx.is_root_of_unity()) throw std::domain_error("Dirac matrix requires root-of-unity mode");
    const int dim = basis_dimension(ctx);
    const Scalar muv = mu(ctx);

    DiracMatrix D{ScalarMatrix(ctx, 2 * dim, 2 * dim), normalized, with_connection, Scalar::zero(ctx)};

    // blocks [[d^a, d^b], [d^c, d^d]] acting on (psi^1; psi^2)
    for (int in = 0; in < dim; ++in) {
        const auto parts = calc.partials(AlgebraElement::monomial(ctx, monomial_at(ctx, in)));
        auto emit = [&](int row_comp, int col_comp, const AlgebraElement& p) {
            for (const auto& [mon, coeff] : p.terms()) {
                Scalar v = normalized ? coeff : coeff * muv;
                D.mat.add(row_comp * dim + monomial_index(ctx, mon), col_comp * dim + in, v);
            }
        };
        emit(0, 0, parts[EA]);
        emit(0, 1, parts[EB]);
        emit(1, 0, parts[EC]);
        emit(1, 1, parts[ED]);
    }

    if (with_connection) {
        const Mat2 As = aslash(calc, Connection::canonical(calc));
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                if (As.m[static_cast<size_t>(a)][static_cast<size_t>(b)].is_zero()) continue;
                for (int mon = 0; mon < dim; ++mon)
                    D.mat.add(a * dim + mon, b * dim + mon, -As.m[static_cast<size_t>(a)][static_cast<size_t>(b)]);
            }
        D.offset = -As.m[0][0];
    }
    return D;
}

std::vector<Scalar> spinor_to_vector(const Calculus& calc, const Spinor& v) {
    const FieldContext& ctx = calc.context();
    const int dim = basis_dimension(ctx);
    std::vector<Scalar> x(static_cast<size_t>(2 * dim), Scalar::zero(ctx));
    for (const auto& [mon, coeff] : v.c1.terms()) x[static_cast<size_t>(monomial_index(ctx, mon))] = coeff;
    for (const auto& [mon, coeff] : v.c2.terms()) x[static_cast<size_t>(dim + monomial_index(ctx, mon))] = coeff;
    return x;
}

Spinor vector_to_spinor(const Calculus& calc, const std::vector<Scalar>& x) {
    const FieldContext& ctx = calc.context();
    const int dim = basis_dimension(ctx);
    Spinor v{AlgebraElement::zero(ctx), AlgebraElement::zero(ctx)};
    for (int i = 0; i < dim; ++i) {
        if (!x[static_cast<size_t>(i)].is_zero()) v.c1.add_term(monomial_at(ctx, i), x[static_cast<size_t>(i)]);
        if (!x[static_cast<size_t>(dim + i)].is_zero()) v.c2.add_term(monomial_at(ctx, i), x[static_cast<size_t>(dim + i)]);
    }
    return v;
}

Spinor apply_dirac(const Calculus& calc, const DiracMatrix& D, const Spinor& v) {
    return vector_to_spinor(calc, D.mat.apply(spinor_to_vector(calc, v)));
}

// --- spectrum -----------------------------------------------------------------

namespace {

// The slashed derivative preserves the Z_r grading deg(c^k b^n d^m) = m+n-k
// shifted by +2 on the second spinor component; nullities decompose over the
// r resulting blocks.
struct GradingBlocks {
    std::vector<std::vector<int>> members;  // global indices per grade
    std::vector<int> grade_of;
};

GradingBlocks grading_blocks(const FieldContext& ctx) {
    const int r = ctx.order();
    const int dim = basis_dimension(ctx);
    GradingBlocks g;
    g.members.resize(static_cast<size_t>(r));
    g.grade_of.resize(static_cast<size_t>(2 * dim));
    for (int comp = 0; comp < 2; ++comp)
        for (int idx = 0; idx < dim; ++idx) {
            const Monomial mon = monomial_at(ctx, idx);
            const int grade = (((mon.m + mon.n - mon.k + 2 * comp) % r) + r) % r;
            g.grade_of[static_cast<size_t>(comp * dim + idx)] = grade;
            g.members[static_cast<size_t>(grade)].push_back(comp * dim + idx);
        }
    return g;
}

}  // namespace

std::vector<EigenRecord> dirac_spectrum(const Calculus& calc, bool normalized, int jobs) {
    const FieldContext& ctx = calc.context();
    const int r = ctx.order();
    const int dim = basis_dimension(ctx);

    const DiracMatrix D = assemble_dirac(calc, normalized, /*with_connection=*/false);
    const GradingBlocks blocks = grading_blocks(ctx);

    // sanity: the operator must respect the grading
    for (int row = 0; row < 2 * dim; ++row)
        for (const auto& [col, v] : D.mat.row(row))
            if (blocks.grade_of[static_cast<size_t>(row)] != blocks.grade_of[static_cast<size_t>(col)])
                throw std::logic_error("slashed derivative does not respect the Z_r grading");

    const Scalar mu_inv = mu(ctx).inverse();
    auto candidate = [&](int m) {
        Scalar base = Scalar::q_power(ctx, m) - Scalar::one(ctx);
        return normalized ? mu_inv * base : base;
    };

    auto compute = [&](int m) {
        EigenRecord rec;
        rec.m = m;
        rec.eigenvalue = candidate(m);
        rec.dim = 0;
        rec.generalized_dim = 0;
        for (const auto& block : blocks.members) {
            const int n = static_cast<int>(block.size());
            ScalarMatrix B(ctx, n, n);
            for (int i = 0; i < n; ++i) {
                for (const auto& [col, v] : D.mat.row(block[static_cast<size_t>(i)])) {
                    // locate col within this block
                    const auto it = std::lower_bound(block.begin(), block.end(), col);
                    B.set(i, static_cast<int>(it - block.begin()), v);
                }
                B.add(i, i, -rec.eigenvalue);
            }
            const auto dims = power_kernel_dims(B, r);
            rec.dim += dims.front();
            rec.generalized_dim += dims.back();
        }
        rec.embedding = rec.eigenvalue.embed(1);
        return rec;
    };

    std::vector<EigenRecord> out(static_cast<size_t>(r));
    if (jobs > 1) {
        std::vector<std::future<EigenRecord>> futs;
        futs.reserve(static_cast<size_t>(r));
        for (int m = 0; m < r; ++m) futs.push_back(std::async(std::launch::async, compute, m));
        for (int m = 0; m < r; ++m) out[static_cast<size_t>(m)] = futs[static_cast<size_t>(m)].get();
    } else {
        for (int m = 0; m < r; ++m) out[static_cast<size_t>(m)] = compute(m);
    }
    return out;
}

std::vector<Scalar> dirac_char_poly(const Calculus& calc, bool normalized) {
    const FieldContext& ctx = calc.context();
    const DiracMatrix D = assemble_dirac(calc, normalized, /*with_connection=*/false);
    const GradingBlocks blocks = grading_blocks(ctx);

    // Faddeev-LeVerrier per grading block; the full characteristic polynomial
    // is the product over blocks.
    auto block_char = [&](const std::vector<int>& block) {
        const int n = static_cast<int>(block.size());
        ScalarMatrix A(ctx, n, n);
        for (int i = 0; i < n; ++i)
            for (const auto& [col, v] : D.mat.row(block[static_cast<size_t>(i)])) {
                const auto it = std::lower_bound(block.begin(), block.end(), col);
                A.set(i, static_cast<int>(it - block.begin()), v);
            }
        std::vector<Scalar> coeffs(static_cast<size_t>(n + 1), Scalar::zero(ctx));
        coeffs[static_cast<size_t>(n)] = Scalar::one(ctx);
        ScalarMatrix Bk = ScalarMatrix::identity(ctx, n);  // B_0
        for (int k = 1; k <= n; ++k) {
            Bk = A.multiply(Bk);
            Scalar tr = Scalar::zero(ctx);
            for (int i = 0; i < n; ++i) tr += Bk.get(i, i);
            const Scalar ck = -(tr / Scalar::of_int(ctx, k));
            coeffs[static_cast<size_t>(n - k)] = ck;
            for (int i = 0; i < n; ++i) Bk.add(i, i, ck);
        }
        return coeffs;
    };

    std::vector<Scalar> poly{Scalar::one(ctx)};
    for (const auto& block : blocks.members) {
        const auto f = block_char(block);
        std::vector<Scalar> next(poly.size() + f.size() - 1, Scalar::zero(ctx));
        for (size_t i = 0; i < poly.size(); ++i) {
            if (poly[i].is_zero()) continue;
            for (size_t j = 0; j < f.size(); ++j)
                if (!f[j].is_zero()) next[i + j] += poly[i] * f[j];
        }
        poly = std::move(next);
    }
    return poly;
}

// --- charge conjugation ----------------------------------------------------------

AlgebraElement charge_conjugate(const Calculus& calc, const AlgebraElement& f) {
    const FieldContext& ctx = calc.context();
    const int r = ctx.order();
    std::vector<AlgebraElement> a_pow(static_cast<size_t>(r));
    a_pow[0] = AlgebraElement::unit(ctx);
    const AlgebraElement a = generator(ctx, 'a');
    for (int m = 1; m < r; ++m) a_pow[static_cast<size_t>(m)] = a_pow[static_cast<size_t>(m - 1)] * a;

    AlgebraElement out = AlgebraElement::zero(ctx);
    for (const auto& [mon, coeff] : f.terms()) {
        // c^k b^n d^m -> b^k c^n a^m = c^n b^k a^m
        AlgebraElement img = AlgebraElement::monomial(ctx, Monomial{mon.n, mon.k, 0}, coeff.conjugate_q());
        out += img * a_pow[static_cast<size_t>(mon.m)];
    }
    return out;
}

Spinor charge_conjugate(const Calculus& calc, const Spinor& v) {
    return Spinor{charge_conjugate(calc, v.c2), charge_conjugate(calc, v.c1)};
}

// --- r = 3 mode table --------------------------------------------------------------

std::array<std::vector<Spinor>, 3> listed_modes_r3(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    if (!ctx.is_root_of_unity() || ctx.order() != 3) throw std::domain_error("mode table requires r = 3");

    const AlgebraElement one = AlgebraElement::unit(ctx);
    const AlgebraElement zero = AlgebraElement::zero(ctx);
    const AlgebraElement a = generator(ctx, 'a');
    const AlgebraElement b = generator(ctx, 'b');
    const AlgebraElement c = generator(ctx, 'c');
    const AlgebraElement d = generator(ctx, 'd');
    const Scalar q = Scalar::q_power(ctx, 1);
    const Scalar q2 = Scalar::q_power(ctx, 2);

    auto S = [&](const AlgebraElement& x, const AlgebraElement& y) { return Spinor{x, y}; };

    std::array<std::vector<Spinor>, 3> modes;
    // eigenvalue 0
    modes[0] = {
        S(zero, one),
        S(zero, b * b * d),
        S(zero, b * d * d),
        S(-b, a.scaled(q)),
        S(-(b * b * d), b),
        S(b * d * d, d),
        S(c * d * d, (c * c * d).scaled(q)),
        S(one, zero),
        S(c * c * a, zero),
        S(c * a * a, zero),
        S(d.scaled(q2), -c),
        S(c, -(c * c * a)),
        S(a, c * a * a),
        S((b * b * a).scaled(q2), b * a * a),
    };
    // eigenvalue -1
    modes[1] = {
        S(zero, b),
        S(zero, d),
        S(zero, b * b * a),
        S(b, a.scaled(q2)),
        S(one, -(c * d * d)),
        S(c * d * d, -((c * c * d).scaled(q2))),
        S(c, zero),
        S(a, zero),
        S(c * c * d, zero),
        S(d.scaled(q), c),
        S(-(b * a * a), one),
        S(-((b * b * a).scaled(q)), b * a * a),
    };
    // eigenvalue q^2
    const AlgebraElement cb1 = c * b - one;
    modes[2] = {
        S(zero, b * b),
        S(zero, d * d),
        S(zero, b * d),
        S(-(b * b), (b * a).scaled(q)),
        S(d * d, -((c * d).scaled(q2))),
        S(-((b * d).scaled(q2)), cb1),
        S(c * c, zero),
        S(a * a, zero),
        S(c * a, zero),
        S((c * d).scaled(q2), -(c * c)),
        S(-((b * a).scaled(q)), a * a),
        S(cb1, -((c * a).scaled(q))),
    };
    return modes;
}

ModeVerification verify_modes_r3(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const int dim = basis_dimension(ctx);
    const DiracMatrix D = assemble_dirac(calc, /*normalized=*/true, /*with_connection=*/true);
    const auto modes = listed_modes_r3(calc);
    const Scalar mu_inv = mu(ctx).inverse();
    const std::array<Scalar, 3> lambdas = {
        Scalar::zero(ctx),
        mu_inv * (Scalar::q_power(ctx, 1) - Scalar::one(ctx)),
        mu_inv * (Scalar::q_power(ctx, 2) - Scalar::one(ctx)),
    };

    ModeVerification rep;
    rep.eigen_equations_hold = true;
    for (int g = 0; g < 3; ++g) {
        rep.listed_counts[static_cast<size_t>(g)] = static_cast<int>(modes[static_cast<size_t>(g)].size());
        for (const auto& v : modes[static_cast<size_t>(g)]) {
            const auto x = spinor_to_vector(calc, v);
            const auto Dx = D.mat.apply(x);
            for (int i = 0; i < 2 * dim; ++i) {
                if (Dx[static_cast<size_t>(i)] != lambdas[static_cast<size_t>(g)] * x[static_cast<size_t>(i)]) {
                    rep.eigen_equations_hold = false;
                    break;
                }
            }
        }
    }

    // independence of all 38 listed vectors
    {
        ScalarMatrix M(ctx, 2 * dim, 38);
        int col = 0;
        for (const auto& group : modes)
            for (const auto& v : group) {
                const auto x = spinor_to_vector(calc, v);
                for (int i = 0; i < 2 * dim; ++i)
                    if (!x[static_cast<size_t>(i)].is_zero()) M.set(i, col, x[static_cast<size_t>(i)]);
                ++col;
            }
        rep.independent = (rank(M) == 38);
    }

    // computed eigenspace dimensions
    const auto spec = dirac_spectrum(calc, true, 1);
    for (int g = 0; g < 3; ++g) rep.eigen_dims[static_cast<size_t>(g)] = spec[static_cast<size_t>(g)].dim;
    rep.spans_match = rep.eigen_equations_hold && rep.independent;
    for (int g = 0; g < 3; ++g)
        rep.spans_match = rep.spans_match && (rep.listed_counts[static_cast<size_t>(g)] == rep.eigen_dims[static_cast<size_t>(g)]);

    // charge conjugation maps each eigenvalue's listed span into itself
    rep.conjugation_preserves_spans = true;
    for (const auto& group : modes) {
        const int count = static_cast<int>(group.size());
        ScalarMatrix M(ctx, 2 * dim, count + count);
        for (int j = 0; j < count; ++j) {
            const auto x = spinor_to_vector(calc, group[static_cast<size_t>(j)]);
            const auto y = spinor_to_vector(calc, charge_conjugate(calc, group[static_cast<size_t>(j)]));
            for (int i = 0; i < 2 * dim; ++i) {
                if (!x[static_cast<size_t>(i)].is_zero()) M.set(i, j, x[static_cast<size_t>(i)]);
                if (!y[static_cast<size_t>(i)].is_zero()) M.set(i, count + j, y[static_cast<size_t>(i)]);
            }
        }
        ScalarMatrix listed_only(ctx, 2 * dim, count);
        for (int i = 0; i < 2 * dim; ++i)
            for (const auto& [cidx, v] : M.row(i))
                if (cidx < count) listed_only.set(i, cidx, v);
        if (rank(M) != rank(listed_only)) rep.conjugation_preserves_spans = false;
    }

    // zero-mode components lie in the span of the 13 massless elements
    {
        const AlgebraElement a = generator(ctx, 'a');
        const AlgebraElement b = generator(ctx, 'b');
        const AlgebraElement c = generator(ctx, 'c');
        const AlgebraElement d = generator(ctx, 'd');
        const std::vector<AlgebraElement> massless = {
            AlgebraElement::unit(ctx), a, b, c, d,
            c * c * d, c * d * d, c * c * a, c * a * a,
            b * b * d, b * d * d, b * b * a, b * a * a};
        ScalarMatrix base(ctx, dim, static_cast<int>(massless.size()));
        for (size_t j = 0; j < massless.size(); ++j)
            for (const auto& [mon, coeff] : massless[j].terms())
                base.set(monomial_index(ctx, mon), static_cast<int>(j), coeff);
        const int base_rank = rank(base);

        rep.zero_components_in_massless_span = true;
        for (const auto& v : modes[0]) {
            for (const AlgebraElement* compnt : {&v.c1, &v.c2}) {
                if (compnt->is_zero()) continue;
                ScalarMatrix aug(ctx, dim, static_cast<int>(massless.size()) + 1);
                for (int i = 0; i < dim; ++i)
                    for (const auto& [cidx, val] : base.row(i)) aug.set(i, cidx, val);
                for (const auto& [mon, coeff] : compnt->terms())
                    aug.set(monomial_index(ctx, mon), static_cast<int>(massless.size()), coeff);
                if (rank(aug) != base_rank) rep.zero_components_in_massless_span = false;
            }
        }
    }
    return rep;
}

OffsetReport offset_report(const FieldContext& ctx) {
    if (!ctx.is_root_of_unity()) throw std::domain_error("offset report requires root-of-unity mode");
    const int r = ctx.order();
    const Scalar four = q_int(ctx, 4);
    if (four.is_zero()) throw std::logic_error("[4]_q vanished");
    OffsetReport rep{q_int(ctx, 3) / four, {}, 0.0};
    rep.embedded = rep.exact.embed(1);
    const double denom = std::sin(8.0 * M_PI / static_cast<double>(r));
    rep.sine_ratio = std::sin(6.0 * M_PI / static_cast<double>(r)) / denom;
    return rep;
}

}  // namespace qsl2
