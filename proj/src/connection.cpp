#include "qsl2/connection.hpp"

#include "qsl2/linalg.hpp"

namespace qsl2 {

Form1 Connection::form(int i) const {
    Form1 out;
    for (int j = 0; j < 4; ++j) out.c[static_cast<size_t>(j)] = comp_[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return out;
}

Connection Connection::zero() { return Connection(); }

Scalar Connection::alpha(const FieldContext& ctx) {
    return Scalar::q_power(ctx, 4) / q2_int(ctx, 4);
}

Scalar Connection::beta(const FieldContext& ctx) {
    return (Scalar::q_power(ctx, 2) + Scalar::q_power(ctx, -2)).inverse();
}

Connection Connection::canonical(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const Scalar a = alpha(ctx);
    const Scalar b = beta(ctx);
    auto elem = [&](const Scalar& s) { return AlgebraElement::monomial(ctx, Monomial{}, s); };

    Connection A;
    // A_a = alpha e_z, A_d = -alpha e_z with e_z = q^{-2} e_a - e_d
    A.set_component(EA, EA, elem(a * Scalar::q_power(ctx, -2)));
    A.set_component(ED, EA, elem(-a));
    A.set_component(EA, ED, elem(-(a * Scalar::q_power(ctx, -2))));
    A.set_component(ED, ED, elem(a));
    // A_b = beta e_b, A_c = beta e_c
    A.set_component(EB, EB, elem(b));
    A.set_component(EC, EC, elem(b));
    return A;
}

bool Connection::operator==(const Connection& o) const {
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i)
            if (component(j, i) != o.component(j, i)) return false;
    return true;
}

// --- torsion / cotorsion -------------------------------------------------------

std::array<Form2, 4> torsion_residual(const Calculus& calc, const Connection& A) {
    const auto& ad = calc.ad();
    // W[j][k] = A_j ^ e_k (coefficients of A are already to the left)
    std::array<std::array<Form2, 4>, 4> W;
    for (int j = 0; j < 4; ++j) {
        const Form1 Aj = A.form(j);
        for (int k = 0; k < 4; ++k) W[static_cast<size_t>(j)][static_cast<size_t>(k)] = calc.wedge_form_basis(Aj, k);
    }
    std::array<Form2, 4> out;
    for (int i = 0; i < 4; ++i) {
        Form2 acc = calc.d1(calc.basis_form(i));
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                const Scalar& s = ad.L[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
                if (s.is_zero()) continue;
                acc = acc + W[static_cast<size_t>(j)][static_cast<size_t>(k)].scaled(s);
            }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

std::array<Form2, 4> cotorsion_residual(const Calculus& calc, const Connection& A) {
    const auto& ad = calc.ad();
    // V[j][k] = e_j ^ A_k (push the components of A_k through e_j)
    std::array<std::array<Form2, 4>, 4> V;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            V[static_cast<size_t>(j)][static_cast<size_t>(k)] = calc.wedge11(calc.basis_form(j), A.form(k));
    std::array<Form2, 4> out;
    for (int i = 0; i < 4; ++i) {
        Form2 acc = calc.d1(calc.basis_form(i));
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                const Scalar& s = ad.R[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
                if (s.is_zero()) continue;
                acc = acc + V[static_cast<size_t>(j)][static_cast<size_t>(k)].scaled(s);
            }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

// --- constant solve -------------------------------------------------------------

Connection solve_constant(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const auto& ad = calc.ad();
    // unknown u = l*4 + j  <->  A^l_j
    ScalarMatrix M(ctx, 48, 16);
    std::vector<Scalar> rhs(48, Scalar::zero(ctx));

    auto row_id = [](bool cotorsion, int i, int t) { return (cotorsion ? 24 : 0) + i * 6 + t; };

    for (int i = 0; i < 4; ++i) {
        const auto& de = calc.d_basis(i);
        for (int t = 0; t < 6; ++t) {
            rhs[static_cast<size_t>(row_id(false, i, t))] = -de[static_cast<size_t>(t)];
            rhs[static_cast<size_t>(row_id(true, i, t))] = -de[static_cast<size_t>(t)];
        }
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                const Scalar& sl = ad.L[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
                if (!sl.is_zero()) {
                    // (sum_l x_{l,j} e_l) ^ e_k
                    for (int l = 0; l < 4; ++l) {
                        const auto& w = calc.wedge_basis(l, k);
                        for (int t = 0; t < 6; ++t)
                            if (!w[static_cast<size_t>(t)].is_zero())
                                M.add(row_id(false, i, t), l * 4 + j, sl * w[static_cast<size_t>(t)]);
                    }
                }
                const Scalar& sr = ad.R[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
                if (!sr.is_zero()) {
                    // e_j ^ (x_{l,k} e_l), constant coefficients pass through e_j
                    for (int l = 0; l < 4; ++l) {
                        const auto& w = calc.wedge_basis(j, l);
                        for (int t = 0; t < 6; ++t)
                            if (!w[static_cast<size_t>(t)].is_zero())
                                M.add(row_id(true, i, t), l * 4 + k, sr * w[static_cast<size_t>(t)]);
                    }
                }
            }
    }

    auto sol = solve(M, rhs);
    if (!sol.consistent) throw std::logic_error("constant torsion+cotorsion system inconsistent");
    if (!sol.kernel.empty()) throw std::logic_error("constant torsion+cotorsion system not unique");

    Connection A;
    for (int l = 0; l < 4; ++l)
        for (int j = 0; j < 4; ++j) {
            const Scalar& v = sol.particular[static_cast<size_t>(l * 4 + j)];
            if (!v.is_zero()) A.set_component(l, j, AlgebraElement::monomial(ctx, Monomial{}, v));
        }
    return A;
}

// --- general solve ---------------------------------------------------------------

namespace {

struct GeneralSystem {
    ScalarMatrix torsion;
    ScalarMatrix cotorsion;
    std::vector<Scalar> torsion_rhs;
    std::vector<Scalar> cotorsion_rhs;
};

// Unknown u = (l*4 + j) * dim + mon: coefficient of basis monomial mon in A^l_j.
GeneralSystem build_general_system(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const auto& ad = calc.ad();
    const int dim = basis_dimension(ctx);
    const int unknowns = 16 * dim;
    const int unit = monomial_index(ctx, Monomial{0, 0, 0});

    GeneralSystem sys{ScalarMatrix(ctx, 24 * dim, unknowns), ScalarMatrix(ctx, 24 * dim, unknowns),
                      std::vector<Scalar>(static_cast<size_t>(24 * dim), Scalar::zero(ctx)),
                      std::vector<Scalar>(static_cast<size_t>(24 * dim), Scalar::zero(ctx))};

    auto row_id = [&](int i, int t, int mon) { return (i * 6 + t) * dim + mon; };
    auto col_id = [&](int l, int j, int mon) { return (l * 4 + j) * dim + mon; };

    for (int i = 0; i < 4; ++i) {
        const auto& de = calc.d_basis(i);
        for (int t = 0; t < 6; ++t) {
            if (de[static_cast<size_t>(t)].is_zero()) continue;
            sys.torsion_rhs[static_cast<size_t>(row_id(i, t, unit))] = -de[static_cast<size_t>(t)];
            sys.cotorsion_rhs[static_cast<size_t>(row_id(i, t, unit))] = -de[static_cast<size_t>(t)];
        }
    }

    // Torsion: A_j ^ e_k keeps the unknown's monomial unchanged.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                const Scalar& sl = ad.L[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
                if (sl.is_zero()) continue;
                for (int l = 0; l < 4; ++l) {
                    const auto& w = calc.wedge_basis(l, k);
                    for (int t = 0; t < 6; ++t) {
                        if (w[static_cast<size_t>(t)].is_zero()) continue;
                        const Scalar coeff = sl * w[static_cast<size_t>(t)];
                        for (int mon = 0; mon < dim; ++mon)
                            sys.torsion.add(row_id(i, t, mon), col_id(l, j, mon), coeff);
                    }
                }
            }

    // Cotorsion: e_j ^ (x e_l) pushes the coefficient monomial through e_j.
    for (int j = 0; j < 4; ++j)
        for (int mon = 0; mon < dim; ++mon) {
            const Form1 pushed = calc.push_left(j, AlgebraElement::monomial(ctx, monomial_at(ctx, mon)));
            for (int p = 0; p < 4; ++p) {
                for (const auto& [mon_out, pc] : pushed.c[static_cast<size_t>(p)].terms()) {
                    const int out_idx = monomial_index(ctx, mon_out);
                    for (int l = 0; l < 4; ++l) {
                        const auto& w = calc.wedge_basis(p, l);
                        for (int t = 0; t < 6; ++t) {
                            if (w[static_cast<size_t>(t)].is_zero()) continue;
                            for (int k = 0; k < 4; ++k)
                                for (int i = 0; i < 4; ++i) {
                                    const Scalar& sr = ad.R[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
                                    if (sr.is_zero()) continue;
                                    sys.cotorsion.add(row_id(i, t, out_idx), col_id(l, k, mon),
                                                      sr * pc * w[static_cast<size_t>(t)]);
                                }
                        }
                    }
                }
            }
        }

    return sys;
}

ScalarMatrix stack(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix out(a.context(), a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : a.row(r)) out.set(r, c, v);
    for (int r = 0; r < b.rows(); ++r)
        for (const auto& [c, v] : b.row(r)) out.set(a.rows() + r, c, v);
    return out;
}

}  // namespace

GeneralSolveResult solve_general(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    if (!ctx.is_root_of_unity()) throw std::domain_error("general solve requires root-of-unity mode");
    const int dim = basis_dimension(ctx);

    GeneralSystem sys = build_general_system(calc);
    GeneralSolveResult out;

    out.torsion_nullity = nullity(sys.torsion);

    ScalarMatrix joint = stack(sys.torsion, sys.cotorsion);
    std::vector<Scalar> rhs = sys.torsion_rhs;
    rhs.insert(rhs.end(), sys.cotorsion_rhs.begin(), sys.cotorsion_rhs.end());
    auto sol = solve(joint, rhs);
    if (!sol.consistent) throw std::logic_error("joint torsion+cotorsion system inconsistent");
    out.joint_nullity = static_cast<int>(sol.kernel.size());

    Connection A;
    for (int l = 0; l < 4; ++l)
        for (int j = 0; j < 4; ++j) {
            AlgebraElement f = AlgebraElement::zero(ctx);
            for (int mon = 0; mon < dim; ++mon) {
                const Scalar& v = sol.particular[static_cast<size_t>((l * 4 + j) * dim + mon)];
                if (!v.is_zero()) f.add_term(monomial_at(ctx, mon), v);
            }
            A.set_component(l, j, std::move(f));
        }
    out.particular = A;
    return out;
}

int torsion_equals_cotorsion_dimension(const Calculus& calc, bool constant_only) {
    const FieldContext& ctx = calc.context();
    const auto& ad = calc.ad();

    if (constant_only) {
        ScalarMatrix M(ctx, 24, 16);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    const Scalar& sl = ad.L[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
                    if (!sl.is_zero())
                        for (int l = 0; l < 4; ++l) {
                            const auto& w = calc.wedge_basis(l, k);
                            for (int t = 0; t < 6; ++t)
                                if (!w[static_cast<size_t>(t)].is_zero()) M.add(i * 6 + t, l * 4 + j, sl * w[static_cast<size_t>(t)]);
                        }
                    const Scalar& sr = ad.R[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
                    if (!sr.is_zero())
                        for (int l = 0; l < 4; ++l) {
                            const auto& w = calc.wedge_basis(j, l);
                            for (int t = 0; t < 6; ++t)
                                if (!w[static_cast<size_t>(t)].is_zero()) M.add(i * 6 + t, l * 4 + k, -(sr * w[static_cast<size_t>(t)]));
                        }
                }
        return nullity(M);
    }

    GeneralSystem sys = build_general_system(calc);
    ScalarMatrix diff(ctx, sys.torsion.rows(), sys.torsion.cols());
    for (int r = 0; r < sys.torsion.rows(); ++r) {
        for (const auto& [c, v] : sys.torsion.row(r)) diff.add(r, c, v);
        for (const auto& [c, v] : sys.cotorsion.row(r)) diff.add(r, c, -v);
    }
    return nullity(diff);
}

// --- covariant derivative --------------------------------------------------------

namespace {

// nabla e_i as a Tensor11 (components of the given connection)
Tensor11 nabla_basis(const Calculus& calc, const Connection& A, int i) {
    const auto& ad = calc.ad();
    Tensor11 out;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            const Scalar& s = ad.L[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
            if (s.is_zero()) continue;
            for (int l = 0; l < 4; ++l) {
                const AlgebraElement& f = A.component(l, j);
                if (f.is_zero()) continue;
                out.c[static_cast<size_t>(l)][static_cast<size_t>(k)] += f.scaled(-s);
            }
        }
    return out;
}

}  // namespace

Tensor11 nabla1(const Calculus& calc, const Connection& A, const Form1& omega) {
    Tensor11 out;
    for (int i = 0; i < 4; ++i) {
        const AlgebraElement& f = omega.c[static_cast<size_t>(i)];
        if (f.is_zero()) continue;
        const Form1 df = calc.d0(f);
        for (int p = 0; p < 4; ++p) out.c[static_cast<size_t>(p)][static_cast<size_t>(i)] += df.c[static_cast<size_t>(p)];
        const Tensor11 nb = nabla_basis(calc, A, i);
        for (int p = 0; p < 4; ++p)
            for (int k = 0; k < 4; ++k)
                if (!nb.c[static_cast<size_t>(p)][static_cast<size_t>(k)].is_zero())
                    out.c[static_cast<size_t>(p)][static_cast<size_t>(k)] += f * nb.c[static_cast<size_t>(p)][static_cast<size_t>(k)];
    }
    return out;
}

Tensor21 skew_compat_residual(const Calculus& calc, const Connection& A, const Tensor11& eta) {
    std::array<Tensor11, 4> nablaE;
    for (int j = 0; j < 4; ++j) nablaE[static_cast<size_t>(j)] = nabla_basis(calc, A, j);

    Tensor21 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const AlgebraElement& g = eta.c[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (g.is_zero()) continue;
            Form1 w;
            w.c[static_cast<size_t>(i)] = g;
            // d (x) id
            const Form2 dw = calc.d1(w);
            for (int t = 0; t < 6; ++t)
                if (!dw.c[static_cast<size_t>(t)].is_zero()) out.c[static_cast<size_t>(t)][static_cast<size_t>(j)] += dw.c[static_cast<size_t>(t)];
            // id ^ nabla
            for (int n = 0; n < 4; ++n) {
                Form1 G;
                for (int m = 0; m < 4; ++m) G.c[static_cast<size_t>(m)] = nablaE[static_cast<size_t>(j)].c[static_cast<size_t>(m)][static_cast<size_t>(n)];
                if (G.is_zero()) continue;
                const Form2 wedged = calc.wedge11(w, G);
                for (int t = 0; t < 6; ++t)
                    if (!wedged.c[static_cast<size_t>(t)].is_zero())
                        out.c[static_cast<size_t>(t)][static_cast<size_t>(n)] -= wedged.c[static_cast<size_t>(t)];
            }
        }
    return out;
}

Tensor111 nabla_on_tensor(const Calculus& calc, const Connection& A, const Tensor11& t) {
    std::array<Tensor11, 4> nablaE;
    for (int j = 0; j < 4; ++j) nablaE[static_cast<size_t>(j)] = nabla_basis(calc, A, j);

    Tensor111 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const AlgebraElement& f = t.c[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (f.is_zero()) continue;
            const Form1 df = calc.d0(f);
            for (int p = 0; p < 4; ++p)
                if (!df.c[static_cast<size_t>(p)].is_zero()) out.at(p, i, j) += df.c[static_cast<size_t>(p)];
            // nabla e_i (x) e_j
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n) {
                    const AlgebraElement& g = nablaE[static_cast<size_t>(i)].c[static_cast<size_t>(m)][static_cast<size_t>(n)];
                    if (!g.is_zero()) out.at(m, n, j) += f * g;
                }
            // gamma (x) e_i (x) delta with nabla e_j = sum gamma (x) delta,
            // the 1-form output slid to the far left
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n) {
                    const AlgebraElement& g = nablaE[static_cast<size_t>(j)].c[static_cast<size_t>(m)][static_cast<size_t>(n)];
                    if (!g.is_zero()) out.at(m, i, n) += f * g;
                }
        }
    return out;
}

Form2 regularity_residual(const Calculus& calc, const Connection& A, const AlgebraElement& f) {
    for (const Scalar& s : calc.tilde_pi(f))
        if (!s.is_zero()) throw std::invalid_argument("regularity residual requires f in ker pi~");

    const auto parts = calc.partials(f);
    Form2 out;
    for (int j = 0; j < 4; ++j) {
        const auto second = calc.partials(parts[static_cast<size_t>(j)]);
        for (int i = 0; i < 4; ++i) {
            const Scalar s = second[static_cast<size_t>(i)].counit();
            if (s.is_zero()) continue;
            const Form2 AA = calc.wedge11(A.form(i), A.form(j));
            out = out + AA.scaled(s);
        }
    }
    return out;
}

}  // namespace qsl2
