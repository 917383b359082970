#include "qsl2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "qsl2/curvature.hpp"
#include "qsl2/dirac.hpp"
#include "qsl2/linalg.hpp"
#include "qsl2/reference.hpp"

namespace qsl2 {

namespace {

std::string ok() { return {}; }

Monomial random_monomial(int r, std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, r - 1);
    return Monomial{e(rng), e(rng), e(rng)};
}

Scalar random_scalar(const FieldContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    Scalar acc = Scalar::zero(ctx);
    const int deg = ctx.is_root_of_unity() ? ctx.degree() : 1;
    for (int i = 0; i < deg; ++i) {
        Rational x(num(rng), 1 + std::abs(num(rng)));
        x.canonicalize();
        acc += Scalar::of_rational(ctx, x) * Scalar::q_power(ctx, i);
    }
    return acc;
}

Form1 right_mul(const Calculus& calc, const Form1& omega, const AlgebraElement& f) {
    Form1 out;
    for (int i = 0; i < 4; ++i) {
        if (omega.c[static_cast<size_t>(i)].is_zero()) continue;
        out = out + calc.push_left(i, f).left_mul(omega.c[static_cast<size_t>(i)]);
    }
    return out;
}

}  // namespace

std::string check_algebra_relations(const FieldContext& ctx, int assoc_trials, unsigned seed) {
    const int r = ctx.order();
    const AlgebraElement a = generator(ctx, 'a');
    const AlgebraElement b = generator(ctx, 'b');
    const AlgebraElement c = generator(ctx, 'c');
    const AlgebraElement d = generator(ctx, 'd');
    const Scalar q = Scalar::q_power(ctx, 1);

    struct Rel {
        const char* name;
        AlgebraElement lhs;
    };
    const std::vector<Rel> rels = {
        {"ba=qab", b * a - (a * b).scaled(q)},
        {"ca=qac", c * a - (a * c).scaled(q)},
        {"db=qbd", d * b - (b * d).scaled(q)},
        {"dc=qcd", d * c - (c * d).scaled(q)},
        {"cb=bc", c * b - b * c},
        {"da-ad=q mu bc", d * a - a * d - (b * c).scaled(q * mu(ctx))},
        {"ad-q^{-1}bc=1", a * d - (b * c).scaled(Scalar::q_power(ctx, -1)) - AlgebraElement::unit(ctx)},
    };
    for (const auto& rel : rels)
        if (!rel.lhs.is_zero()) return std::string("relation failed: ") + rel.name;

    if (a.pow(r) != AlgebraElement::unit(ctx)) return "a^r != 1";
    if (d.pow(r) != AlgebraElement::unit(ctx)) return "d^r != 1";
    if (!b.pow(r).is_zero()) return "b^r != 0";
    if (!c.pow(r).is_zero()) return "c^r != 0";

    std::mt19937 rng(seed);
    for (int t = 0; t < assoc_trials; ++t) {
        auto x = AlgebraElement::monomial(ctx, random_monomial(r, rng));
        auto y = AlgebraElement::monomial(ctx, random_monomial(r, rng));
        auto z = AlgebraElement::monomial(ctx, random_monomial(r, rng));
        if ((x * y) * z != x * (y * z)) return "associativity failed on a monomial triple";
    }
    return ok();
}

std::string check_differential(const Calculus& calc, bool exhaustive, int samples, int leibniz_pairs,
                               unsigned seed) {
    const FieldContext& ctx = calc.context();
    const int r = ctx.order();
    const int dim = basis_dimension(ctx);
    std::mt19937 rng(seed);

    // d against the closed five-term formula
    if (exhaustive) {
        for (int idx = 0; idx < dim; ++idx) {
            const Monomial mon = monomial_at(ctx, idx);
            if (calc.d0(AlgebraElement::monomial(ctx, mon)) != reference_monomial_differential(calc, mon)) {
                std::ostringstream os;
                os << "d mismatch on monomial c^" << mon.k << " b^" << mon.n << " d^" << mon.m;
                return os.str();
            }
        }
        // d^2 = 0 exhaustively
        for (int idx = 0; idx < dim; ++idx) {
            auto f = AlgebraElement::monomial(ctx, monomial_at(ctx, idx));
            if (!calc.d1(calc.d0(f)).is_zero()) return "d^2 != 0 on a basis monomial";
        }
    } else {
        for (int t = 0; t < samples; ++t) {
            const Monomial mon = random_monomial(r, rng);
            if (calc.d0(AlgebraElement::monomial(ctx, mon)) != reference_monomial_differential(calc, mon))
                return "d mismatch on a sampled monomial";
            if (!calc.d1(calc.d0(AlgebraElement::monomial(ctx, mon))).is_zero())
                return "d^2 != 0 on a sampled monomial";
        }
    }

    for (int t = 0; t < leibniz_pairs; ++t) {
        auto f = AlgebraElement::monomial(ctx, random_monomial(r, rng));
        auto g = AlgebraElement::monomial(ctx, random_monomial(r, rng));
        Form1 lhs = calc.d0(f * g);
        Form1 rhs = right_mul(calc, calc.d0(f), g) + calc.d0(g).left_mul(f);
        if (lhs != rhs) return "Leibniz rule failed on a sampled pair";
    }
    return ok();
}

std::string check_tilde_pi(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    for (char g : {'a', 'b', 'c', 'd'}) {
        const auto got = calc.tilde_pi(generator(ctx, g));
        const auto want = reference_tilde_pi(ctx, g);
        for (int i = 0; i < 4; ++i)
            if (got[static_cast<size_t>(i)] != want[static_cast<size_t>(i)])
                return std::string("pi~ mismatch on generator ") + g;
    }
    return ok();
}

std::string check_connection_constant(const Calculus& calc) {
    const Connection canonical = Connection::canonical(calc);
    Connection solved;
    try {
        solved = solve_constant(calc);
    } catch (const std::exception& e) {
        return std::string("constant solve failed: ") + e.what();
    }
    if (!(solved == canonical)) return "constant solve does not reproduce the closed form";
    for (const auto& f : torsion_residual(calc, canonical))
        if (!f.is_zero()) return "torsion residual nonzero for the canonical connection";
    for (const auto& f : cotorsion_residual(calc, canonical))
        if (!f.is_zero()) return "cotorsion residual nonzero for the canonical connection";
    return ok();
}

std::string check_torsion_family(const Calculus& calc, unsigned seed) {
    std::mt19937 rng(seed);
    const FieldContext& ctx = calc.context();
    for (int t = 0; t < 5; ++t) {
        const Connection A = reference_torsion_family(calc, random_scalar(ctx, rng),
                                                      random_scalar(ctx, rng), random_scalar(ctx, rng));
        for (const auto& f : torsion_residual(calc, A))
            if (!f.is_zero()) return "general torsion family member has nonzero torsion";
    }
    // the family origin is the canonical connection and is cotorsion-free
    const Connection origin =
        reference_torsion_family(calc, Scalar::zero(ctx), Scalar::zero(ctx), Scalar::zero(ctx));
    if (!(origin == Connection::canonical(calc))) return "family origin is not the canonical connection";
    for (const auto& f : cotorsion_residual(calc, origin))
        if (!f.is_zero()) return "cotorsion nonzero at the family origin";
    return ok();
}

std::string check_connection_unique(const Calculus& calc) {
    const int r = calc.context().order();
    GeneralSolveResult res = solve_general(calc);
    if (res.joint_nullity != 0) {
        std::ostringstream os;
        os << "joint nullspace has dimension " << res.joint_nullity << " (want 0)";
        return os.str();
    }
    const int want_torsion = 3 * r * r * r;
    if (res.torsion_nullity != want_torsion) {
        std::ostringstream os;
        os << "torsion-only nullspace " << res.torsion_nullity << " (want " << want_torsion << ")";
        return os.str();
    }
    if (!(res.particular == Connection::canonical(calc)))
        return "general solve particular solution differs from the canonical connection";
    return ok();
}

std::string check_nonregularity(const Calculus& calc) {
    const Connection A = Connection::canonical(calc);
    for (const auto& f : calc.ker_tilde_pi_basis()) {
        if (!regularity_residual(calc, A, f).is_zero()) return ok();  // witness found
    }
    return "no kernel element with nonzero regularity residual (connection looks regular)";
}

std::string check_nabla(const Calculus& calc) {
    const Connection A = Connection::canonical(calc);
    // covariantly constant time form
    Form1 theta = calc.constant_form(calc.theta());
    if (!nabla1(calc, A, theta).is_zero()) return "nabla theta != 0";
    // closed forms on all four basis 1-forms
    for (int i = 0; i < 4; ++i)
        if (!(nabla1(calc, A, calc.basis_form(i)) == reference_nabla_basis(calc, i)))
            return std::string("nabla ") + kBasis1Names[i] + " does not match the closed form";
    // wedge after nabla equals d on 1-forms (vanishing torsion, stated directly)
    for (int i = 0; i < 4; ++i) {
        const Tensor11 T = nabla1(calc, A, calc.basis_form(i));
        if (!(wedge_apply(calc, T) == calc.d1(calc.basis_form(i))))
            return "wedge of nabla does not equal d on a basis form";
    }
    // skew compatibility
    const Metric g = metric(calc);
    if (!skew_compat_residual(calc, A, g.tensor).is_zero()) return "skew compatibility residual nonzero";
    if (skew_compat_residual(calc, Connection::zero(), g.tensor).is_zero())
        return "skew residual vanishes for the zero connection (should not)";
    return ok();
}

std::string check_metric_deviation() {
    // nabla eta is nonzero at q = 2 but O(mu) as q -> 1: the max coefficient
    // over |mu| stays bounded by twice its value at the coarser points.
    auto max_abs = [](const Tensor111& t) {
        Rational best(0);
        for (const auto& f : t.c)
            for (const auto& [mon, coeff] : f.terms()) {
                Rational v = coeff.rational_value();
                if (v < 0) v = -v;
                if (v > best) best = v;
            }
        return best;
    };

    {
        auto ctx = FieldContext::rational_q(Rational(2));
        Calculus calc(ctx);
        const Tensor111 grad = nabla_on_tensor(calc, Connection::canonical(calc), metric(calc).tensor);
        if (grad.is_zero()) return "nabla eta vanished at q = 2";
        // theta (x) theta is covariantly constant
        Tensor11 tt;
        const auto& th = calc.theta();
        for (int i : {EA, ED})
            for (int j : {EA, ED})
                tt.c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    AlgebraElement::monomial(*ctx, Monomial{}, th[static_cast<size_t>(i)] * th[static_cast<size_t>(j)]);
        if (!nabla_on_tensor(calc, Connection::canonical(calc), tt).is_zero())
            return "nabla (theta (x) theta) != 0";
    }

    std::vector<Rational> qs = {Rational(11, 10), Rational(9, 10), Rational(101, 100), Rational(99, 100)};
    std::vector<double> ratio;
    for (const auto& qv : qs) {
        auto ctx = FieldContext::rational_q(qv);
        Calculus calc(ctx);
        const Tensor111 grad = nabla_on_tensor(calc, Connection::canonical(calc), metric(calc).tensor);
        Rational m = mu(*ctx).rational_value();
        if (m < 0) m = -m;
        const Rational mx = max_abs(grad);
        ratio.push_back(Rational(mx / m).get_d());
    }
    const double coarse = std::max(ratio[0], ratio[1]);
    const double fine = std::max(ratio[2], ratio[3]);
    if (fine > 2.0 * coarse) {
        std::ostringstream os;
        os << "max|nabla eta| / |mu| grows toward q = 1 (" << coarse << " -> " << fine << ")";
        return os.str();
    }
    return ok();
}

std::string check_riemann(const Calculus& calc) {
    const Connection A = Connection::canonical(calc);
    for (int i = 0; i < 4; ++i)
        if (!(riemann(calc, A, calc.basis_form(i)) == reference_riemann_basis(calc, i)))
            return std::string("Riemann(") + kBasis1Names[i] + ") does not match the closed form";
    return ok();
}

std::string check_lift(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    // section property on all six basis 2-forms
    for (int I = 0; I < 6; ++I) {
        Form2 w;
        w.c[static_cast<size_t>(I)] = AlgebraElement::unit(ctx);
        if (!(wedge_apply(calc, lift_i(calc, w)) == w)) return "wedge o i != id on a basis 2-form";
    }
    // the span of the images is 6-dimensional and meets ker(wedge) trivially
    ScalarMatrix images(ctx, 16, 6);
    const LiftTable tab = lift_i_table(calc);
    for (int I = 0; I < 6; ++I)
        for (int p = 0; p < 4; ++p)
            for (int s = 0; s < 4; ++s)
                images.set(p * 4 + s, I, tab.img[static_cast<size_t>(I)][static_cast<size_t>(p)][static_cast<size_t>(s)]);
    if (rank(images) != 6) return "lift images are not 6-dimensional";

    ScalarMatrix wedge_map(ctx, 6, 16);
    for (int p = 0; p < 4; ++p)
        for (int s = 0; s < 4; ++s) {
            const auto& w = calc.wedge_basis(p, s);
            for (int t = 0; t < 6; ++t) wedge_map.set(t, p * 4 + s, w[static_cast<size_t>(t)]);
        }
    const auto kernel = nullspace(wedge_map);
    if (static_cast<int>(kernel.size()) != 10) return "ker(wedge) is not 10-dimensional";
    ScalarMatrix joint(ctx, 16, 6 + static_cast<int>(kernel.size()));
    for (int row = 0; row < 16; ++row)
        for (const auto& [cidx, v] : images.row(row)) joint.set(row, cidx, v);
    for (size_t j = 0; j < kernel.size(); ++j)
        for (int row = 0; row < 16; ++row)
            if (!kernel[j][static_cast<size_t>(row)].is_zero()) joint.set(row, 6 + static_cast<int>(j), kernel[j][static_cast<size_t>(row)]);
    if (rank(joint) != 16) return "lift images intersect ker(wedge) nontrivially";

    // self-dual split behaves as a direct-sum decomposition
    for (int I = 0; I < 6; ++I) {
        Form2 w;
        w.c[static_cast<size_t>(I)] = AlgebraElement::unit(ctx);
        auto [plus, minus] = selfdual_split(calc, w);
        if (!(plus + minus == w)) return "self-dual split does not reassemble";
    }
    {
        Form2 w;  // e_ac is self-dual; e_ab antiself-dual
        w.c[EAC] = AlgebraElement::unit(ctx);
        auto [plus, minus] = selfdual_split(calc, w);
        if (!(plus == w) || !minus.is_zero()) return "e_ac is not purely self-dual";
        Form2 v;
        v.c[EAB] = AlgebraElement::unit(ctx);
        auto [p2, m2] = selfdual_split(calc, v);
        if (!(m2 == v) || !p2.is_zero()) return "e_ab is not purely antiself-dual";
    }

    // the three displayed lifts
    {
        Form2 bz;
        bz.c[EAB] = AlgebraElement::monomial(ctx, Monomial{}, -Scalar::q_power(ctx, -2));
        bz.c[EBD] = AlgebraElement::monomial(ctx, Monomial{}, -Scalar::one(ctx));
        if (!(lift_i(calc, bz) == reference_lift_bz(calc))) return "lift of e_b ^ e_z mismatch";
        Form2 cz;
        cz.c[EAC] = AlgebraElement::monomial(ctx, Monomial{}, -Scalar::q_power(ctx, -2));
        cz.c[ECD] = AlgebraElement::monomial(ctx, Monomial{}, -Scalar::one(ctx));
        if (!(lift_i(calc, cz) == reference_lift_cz(calc))) return "lift of e_c ^ e_z mismatch";
        Form2 cb;
        cb.c[EBC] = AlgebraElement::monomial(ctx, Monomial{}, -Scalar::one(ctx));
        if (!(lift_i(calc, cb) == reference_lift_cb(calc))) return "lift of e_c ^ e_b mismatch";
    }
    return ok();
}

std::string check_ricci(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const Metric g = metric(calc);
    if (!g.invertible) return "metric is not invertible";

    // metric symmetry and agreement with the expanded first form
    if (!wedge_apply(calc, g.tensor).is_zero()) return "wedge(eta) != 0";
    const auto first = reference_metric_components(ctx);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (g.comp[static_cast<size_t>(i)][static_cast<size_t>(j)] != first[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return "compact and expanded metric forms disagree";

    // quantum trace diag(1, q^{-2}, q^2, 1) in basis order (e_a, e_b, e_c, e_d)
    const std::array<Scalar, 4> want = {Scalar::one(ctx), Scalar::q_power(ctx, -2), Scalar::q_power(ctx, 2),
                                        Scalar::one(ctx)};
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            const Scalar expect = (j == k) ? want[static_cast<size_t>(j)] : Scalar::zero(ctx);
            if (g.qtrace[static_cast<size_t>(j)][static_cast<size_t>(k)] != expect) return "quantum trace mismatch";
        }

    const Tensor11 ric = ricci(calc, Connection::canonical(calc), g);
    if (!(ric == reference_ricci(calc))) return "Ricci does not match the closed form";

    const Scalar shift = Scalar::q_power(ctx, 4) / q2_int(ctx, 2);
    const Metric shifted = metric_shifted(calc, shift);
    if (!det4(shifted.comp).is_zero()) return "shifted metric determinant is nonzero";
    if (shifted.invertible) return "shifted metric unexpectedly invertible";
    return ok();
}

std::string check_aslash(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    const Mat2 As = aslash(calc, Connection::canonical(calc));
    const Scalar want = -(q_int(ctx, 3) / q_int(ctx, 4));
    if (!(As.m[0][0] == want && As.m[1][1] == want)) return "aslash diagonal != -[3]/[4]";
    if (!As.m[0][1].is_zero() || !As.m[1][0].is_zero()) return "aslash has off-diagonal entries";
    if (ctx.order() == 3 && !As.m[0][0].is_zero()) return "aslash nonzero at r = 3";
    return ok();
}

std::string check_spectrum_records(const Calculus& calc, const std::vector<EigenRecord>& spec) {
    const FieldContext& ctx = calc.context();
    const int r = ctx.order();
    const int dim2 = 2 * basis_dimension(ctx);

    // the two closed-form candidate lists agree term by term:
    // mu^{-1}(q^m - 1) = q^2 [m]_q/[2]_q with geometric q-integers
    const Scalar mu_inv = mu(ctx).inverse();
    for (int m = 0; m < r; ++m) {
        const Scalar lhs = mu_inv * (Scalar::q_power(ctx, m) - Scalar::one(ctx));
        const Scalar rhs = Scalar::q_power(ctx, 2) * q1_int(ctx, m) / q1_int(ctx, 2);
        if (lhs != rhs || spec[static_cast<size_t>(m)].eigenvalue != lhs) return "candidate eigenvalue formulas disagree";
    }

    int total_gen = 0;
    for (const auto& rec : spec) {
        if (rec.dim < 1) return "a candidate eigenvalue has empty eigenspace";
        total_gen += rec.generalized_dim;
    }
    if (total_gen != dim2) {
        std::ostringstream os;
        os << "generalized eigenspaces total " << total_gen << " (want " << dim2
           << "): candidate set does not exhaust the spectrum";
        return os.str();
    }
    int total_dim = 0;
    for (const auto& rec : spec) total_dim += rec.dim;
    if (total_dim >= dim2) return "operator unexpectedly diagonalizable";
    return ok();
}

std::string check_spectrum(const Calculus& calc, int jobs) {
    return check_spectrum_records(calc, dirac_spectrum(calc, true, jobs));
}

std::string check_circle_records(const FieldContext& ctx, const std::vector<EigenRecord>& spec) {
    const int r = ctx.order();
    // adjacent gaps |lambda_{m+1} - lambda_m| all equal: equally spaced circle,
    // centered at -mu^{-1} with radius |mu^{-1}|
    std::vector<double> gaps;
    for (int m = 0; m < r; ++m) {
        const auto z1 = spec[static_cast<size_t>(m)].embedding;
        const auto z2 = spec[static_cast<size_t>((m + 1) % r)].embedding;
        gaps.push_back(std::abs(z2 - z1));
    }
    const auto [mn, mx] = std::minmax_element(gaps.begin(), gaps.end());
    if (*mx - *mn > 1e-10) {
        std::ostringstream os;
        os << "adjacent-gap spread " << (*mx - *mn) << " exceeds 1e-10";
        return os.str();
    }
    const auto center = -mu(ctx).inverse().embed(1);
    const double radius = std::abs(mu(ctx).inverse().embed(1));
    for (const auto& rec : spec)
        if (std::abs(std::abs(rec.embedding - center) - radius) > 1e-10)
            return "an eigenvalue leaves the circle about -1/mu";
    return ok();
}

std::string check_spectrum_circle(const Calculus& calc, int jobs) {
    return check_circle_records(calc.context(), dirac_spectrum(calc, true, jobs));
}

std::string check_offset(const FieldContext& ctx) {
    const OffsetReport rep = offset_report(ctx);
    if (std::abs(rep.embedded.real() - rep.sine_ratio) > 1e-10 || std::abs(rep.embedded.imag()) > 1e-10)
        return "embedded offset does not match the sine ratio";
    return ok();
}

std::string check_offset_table() {
    {
        auto r3 = FieldContext::root_of_unity(3);
        if (!offset_report(*r3).exact.is_zero()) return "offset at r = 3 is not exactly 0";
    }
    {
        auto r5 = FieldContext::root_of_unity(5);
        const auto rep = offset_report(*r5);
        if (std::abs(rep.embedded.real() - 0.6180339887) > 1e-10 || std::abs(rep.embedded.imag()) > 1e-10)
            return "offset at r = 5 is not the golden value";
    }
    {
        auto r7 = FieldContext::root_of_unity(7);
        const auto rep = offset_report(*r7);
        if (rep.exact != Scalar::of_int(*r7, -1)) return "offset at r = 7 is not exactly -1";
        if (std::abs(rep.embedded.real() + 1.0) > 1e-10) return "embedded offset at r = 7 is off";
    }
    {
        auto r9 = FieldContext::root_of_unity(9);
        const auto rep = offset_report(*r9);
        if (std::abs(rep.embedded.real() - 2.53) > 0.01 || std::abs(rep.embedded.imag()) > 1e-10)
            return "offset at r = 9 is not approximately 2.53";
    }
    return ok();
}

std::string check_modes_r3(const Calculus& calc) {
    const ModeVerification rep = verify_modes_r3(calc);
    if (!rep.eigen_equations_hold) return "a listed mode fails its eigenvalue equation";
    if (!rep.independent) return "the 38 listed modes are not linearly independent";
    if (rep.eigen_dims != std::array<int, 3>{14, 12, 12}) {
        std::ostringstream os;
        os << "eigenspace dimensions " << rep.eigen_dims[0] << "/" << rep.eigen_dims[1] << "/"
           << rep.eigen_dims[2] << " (want 14/12/12)";
        return os.str();
    }
    if (!rep.spans_match) return "listed modes do not span the eigenspaces";
    if (!rep.conjugation_preserves_spans) return "charge conjugation leaves a listed span";
    if (!rep.zero_components_in_massless_span) return "zero-mode component outside the massless span";

    const auto spec = dirac_spectrum(calc, true, 1);
    int total_gen = 0;
    for (const auto& rec : spec) total_gen += rec.generalized_dim;
    if (total_gen != 54) return "generalized eigenspaces do not total 54";
    const int deficiency = total_gen - (14 + 12 + 12);
    if (deficiency != 16) return "non-diagonalizable deficiency is not 16";
    return ok();
}

std::string check_char_poly_r3(const Calculus& calc) {
    const FieldContext& ctx = calc.context();
    // characteristic polynomial must be prod_m (x - lambda_m)^{g_m}
    const auto spec = dirac_spectrum(calc, true, 1);
    std::vector<Scalar> want{Scalar::one(ctx)};
    for (const auto& rec : spec) {
        for (int p = 0; p < rec.generalized_dim; ++p) {
            std::vector<Scalar> next(want.size() + 1, Scalar::zero(ctx));
            for (size_t i = 0; i < want.size(); ++i) {
                next[i + 1] += want[i];
                next[i] -= want[i] * rec.eigenvalue;
            }
            want = std::move(next);
        }
    }
    const auto got = dirac_char_poly(calc, true);
    if (got.size() != want.size()) return "characteristic polynomial degree mismatch";
    for (size_t i = 0; i < got.size(); ++i)
        if (got[i] != want[i]) return "characteristic polynomial does not factor over the candidates";
    return ok();
}

// --- registry --------------------------------------------------------------------

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts) {
    const FieldContext& ctx = *opts.ctx;
    const bool root = ctx.is_root_of_unity();
    const int r = root ? ctx.order() : 0;

    std::vector<CheckResult> results;
    Calculus calc(opts.ctx);

    auto run = [&](const std::string& id, const std::string& claim, bool applicable,
                   const std::string& skip_reason, const std::function<std::string(CheckResult&)>& fn) {
        CheckResult res;
        res.id = id;
        res.claim = claim;
        if (!applicable) {
            res.status = CheckResult::Status::Skip;
            res.detail = skip_reason;
            results.push_back(std::move(res));
            return;
        }
        const auto t0 = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = fn(res);
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        res.status = err.empty() ? CheckResult::Status::Pass : CheckResult::Status::Fail;
        res.detail = err;
        results.push_back(std::move(res));
    };

    run("algebra.relations", "defining relations, reduction relations and associativity", root,
        "needs the reduced algebra (root-of-unity mode)",
        [&](CheckResult&) { return check_algebra_relations(ctx, 500, 20240601); });
    run("calculus.differential", "theta-bracket differential matches the closed five-term formula; d^2 = 0; Leibniz",
        root, "needs the reduced algebra (root-of-unity mode)",
        [&](CheckResult&) { return check_differential(calc, r == 3, 200, 200, 20240602); });
    run("calculus.projection", "pi~ on the generators matches the closed forms", root,
        "needs the reduced algebra (root-of-unity mode)", [&](CheckResult&) { return check_tilde_pi(calc); });
    run("connection.constant", "unique constant spin connection with vanishing torsion and cotorsion", true, "",
        [&](CheckResult&) { return check_connection_constant(calc); });
    run("connection.family", "general torsion solution family; its origin is the cotorsion-free point", true, "",
        [&](CheckResult&) { return check_torsion_family(calc, 20240603); });
    run("connection.unique", "torsion+cotorsion solution is unique over all function-valued components",
        root && (r == 3 || (r <= 7 && opts.deep)),
        root ? (r <= 7 ? "gated behind --deep" : "system too large at this order") : "root-of-unity only",
        [&](CheckResult& res) {
            const GeneralSolveResult sol = solve_general(calc);
            res.artifacts["joint_nullity"] = std::to_string(sol.joint_nullity);
            res.artifacts["torsion_nullity"] = std::to_string(sol.torsion_nullity);
            if (sol.joint_nullity != 0) return std::string("joint nullspace is not zero");
            if (sol.torsion_nullity != 3 * r * r * r) return std::string("torsion-only nullity is not 3r^3");
            if (!(sol.particular == Connection::canonical(calc)))
                return std::string("particular solution differs from the canonical connection");
            return std::string();
        });
    run("connection.nonregular", "the canonical connection is not regular", root,
        "needs the reduced algebra (root-of-unity mode)", [&](CheckResult&) { return check_nonregularity(calc); });
    run("nabla.basis", "covariant derivative closed forms; nabla theta = 0; skew compatibility", true, "",
        [&](CheckResult&) { return check_nabla(calc); });
    run("nabla.metric", "nabla eta is nonzero yet O(mu) toward q = 1", !root,
        "evaluated at rational deformation points", [](CheckResult&) { return check_metric_deviation(); });
    run("riemann.closed-form", "Riemann curvature matches the closed forms on basis 1-forms", true, "",
        [&](CheckResult&) { return check_riemann(calc); });
    run("lift.section", "the lifting map sections the wedge and splits off ker(wedge)", true, "",
        [&](CheckResult&) { return check_lift(calc); });
    run("ricci.einstein", "Ricci is proportional to the metric shifted by the degenerate time square", true, "",
        [&](CheckResult&) { return check_ricci(calc); });
    run("dirac.aslash", "the connection term of the Dirac operator is the constant -[3]/[4]", root,
        "root-of-unity only", [&](CheckResult&) { return check_aslash(calc); });
    std::vector<EigenRecord> spec_records;
    run("dirac.spectrum", "eigenvalues are exactly the r candidates; generalized spaces fill the spinor bundle",
        root && (r <= 5 || opts.deep), root ? "gated behind --deep" : "root-of-unity only",
        [&](CheckResult& res) {
            spec_records = dirac_spectrum(calc, true, opts.jobs);
            for (const auto& rec : spec_records)
                res.artifacts["dim[m=" + std::to_string(rec.m) + "]"] =
                    std::to_string(rec.dim) + "/" + std::to_string(rec.generalized_dim);
            return check_spectrum_records(calc, spec_records);
        });
    run("dirac.circle", "embedded eigenvalues are equally spaced on a circle about -1/mu",
        root && (r <= 5 || opts.deep) && !spec_records.empty(),
        root ? "gated behind --deep" : "root-of-unity only",
        [&](CheckResult&) { return check_circle_records(ctx, spec_records); });
    run("dirac.offset", "curvature offset matches the sine ratio", root, "root-of-unity only",
        [&](CheckResult& res) {
            const OffsetReport rep = offset_report(ctx);
            res.artifacts["exact"] = rep.exact.str();
            std::ostringstream emb;
            emb << rep.embedded.real();
            res.artifacts["embedded"] = emb.str();
            return check_offset(ctx);
        });
    run("dirac.modes", "the listed r = 3 eigenmode table verifies, spans and conjugates", root && r == 3,
        "r = 3 only", [&](CheckResult&) { return check_modes_r3(calc); });
    run("dirac.charpoly", "characteristic polynomial factors over the candidate eigenvalues", root && r == 3,
        "r = 3 only", [&](CheckResult&) { return check_char_poly_r3(calc); });
    return results;
}

}  // namespace qsl2
