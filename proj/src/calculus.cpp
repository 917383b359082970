#include "qsl2/calculus.hpp"

#include <sstream>

#include "qsl2/linalg.hpp"

namespace qsl2 {

const char* const kBasis1Names[4] = {"e_a", "e_b", "e_c", "e_d"};
const char* const kBasis2Names[6] = {"e_ab", "e_ac", "e_bc", "e_ad", "e_bd", "e_cd"};

// --- form boilerplate ---------------------------------------------------------

namespace {

template <typename T, size_t N>
bool arr_zero(const std::array<T, N>& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::string coeff_str(const AlgebraElement& f) {
    std::string s = f.str();
    if (s.find_first_of("+- ") != std::string::npos) return "(" + s + ")";
    return s;
}

}  // namespace

bool Form1::is_zero() const { return arr_zero(c); }
Form1 Form1::operator+(const Form1& o) const {
    Form1 out;
    for (int i = 0; i < 4; ++i) out.c[i] = c[i] + o.c[i];
    return out;
}
Form1 Form1::operator-(const Form1& o) const {
    Form1 out;
    for (int i = 0; i < 4; ++i) out.c[i] = c[i] - o.c[i];
    return out;
}
Form1 Form1::operator-() const {
    Form1 out;
    for (int i = 0; i < 4; ++i) out.c[i] = -c[i];
    return out;
}
Form1 Form1::scaled(const Scalar& s) const {
    Form1 out;
    for (int i = 0; i < 4; ++i) out.c[i] = c[i].scaled(s);
    return out;
}
Form1 Form1::left_mul(const AlgebraElement& f) const {
    Form1 out;
    for (int i = 0; i < 4; ++i) out.c[i] = f * c[i];
    return out;
}
bool Form1::operator==(const Form1& o) const { return (*this - o).is_zero(); }
std::string Form1::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeff_str(c[i]) << " " << kBasis1Names[i];
    }
    return first ? "0" : os.str();
}

bool Form2::is_zero() const { return arr_zero(c); }
Form2 Form2::operator+(const Form2& o) const {
    Form2 out;
    for (int i = 0; i < 6; ++i) out.c[i] = c[i] + o.c[i];
    return out;
}
Form2 Form2::operator-(const Form2& o) const {
    Form2 out;
    for (int i = 0; i < 6; ++i) out.c[i] = c[i] - o.c[i];
    return out;
}
Form2 Form2::operator-() const {
    Form2 out;
    for (int i = 0; i < 6; ++i) out.c[i] = -c[i];
    return out;
}
Form2 Form2::scaled(const Scalar& s) const {
    Form2 out;
    for (int i = 0; i < 6; ++i) out.c[i] = c[i].scaled(s);
    return out;
}
Form2 Form2::left_mul(const AlgebraElement& f) const {
    Form2 out;
    for (int i = 0; i < 6; ++i) out.c[i] = f * c[i];
    return out;
}
bool Form2::operator==(const Form2& o) const { return (*this - o).is_zero(); }
std::string Form2::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeff_str(c[i]) << " " << kBasis2Names[i];
    }
    return first ? "0" : os.str();
}

bool Tensor11::is_zero() const {
    for (const auto& row : c)
        if (!arr_zero(row)) return false;
    return true;
}
Tensor11 Tensor11::operator+(const Tensor11& o) const {
    Tensor11 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.c[i][j] = c[i][j] + o.c[i][j];
    return out;
}
Tensor11 Tensor11::operator-(const Tensor11& o) const {
    Tensor11 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.c[i][j] = c[i][j] - o.c[i][j];
    return out;
}
Tensor11 Tensor11::scaled(const Scalar& s) const {
    Tensor11 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.c[i][j] = c[i][j].scaled(s);
    return out;
}
bool Tensor11::operator==(const Tensor11& o) const { return (*this - o).is_zero(); }
std::string Tensor11::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (c[i][j].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << coeff_str(c[i][j]) << " " << kBasis1Names[i] << "(x)" << kBasis1Names[j];
        }
    return first ? "0" : os.str();
}

bool Tensor21::is_zero() const {
    for (const auto& row : c)
        if (!arr_zero(row)) return false;
    return true;
}
Tensor21 Tensor21::operator+(const Tensor21& o) const {
    Tensor21 out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) out.c[i][j] = c[i][j] + o.c[i][j];
    return out;
}
Tensor21 Tensor21::operator-(const Tensor21& o) const {
    Tensor21 out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) out.c[i][j] = c[i][j] - o.c[i][j];
    return out;
}
Tensor21 Tensor21::scaled(const Scalar& s) const {
    Tensor21 out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) out.c[i][j] = c[i][j].scaled(s);
    return out;
}
bool Tensor21::operator==(const Tensor21& o) const { return (*this - o).is_zero(); }
std::string Tensor21::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) {
            if (c[i][j].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << coeff_str(c[i][j]) << " " << kBasis2Names[i] << "(x)" << kBasis1Names[j];
        }
    return first ? "0" : os.str();
}

Tensor111::Tensor111() = default;
bool Tensor111::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}
Tensor111 Tensor111::operator+(const Tensor111& o) const {
    Tensor111 out;
    for (size_t i = 0; i < c.size(); ++i) out.c[i] = c[i] + o.c[i];
    return out;
}
Tensor111 Tensor111::operator-(const Tensor111& o) const {
    Tensor111 out;
    for (size_t i = 0; i < c.size(); ++i) out.c[i] = c[i] - o.c[i];
    return out;
}

// --- Calculus ------------------------------------------------------------------

Calculus::Calculus(std::shared_ptr<const FieldContext> ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("null field context");
    const FieldContext& c = *ctx_;
    mu_ = mu(c);
    mu_inv_ = mu_.inverse();
    ez_ = {Scalar::q_power(c, -2), Scalar::zero(c), Scalar::zero(c), -Scalar::one(c)};
    theta_ = {Scalar::one(c), Scalar::zero(c), Scalar::zero(c), Scalar::one(c)};
    build_wedge_table();
    build_ad_constants();
    if (c.is_root_of_unity()) build_push_table();
    build_d_table();
}

void Calculus::build_push_table() {
    const FieldContext& ctx = *ctx_;
    const int r = ctx.order();
    const int dim = basis_dimension(ctx);
    const Scalar muv = mu_;
    const Scalar mu2 = mu_ * mu_;

    auto qp = [&](long e) { return Scalar::q_power(ctx, e); };
    auto qi = [&](long n) { return q_int(ctx, n); };
    auto wrap = [&](int m) { return ((m % r) + r) % r; };

    for (int i = 0; i < 4; ++i) push_tab_[static_cast<size_t>(i)].resize(static_cast<size_t>(dim));

    for (int idx = 0; idx < dim; ++idx) {
        const Monomial f = monomial_at(ctx, idx);
        const int k = f.k, n = f.n, m = f.m;

        auto put = [&](int which, int form, int kk, int nn, int mm, Scalar coeff) {
            if (coeff.is_zero()) return;
            if (kk < 0 || nn < 0 || kk >= r || nn >= r) return;  // b^r = c^r = 0, negatives omitted
            push_tab_[static_cast<size_t>(which)][static_cast<size_t>(idx)].push_back(
                PushTerm{form, Monomial{kk, nn, wrap(mm)}, std::move(coeff)});
        };

        // e_a . f = q^{k-m-n} f e_a
        put(EA, EA, k, n, m, qp(k - m - n));

        // e_b . f = f e_b + q^{2-m-n} mu [n] c^k b^{n-1} d^{m-1} e_a
        //                 + q^{1-n} mu [m+n] c^{k+1} b^n d^{m-1} e_a
        put(EB, EB, k, n, m, Scalar::one(ctx));
        put(EB, EA, k, n - 1, m - 1, qp(2 - m - n) * muv * qi(n));
        put(EB, EA, k + 1, n, m - 1, qp(1 - n) * muv * qi(m + n));

        // e_c . f = f e_c + q^{k-m} mu [k] c^{k-1} b^n d^{m+1} e_a
        put(EC, EC, k, n, m, Scalar::one(ctx));
        put(EC, EA, k - 1, n, m + 1, qp(k - m) * muv * qi(k));

        // e_d . f = q mu^2 ([k+1][m+n] f + q^{-m} [k][n] c^{k-1} b^{n-1} d^m) e_a
        //         + mu [k] q^n c^{k-1} b^n d^{m+1} e_b
        //         + q^{-k} mu ([n] c^k b^{n-1} d^{m-1}
        //                      + q^{-1} (q^{m+n}[m] + [n]) c^{k+1} b^n d^{m-1}) e_c
        //         + q^{m+n-k} f e_d
        put(ED, EA, k, n, m, qp(1) * mu2 * qi(k + 1) * qi(m + n));
        put(ED, EA, k - 1, n - 1, m, qp(1 - m) * mu2 * qi(k) * qi(n));
        put(ED, EB, k - 1, n, m + 1, muv * qi(k) * qp(n));
        put(ED, EC, k, n - 1, m - 1, qp(-k) * muv * qi(n));
        put(ED, EC, k + 1, n, m - 1, qp(-k - 1) * muv * (qp(m + n) * qi(m) + qi(n)));
        put(ED, ED, k, n, m, qp(m + n - k));
    }
}

void Calculus::build_wedge_table() {
    const FieldContext& ctx = *ctx_;
    for (auto& row : wedge_tab_)
        for (auto& cell : row) cell.fill(Scalar::zero(ctx));

    auto one = Scalar::one(ctx);
    // e_a, e_b, e_c pairwise Grassmann
    wedge_tab_[EA][EB][EAB] = one;
    wedge_tab_[EA][EC][EAC] = one;
    wedge_tab_[EA][ED][EAD] = one;
    wedge_tab_[EB][EC][EBC] = one;
    wedge_tab_[EB][ED][EBD] = one;
    wedge_tab_[EC][ED][ECD] = one;
    wedge_tab_[EB][EA][EAB] = -one;
    wedge_tab_[EC][EA][EAC] = -one;
    wedge_tab_[EC][EB][EBC] = -one;
    // e_d from the left: unique rewrite into the ordered basis
    wedge_tab_[ED][EA][EAD] = -one;
    wedge_tab_[ED][EA][EBC] = mu_;
    wedge_tab_[ED][EB][EBD] = -Scalar::q_power(ctx, -2);
    wedge_tab_[ED][EB][EAB] = Scalar::q_power(ctx, -2) * mu_;
    wedge_tab_[ED][EC][ECD] = -Scalar::q_power(ctx, 2);
    wedge_tab_[ED][EC][EAC] = -mu_;
    wedge_tab_[ED][ED][EBC] = -mu_;
}

void Calculus::build_d_table() {
    const FieldContext& ctx = *ctx_;
    for (auto& row : d_tab_) row.fill(Scalar::zero(ctx));
    auto one = Scalar::one(ctx);
    // d e_a = -e_c ^ e_b = e_bc ;  d e_d = e_c ^ e_b = -e_bc
    d_tab_[EA][EBC] = one;
    d_tab_[ED][EBC] = -one;
    // d e_b = -e_b ^ e_z = q^{-2} e_ab + e_bd
    d_tab_[EB][EAB] = Scalar::q_power(ctx, -2);
    d_tab_[EB][EBD] = one;
    // d e_c = q^2 e_c ^ e_z = -e_ac - q^2 e_cd
    d_tab_[EC][EAC] = -one;
    d_tab_[EC][ECD] = -Scalar::q_power(ctx, 2);
}

void Calculus::build_ad_constants() {
    const FieldContext& ctx = *ctx_;
    for (auto& a : ad_.L)
        for (auto& b : a) b.fill(Scalar::zero(ctx));
    for (auto& a : ad_.R)
        for (auto& b : a) b.fill(Scalar::zero(ctx));

    const Scalar one = Scalar::one(ctx);
    const Scalar q2 = Scalar::q_power(ctx, 2);
    const Scalar qm2 = Scalar::q_power(ctx, -2);
    const Scalar mix = q2 - one - qm2;  // q^2 - 1 - q^{-2}

    auto setR = [&](int j, int k, int i, const Scalar& v) { ad_.R[j][k][i] = v; };
    auto setL = [&](int j, int k, int i, const Scalar& v) { ad_.L[j][k][i] = v; };

    // ad_R(e_a) = e_c(x)e_b - e_b(x)e_c + mu (e_a - q^2 e_d)(x)e_a ; ad_R(e_d) = -ad_R(e_a)
    setR(EC, EB, EA, one);
    setR(EB, EC, EA, -one);
    setR(EA, EA, EA, mu_);
    setR(ED, EA, EA, -(q2 * mu_));
    setR(EC, EB, ED, -one);
    setR(EB, EC, ED, one);
    setR(EA, EA, ED, -mu_);
    setR(ED, EA, ED, q2 * mu_);
    // ad_R(e_b) = e_b(x)(q^2 e_a - e_d) - (q^{-2} e_a - e_d)(x)e_b
    setR(EB, EA, EB, q2);
    setR(EB, ED, EB, -one);
    setR(EA, EB, EB, -qm2);
    setR(ED, EB, EB, one);
    // ad_R(e_c) = e_c(x)((q^2-1-q^{-2}) e_a + q^2 e_d) + (e_a - q^2 e_d)(x)e_c
    setR(EC, EA, EC, mix);
    setR(EC, ED, EC, q2);
    setR(EA, EC, EC, one);
    setR(ED, EC, EC, -q2);

    // ad_L(e_a) = e_c(x)e_b - e_b(x)e_c + mu e_a(x)(e_a - q^2 e_d) ; ad_L(e_d) = -ad_L(e_a)
    setL(EC, EB, EA, one);
    setL(EB, EC, EA, -one);
    setL(EA, EA, EA, mu_);
    setL(EA, ED, EA, -(q2 * mu_));
    setL(EC, EB, ED, -one);
    setL(EB, EC, ED, one);
    setL(EA, EA, ED, -mu_);
    setL(EA, ED, ED, q2 * mu_);
    // ad_L(e_c) = (q^2 e_a - e_d)(x)e_c - e_c(x)(q^{-2} e_a - e_d)
    setL(EA, EC, EC, q2);
    setL(ED, EC, EC, -one);
    setL(EC, EA, EC, -qm2);
    setL(EC, ED, EC, one);
    // ad_L(e_b) = ((q^2-1-q^{-2}) e_a + q^2 e_d)(x)e_b + e_b(x)(e_a - q^2 e_d)
    setL(EA, EB, EB, mix);
    setL(ED, EB, EB, q2);
    setL(EB, EA, EB, one);
    setL(EB, ED, EB, -q2);
}

Form1 Calculus::push_left(int i, const AlgebraElement& f) const {
    const FieldContext& ctx = *ctx_;
    Form1 out;
    if (f.is_zero()) return out;
    if (!ctx.is_root_of_unity()) {
        // only scalar multiples of the unit exist here; e_i commutes with them
        for (const auto& [mon, coeff] : f.terms()) {
            if (mon.k || mon.n || mon.m) throw std::domain_error("push_left on nontrivial monomial requires root-of-unity mode");
            out.c[static_cast<size_t>(i)] += AlgebraElement::monomial(ctx, mon, coeff);
        }
        return out;
    }
    for (const auto& [mon, coeff] : f.terms()) {
        const auto& terms = push_tab_[static_cast<size_t>(i)][static_cast<size_t>(monomial_index(ctx, mon))];
        for (const auto& t : terms)
            out.c[static_cast<size_t>(t.form)].add_term(t.mon, coeff * t.coeff);
    }
    return out;
}

const std::array<Scalar, 6>& Calculus::wedge_basis(int i, int j) const {
    return wedge_tab_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Form2 Calculus::wedge_form_basis(const Form1& alpha, int j) const {
    Form2 out;
    for (int i = 0; i < 4; ++i) {
        if (alpha.c[static_cast<size_t>(i)].is_zero()) continue;
        const auto& w = wedge_basis(i, j);
        for (int t = 0; t < 6; ++t)
            if (!w[static_cast<size_t>(t)].is_zero())
                out.c[static_cast<size_t>(t)] += alpha.c[static_cast<size_t>(i)].scaled(w[static_cast<size_t>(t)]);
    }
    return out;
}

Form2 Calculus::wedge11(const Form1& alpha, const Form1& beta) const {
    Form2 out;
    for (int j = 0; j < 4; ++j) {
        const AlgebraElement& g = beta.c[static_cast<size_t>(j)];
        if (g.is_zero()) continue;
        for (int i = 0; i < 4; ++i) {
            const AlgebraElement& f = alpha.c[static_cast<size_t>(i)];
            if (f.is_zero()) continue;
            const Form1 pushed = push_left(i, g);
            for (int p = 0; p < 4; ++p) {
                if (pushed.c[static_cast<size_t>(p)].is_zero()) continue;
                const auto& w = wedge_basis(p, j);
                for (int t = 0; t < 6; ++t)
                    if (!w[static_cast<size_t>(t)].is_zero())
                        out.c[static_cast<size_t>(t)] +=
                            (f * pushed.c[static_cast<size_t>(p)]).scaled(w[static_cast<size_t>(t)]);
            }
        }
    }
    return out;
}

Form1 Calculus::d0(const AlgebraElement& f) const {
    // d f = mu^{-1} (theta f - f theta), theta = e_a + e_d
    Form1 out = push_left(EA, f) + push_left(ED, f);
    out.c[EA] -= f;
    out.c[ED] -= f;
    return out.scaled(mu_inv_);
}

Form2 Calculus::d1(const Form1& omega) const {
    Form2 out;
    for (int i = 0; i < 4; ++i) {
        const AlgebraElement& f = omega.c[static_cast<size_t>(i)];
        if (f.is_zero()) continue;
        out = out + wedge_form_basis(d0(f), i);
        const auto& de = d_tab_[static_cast<size_t>(i)];
        for (int t = 0; t < 6; ++t)
            if (!de[static_cast<size_t>(t)].is_zero()) out.c[static_cast<size_t>(t)] += f.scaled(de[static_cast<size_t>(t)]);
    }
    return out;
}

const std::array<Scalar, 6>& Calculus::d_basis(int i) const { return d_tab_[static_cast<size_t>(i)]; }

std::array<AlgebraElement, 4> Calculus::partials(const AlgebraElement& f) const {
    Form1 df = d0(f);
    return {df.c[0], df.c[1], df.c[2], df.c[3]};
}

std::array<Scalar, 4> Calculus::tilde_pi(const AlgebraElement& f) const {
    Form1 df = d0(f);
    return {df.c[0].counit(), df.c[1].counit(), df.c[2].counit(), df.c[3].counit()};
}

Form1 Calculus::tilde_pi_form(const AlgebraElement& f) const { return constant_form(tilde_pi(f)); }

std::vector<AlgebraElement> Calculus::ker_tilde_pi_basis() const {
    const FieldContext& ctx = *ctx_;
    if (!ctx.is_root_of_unity()) throw std::domain_error("kernel basis requires root-of-unity mode");
    const int dim = basis_dimension(ctx);
    ScalarMatrix eval(ctx, 4, dim);
    for (int idx = 0; idx < dim; ++idx) {
        auto pi = tilde_pi(AlgebraElement::monomial(ctx, monomial_at(ctx, idx)));
        for (int i = 0; i < 4; ++i) eval.set(i, idx, pi[static_cast<size_t>(i)]);
    }
    std::vector<AlgebraElement> basis;
    for (const auto& v : nullspace(eval)) {
        AlgebraElement f = AlgebraElement::zero(ctx);
        for (int idx = 0; idx < dim; ++idx)
            if (!v[static_cast<size_t>(idx)].is_zero()) f.add_term(monomial_at(ctx, idx), v[static_cast<size_t>(idx)]);
        basis.push_back(std::move(f));
    }
    return basis;
}

Form1 Calculus::basis_form(int i) const {
    Form1 out;
    out.c[static_cast<size_t>(i)] = AlgebraElement::unit(*ctx_);
    return out;
}

Form1 Calculus::constant_form(const std::array<Scalar, 4>& comps) const {
    Form1 out;
    for (int i = 0; i < 4; ++i)
        if (!comps[static_cast<size_t>(i)].is_zero())
            out.c[static_cast<size_t>(i)] = AlgebraElement::monomial(*ctx_, Monomial{0, 0, 0}, comps[static_cast<size_t>(i)]);
    return out;
}

Tensor11 Calculus::tensor_normalize(
    const std::vector<std::tuple<AlgebraElement, int, AlgebraElement, int>>& terms) const {
    Tensor11 out;
    for (const auto& [f, i, g, j] : terms) {
        const Form1 pushed = push_left(i, g);
        for (int p = 0; p < 4; ++p) {
            if (pushed.c[static_cast<size_t>(p)].is_zero()) continue;
            out.c[static_cast<size_t>(p)][static_cast<size_t>(j)] += f * pushed.c[static_cast<size_t>(p)];
        }
    }
    return out;
}

}  // namespace qsl2
