#pragma once

// Spinor bundle, gamma map, connection term and Dirac operator on the reduced
// algebra at an odd root of unity, with exact spectrum and the full r = 3
// mode table.
//
// Spinors are pairs of algebra elements; the operator acts on coefficient
// vectors of length 2 r^3 ordered (component, monomial).  The partial
// derivative blocks arrange as [[d^a, d^b], [d^c, d^d]] and the canonical
// connection contributes the constant offset [3]/[4].

#include <complex>

#include "qsl2/connection.hpp"
#include "qsl2/linalg.hpp"

namespace qsl2 {

struct Mat2 {
    std::array<std::array<Scalar, 2>, 2> m;
};

// gamma(e_a), gamma(e_b), ... as elementary 2x2 matrices.
Mat2 gamma_matrix(const FieldContext& ctx, int i);

// A-slash^alpha_beta = A(pi~ S^{-1} t^gamma_beta)^alpha_gamma, evaluated from
// the engine's pi~ and the inverse-antipode data on generators.
Mat2 aslash(const Calculus& calc, const Connection& A);

struct Spinor {
    AlgebraElement c1, c2;
    bool operator==(const Spinor& o) const { return c1 == o.c1 && c2 == o.c2; }
};

struct DiracMatrix {
    ScalarMatrix mat;
    bool normalized;
    bool with_connection;
    Scalar offset;  // scalar added to the diagonal by the connection term
};

DiracMatrix assemble_dirac(const Calculus& calc, bool normalized = true, bool with_connection = true);

std::vector<Scalar> spinor_to_vector(const Calculus& calc, const Spinor& v);
Spinor vector_to_spinor(const Calculus& calc, const std::vector<Scalar>& x);
Spinor apply_dirac(const Calculus& calc, const DiracMatrix& D, const Spinor& v);

struct EigenRecord {
    int m = 0;                    // candidate index: lambda_m = mu^{-1}(q^m - 1)
    Scalar eigenvalue;
    int dim = 0;                  // eigenspace dimension
    int generalized_dim = 0;      // dim ker (M - lambda)^r
    std::complex<double> embedding;
};

// Exact spectrum of the slashed derivative (no connection offset).  jobs > 1
// computes the per-candidate nullities concurrently.
std::vector<EigenRecord> dirac_spectrum(const Calculus& calc, bool normalized = true, int jobs = 1);

// Characteristic polynomial of the slashed derivative, lowest degree first.
std::vector<Scalar> dirac_char_poly(const Calculus& calc, bool normalized = true);

// Swap components, map a<->d, b<->c and conjugate q -> q^{-1}.
Spinor charge_conjugate(const Calculus& calc, const Spinor& v);
AlgebraElement charge_conjugate(const Calculus& calc, const AlgebraElement& f);

// The listed eigenmode table at r = 3, grouped by eigenvalue 0, -1, q^2.
std::array<std::vector<Spinor>, 3> listed_modes_r3(const Calculus& calc);

struct ModeVerification {
    bool eigen_equations_hold = false;   // every listed mode satisfies D v = lambda v
    bool independent = false;            // the 38 listed vectors are independent
    std::array<int, 3> listed_counts{};  // 14, 12, 12
    std::array<int, 3> eigen_dims{};     // computed eigenspace dimensions
    bool spans_match = false;            // counts equal dimensions
    bool conjugation_preserves_spans = false;
    bool zero_components_in_massless_span = false;
};
ModeVerification verify_modes_r3(const Calculus& calc);

struct OffsetReport {
    Scalar exact;                    // [3]/[4] (balanced q-integers)
    std::complex<double> embedded;   // at q = exp(2 pi i / r)
    double sine_ratio;               // sin(6 pi / r) / sin(8 pi / r)
};
OffsetReport offset_report(const FieldContext& ctx);

}  // namespace qsl2
