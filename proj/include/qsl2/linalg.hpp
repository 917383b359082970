#pragma once

// Exact sparse linear algebra over a Scalar field: rank, nullspace and
// inhomogeneous solves via Gaussian elimination with Markowitz-style pivot
// selection.  All arithmetic is exact; elimination order is deterministic so
// repeated runs produce identical bases.

#include <map>
#include <vector>

#include "qsl2/scalar.hpp"

namespace qsl2 {

class ScalarMatrix {
   public:
    ScalarMatrix(const FieldContext& ctx, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldContext& context() const { return *ctx_; }

    void set(int r, int c, Scalar v);
    void add(int r, int c, const Scalar& v);
    Scalar get(int r, int c) const;  // zero when absent
    const std::map<int, Scalar>& row(int r) const { return rows_data_[static_cast<size_t>(r)]; }

    long nonzeros() const;

    static ScalarMatrix identity(const FieldContext& ctx, int n);
    ScalarMatrix multiply(const ScalarMatrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M * v

   private:
    const FieldContext* ctx_;
    int rows_, cols_;
    std::vector<std::map<int, Scalar>> rows_data_;
};

int rank(const ScalarMatrix& m);
int nullity(const ScalarMatrix& m);

// Exact basis of ker M; empty iff M has full column rank.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m);

struct LinearSolution {
    bool consistent = false;
    std::vector<Scalar> particular;            // one solution of M x = b (when consistent)
    std::vector<std::vector<Scalar>> kernel;   // basis of ker M
};

LinearSolution solve(const ScalarMatrix& m, const std::vector<Scalar>& b);

// dim ker(M^k) for k = 1..max_power (stops early once the sequence stabilizes,
// padding with the stable value).  M must be square.
std::vector<int> power_kernel_dims(const ScalarMatrix& m, int max_power);

}  // namespace qsl2
