#include "qsl2/linalg.hpp"

#include <algorithm>
#include <limits>

namespace qsl2 {

ScalarMatrix::ScalarMatrix(const FieldContext& ctx, int rows, int cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), rows_data_(static_cast<size_t>(rows)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void ScalarMatrix::set(int r, int c, Scalar v) {
    auto& row = rows_data_[static_cast<size_t>(r)];
    if (v.is_zero())
        row.erase(c);
    else
        row[c] = std::move(v);
}

void ScalarMatrix::add(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = rows_data_[static_cast<size_t>(r)];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
}

Scalar ScalarMatrix::get(int r, int c) const {
    const auto& row = rows_data_[static_cast<size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? Scalar::zero(*ctx_) : it->second;
}

long ScalarMatrix::nonzeros() const {
    long n = 0;
    for (const auto& row : rows_data_) n += static_cast<long>(row.size());
    return n;
}

ScalarMatrix ScalarMatrix::identity(const FieldContext& ctx, int n) {
    ScalarMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(ctx));
    return m;
}

ScalarMatrix ScalarMatrix::multiply(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    ScalarMatrix out(*ctx_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        std::map<int, Scalar> acc;
        for (const auto& [k, v] : rows_data_[static_cast<size_t>(i)]) {
            for (const auto& [j, w] : o.rows_data_[static_cast<size_t>(k)]) {
                auto it = acc.find(j);
                if (it == acc.end())
                    acc.emplace(j, v * w);
                else
                    it->second += v * w;
            }
        }
        for (auto& [j, v] : acc)
            if (!v.is_zero()) out.rows_data_[static_cast<size_t>(i)].emplace(j, std::move(v));
    }
    return out;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Scalar acc;
        for (const auto& [j, w] : rows_data_[static_cast<size_t>(i)]) {
            if (v[static_cast<size_t>(j)].is_zero()) continue;
            acc += w * v[static_cast<size_t>(j)];
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

namespace {

// Fully reduced echelon form over the scalar field.  Columns >= pivot_limit
// are never chosen as pivots (used to carry right-hand sides).  Pivot choice:
// among columns of minimal active count pick the lowest index, then within
// that column the row with fewest nonzeros (lowest index on ties).
struct Echelon {
    std::vector<std::map<int, Scalar>> rows;
    std::vector<std::pair<int, int>> pivots;  // (row index, column)
};

Echelon reduce(std::vector<std::map<int, Scalar>> rows, int pivot_limit) {
    const size_t nrows = rows.size();
    std::vector<int> col_count(static_cast<size_t>(pivot_limit), 0);
    std::vector<char> active(nrows, 1);
    for (const auto& row : rows)
        for (const auto& [c, v] : row)
            if (c < pivot_limit) ++col_count[static_cast<size_t>(c)];

    Echelon out;
    while (true) {
        int best_col = -1;
        int best_count = std::numeric_limits<int>::max();
        for (int c = 0; c < pivot_limit; ++c) {
            if (col_count[static_cast<size_t>(c)] > 0 && col_count[static_cast<size_t>(c)] < best_count) {
                best_count = col_count[static_cast<size_t>(c)];
                best_col = c;
            }
        }
        if (best_col < 0) break;

        int best_row = -1;
        size_t best_nnz = std::numeric_limits<size_t>::max();
        for (size_t r = 0; r < nrows; ++r) {
            if (!active[r]) continue;
            const auto it = rows[r].find(best_col);
            if (it == rows[r].end()) continue;
            if (rows[r].size() < best_nnz) {
                best_nnz = rows[r].size();
                best_row = static_cast<int>(r);
            }
        }
        if (best_row < 0) throw std::logic_error("column count bookkeeping broke");

        auto& prow = rows[static_cast<size_t>(best_row)];
        const Scalar inv = prow.at(best_col).inverse();
        for (auto& [c, v] : prow) v *= inv;

        for (size_t r = 0; r < nrows; ++r) {
            if (static_cast<int>(r) == best_row) continue;
            auto it = rows[r].find(best_col);
            if (it == rows[r].end()) continue;
            const bool count_row = active[r] != 0;  // col_count tracks active rows only
            const Scalar f = it->second;
            for (const auto& [c, v] : prow) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    Scalar nv = -(f * v);
                    if (!nv.is_zero()) {
                        rows[r].emplace(c, std::move(nv));
                        if (count_row && c < pivot_limit) ++col_count[static_cast<size_t>(c)];
                    }
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) {
                        rows[r].erase(jt);
                        if (count_row && c < pivot_limit) --col_count[static_cast<size_t>(c)];
                    }
                }
            }
        }

        active[static_cast<size_t>(best_row)] = 0;
        for (const auto& [c, v] : prow)
            if (c < pivot_limit) --col_count[static_cast<size_t>(c)];
        out.pivots.emplace_back(best_row, best_col);
    }
    out.rows = std::move(rows);
    std::sort(out.pivots.begin(), out.pivots.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<std::map<int, Scalar>> copy_rows(const ScalarMatrix& m) {
    std::vector<std::map<int, Scalar>> rows;
    rows.reserve(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

std::vector<std::vector<Scalar>> kernel_from_echelon(const Echelon& e, const FieldContext& ctx, int cols) {
    std::vector<char> is_pivot_col(static_cast<size_t>(cols), 0);
    for (const auto& [r, c] : e.pivots) is_pivot_col[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot_col[static_cast<size_t>(f)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(f)] = Scalar::one(ctx);
        for (const auto& [r, c] : e.pivots) {
            const auto& row = e.rows[static_cast<size_t>(r)];
            auto it = row.find(f);
            if (it != row.end()) v[static_cast<size_t>(c)] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

int rank(const ScalarMatrix& m) {
    return static_cast<int>(reduce(copy_rows(m), m.cols()).pivots.size());
}

int nullity(const ScalarMatrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m) {
    Echelon e = reduce(copy_rows(m), m.cols());
    return kernel_from_echelon(e, m.context(), m.cols());
}

LinearSolution solve(const ScalarMatrix& m, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("rhs length mismatch");
    const int n = m.cols();
    auto rows = copy_rows(m);
    for (int r = 0; r < m.rows(); ++r) {
        if (!b[static_cast<size_t>(r)].is_zero()) rows[static_cast<size_t>(r)][n] = b[static_cast<size_t>(r)];
    }
    Echelon e = reduce(std::move(rows), n);

    LinearSolution out;
    out.consistent = true;
    for (const auto& row : e.rows) {
        if (row.size() == 1 && row.count(n)) {
            out.consistent = false;
            break;
        }
    }
    out.kernel = kernel_from_echelon(e, m.context(), n);
    if (out.consistent) {
        out.particular.assign(static_cast<size_t>(n), Scalar());
        for (const auto& [r, c] : e.pivots) {
            const auto& row = e.rows[static_cast<size_t>(r)];
            auto it = row.find(n);
            if (it != row.end()) out.particular[static_cast<size_t>(c)] = it->second;
        }
    }
    return out;
}

std::vector<int> power_kernel_dims(const ScalarMatrix& m, int max_power) {
    if (m.rows() != m.cols()) throw std::invalid_argument("power kernels require a square matrix");
    const FieldContext& ctx = m.context();
    const int n = m.cols();

    std::vector<int> dims;
    std::vector<std::vector<Scalar>> kernel = nullspace(m);
    dims.push_back(static_cast<int>(kernel.size()));

    while (static_cast<int>(dims.size()) < max_power) {
        const int kdim = static_cast<int>(kernel.size());
        if (kdim == 0 || kdim == n) break;
        // ker(M^{p+1}) = preimage of ker(M^p): pairs (x, c) with M x = K c.
        ScalarMatrix aug(ctx, n, n + kdim);
        for (int r = 0; r < n; ++r)
            for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
        for (int j = 0; j < kdim; ++j)
            for (int r = 0; r < n; ++r)
                if (!kernel[static_cast<size_t>(j)][static_cast<size_t>(r)].is_zero())
                    aug.set(r, n + j, -kernel[static_cast<size_t>(j)][static_cast<size_t>(r)]);
        auto lifted = nullspace(aug);
        std::vector<std::vector<Scalar>> next;
        next.reserve(lifted.size());
        for (auto& w : lifted) next.emplace_back(w.begin(), w.begin() + n);
        if (static_cast<int>(next.size()) == kdim) break;  // stabilized
        kernel = std::move(next);
        dims.push_back(static_cast<int>(kernel.size()));
    }
    while (static_cast<int>(dims.size()) < max_power) dims.push_back(dims.back());
    return dims;
}

}  // namespace qsl2
