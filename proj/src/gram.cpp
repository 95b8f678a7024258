#include "leechtheta/gram.hpp"

#include <algorithm>

#include "leechtheta/errors.hpp"

namespace leechtheta {

GramMatrix::GramMatrix(int dim, std::vector<int64_t> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(dim) * dim)
        throw PreconditionError("gram entry count does not match dimension");
    if (!is_symmetric())
        throw PreconditionError("gram matrix must be symmetric");
}

bool GramMatrix::is_symmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool GramMatrix::is_even() const {
    for (int i = 0; i < dim_; ++i)
        if ((*this)(i, i) % 2 != 0) return false;
    return true;
}

namespace {

std::vector<std::vector<Integer>> to_big(const GramMatrix& g, int k) {
    std::vector<std::vector<Integer>> m(static_cast<size_t>(k), std::vector<Integer>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = g(i, j);
    return m;
}

} // namespace

bool GramMatrix::is_positive_definite() const {
    if (dim_ == 0) return false;
    for (int k = 1; k <= dim_; ++k)
        if (integer_det(to_big(*this, k)) <= 0) return false;
    return true;
}

Integer GramMatrix::det() const { return integer_det(to_big(*this, dim_)); }

Integer GramMatrix::norm(const LatticeVector& x) const { return inner(x, x); }

Integer GramMatrix::inner(const LatticeVector& x, const LatticeVector& y) const {
    Integer acc = 0;
    for (int i = 0; i < dim_; ++i) {
        int64_t row = 0;
        for (int j = 0; j < dim_; ++j) row += (*this)(i, j) * y.coords[static_cast<size_t>(j)];
        acc += Integer(x.coords[static_cast<size_t>(i)]) * row;
    }
    return acc;
}

GramMatrix binary_form_gram(int64_t m, int64_t r, int64_t n) {
    if (m <= 0 || 4 * m * n - r * r <= 0)
        throw NotPositiveDefinite("binary form [" + std::to_string(m) + "," + std::to_string(r) +
                                  "," + std::to_string(n) + "] is not positive definite");
    return GramMatrix(2, {2 * m, r, r, 2 * n});
}

Integer integer_det(const std::vector<std::vector<Integer>>& mat) {
    // Bareiss fraction-free elimination.
    auto a = mat;
    size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<std::vector<Integer>> hnf_row_basis(std::vector<std::vector<Integer>> rows) {
    if (rows.empty()) return rows;
    size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        // Euclidean sweep: reduce all rows below `rank` against each other in
        // this column until at most one nonzero entry remains.
        while (true) {
            size_t piv = rows.size();
            for (size_t i = rank; i < rows.size(); ++i) {
                if (rows[i][col] != 0 && (piv == rows.size() ||
                        abs(rows[i][col]) < abs(rows[piv][col])))
                    piv = i;
            }
            if (piv == rows.size()) break; // column already zero below rank
            std::swap(rows[rank], rows[piv]);
            if (rows[rank][col] < 0)
                for (auto& v : rows[rank]) v = -v;
            bool clean = true;
            for (size_t i = rank + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[rank][col].get_mpz_t());
                for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[rank][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[rank][col] != 0) {
            // Reduce the rows above to put the column into normal form.
            for (size_t i = 0; i < rank; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[rank][col].get_mpz_t());
                if (q != 0)
                    for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[rank][j];
            }
            ++rank;
        }
    }
    rows.resize(rank);
    return rows;
}

} // namespace leechtheta
