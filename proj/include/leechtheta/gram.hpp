#ifndef LEECHTHETA_GRAM_HPP
#define LEECHTHETA_GRAM_HPP

#include <cstdint>
#include <vector>

#include "leechtheta/rational.hpp"

namespace leechtheta {

// Coordinates of a lattice vector in the basis implied by a Gram matrix.
struct LatticeVector {
    std::vector<int64_t> coords;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

// Exact integer symmetric matrix of inner products.
class GramMatrix {
public:
    GramMatrix() = default;
    explicit GramMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim, 0) {}
    GramMatrix(int dim, std::vector<int64_t> entries);

    int dim() const { return dim_; }
    int64_t operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    int64_t& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<int64_t>& entries() const { return entries_; }

    bool is_symmetric() const;
    bool is_even() const;          // even diagonal
    bool is_positive_definite() const; // exact, via leading principal minors
    Integer det() const;           // exact

    // x^T S x, exact.
    Integer norm(const LatticeVector& x) const;
    // x^T S y, exact.
    Integer inner(const LatticeVector& x, const LatticeVector& y) const;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    int dim_ = 0;
    std::vector<int64_t> entries_;
};

// Gram matrix 2S = [[2m, r], [r, 2n]] of a binary quadratic form; throws
// NotPositiveDefinite unless 4mn - r^2 > 0 and m > 0.
GramMatrix binary_form_gram(int64_t m, int64_t r, int64_t n);

// Exact determinant of an integer matrix (fraction-free elimination).
Integer integer_det(const std::vector<std::vector<Integer>>& mat);

// Row-style Hermite normal form basis of the lattice generated by the rows.
// Input rows may be linearly dependent; the result has full row rank.
std::vector<std::vector<Integer>> hnf_row_basis(std::vector<std::vector<Integer>> rows);

} // namespace leechtheta

#endif
