#ifndef LEECHTHETA_ENUMERATE_HPP
#define LEECHTHETA_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "leechtheta/gram.hpp"

namespace leechtheta {

struct EnumOptions {
    unsigned threads = 1;
};

// Lattice point enumeration for a fixed positive definite Gram matrix.
//
// Preparation applies an internal unimodular change of basis (integer size
// reduction and swap passes) and picks a level ordering that minimizes a
// volume-heuristic node count; results are always reported in the original
// coordinates. Floating-point Cholesky data drives interval pruning with a
// widening margin, and every candidate is checked by exact integer
// arithmetic before it contributes to any count or stream.
class ShellEnumerator {
public:
    explicit ShellEnumerator(const GramMatrix& gram); // throws NotPositiveDefinite

    const GramMatrix& gram() const { return gram_; }
    int dim() const { return dim_; }

    // counts[t] = #{x : x^T S x = t} for t = 0..t_max.
    std::vector<uint64_t> counts_up_to(int64_t t_max, const EnumOptions& opts = {}) const;

    uint64_t shell_count(int64_t t, const EnumOptions& opts = {}) const;

    // Distribution of s = v^T S y over {y : y^T S y = t}. Entry [s + offset]
    // is the count; offset is returned through *offset_out and equals the
    // Cauchy-Schwarz bound floor(sqrt((v^T S v) * t)).
    std::vector<uint64_t> inner_histogram(const LatticeVector& v, int64_t t,
                                          int64_t* offset_out,
                                          const EnumOptions& opts = {}) const;

    // #{y : y^T S y = t and v^T S y = s}; v must be nonzero.
    uint64_t count_constrained(const LatticeVector& v, int64_t t, int64_t s,
                               const EnumOptions& opts = {}) const;

    // Emits every x with x^T S x = t exactly once (both signs), in a
    // deterministic order independent of the thread count.
    void for_each_in_shell(int64_t t, const std::function<void(const LatticeVector&)>& fn,
                           const EnumOptions& opts = {}) const;

    std::vector<LatticeVector> shell_vectors(int64_t t, const EnumOptions& opts = {}) const;

    // Folded shell: one representative of each {x, -x} pair, in internal
    // reduced coordinates (inner products match the original gram). Used for
    // high-volume pair scans.
    std::vector<int32_t> folded_shell_reduced(int64_t t, const EnumOptions& opts = {}) const;

    const std::vector<int64_t>& reduced_gram_flat() const { return red_; }
    // Map a reduced-coordinate vector back to original coordinates.
    LatticeVector to_original(const int32_t* x) const;
    // Map an original-coordinate vector to reduced coordinates.
    std::vector<int64_t> to_reduced(const LatticeVector& v) const;

    // Volume-heuristic estimates (doubles; used for budget decisions only).
    double estimate_ball_points(int64_t t) const;
    double estimate_shell_points(int64_t t) const;

private:
    GramMatrix gram_;
    int dim_ = 0;
    std::vector<int64_t> red_;     // reduced gram, row-major
    std::vector<int64_t> umat_;    // x_original = U x_reduced, row-major
    std::vector<double> ratio_t_;  // cholesky ratios, transposed per level
    std::vector<double> diag_;     // cholesky diagonal
    std::vector<double> dualdiag_; // inflated diagonal of red_^{-1}
};

// Exhaustive oracle: scans the full coordinate box derived from the exact
// inverse Gram diagonal. Only for dim <= 6 (throws DimensionTooLarge).
// Returns both signs, sorted.
std::vector<LatticeVector> brute_force_shell(const GramMatrix& gram, int64_t t);

// Enumeration variant whose interval bounds come from an exact rational
// Cholesky decomposition; no floating point anywhere. Slow; used to
// arbitrate the float-pruned route in tests. dim <= 8.
std::vector<LatticeVector> enumerate_shell_exact(const GramMatrix& gram, int64_t t);

} // namespace leechtheta

#endif
