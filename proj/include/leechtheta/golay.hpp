#ifndef LEECHTHETA_GOLAY_HPP
#define LEECHTHETA_GOLAY_HPP

#include <cstdint>
#include <vector>

namespace leechtheta {

// The extended binary Golay code: a self-dual [24,12,8] code. Words are
// bitmasks, bit i = coordinate i.
class GolayCode {
public:
    // Builds the code from the length-23 quadratic-residue cyclic code
    // extended by a parity bit, then checks the defining invariants
    // (4096 words, minimum weight 8, self-dual). Throws
    // ConstructionInvariantViolated on failure.
    GolayCode();

    const std::vector<uint32_t>& basis() const { return basis_; }

    // All 4096 codewords, sorted ascending as integers.
    std::vector<uint32_t> words() const;

    // Basis consisting of weight-8 words (the generator rows already have
    // weight 8 in this construction).
    const std::vector<uint32_t>& octad_basis() const { return basis_; }

    bool contains(uint32_t word) const;

    int min_nonzero_weight() const;
    int count_weight(int w) const;

private:
    std::vector<uint32_t> basis_; // 12 generator words
};

} // namespace leechtheta

#endif
