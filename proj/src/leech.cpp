#include "leechtheta/leech.hpp"

#include "leechtheta/errors.hpp"

namespace leechtheta {

GramMatrix build_leech_gram(const GolayCode& code) {
    // Generators of the unscaled lattice 8*L inside Z^24 (inner products are
    // 8x the Leech values):
    //   2c      for the twelve weight-8 generator words c,
    //   4(e0-ei), 8 e0,
    //   (-3, 1, ..., 1).
    // Membership: x == xi*(1,...,1) mod 2, (x - xi*1)/2 mod 2 in the code,
    // sum(x) == 4*xi mod 8.
    std::vector<std::vector<Integer>> rows;
    for (uint32_t c : code.octad_basis()) {
        std::vector<Integer> row(24, 0);
        for (int i = 0; i < 24; ++i)
            if (c & (1u << i)) row[static_cast<size_t>(i)] = 2;
        rows.push_back(std::move(row));
    }
    for (int i = 1; i < 24; ++i) {
        std::vector<Integer> row(24, 0);
        row[0] = 4;
        row[static_cast<size_t>(i)] = -4;
        rows.push_back(std::move(row));
    }
    {
        std::vector<Integer> row(24, 0);
        row[0] = 8;
        rows.push_back(std::move(row));
    }
    {
        std::vector<Integer> row(24, 1);
        row[0] = -3;
        rows.push_back(std::move(row));
    }

    auto basis = hnf_row_basis(std::move(rows));
    if (basis.size() != 24)
        throw ConstructionInvariantViolated("leech generators do not span rank 24");

    GramMatrix gram(24);
    for (int i = 0; i < 24; ++i) {
        for (int j = i; j < 24; ++j) {
            Integer dot = 0;
            for (int k = 0; k < 24; ++k)
                dot += basis[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                       basis[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (dot % 8 != 0)
                throw ConstructionInvariantViolated("leech gram is not integral after scaling");
            Integer v = dot / 8;
            if (!v.fits_slong_p())
                throw ConstructionInvariantViolated("leech gram entry out of range");
            gram(i, j) = gram(j, i) = v.get_si();
        }
    }

    if (!gram.is_even())
        throw ConstructionInvariantViolated("leech gram is not even");
    if (gram.det() != 1)
        throw ConstructionInvariantViolated("leech gram determinant is not 1");
    return gram;
}

const GramMatrix& leech_gram() {
    static const GramMatrix gram = build_leech_gram(GolayCode());
    return gram;
}

} // namespace leechtheta
