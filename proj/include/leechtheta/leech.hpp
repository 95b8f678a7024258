#ifndef LEECHTHETA_LEECH_HPP
#define LEECHTHETA_LEECH_HPP

#include "leechtheta/golay.hpp"
#include "leechtheta/gram.hpp"

namespace leechtheta {

// Gram matrix of the Leech lattice: 24x24, even, determinant 1, no vectors
// of norm 2. Built from the extended binary Golay code; the invariants are
// checked at construction time (the shell counts are left to the test and
// acceptance suites, which also pin 196560 at norm 4). The result is cached
// per process.
const GramMatrix& leech_gram();

// The construction route without the cache, for fixture self-tests.
GramMatrix build_leech_gram(const GolayCode& code);

} // namespace leechtheta

#endif
