#ifndef LEECHTHETA_NUMTHEORY_HPP
#define LEECHTHETA_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

#include "leechtheta/rational.hpp"

namespace leechtheta {

// floor(sqrt(n)) for n >= 0.
int64_t isqrt64(int64_t n);

// Exact floor(sqrt(num/den)) for num >= 0, den > 0.
Integer isqrt_rational_floor(const Integer& num, const Integer& den);

bool is_prime(const Integer& n);

// Prime factorization by trial division (intended range: |n| < 2^52, as for
// every table value here). Returns (prime, exponent) pairs, ascending.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);

int moebius(const Integer& n);

// sigma_k(n) = sum of d^k over positive divisors d of n, n >= 1.
Integer sigma(const Integer& n, unsigned k);

std::vector<Integer> divisors(const Integer& n);

// Kronecker symbol (a|n), defined for all integers.
int kronecker(const Integer& a, const Integer& n);

// Bernoulli number B_n, convention B_1 = -1/2.
Rational bernoulli(unsigned n);

// Bernoulli polynomial B_n(x).
Rational bernoulli_poly(unsigned n, const Rational& x);

Integer binomial(unsigned n, unsigned k);

} // namespace leechtheta

#endif
