#ifndef LEECHTHETA_RATIONAL_HPP
#define LEECHTHETA_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "leechtheta/errors.hpp"

namespace leechtheta {

// Exact arithmetic types. mpq_class keeps values canonicalized (reduced,
// positive denominator), which the serialization format relies on.
using Integer  = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

// True if the denominator of q (in lowest terms) is not divisible by p.
inline bool is_p_integral(const Rational& q, const Integer& p) {
    return !mpz_divisible_p(q.get_den_mpz_t(), p.get_mpz_t());
}

inline Integer mod_nonneg(const Integer& a, const Integer& p) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

// Residue of q mod a prime p, in {0, ..., p-1}. Throws if p divides the
// denominator.
inline Integer residue_mod(const Rational& q, const Integer& p) {
    if (!is_p_integral(q, p))
        throw NotPIntegral("denominator divisible by " + p.get_str() +
                           " for coefficient " + q.get_str());
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotPIntegral("denominator not invertible mod " + p.get_str());
    return mod_nonneg(q.get_num() * inv, p);
}

inline std::string to_decimal(const Integer& z) { return z.get_str(); }

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
}

} // namespace leechtheta

#endif
