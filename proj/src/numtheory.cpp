#include "leechtheta/numtheory.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace leechtheta {

int64_t isqrt64(int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Integer isqrt_rational_floor(const Integer& num, const Integer& den) {
    // floor(sqrt(num/den)) = floor(sqrt(num*den))/den via integer sqrt.
    Integer s;
    mpz_sqrt(s.get_mpz_t(), Integer(num * den).get_mpz_t());
    return s / den;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
    std::vector<std::pair<Integer, int>> out;
    Integer m = abs(n);
    if (m < 2) return out;
    for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            out.emplace_back(p, e);
        }
        if (p > 100000000) break; // beyond trial range; cofactor handled below
    }
    if (m > 1) {
        if (!is_prime(m))
            throw std::runtime_error("composite cofactor beyond trial division range: " + m.get_str());
        out.emplace_back(m, 1);
    }
    return out;
}

int moebius(const Integer& n) {
    if (n == 1) return 1;
    int cnt = 0;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        ++cnt;
    }
    return (cnt % 2 == 0) ? 1 : -1;
}

Integer sigma(const Integer& n, unsigned k) {
    Integer total = 1;
    for (const auto& [p, e] : factorize(n)) {
        Integer pk, term = 1, acc = 1;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
        for (int i = 0; i < e; ++i) {
            acc *= pk;
            term += acc;
        }
        total *= term;
    }
    return total;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factorize(n)) {
        size_t sz = out.size();
        Integer acc = 1;
        for (int i = 0; i < e; ++i) {
            acc *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * acc);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int kronecker(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

// B_0..B_n via the defining recurrence sum_{j<=k} C(k+1,j) B_j = 0 (k >= 1).
std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache{Rational(1)};
    return cache;
}
std::mutex bernoulli_mutex;

} // namespace

Rational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& cache = bernoulli_cache();
    while (cache.size() <= n) {
        unsigned k = static_cast<unsigned>(cache.size());
        Rational acc(0);
        for (unsigned j = 0; j < k; ++j)
            acc += Rational(binomial(k + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(binomial(k + 1, k)));
    }
    return cache[n];
}

Rational bernoulli_poly(unsigned n, const Rational& x) {
    // B_n(x) = sum_j C(n,j) B_j x^(n-j)
    Rational acc(0), xpow(1);
    for (int j = static_cast<int>(n); j >= 0; --j) {
        acc += Rational(binomial(n, static_cast<unsigned>(j))) * bernoulli(static_cast<unsigned>(j)) * xpow;
        xpow *= x;
    }
    return acc;
}

} // namespace leechtheta
