#include "leechtheta/golay.hpp"

#include <bit>

#include "leechtheta/errors.hpp"

namespace leechtheta {

namespace {

// Polynomials over GF(2) as bitmasks, bit i = coefficient of x^i.
uint32_t gf2_mod(uint32_t a, uint32_t b) {
    int db = 31 - std::countl_zero(b);
    while (a != 0) {
        int da = 31 - std::countl_zero(a);
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

// Degree-11 generator polynomial of a length-23 quadratic-residue code:
// scan the monic degree-11 divisors of 1 + x + ... + x^22 over GF(2).
uint32_t qr23_generator() {
    const uint32_t h = (1u << 23) - 1; // all-ones: sum_{i<23} x^i
    for (uint32_t mid = 0; mid < (1u << 10); ++mid) {
        uint32_t g = (1u << 11) | (mid << 1) | 1u;
        if (gf2_mod(h, g) == 0) return g;
    }
    throw ConstructionInvariantViolated("no degree-11 divisor of x^22+...+1 found");
}

} // namespace

GolayCode::GolayCode() {
    uint32_t g = qr23_generator();
    basis_.reserve(12);
    for (int i = 0; i < 12; ++i) {
        uint32_t w = g << i; // cyclic code generator shifts, degrees < 23
        int parity = std::popcount(w) & 1;
        basis_.push_back(w | (static_cast<uint32_t>(parity) << 23));
    }

    if (words().size() != 4096)
        throw ConstructionInvariantViolated("golay basis is not independent");
    if (min_nonzero_weight() != 8)
        throw ConstructionInvariantViolated("golay minimum weight is not 8");
    for (uint32_t a : basis_)
        for (uint32_t b : basis_)
            if (std::popcount(a & b) % 2 != 0)
                throw ConstructionInvariantViolated("golay code is not self-orthogonal");
}

std::vector<uint32_t> GolayCode::words() const {
    std::vector<uint32_t> out{0};
    out.reserve(4096);
    for (uint32_t b : basis_) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) {
            uint32_t w = out[i] ^ b;
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool GolayCode::contains(uint32_t word) const {
    // Span check by Gaussian elimination; the code is tiny so rebuilding the
    // echelon form per call stays cheap.
    std::vector<uint32_t> echelon;
    for (uint32_t r : basis_) {
        uint32_t v = r;
        for (uint32_t e : echelon) {
            uint32_t top = 1u << (31 - std::countl_zero(e));
            if (v & top) v ^= e;
        }
        if (v) echelon.push_back(v);
    }
    uint32_t v = word;
    for (uint32_t e : echelon) {
        uint32_t top = 1u << (31 - std::countl_zero(e));
        if (v & top) v ^= e;
    }
    return v == 0;
}

int GolayCode::min_nonzero_weight() const {
    int best = 24;
    for (uint32_t w : words())
        if (w != 0) best = std::min(best, std::popcount(w));
    return best;
}

int GolayCode::count_weight(int w) const {
    int cnt = 0;
    for (uint32_t word : words())
        if (std::popcount(word) == w) ++cnt;
    return cnt;
}

} // namespace leechtheta
