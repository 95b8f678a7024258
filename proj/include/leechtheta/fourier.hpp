#ifndef LEECHTHETA_FOURIER_HPP
#define LEECHTHETA_FOURIER_HPP

#include <map>
#include <optional>
#include <vector>

#include "leechtheta/rational.hpp"
#include "leechtheta/tindex.hpp"

namespace leechtheta {

// Truncated degree-1 q-expansion with exact coefficients for q^0..q^prec.
struct QSeries1 {
    int64_t prec = 0;
    std::vector<Rational> coeffs; // size prec + 1

    QSeries1() : coeffs(1) {}
    explicit QSeries1(int64_t p) : prec(p), coeffs(static_cast<size_t>(p) + 1) {}

    Rational& operator[](int64_t i) { return coeffs[static_cast<size_t>(i)]; }
    const Rational& operator[](int64_t i) const { return coeffs[static_cast<size_t>(i)]; }

    friend bool operator==(const QSeries1&, const QSeries1&) = default;
};

QSeries1 add(const QSeries1& a, const QSeries1& b);
QSeries1 mul(const QSeries1& a, const QSeries1& b);
QSeries1 scale(const QSeries1& a, const Rational& c);
QSeries1 truncate(const QSeries1& a, int64_t prec);
bool congruent_mod_q(const QSeries1& a, const QSeries1& b, const Integer& p,
                     int64_t* witness = nullptr);

// Truncated degree-2 Fourier expansion: finite map from psd indices with
// trace <= max_trace to exact rationals. Absent indices inside the window
// are zero. Both signs of r are stored explicitly.
class FourierExpansion2 {
public:
    using Map = std::map<TIndex, Rational, TIndexLess>;

    FourierExpansion2() = default;
    explicit FourierExpansion2(int64_t max_trace, std::optional<int64_t> weight = {})
        : max_trace_(max_trace), weight_(weight) {}

    static FourierExpansion2 constant(const Rational& c, int64_t max_trace,
                                      std::optional<int64_t> weight = {});

    int64_t max_trace() const { return max_trace_; }
    std::optional<int64_t> weight() const { return weight_; }
    void set_weight(std::optional<int64_t> w) { weight_ = w; }

    const Map& coeffs() const { return coeffs_; }

    // Zero for indices not stored; throws if T is outside the window or not psd.
    const Rational& at(const TIndex& T) const;

    // Inserts/overwrites; drops exact zeros. Throws on non-psd or out-of-window.
    void set(const TIndex& T, Rational value);

    bool is_zero() const;

    // a([m,r,n]) == a([m,-r,n]) == a([n,r,m]) for every stored index.
    bool is_symmetric() const;

    friend bool operator==(const FourierExpansion2&, const FourierExpansion2&) = default;

private:
    int64_t max_trace_ = 0;
    std::optional<int64_t> weight_;
    Map coeffs_;
};

FourierExpansion2 add(const FourierExpansion2& a, const FourierExpansion2& b);
FourierExpansion2 sub(const FourierExpansion2& a, const FourierExpansion2& b);
FourierExpansion2 scale(const FourierExpansion2& a, const Rational& c);

// Product truncated to min(max_trace). Exact on the retained window: trace is
// additive and psd indices only combine into psd indices.
FourierExpansion2 mul(const FourierExpansion2& a, const FourierExpansion2& b,
                      unsigned threads = 1);

FourierExpansion2 truncate(const FourierExpansion2& a, int64_t max_trace);

// Multiplier det(T) = det4(T)/4, kept exact as a rational.
FourierExpansion2 theta_operator(const FourierExpansion2& f);

// Multiplier det4(T) = 4*det(T); integer-preserving. For odd p this vanishes
// mod p exactly when theta_operator does.
FourierExpansion2 theta_operator_normalized(const FourierExpansion2& f);

// Degree-lowering: coefficient m of the image is a(F; [m,0,0]).
QSeries1 siegel_phi(const FourierExpansion2& f);

FourierExpansion2 reduce_mod(const FourierExpansion2& f, const Integer& p);

// True iff all coefficients agree mod p over the common window; on failure
// *witness (if given) receives an index where they differ.
bool congruent_mod(const FourierExpansion2& a, const FourierExpansion2& b,
                   const Integer& p, TIndex* witness = nullptr);

// All psd indices with trace <= max_trace, in canonical order.
std::vector<TIndex> psd_indices_up_to_trace(int64_t max_trace);

} // namespace leechtheta

#endif
