#include "leechtheta/fourier.hpp"

#include <algorithm>
#include <thread>

#include "leechtheta/numtheory.hpp"

namespace leechtheta {

QSeries1 add(const QSeries1& a, const QSeries1& b) {
    QSeries1 out(std::min(a.prec, b.prec));
    for (int64_t i = 0; i <= out.prec; ++i) out[i] = a[i] + b[i];
    return out;
}

QSeries1 mul(const QSeries1& a, const QSeries1& b) {
    QSeries1 out(std::min(a.prec, b.prec));
    for (int64_t i = 0; i <= out.prec; ++i)
        for (int64_t j = 0; i + j <= out.prec && j <= b.prec; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

QSeries1 scale(const QSeries1& a, const Rational& c) {
    QSeries1 out(a.prec);
    for (int64_t i = 0; i <= a.prec; ++i) out[i] = a[i] * c;
    return out;
}

QSeries1 truncate(const QSeries1& a, int64_t prec) {
    QSeries1 out(std::min(prec, a.prec));
    for (int64_t i = 0; i <= out.prec; ++i) out[i] = a[i];
    return out;
}

bool congruent_mod_q(const QSeries1& a, const QSeries1& b, const Integer& p,
                     int64_t* witness) {
    int64_t prec = std::min(a.prec, b.prec);
    for (int64_t i = 0; i <= prec; ++i) {
        if (residue_mod(a[i], p) != residue_mod(b[i], p)) {
            if (witness) *witness = i;
            return false;
        }
    }
    return true;
}

FourierExpansion2 FourierExpansion2::constant(const Rational& c, int64_t max_trace,
                                              std::optional<int64_t> weight) {
    FourierExpansion2 f(max_trace, weight);
    f.set({0, 0, 0}, c);
    return f;
}

const Rational& FourierExpansion2::at(const TIndex& T) const {
    static const Rational zero(0);
    if (!T.is_psd())
        throw PreconditionError("index is not positive semidefinite");
    if (T.trace() > max_trace_)
        throw WindowMismatch("index trace exceeds expansion precision");
    auto it = coeffs_.find(T);
    return it == coeffs_.end() ? zero : it->second;
}

void FourierExpansion2::set(const TIndex& T, Rational value) {
    if (!T.is_psd())
        throw PreconditionError("index is not positive semidefinite");
    if (T.trace() > max_trace_)
        throw WindowMismatch("index trace exceeds expansion precision");
    if (value == 0)
        coeffs_.erase(T);
    else
        coeffs_[T] = std::move(value);
}

bool FourierExpansion2::is_zero() const { return coeffs_.empty(); }

bool FourierExpansion2::is_symmetric() const {
    for (const auto& [T, v] : coeffs_) {
        if (at(T.negated_r()) != v) return false;
        if (at(T.transposed_pair()) != v) return false;
    }
    return true;
}

FourierExpansion2 add(const FourierExpansion2& a, const FourierExpansion2& b) {
    FourierExpansion2 out(std::min(a.max_trace(), b.max_trace()));
    for (const auto& [T, v] : a.coeffs())
        if (T.trace() <= out.max_trace()) out.set(T, v);
    for (const auto& [T, v] : b.coeffs())
        if (T.trace() <= out.max_trace()) out.set(T, out.at(T) + v);
    return out;
}

FourierExpansion2 sub(const FourierExpansion2& a, const FourierExpansion2& b) {
    return add(a, scale(b, Rational(-1)));
}

FourierExpansion2 scale(const FourierExpansion2& a, const Rational& c) {
    FourierExpansion2 out(a.max_trace(), a.weight());
    if (c == 0) return out;
    for (const auto& [T, v] : a.coeffs()) out.set(T, v * c);
    return out;
}

FourierExpansion2 truncate(const FourierExpansion2& a, int64_t max_trace) {
    FourierExpansion2 out(std::min(max_trace, a.max_trace()), a.weight());
    for (const auto& [T, v] : a.coeffs())
        if (T.trace() <= out.max_trace()) out.set(T, v);
    return out;
}

FourierExpansion2 mul(const FourierExpansion2& a, const FourierExpansion2& b,
                      unsigned threads) {
    FourierExpansion2 out(std::min(a.max_trace(), b.max_trace()));
    std::optional<int64_t> w;
    if (a.weight() && b.weight()) w = *a.weight() + *b.weight();
    out.set_weight(w);

    // Convolution over psd splittings T = T1 + T2. Work is grouped by output
    // index so a parallel run stays deterministic.
    std::vector<TIndex> targets = psd_indices_up_to_trace(out.max_trace());
    std::vector<Rational> results(targets.size());

    auto worker = [&](size_t begin, size_t end) {
        for (size_t idx = begin; idx < end; ++idx) {
            const TIndex T = targets[idx];
            Rational acc(0);
            for (const auto& [T1, v1] : a.coeffs()) {
                TIndex T2{T.m - T1.m, T.r - T1.r, T.n - T1.n};
                if (T2.m < 0 || T2.n < 0 || T2.trace() > b.max_trace()) continue;
                if (T2.det4() < 0) continue;
                auto it = b.coeffs().find(T2);
                if (it != b.coeffs().end()) acc += v1 * it->second;
            }
            results[idx] = std::move(acc);
        }
    };

    if (threads <= 1 || targets.size() < 64) {
        worker(0, targets.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (targets.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            size_t begin = std::min(targets.size(), t * chunk);
            size_t end = std::min(targets.size(), begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (size_t i = 0; i < targets.size(); ++i)
        if (results[i] != 0) out.set(targets[i], std::move(results[i]));
    return out;
}

FourierExpansion2 theta_operator(const FourierExpansion2& f) {
    FourierExpansion2 out(f.max_trace());
    for (const auto& [T, v] : f.coeffs())
        out.set(T, v * Rational(T.det4(), 4));
    return out;
}

FourierExpansion2 theta_operator_normalized(const FourierExpansion2& f) {
    FourierExpansion2 out(f.max_trace());
    for (const auto& [T, v] : f.coeffs())
        out.set(T, v * Rational(T.det4()));
    return out;
}

QSeries1 siegel_phi(const FourierExpansion2& f) {
    QSeries1 out(f.max_trace());
    for (int64_t m = 0; m <= f.max_trace(); ++m)
        out[m] = f.at({m, 0, 0});
    return out;
}

FourierExpansion2 reduce_mod(const FourierExpansion2& f, const Integer& p) {
    FourierExpansion2 out(f.max_trace(), f.weight());
    for (const auto& [T, v] : f.coeffs())
        out.set(T, Rational(residue_mod(v, p)));
    return out;
}

bool congruent_mod(const FourierExpansion2& a, const FourierExpansion2& b,
                   const Integer& p, TIndex* witness) {
    int64_t window = std::min(a.max_trace(), b.max_trace());
    for (const TIndex& T : psd_indices_up_to_trace(window)) {
        if (residue_mod(a.at(T), p) != residue_mod(b.at(T), p)) {
            if (witness) *witness = T;
            return false;
        }
    }
    return true;
}

std::vector<TIndex> psd_indices_up_to_trace(int64_t max_trace) {
    std::vector<TIndex> out;
    for (int64_t tr = 0; tr <= max_trace; ++tr) {
        for (int64_t m = 0; m <= tr; ++m) {
            int64_t n = tr - m;
            int64_t rmax = isqrt64(4 * m * n);
            for (int64_t r = -rmax; r <= rmax; ++r)
                out.push_back({m, r, n});
        }
    }
    return out;
}

} // namespace leechtheta
