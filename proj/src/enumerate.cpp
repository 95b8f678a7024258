#include "leechtheta/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <thread>

#include "leechtheta/errors.hpp"
#include "leechtheta/numtheory.hpp"

namespace leechtheta {

namespace {

constexpr double kBoundMargin = 1e-9;

double ball_volume(int d, double r) {
    // pi^(d/2) r^d / Gamma(d/2 + 1)
    if (r <= 0) return 0;
    return std::exp(0.5 * d * std::log(M_PI) + d * std::log(r) - std::lgamma(0.5 * d + 1.0));
}

// Fincke-Pohst decomposition: Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2.
// Entries [i][j] with i < j hold the ratios; [i][i] the positive diagonal.
bool fp_decompose(const std::vector<double>& gram, int n, std::vector<double>& q) {
    q = gram;
    auto at = [&](int i, int j) -> double& { return q[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        if (!(at(i, i) > 0)) return false;
        for (int j = i + 1; j < n; ++j) {
            at(j, i) = at(i, j);
            at(i, j) /= at(i, i);
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l)
                at(k, l) -= at(k, i) * at(i, l);
    }
    return true;
}

std::vector<double> gso_profile(const std::vector<double>& gram, int n) {
    std::vector<double> q;
    if (!fp_decompose(gram, n, q)) return {};
    std::vector<double> b(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = q[static_cast<size_t>(i) * n + i];
    return b;
}

// Volume-heuristic node count for a ball of radius^2 = t. Depth d fixes the
// last d levels, so it is controlled by the tail of the profile.
double node_estimate(const std::vector<double>& profile, double t) {
    int n = static_cast<int>(profile.size());
    double total = 0, denom = 1;
    for (int d = 1; d <= n; ++d) {
        denom *= std::sqrt(profile[static_cast<size_t>(n - d)]);
        total += ball_volume(d, std::sqrt(t)) / denom;
    }
    return total;
}

struct GramReducer {
    int n;
    std::vector<int64_t> g; // row-major, symmetric
    std::vector<int64_t> u; // x_original = U x_reduced

    int64_t& G(int i, int j) { return g[static_cast<size_t>(i) * n + j]; }
    int64_t& U(int i, int j) { return u[static_cast<size_t>(i) * n + j]; }

    explicit GramReducer(const GramMatrix& gram)
        : n(gram.dim()), g(gram.entries()), u(static_cast<size_t>(n) * n, 0) {
        for (int i = 0; i < n; ++i) U(i, i) = 1;
    }

    // basis row op b_i <- b_i - c * b_j, mirrored on U columns
    void shear(int i, int j, int64_t c) {
        if (c == 0) return;
        int64_t gii = G(i, i) + c * c * G(j, j) - 2 * c * G(i, j);
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            G(i, k) -= c * G(j, k);
            G(k, i) = G(i, k);
        }
        G(i, i) = gii;
        for (int k = 0; k < n; ++k) U(k, i) -= c * U(k, j);
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < n; ++k) std::swap(G(i, k), G(j, k));
        for (int k = 0; k < n; ++k) std::swap(G(k, i), G(k, j));
        for (int k = 0; k < n; ++k) std::swap(U(k, i), U(k, j));
    }

    // Size-reduction and swap passes on the integer Gram. Unimodular by
    // construction; only enumeration speed depends on the outcome, the
    // caller re-verifies U^T G U exactly.
    void reduce() {
        const double delta = 0.99;
        for (int pass = 0; pass < 500; ++pass) {
            std::vector<double> B(static_cast<size_t>(n));
            std::vector<double> mu(static_cast<size_t>(n) * n, 0.0);
            auto MU = [&](int i, int j) -> double& { return mu[static_cast<size_t>(i) * n + j]; };
            bool degenerate = false;
            for (int i = 0; i < n && !degenerate; ++i) {
                for (int j = 0; j < i; ++j) {
                    double s = static_cast<double>(G(i, j));
                    for (int k = 0; k < j; ++k) s -= MU(i, k) * MU(j, k) * B[static_cast<size_t>(k)];
                    MU(i, j) = s / B[static_cast<size_t>(j)];
                }
                double s = static_cast<double>(G(i, i));
                for (int k = 0; k < i; ++k) s -= MU(i, k) * MU(i, k) * B[static_cast<size_t>(k)];
                if (!(s > 0)) { degenerate = true; break; }
                B[static_cast<size_t>(i)] = s;
            }
            if (degenerate) return;

            bool changed = false;
            for (int i = 1; i < n; ++i) {
                for (int j = i - 1; j >= 0; --j) {
                    double m = MU(i, j);
                    if (std::fabs(m) > 0.5 + 1e-9 && std::fabs(m) < 1e15) {
                        shear(i, j, static_cast<int64_t>(std::llround(m)));
                        changed = true;
                    }
                }
            }
            if (changed) continue; // refresh GSO before judging swaps
            for (int k = 1; k < n; ++k) {
                double lhs = B[static_cast<size_t>(k)];
                double rhs = (delta - MU(k, k - 1) * MU(k, k - 1)) * B[static_cast<size_t>(k - 1)];
                if (lhs < rhs) {
                    swap_cols(k, k - 1);
                    changed = true;
                    break;
                }
            }
            if (!changed) return;
        }
    }

    // Keep the level order or reverse it, whichever the node-count heuristic
    // prefers (levels are consumed from the back).
    void pick_order() {
        std::vector<double> gd(g.begin(), g.end());
        double t_ref = 2.0 * n;
        auto score = [&](const std::vector<double>& gram) {
            auto prof = gso_profile(gram, n);
            if (prof.empty()) return std::numeric_limits<double>::infinity();
            return node_estimate(prof, t_ref);
        };
        std::vector<double> rev(gd.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                rev[static_cast<size_t>(i) * n + j] = gd[static_cast<size_t>(n - 1 - i) * n + (n - 1 - j)];
        if (score(rev) < score(gd))
            for (int i = 0; i < n / 2; ++i) swap_cols(i, n - 1 - i);
    }
};

int64_t widened_floor(double v) {
    return static_cast<int64_t>(std::floor(v + kBoundMargin * (std::fabs(v) + 1.0)));
}
int64_t widened_ceil(double v) {
    return static_cast<int64_t>(std::ceil(v - kBoundMargin * (std::fabs(v) + 1.0)));
}

// Subtree state captured at a cut level, for splitting work across threads.
struct TaskState {
    std::vector<double> fsum;
    std::vector<int64_t> isum;
    int64_t pq = 0;
    int64_t ell = 0;
    double rad = 0;
    bool all_zero = true;
    std::vector<int32_t> prefix; // coords at levels cut+1..n-1
};

// Recursive search over levels n-1 .. 0 (level 0 innermost). Floating-point
// data only shapes candidate intervals (with a widening margin); the integer
// partials make every leaf norm exact, and leaves of single-norm modes come
// from an integer quadratic solve.
template <class Mode>
class Searcher {
public:
    Searcher(int n, const int64_t* gram, const double* ratio_t, const double* diag,
             double radius, Mode& mode, const int64_t* ell = nullptr)
        : n_(n), g_(gram), ratio_t_(ratio_t), diag_(diag), mode_(mode), ell_(ell),
          fsum_(static_cast<size_t>(n) * n), isum_(static_cast<size_t>(n) * n),
          rad_(static_cast<size_t>(n)), pq_(static_cast<size_t>(n)),
          ellp_(static_cast<size_t>(n)), xs_(static_cast<size_t>(n)), radius_(radius) {}

    void run_full() {
        init_top();
        walk(n_ - 1, true);
    }

    void run_collect_tasks(int cut, std::vector<TaskState>& out) {
        init_top();
        walk_collect(n_ - 1, true, cut, out);
    }

    void run_task(int cut, const TaskState& task) {
        std::copy(task.fsum.begin(), task.fsum.end(), row_f(cut));
        std::copy(task.isum.begin(), task.isum.end(), row_i(cut));
        pq_[static_cast<size_t>(cut)] = task.pq;
        ellp_[static_cast<size_t>(cut)] = task.ell;
        rad_[static_cast<size_t>(cut)] = task.rad;
        for (int l = cut + 1; l < n_; ++l)
            xs_[static_cast<size_t>(l)] = task.prefix[static_cast<size_t>(l - cut - 1)];
        walk(cut, task.all_zero);
    }

    int dim() const { return n_; }
    int64_t pq0() const { return pq_[0]; }
    int64_t isum00() const { return isum_[0]; }
    int64_t ellpart0() const { return ellp_[0]; }
    int64_t ellpart_at(int l) const { return ellp_[static_cast<size_t>(l)]; }
    int64_t ell0() const { return ell_ ? ell_[0] : 0; }
    int64_t g00() const { return g_[0]; }
    const int32_t* coords() const { return xs_.data(); }
    void set_x0(int64_t x) { xs_[0] = static_cast<int32_t>(x); }

private:
    int n_;
    const int64_t* g_;
    const double* ratio_t_; // ratio_t_[l*n + k] = q[k][l], contiguous per level
    const double* diag_;    // diag_[l] = q[l][l]
    Mode& mode_;
    const int64_t* ell_;
    std::vector<double> fsum_;  // row l: sum_{j>l} q[k][j] x_j for k <= l
    std::vector<int64_t> isum_; // row l: sum_{j>l} G[k][j] x_j for k <= l
    std::vector<double> rad_;
    std::vector<int64_t> pq_;
    std::vector<int64_t> ellp_;
    std::vector<int32_t> xs_;
    double radius_;

    double* row_f(int l) { return fsum_.data() + static_cast<size_t>(l) * n_; }
    int64_t* row_i(int l) { return isum_.data() + static_cast<size_t>(l) * n_; }

    void init_top() {
        int top = n_ - 1;
        std::fill(row_f(top), row_f(top) + n_, 0.0);
        std::fill(row_i(top), row_i(top) + n_, 0);
        pq_[static_cast<size_t>(top)] = 0;
        ellp_[static_cast<size_t>(top)] = 0;
        rad_[static_cast<size_t>(top)] = radius_;
    }

    inline void descend(int l, int64_t x) {
        const double* fs = row_f(l);
        const int64_t* is = row_i(l);
        double* fd = row_f(l - 1);
        int64_t* id = row_i(l - 1);
        const double* qr = ratio_t_ + static_cast<size_t>(l) * n_;
        const int64_t* gr = g_ + static_cast<size_t>(l) * n_;
        const auto xd = static_cast<double>(x);
        for (int k = 0; k < l; ++k) {
            fd[k] = fs[k] + qr[k] * xd;
            id[k] = is[k] + gr[k] * x;
        }
        pq_[static_cast<size_t>(l - 1)] =
            pq_[static_cast<size_t>(l)] + x * (gr[l] * x + 2 * is[l]);
        if (ell_) ellp_[static_cast<size_t>(l - 1)] = ellp_[static_cast<size_t>(l)] + ell_[l] * x;
        double dx = xd + fs[l];
        rad_[static_cast<size_t>(l - 1)] = rad_[static_cast<size_t>(l)] - diag_[l] * dx * dx;
        xs_[static_cast<size_t>(l)] = static_cast<int32_t>(x);
    }

    inline bool interval(int l, int64_t& lo, int64_t& hi, bool all_zero) const {
        double r = rad_[static_cast<size_t>(l)];
        if (r < 0) {
            if (r < -kBoundMargin * (radius_ + 1.0)) return false;
            r = 0;
        }
        double c = fsum_[static_cast<size_t>(l) * n_ + l];
        double dx = std::sqrt(r / diag_[l]);
        lo = widened_ceil(-c - dx);
        hi = widened_floor(-c + dx);
        if (all_zero && lo < 0) lo = 0;
        return lo <= hi;
    }

    void walk(int l, bool all_zero) {
        if (l == 0) {
            int64_t lo, hi;
            if (interval(0, lo, hi, all_zero))
                mode_.leaf(*this, lo, hi, all_zero);
            return;
        }
        if (!mode_.enter(*this, l)) return;
        int64_t lo, hi;
        if (!interval(l, lo, hi, all_zero)) return;
        for (int64_t x = lo; x <= hi; ++x) {
            descend(l, x);
            walk(l - 1, all_zero && x == 0);
        }
    }

    void walk_collect(int l, bool all_zero, int cut, std::vector<TaskState>& out) {
        if (l == cut) {
            TaskState t;
            t.fsum.assign(row_f(l), row_f(l) + l + 1);
            t.isum.assign(row_i(l), row_i(l) + l + 1);
            t.pq = pq_[static_cast<size_t>(l)];
            t.ell = ellp_[static_cast<size_t>(l)];
            t.rad = rad_[static_cast<size_t>(l)];
            t.all_zero = all_zero;
            t.prefix.assign(xs_.begin() + l + 1, xs_.begin() + n_);
            out.push_back(std::move(t));
            return;
        }
        int64_t lo, hi;
        if (!interval(l, lo, hi, all_zero)) return;
        for (int64_t x = lo; x <= hi; ++x) {
            descend(l, x);
            walk_collect(l - 1, all_zero && x == 0, cut, out);
        }
    }
};

// Integer roots of a x^2 + 2 b x + c0 = t; calls fn(x) for each root.
template <class Fn>
inline void quadratic_roots(int64_t a, int64_t b, int64_t c0, int64_t t, Fn&& fn) {
    int64_t c = c0 - t;
    int64_t disc = b * b - a * c;
    if (disc < 0) return;
    int64_t sq = isqrt64(disc);
    if (sq * sq != disc) return;
    int64_t num = -b + sq;
    if (num % a == 0) fn(num / a);
    if (sq != 0) {
        num = -b - sq;
        if (num % a == 0) fn(num / a);
    }
}

// ---- modes ----------------------------------------------------------------

struct BucketMode {
    int64_t t_max;
    std::vector<uint64_t> counts;

    explicit BucketMode(int64_t t) : t_max(t), counts(static_cast<size_t>(t) + 1, 0) {}

    template <class S> bool enter(S&, int) { return true; }

    template <class S>
    void leaf(S& s, int64_t lo, int64_t hi, bool all_zero) {
        const int64_t a = s.g00();
        const int64_t b = s.isum00();
        int64_t norm = a * lo * lo + 2 * b * lo + s.pq0();
        int64_t step = 2 * a * lo + a + 2 * b; // norm(x+1) - norm(x)
        for (int64_t x = lo; x <= hi; ++x) {
            if (norm <= t_max)
                counts[static_cast<size_t>(norm)] += (all_zero && x == 0) ? 1 : 2;
            norm += step;
            step += 2 * a;
        }
    }

    void merge(const BucketMode& o) {
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    }
};

struct ExactCountMode {
    int64_t t;
    uint64_t count = 0;

    explicit ExactCountMode(int64_t t_) : t(t_) {}

    template <class S> bool enter(S&, int) { return true; }

    template <class S>
    void leaf(S& s, int64_t, int64_t, bool all_zero) {
        quadratic_roots(s.g00(), s.isum00(), s.pq0(), t, [&](int64_t x) {
            if (all_zero && x < 0) return;
            count += (all_zero && x == 0) ? 1 : 2;
        });
    }

    void merge(const ExactCountMode& o) { count += o.count; }
};

// Linear-form histogram over folded shell representatives.
struct HistogramMode {
    int64_t t;
    int64_t offset;
    std::vector<uint64_t> hist;

    HistogramMode(int64_t t_, int64_t bound)
        : t(t_), offset(bound), hist(2 * static_cast<size_t>(bound) + 1, 0) {}

    template <class S> bool enter(S&, int) { return true; }

    template <class S>
    void leaf(S& s, int64_t, int64_t, bool all_zero) {
        quadratic_roots(s.g00(), s.isum00(), s.pq0(), t, [&](int64_t x) {
            if (all_zero && x < 0) return;
            if (all_zero && x == 0 && t != 0) return;
            int64_t ell = s.ellpart0() + s.ell0() * x;
            hist[static_cast<size_t>(ell + offset)] += 1;
        });
    }

    void merge(const HistogramMode& o) {
        for (size_t i = 0; i < hist.size(); ++i) hist[i] += o.hist[i];
    }
};

struct ConstrainedMode {
    int64_t t;
    int64_t s_target;
    const int64_t* maxrem;
    uint64_t count = 0;

    ConstrainedMode(int64_t t_, int64_t s_, const int64_t* mr)
        : t(t_), s_target(s_), maxrem(mr) {}

    template <class S>
    bool enter(S& s, int l) {
        int64_t part = s.ellpart_at(l);
        int64_t rem = maxrem[l];
        return std::llabs(s_target - part) <= rem || std::llabs(s_target + part) <= rem;
    }

    template <class S>
    void leaf(S& s, int64_t, int64_t, bool all_zero) {
        quadratic_roots(s.g00(), s.isum00(), s.pq0(), t, [&](int64_t x) {
            if (all_zero && x < 0) return;
            int64_t ell = s.ellpart0() + s.ell0() * x;
            if (all_zero && x == 0) {
                if (ell == s_target) count += 1; // the zero vector
            } else {
                if (ell == s_target) ++count;
                if (-ell == s_target) ++count;
            }
        });
    }

    void merge(const ConstrainedMode& o) { count += o.count; }
};

struct CollectMode {
    int64_t t;
    int n;
    std::vector<int32_t> flat;

    CollectMode(int64_t t_, int n_) : t(t_), n(n_) {}

    template <class S> bool enter(S&, int) { return true; }

    template <class S>
    void leaf(S& s, int64_t, int64_t, bool all_zero) {
        quadratic_roots(s.g00(), s.isum00(), s.pq0(), t, [&](int64_t x) {
            if (all_zero && x < 0) return;
            if (all_zero && x == 0 && t != 0) return;
            s.set_x0(x);
            flat.insert(flat.end(), s.coords(), s.coords() + n);
        });
    }

    void merge(const CollectMode& o) { flat.insert(flat.end(), o.flat.begin(), o.flat.end()); }
};

template <class Mode>
void run_search(int n, const int64_t* g, const double* ratio_t, const double* diag,
                double radius, Mode& mode, unsigned threads, const int64_t* ell = nullptr) {
    if (threads <= 1 || n <= 3) {
        Searcher<Mode> s(n, g, ratio_t, diag, radius, mode, ell);
        s.run_full();
        return;
    }
    int cut = n - 3; // split across the two outermost levels
    std::vector<TaskState> tasks;
    {
        Searcher<Mode> s(n, g, ratio_t, diag, radius, mode, ell);
        s.run_collect_tasks(cut, tasks);
    }
    std::vector<Mode> partials(tasks.size(), mode);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            Searcher<Mode> s(n, g, ratio_t, diag, radius, partials[i], ell);
            s.run_task(cut, tasks[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& p : partials) mode.merge(p);
}

} // namespace

// ---- ShellEnumerator -------------------------------------------------------

ShellEnumerator::ShellEnumerator(const GramMatrix& gram) : gram_(gram), dim_(gram.dim()) {
    if (dim_ < 1) throw PreconditionError("empty gram matrix");
    if (!gram.is_symmetric()) throw PreconditionError("gram matrix must be symmetric");
    if (!gram.is_positive_definite())
        throw NotPositiveDefinite("enumeration requires a positive definite gram matrix");

    GramReducer red(gram);
    red.reduce();
    red.pick_order();
    red_ = red.g;
    umat_ = red.u;

    // exact check that the bookkeeping kept red_ == U^T G U
    {
        std::vector<Integer> gu(static_cast<size_t>(dim_) * dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Integer acc = 0;
                for (int k = 0; k < dim_; ++k)
                    acc += Integer(gram(i, k)) * umat_[static_cast<size_t>(k) * dim_ + j];
                gu[static_cast<size_t>(i) * dim_ + j] = acc;
            }
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Integer acc = 0;
                for (int k = 0; k < dim_; ++k)
                    acc += Integer(umat_[static_cast<size_t>(k) * dim_ + i]) *
                           gu[static_cast<size_t>(k) * dim_ + j];
                if (acc != red_[static_cast<size_t>(i) * dim_ + j])
                    throw ConstructionInvariantViolated("unimodular bookkeeping failed");
            }
    }

    std::vector<double> gd(red_.begin(), red_.end());
    std::vector<double> q;
    if (!fp_decompose(gd, dim_, q))
        throw NotPositiveDefinite("cholesky decomposition failed");
    diag_.resize(static_cast<size_t>(dim_));
    ratio_t_.assign(static_cast<size_t>(dim_) * dim_, 0.0);
    for (int l = 0; l < dim_; ++l) {
        diag_[static_cast<size_t>(l)] = q[static_cast<size_t>(l) * dim_ + l];
        for (int k = 0; k < l; ++k)
            ratio_t_[static_cast<size_t>(l) * dim_ + k] = q[static_cast<size_t>(k) * dim_ + l];
    }

    // inflated diagonal of red^{-1} for per-coordinate pruning bounds
    dualdiag_.resize(static_cast<size_t>(dim_));
    {
        std::vector<std::vector<double>> m(static_cast<size_t>(dim_),
                                           std::vector<double>(static_cast<size_t>(2 * dim_), 0.0));
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    static_cast<double>(red_[static_cast<size_t>(i) * dim_ + j]);
            m[static_cast<size_t>(i)][static_cast<size_t>(dim_ + i)] = 1.0;
        }
        for (int c = 0; c < dim_; ++c) {
            int piv = c;
            for (int r = c + 1; r < dim_; ++r)
                if (std::fabs(m[static_cast<size_t>(r)][static_cast<size_t>(c)]) >
                    std::fabs(m[static_cast<size_t>(piv)][static_cast<size_t>(c)]))
                    piv = r;
            std::swap(m[static_cast<size_t>(c)], m[static_cast<size_t>(piv)]);
            double d = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
            for (int j = 0; j < 2 * dim_; ++j) m[static_cast<size_t>(c)][static_cast<size_t>(j)] /= d;
            for (int r = 0; r < dim_; ++r) {
                if (r == c) continue;
                double f = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (f == 0) continue;
                for (int j = 0; j < 2 * dim_; ++j)
                    m[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(c)][static_cast<size_t>(j)];
            }
        }
        for (int i = 0; i < dim_; ++i)
            dualdiag_[static_cast<size_t>(i)] =
                m[static_cast<size_t>(i)][static_cast<size_t>(dim_ + i)] * 1.05 + 1e-12;
    }
}

LatticeVector ShellEnumerator::to_original(const int32_t* x) const {
    LatticeVector v;
    v.coords.assign(static_cast<size_t>(dim_), 0);
    for (int i = 0; i < dim_; ++i) {
        int64_t acc = 0;
        for (int j = 0; j < dim_; ++j)
            acc += umat_[static_cast<size_t>(i) * dim_ + j] * x[j];
        v.coords[static_cast<size_t>(i)] = acc;
    }
    return v;
}

std::vector<int64_t> ShellEnumerator::to_reduced(const LatticeVector& w) const {
    // (U^T w)_k; used to carry linear forms into reduced coordinates
    std::vector<int64_t> out(static_cast<size_t>(dim_), 0);
    for (int k = 0; k < dim_; ++k) {
        int64_t acc = 0;
        for (int i = 0; i < dim_; ++i)
            acc += umat_[static_cast<size_t>(i) * dim_ + k] * w.coords[static_cast<size_t>(i)];
        out[static_cast<size_t>(k)] = acc;
    }
    return out;
}

std::vector<uint64_t> ShellEnumerator::counts_up_to(int64_t t_max, const EnumOptions& opts) const {
    if (t_max < 0) throw PreconditionError("negative norm bound");
    BucketMode mode(t_max);
    run_search(dim_, red_.data(), ratio_t_.data(), diag_.data(),
               static_cast<double>(t_max) + 0.5, mode, opts.threads);
    return std::move(mode.counts);
}

uint64_t ShellEnumerator::shell_count(int64_t t, const EnumOptions& opts) const {
    if (t < 0) throw PreconditionError("negative norm");
    if (t == 0) return 1;
    ExactCountMode mode(t);
    run_search(dim_, red_.data(), ratio_t_.data(), diag_.data(),
               static_cast<double>(t) + 0.5, mode, opts.threads);
    return mode.count;
}

namespace {

LatticeVector gram_times(const GramMatrix& g, const LatticeVector& v) {
    LatticeVector sv;
    int n = g.dim();
    sv.coords.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int64_t acc = 0;
        for (int j = 0; j < n; ++j) acc += g(i, j) * v.coords[static_cast<size_t>(j)];
        sv.coords[static_cast<size_t>(i)] = acc;
    }
    return sv;
}

} // namespace

std::vector<uint64_t> ShellEnumerator::inner_histogram(const LatticeVector& v, int64_t t,
                                                       int64_t* offset_out,
                                                       const EnumOptions& opts) const {
    Integer qv = gram_.norm(v);
    int64_t bound = isqrt_rational_floor(qv * t, 1).get_si() + 1;
    std::vector<int64_t> ell = to_reduced(gram_times(gram_, v));

    HistogramMode mode(t, bound);
    run_search(dim_, red_.data(), ratio_t_.data(), diag_.data(),
               static_cast<double>(t) + 0.5, mode, opts.threads, ell.data());
    if (offset_out) *offset_out = bound;
    return std::move(mode.hist);
}

uint64_t ShellEnumerator::count_constrained(const LatticeVector& v, int64_t t, int64_t s,
                                            const EnumOptions& opts) const {
    bool nonzero = false;
    for (int64_t c : v.coords) nonzero |= (c != 0);
    if (!nonzero) throw PreconditionError("constraint vector must be nonzero");
    if (t == 0) return s == 0 ? 1 : 0; // only the zero vector

    std::vector<int64_t> ell = to_reduced(gram_times(gram_, v));
    std::vector<int64_t> maxrem(static_cast<size_t>(dim_), 0);
    int64_t acc = 0;
    for (int k = 0; k < dim_; ++k) {
        auto mk = static_cast<int64_t>(std::ceil(std::sqrt(
                      std::max(0.0, static_cast<double>(t) * dualdiag_[static_cast<size_t>(k)])))) + 1;
        acc += std::llabs(ell[static_cast<size_t>(k)]) * mk;
        maxrem[static_cast<size_t>(k)] = acc;
    }

    ConstrainedMode mode(t, s, maxrem.data());
    run_search(dim_, red_.data(), ratio_t_.data(), diag_.data(),
               static_cast<double>(t) + 0.5, mode, opts.threads, ell.data());
    return mode.count;
}

std::vector<int32_t> ShellEnumerator::folded_shell_reduced(int64_t t, const EnumOptions& opts) const {
    if (t < 0) throw PreconditionError("negative norm");
    CollectMode mode(t, dim_);
    run_search(dim_, red_.data(), ratio_t_.data(), diag_.data(),
               static_cast<double>(t) + 0.5, mode, opts.threads);
    return std::move(mode.flat);
}

void ShellEnumerator::for_each_in_shell(int64_t t,
                                        const std::function<void(const LatticeVector&)>& fn,
                                        const EnumOptions& opts) const {
    if (t == 0) {
        LatticeVector zero;
        zero.coords.assign(static_cast<size_t>(dim_), 0);
        fn(zero);
        return;
    }
    std::vector<int32_t> flat = folded_shell_reduced(t, opts);
    size_t count = flat.size() / static_cast<size_t>(dim_);
    for (size_t i = 0; i < count; ++i) {
        LatticeVector v = to_original(flat.data() + i * static_cast<size_t>(dim_));
        fn(v);
        for (auto& c : v.coords) c = -c;
        fn(v);
    }
}

std::vector<LatticeVector> ShellEnumerator::shell_vectors(int64_t t, const EnumOptions& opts) const {
    std::vector<LatticeVector> out;
    for_each_in_shell(t, [&](const LatticeVector& v) { out.push_back(v); }, opts);
    return out;
}

double ShellEnumerator::estimate_ball_points(int64_t t) const {
    if (t < 0) return 0;
    double det = 1;
    for (int i = 0; i < dim_; ++i) det *= diag_[static_cast<size_t>(i)];
    return ball_volume(dim_, std::sqrt(static_cast<double>(t))) / std::sqrt(det) + 1;
}

double ShellEnumerator::estimate_shell_points(int64_t t) const {
    return std::max(0.0, estimate_ball_points(t) - estimate_ball_points(t - 2)) + 1;
}

// ---- oracles ---------------------------------------------------------------

std::vector<LatticeVector> brute_force_shell(const GramMatrix& gram, int64_t t) {
    int n = gram.dim();
    if (n > 6) throw DimensionTooLarge("brute force oracle is limited to dim <= 6");
    if (!gram.is_positive_definite())
        throw NotPositiveDefinite("brute force oracle requires positive definite input");
    if (t < 0) return {};

    // x_i^2 <= t * (S^{-1})_ii, with the inverse diagonal taken exactly
    Integer det = gram.det();
    std::vector<int64_t> box(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<Integer>> minor;
        for (int r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<Integer> row;
            for (int c = 0; c < n; ++c)
                if (c != i) row.push_back(gram(r, c));
            minor.push_back(std::move(row));
        }
        box[static_cast<size_t>(i)] = isqrt_rational_floor(integer_det(minor) * t, det).get_si();
    }

    std::vector<LatticeVector> out;
    LatticeVector x;
    x.coords.assign(static_cast<size_t>(n), 0);
    std::vector<int64_t> cur(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = -box[static_cast<size_t>(i)];
    for (;;) {
        int64_t norm = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                norm += gram(i, j) * cur[static_cast<size_t>(i)] * cur[static_cast<size_t>(j)];
        if (norm == t) {
            x.coords.assign(cur.begin(), cur.end());
            out.push_back(x);
        }
        int pos = 0;
        while (pos < n && cur[static_cast<size_t>(pos)] == box[static_cast<size_t>(pos)]) {
            cur[static_cast<size_t>(pos)] = -box[static_cast<size_t>(pos)];
            ++pos;
        }
        if (pos == n) break;
        ++cur[static_cast<size_t>(pos)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticeVector> enumerate_shell_exact(const GramMatrix& gram, int64_t t) {
    int n = gram.dim();
    if (n > 8) throw DimensionTooLarge("exact-cholesky enumeration is limited to dim <= 8");
    if (!gram.is_positive_definite())
        throw NotPositiveDefinite("exact enumeration requires positive definite input");
    if (t < 0) return {};
    if (t == 0) {
        LatticeVector zero;
        zero.coords.assign(static_cast<size_t>(n), 0);
        return {zero};
    }

    std::vector<std::vector<Rational>> q(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(gram(i, j));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            q[static_cast<size_t>(j)][static_cast<size_t>(i)] = q[static_cast<size_t>(i)][static_cast<size_t>(j)];
            q[static_cast<size_t>(i)][static_cast<size_t>(j)] /= q[static_cast<size_t>(i)][static_cast<size_t>(i)];
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l)
                q[static_cast<size_t>(k)][static_cast<size_t>(l)] -=
                    q[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                    q[static_cast<size_t>(i)][static_cast<size_t>(l)];
    }

    std::vector<LatticeVector> out;
    std::vector<int64_t> x(static_cast<size_t>(n), 0);

    // exact integer interval for q_ll (x + c)^2 <= r
    auto bounds = [&](const Rational& c, const Rational& r, const Rational& qll,
                      int64_t& lo, int64_t& hi) -> bool {
        if (r < 0) return false;
        Rational rho = r / qll;
        Integer s = isqrt_rational_floor(rho.get_num(), rho.get_den());
        Rational mc = -c;
        Integer base;
        mpz_fdiv_q(base.get_mpz_t(), mc.get_num().get_mpz_t(), mc.get_den().get_mpz_t());
        auto fits = [&](const Integer& cand) {
            Rational d = Rational(cand) + c;
            return d * d * qll <= r;
        };
        Integer h = base + s + 2, hmin = base - s - 2;
        while (h >= hmin && !fits(h)) --h;
        if (h < hmin) return false;
        Integer l = base - s - 2;
        while (!fits(l)) ++l;
        lo = l.get_si();
        hi = h.get_si();
        return lo <= hi;
    };

    std::function<void(int, const Rational&, const std::vector<Rational>&)> walk =
        [&](int level, const Rational& rad, const std::vector<Rational>& centers) {
            int64_t lo, hi;
            if (!bounds(centers[static_cast<size_t>(level)], rad,
                        q[static_cast<size_t>(level)][static_cast<size_t>(level)], lo, hi))
                return;
            for (int64_t xv = lo; xv <= hi; ++xv) {
                x[static_cast<size_t>(level)] = xv;
                Rational d = Rational(xv) + centers[static_cast<size_t>(level)];
                Rational rad2 = rad - q[static_cast<size_t>(level)][static_cast<size_t>(level)] * d * d;
                if (level == 0) {
                    if (rad2 == 0) {
                        LatticeVector v;
                        v.coords.assign(x.begin(), x.end());
                        out.push_back(v);
                    }
                    continue;
                }
                std::vector<Rational> c2(centers);
                for (int k = 0; k < level; ++k)
                    c2[static_cast<size_t>(k)] += q[static_cast<size_t>(k)][static_cast<size_t>(level)] * Rational(xv);
                walk(level - 1, rad2, c2);
            }
        };

    walk(n - 1, Rational(t), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace leechtheta
