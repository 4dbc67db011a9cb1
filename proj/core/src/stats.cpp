#include "serostack/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace serostack {

std::string_view test_kind_name(TestKind kind) {
    return kind == TestKind::t_test ? "t_test" : "u_test";
}

namespace {

constexpr double kBetaEps = 1e-15;
constexpr int kBetaMaxIter = 300;

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < 1e-300) d = 1e-300;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = 1.0 + aa / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = 1.0 + aa / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kBetaEps) break;
    }
    return h;
}

double sample_mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Unbiased (n-1) sample variance.
double sample_variance(std::span<const double> v, double mean) {
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return s / static_cast<double>(v.size() - 1);
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("regularized_incomplete_beta: a, b must be positive");
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("regularized_incomplete_beta: x must be in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double t_cdf(double t, double df) {
    if (!(df > 0.0)) throw std::invalid_argument("t_cdf: df must be positive");
    if (!std::isfinite(t)) return t > 0.0 ? 1.0 : 0.0;
    if (t == 0.0) return 0.5;
    const double x = df / (df + t * t);
    const double tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, x);
    return t > 0.0 ? 1.0 - tail : tail;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

TestResult t_test(std::span<const double> a, std::span<const double> b, TVariant variant) {
    if (a.size() < 2 || b.size() < 2)
        throw std::invalid_argument("t_test: both samples need at least 2 values");

    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = sample_mean(a);
    const double mb = sample_mean(b);
    const double va = sample_variance(a, ma);
    const double vb = sample_variance(b, mb);

    TestResult res;
    res.kind = TestKind::t_test;
    res.n_a = a.size();
    res.n_b = b.size();

    double se2 = 0.0;
    if (variant == TVariant::student_pooled) {
        res.method = PvalueMethod::student_df;
        res.df = na + nb - 2.0;
        const double pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / res.df;
        se2 = pooled * (1.0 / na + 1.0 / nb);
    } else {
        res.method = PvalueMethod::welch_df;
        const double ta = va / na, tb = vb / nb;
        se2 = ta + tb;
        if (se2 > 0.0)
            res.df = se2 * se2 / (ta * ta / (na - 1.0) + tb * tb / (nb - 1.0));
    }

    if (se2 <= 0.0) {
        // Zero-variance limit convention.
        if (ma == mb) {
            res.statistic = 0.0;
            res.p_value = 1.0;
        } else {
            res.statistic = ma > mb ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
            res.p_value = 0.0;
        }
        if (variant == TVariant::welch) res.df = 0.0;
        return res;
    }

    res.statistic = (ma - mb) / std::sqrt(se2);
    res.p_value = std::clamp(2.0 * (1.0 - t_cdf(std::abs(res.statistic), res.df)), 0.0, 1.0);
    return res;
}

namespace {

// Midranks of the pooled sample; ties share the average rank.
// Returns (ranks of a then b, sum over tie groups of t^3 - t).
std::pair<std::vector<double>, double> midranks(std::span<const double> a,
                                                std::span<const double> b) {
    const std::size_t n = a.size() + b.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto value = [&](std::size_t i) { return i < a.size() ? a[i] : b[i - a.size()]; };
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return value(i) < value(j); });

    std::vector<double> ranks(n);
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && value(order[j + 1]) == value(order[i])) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg_rank;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    return {std::move(ranks), tie_term};
}

// Distribution of the rank sum of a size-k subset of ranks {1..n}:
// ways[s] = number of subsets with sum s. Classic DP; counts fit easily in
// double for n <= 12 (max C(12,6) = 924).
std::vector<double> rank_sum_counts(std::size_t n, std::size_t k) {
    const std::size_t max_sum = n * (n + 1) / 2;
    std::vector<std::vector<double>> ways(k + 1, std::vector<double>(max_sum + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = std::min(r, k); c >= 1; --c) {
            for (std::size_t s = max_sum; s >= r; --s) {
                if (ways[c - 1][s - r] > 0.0) ways[c][s] += ways[c - 1][s - r];
            }
        }
    }
    return ways[k];
}

} // namespace

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("mann_whitney_u: samples must be nonempty");

    const std::size_t na = a.size(), nb = b.size(), n = na + nb;
    const auto [ranks, tie_term] = midranks(a, b);

    double rank_sum_a = 0.0;
    for (std::size_t i = 0; i < na; ++i) rank_sum_a += ranks[i];
    const double u = rank_sum_a - 0.5 * static_cast<double>(na) * static_cast<double>(na + 1);
    const double nanb = static_cast<double>(na) * static_cast<double>(nb);

    TestResult res;
    res.kind = TestKind::u_test;
    res.n_a = na;
    res.n_b = nb;
    res.statistic = u;

    const bool tie_free = tie_term == 0.0;
    if (tie_free && n <= 12) {
        res.method = PvalueMethod::exact_enumeration;
        // Two-sided: mass at least as far from n_a*n_b/2 as the observed U.
        const auto counts = rank_sum_counts(n, na);
        const double u_min = std::min(u, nanb - u);
        const double base = 0.5 * static_cast<double>(na) * static_cast<double>(na + 1);
        double extreme = 0.0, total = 0.0;
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (counts[s] == 0.0) continue;
            total += counts[s];
            const double u_s = static_cast<double>(s) - base;
            if (u_s <= u_min || u_s >= nanb - u_min) extreme += counts[s];
        }
        res.p_value = std::clamp(extreme / total, 0.0, 1.0);
        return res;
    }

    res.method = PvalueMethod::normal_approx;
    const double mean_u = 0.5 * nanb;
    const double nn = static_cast<double>(n);
    const double var_u =
        nanb / 12.0 * ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
    if (var_u <= 0.0) {
        res.p_value = 1.0; // every value tied
        return res;
    }
    // 0.5 continuity correction toward the mean.
    const double z = std::max(std::abs(u - mean_u) - 0.5, 0.0) / std::sqrt(var_u);
    res.p_value = std::clamp(2.0 * (1.0 - normal_cdf(z)), 0.0, 1.0);
    return res;
}

} // namespace serostack
