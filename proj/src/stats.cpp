#include "psolab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psolab::stats {

MeanVariance mean_and_variance(const std::vector<double>& values)
{
    if (values.size() < 2)
        throw std::invalid_argument("mean_and_variance: need at least 2 observations");
    double sum = 0.0;
    for (double v : values) {
        if (!std::isfinite(v))
            throw std::invalid_argument("mean_and_variance: observations must be finite");
        sum += v;
    }
    const double n = static_cast<double>(values.size());
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    return {mean, ss / (n - 1.0)};
}

// ---------------------------------------------------------------------------
// Distribution kernel
// ---------------------------------------------------------------------------

namespace {

// Continued fraction for the incomplete beta function, evaluated with the
// modified Lentz algorithm. Converges rapidly for x < (a+1)/(a+b+2); the
// caller routes the other half of the domain through the symmetry relation.
double beta_cf(double a, double b, double x)
{
    constexpr double kTiny = 1e-300; // guards against division by ~0
    constexpr double kTol = 1e-14;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= 1000; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kTol)
            return h;
    }
    throw std::runtime_error("incomplete beta: continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("incomplete beta: requires a > 0 and b > 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("incomplete beta: requires x in [0, 1]");
    if (x == 0.0)
        return 0.0;
    if (x == 1.0)
        return 1.0;
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double t_cdf(double t, double df)
{
    if (!(df > 0.0))
        throw std::domain_error("t_cdf: requires df > 0");
    if (t == 0.0)
        return 0.5;
    // P(|T| > |t|) = I_{df/(df+t^2)}(df/2, 1/2)
    const double both_tails = regularized_incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
    return t > 0.0 ? 1.0 - 0.5 * both_tails : 0.5 * both_tails;
}

double f_cdf(double f, double df1, double df2)
{
    if (!(df1 > 0.0) || !(df2 > 0.0))
        throw std::domain_error("f_cdf: requires df1 > 0 and df2 > 0");
    if (std::isnan(f))
        throw std::domain_error("f_cdf: f must be a number");
    if (f <= 0.0)
        return 0.0;
    return regularized_incomplete_beta(0.5 * df1, 0.5 * df2, df1 * f / (df1 * f + df2));
}

namespace {

constexpr double kQuantileWidth = 1e-10;

// Monotone bracketing + bisection: doubles hi until cdf(hi) >= p, then
// narrows [lo, hi] to kQuantileWidth. cdf must be nondecreasing.
template <typename Cdf>
double bisect_quantile(const Cdf& cdf, double p, double lo, double hi)
{
    int guard = 0;
    while (cdf(hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 1100)
            throw std::runtime_error("quantile: bracket search failed");
    }
    while (hi - lo > kQuantileWidth) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double t_quantile(double p, double df)
{
    if (!(df > 0.0))
        throw std::domain_error("t_quantile: requires df > 0");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("t_quantile: requires p in (0, 1)");
    if (p == 0.5)
        return 0.0;
    if (p < 0.5)
        return -t_quantile(1.0 - p, df);
    return bisect_quantile([df](double t) { return t_cdf(t, df); }, p, 0.0, 1.0);
}

double t_critical_two_tailed(double alpha, double df)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("t_critical: requires alpha in (0, 1)");
    return t_quantile(1.0 - 0.5 * alpha, df);
}

double t_critical_one_tailed(double alpha, double df)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("t_critical: requires alpha in (0, 1)");
    return t_quantile(1.0 - alpha, df);
}

double f_critical(double alpha, double df1, double df2)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("f_critical: requires alpha in (0, 1)");
    return bisect_quantile([df1, df2](double f) { return f_cdf(f, df1, df2); },
                           1.0 - alpha, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Procedures
// ---------------------------------------------------------------------------

namespace {

void check_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1)");
}

GroupSummary summarize(const SampleGroup& g)
{
    if (g.values.size() < 2)
        throw std::invalid_argument("group '" + g.label +
                                    "' needs at least 2 observations");
    const MeanVariance mv = mean_and_variance(g.values);
    double sum = 0.0;
    for (double v : g.values)
        sum += v;
    return {g.label, g.values.size(), sum, mv.mean, mv.variance};
}

} // namespace

AnovaResult anova_one_way(const std::vector<SampleGroup>& groups, double alpha)
{
    check_alpha(alpha);
    if (groups.size() < 2)
        throw std::invalid_argument("anova: need at least 2 groups");

    AnovaResult r;
    r.alpha = alpha;
    std::size_t n_total = 0;
    double grand_sum = 0.0;
    for (const SampleGroup& g : groups) {
        r.groups.push_back(summarize(g));
        n_total += g.values.size();
        grand_sum += r.groups.back().sum;
    }
    const double grand_mean = grand_sum / static_cast<double>(n_total);

    r.ss_between = 0.0;
    r.ss_within = 0.0;
    for (const GroupSummary& g : r.groups) {
        const double dev = g.mean - grand_mean;
        r.ss_between += static_cast<double>(g.count) * dev * dev;
        r.ss_within += static_cast<double>(g.count - 1) * g.variance;
    }
    // Deliberately not ss_between + ss_within: the decomposition identity
    // stays a checkable property instead of being true by construction.
    r.ss_total = 0.0;
    for (const SampleGroup& g : groups) {
        for (double v : g.values) {
            const double dev = v - grand_mean;
            r.ss_total += dev * dev;
        }
    }

    r.df_between = groups.size() - 1;
    r.df_within = n_total - groups.size();
    r.ms_between = r.ss_between / static_cast<double>(r.df_between);
    r.ms_within = r.ss_within / static_cast<double>(r.df_within);
    if (r.ms_within == 0.0)
        throw std::domain_error("anova: all groups are constant, F is undefined");
    r.f = r.ms_between / r.ms_within;
    r.p_value = 1.0 - f_cdf(r.f, static_cast<double>(r.df_between),
                            static_cast<double>(r.df_within));
    r.f_critical = f_critical(alpha, static_cast<double>(r.df_between),
                              static_cast<double>(r.df_within));
    r.reject_equal_means = r.f > r.f_critical;
    return r;
}

namespace {

TTestResult t_test_common(const SampleGroup& a, const SampleGroup& b, double alpha)
{
    check_alpha(alpha);
    const GroupSummary sa = summarize(a);
    const GroupSummary sb = summarize(b);
    TTestResult r;
    r.label_a = sa.label;
    r.label_b = sb.label;
    r.mean_a = sa.mean;
    r.mean_b = sb.mean;
    r.variance_a = sa.variance;
    r.variance_b = sb.variance;
    r.n_a = sa.count;
    r.n_b = sb.count;
    r.alpha = alpha;
    return r;
}

void finish_t_test(TTestResult& r)
{
    r.p_one_tailed = 1.0 - t_cdf(std::abs(r.t), r.df);
    r.p_two_tailed = 2.0 * r.p_one_tailed;
    r.critical_one_tailed = t_critical_one_tailed(r.alpha, r.df);
    r.critical_two_tailed = t_critical_two_tailed(r.alpha, r.df);
    r.reject_equal_means = std::abs(r.t) >= r.critical_two_tailed;
}

} // namespace

TTestResult t_test_pooled(const SampleGroup& a, const SampleGroup& b, double alpha)
{
    TTestResult r = t_test_common(a, b, alpha);
    const double na = static_cast<double>(r.n_a);
    const double nb = static_cast<double>(r.n_b);
    r.df = na + nb - 2.0;
    const double pooled =
        ((na - 1.0) * r.variance_a + (nb - 1.0) * r.variance_b) / r.df;
    r.pooled_variance = pooled;
    if (pooled == 0.0 && r.mean_a == r.mean_b)
        throw std::domain_error("t-test: both groups constant and equal, t is undefined");
    r.t = (r.mean_a - r.mean_b) / std::sqrt(pooled * (1.0 / na + 1.0 / nb));
    finish_t_test(r);
    return r;
}

TTestResult t_test_welch(const SampleGroup& a, const SampleGroup& b, double alpha)
{
    TTestResult r = t_test_common(a, b, alpha);
    const double na = static_cast<double>(r.n_a);
    const double nb = static_cast<double>(r.n_b);
    const double va = r.variance_a / na;
    const double vb = r.variance_b / nb;
    if (va + vb == 0.0)
        throw std::domain_error("t-test: both groups have zero variance, t is undefined");
    r.df = (va + vb) * (va + vb) /
           (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    r.pooled_variance = std::nullopt;
    r.t = (r.mean_a - r.mean_b) / std::sqrt(va + vb);
    finish_t_test(r);
    return r;
}

FTestResult f_test_variance_ratio(const SampleGroup& a, const SampleGroup& b,
                                  double alpha)
{
    check_alpha(alpha);
    const GroupSummary sa = summarize(a);
    const GroupSummary sb = summarize(b);
    const GroupSummary& num = sa.variance >= sb.variance ? sa : sb;
    const GroupSummary& den = sa.variance >= sb.variance ? sb : sa;
    if (den.variance == 0.0)
        throw std::domain_error("f-test: a group has zero variance, F is undefined");

    FTestResult r;
    r.label_numerator = num.label;
    r.label_denominator = den.label;
    r.variance_numerator = num.variance;
    r.variance_denominator = den.variance;
    r.df_numerator = num.count - 1;
    r.df_denominator = den.count - 1;
    r.f = num.variance / den.variance;
    const double cdf = f_cdf(r.f, static_cast<double>(r.df_numerator),
                             static_cast<double>(r.df_denominator));
    r.p_two_tailed = 2.0 * std::min(cdf, 1.0 - cdf);
    r.alpha = alpha;
    r.equal_variances = r.p_two_tailed >= alpha;
    return r;
}

} // namespace psolab::stats
