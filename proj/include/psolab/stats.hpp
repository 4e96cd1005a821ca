#ifndef PSOLAB_STATS_HPP
#define PSOLAB_STATS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace psolab::stats {

/// A labelled sample of observations (e.g. one variant's evaluation counts).
struct SampleGroup {
    std::string label;
    std::vector<double> values;
};

struct MeanVariance {
    double mean;
    double variance; ///< sample variance, divisor n - 1
};

/// Throws std::invalid_argument for n < 2 or non-finite values.
MeanVariance mean_and_variance(const std::vector<double>& values);

// ---------------------------------------------------------------------------
// Distribution kernel. Everything below is exact continued-fraction /
// bisection arithmetic -- no lookup tables, no approximating polynomials.
// ---------------------------------------------------------------------------

/// Regularized incomplete beta function I_x(a, b) for a, b > 0, x in [0, 1].
/// Modified Lentz continued fraction, relative tolerance 1e-14; evaluated
/// through the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) on the slow side of the
/// split point. Throws std::domain_error outside the domain.
double regularized_incomplete_beta(double a, double b, double x);

/// P(T <= t) for Student's t with df degrees of freedom (df > 0).
double t_cdf(double t, double df);

/// P(F <= f) for Fisher's F with (df1, df2) degrees of freedom; f < 0 has
/// probability 0.
double f_cdf(double f, double df1, double df2);

/// Quantile: the t with t_cdf(t, df) == p, bisected to width 1e-10.
double t_quantile(double p, double df);

/// Two-tailed critical value at level alpha: t with P(|T| > t) == alpha.
double t_critical_two_tailed(double alpha, double df);

/// One-tailed critical value: t with P(T > t) == alpha.
double t_critical_one_tailed(double alpha, double df);

/// Upper critical value: f with P(F > f) == alpha.
double f_critical(double alpha, double df1, double df2);

// ---------------------------------------------------------------------------
// Procedures
// ---------------------------------------------------------------------------

/// Per-group descriptives carried in every AnovaResult for rendering.
struct GroupSummary {
    std::string label;
    std::size_t count;
    double sum;
    double mean;
    double variance;
};

struct AnovaResult {
    std::vector<GroupSummary> groups;
    double ss_between;
    double ss_within;
    double ss_total; ///< computed independently of the other two
    std::size_t df_between;
    std::size_t df_within;
    double ms_between;
    double ms_within;
    double f;
    double p_value;
    double f_critical; ///< at the alpha the test was run with
    double alpha;
    bool reject_equal_means; ///< f > f_critical
};

/// Fixed-effects one-way ANOVA. Requires >= 2 groups, every group n >= 2.
/// Throws std::invalid_argument on shape violations and std::domain_error
/// when ms_within == 0 (the F statistic is undefined).
AnovaResult anova_one_way(const std::vector<SampleGroup>& groups, double alpha);

struct TTestResult {
    std::string label_a;
    std::string label_b;
    double mean_a;
    double mean_b;
    double variance_a;
    double variance_b;
    std::size_t n_a;
    std::size_t n_b;
    std::optional<double> pooled_variance; ///< engaged only for the pooled test
    double df; ///< integral for pooled, fractional for Welch
    double t;
    double p_one_tailed;
    double p_two_tailed;
    double critical_one_tailed;
    double critical_two_tailed;
    double alpha;
    bool reject_equal_means; ///< |t| >= critical_two_tailed
};

/// Two-sample t-test assuming equal variances (pooled). Hypothesized mean
/// difference 0; df = n_a + n_b - 2. Throws std::domain_error when the
/// pooled variance is 0 and the means coincide.
TTestResult t_test_pooled(const SampleGroup& a, const SampleGroup& b, double alpha);

/// Welch's t-test (unequal variances, Welch-Satterthwaite df).
TTestResult t_test_welch(const SampleGroup& a, const SampleGroup& b, double alpha);

struct FTestResult {
    std::string label_numerator;   ///< group with the larger variance
    std::string label_denominator;
    double variance_numerator;
    double variance_denominator;
    std::size_t df_numerator;
    std::size_t df_denominator;
    double f; ///< >= 1 by construction
    double p_two_tailed;
    double alpha;
    bool equal_variances; ///< p >= alpha
};

/// Two-tailed variance-ratio F-test; the larger variance goes in the
/// numerator and p = 2 * min(cdf, 1 - cdf). Used to choose between the
/// pooled and Welch t-tests.
FTestResult f_test_variance_ratio(const SampleGroup& a, const SampleGroup& b, double alpha);

} // namespace psolab::stats

#endif // PSOLAB_STATS_HPP
