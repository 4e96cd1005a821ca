#include "psolab/stats_render.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace psolab::stats {

namespace {

// %.6f with trailing zeros (and a bare decimal point) trimmed: 58 -> "58",
// 2.682809 stays, 1640.366667 stays full width.
std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    return s;
}

std::string pad_left(const std::string& s, std::size_t w)
{
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w)
{
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

constexpr std::size_t kLabelWidth = 22;
constexpr std::size_t kCellWidth = 18;

void row(std::ostringstream& out, const std::string& head,
         const std::vector<std::string>& cells)
{
    out << pad_right(head, kLabelWidth);
    for (const std::string& c : cells)
        out << pad_left(c, kCellWidth);
    out << '\n';
}

} // namespace

std::string to_text(const AnovaResult& r)
{
    std::ostringstream out;
    out << "Anova: Single Factor (alpha = " << fmt(r.alpha) << ")\n\n";

    out << "SUMMARY\n";
    row(out, "Groups", {"Count", "Sum", "Average", "Variance"});
    for (const GroupSummary& g : r.groups)
        row(out, g.label,
            {std::to_string(g.count), fmt(g.sum), fmt(g.mean), fmt(g.variance)});
    out << '\n';

    out << "ANOVA\n";
    row(out, "Source of Variation", {"SS", "df", "MS", "F", "P-value", "F crit"});
    row(out, "Between Groups",
        {fmt(r.ss_between), std::to_string(r.df_between), fmt(r.ms_between),
         fmt(r.f), fmt(r.p_value), fmt(r.f_critical)});
    row(out, "Within Groups",
        {fmt(r.ss_within), std::to_string(r.df_within), fmt(r.ms_within)});
    row(out, "Total",
        {fmt(r.ss_total), std::to_string(r.df_between + r.df_within)});
    out << '\n';

    out << "Decision: " << (r.reject_equal_means ? "reject" : "fail to reject")
        << " equal means at alpha = " << fmt(r.alpha) << '\n';
    return out.str();
}

std::string to_text(const TTestResult& r)
{
    const bool pooled = r.pooled_variance.has_value();
    std::ostringstream out;
    out << (pooled ? "t-Test: Two-Sample Assuming Equal Variances"
                   : "t-Test: Two-Sample Assuming Unequal Variances")
        << " (alpha = " << fmt(r.alpha) << ")\n\n";

    row(out, "", {r.label_a, r.label_b});
    row(out, "Mean", {fmt(r.mean_a), fmt(r.mean_b)});
    row(out, "Variance", {fmt(r.variance_a), fmt(r.variance_b)});
    row(out, "Observations", {std::to_string(r.n_a), std::to_string(r.n_b)});
    if (pooled)
        row(out, "Pooled Variance", {fmt(*r.pooled_variance)});
    row(out, "Hypothesized Mean Difference", {fmt(0.0)});
    row(out, "df", {fmt(r.df)});
    row(out, "t Stat", {fmt(r.t)});
    row(out, "P(T<=t) one-tail", {fmt(r.p_one_tailed)});
    row(out, "t Critical one-tail", {fmt(r.critical_one_tailed)});
    row(out, "P(T<=t) two-tail", {fmt(r.p_two_tailed)});
    row(out, "t Critical two-tail", {fmt(r.critical_two_tailed)});
    out << '\n';

    out << "Decision: " << (r.reject_equal_means ? "reject" : "fail to reject")
        << " equal means at alpha = " << fmt(r.alpha) << '\n';
    return out.str();
}

std::string to_text(const FTestResult& r)
{
    std::ostringstream out;
    out << "F-Test Two-Sample for Variances (alpha = " << fmt(r.alpha) << ")\n\n";

    row(out, "", {r.label_numerator, r.label_denominator});
    row(out, "Variance",
        {fmt(r.variance_numerator), fmt(r.variance_denominator)});
    row(out, "df",
        {std::to_string(r.df_numerator), std::to_string(r.df_denominator)});
    row(out, "F", {fmt(r.f)});
    row(out, "P(F<=f) two-tail", {fmt(r.p_two_tailed)});
    out << '\n';

    out << "Decision: variances treated as "
        << (r.equal_variances ? "equal" : "unequal") << " at alpha = "
        << fmt(r.alpha) << '\n';
    return out.str();
}

namespace {

nlohmann::json group_json(const GroupSummary& g)
{
    return {{"label", g.label},
            {"count", g.count},
            {"sum", g.sum},
            {"mean", g.mean},
            {"variance", g.variance}};
}

} // namespace

std::string to_json(const AnovaResult& r)
{
    nlohmann::json j;
    for (const GroupSummary& g : r.groups)
        j["groups"].push_back(group_json(g));
    j["ss_between"] = r.ss_between;
    j["ss_within"] = r.ss_within;
    j["ss_total"] = r.ss_total;
    j["df_between"] = r.df_between;
    j["df_within"] = r.df_within;
    j["ms_between"] = r.ms_between;
    j["ms_within"] = r.ms_within;
    j["f"] = r.f;
    j["p_value"] = r.p_value;
    j["f_critical"] = r.f_critical;
    j["alpha"] = r.alpha;
    j["reject_equal_means"] = r.reject_equal_means;
    return j.dump(2);
}

std::string to_json(const TTestResult& r)
{
    nlohmann::json j;
    j["method"] = r.pooled_variance ? "pooled" : "welch";
    j["label_a"] = r.label_a;
    j["label_b"] = r.label_b;
    j["mean_a"] = r.mean_a;
    j["mean_b"] = r.mean_b;
    j["variance_a"] = r.variance_a;
    j["variance_b"] = r.variance_b;
    j["n_a"] = r.n_a;
    j["n_b"] = r.n_b;
    if (r.pooled_variance)
        j["pooled_variance"] = *r.pooled_variance;
    else
        j["pooled_variance"] = nullptr;
    j["df"] = r.df;
    j["t"] = r.t;
    j["p_one_tailed"] = r.p_one_tailed;
    j["p_two_tailed"] = r.p_two_tailed;
    j["critical_one_tailed"] = r.critical_one_tailed;
    j["critical_two_tailed"] = r.critical_two_tailed;
    j["alpha"] = r.alpha;
    j["reject_equal_means"] = r.reject_equal_means;
    return j.dump(2);
}

std::string to_json(const FTestResult& r)
{
    nlohmann::json j;
    j["label_numerator"] = r.label_numerator;
    j["label_denominator"] = r.label_denominator;
    j["variance_numerator"] = r.variance_numerator;
    j["variance_denominator"] = r.variance_denominator;
    j["df_numerator"] = r.df_numerator;
    j["df_denominator"] = r.df_denominator;
    j["f"] = r.f;
    j["p_two_tailed"] = r.p_two_tailed;
    j["alpha"] = r.alpha;
    j["equal_variances"] = r.equal_variances;
    return j.dump(2);
}

} // namespace psolab::stats
