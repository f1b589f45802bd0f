#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace deskcalc::stats {

struct Sample {
    std::vector<double> values;
    std::string label;
};

struct SummaryStats {
    double mean = 0.0;
    double variance = 0.0;  // sample variance, n-1 denominator
    std::size_t count = 0;
};

double mean(const std::vector<double>& values);
double sample_variance(const std::vector<double>& values);
SummaryStats summarize(const std::vector<double>& values);

struct WelchTTestResult {
    SummaryStats group1;
    SummaryStats group2;
    double mean_difference = 0.0;
    double standard_error = 0.0;
    double df_exact = 0.0;
    long df_displayed = 0;  // trunc(df_exact), the spreadsheet convention
    double t_stat = 0.0;
    double p_one_tail = 0.0;
    double p_two_tail = 0.0;
    double t_crit_one_tail = 0.0;
    double t_crit_two_tail = 0.0;
    double alpha = 0.05;
};

/// Two-sample t-test assuming unequal variances (Welch). P-values and
/// critical values are computed at the truncated Welch-Satterthwaite
/// degrees of freedom; df_exact is reported alongside.
WelchTTestResult welch_t_test(const SummaryStats& g1, const SummaryStats& g2,
                              double alpha = 0.05);
WelchTTestResult welch_t_test(const Sample& g1, const Sample& g2, double alpha = 0.05);

struct GroupSummary {
    std::string label;
    SummaryStats stats;
};

struct AnovaResult {
    std::vector<GroupSummary> groups;
    double ss_between = 0.0;
    double ss_within = 0.0;
    double ss_total = 0.0;
    std::size_t df_between = 0;
    std::size_t df_within = 0;
    std::size_t df_total = 0;
    double ms_between = 0.0;
    double ms_within = 0.0;
    double f_stat = 0.0;
    double p_value = 0.0;
    double f_crit = 0.0;
    double alpha = 0.05;
};

AnovaResult one_way_anova(const std::vector<GroupSummary>& groups, double alpha = 0.05);
AnovaResult one_way_anova(const std::vector<Sample>& groups, double alpha = 0.05);

/// Inclusive quantile: position 1 + (n-1)*q on the sorted sample with
/// linear interpolation (the spreadsheet QUARTILE convention).
double quartile_inclusive(std::vector<double> values, double q);

struct FiveNumberSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

FiveNumberSummary five_number_summary(const Sample& s);

// Special functions underpinning the t and F distributions.

double ln_gamma(double x);

/// Regularized incomplete beta I_x(a,b) by Lentz continued fraction,
/// with the symmetry switch at x > (a+1)/(a+b+2).
double reg_inc_beta(double a, double b, double x);

double t_cdf(double t, double df);
double t_inverse(double p, double df);
double f_cdf(double f, double d1, double d2);
double f_inverse(double p, double d1, double d2);

}  // namespace deskcalc::stats
