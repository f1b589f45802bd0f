#include "deskcalc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deskcalc::stats {

double mean(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("mean: empty sample");
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double sample_variance(const std::vector<double>& values) {
    if (values.size() < 2) throw std::invalid_argument("sample_variance: needs at least 2 values");
    double m = mean(values);
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return ss / static_cast<double>(values.size() - 1);
}

SummaryStats summarize(const std::vector<double>& values) {
    return {mean(values), sample_variance(values), values.size()};
}

// ---- special functions ----------------------------------------------

double ln_gamma(double x) {
    if (x <= 0.0) throw std::invalid_argument("ln_gamma: requires x > 0");
    // Lanczos, g = 7, 9 terms
    static const double coeffs[] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(M_PI / std::sin(M_PI * x)) - ln_gamma(1.0 - x);
    }
    double z = x - 1.0;
    double a = coeffs[0];
    double t = z + 7.5;
    for (int i = 1; i < 9; ++i) a += coeffs[i] / (z + i);
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(a);
}

namespace {

// Lentz continued fraction for the incomplete beta, valid for
// x < (a+1)/(a+b+2).
double beta_cont_frac(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-30;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) return h;
    }
    throw std::runtime_error("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

double reg_inc_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("reg_inc_beta: requires a, b > 0");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("reg_inc_beta: x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    double ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cont_frac(a, b, x) / a;
    }
    return 1.0 - front * beta_cont_frac(b, a, 1.0 - x) / b;
}

double t_cdf(double t, double df) {
    if (df <= 0.0) throw std::invalid_argument("t_cdf: requires df > 0");
    double x = df / (df + t * t);
    double tail = 0.5 * reg_inc_beta(df / 2.0, 0.5, x);
    return t <= 0.0 ? tail : 1.0 - tail;
}

namespace {

// Bisection on a monotone non-decreasing CDF; bracket is widened first.
template <typename Cdf>
double invert_cdf(Cdf cdf, double p, double lo, double hi, double lo_limit) {
    while (cdf(hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw std::runtime_error("inverse CDF: bracket overflow");
    }
    while (cdf(lo) > p) {
        hi = lo;
        lo = lo <= 0.0 ? lo * 2.0 - 1.0 : lo / 2.0;
        if (lo < lo_limit) throw std::runtime_error("inverse CDF: bracket underflow");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
        double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double t_inverse(double p, double df) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("t_inverse: p must lie in (0, 1)");
    if (df <= 0.0) throw std::invalid_argument("t_inverse: requires df > 0");
    if (p == 0.5) return 0.0;
    return invert_cdf([df](double t) { return t_cdf(t, df); }, p, -1.0, 1.0, -1e300);
}

double f_cdf(double f, double d1, double d2) {
    if (d1 < 1.0 || d2 < 1.0) throw std::invalid_argument("f_cdf: invalid degrees of freedom");
    if (f < 0.0) throw std::invalid_argument("f_cdf: requires F >= 0");
    if (f == 0.0) return 0.0;
    double x = d1 * f / (d1 * f + d2);
    return reg_inc_beta(d1 / 2.0, d2 / 2.0, x);
}

double f_inverse(double p, double d1, double d2) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("f_inverse: p must lie in (0, 1)");
    if (d1 < 1.0 || d2 < 1.0) throw std::invalid_argument("f_inverse: invalid degrees of freedom");
    return invert_cdf([d1, d2](double f) { return f_cdf(f, d1, d2); }, p, 0.0, 2.0, 0.0);
}

// ---- tests ------------------------------------------------------------

WelchTTestResult welch_t_test(const SummaryStats& g1, const SummaryStats& g2, double alpha) {
    if (g1.count < 2 || g2.count < 2) {
        throw std::invalid_argument("welch_t_test: each group needs at least 2 observations");
    }
    if (g1.variance < 0.0 || g2.variance < 0.0) {
        throw std::invalid_argument("welch_t_test: negative variance");
    }
    double se1 = g1.variance / static_cast<double>(g1.count);
    double se2 = g2.variance / static_cast<double>(g2.count);
    if (se1 + se2 == 0.0) {
        throw std::invalid_argument("welch_t_test: both variances are zero");
    }

    WelchTTestResult r;
    r.group1 = g1;
    r.group2 = g2;
    r.alpha = alpha;
    r.mean_difference = g1.mean - g2.mean;
    r.standard_error = std::sqrt(se1 + se2);
    r.t_stat = r.mean_difference / r.standard_error;
    r.df_exact = (se1 + se2) * (se1 + se2) /
                 (se1 * se1 / static_cast<double>(g1.count - 1) +
                  se2 * se2 / static_cast<double>(g2.count - 1));
    r.df_displayed = static_cast<long>(r.df_exact);
    double df = static_cast<double>(r.df_displayed);
    r.p_one_tail = t_cdf(-std::fabs(r.t_stat), df);
    r.p_two_tail = 2.0 * r.p_one_tail;
    r.t_crit_one_tail = t_inverse(1.0 - alpha, df);
    r.t_crit_two_tail = t_inverse(1.0 - alpha / 2.0, df);
    return r;
}

WelchTTestResult welch_t_test(const Sample& g1, const Sample& g2, double alpha) {
    return welch_t_test(summarize(g1.values), summarize(g2.values), alpha);
}

AnovaResult one_way_anova(const std::vector<GroupSummary>& groups, double alpha) {
    if (groups.size() < 2) throw std::invalid_argument("one_way_anova: needs at least 2 groups");

    double total_n = 0.0;
    double total_sum = 0.0;
    for (const auto& g : groups) {
        if (g.stats.count < 2) {
            throw std::invalid_argument("one_way_anova: group '" + g.label +
                                        "' needs at least 2 observations");
        }
        total_n += static_cast<double>(g.stats.count);
        total_sum += g.stats.mean * static_cast<double>(g.stats.count);
    }
    double grand_mean = total_sum / total_n;

    AnovaResult r;
    r.groups = groups;
    r.alpha = alpha;
    for (const auto& g : groups) {
        double n = static_cast<double>(g.stats.count);
        double d = g.stats.mean - grand_mean;
        r.ss_between += n * d * d;
        r.ss_within += (n - 1.0) * g.stats.variance;
    }
    r.ss_total = r.ss_between + r.ss_within;
    r.df_between = groups.size() - 1;
    r.df_within = static_cast<std::size_t>(total_n) - groups.size();
    r.df_total = r.df_between + r.df_within;
    r.ms_between = r.ss_between / static_cast<double>(r.df_between);
    r.ms_within = r.ss_within / static_cast<double>(r.df_within);
    if (r.ms_within == 0.0) throw std::invalid_argument("one_way_anova: zero within-group variance");
    r.f_stat = r.ms_between / r.ms_within;
    double d1 = static_cast<double>(r.df_between);
    double d2 = static_cast<double>(r.df_within);
    r.p_value = 1.0 - f_cdf(r.f_stat, d1, d2);
    r.f_crit = f_inverse(1.0 - alpha, d1, d2);
    return r;
}

AnovaResult one_way_anova(const std::vector<Sample>& groups, double alpha) {
    std::vector<GroupSummary> summaries;
    summaries.reserve(groups.size());
    for (const auto& g : groups) {
        if (g.values.size() < 2) {
            throw std::invalid_argument("one_way_anova: group '" + g.label +
                                        "' needs at least 2 observations");
        }
        summaries.push_back({g.label, summarize(g.values)});
    }
    AnovaResult r = one_way_anova(summaries, alpha);
    // with raw data, recompute ss_total directly
    double grand_sum = 0.0;
    double n = 0.0;
    for (const auto& g : groups) {
        for (double v : g.values) grand_sum += v;
        n += static_cast<double>(g.values.size());
    }
    double grand_mean = grand_sum / n;
    double ss_total = 0.0;
    for (const auto& g : groups) {
        for (double v : g.values) ss_total += (v - grand_mean) * (v - grand_mean);
    }
    r.ss_total = ss_total;
    return r;
}

double quartile_inclusive(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quartile_inclusive: empty sample");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("quartile_inclusive: q must lie in [0, 1]");
    std::sort(values.begin(), values.end());
    double position = 1.0 + (static_cast<double>(values.size()) - 1.0) * q;  // 1-based
    std::size_t lower = static_cast<std::size_t>(std::floor(position)) - 1;
    std::size_t upper = static_cast<std::size_t>(std::ceil(position)) - 1;
    double frac = position - std::floor(position);
    return values[lower] + frac * (values[upper] - values[lower]);
}

FiveNumberSummary five_number_summary(const Sample& s) {
    FiveNumberSummary r;
    r.min = quartile_inclusive(s.values, 0.0);
    r.q1 = quartile_inclusive(s.values, 0.25);
    r.median = quartile_inclusive(s.values, 0.5);
    r.q3 = quartile_inclusive(s.values, 0.75);
    r.max = quartile_inclusive(s.values, 1.0);
    return r;
}

}  // namespace deskcalc::stats
