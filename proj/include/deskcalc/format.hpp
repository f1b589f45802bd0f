#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "deskcalc/calculus.hpp"
#include "deskcalc/finance.hpp"
#include "deskcalc/stats.hpp"

namespace deskcalc::format {

/// Shortest decimal string that round-trips to the same double. Used in
/// CSV output.
std::string full(double v);

/// 6 significant digits, for human-readable tables.
std::string sig6(double v);

/// Two decimal places, for money columns.
std::string money(double v);

std::string render_goalseek_table(const calculus::GoalSeekResult& r);
std::string render_extremum_table(const calculus::ExtremumReport& r);

std::string render_riemann_table(const calculus::RiemannResult& r);
std::string render_riemann_csv(const calculus::RiemannResult& r);

std::string render_function_table(const calculus::FunctionTable& t);
std::string render_function_csv(const calculus::FunctionTable& t);

std::string render_schedule_table(const finance::InterestSchedule& s);
std::string render_schedule_csv(const finance::InterestSchedule& s);

std::string render_ttest_table(const stats::WelchTTestResult& r);
std::string render_ttest_csv(const stats::WelchTTestResult& r);

std::string render_anova_table(const stats::AnovaResult& r);
std::string render_anova_csv(const stats::AnovaResult& r);

std::string render_summary_table(const std::vector<std::pair<std::string, stats::FiveNumberSummary>>& groups);
std::string render_summary_csv(const std::vector<std::pair<std::string, stats::FiveNumberSummary>>& groups);

}  // namespace deskcalc::format
