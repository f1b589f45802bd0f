#include "deskcalc/format.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <utility>

namespace deskcalc::format {

namespace {

// pad to width with trailing spaces
std::string pad(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return s + std::string(width - s.size(), ' ');
}

std::string table_of(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += (i + 1 < row.size()) ? pad(row[i], widths[i] + 2) : row[i];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

}  // namespace

std::string full(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

std::string sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string money(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string render_goalseek_table(const calculus::GoalSeekResult& r) {
    std::ostringstream out;
    out << "x          " << sig6(r.x) << '\n'
        << "residual   " << sig6(r.residual) << '\n'
        << "iterations " << r.iterations << '\n'
        << "converged  " << (r.converged ? "yes" : "no") << '\n';
    return out.str();
}

std::string render_extremum_table(const calculus::ExtremumReport& r) {
    const char* kind = "inconclusive";
    if (r.kind == calculus::ExtremumKind::Minimum) kind = "minimum";
    if (r.kind == calculus::ExtremumKind::Maximum) kind = "maximum";
    std::ostringstream out;
    out << "x               " << sig6(r.x) << '\n'
        << "f(x)            " << sig6(r.fx) << '\n'
        << "classification  " << kind << '\n'
        << "f''(x)          " << sig6(r.second_derivative) << '\n';
    return out.str();
}

std::string render_riemann_table(const calculus::RiemannResult& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"x_i", "delta_x", "f(x_i)", "f(x_i)*delta_x"});
    for (const auto& row : r.rows) {
        rows.push_back({sig6(row.x), sig6(row.delta_x), sig6(row.fx), sig6(row.product)});
    }
    rows.push_back({"", "", "Total", sig6(r.total)});
    return table_of(rows);
}

std::string render_riemann_csv(const calculus::RiemannResult& r) {
    std::ostringstream out;
    out << "x_i,delta_x,f_x_i,product\n";
    for (const auto& row : r.rows) {
        out << full(row.x) << ',' << full(row.delta_x) << ',' << full(row.fx) << ','
            << full(row.product) << '\n';
    }
    out << ",,total," << full(r.total) << '\n';
    return out.str();
}

std::string render_function_table(const calculus::FunctionTable& t) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"x", "y"});
    for (const auto& row : t.rows) {
        rows.push_back({sig6(row.x), row.y ? sig6(*row.y) : "<" + row.error + ">"});
    }
    return table_of(rows);
}

std::string render_function_csv(const calculus::FunctionTable& t) {
    std::ostringstream out;
    out << "x,y\n";
    for (const auto& row : t.rows) {
        out << full(row.x) << ',' << (row.y ? full(*row.y) : "") << '\n';
    }
    return out.str();
}

std::string render_schedule_table(const finance::InterestSchedule& s) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Period", "Date", "Deposits", "Interest", "Balance"});
    for (const auto& row : s.rows) {
        rows.push_back({std::to_string(row.period), row.label,
                        row.deposit != 0.0 ? money(row.deposit) : "",
                        row.period > 0 ? money(row.interest) : "", money(row.balance)});
    }
    return table_of(rows);
}

std::string render_schedule_csv(const finance::InterestSchedule& s) {
    std::ostringstream out;
    out << "period,label,deposit,interest,balance\n";
    for (const auto& row : s.rows) {
        out << row.period << ',' << row.label << ',' << money(row.deposit) << ','
            << money(row.interest) << ',' << money(row.balance) << '\n';
    }
    return out.str();
}

std::string render_ttest_table(const stats::WelchTTestResult& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"", "Variable 1", "Variable 2"});
    rows.push_back({"Mean", sig6(r.group1.mean), sig6(r.group2.mean)});
    rows.push_back({"Variance", sig6(r.group1.variance), sig6(r.group2.variance)});
    rows.push_back({"Observations", std::to_string(r.group1.count), std::to_string(r.group2.count)});
    rows.push_back({"Hypothesized Mean Difference", "0"});
    rows.push_back({"df", std::to_string(r.df_displayed)});
    rows.push_back({"df (exact)", sig6(r.df_exact)});
    rows.push_back({"t Stat", sig6(r.t_stat)});
    rows.push_back({"P(T<=t) one-tail", sig6(r.p_one_tail)});
    rows.push_back({"t Critical one-tail", sig6(r.t_crit_one_tail)});
    rows.push_back({"P(T<=t) two-tail", sig6(r.p_two_tail)});
    rows.push_back({"t Critical two-tail", sig6(r.t_crit_two_tail)});
    return "t-Test: Two-Sample Assuming Unequal Variances\n\n" + table_of(rows);
}

std::string render_ttest_csv(const stats::WelchTTestResult& r) {
    std::ostringstream out;
    out << "statistic,value\n"
        << "mean1," << full(r.group1.mean) << '\n'
        << "mean2," << full(r.group2.mean) << '\n'
        << "variance1," << full(r.group1.variance) << '\n'
        << "variance2," << full(r.group2.variance) << '\n'
        << "n1," << r.group1.count << '\n'
        << "n2," << r.group2.count << '\n'
        << "mean_difference," << full(r.mean_difference) << '\n'
        << "standard_error," << full(r.standard_error) << '\n'
        << "df_exact," << full(r.df_exact) << '\n'
        << "df," << r.df_displayed << '\n'
        << "t_stat," << full(r.t_stat) << '\n'
        << "p_one_tail," << full(r.p_one_tail) << '\n'
        << "t_crit_one_tail," << full(r.t_crit_one_tail) << '\n'
        << "p_two_tail," << full(r.p_two_tail) << '\n'
        << "t_crit_two_tail," << full(r.t_crit_two_tail) << '\n';
    return out.str();
}

std::string render_anova_table(const stats::AnovaResult& r) {
    std::vector<std::vector<std::string>> summary;
    summary.push_back({"Groups", "Count", "Sum", "Average", "Variance"});
    for (const auto& g : r.groups) {
        summary.push_back({g.label, std::to_string(g.stats.count),
                           sig6(g.stats.mean * static_cast<double>(g.stats.count)),
                           sig6(g.stats.mean), sig6(g.stats.variance)});
    }

    std::vector<std::vector<std::string>> table;
    table.push_back({"Source of Variation", "SS", "df", "MS", "F", "P-value", "F crit"});
    table.push_back({"Between Groups", sig6(r.ss_between), std::to_string(r.df_between),
                     sig6(r.ms_between), sig6(r.f_stat), sig6(r.p_value), sig6(r.f_crit)});
    table.push_back({"Within Groups", sig6(r.ss_within), std::to_string(r.df_within),
                     sig6(r.ms_within)});
    table.push_back({"Total", sig6(r.ss_total), std::to_string(r.df_total)});
    return "SUMMARY\n" + table_of(summary) + "\nANOVA\n" + table_of(table);
}

std::string render_anova_csv(const stats::AnovaResult& r) {
    std::ostringstream out;
    out << "source,ss,df,ms,f,p_value,f_crit\n";
    out << "between," << full(r.ss_between) << ',' << r.df_between << ',' << full(r.ms_between)
        << ',' << full(r.f_stat) << ',' << full(r.p_value) << ',' << full(r.f_crit) << '\n';
    out << "within," << full(r.ss_within) << ',' << r.df_within << ',' << full(r.ms_within)
        << ",,,\n";
    out << "total," << full(r.ss_total) << ',' << r.df_total << ",,,,\n";
    return out.str();
}

std::string render_summary_table(
    const std::vector<std::pair<std::string, stats::FiveNumberSummary>>& groups) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"Statistic"};
    for (const auto& [label, fns] : groups) header.push_back(label);
    rows.push_back(header);
    auto add_row = [&](const char* name, auto pick) {
        std::vector<std::string> row{name};
        for (const auto& [label, fns] : groups) row.push_back(sig6(pick(fns)));
        rows.push_back(row);
    };
    add_row("q1", [](const auto& f) { return f.q1; });
    add_row("min", [](const auto& f) { return f.min; });
    add_row("median", [](const auto& f) { return f.median; });
    add_row("max", [](const auto& f) { return f.max; });
    add_row("q3", [](const auto& f) { return f.q3; });
    return table_of(rows);
}

std::string render_summary_csv(
    const std::vector<std::pair<std::string, stats::FiveNumberSummary>>& groups) {
    std::ostringstream out;
    out << "group,q1,min,median,max,q3\n";
    for (const auto& [label, f] : groups) {
        out << label << ',' << full(f.q1) << ',' << full(f.min) << ',' << full(f.median) << ','
            << full(f.max) << ',' << full(f.q3) << '\n';
    }
    return out.str();
}

}  // namespace deskcalc::format
