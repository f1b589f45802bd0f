#include "deskcalc/finance.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace deskcalc::finance {

namespace {

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static const int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return lengths[month - 1];
}

}  // namespace

Date Date::plus_months(int months) const {
    int total = (year * 12 + (month - 1)) + months;
    Date d;
    d.year = total / 12;
    d.month = total % 12 + 1;
    d.day = std::min(day, days_in_month(d.year, d.month));
    return d;
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::optional<Date> parse_iso_date(const std::string& text) {
    Date d;
    char extra;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c", &d.year, &d.month, &d.day, &extra) != 3) {
        return std::nullopt;
    }
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in_month(d.year, d.month)) {
        return std::nullopt;
    }
    return d;
}

double period_rate(double annual_rate, int periods_per_year) {
    if (periods_per_year < 1) {
        throw std::invalid_argument("period_rate: periods per year must be at least 1");
    }
    return annual_rate / periods_per_year;
}

double future_value(double principal, double period_rate, int num_periods) {
    if (num_periods < 0) throw std::invalid_argument("future_value: negative period count");
    return principal * std::pow(1.0 + period_rate, num_periods);
}

InterestSchedule compound_schedule(double principal, double annual_rate,
                                   int periods_per_year, int num_periods,
                                   std::optional<Date> start,
                                   const std::map<int, double>& extra_deposits) {
    if (principal < 0.0) throw std::invalid_argument("compound_schedule: negative principal");
    if (num_periods < 0) throw std::invalid_argument("compound_schedule: negative period count");
    for (const auto& [period, amount] : extra_deposits) {
        if (period < 1 || period > num_periods) {
            throw std::invalid_argument("compound_schedule: extra deposit for unknown period " +
                                        std::to_string(period));
        }
        (void)amount;
    }

    double rate = period_rate(annual_rate, periods_per_year);
    InterestSchedule schedule;
    schedule.period_rate = rate;
    schedule.rows.reserve(static_cast<std::size_t>(num_periods) + 1);

    auto label_for = [&](int k) -> std::string {
        if (!start) return "P" + std::to_string(k);
        // 12/periods_per_year months per period, accumulated from the start
        int months = static_cast<int>(std::lround(k * 12.0 / periods_per_year));
        return start->plus_months(months).iso();
    };

    double balance = principal;
    schedule.rows.push_back({0, label_for(0), principal, 0.0, balance});
    for (int k = 1; k <= num_periods; ++k) {
        double interest = balance * rate;
        double deposit = 0.0;
        if (auto it = extra_deposits.find(k); it != extra_deposits.end()) deposit = it->second;
        balance += interest + deposit;
        schedule.rows.push_back({k, label_for(k), deposit, interest, balance});
    }
    return schedule;
}

}  // namespace deskcalc::finance
