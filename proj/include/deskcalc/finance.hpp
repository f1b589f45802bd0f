#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deskcalc::finance {

/// Calendar date with month stepping; day-of-month clamps to the target
/// month's length (Jan 31 + 1 month = Feb 28/29).
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    Date plus_months(int months) const;
    std::string iso() const;  // YYYY-MM-DD
};

std::optional<Date> parse_iso_date(const std::string& text);

struct InterestSchedule {
    struct Row {
        int period;
        std::string label;   // ISO date when a start date is given, else "P<k>"
        double deposit;
        double interest;
        double balance;
    };
    std::vector<Row> rows;
    double period_rate = 0.0;
};

/// annual_rate / periods_per_year.
double period_rate(double annual_rate, int periods_per_year);

/// principal * (1 + period_rate)^num_periods. Closed-form check for
/// compound_schedule.
double future_value(double principal, double period_rate, int num_periods);

/// Row 0 holds the principal; each later row adds interest on the prior
/// balance plus any extra deposit for that period. Arithmetic is full
/// precision; rounding to cents happens only at serialization.
InterestSchedule compound_schedule(double principal, double annual_rate,
                                   int periods_per_year, int num_periods,
                                   std::optional<Date> start = std::nullopt,
                                   const std::map<int, double>& extra_deposits = {});

}  // namespace deskcalc::finance
