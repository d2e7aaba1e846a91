#pragma once

#include <compare>
#include <string>

namespace hydrodp {

// Calendar date. All series arithmetic runs on a 365-day calendar:
// Feb 29 rows are dropped at ingestion and never appear in a series.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    friend auto operator<=>(const Date&, const Date&) = default;
};

bool is_leap_year(int year);
bool is_leap_day(const Date& d);
bool is_valid_date(const Date& d);

// Day index 0..364 in the leap-free calendar. Rejects Feb 29.
int day_of_year_365(const Date& d);

// Next calendar day, stepping over Feb 29.
Date next_day_skipping_leap(const Date& d);

// Advance n days in the leap-free calendar (n >= 0).
Date advance_skipping_leap(Date d, long n);

// Parses strict ISO-8601 "YYYY-MM-DD". Throws std::invalid_argument.
Date parse_date(const std::string& text);

std::string format_date(const Date& d);

}  // namespace hydrodp
