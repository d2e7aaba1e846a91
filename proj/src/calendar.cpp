#include "hydrodp/calendar.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace hydrodp {

namespace {

constexpr std::array<int, 12> kMonthDays = {31, 28, 31, 30, 31, 30,
                                            31, 31, 30, 31, 30, 31};

constexpr std::array<int, 12> kCumDays = {0,   31,  59,  90,  120, 151,
                                          181, 212, 243, 273, 304, 334};

int days_in_month(int year, int month) {
    if (month == 2 && is_leap_year(year)) return 29;
    return kMonthDays[static_cast<size_t>(month - 1)];
}

}  // namespace

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

bool is_leap_day(const Date& d) { return d.month == 2 && d.day == 29; }

bool is_valid_date(const Date& d) {
    if (d.month < 1 || d.month > 12) return false;
    if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return false;
    return true;
}

int day_of_year_365(const Date& d) {
    if (!is_valid_date(d)) throw std::invalid_argument("invalid date");
    if (is_leap_day(d)) throw std::invalid_argument("Feb 29 has no index in the 365-day calendar");
    return kCumDays[static_cast<size_t>(d.month - 1)] + d.day - 1;
}

Date next_day_skipping_leap(const Date& d) {
    Date n = d;
    n.day += 1;
    if (n.day > days_in_month(n.year, n.month)) {
        n.day = 1;
        n.month += 1;
        if (n.month > 12) {
            n.month = 1;
            n.year += 1;
        }
    }
    if (is_leap_day(n)) n = {n.year, 3, 1};
    return n;
}

Date advance_skipping_leap(Date d, long n) {
    for (long i = 0; i < n; ++i) d = next_day_skipping_leap(d);
    return d;
}

Date parse_date(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw std::invalid_argument("malformed date '" + text + "' (expected YYYY-MM-DD)");
    for (size_t i = 0; i < text.size(); ++i) {
        if (i == 4 || i == 7) continue;
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed date '" + text + "' (expected YYYY-MM-DD)");
    }
    Date d;
    d.year = std::stoi(text.substr(0, 4));
    d.month = std::stoi(text.substr(5, 2));
    d.day = std::stoi(text.substr(8, 2));
    if (!is_valid_date(d))
        throw std::invalid_argument("invalid date '" + text + "'");
    return d;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

}  // namespace hydrodp
