#include "hydrodp/flow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hydrodp {

namespace {

[[noreturn]] void fail_line(size_t line_no, const std::string& what) {
    throw std::runtime_error("flow csv, line " + std::to_string(line_no) + ": " + what);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_flow_value(const std::string& text, size_t line_no) {
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        fail_line(line_no, "malformed flow value '" + text + "'");
    }
    if (pos != text.size()) fail_line(line_no, "malformed flow value '" + text + "'");
    if (std::isnan(v)) fail_line(line_no, "malformed flow value '" + text + "'");
    return v;
}

}  // namespace

FlowSeries load_flow_csv(std::istream& in) {
    std::string line;
    size_t line_no = 0;
    if (!std::getline(in, line)) throw std::runtime_error("flow csv: empty stream");
    ++line_no;
    if (trim(line) != "date,flow_m3s")
        fail_line(line_no, "expected header 'date,flow_m3s', got '" + trim(line) + "'");

    FlowSeries series;
    bool have_first = false;
    Date prev{};
    while (std::getline(in, line)) {
        ++line_no;
        std::string row = trim(line);
        if (row.empty()) continue;
        auto comma = row.find(',');
        if (comma == std::string::npos) fail_line(line_no, "expected 'date,flow' row, got '" + row + "'");
        Date d;
        try {
            d = parse_date(trim(row.substr(0, comma)));
        } catch (const std::exception& e) {
            fail_line(line_no, e.what());
        }
        double flow = parse_flow_value(trim(row.substr(comma + 1)), line_no);
        if (flow < 0)
            fail_line(line_no, "negative flow " + std::to_string(flow) + " on " + format_date(d));
        if (is_leap_day(d)) continue;  // leap days are excluded
        if (!have_first) {
            series.start_date = d;
            have_first = true;
        } else {
            Date expected = next_day_skipping_leap(prev);
            if (d == prev) fail_line(line_no, "duplicate date " + format_date(d));
            if (d < expected) fail_line(line_no, "out-of-order date " + format_date(d));
            if (expected < d)
                fail_line(line_no, "gap in dates: expected " + format_date(expected) + ", got " +
                                       format_date(d));
        }
        series.values.push_back(flow);
        prev = d;
    }
    if (series.values.empty()) throw std::runtime_error("flow csv: no data rows");
    return series;
}

void write_flow_csv(std::ostream& out, const FlowSeries& series) {
    out << "date,flow_m3s\n";
    Date d = series.start_date;
    char buf[32];
    for (double v : series.values) {
        std::snprintf(buf, sizeof(buf), "%.4f", v);
        out << format_date(d) << ',' << buf << '\n';
        d = next_day_skipping_leap(d);
    }
}

MeanFlowProfile build_mean_profile(std::span<const FlowSeries> histories, int window_days) {
    if (histories.empty()) throw std::invalid_argument("mean profile: no history series");
    if (window_days < 1 || window_days % 2 == 0)
        throw std::invalid_argument("mean profile: window_days must be odd and >= 1");

    std::vector<double> sum(365, 0.0);
    std::vector<long> count(365, 0);
    for (const FlowSeries& h : histories) {
        if (h.values.empty() || h.values.size() % 365 != 0)
            throw std::invalid_argument("mean profile: history of " +
                                        std::to_string(h.values.size()) +
                                        " days is not a multiple of 365");
        for (size_t i = 0; i < h.values.size(); ++i) {
            int d = h.day_of_year(i);
            sum[static_cast<size_t>(d)] += h.values[i];
            count[static_cast<size_t>(d)] += 1;
        }
    }
    std::vector<double> daily(365);
    for (size_t d = 0; d < 365; ++d) daily[d] = sum[d] / static_cast<double>(count[d]);

    MeanFlowProfile profile;
    profile.window_days = window_days;
    profile.values.resize(365);
    int half = window_days / 2;
    for (int d = 0; d < 365; ++d) {
        double acc = 0;
        for (int k = -half; k <= half; ++k) {
            int j = (d + k) % 365;
            if (j < 0) j += 365;
            acc += daily[static_cast<size_t>(j)];
        }
        profile.values[static_cast<size_t>(d)] = acc / window_days;
    }
    return profile;
}

void write_profile_csv(std::ostream& out, const MeanFlowProfile& profile) {
    out << "day_index,flow_m3s\n";
    char buf[32];
    for (size_t d = 0; d < profile.values.size(); ++d) {
        std::snprintf(buf, sizeof(buf), "%.6f", profile.values[d]);
        out << d << ',' << buf << '\n';
    }
}

MeanFlowProfile load_profile_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "day_index,flow_m3s")
        throw std::runtime_error("profile csv: expected header 'day_index,flow_m3s'");
    MeanFlowProfile profile;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string row = trim(line);
        if (row.empty()) continue;
        auto comma = row.find(',');
        if (comma == std::string::npos) fail_line(line_no, "expected 'day_index,flow' row");
        long idx = std::stol(row.substr(0, comma));
        if (idx != static_cast<long>(profile.values.size()))
            fail_line(line_no, "day_index out of order");
        double v = parse_flow_value(trim(row.substr(comma + 1)), line_no);
        if (v < 0) fail_line(line_no, "negative flow");
        profile.values.push_back(v);
    }
    if (profile.values.size() != 365)
        throw std::runtime_error("profile csv: expected 365 entries, got " +
                                 std::to_string(profile.values.size()));
    return profile;
}

FlowProjection project_flow(const MeanFlowProfile& profile, int anchor_day, double anchor_flow,
                            double half_life, int horizon_days) {
    if (half_life <= 0) throw std::invalid_argument("project_flow: half_life must be > 0");
    if (horizon_days < 1) throw std::invalid_argument("project_flow: horizon must be >= 1");
    if (anchor_day < 0 || anchor_day > 364)
        throw std::invalid_argument("project_flow: anchor_day out of [0, 364]");
    if (anchor_flow < 0) throw std::invalid_argument("project_flow: negative anchor flow");

    FlowProjection proj;
    proj.anchor_day = anchor_day;
    proj.anchor_flow = anchor_flow;
    proj.half_life = half_life;
    proj.horizon_days = horizon_days;
    proj.values.resize(static_cast<size_t>(horizon_days));
    proj.values[0] = anchor_flow;
    double dev0 = anchor_flow - profile.at(anchor_day);
    for (int s = 1; s < horizon_days; ++s) {
        double dev = dev0 * std::exp2(-static_cast<double>(s) / half_life);
        proj.values[static_cast<size_t>(s)] = std::max(0.0, dev + profile.at(anchor_day + s));
    }
    return proj;
}

FlowProjection splice_forecast(const FlowProjection& projection, const MeanFlowProfile& profile,
                               std::span<const double> forecast, int m_days) {
    if (m_days < 0) throw std::invalid_argument("splice_forecast: negative forecast length");
    if (static_cast<int>(forecast.size()) < m_days)
        throw std::invalid_argument("splice_forecast: forecast of " +
                                    std::to_string(forecast.size()) + " days is shorter than M=" +
                                    std::to_string(m_days));
    if (m_days == 0) return projection;

    FlowProjection out = projection;
    int m = std::min(m_days, projection.horizon_days);
    for (int s = 0; s < m; ++s)
        out.values[static_cast<size_t>(s)] = std::max(0.0, forecast[static_cast<size_t>(s)]);
    // Reversion restarts at day m: the last forecast deviation carries over
    // undecayed, then halves every half_life days.
    double dev0 = out.values[static_cast<size_t>(m - 1)] - profile.at(projection.anchor_day + m - 1);
    for (int s = m; s < projection.horizon_days; ++s) {
        double dev = dev0 * std::exp2(-static_cast<double>(s - m) / projection.half_life);
        out.values[static_cast<size_t>(s)] =
            std::max(0.0, dev + profile.at(projection.anchor_day + s));
    }
    return out;
}

FlowSeries synth_flow(std::uint64_t seed, int n_years, int start_year, const SynthParams& p) {
    if (n_years < 1) throw std::invalid_argument("synth_flow: n_years must be >= 1");

    auto bump = [](double day, double peak, double width) {
        double d = std::fabs(day - peak);
        d = std::min(d, 365.0 - d);  // circular distance
        return std::exp(-0.5 * (d / width) * (d / width));
    };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    FlowSeries series;
    series.start_date = {start_year, 1, 1};
    series.values.reserve(static_cast<size_t>(n_years) * 365);
    for (int y = 0; y < n_years; ++y) {
        double spring = p.spring_amp * std::exp(p.amp_sigma * gauss(rng));
        double autumn = p.autumn_amp * std::exp(p.amp_sigma * gauss(rng));
        double z = 0.0;  // AR(1) log-noise, stationary variance noise_sigma^2
        double innov = p.noise_sigma * std::sqrt(1.0 - p.noise_corr * p.noise_corr);
        for (int d = 0; d < 365; ++d) {
            z = p.noise_corr * z + innov * gauss(rng);
            double base = p.winter_flow + spring * bump(d, p.spring_peak_day, p.spring_width) +
                          autumn * bump(d, p.autumn_peak_day, p.autumn_width);
            series.values.push_back(base * std::exp(z));
        }
    }
    return series;
}

}  // namespace hydrodp
