#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hydrodp/calendar.hpp"

namespace hydrodp {

// Dated daily river flow observations, m3/s. Gapless in the 365-day
// calendar: values[i] belongs to start_date advanced by i days.
struct FlowSeries {
    Date start_date;
    std::vector<double> values;

    Date date_at(size_t i) const { return advance_skipping_leap(start_date, static_cast<long>(i)); }
    int day_of_year(size_t i) const {
        return static_cast<int>((day_of_year_365(start_date) + i) % 365);
    }
};

// 365-entry smoothed historical average flow, m3/s.
struct MeanFlowProfile {
    std::vector<double> values;  // exactly 365
    int window_days = 7;

    // Circular lookup, any integer day index.
    double at(long day_index) const {
        long d = day_index % 365;
        if (d < 0) d += 365;
        return values[static_cast<size_t>(d)];
    }
};

// Deterministic flow trajectory: spliced forecast days followed by
// exponential reversion of the deviation from the mean profile.
struct FlowProjection {
    int anchor_day = 0;       // day-of-year index in [0, 364]
    double anchor_flow = 0;   // m3/s
    double half_life = 10;    // days
    int horizon_days = 1;
    std::vector<double> values;  // length horizon_days
};

// Reads `date,flow_m3s` CSV (header required, ascending dates, no gaps).
// Feb 29 rows are dropped. Throws std::runtime_error naming the line on
// malformed rows, negative flows, duplicates, out-of-order dates or gaps.
FlowSeries load_flow_csv(std::istream& in);

void write_flow_csv(std::ostream& out, const FlowSeries& series);

// Across-years mean of day-d flows, then centered circular moving
// average of width window_days (odd, >= 1). Histories must cover whole
// 365-day years.
MeanFlowProfile build_mean_profile(std::span<const FlowSeries> histories, int window_days);

void write_profile_csv(std::ostream& out, const MeanFlowProfile& profile);
MeanFlowProfile load_profile_csv(std::istream& in);

// Projects flow from (anchor_day, anchor_flow): the deviation from the
// profile halves every half_life days; day indices wrap modulo 365.
// Values are floored at 0.
FlowProjection project_flow(const MeanFlowProfile& profile, int anchor_day, double anchor_flow,
                            double half_life, int horizon_days);

// Replaces the first m_days of the projection with the forecast; from
// day m_days on, the deviation of the last forecast value from the
// profile carries over undecayed and then halves every half_life days.
FlowProjection splice_forecast(const FlowProjection& projection, const MeanFlowProfile& profile,
                               std::span<const double> forecast, int m_days);

// Synthetic flow generator: low winter flow, a Gaussian spring-flood
// bump and a smaller autumn bump, with year-specific multiplicative
// noise. Deterministic for a given seed.
struct SynthParams {
    double winter_flow = 3.0;      // m3/s baseline
    double spring_peak_day = 120;  // day-of-year of the flood crest
    double spring_width = 15;      // days
    double spring_amp = 30;        // m3/s
    double autumn_peak_day = 280;
    double autumn_width = 22;
    double autumn_amp = 8;
    double amp_sigma = 0.25;       // lognormal sigma on the bump amplitudes
    double noise_sigma = 0.18;     // lognormal sigma of the daily noise
    double noise_corr = 0.9;       // day-to-day correlation of the noise
};

FlowSeries synth_flow(std::uint64_t seed, int n_years, int start_year,
                      const SynthParams& params = {});

}  // namespace hydrodp
