#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hydrodp {

// rho * g for water, SI units.
inline constexpr double kRhoG = 1000.0 * 9.82;
inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kJoulesPerKwh = 3.6e6;

// Quadratic efficiency curve peaking at the design flow.
struct EfficiencyParams {
    double alpha = 0.92;      // peak efficiency
    double beta = 0.45;       // curvature
    double design_flow = 10;  // F_d, m3/s
};

// eta(F) = alpha - beta * (F / F_d - 1)^2. Not clamped.
inline double efficiency(double flow, const EfficiencyParams& p) {
    double r = flow / p.design_flow - 1.0;
    return p.alpha - p.beta * r * r;
}

// Cone-shaped reservoir sized to hold n days of design flow.
struct ReservoirSpec {
    double h_max = 5;          // m
    double v_max = 0;          // m3
    int volume_levels = 1000;  // native grid resolution (steps)
};

inline ReservoirSpec make_reservoir(double h_max, double design_flow, double dam_days,
                                    int volume_levels = 1000) {
    if (h_max <= 0 || design_flow <= 0 || dam_days <= 0 || volume_levels < 1)
        throw std::invalid_argument("make_reservoir: nonpositive parameter");
    return ReservoirSpec{h_max, design_flow * kSecondsPerDay * dam_days, volume_levels};
}

// H(V) = H_max * (V / V_max)^(1/3).
inline double head_from_volume(double volume, const ReservoirSpec& r) {
    if (volume < 0 || volume > r.v_max * (1 + 1e-12))
        throw std::out_of_range("head_from_volume: volume outside [0, v_max]");
    return r.h_max * std::cbrt(volume / r.v_max);
}

// Inverse of head_from_volume.
inline double volume_from_head(double head, const ReservoirSpec& r) {
    if (head < 0 || head > r.h_max * (1 + 1e-12))
        throw std::out_of_range("volume_from_head: head outside [0, h_max]");
    double f = head / r.h_max;
    return r.v_max * f * f * f;
}

struct ReservoirStep {
    double new_volume;  // m3, clamped to [0, v_max]
    double spill;       // m3 lost over the top
};

// One explicit Euler step of the reservoir balance.
inline ReservoirStep step_reservoir(double volume, double inflow, double outflow, double dt_days,
                                    const ReservoirSpec& r) {
    double raw = volume + (inflow - outflow) * kSecondsPerDay * dt_days;
    double spill = std::max(raw - r.v_max, 0.0);
    double clamped = std::clamp(raw, 0.0, r.v_max);
    return {clamped, spill};
}

struct DamPlantSpec {
    EfficiencyParams efficiency;
    ReservoirSpec reservoir;
    double f_min = 5;      // m3/s
    double f_max = 13;     // m3/s
    double c_run = 100;    // m.u./h while producing
    double c_low = 1000;   // m.u./h penalty at empty dam
    double gamma = 0.0025; // switching-cost fraction of D
    int n_modes = 12;      // mode 0 = off
};

struct RoRPlantSpec {
    EfficiencyParams efficiency;
    double fixed_head = 5;  // m, constant
    double f_min = 5;       // per unit, m3/s
    double f_max = 13;      // per unit, m3/s
    double c_run = 100;
    double c_low = 1000;
    double gamma = 0.0025;
    int split_grid = 100;  // delta search resolution for two-unit mode

    static constexpr int n_modes = 3;  // off, one unit, two units
};

// Daily electricity price, m.u./kWh.
struct PriceSeries {
    std::vector<double> values;

    static PriceSeries constant(double price, int days) {
        PriceSeries p;
        p.values.assign(static_cast<size_t>(days), price);
        return p;
    }
    double at(size_t day) const {
        if (day < values.size()) return values[day];
        return values.back();  // extend the last quote
    }
};

// Turbine flow of a production mode: 0 when off, otherwise F_min plus
// (i-1) tenths of the span to F_max.
inline double mode_flow(int mode, const DamPlantSpec& spec) {
    if (mode < 0 || mode >= spec.n_modes) throw std::out_of_range("mode_flow: mode out of range");
    if (mode == 0) return 0.0;
    return spec.f_min + (mode - 1) / 10.0 * (spec.f_max - spec.f_min);
}

// Daily payoff of a dam-plant mode at the given head, m.u./day.
// Productive modes pay the running cost; an empty dam adds the c_low
// penalty instead of generating.
inline double payoff_dam(int mode, double head, double price, const DamPlantSpec& spec) {
    if (mode < 0 || mode >= spec.n_modes) throw std::out_of_range("payoff_dam: mode out of range");
    if (mode == 0) return 0.0;
    if (head <= 0.0) return 24.0 * (-spec.c_run - spec.c_low);
    double flow = mode_flow(mode, spec);
    double kw = kRhoG * head * efficiency(flow, spec.efficiency) * flow / 1000.0;
    return 24.0 * (kw * price - spec.c_run);
}

// Hourly payoff of a single RoR unit fed `flow`, m.u./h.
inline double ror_unit_payoff(double flow, double price, const RoRPlantSpec& spec) {
    double c = kRhoG * spec.fixed_head / 1000.0;  // kW per (eta * m3/s)
    if (flow < spec.f_min) return -spec.c_run - spec.c_low;
    double f = std::min(flow, spec.f_max);
    return c * efficiency(f, spec.efficiency) * f * price - spec.c_run;
}

// Daily payoff of a RoR mode at the given river flow, m.u./day. Mode 2
// splits the flow between the two units to maximize the combined output.
inline double payoff_ror(int mode, double flow, double price, const RoRPlantSpec& spec) {
    if (mode < 0 || mode >= RoRPlantSpec::n_modes)
        throw std::out_of_range("payoff_ror: mode out of range");
    if (flow < 0) throw std::invalid_argument("payoff_ror: negative flow");
    if (mode == 0) return 0.0;
    if (mode == 1) return 24.0 * ror_unit_payoff(flow, price, spec);
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= spec.split_grid; ++k) {
        double delta = static_cast<double>(k) / spec.split_grid;
        double v = ror_unit_payoff(delta * flow, price, spec) +
                   ror_unit_payoff((1.0 - delta) * flow, price, spec);
        best = std::max(best, v);
    }
    return 24.0 * best;
}

enum class Regime { dam, ror };

// Cost of moving between production modes, m.u. d_ref is the reference
// profit D of a full year at maximum capacity.
inline double switch_cost(int from_mode, int to_mode, Regime regime, double gamma, double d_ref) {
    int max_mode = regime == Regime::dam ? 11 : 2;
    if (from_mode < 0 || to_mode < 0 || from_mode > max_mode || to_mode > max_mode)
        throw std::out_of_range("switch_cost: invalid mode pair");
    if (from_mode == to_mode) return 0.0;
    if (regime == Regime::dam) {
        if (from_mode == 0 || to_mode == 0) return gamma * d_ref;
        return gamma * d_ref / 25.0;
    }
    return std::abs(from_mode - to_mode) == 1 ? gamma * d_ref : 1.5 * gamma * d_ref;
}

// D: profit of running flat out at F_max for a full year at unit price.
inline double reference_profit(const EfficiencyParams& eff, double h_max, double f_max,
                               double c_run) {
    double kw = kRhoG * h_max * efficiency(f_max, eff) * f_max / 1000.0;
    return 365.0 * 24.0 * (kw * 1.0 - c_run);
}

inline double reference_profit(const DamPlantSpec& spec) {
    return reference_profit(spec.efficiency, spec.reservoir.h_max, spec.f_max, spec.c_run);
}

inline double reference_profit(const RoRPlantSpec& spec) {
    return reference_profit(spec.efficiency, spec.fixed_head, spec.f_max, spec.c_run);
}

// Full switching-cost matrix, row-major [from][to].
std::vector<double> switch_cost_matrix(const DamPlantSpec& spec);
std::vector<double> switch_cost_matrix(const RoRPlantSpec& spec);

void validate(const DamPlantSpec& spec);
void validate(const RoRPlantSpec& spec);

}  // namespace hydrodp
