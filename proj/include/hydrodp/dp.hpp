#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "hydrodp/flow.hpp"
#include "hydrodp/plant.hpp"

namespace hydrodp {

// Discretization of the (day, volume, mode) state space.
struct GridSpec {
    double dt = 1.0;           // days per step
    int horizon = 365;         // T
    double dq = 0.25;          // flow step, m3/s
    int volume_levels = 1000;  // volume steps; grid points = levels + 1
};

void validate(const GridSpec& grid);

// Nearest-point grid maps. These are the only rounding rules in the
// engine; tests and oracles must go through the same functions.
inline double quantize_flow(double flow, double dq) {
    return std::floor(flow / dq + 0.5) * dq;
}

inline double volume_at_level(int level, double v_max, int volume_levels) {
    return level * (v_max / volume_levels);
}

inline int level_from_volume(double volume, double v_max, int volume_levels) {
    double dv = v_max / volume_levels;
    int level = static_cast<int>(std::floor(volume / dv + 0.5));
    return std::clamp(level, 0, volume_levels);
}

// Value of the end-of-horizon state: the water deficit priced at design
// speed with running costs disregarded, plus the closing switch cost for
// plants not already off.
struct TerminalValuation {
    int levels = 0;  // grid points
    int modes = 0;
    std::vector<double> values;  // [level][mode]

    double at(int level, int mode) const {
        return values[static_cast<size_t>(level) * modes + static_cast<size_t>(mode)];
    }
};

TerminalValuation terminal_valuation(const DamPlantSpec& spec, const GridSpec& grid, double price);
TerminalValuation terminal_valuation(const RoRPlantSpec& spec, double price);

// Optimal continuation values and maximizing decisions on the grid.
// values[t][v][i] is the best achievable profit from day t onward when
// entering that day at volume level v in mode i.
struct ValueTable {
    int horizon = 0;
    int levels = 0;
    int modes = 0;
    std::vector<double> values;        // (horizon+1) * levels * modes
    std::vector<std::uint8_t> argmax;  // same shape; slice at t=horizon is the identity

    size_t index(int t, int level, int mode) const {
        return (static_cast<size_t>(t) * levels + static_cast<size_t>(level)) * modes +
               static_cast<size_t>(mode);
    }
    double value(int t, int level, int mode) const;
    int argmax_at(int t, int level, int mode) const;
};

// Backward induction over one deterministic flow path. Flows are
// quantized to the dq grid before use. Ties prefer staying in the
// current mode, then the lowest mode index.
ValueTable solve(std::span<const double> flow_path, const DamPlantSpec& spec, const GridSpec& grid,
                 const PriceSeries& price, const TerminalValuation& terminal);
ValueTable solve(std::span<const double> flow_path, const RoRPlantSpec& spec, const GridSpec& grid,
                 const PriceSeries& price, const TerminalValuation& terminal);

int decide(const ValueTable& table, int day, int level, int mode);

struct SwitchEvent {
    int day;
    int from;
    int to;
    double cost;
};

// Executed strategy: one mode per day plus everything needed to audit
// the run.
struct StrategyRecord {
    std::vector<int> modes;           // length T
    std::vector<SwitchEvent> switches;
    std::vector<double> payoffs;      // m.u. per day
    std::vector<double> volumes;      // m3, start of day, length T+1
    std::vector<double> spills;       // m3 per day
    std::vector<double> inflows;      // m3/s, dq-quantized
    std::vector<double> flows_used;   // m3/s through the turbines
    std::vector<double> heads;        // m, start of day
    double terminal_adjustment = 0;
    double total_profit = 0;

    int switch_count() const { return static_cast<int>(switches.size()); }
};

// Solves on the realized flow and rolls the argmax forward from
// (day 0, full reservoir, mode 0).
StrategyRecord run_hindsight(const FlowSeries& actual, const DamPlantSpec& spec,
                             const GridSpec& grid, const PriceSeries& price,
                             int start_level = -1, int start_mode = 0);
StrategyRecord run_hindsight(const FlowSeries& actual, const RoRPlantSpec& spec,
                             const GridSpec& grid, const PriceSeries& price, int start_mode = 0);

// Returns the forecast flows available on the given day (at most M values).
using Forecaster = std::function<std::vector<double>(int day)>;

// Perfect forecaster: the next m_days of the realized flow.
Forecaster perfect_forecaster(const FlowSeries& actual, int m_days);

// Daily re-optimization: each day projects the flow from the current
// observation, splices the forecast, re-solves the remaining horizon and
// applies the first decision; the reservoir then advances on the
// realized flow.
StrategyRecord run_receding_horizon(const FlowSeries& actual, const Forecaster& forecaster,
                                    const DamPlantSpec& spec, const GridSpec& grid,
                                    const PriceSeries& price, double half_life,
                                    const MeanFlowProfile& profile, int start_level = -1,
                                    int start_mode = 0);
StrategyRecord run_receding_horizon(const FlowSeries& actual, const Forecaster& forecaster,
                                    const RoRPlantSpec& spec, const GridSpec& grid,
                                    const PriceSeries& price, double half_life,
                                    const MeanFlowProfile& profile, int start_mode = 0);

// Line-oriented text serialization: one row per day, then the switch
// events, terminal adjustment and total as annotated trailing rows.
void write_record(std::ostream& out, const StrategyRecord& record);

}  // namespace hydrodp
