#include "hydrodp/plant.hpp"

namespace hydrodp {

namespace {

std::vector<double> build_matrix(int n_modes, Regime regime, double gamma, double d_ref) {
    std::vector<double> c(static_cast<size_t>(n_modes) * n_modes);
    for (int i = 0; i < n_modes; ++i)
        for (int j = 0; j < n_modes; ++j)
            c[static_cast<size_t>(i) * n_modes + j] = switch_cost(i, j, regime, gamma, d_ref);
    return c;
}

}  // namespace

std::vector<double> switch_cost_matrix(const DamPlantSpec& spec) {
    return build_matrix(spec.n_modes, Regime::dam, spec.gamma, reference_profit(spec));
}

std::vector<double> switch_cost_matrix(const RoRPlantSpec& spec) {
    return build_matrix(RoRPlantSpec::n_modes, Regime::ror, spec.gamma, reference_profit(spec));
}

void validate(const DamPlantSpec& spec) {
    const auto& e = spec.efficiency;
    if (!(e.alpha > 0 && e.alpha <= 1)) throw std::invalid_argument("alpha must be in (0, 1]");
    if (e.beta < 0) throw std::invalid_argument("beta must be >= 0");
    if (e.design_flow <= 0) throw std::invalid_argument("f_d must be > 0");
    if (!(spec.f_min > 0 && spec.f_min <= e.design_flow && e.design_flow <= spec.f_max))
        throw std::invalid_argument("need 0 < f_min <= f_d <= f_max");
    if (spec.gamma < 0 || spec.gamma > 0.01)
        throw std::invalid_argument("gamma must be in [0, 0.01]");
    if (spec.c_run < 0 || spec.c_low < 0) throw std::invalid_argument("costs must be >= 0");
    if (spec.reservoir.h_max <= 0 || spec.reservoir.v_max <= 0)
        throw std::invalid_argument("reservoir must have positive size");
    if (spec.n_modes < 2) throw std::invalid_argument("need at least modes {off, on}");
}

void validate(const RoRPlantSpec& spec) {
    const auto& e = spec.efficiency;
    if (!(e.alpha > 0 && e.alpha <= 1)) throw std::invalid_argument("alpha must be in (0, 1]");
    if (e.beta < 0) throw std::invalid_argument("beta must be >= 0");
    if (e.design_flow <= 0) throw std::invalid_argument("f_d must be > 0");
    if (!(spec.f_min > 0 && spec.f_min <= e.design_flow && e.design_flow <= spec.f_max))
        throw std::invalid_argument("need 0 < f_min <= f_d <= f_max");
    if (spec.gamma < 0 || spec.gamma > 0.01)
        throw std::invalid_argument("gamma must be in [0, 0.01]");
    if (spec.c_run < 0 || spec.c_low < 0) throw std::invalid_argument("costs must be >= 0");
    if (spec.fixed_head <= 0) throw std::invalid_argument("fixed_head must be > 0");
    if (spec.split_grid < 1) throw std::invalid_argument("split_grid must be >= 1");
}

}  // namespace hydrodp
