#include "wlab/energy/report.hpp"

#include <chrono>

namespace wlab::energy {

TopologyData TopologyData::from_model(const surfaces::ImmersionModel& model) {
    TopologyData t;
    const auto& topo = model.topology();
    t.euler_char = topo.euler_char;
    for (const auto& bp : topo.branch_points) t.branch_orders.push_back(bp.order_a);
    for (const auto& e : topo.ends) t.end_orders.push_back(e.b);
    return t;
}

double TopologyData::gauss_bonnet() const {
    int acc = euler_char;
    for (int a : branch_orders) acc += a;
    for (int b : end_orders) acc -= b;
    return 2.0 * kPi * acc;
}

EnergyReport energy_report(const surfaces::ImmersionModel& model, const TopologyData& topo,
                           const QuadratureSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    EnergyReport rep;
    rep.willmore = integrate_density(model, DensityKind::MeanSq, spec);
    rep.total_curv = integrate_density(model, DensityKind::SecondFF, spec);
    rep.tracefree = integrate_density(model, DensityKind::Tracefree, spec);
    rep.gauss = integrate_density(model, DensityKind::Gauss, spec);
    rep.gauss_bonnet_predicted = topo.gauss_bonnet();
    // pointwise |A|^2 = 4H^2 - 2K and |Aring|^2 = 2H^2 - 2K integrate to
    // E = 4W - 2 int K and tracefree = 2W - 2 int K
    rep.identity_residuals = {
        rep.total_curv.value - 4.0 * rep.willmore.value + 2.0 * rep.gauss.value,
        rep.tracefree.value - 2.0 * rep.willmore.value + 2.0 * rep.gauss.value,
    };
    rep.panels_used = rep.willmore.panels + rep.total_curv.panels + rep.tracefree.panels +
                      rep.gauss.panels;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

EnergyReport energy_report(const surfaces::ImmersionModel& model, const QuadratureSpec& spec) {
    return energy_report(model, TopologyData::from_model(model), spec);
}

int gauss_map_degree(const algebra::RationalFunction& g) {
    return std::max(g.numerator().degree(), g.denominator().degree());
}

} // namespace wlab::energy
