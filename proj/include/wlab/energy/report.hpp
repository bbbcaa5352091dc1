#pragma once

#include <string>
#include <vector>

#include "wlab/algebra/rational.hpp"
#include "wlab/energy/quadrature.hpp"

namespace wlab::energy {

// Branch/end bookkeeping entering the branched Gauss-Bonnet count
// 2 pi (chi + sum a_i - sum b_j): branch points have multiplicity a_i + 1,
// ends have multiplicity b_j - 1 (a simple planar end has b = 2).
struct TopologyData {
    int euler_char = 2;
    std::vector<int> branch_orders; // the a_i
    std::vector<int> end_orders;    // the b_j

    static TopologyData from_model(const surfaces::ImmersionModel& model);
    double gauss_bonnet() const;
};

struct EnergyReport {
    IntegralResult willmore;      // W = int H^2
    IntegralResult total_curv;    // E = int |A|^2
    IntegralResult tracefree;     // int |Aring|^2
    IntegralResult gauss;         // int K
    double gauss_bonnet_predicted = 0.0;
    // [ E - 4W + 2 int K,  int|Aring|^2 - 2W + int K ]
    std::vector<double> identity_residuals;
    long panels_used = 0;
    double seconds = 0.0;
};

EnergyReport energy_report(const surfaces::ImmersionModel& model, const TopologyData& topo,
                           const QuadratureSpec& spec);
EnergyReport energy_report(const surfaces::ImmersionModel& model, const QuadratureSpec& spec);

// Degree of a rational Gauss map: max(deg num, deg den). The total
// curvature of a complete minimal surface is -4 pi times this.
int gauss_map_degree(const algebra::RationalFunction& g);

} // namespace wlab::energy
