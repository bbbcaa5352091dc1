#pragma once

#include <functional>
#include <vector>

#include "wlab/surfaces/frame.hpp"
#include "wlab/surfaces/model.hpp"

namespace wlab::energy {

enum class DensityKind { MeanSq, SecondFF, Tracefree, Gauss };

DensityKind density_kind_from_string(const std::string& s);
const char* to_string(DensityKind k);

struct QuadratureSpec {
    double rel_tol = 1e-3;
    int max_depth = 18;
    double chart_split_radius = 1.0;
    // chart points to refine toward (z-chart locations; the w-chart adds
    // its own center and the images of outer singularities)
    std::vector<Complex> singular_points;

    static QuadratureSpec for_model(const surfaces::ImmersionModel& model, double rel_tol = 1e-3);
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long panels = 0;
};

// Integral of the curvature density over the immersion: the plane is split
// at |z| = chart_split_radius, the outside handled in the w = 1/z chart
// where the measure factor is carried by the reparametrized conformal
// factor. Adaptive polar panels with dyadic refinement toward singular
// points; throws NonConvergent when max_depth panels still carry the tail.
IntegralResult integrate_density(const surfaces::ImmersionModel& model, DensityKind kind,
                                 const QuadratureSpec& spec);

// Adaptive integral of f over the disk |z| <= R in polar panels. Exposed
// for the chart pieces and for tests.
IntegralResult integrate_disk(const std::function<double(Complex)>& f, double R,
                              const std::vector<Complex>& singular, double rel_tol,
                              int max_depth);

double density_value(const surfaces::GeometryFrame& f, DensityKind kind);

} // namespace wlab::energy
