#include "wlab/energy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wlab/errors.hpp"

namespace wlab::energy {

using surfaces::GeometryFrame;
using surfaces::ImmersionModel;

DensityKind density_kind_from_string(const std::string& s) {
    if (s == "H2") return DensityKind::MeanSq;
    if (s == "A2") return DensityKind::SecondFF;
    if (s == "Aring2") return DensityKind::Tracefree;
    if (s == "K") return DensityKind::Gauss;
    throw UsageError("unknown density kind: " + s);
}

const char* to_string(DensityKind k) {
    switch (k) {
        case DensityKind::MeanSq: return "H2";
        case DensityKind::SecondFF: return "A2";
        case DensityKind::Tracefree: return "Aring2";
        case DensityKind::Gauss: return "K";
    }
    return "?";
}

double density_value(const GeometryFrame& f, DensityKind kind) {
    switch (kind) {
        case DensityKind::MeanSq: return f.H * f.H;
        case DensityKind::SecondFF: return 4.0 * f.H * f.H - 2.0 * f.K;
        case DensityKind::Tracefree: return 2.0 * f.H * f.H - 2.0 * f.K;
        case DensityKind::Gauss: return f.K;
    }
    return 0.0;
}

QuadratureSpec QuadratureSpec::for_model(const ImmersionModel& model, double rel_tol) {
    QuadratureSpec spec;
    spec.rel_tol = rel_tol;
    spec.singular_points = model.singular_points();
    return spec;
}

namespace {

// 8-point Gauss-Legendre on [-1,1]
const double kGlNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
const double kGlWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                              0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                              0.2223810344533745, 0.1012285362903763};

struct Panel {
    double r0, r1, t0, t1;
    int depth;
    long seq;
    double coarse; // GL on the panel itself
    double fine;   // sum of GL on the 4 children
    double err;    // |coarse - fine|
};

double gl_panel(const std::function<double(Complex)>& f, double r0, double r1, double t0,
                double t1) {
    double acc = 0.0;
    const double hr = 0.5 * (r1 - r0), mr = 0.5 * (r1 + r0);
    const double ht = 0.5 * (t1 - t0), mt = 0.5 * (t1 + t0);
    for (int i = 0; i < 8; ++i) {
        double r = mr + hr * kGlNodes[i];
        for (int j = 0; j < 8; ++j) {
            double t = mt + ht * kGlNodes[j];
            acc += kGlWeights[i] * kGlWeights[j] * f(Complex(r * std::cos(t), r * std::sin(t))) * r;
        }
    }
    return acc * hr * ht;
}

double children_sum(const std::function<double(Complex)>& f, const Panel& p) {
    double rm = 0.5 * (p.r0 + p.r1), tm = 0.5 * (p.t0 + p.t1);
    return gl_panel(f, p.r0, rm, p.t0, tm) + gl_panel(f, p.r0, rm, tm, p.t1) +
           gl_panel(f, rm, p.r1, p.t0, tm) + gl_panel(f, rm, p.r1, tm, p.t1);
}

} // namespace

IntegralResult integrate_disk(const std::function<double(Complex)>& f, double R,
                              const std::vector<Complex>& singular, double rel_tol,
                              int max_depth) {
    // initial breakpoints put every singular point on a panel corner
    std::set<double> rset{0.0, R};
    std::set<double> tset{0.0, 2.0 * kPi};
    for (Complex s : singular) {
        double r = std::abs(s);
        if (r > 1e-14 && r < R * (1.0 - 1e-12)) {
            rset.insert(r);
            double t = std::arg(s);
            if (t < 0) t += 2.0 * kPi;
            tset.insert(t);
        }
    }
    for (int k = 1; k < 4; ++k) rset.insert(R * k / 4.0);
    for (int k = 1; k < 8; ++k) tset.insert(2.0 * kPi * k / 8.0);

    std::vector<double> rs(rset.begin(), rset.end()), ts(tset.begin(), tset.end());

    std::vector<Panel> leaves;
    long seq = 0;
    for (size_t i = 0; i + 1 < rs.size(); ++i) {
        for (size_t j = 0; j + 1 < ts.size(); ++j) {
            Panel p{rs[i], rs[i + 1], ts[j], ts[j + 1], 0, seq++, 0, 0, 0};
            p.coarse = gl_panel(f, p.r0, p.r1, p.t0, p.t1);
            p.fine = children_sum(f, p);
            p.err = std::fabs(p.coarse - p.fine);
            leaves.push_back(p);
        }
    }

    const long kMaxPanels = 60000;
    while (true) {
        double total = 0.0, err = 0.0;
        for (const auto& p : leaves) {
            total += p.fine;
            err += p.err;
        }
        if (err <= rel_tol * std::max(std::fabs(total), 1e-14)) break;
        // refine the worst panel that still has depth budget
        long worst = -1;
        for (size_t k = 0; k < leaves.size(); ++k) {
            if (leaves[k].depth >= max_depth) continue;
            if (worst < 0 || leaves[k].err > leaves[worst].err ||
                (leaves[k].err == leaves[worst].err && leaves[k].seq < leaves[worst].seq))
                worst = static_cast<long>(k);
        }
        if (worst < 0 || static_cast<long>(leaves.size()) > kMaxPanels)
            throw NonConvergent("quadrature tail above tolerance at max_depth");
        Panel parent = leaves[worst];
        leaves.erase(leaves.begin() + worst);
        double rm = 0.5 * (parent.r0 + parent.r1), tm = 0.5 * (parent.t0 + parent.t1);
        const double bounds[4][4] = {{parent.r0, rm, parent.t0, tm},
                                     {parent.r0, rm, tm, parent.t1},
                                     {rm, parent.r1, parent.t0, tm},
                                     {rm, parent.r1, tm, parent.t1}};
        for (const auto& b : bounds) {
            Panel c{b[0], b[1], b[2], b[3], parent.depth + 1, seq++, 0, 0, 0};
            c.coarse = gl_panel(f, c.r0, c.r1, c.t0, c.t1);
            c.fine = children_sum(f, c);
            c.err = std::fabs(c.coarse - c.fine);
            leaves.push_back(c);
        }
    }

    // deterministic final accumulation
    std::sort(leaves.begin(), leaves.end(),
              [](const Panel& a, const Panel& b) { return a.seq < b.seq; });
    IntegralResult out;
    for (const auto& p : leaves) {
        out.value += p.fine;
        out.error_estimate += p.err;
    }
    out.panels = static_cast<long>(leaves.size());
    return out;
}

IntegralResult integrate_density(const ImmersionModel& model, DensityKind kind,
                                 const QuadratureSpec& spec) {
    if (kind == DensityKind::MeanSq && model.minimal()) return {0.0, 0.0, 0};

    const double R0 = spec.chart_split_radius;
    auto integrand = [&](const ImmersionModel& m) {
        return [&m, kind](Complex z) -> double {
            GeometryFrame f;
            try {
                f = frame(m, z);
            } catch (const SingularPoint&) {
                return 0.0; // measure-zero excision at a declared singularity
            }
            return density_value(f, kind) * f.e2l();
        };
    };

    std::vector<Complex> inner, outer;
    for (Complex s : spec.singular_points) {
        if (std::abs(s) < R0)
            inner.push_back(s);
        else
            outer.push_back(1.0 / s);
    }
    outer.push_back(0.0); // the point at infinity lives at the w-chart center

    ImmersionModel wchart = surfaces::reparam_infinity(model);
    IntegralResult a = integrate_disk(integrand(model), R0, inner, spec.rel_tol, spec.max_depth);
    IntegralResult b =
        integrate_disk(integrand(wchart), 1.0 / R0, outer, spec.rel_tol, spec.max_depth);

    return {a.value + b.value, a.error_estimate + b.error_estimate, a.panels + b.panels};
}

} // namespace wlab::energy
