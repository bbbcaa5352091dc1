#include "wlab/asymptotics/diagnostics.hpp"

#include <cmath>

#include "wlab/errors.hpp"
#include "wlab/surfaces/families.hpp"

namespace wlab::asymptotics {

using surfaces::frame;
using surfaces::GeometryFrame;
using surfaces::ImmersionModel;

namespace {

std::optional<double> try_density(const ImmersionModel& m, Complex z) {
    try {
        return frame(m, z).omega_density();
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

struct LineFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

LineFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t k = 0; k < n; ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
        syy += y[k] * y[k];
    }
    LineFit f;
    double denom = n * sxx - sx * sx;
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_tot = syy - sy * sy / n;
    double ss_res = 0;
    for (size_t k = 0; k < n; ++k) {
        double e = y[k] - (f.slope * x[k] + f.intercept);
        ss_res += e * e;
    }
    f.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}

} // namespace

std::vector<double> geometric_radii(double r_hi, double r_lo, int count) {
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k)
        out[k] = r_hi * std::pow(r_lo / r_hi, double(k) / double(count - 1));
    return out;
}

ConcentrationResult concentration_speed(const ImmersionModel& model,
                                        const ConcentrationGrid& grid) {
    ConcentrationResult best;
    best.argmax = 0.0;
    auto consider = [&](Complex z) {
        if (auto d = try_density(model, z); d && *d > best.sup_density) {
            best.sup_density = *d;
            best.argmax = z;
        }
    };
    if (grid.include_center) consider(0.0);
    for (double r : geometric_radii(grid.r_hi, grid.r_lo, grid.radii))
        for (int a = 0; a < grid.angles; ++a)
            consider(std::polar(r, 2.0 * kPi * a / grid.angles));

    // local zoom around the found peak
    for (int round = 0; round < grid.zoom_rounds; ++round) {
        Complex c = best.argmax;
        double span = std::max(std::abs(c) * 0.5, grid.r_lo);
        span /= std::pow(4.0, round);
        for (int i = -6; i <= 6; ++i)
            for (int j = -6; j <= 6; ++j)
                consider(c + span * Complex(i / 6.0, j / 6.0));
    }

    best.epsilon = best.sup_density > 0 ? 2.0 / best.sup_density
                                        : std::numeric_limits<double>::infinity();
    return best;
}

BlowupTable blowup_compare(const std::vector<double>& mu_list, double R, Complex a,
                           const Vec3& p) {
    BlowupTable table;
    if (std::abs(a.imag()) > 1e-12)
        throw UsageError("blowup_compare expects a real family parameter a");
    const double amp = (a * a / 9.0).real();
    ImmersionModel bubble = surfaces::enneper_variant(3.0 / a);

    for (double mu : mu_list) {
        ImmersionModel psi = surfaces::family_psi_mu(mu, a);
        ImmersionModel phi = surfaces::invert(psi, {p});
        const double mu3 = mu * mu * mu;
        const double mu9 = mu3 * mu3 * mu3;
        Vec3 origin = phi.jet(0.0).phi;

        BlowupRow row;
        row.mu = mu;
        // admissibility d(p, Psi_mu) > 1, sampled (an upper bound on the
        // true distance; the flag is reported, not required)
        row.min_dist = std::numeric_limits<double>::infinity();
        for (double r : geometric_radii(60.0, 1e-4, 72)) {
            for (int k = 0; k < 128; ++k) {
                Complex z = std::polar(r, 2.0 * kPi * (k + 0.31) / 128.0);
                try {
                    row.min_dist = std::min(row.min_dist, (psi.jet(z).phi - p).norm());
                } catch (const std::runtime_error&) {
                }
            }
        }
        row.admissible = row.min_dist > 1.0;

        for (int i = 1; i <= 64; ++i) {
            double r = R * i / 64.0;
            for (int j = 0; j < 64; ++j) {
                Complex z = std::polar(r, 2.0 * kPi * j / 64.0);
                Vec3 rescaled = (phi.jet(mu3 * z).phi - origin) / (-mu9);
                Vec3 target_val = amp * bubble.jet(z).phi;
                row.sup_error = std::max(row.sup_error, (rescaled - target_val).norm());
            }
        }
        table.rows.push_back(row);
    }

    if (table.rows.size() >= 2) {
        std::vector<double> lx, ly;
        for (const auto& r : table.rows) {
            lx.push_back(std::log(r.mu));
            ly.push_back(std::log(r.sup_error));
        }
        table.fitted_order = linear_fit(lx, ly).slope;
    }
    return table;
}

MultiplicityFit multiplicity_estimate(const ImmersionModel& model, Complex center,
                                      const std::vector<double>& radii, ProbeSide side) {
    ImmersionModel probe = model;
    if (side == ProbeSide::EndAtInfinity) {
        probe = surfaces::reparam_infinity(model);
        center = 0.0;
    }
    MultiplicityFit fit;
    fit.radii = radii;
    const int n_theta = 256;
    for (double r : radii) {
        double h = r / 200.0;
        double acc = 0.0;
        for (int k = 0; k < n_theta; ++k) {
            double th = 2.0 * kPi * k / n_theta;
            Complex dir(std::cos(th), std::sin(th));
            double lp = std::log(frame(probe, center + (r + h) * dir).conf_factor);
            double lm = std::log(frame(probe, center + (r - h) * dir).conf_factor);
            acc += (lp - lm) / (2.0 * h);
        }
        // (1/2pi) * contour integral, arc element r dtheta
        fit.circle_means.push_back(acc * r / n_theta);
    }
    double m_small = fit.circle_means.back();
    fit.theta_estimate = side == ProbeSide::EndAtInfinity ? -m_small - 2.0 : m_small;
    return fit;
}

std::pair<double, double> harnack_ratio(const ImmersionModel& model, double epsilon,
                                        double theta, const HarnackGrid& grid) {
    RadialWeight chi{epsilon};
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (double r : geometric_radii(grid.r_hi, grid.r_lo, grid.radii)) {
        for (int k = 0; k < grid.angles; ++k) {
            Complex z = std::polar(r, 2.0 * kPi * (k + 0.17) / grid.angles);
            try {
                double ratio = frame(model, z).conf_factor / std::pow(chi(z), theta);
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            } catch (const std::runtime_error&) {
                // grid point fell on a declared singularity; skip
            }
        }
    }
    if (!(hi > 0.0) || !std::isfinite(lo)) throw SingularPoint("harnack grid entirely singular");
    return {lo, hi};
}

ResidueFit second_residue_fit(const ImmersionModel& model, Complex center, ResidueProbe probe,
                              std::optional<Vec3> p, const std::vector<double>& radii) {
    ResidueFit fit;
    fit.radii = radii;
    const int n_theta = 256;
    for (double r : radii) {
        double sup = 0.0;
        for (int k = 0; k < n_theta; ++k) {
            Complex z = center + std::polar(r, 2.0 * kPi * k / n_theta);
            GeometryFrame f = frame(model, z);
            double v = probe == ResidueProbe::MeanCurvature
                           ? std::fabs(f.H)
                           : std::fabs(f.n.dot(f.phi - p.value_or(Vec3::Zero())));
            sup = std::max(sup, v);
        }
        fit.values.push_back(sup);
    }
    for (double v : fit.values)
        if (v < 1e-250) throw DegenerateFit("residue probe vanishes identically");
    std::vector<double> lx, ly;
    for (size_t k = 0; k < radii.size(); ++k) {
        lx.push_back(std::log(radii[k]));
        ly.push_back(std::log(fit.values[k]));
    }
    LineFit lf = linear_fit(lx, ly);
    fit.slope = lf.slope;
    fit.alpha = static_cast<int>(std::lround(-lf.slope));
    fit.r2 = lf.r2;
    return fit;
}

FirstResidueResult first_residue(const ImmersionModel& model, double radius, Complex center) {
    const int n_theta = 512;
    const double h = radius / 100.0;
    FirstResidueResult out;
    out.gamma0 = Vec3::Zero();

    auto hvec = [&](Complex z) {
        GeometryFrame f = frame(model, z);
        return Vec3(f.H * f.n);
    };
    auto nvec = [&](Complex z) { return frame(model, z).n; };

    for (int k = 0; k < n_theta; ++k) {
        double th = 2.0 * kPi * k / n_theta;
        Complex z = center + std::polar(radius, th);
        Vec3 n = nvec(z);
        Vec3 Hv = hvec(z);
        Vec3 dxH = (hvec(z + h) - hvec(z - h)) / (2.0 * h);
        Vec3 dyH = (hvec(z + Complex(0, h)) - hvec(z - Complex(0, h))) / (2.0 * h);
        Vec3 dxn = (nvec(z + h) - nvec(z - h)) / (2.0 * h);
        Vec3 dyn = (nvec(z + Complex(0, h)) - nvec(z - Complex(0, h))) / (2.0 * h);

        double nu1 = std::cos(th), nu2 = std::sin(th);
        Vec3 nu_gradH = nu1 * dxH + nu2 * dyH;
        Vec3 proj = n.dot(nu_gradH) * n;
        // orientation of the perp gradient fixed so the combination is the
        // tangential derivative of the conserved quantity under this
        // frame's normal convention (then the closed-contour integral
        // vanishes on true Willmore surfaces)
        Vec3 nu_gradperp_n = nu1 * dyn - nu2 * dxn;
        Vec3 integrand = nu_gradH - 3.0 * proj + nu_gradperp_n.cross(Hv);

        out.gamma0 += integrand;
        out.grad_h_scale = std::max({out.grad_h_scale, dxH.norm(), dyH.norm()});
    }
    out.gamma0 *= radius / (2.0 * n_theta); // (1/4pi) * sum * (r * 2pi/n)
    return out;
}

double willmore_residual(const ImmersionModel& model, Complex z, double h) {
    GeometryFrame f = frame(model, z);
    if (model.minimal()) return 0.0; // H vanishes identically
    auto Hval = [&](Complex w) { return frame(model, w).H; };
    double lap = (Hval(z + h) + Hval(z - h) + Hval(z + Complex(0, h)) + Hval(z - Complex(0, h)) -
                  4.0 * f.H) /
                 (h * h);
    double e2l = f.e2l();
    return std::fabs(lap / e2l + f.tracefree_sq() * f.H);
}

} // namespace wlab::asymptotics
