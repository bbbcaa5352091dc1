#include "wlab/surfaces/model.hpp"

#include <cmath>

#include "wlab/errors.hpp"

namespace wlab::surfaces {

namespace {

class InvertedModel final : public ModelImpl {
  public:
    InvertedModel(std::shared_ptr<const ModelImpl> base, Vec3 p)
        : base_(std::move(base)), p_(std::move(p)) {
        const Topology& bt = base_->topology();
        topo_.euler_char = bt.euler_char;
        topo_.branch_points = bt.branch_points;
        for (const auto& e : bt.ends) {
            // an end of multiplicity b-1 maps to a point of multiplicity
            // b-1; only multiplicity >= 2 leaves a branch point behind
            if (e.b >= 3) topo_.branch_points.push_back({e.location, e.at_infinity, e.b - 2});
        }
        singular_ = base_->singular_points();
        name_ = "inverted:" + base_->name();
    }

    Jet2 jet(Complex z) const override {
        Jet2 b = base_->jet(z);
        Vec3 u = b.phi - p_;
        double rho2 = u.squaredNorm();
        if (rho2 < 1e-16) throw CenterOnSurface("inversion center on the surface");

        Complex s = cdot(b.phi_z, u);              // <u, u_z>
        Complex uzuz = cdot(b.phi_z, b.phi_z);     // <u_z, u_z>, bilinear
        Complex uuzz = cdot(b.phi_zz, u);          // <u, u_zz>
        double q = b.phi_z.squaredNorm();          // <u_zbar, u_z>
        double m = u.dot(b.phi_zzbar);             // <u, u_zzbar>
        CVec3 uc = u.cast<Complex>();

        Jet2 out;
        out.phi = u / rho2;
        out.phi_z = b.phi_z / rho2 - (2.0 * s / (rho2 * rho2)) * uc;
        out.phi_zz = b.phi_zz / rho2 -
                     (4.0 * s * b.phi_z + 2.0 * (uzuz + uuzz) * uc) / (rho2 * rho2) +
                     (8.0 * s * s / (rho2 * rho2 * rho2)) * uc;
        CVec3 zzbar_c = b.phi_zzbar.cast<Complex>() / rho2 -
                        (2.0 * std::conj(s) * b.phi_z + 2.0 * s * b.phi_z.conjugate() +
                         2.0 * (q + m) * uc) /
                            (rho2 * rho2) +
                        (8.0 * std::norm(s) / (rho2 * rho2 * rho2)) * uc;
        out.phi_zzbar = real(zzbar_c);
        return out;
    }

    const Topology& topology() const override { return topo_; }
    bool minimal() const override { return false; }
    std::string name() const override { return name_; }
    const std::vector<Complex>& singular_points() const override { return singular_; }
    bool singular_at_infinity() const override { return base_->singular_at_infinity(); }
    double normal_sign() const override { return -base_->normal_sign(); }

  private:
    std::shared_ptr<const ModelImpl> base_;
    Vec3 p_;
    Topology topo_;
    std::vector<Complex> singular_;
    std::string name_;
};

class ReparamInfinityModel final : public ModelImpl {
  public:
    explicit ReparamInfinityModel(std::shared_ptr<const ModelImpl> base) : base_(std::move(base)) {
        const Topology& bt = base_->topology();
        topo_.euler_char = bt.euler_char;
        for (auto bp : bt.branch_points) {
            if (bp.at_infinity) {
                bp.at_infinity = false;
                bp.location = 0.0;
            } else if (std::abs(bp.location) < 1e-300) {
                bp.at_infinity = true;
            } else {
                bp.location = 1.0 / bp.location;
            }
            topo_.branch_points.push_back(bp);
        }
        for (auto e : bt.ends) {
            if (e.at_infinity) {
                e.at_infinity = false;
                e.location = 0.0;
            } else if (std::abs(e.location) < 1e-300) {
                e.at_infinity = true;
            } else {
                e.location = 1.0 / e.location;
            }
            topo_.ends.push_back(e);
        }
        singular_.push_back(0.0); // z = infinity is never evaluable
        for (Complex s : base_->singular_points())
            if (std::abs(s) > 1e-300) singular_.push_back(1.0 / s);
        singular_at_infinity_ = false;
        for (Complex s : base_->singular_points())
            if (std::abs(s) <= 1e-300) singular_at_infinity_ = true;
        name_ = base_->name() + "@w-chart";
    }

    Jet2 jet(Complex w) const override {
        if (std::abs(w) < 1e-300) throw SingularPoint("w-chart center is the point at infinity");
        Complex z = 1.0 / w;
        Jet2 b = base_->jet(z);
        Complex w2 = w * w;
        Jet2 out;
        out.phi = b.phi;
        out.phi_z = -b.phi_z / w2;
        out.phi_zz = b.phi_zz / (w2 * w2) + 2.0 * b.phi_z / (w2 * w);
        out.phi_zzbar = b.phi_zzbar / std::norm(w2);
        return out;
    }

    const Topology& topology() const override { return topo_; }
    bool minimal() const override { return base_->minimal(); }
    std::string name() const override { return name_; }
    const std::vector<Complex>& singular_points() const override { return singular_; }
    bool singular_at_infinity() const override { return singular_at_infinity_; }
    double normal_sign() const override { return base_->normal_sign(); }

  private:
    std::shared_ptr<const ModelImpl> base_;
    Topology topo_;
    std::vector<Complex> singular_;
    bool singular_at_infinity_ = false;
    std::string name_;
};

class RotatedModel final : public ModelImpl {
  public:
    RotatedModel(std::shared_ptr<const ModelImpl> base, Mat3 rot)
        : base_(std::move(base)), rot_(std::move(rot)) {
        name_ = "rotated:" + base_->name();
    }

    Jet2 jet(Complex z) const override {
        Jet2 b = base_->jet(z);
        Jet2 out;
        out.phi = rot_ * b.phi;
        out.phi_z = rot_.cast<Complex>() * b.phi_z;
        out.phi_zz = rot_.cast<Complex>() * b.phi_zz;
        out.phi_zzbar = rot_ * b.phi_zzbar;
        return out;
    }

    const Topology& topology() const override { return base_->topology(); }
    bool minimal() const override { return base_->minimal(); }
    std::string name() const override { return name_; }
    const std::vector<Complex>& singular_points() const override {
        return base_->singular_points();
    }
    bool singular_at_infinity() const override { return base_->singular_at_infinity(); }
    double normal_sign() const override { return base_->normal_sign(); }

  private:
    std::shared_ptr<const ModelImpl> base_;
    Mat3 rot_;
    std::string name_;
};

} // namespace

ImmersionModel invert(const ImmersionModel& base, const InversionSpec& spec) {
    return ImmersionModel(std::make_shared<InvertedModel>(base.impl_ptr(), spec.p));
}

ImmersionModel reparam_infinity(const ImmersionModel& base) {
    return ImmersionModel(std::make_shared<ReparamInfinityModel>(base.impl_ptr()));
}

ImmersionModel rotate(const ImmersionModel& base, const Mat3& rotation) {
    return ImmersionModel(std::make_shared<RotatedModel>(base.impl_ptr(), rotation));
}

} // namespace wlab::surfaces
