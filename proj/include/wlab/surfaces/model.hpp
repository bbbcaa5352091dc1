#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wlab/linalg.hpp"

namespace wlab::surfaces {

// Second-order jet of a conformal immersion at a chart point. phi_zzbar is
// Laplacian/4; it vanishes identically for minimal immersions.
struct Jet2 {
    Vec3 phi;
    CVec3 phi_z;
    CVec3 phi_zz;
    Vec3 phi_zzbar;
};

struct BranchPointInfo {
    Complex location;
    bool at_infinity = false;
    int order_a = 0; // multiplicity = a + 1
};

struct EndInfo {
    Complex location;
    bool at_infinity = false;
    int b = 2; // multiplicity = b - 1; simple planar end has b = 2
};

struct Topology {
    int euler_char = 2;
    std::vector<BranchPointInfo> branch_points;
    std::vector<EndInfo> ends;
    bool compact() const { return ends.empty(); }
};

class ModelImpl {
  public:
    virtual ~ModelImpl() = default;
    virtual Jet2 jet(Complex z) const = 0;
    virtual const Topology& topology() const = 0;
    virtual bool minimal() const = 0;
    virtual std::string name() const = 0;
    // Chart points where jet evaluation is singular (poles, branch points).
    virtual const std::vector<Complex>& singular_points() const = 0;
    virtual bool singular_at_infinity() const = 0;
    // Sign applied to the cross-product normal; inversions flip it so the
    // reported normal is the reflected one.
    virtual double normal_sign() const { return 1.0; }
};

// Immutable handle; evaluation is pure and safe to share across threads.
class ImmersionModel {
  public:
    ImmersionModel() = default;
    explicit ImmersionModel(std::shared_ptr<const ModelImpl> impl) : impl_(std::move(impl)) {}

    Jet2 jet(Complex z) const { return impl_->jet(z); }
    const Topology& topology() const { return impl_->topology(); }
    bool minimal() const { return impl_->minimal(); }
    std::string name() const { return impl_->name(); }
    const std::vector<Complex>& singular_points() const { return impl_->singular_points(); }
    bool singular_at_infinity() const { return impl_->singular_at_infinity(); }
    double normal_sign() const { return impl_->normal_sign(); }
    const ModelImpl* impl() const { return impl_.get(); }
    std::shared_ptr<const ModelImpl> impl_ptr() const { return impl_; }

  private:
    std::shared_ptr<const ModelImpl> impl_;
};

struct InversionSpec {
    Vec3 p = Vec3(0, 0, 2);
};

// Composite ι_p ∘ model with ι_p(x) = (x-p)/|x-p|^2, derivatives by exact
// chain rule. Throws CenterOnSurface when the evaluation point maps within
// 1e-8 of p.
ImmersionModel invert(const ImmersionModel& base, const InversionSpec& spec);

// The same surface in the w = 1/z chart (jets of z -> model(1/z)).
ImmersionModel reparam_infinity(const ImmersionModel& base);

// Rigid rotation in R^3.
ImmersionModel rotate(const ImmersionModel& base, const Mat3& rotation);

} // namespace wlab::surfaces
