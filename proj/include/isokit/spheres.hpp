#pragma once

#include "isokit/curve.hpp"
#include "isokit/frames.hpp"
#include "isokit/spaces.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <vector>

namespace isokit {

/// Isotropic / pseudo-isotropic sphere: a degree-2 surface containing the
/// absolute figure. Normal forms: parabolic z = (x^2 +- y^2)/(2p) and
/// cylindrical x^2 +- y^2 = sign * r^2 (sign is always +1 in I3); general
/// form x^2 +- y^2 + 2c1 x + 2c2 y + 2c3 z + c4 = 0.
struct Sphere {
    enum class Form { Parabolic, Cylindrical, General };

    SpaceKind kind = SpaceKind::SimplyIsotropic;
    Form form = Form::General;
    double p = 1.0;              // parabolic
    double r = 1.0;              // cylindrical
    int sign = +1;               // cylindrical, pseudo-isotropic only
    double cx = 0.0, cy = 0.0;   // cylindrical top-view center (z fixed to 0)
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;  // general

    static Sphere parabolic(SpaceKind kind, double p);
    static Sphere cylindrical(SpaceKind kind, double r, int sign = +1, double cx = 0.0,
                              double cy = 0.0);
    static Sphere general(SpaceKind kind, double c1, double c2, double c3, double c4);

    /// Defining polynomial, leading quadratic coefficient 1.
    double residual(const Vec3& point) const;
    bool contains(const Vec3& point, double tol) const;
    Sphere to_general() const;
};

struct NormalFormReduction {
    Sphere normal_form;
    IsoMotion motion;  // original sphere = transform_sphere(normal_form, motion)
};

/// Completing the square: general form reduces to parabolic iff c3 != 0 and
/// to cylindrical iff c3 == 0. Throws DegenerateSphere when the cylindrical
/// branch collapses (zero radius / light-cone plane pair).
NormalFormReduction reduce_to_normal_form(const Sphere& sphere);

/// Image of the sphere under a rigid motion, in general form.
Sphere transform_sphere(const Sphere& sphere, const IsoMotion& motion);

void to_json(nlohmann::json& j, const Sphere& s);
void from_json(const nlohmann::json& j, Sphere& s);

/// Osculating sphere at one frame sample: the pair (lambda, u) of
/// lambda <x - a0, x - a0> + <u, x - a0> = 0, gauge-fixed to ||u|| = 1 with
/// lambda >= 0. Computed from the closed form in the RM bivector frame and
/// cross-checked against the generic order-3 contact solve on the raw curve
/// derivatives; dual_path_gap records their disagreement.
struct OsculatingSphere {
    SpaceKind kind = SpaceKind::SimplyIsotropic;
    Vec3 base;
    double lambda = 0.0;
    Vec3 u;
    double dual_path_gap = 0.0;

    double beta0 = 0.0, beta1 = 0.0, beta2 = 0.0;  // Euclidean contact coefficients
    Vec3 center;                                   // Euclidean
    double radius = 0.0;                           // Euclidean

    Sphere sphere() const;  // general form (isotropic kinds only)
};

/// Frame set must carry rm fields and bivectors; index selects s0.
/// Throws DegenerateSphere when |tau kappa^2| < 1e-8 (osculating plane).
OsculatingSphere osculating_sphere_isotropic(const FrameSet& fs, const Curve& c, std::size_t i);
OsculatingSphere osculating_sphere_pseudo(const FrameSet& fs, const Curve& c, std::size_t i);
OsculatingSphere osculating_sphere_euclidean(const FrameSet& fs, std::size_t i);

/// d kappa1 / ds and d kappa2 / ds along the frame set (order-4 differences
/// of the natural curvature sequences). Used by the contact solvers; exposed
/// for classification cross-checks.
struct CurvatureRates {
    std::vector<double> kappa1_rate;
    std::vector<double> kappa2_rate;
};
CurvatureRates rm_curvature_rates(const FrameSet& fs);

/// Pseudo-isotropic spherical image: the point of z = (x^2 - y^2)/2 whose
/// tangent plane is parallel to the osculating plane. z components computed
/// from (x*^2 - y*^2)/2; z_alt carries the independent formula
/// eps (kappa^2 z'^2 - z''^2) / (2 kappa^2) for cross-checking.
struct SphericalImage {
    std::vector<Vec3> points;
    std::vector<double> z_alt;
};
SphericalImage spherical_image(const FrameSet& fs);

}  // namespace isokit
