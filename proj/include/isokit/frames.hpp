#pragma once

#include "isokit/curve.hpp"
#include "isokit/spaces.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace isokit {

/// Per-parameter frame state. Frenet fields (t, n, b, kappa, tau) are always
/// populated; rm fields after rm_frame; bivector fields after bivector_frame.
struct FrameSample {
    double param = 0.0;  // curve parameter of this sample
    double s = 0.0;      // arclength from the first sample
    double speed = 1.0;  // ds/dt at the sample

    Vec3 t, n, b;
    double kappa = 0.0;
    double tau = 0.0;
    int eps = +1;  // <t,t>_{z,p}; pseudo-isotropic only
    int eta = +1;  // <n,n>_{z,p} = -eps

    Vec3 n1, n2;  // rotation minimizing normals, n2 = b in the isotropic spaces
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double theta = 0.0;  // integral of tau + tau0

    Vec3 bT, bN1, bN2;  // moving bivectors of the RM frame
    Vec3 bB;            // Frenet binormal bivector (bN1 doubles as the Frenet normal one)
};

struct FrameSet {
    SpaceKind kind = SpaceKind::SimplyIsotropic;
    std::vector<FrameSample> samples;
    bool has_rm = false;
    bool has_bivectors = false;
    double tau0 = 0.0;

    double param_step() const;  // uniform parameter grid step (throws if not uniform)
    bool unit_speed(double tol = 1e-6) const;
};

/// Frenet frame along an admissible curve in I3: b = (0, 0, 1),
/// kappa = det(top a', top a'') / <a',a'>_z^{3/2},
/// tau = det(a', a'', a''') / det(top a', top a'')^2,
/// both valid in any regular parametrization.
/// Throws NonAdmissibleError carrying the admissibility report.
FrameSet frenet_isotropic(const Curve& c);

/// Pseudo-isotropic Frenet frame; stores the signed curvature
/// kappa = -eps (x'y'' - x''y') (unit-speed normalization) with
/// eps = <t,t>_{z,p}, eta = -eps, n = t'/(eta kappa), tau = det3 / det2^2.
FrameSet frenet_pseudo(const Curve& c);

/// Euclidean Frenet frame (b = t x n, tau from the triple product).
/// Requires kappa bounded away from zero along the whole curve.
FrameSet frenet_euclidean(const Curve& c);

/// Rotation minimizing frame from Frenet samples: theta = integral of tau
/// (composite Simpson on the uniform parameter grid) + tau0, n1 = n - theta b,
/// n2 = b, kappa1 = kappa, kappa2 = kappa theta (I3) or eta kappa theta (I3p).
FrameSet rm_frame(FrameSet frenet, double tau0 = 0.0);

/// Euclidean RM frame by rotating the Frenet normal plane through theta with
/// theta' = tau: n1 = cos(theta) n - sin(theta) b, n2 = sin(theta) n + cos(theta) b,
/// kappa1 = kappa cos(theta), kappa2 = kappa sin(theta). The gauge is fixed by
/// initial_normal (must be unit and orthogonal to t at the first sample);
/// pass nullptr for theta(s0) = 0, i.e. n1(s0) = Frenet normal.
FrameSet rm_frame_euclidean(const Curve& c, const Vec3* initial_normal = nullptr);

/// Populates the moving bivectors (isotropic spaces only):
/// bT = n x b, bN1 = b x t, bN2 = t x n1, bB = t x n, with the space's
/// vector product. Requires rm fields.
FrameSet bivector_frame(FrameSet frames);

/// d/ds of a per-sample vector field by finite differences of the sequence
/// (divides the parameter derivative by the local speed).
std::vector<Vec3> frame_derivative(const FrameSet& fs, const std::vector<Vec3>& field,
                                   int accuracy = 4);
std::vector<double> frame_derivative(const FrameSet& fs, const std::vector<double>& field,
                                     int accuracy = 4);

void write_frames_csv(const FrameSet& fs, const std::string& path);
nlohmann::json frames_to_json(const FrameSet& fs);

}  // namespace isokit
