#pragma once

#include "isokit/errors.hpp"
#include "isokit/spaces.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace isokit {

using EvalFn = std::function<Vec3(double)>;
using BatchDerivFn = std::function<std::array<Vec3, 4>(double)>;

/// A parametric curve tagged with its ambient space. Derivatives up to
/// order 4 come from exact callbacks when provided, otherwise from centered
/// finite differences over the evaluator (accuracy order `fd_order`,
/// step `fd_step`, default span * 1e-3).
struct Curve {
    SpaceKind kind = SpaceKind::SimplyIsotropic;
    double t_min = 0.0;
    double t_max = 1.0;
    int samples = 2000;
    int fd_order = 4;
    double fd_step = 0.0;

    EvalFn eval;
    std::array<EvalFn, 4> exact{};  // exact[k] = derivative of order k+1, optional
    BatchDerivFn exact_batch;       // optional: orders 1..4 in one call

    Vec3 position(double t) const;
    Vec3 derivative(double t, int order) const;       // order in 1..4
    std::array<Vec3, 4> derivatives(double t) const;  // orders 1..4

    /// Speed in the space's (semi-)norm: sqrt(|inner(kind, a', a')|).
    double speed(double t) const;
    double step() const { return fd_step > 0.0 ? fd_step : (t_max - t_min) * 1e-3; }
    std::vector<double> sample_params() const;  // uniform grid, `samples` nodes
};

/// Cumulative arclength s(t) on a grid with its monotone-Hermite inverse.
struct ArclengthMap {
    std::vector<double> t_nodes;
    std::vector<double> s_nodes;
    std::vector<double> speeds;  // ds/dt at the nodes

    double total() const { return s_nodes.back(); }
    double t_of_s(double s) const;
    double s_of_t(double t) const;
};

struct ReparametrizedCurve {
    Curve curve;       // unit speed, domain [0, L]
    ArclengthMap map;  // the parameter transformation used
};

/// Arclength reparametrization by cumulative Simpson quadrature of the speed
/// plus monotone Hermite inversion. Derivatives of the returned curve are
/// chain-rule compositions of the base curve's derivatives, so no
/// interpolation noise enters the higher orders. Throws NonAdmissibleSpeed
/// (naming the offending t) when the speed drops below min_speed anywhere,
/// which excludes isotropic-velocity and lightlike curves.
ReparametrizedCurve arclength_reparametrize(const Curve& c, double min_speed = 1e-6);

struct AdmissibilityReport {
    bool regular = false;
    std::vector<double> inflection_points;
    bool admissible = false;
    double min_abs_det = 0.0;  // min over samples of |x'y'' - x''y'| at unit speed
    double min_speed = 0.0;
    CausalClass causal = CausalClass::Spacelike;  // pseudo-isotropic only
    bool causal_constant = true;
    std::string note;
};

/// Diagnostic: regularity in the space's norm, inflection points (sign
/// changes / near-zeros of the normalized osculating determinant, refined by
/// bisection), causal character (pseudo-isotropic). Never throws.
AdmissibilityReport admissibility(const Curve& c, double tol = 1e-6);

class NonAdmissibleError : public Error {
public:
    NonAdmissibleError(AdmissibilityReport report, const std::string& message)
        : Error(ErrorCode::NonAdmissible, message, report.note), report(std::move(report)) {}

    AdmissibilityReport report;
};

void to_json(nlohmann::json& j, const AdmissibilityReport& r);

/// Curve from a JSON spec {"space", "x", "y", "z", "t_min", "t_max",
/// "samples"} with expression-valued coordinates.
Curve curve_from_json(const nlohmann::json& spec);
Curve load_curve(const std::string& path);  // .json spec or .csv samples
Curve curve_from_csv(const std::string& path, SpaceKind kind);

}  // namespace isokit
