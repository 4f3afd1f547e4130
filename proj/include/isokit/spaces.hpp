#pragma once

#include "isokit/gcnum.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <iosfwd>
#include <string>

namespace isokit {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 top_view() const { return {x, y, 0.0}; }
};

Vec3 operator+(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u);
Vec3 operator*(double a, const Vec3& u);
Vec3 operator*(const Vec3& u, double a);
Vec3 operator/(const Vec3& u, double a);
bool operator==(const Vec3& u, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Vec3& u);

/// Euclidean helpers (used as auxiliary structure in all three spaces).
double dot(const Vec3& u, const Vec3& v);
double norm(const Vec3& u);
Vec3 cross_euclidean(const Vec3& u, const Vec3& v);
double det3(const Vec3& r1, const Vec3& r2, const Vec3& r3);  // rows
/// det of the top views, x1*y2 - x2*y1.
double det_top(const Vec3& u, const Vec3& v);

/// Inner product of Lorentz-Minkowski E^3_1 with y timelike:
/// u1*v1 - u2*v2 + u3*v3. Auxiliary for the pseudo-isotropic space.
double minkowski_dot(const Vec3& u, const Vec3& v);
double minkowski_norm(const Vec3& u);  // sqrt(|<u,u>_1|)

enum class SpaceKind {
    Euclidean,
    SimplyIsotropic,
    PseudoIsotropic,
};

const char* space_name(SpaceKind kind);
SpaceKind space_from_name(const std::string& name);  // throws ValidationError

/// The space's bilinear form: full Euclidean dot, u1v1 + u2v2, or u1v1 - u2v2.
double inner(SpaceKind kind, const Vec3& u, const Vec3& v);

/// sqrt(|inner(B-A, B-A)|); a semi-distance in the isotropic spaces.
double distance(SpaceKind kind, const Vec3& a, const Vec3& b);

/// |b.z - a.z|, the complementary invariant of the degenerate metrics.
/// Invariant under rigid motions for point pairs sharing a top view.
/// Throws UnsupportedSpace for the Euclidean kind.
double codistance(SpaceKind kind, const Vec3& a, const Vec3& b);

/// Vector product: the Euclidean one for Euclidean and simply isotropic
/// space, the Lorentzian one (det expansion with i, -j, k) for
/// pseudo-isotropic space.
Vec3 cross(SpaceKind kind, const Vec3& u, const Vec3& v);

enum class CausalClass { Spacelike, Timelike, Lightlike };

const char* causal_name(CausalClass c);

/// Sign classification of <v,v>_{z,p}; v = 0 counts as spacelike.
CausalClass causal_character(const Vec3& v);

/// A rigid motion of I^3 or I^3_p in its 6-parameter form:
///   top view: rotation by phi (circular resp. hyperbolic) + translation (a, b)
///   z:        c + c1*x + c2*y + z   (shear acting on the input coordinates)
/// sx, sy extend the pseudo-isotropic top view block to the indirect /
/// time-reversing isometry components ([[sx cosh, sy sinh], [sx sinh, sy cosh]]);
/// both +1 for the canonical direct group.
struct IsoMotion {
    SpaceKind kind = SpaceKind::SimplyIsotropic;
    double a = 0.0, b = 0.0;
    double c = 0.0;
    double c1 = 0.0, c2 = 0.0;
    double phi = 0.0;
    int sx = +1, sy = +1;

    Mat2 top_view_matrix() const;
    std::array<std::array<double, 4>, 4> affine_matrix() const;  // homogeneous 4x4
};

Vec3 apply_motion(const IsoMotion& m, const Vec3& p);
IsoMotion compose(const IsoMotion& first_applied, const IsoMotion& then_applied);
IsoMotion inverse(const IsoMotion& m);

/// Strubecker's form of the pseudo-isotropic motions (xbar = a + p x,
/// ybar = b + y/p, zbar = c + c1 x + c2 y + z on the light-cone chart),
/// conjugated back to the canonical chart: phi = log p. Requires p > 0
/// (p = 0 is singular, p < 0 leaves the direct component).
IsoMotion strubecker_motion(double p, double a = 0.0, double b = 0.0, double c = 0.0,
                            double c1 = 0.0, double c2 = 0.0);

void to_json(nlohmann::json& j, const IsoMotion& m);
void from_json(const nlohmann::json& j, IsoMotion& m);
void to_json(nlohmann::json& j, const Vec3& v);
void from_json(const nlohmann::json& j, Vec3& v);

}  // namespace isokit
