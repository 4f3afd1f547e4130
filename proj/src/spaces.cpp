#include "isokit/spaces.hpp"

#include "isokit/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

namespace isokit {

Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
Vec3 operator-(const Vec3& u, const Vec3& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
Vec3 operator-(const Vec3& u) { return {-u.x, -u.y, -u.z}; }
Vec3 operator*(double a, const Vec3& u) { return {a * u.x, a * u.y, a * u.z}; }
Vec3 operator*(const Vec3& u, double a) { return a * u; }
Vec3 operator/(const Vec3& u, double a) { return {u.x / a, u.y / a, u.z / a}; }
bool operator==(const Vec3& u, const Vec3& v) { return u.x == v.x && u.y == v.y && u.z == v.z; }

std::ostream& operator<<(std::ostream& os, const Vec3& u) {
    return os << "(" << u.x << ", " << u.y << ", " << u.z << ")";
}

double dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

Vec3 cross_euclidean(const Vec3& u, const Vec3& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

double det3(const Vec3& r1, const Vec3& r2, const Vec3& r3) {
    return dot(r1, cross_euclidean(r2, r3));
}

double det_top(const Vec3& u, const Vec3& v) { return u.x * v.y - u.y * v.x; }

double minkowski_dot(const Vec3& u, const Vec3& v) { return u.x * v.x - u.y * v.y + u.z * v.z; }

double minkowski_norm(const Vec3& u) { return std::sqrt(std::abs(minkowski_dot(u, u))); }

const char* space_name(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::Euclidean: return "euclidean";
        case SpaceKind::SimplyIsotropic: return "simply_isotropic";
        case SpaceKind::PseudoIsotropic: return "pseudo_isotropic";
    }
    return "unknown";
}

SpaceKind space_from_name(const std::string& name) {
    std::string s;
    s.reserve(name.size());
    for (char ch : name) s.push_back(ch == '-' || ch == ' ' ? '_' : static_cast<char>(std::tolower(ch)));
    if (s == "euclidean" || s == "e3") return SpaceKind::Euclidean;
    if (s == "simply_isotropic" || s == "isotropic" || s == "i3") return SpaceKind::SimplyIsotropic;
    if (s == "pseudo_isotropic" || s == "ip3") return SpaceKind::PseudoIsotropic;
    throw Error(ErrorCode::ValidationError, "unknown space kind: " + name);
}

double inner(SpaceKind kind, const Vec3& u, const Vec3& v) {
    switch (kind) {
        case SpaceKind::Euclidean: return dot(u, v);
        case SpaceKind::SimplyIsotropic: return u.x * v.x + u.y * v.y;
        case SpaceKind::PseudoIsotropic: return u.x * v.x - u.y * v.y;
    }
    return 0.0;
}

double distance(SpaceKind kind, const Vec3& a, const Vec3& b) {
    const Vec3 d = b - a;
    return std::sqrt(std::abs(inner(kind, d, d)));
}

double codistance(SpaceKind kind, const Vec3& a, const Vec3& b) {
    if (kind == SpaceKind::Euclidean)
        throw Error(ErrorCode::UnsupportedSpace, "codistance is defined only in the isotropic spaces");
    return std::abs(b.z - a.z);
}

Vec3 cross(SpaceKind kind, const Vec3& u, const Vec3& v) {
    const Vec3 e = cross_euclidean(u, v);
    if (kind == SpaceKind::PseudoIsotropic) return {e.x, -e.y, e.z};
    return e;
}

const char* causal_name(CausalClass c) {
    switch (c) {
        case CausalClass::Spacelike: return "spacelike";
        case CausalClass::Timelike: return "timelike";
        case CausalClass::Lightlike: return "lightlike";
    }
    return "unknown";
}

CausalClass causal_character(const Vec3& v) {
    const double q = inner(SpaceKind::PseudoIsotropic, v, v);
    if (q > 0.0) return CausalClass::Spacelike;
    if (q < 0.0) return CausalClass::Timelike;
    if (v.x == 0.0 && v.y == 0.0 && v.z == 0.0) return CausalClass::Spacelike;
    return CausalClass::Lightlike;
}

Mat2 IsoMotion::top_view_matrix() const {
    if (kind == SpaceKind::PseudoIsotropic) {
        const double ch = std::cosh(phi), sh = std::sinh(phi);
        return {sx * ch, sy * sh, sx * sh, sy * ch};
    }
    const double co = std::cos(phi), si = std::sin(phi);
    return {co, -si, si, co};
}

std::array<std::array<double, 4>, 4> IsoMotion::affine_matrix() const {
    const Mat2 r = top_view_matrix();
    return {{{r.a11, r.a12, 0.0, a},
             {r.a21, r.a22, 0.0, b},
             {c1, c2, 1.0, c},
             {0.0, 0.0, 0.0, 1.0}}};
}

Vec3 apply_motion(const IsoMotion& m, const Vec3& p) {
    double x = p.x, y = p.y;
    m.top_view_matrix().apply(x, y);
    return {m.a + x, m.b + y, m.c + m.c1 * p.x + m.c2 * p.y + p.z};
}

IsoMotion compose(const IsoMotion& first_applied, const IsoMotion& then_applied) {
    const IsoMotion& f = first_applied;
    const IsoMotion& g = then_applied;
    if (f.kind != g.kind)
        throw Error(ErrorCode::InvalidInput, "compose: motions from different spaces");
    if (f.sx != 1 || f.sy != 1 || g.sx != 1 || g.sy != 1)
        throw Error(ErrorCode::InvalidInput,
                    "compose: only the direct component supports parameter-form composition");
    IsoMotion out;
    out.kind = f.kind;
    out.phi = f.phi + g.phi;
    const Mat2 rg = g.top_view_matrix();
    out.a = g.a + rg.a11 * f.a + rg.a12 * f.b;
    out.b = g.b + rg.a21 * f.a + rg.a22 * f.b;
    // z-rows: (g.c1, g.c2) applied after f: shear sees f's output top view
    const Mat2 rf = f.top_view_matrix();
    out.c1 = f.c1 + g.c1 * rf.a11 + g.c2 * rf.a21;
    out.c2 = f.c2 + g.c1 * rf.a12 + g.c2 * rf.a22;
    out.c = f.c + g.c + g.c1 * f.a + g.c2 * f.b;
    return out;
}

IsoMotion inverse(const IsoMotion& m) {
    if (m.sx != 1 || m.sy != 1)
        throw Error(ErrorCode::InvalidInput,
                    "inverse: only the direct component supports parameter-form inversion");
    IsoMotion out;
    out.kind = m.kind;
    out.phi = -m.phi;
    const Mat2 ri = out.top_view_matrix();
    out.a = -(ri.a11 * m.a + ri.a12 * m.b);
    out.b = -(ri.a21 * m.a + ri.a22 * m.b);
    // z = z' - c - shear . R_inv((x', y') - (a, b))
    out.c1 = -(m.c1 * ri.a11 + m.c2 * ri.a21);
    out.c2 = -(m.c1 * ri.a12 + m.c2 * ri.a22);
    out.c = -m.c - (out.c1 * m.a + out.c2 * m.b);
    return out;
}

IsoMotion strubecker_motion(double p, double a, double b, double c, double c1, double c2) {
    if (p == 0.0)
        throw Error(ErrorCode::SingularParameter, "strubecker_motion: p must be nonzero");
    if (p < 0.0)
        throw Error(ErrorCode::SingularParameter,
                    "strubecker_motion: p < 0 leaves the direct motion group");
    IsoMotion out;
    out.kind = SpaceKind::PseudoIsotropic;
    out.phi = std::log(p);
    // light-cone coordinates relate to canonical ones by (x_s, y_s) = (x+y, x-y)
    out.a = 0.5 * (a + b);
    out.b = 0.5 * (a - b);
    out.c = c;
    out.c1 = c1 + c2;
    out.c2 = c1 - c2;
    return out;
}

void to_json(nlohmann::json& j, const IsoMotion& m) {
    j = {{"kind", space_name(m.kind)}, {"a", m.a}, {"b", m.b}, {"c", m.c},
         {"c1", m.c1},                 {"c2", m.c2}, {"phi", m.phi}};
    if (m.sx != 1 || m.sy != 1) {
        j["sx"] = m.sx;
        j["sy"] = m.sy;
    }
}

void from_json(const nlohmann::json& j, IsoMotion& m) {
    m.kind = space_from_name(j.at("kind").get<std::string>());
    m.a = j.value("a", 0.0);
    m.b = j.value("b", 0.0);
    m.c = j.value("c", 0.0);
    m.c1 = j.value("c1", 0.0);
    m.c2 = j.value("c2", 0.0);
    m.phi = j.value("phi", 0.0);
    m.sx = j.value("sx", 1);
    m.sy = j.value("sy", 1);
}

void to_json(nlohmann::json& j, const Vec3& v) { j = {v.x, v.y, v.z}; }

void from_json(const nlohmann::json& j, Vec3& v) {
    v.x = j.at(0).get<double>();
    v.y = j.at(1).get<double>();
    v.z = j.at(2).get<double>();
}

}  // namespace isokit
