#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isokit/errors.hpp"
#include "isokit/spaces.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <random>

using namespace isokit;

namespace {

std::mt19937_64 rng(917346ULL);

double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec3 random_point(double r = 5.0) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }

IsoMotion random_motion(SpaceKind kind) {
    IsoMotion m;
    m.kind = kind;
    m.a = uniform(-3, 3);
    m.b = uniform(-3, 3);
    m.c = uniform(-3, 3);
    m.c1 = uniform(-2, 2);
    m.c2 = uniform(-2, 2);
    m.phi = kind == SpaceKind::PseudoIsotropic ? uniform(-1.5, 1.5) : uniform(-3.14, 3.14);
    return m;
}

// Independent oracle for the Lorentzian vector product: expand
// det[(i, v1, w1), (-j, v2, w2), (k, v3, w3)] along the first column.
Vec3 cross1_oracle(const Vec3& v, const Vec3& w) {
    const double ci = v.y * w.z - w.y * v.z;
    const double cj = -(v.x * w.z - w.x * v.z);
    const double ck = v.x * w.y - w.x * v.y;
    return {ci, -cj, ck};  // i, -j, k weights
}

Vec3 apply_affine(const std::array<std::array<double, 4>, 4>& m, const Vec3& p) {
    const double h[4] = {p.x, p.y, p.z, 1.0};
    double out[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += m[i][j] * h[j];
    return {out[0], out[1], out[2]};
}

}  // namespace

TEST_CASE("inner products") {
    CHECK(inner(SpaceKind::SimplyIsotropic, {1, 2, 5}, {3, 4, 7}) == 11.0);
    CHECK(inner(SpaceKind::PseudoIsotropic, {3, 2, 9}, {3, 2, 0}) == 5.0);
    CHECK(inner(SpaceKind::SimplyIsotropic, {0, 0, 1}, {0, 0, 1}) == 0.0);
    CHECK(inner(SpaceKind::PseudoIsotropic, {0, 0, 1}, {0, 0, 1}) == 0.0);
    CHECK(inner(SpaceKind::Euclidean, {1, 2, 3}, {4, 5, 6}) == 32.0);
}

TEST_CASE("codistance") {
    CHECK(codistance(SpaceKind::SimplyIsotropic, {0, 0, 0}, {0, 0, 5}) == 5.0);
    CHECK(codistance(SpaceKind::PseudoIsotropic, {1, 2, 3}, {1, 2, 3}) == 0.0);
    CHECK_THROWS_AS((void)codistance(SpaceKind::Euclidean, {}, {}), Error);
}

TEST_CASE("cross products") {
    const Vec3 e = cross(SpaceKind::Euclidean, {1, 0, 0}, {0, 1, 0});
    CHECK(e == Vec3{0, 0, 1});

    // frozen from the oracle: (1,0,0) x1 (0,1,0) = (0,0,1)
    CHECK(cross1_oracle({1, 0, 0}, {0, 1, 0}) == Vec3{0, 0, 1});
    CHECK(cross(SpaceKind::PseudoIsotropic, {1, 0, 0}, {0, 1, 0}) == Vec3{0, 0, 1});

    for (int i = 0; i < 100; ++i) {
        const Vec3 u = random_point(), v = random_point();
        const Vec3 c1 = cross(SpaceKind::PseudoIsotropic, u, v);
        const Vec3 oracle = cross1_oracle(u, v);
        CHECK(norm(c1 - oracle) <= 1e-12 * (1.0 + norm(oracle)));
        // Lorentzian orthogonality
        CHECK(std::abs(minkowski_dot(c1, u)) <= 1e-12 * (1 + norm(u) * norm(u) * norm(v)));
        CHECK(std::abs(minkowski_dot(c1, v)) <= 1e-12 * (1 + norm(v) * norm(v) * norm(u)));
        // simply isotropic space borrows the Euclidean product
        const Vec3 ce = cross(SpaceKind::SimplyIsotropic, u, v);
        CHECK(ce == cross_euclidean(u, v));
    }

    // sign bookkeeping: x1 negates exactly the y-component of xe, so the two
    // products coincide on top-view (z = 0) arguments and are mirrored in y
    // for arguments with vanishing y-components.
    for (int i = 0; i < 50; ++i) {
        Vec3 u = random_point(), v = random_point();
        u.z = v.z = 0.0;
        const Vec3 a = cross(SpaceKind::Euclidean, u, v);
        const Vec3 b = cross(SpaceKind::PseudoIsotropic, u, v);
        CHECK(norm(a - b) <= 1e-14 * (1 + norm(a)));

        Vec3 w = random_point(), s = random_point();
        w.y = s.y = 0.0;
        const Vec3 ce = cross(SpaceKind::Euclidean, w, s);
        const Vec3 cp = cross(SpaceKind::PseudoIsotropic, w, s);
        CHECK(cp.x == ce.x);
        CHECK(cp.y == -ce.y);
        CHECK(cp.z == ce.z);
    }
}

TEST_CASE("causal character") {
    CHECK(causal_character({1, 0, 3}) == CausalClass::Spacelike);
    CHECK(causal_character({0, 1, 3}) == CausalClass::Timelike);
    CHECK(causal_character({1, 1, 7}) == CausalClass::Lightlike);
    CHECK(causal_character({0, 0, 0}) == CausalClass::Spacelike);
    CHECK(causal_character({0, 0, 2}) == CausalClass::Lightlike);
}

TEST_CASE("apply_motion basics") {
    IsoMotion id;
    id.kind = SpaceKind::SimplyIsotropic;
    const Vec3 p = random_point();
    CHECK(norm(apply_motion(id, p) - p) == 0.0);

    IsoMotion shear;
    shear.kind = SpaceKind::SimplyIsotropic;
    shear.c1 = 2.0;
    shear.c2 = -1.0;
    const Vec3 q = apply_motion(shear, {1, 2, 3});
    CHECK(q == Vec3{1, 2, 3 + 2 * 1 - 1 * 2});
}

TEST_CASE("motions preserve distance, codistance, causal character") {
    for (SpaceKind kind : {SpaceKind::SimplyIsotropic, SpaceKind::PseudoIsotropic}) {
        for (int i = 0; i < 300; ++i) {
            const IsoMotion m = random_motion(kind);
            const Vec3 a = random_point(), b = random_point();
            // near the light cone the sqrt amplifies rounding; skip those pairs
            if (std::abs(inner(kind, b - a, b - a)) > 1e-6) {
                CHECK(distance(kind, apply_motion(m, a), apply_motion(m, b)) ==
                      doctest::Approx(distance(kind, a, b)).epsilon(1e-10));
            }

            // codistance invariance is a statement about isotropic point pairs
            // (equal top view); shears change |dz| otherwise.
            const Vec3 c{a.x, a.y, a.z + uniform(-4, 4)};
            CHECK(codistance(kind, apply_motion(m, a), apply_motion(m, c)) ==
                  doctest::Approx(codistance(kind, a, c)).epsilon(1e-10));

            if (kind == SpaceKind::PseudoIsotropic) {
                const Vec3 v = b - a;
                const Vec3 tv = apply_motion(m, b) - apply_motion(m, a);
                CHECK(causal_character(tv) == causal_character(v));
            }
        }
    }
}

TEST_CASE("top view of a motion is the planar motion of the top view") {
    for (SpaceKind kind : {SpaceKind::SimplyIsotropic, SpaceKind::PseudoIsotropic}) {
        for (int i = 0; i < 50; ++i) {
            const IsoMotion m = random_motion(kind);
            const Vec3 p = random_point();
            const Vec3 image = apply_motion(m, p);
            double x = p.x, y = p.y;
            m.top_view_matrix().apply(x, y);
            CHECK(image.x == doctest::Approx(x + m.a).epsilon(1e-14));
            CHECK(image.y == doctest::Approx(y + m.b).epsilon(1e-14));
        }
    }
}

TEST_CASE("composition and inverse agree with the affine matrices") {
    for (SpaceKind kind : {SpaceKind::SimplyIsotropic, SpaceKind::PseudoIsotropic}) {
        for (int i = 0; i < 100; ++i) {
            const IsoMotion f = random_motion(kind), g = random_motion(kind);
            const IsoMotion h = compose(f, g);
            const Vec3 p = random_point();
            const Vec3 via_params = apply_motion(h, p);
            const Vec3 via_mats = apply_affine(g.affine_matrix(), apply_affine(f.affine_matrix(), p));
            CHECK(norm(via_params - via_mats) <= 1e-11 * (1 + norm(via_mats)));

            const IsoMotion fi = inverse(f);
            CHECK(norm(apply_motion(fi, apply_motion(f, p)) - p) <= 1e-11 * (1 + norm(p)));
        }
    }
}

TEST_CASE("strubecker motions") {
    // p = 1, no translation or shear: the identity
    const IsoMotion id = strubecker_motion(1.0);
    const Vec3 p = random_point();
    CHECK(norm(apply_motion(id, p) - p) <= 1e-15);

    // p = e^phi conjugates to the hyperbolic rotation by phi
    const double phi = 0.8;
    const IsoMotion rot = strubecker_motion(std::exp(phi));
    CHECK(frobenius_norm(rot.top_view_matrix() - hyperbolic_rotation(phi)) <= 1e-12);

    // ds^2 = dx dy in the light-cone chart is preserved by the p-scaling
    for (int i = 0; i < 50; ++i) {
        const double sp = std::exp(uniform(-1.5, 1.5));
        const IsoMotion m = strubecker_motion(sp, uniform(-2, 2), uniform(-2, 2));
        const Vec3 a = random_point(), b = random_point();
        const Vec3 ta = apply_motion(m, a), tb = apply_motion(m, b);
        const double before = ((b.x + b.y) - (a.x + a.y)) * ((b.x - b.y) - (a.x - a.y));
        const double after = ((tb.x + tb.y) - (ta.x + ta.y)) * ((tb.x - tb.y) - (ta.x - ta.y));
        CHECK(after == doctest::Approx(before).epsilon(1e-11));
    }

    CHECK_THROWS_AS((void)strubecker_motion(0.0), Error);
    CHECK_THROWS_AS((void)strubecker_motion(-2.0), Error);
}

TEST_CASE("indirect top-view components stay in O_1(2)") {
    IsoMotion m;
    m.kind = SpaceKind::PseudoIsotropic;
    m.phi = 0.6;
    m.sx = 1;
    m.sy = -1;
    for (int i = 0; i < 20; ++i) {
        const Vec3 u = random_point();
        const Vec3 v = apply_motion(m, u) - apply_motion(m, Vec3{});
        CHECK(inner(SpaceKind::PseudoIsotropic, v, v) ==
              doctest::Approx(inner(SpaceKind::PseudoIsotropic, u, u)).epsilon(1e-12));
    }
}

TEST_CASE("motion json round trip") {
    IsoMotion m = random_motion(SpaceKind::PseudoIsotropic);
    const nlohmann::json j = m;
    CHECK(j.at("kind") == "pseudo_isotropic");
    const auto back = j.get<IsoMotion>();
    CHECK(back.a == m.a);
    CHECK(back.b == m.b);
    CHECK(back.c == m.c);
    CHECK(back.c1 == m.c1);
    CHECK(back.c2 == m.c2);
    CHECK(back.phi == m.phi);
}

TEST_CASE("space names") {
    CHECK(space_from_name("Euclidean") == SpaceKind::Euclidean);
    CHECK(space_from_name("simply_isotropic") == SpaceKind::SimplyIsotropic);
    CHECK(space_from_name("pseudo-isotropic") == SpaceKind::PseudoIsotropic);
    CHECK_THROWS_AS((void)space_from_name("hyperbolic"), Error);
}
