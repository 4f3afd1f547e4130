#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isokit/curve.hpp"
#include "isokit/errors.hpp"
#include "isokit/expr.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace isokit;

namespace {

Curve circular_helix(SpaceKind kind = SpaceKind::SimplyIsotropic) {
    Curve c;
    c.kind = kind;
    c.t_min = 0.0;
    c.t_max = 2.0 * M_PI;
    c.samples = 800;
    c.eval = [](double t) -> Vec3 { return {std::cos(t), std::sin(t), t}; };
    return c;
}

Curve hyperbolic_helix() {
    Curve c;
    c.kind = SpaceKind::PseudoIsotropic;
    c.t_min = -1.0;
    c.t_max = 1.0;
    c.samples = 600;
    c.eval = [](double t) -> Vec3 { return {std::sinh(t), std::cosh(t), t}; };
    return c;
}

}  // namespace

TEST_CASE("expression parser") {
    const Expr e = Expr::parse("2*t + sin(t)*cos(t) - pow(t, 2)/4");
    const double t = 0.7;
    CHECK(e(t) == doctest::Approx(2 * t + std::sin(t) * std::cos(t) - t * t / 4).epsilon(1e-15));

    CHECK(Expr::parse("-t")(3.0) == -3.0);
    CHECK(Expr::parse("exp(0)")(0.0) == 1.0);
    CHECK(Expr::parse("sinh(1) - cosh(1)")(0.0) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-15));
    CHECK(Expr::parse("1e-2 * t")(2.0) == doctest::Approx(0.02));
    CHECK(Expr::parse("(1+2)*(3+4)")(0.0) == 21.0);

    CHECK_THROWS_AS((void)Expr::parse("2 +"), Error);
    CHECK_THROWS_AS((void)Expr::parse("foo(t)"), Error);
    CHECK_THROWS_AS((void)Expr::parse("pow(t)"), Error);
    CHECK_THROWS_AS((void)Expr::parse("t t"), Error);
}

TEST_CASE("finite differences converge at the expected order") {
    Curve c = circular_helix();
    for (int order = 1; order <= 4; ++order) {
        c.fd_step = 0.05;
        const Vec3 coarse = c.derivative(1.0, order);
        c.fd_step = 0.025;
        const Vec3 fine = c.derivative(1.0, order);

        // exact derivatives of (cos, sin, t)
        const double ph = 1.0 + order * M_PI / 2.0;
        const Vec3 ref{std::cos(ph), std::sin(ph), order == 1 ? 1.0 : 0.0};
        const double e_coarse = norm(coarse - ref);
        const double e_fine = norm(fine - ref);
        CHECK(e_fine < e_coarse);
        const double rate = std::log2(e_coarse / e_fine);
        CHECK(rate > 3.0);  // nominal O(h^4)
        CHECK(rate < 5.5);
    }
}

TEST_CASE("exact callbacks win over finite differences") {
    Curve c = circular_helix();
    c.exact[0] = [](double t) -> Vec3 { return {-std::sin(t), std::cos(t), 1.0}; };
    const Vec3 d = c.derivative(0.3, 1);
    CHECK(d.x == -std::sin(0.3));
    // FD agreement with the exact callback at O(h^4)
    Curve fd = circular_helix();
    CHECK(norm(fd.derivative(0.3, 1) - d) < 1e-9);
}

TEST_CASE("arclength reparametrization") {
    SUBCASE("helix is already unit speed in I3") {
        const auto rc = arclength_reparametrize(circular_helix());
        CHECK(rc.map.total() == doctest::Approx(2 * M_PI).epsilon(1e-10));
        for (double s : {0.1, 1.0, 3.0, 6.0}) {
            const Vec3 d = rc.curve.derivative(s, 1);
            CHECK(std::abs(inner(SpaceKind::SimplyIsotropic, d, d) - 1.0) <= 1e-8);
        }
    }

    SUBCASE("double-speed helix rescales the domain by 2") {
        Curve c = circular_helix();
        c.eval = [](double t) -> Vec3 { return {std::cos(2 * t), std::sin(2 * t), t}; };
        c.t_max = M_PI;
        const auto rc = arclength_reparametrize(c);
        CHECK(rc.map.total() == doctest::Approx(2 * M_PI).epsilon(1e-9));
        CHECK(rc.curve.t_max == doctest::Approx(2 * M_PI).epsilon(1e-9));
        // composed with the inverse parameter map reproduces the original
        for (double t : {0.2, 1.1, 2.9}) {
            const double s = rc.map.s_of_t(t);
            CHECK(norm(rc.curve.position(s) - c.position(t)) <= 1e-8);
        }
    }

    SUBCASE("pseudo-isotropic hyperbolic helix is unit speed and spacelike") {
        const auto rc = arclength_reparametrize(hyperbolic_helix());
        CHECK(rc.map.total() == doctest::Approx(2.0).epsilon(1e-10));
        const Vec3 d = rc.curve.derivative(1.0, 1);
        CHECK(inner(SpaceKind::PseudoIsotropic, d, d) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(causal_character(d) == CausalClass::Spacelike);
    }

    SUBCASE("non-uniform speed: derivatives are consistent to high order") {
        Curve c;
        c.kind = SpaceKind::SimplyIsotropic;
        c.t_min = 0.0;
        c.t_max = 2.0;
        c.samples = 1200;
        c.eval = [](double t) -> Vec3 {
            return {std::cos(t + 0.3 * std::sin(t)), std::sin(t + 0.3 * std::sin(t)), 0.5 * t};
        };
        const auto rc = arclength_reparametrize(c);
        const double L = rc.map.total();
        for (double f : {0.11, 0.43, 0.77}) {
            const double s = f * L;
            const auto d = rc.curve.derivatives(s);
            CHECK(std::abs(inner(c.kind, d[0], d[0]) - 1.0) <= 1e-9);
            // chain-rule derivatives match finite differences of the composition
            const double h = 1e-2;
            Vec3 fd2 = (rc.curve.position(s + h) - 2.0 * rc.curve.position(s) +
                        rc.curve.position(s - h)) /
                       (h * h);
            CHECK(norm(fd2 - d[1]) <= 1e-3);
        }
    }

    SUBCASE("isotropic line has zero speed and is rejected") {
        Curve c;
        c.kind = SpaceKind::SimplyIsotropic;
        c.eval = [](double t) -> Vec3 { return {0, 0, t}; };
        CHECK_THROWS_AS((void)arclength_reparametrize(c), Error);
        try {
            (void)arclength_reparametrize(c);
        } catch (const Error& e) {
            CHECK(e.code == ErrorCode::NonAdmissibleSpeed);
        }
    }
}

TEST_CASE("admissibility") {
    SUBCASE("twisted cubic is admissible with det 2") {
        Curve c;
        c.kind = SpaceKind::SimplyIsotropic;
        c.t_min = 0.2;
        c.t_max = 1.0;
        c.samples = 200;
        c.eval = [](double t) -> Vec3 { return {t, t * t, t * t * t}; };
        const auto rep = admissibility(c);
        CHECK(rep.regular);
        CHECK(rep.admissible);
        // x'y'' - x''y' = 2 at t where speed is normalized: raw det is 2
        const Vec3 d1 = c.derivative(0.5, 1), d2 = c.derivative(0.5, 2);
        CHECK(det_top(d1, d2) == doctest::Approx(2.0).epsilon(1e-8));
    }

    SUBCASE("isotropic line is not regular in the z-seminorm") {
        Curve c;
        c.kind = SpaceKind::SimplyIsotropic;
        c.eval = [](double t) -> Vec3 { return {0, 0, t}; };
        c.samples = 64;
        const auto rep = admissibility(c);
        CHECK_FALSE(rep.regular);
        CHECK_FALSE(rep.admissible);
    }

    SUBCASE("lightlike curve is rejected") {
        Curve c;
        c.kind = SpaceKind::PseudoIsotropic;
        c.eval = [](double t) -> Vec3 { return {t, t, t}; };
        c.samples = 64;
        const auto rep = admissibility(c);
        CHECK_FALSE(rep.admissible);
        CHECK(rep.causal == CausalClass::Lightlike);
    }

    SUBCASE("inflection point is located") {
        Curve c;
        c.kind = SpaceKind::SimplyIsotropic;
        c.t_min = -1.0;
        c.t_max = 1.0;
        c.samples = 400;
        // top view (t, t^3/3): det = x'y'' - x''y' = 2t, root at t = 0
        c.eval = [](double t) -> Vec3 { return {t, t * t * t / 3.0, 0.1 * t}; };
        const auto rep = admissibility(c);
        CHECK_FALSE(rep.admissible);
        REQUIRE(rep.inflection_points.size() >= 1);
        CHECK(std::abs(rep.inflection_points.front()) <= 1e-9);
    }

    SUBCASE("admissibility is invariant under motions") {
        Curve c = circular_helix();
        const auto base = admissibility(c);
        IsoMotion m;
        m.kind = SpaceKind::SimplyIsotropic;
        m.a = 1.2;
        m.b = -0.4;
        m.c = 2.0;
        m.c1 = 0.8;
        m.c2 = -0.3;
        m.phi = 1.1;
        Curve moved = c;
        const EvalFn inner_eval = c.eval;
        moved.eval = [inner_eval, m](double t) { return apply_motion(m, inner_eval(t)); };
        const auto rep = admissibility(moved);
        CHECK(rep.admissible == base.admissible);
        CHECK(rep.min_abs_det == doctest::Approx(base.min_abs_det).epsilon(1e-6));
    }
}

TEST_CASE("curve specs load from json") {
    const nlohmann::json spec = {{"space", "simply_isotropic"},
                                 {"x", "cos(t)"},
                                 {"y", "sin(t)"},
                                 {"z", "t"},
                                 {"t_min", 0.0},
                                 {"t_max", 6.283185307179586},
                                 {"samples", 256}};
    const Curve c = curve_from_json(spec);
    CHECK(c.kind == SpaceKind::SimplyIsotropic);
    CHECK(c.samples == 256);
    CHECK(norm(c.position(0.0) - Vec3{1, 0, 0}) <= 1e-15);

    nlohmann::json bad = spec;
    bad["t_max"] = -1.0;
    CHECK_THROWS_AS((void)curve_from_json(bad), Error);
    bad = spec;
    bad["x"] = "sin(q)";
    CHECK_THROWS_AS((void)curve_from_json(bad), Error);
}

TEST_CASE("sampled csv curves interpolate with derivatives") {
    const std::string path = "test_curve_samples.csv";
    {
        std::ofstream out(path);
        out.precision(17);
        out << "t,x,y,z\n";
        for (int i = 0; i <= 400; ++i) {
            const double t = i * (2.0 * M_PI / 400);
            out << t << "," << std::cos(t) << "," << std::sin(t) << "," << t << "\n";
        }
    }
    const Curve c = curve_from_csv(path, SpaceKind::SimplyIsotropic);
    CHECK(c.kind == SpaceKind::SimplyIsotropic);
    const double t = 1.2345;
    CHECK(norm(c.position(t) - Vec3{std::cos(t), std::sin(t), t}) <= 1e-10);
    CHECK(norm(c.derivative(t, 1) - Vec3{-std::sin(t), std::cos(t), 1}) <= 1e-8);
    CHECK(norm(c.derivative(t, 2) - Vec3{-std::cos(t), -std::sin(t), 0}) <= 1e-5);
    std::remove(path.c_str());
}
