#include "isokit/curve.hpp"

#include "isokit/errors.hpp"
#include "isokit/expr.hpp"
#include "isokit/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace isokit {

namespace {

void require_eval(const Curve& c) {
    if (!c.eval) throw Error(ErrorCode::InvalidInput, "curve has no evaluator");
}

}  // namespace

Vec3 Curve::position(double t) const {
    require_eval(*this);
    return eval(t);
}

Vec3 Curve::derivative(double t, int order) const {
    if (order < 1 || order > 4)
        throw Error(ErrorCode::InvalidInput, "derivative order must be in 1..4");
    if (exact[order - 1]) return exact[order - 1](t);
    if (exact_batch) return exact_batch(t)[order - 1];
    require_eval(*this);

    const int np = central_stencil_points(order, fd_order);
    const int half = np / 2;
    std::vector<double> nodes(np);
    for (int j = 0; j < np; ++j) nodes[j] = static_cast<double>(j - half);  // unit spacing
    const auto w = fornberg_weights(0.0, nodes, order);

    const double h = step();
    const double hp = std::pow(h, order);
    Vec3 acc{};
    for (int j = 0; j < np; ++j) {
        const Vec3 f = eval(t + (j - half) * h);
        acc = acc + (w[order][j] / hp) * f;
    }
    return acc;
}

std::array<Vec3, 4> Curve::derivatives(double t) const {
    if (exact_batch) return exact_batch(t);
    return {derivative(t, 1), derivative(t, 2), derivative(t, 3), derivative(t, 4)};
}

double Curve::speed(double t) const {
    const Vec3 d = derivative(t, 1);
    return std::sqrt(std::abs(inner(kind, d, d)));
}

std::vector<double> Curve::sample_params() const {
    const int n = std::max(samples, 2);
    std::vector<double> ts(n);
    const double h = (t_max - t_min) / (n - 1);
    for (int i = 0; i < n; ++i) ts[i] = t_min + i * h;
    ts.back() = t_max;
    return ts;
}

// ---------------------------------------------------------------------------
// arclength

namespace {

// cubic Hermite on [x0, x1] with values y0, y1 and slopes m0, m1
double hermite(double x, double x0, double x1, double y0, double y1, double m0, double m1) {
    const double h = x1 - x0;
    const double u = (x - x0) / h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * h * m0 +
           (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * h * m1;
}

// index of the interval containing x in the sorted node vector
std::size_t locate(const std::vector<double>& nodes, double x) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    if (it == nodes.begin()) return 0;
    std::size_t i = static_cast<std::size_t>(it - nodes.begin()) - 1;
    return std::min(i, nodes.size() - 2);
}

}  // namespace

double ArclengthMap::t_of_s(double s) const {
    if (s <= s_nodes.front())
        return t_nodes.front() + (s - s_nodes.front()) / speeds.front();
    if (s >= s_nodes.back())
        return t_nodes.back() + (s - s_nodes.back()) / speeds.back();
    const std::size_t i = locate(s_nodes, s);
    return hermite(s, s_nodes[i], s_nodes[i + 1], t_nodes[i], t_nodes[i + 1],
                   1.0 / speeds[i], 1.0 / speeds[i + 1]);
}

double ArclengthMap::s_of_t(double t) const {
    if (t <= t_nodes.front()) return s_nodes.front() + (t - t_nodes.front()) * speeds.front();
    if (t >= t_nodes.back()) return s_nodes.back() + (t - t_nodes.back()) * speeds.back();
    const std::size_t i = locate(t_nodes, t);
    return hermite(t, t_nodes[i], t_nodes[i + 1], s_nodes[i], s_nodes[i + 1], speeds[i],
                   speeds[i + 1]);
}

ReparametrizedCurve arclength_reparametrize(const Curve& c, double min_speed) {
    require_eval(c);
    const int n = std::max(c.samples, 1025);
    const double h = (c.t_max - c.t_min) / (n - 1);

    ArclengthMap map;
    map.t_nodes.resize(n);
    map.speeds.resize(n);
    for (int i = 0; i < n; ++i) {
        const double t = c.t_min + i * h;
        map.t_nodes[i] = t;
        map.speeds[i] = c.speed(t);
        const double tm = t - 0.5 * h;
        const double vm = i > 0 ? c.speed(tm) : map.speeds[0];
        const double bad = std::min(map.speeds[i], vm);
        if (bad < min_speed)
            throw Error(ErrorCode::NonAdmissibleSpeed,
                        "speed " + format_double(bad) + " below threshold near t = " +
                            format_double(map.speeds[i] <= vm ? t : tm));
    }
    map.s_nodes = cumulative_simpson_fn([&c](double t) { return c.speed(t); }, c.t_min, c.t_max, n);

    const SpaceKind kind = c.kind;
    const Curve base = c;
    const auto shared_map = std::make_shared<ArclengthMap>(map);

    Curve out;
    out.kind = kind;
    out.t_min = 0.0;
    out.t_max = map.total();
    out.samples = c.samples;
    out.fd_order = c.fd_order;
    out.eval = [base, shared_map](double s) { return base.position(shared_map->t_of_s(s)); };
    out.exact_batch = [base, shared_map, kind](double s) -> std::array<Vec3, 4> {
        const double t = shared_map->t_of_s(s);
        const auto d = base.derivatives(t);

        // derivatives of G = |<a', a'>| (constant causal sign along the curve)
        const double g = inner(kind, d[0], d[0]);
        const double sign = g >= 0.0 ? 1.0 : -1.0;
        const double G = sign * g;
        const double G1 = sign * 2.0 * inner(kind, d[0], d[1]);
        const double G2 = sign * 2.0 * (inner(kind, d[1], d[1]) + inner(kind, d[0], d[2]));
        const double G3 = sign * 2.0 * (3.0 * inner(kind, d[1], d[2]) + inner(kind, d[0], d[3]));

        const double v = std::sqrt(G);
        const double v1 = G1 / (2.0 * v);
        const double v2 = (G2 / 2.0 - v1 * v1) / v;
        const double v3 = (G3 / 2.0 - 3.0 * v1 * v2) / v;

        // derivatives of the inverse parameter map t(s)
        const double tp1 = 1.0 / v;
        const double tp2 = -v1 / (v * v * v);
        const double tp3 = (3.0 * v1 * v1 - v * v2) / std::pow(v, 5);
        const double tp4 = (10.0 * v * v1 * v2 - v * v * v3 - 15.0 * v1 * v1 * v1) / std::pow(v, 7);

        std::array<Vec3, 4> ds;
        ds[0] = tp1 * d[0];
        ds[1] = (tp1 * tp1) * d[1] + tp2 * d[0];
        ds[2] = (tp1 * tp1 * tp1) * d[2] + (3.0 * tp1 * tp2) * d[1] + tp3 * d[0];
        ds[3] = (tp1 * tp1 * tp1 * tp1) * d[3] + (6.0 * tp1 * tp1 * tp2) * d[2] +
                (3.0 * tp2 * tp2 + 4.0 * tp1 * tp3) * d[1] + tp4 * d[0];
        return ds;
    };
    return {std::move(out), std::move(map)};
}

// ---------------------------------------------------------------------------
// admissibility

namespace {

// normalized osculating-plane determinant: the unit-speed x'y'' - x''y'
// (isotropic spaces) or the Euclidean curvature (Euclidean space)
double admissibility_measure(const Curve& c, double t) {
    const Vec3 d1 = c.derivative(t, 1);
    const Vec3 d2 = c.derivative(t, 2);
    const double v = std::sqrt(std::abs(inner(c.kind, d1, d1)));
    if (v < 1e-300) return 0.0;
    if (c.kind == SpaceKind::Euclidean) return norm(cross_euclidean(d1, d2)) / (v * v * v);
    return det_top(d1, d2) / (v * v * v);
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 80 && hi - lo > 1e-13 * (1 + std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo <= 0) == (fm <= 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

AdmissibilityReport admissibility(const Curve& c, double tol) {
    AdmissibilityReport rep;
    const auto ts = c.sample_params();
    const int n = static_cast<int>(ts.size());

    std::vector<double> speeds(n);
    double max_speed = 0.0, min_reg = 0.0, max_reg = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec3 d1 = c.derivative(ts[i], 1);
        speeds[i] = std::sqrt(std::abs(inner(c.kind, d1, d1)));
        max_speed = std::max(max_speed, speeds[i]);
        // a lightlike tangent has zero pseudo-norm but the curve is still
        // regular; regularity in I3p is measured in the Euclidean norm
        const double reg = c.kind == SpaceKind::PseudoIsotropic ? norm(d1) : speeds[i];
        min_reg = i == 0 ? reg : std::min(min_reg, reg);
        max_reg = std::max(max_reg, reg);
    }
    rep.min_speed = *std::min_element(speeds.begin(), speeds.end());
    rep.regular = min_reg > 1e-8 * std::max(1.0, max_reg);

    if (!rep.regular) {
        rep.note = "speed vanishes in the space norm (isotropic velocity)";
        return rep;
    }

    bool lightlike = false;
    if (c.kind == SpaceKind::PseudoIsotropic) {
        const double scale = std::max(1.0, max_reg * max_reg);
        CausalClass first = CausalClass::Spacelike;
        for (int i = 0; i < n; ++i) {
            const Vec3 d1 = c.derivative(ts[i], 1);
            const double q = inner(SpaceKind::PseudoIsotropic, d1, d1);
            CausalClass cls = std::abs(q) <= 1e-10 * scale
                                  ? CausalClass::Lightlike
                                  : (q > 0 ? CausalClass::Spacelike : CausalClass::Timelike);
            if (i == 0) first = cls;
            if (cls == CausalClass::Lightlike) lightlike = true;
            if (cls != first) rep.causal_constant = false;
        }
        rep.causal = first;
        if (lightlike) {
            rep.causal = CausalClass::Lightlike;
            rep.note = "tangent on the light cone x = +-y; lightlike curves are not admissible";
            rep.causal_constant = rep.causal_constant && first == CausalClass::Lightlike;
            return rep;  // the osculating determinant is meaningless here
        }
        if (!rep.causal_constant) {
            rep.note = "causal character changes along the curve";
            return rep;
        }
    }

    std::vector<double> dets(n);
    for (int i = 0; i < n; ++i) dets[i] = admissibility_measure(c, ts[i]);
    rep.min_abs_det = std::abs(dets[0]);
    for (double d : dets) rep.min_abs_det = std::min(rep.min_abs_det, std::abs(d));

    const auto measure = [&c](double t) { return admissibility_measure(c, t); };
    for (int i = 0; i + 1 < n; ++i) {
        if ((dets[i] <= 0) != (dets[i + 1] <= 0))
            rep.inflection_points.push_back(bisect_root(measure, ts[i], ts[i + 1]));
        else if (std::abs(dets[i]) <= tol &&
                 (i == 0 || std::abs(dets[i]) <= std::abs(dets[i - 1])) &&
                 std::abs(dets[i]) <= std::abs(dets[i + 1]))
            rep.inflection_points.push_back(ts[i]);  // near-zero local minimum
    }

    rep.admissible = rep.regular && rep.inflection_points.empty() && rep.min_abs_det > tol;
    if (rep.admissible && rep.note.empty()) rep.note = "admissible";
    if (!rep.admissible && rep.note.empty())
        rep.note = rep.inflection_points.empty() ? "osculating determinant below tolerance"
                                                 : "inflection points present";
    return rep;
}

void to_json(nlohmann::json& j, const AdmissibilityReport& r) {
    j = {{"regular", r.regular},
         {"inflection_points", r.inflection_points},
         {"admissible", r.admissible},
         {"min_abs_det", r.min_abs_det},
         {"min_speed", r.min_speed},
         {"causal", causal_name(r.causal)},
         {"causal_constant", r.causal_constant},
         {"note", r.note}};
}

// ---------------------------------------------------------------------------
// loading

Curve curve_from_json(const nlohmann::json& spec) {
    Curve c;
    try {
        c.kind = space_from_name(spec.at("space").get<std::string>());
        const Expr ex = Expr::parse(spec.at("x").get<std::string>());
        const Expr ey = Expr::parse(spec.at("y").get<std::string>());
        const Expr ez = Expr::parse(spec.at("z").get<std::string>());
        c.t_min = spec.at("t_min").get<double>();
        c.t_max = spec.at("t_max").get<double>();
        c.samples = spec.value("samples", 2000);
        c.fd_order = spec.value("fd_order", 4);
        c.fd_step = spec.value("fd_step", 0.0);
        c.eval = [ex, ey, ez](double t) -> Vec3 { return {ex(t), ey(t), ez(t)}; };
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ValidationError, std::string("bad curve spec: ") + e.what());
    }
    if (!(c.t_max > c.t_min))
        throw Error(ErrorCode::ValidationError, "curve spec requires t_max > t_min");
    if (c.samples < 10)
        throw Error(ErrorCode::ValidationError, "curve spec requires samples >= 10");
    if (c.fd_order < 2 || c.fd_order > 8 || c.fd_order % 2 != 0)
        throw Error(ErrorCode::ValidationError, "fd_order must be 2, 4, 6 or 8");
    return c;
}

Curve curve_from_csv(const std::string& path, SpaceKind kind) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);

    std::vector<double> ts;
    std::vector<Vec3> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double t, x, y, z;
        if (row >> t >> x >> y >> z) {
            ts.push_back(t);
            pts.push_back({x, y, z});
        }  // non-numeric rows (header) are skipped
    }
    if (ts.size() < 10)
        throw Error(ErrorCode::InsufficientData, "sampled curve needs at least 10 rows: " + path);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        if (!(ts[i] < ts[i + 1]))
            throw Error(ErrorCode::ValidationError, "sampled curve requires strictly increasing t");

    auto shared_t = std::make_shared<std::vector<double>>(std::move(ts));
    auto shared_p = std::make_shared<std::vector<Vec3>>(std::move(pts));

    // local polynomial interpolation over a sliding window; the same window
    // also provides the derivatives (Fornberg weights at the query point)
    auto window_eval = [shared_t, shared_p](double t, int order) -> Vec3 {
        constexpr int kWindow = 9;
        const auto& tv = *shared_t;
        const auto& pv = *shared_p;
        const int n = static_cast<int>(tv.size());
        const int w = std::min(kWindow, n);
        int lo = static_cast<int>(locate(tv, t)) - w / 2 + 1;
        lo = std::clamp(lo, 0, n - w);
        const auto weights =
            fornberg_weights(t, std::span<const double>(tv.data() + lo, w), order);
        Vec3 acc{};
        for (int j = 0; j < w; ++j) acc = acc + weights[order][j] * pv[lo + j];
        return acc;
    };

    Curve c;
    c.kind = kind;
    c.t_min = shared_t->front();
    c.t_max = shared_t->back();
    c.samples = std::max<int>(64, static_cast<int>(shared_t->size()));
    c.eval = [window_eval](double t) { return window_eval(t, 0); };
    for (int k = 1; k <= 4; ++k)
        c.exact[k - 1] = [window_eval, k](double t) { return window_eval(t, k); };
    return c;
}

Curve load_curve(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return curve_from_csv(path, SpaceKind::SimplyIsotropic);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    nlohmann::json spec;
    try {
        in >> spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::IoError, "cannot parse " + path + ": " + e.what());
    }
    return curve_from_json(spec);
}

}  // namespace isokit
