#include "isokit/frames.hpp"

#include "isokit/errors.hpp"
#include "isokit/util.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace isokit {

double FrameSet::param_step() const {
    if (samples.size() < 2)
        throw Error(ErrorCode::InsufficientData, "frame set needs at least 2 samples");
    const double h = samples[1].param - samples[0].param;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double d = samples[i].param - samples[i - 1].param;
        if (std::abs(d - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw Error(ErrorCode::InvalidInput, "frame samples not on a uniform parameter grid");
    }
    return h;
}

bool FrameSet::unit_speed(double tol) const {
    for (const auto& f : samples)
        if (std::abs(f.speed - 1.0) > tol) return false;
    return true;
}

namespace {

void require_admissible(const Curve& c) {
    const AdmissibilityReport rep = admissibility(c);
    if (!rep.admissible)
        throw NonAdmissibleError(rep, "curve is not admissible: " + rep.note);
}

std::vector<double> arclength_on_grid(const Curve& c, const std::vector<double>& ts) {
    return cumulative_simpson_fn([&c](double t) { return c.speed(t); }, ts.front(), ts.back(),
                                 static_cast<int>(ts.size()));
}

}  // namespace

FrameSet frenet_isotropic(const Curve& c) {
    if (c.kind != SpaceKind::SimplyIsotropic)
        throw Error(ErrorCode::UnsupportedSpace, "frenet_isotropic expects a simply isotropic curve");
    require_admissible(c);

    const auto ts = c.sample_params();
    const auto svals = arclength_on_grid(c, ts);
    FrameSet fs;
    fs.kind = c.kind;
    fs.samples.resize(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        const double t = ts[i];
        const auto d = c.derivatives(t);
        const double v2 = inner(c.kind, d[0], d[0]);
        const double v = std::sqrt(v2);
        const double v1 = inner(c.kind, d[0], d[1]) / v;
        const double d2top = det_top(d[0], d[1]);

        FrameSample& f = fs.samples[i];
        f.param = t;
        f.s = svals[i];
        f.speed = v;
        f.kappa = d2top / (v2 * v);
        f.tau = det3(d[0], d[1], d[2]) / (d2top * d2top);
        f.t = d[0] / v;
        const Vec3 dtds = d[1] / v2 - (v1 / (v2 * v)) * d[0];
        f.n = dtds / f.kappa;
        f.b = {0.0, 0.0, 1.0};
    });
    return fs;
}

FrameSet frenet_pseudo(const Curve& c) {
    if (c.kind != SpaceKind::PseudoIsotropic)
        throw Error(ErrorCode::UnsupportedSpace, "frenet_pseudo expects a pseudo-isotropic curve");
    require_admissible(c);

    const auto ts = c.sample_params();
    const auto svals = arclength_on_grid(c, ts);
    FrameSet fs;
    fs.kind = c.kind;
    fs.samples.resize(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        const double t = ts[i];
        const auto d = c.derivatives(t);
        const double g = inner(c.kind, d[0], d[0]);
        const double eps = g >= 0.0 ? 1.0 : -1.0;
        const double v2 = eps * g;
        const double v = std::sqrt(v2);
        const double v1 = eps * inner(c.kind, d[0], d[1]) / v;
        const double d2top = det_top(d[0], d[1]);

        FrameSample& f = fs.samples[i];
        f.param = t;
        f.s = svals[i];
        f.speed = v;
        f.eps = static_cast<int>(eps);
        f.eta = -f.eps;
        f.kappa = -eps * d2top / (v2 * v);
        f.tau = det3(d[0], d[1], d[2]) / (d2top * d2top);
        f.t = d[0] / v;
        const Vec3 dtds = d[1] / v2 - (v1 / (v2 * v)) * d[0];
        const double q2 = inner(c.kind, dtds, dtds);
        if (std::abs(q2) < 1e-12 * dot(dtds, dtds))
            throw NonAdmissibleError(admissibility(c),
                                     "lightlike acceleration vector at t = " + format_double(t));
        f.n = dtds / (f.eta * f.kappa);
        f.b = {0.0, 0.0, 1.0};
    });
    return fs;
}

FrameSet frenet_euclidean(const Curve& c) {
    if (c.kind != SpaceKind::Euclidean)
        throw Error(ErrorCode::UnsupportedSpace, "frenet_euclidean expects a Euclidean curve");
    require_admissible(c);

    const auto ts = c.sample_params();
    const auto svals = arclength_on_grid(c, ts);
    FrameSet fs;
    fs.kind = c.kind;
    fs.samples.resize(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        const double t = ts[i];
        const auto d = c.derivatives(t);
        const double v2 = dot(d[0], d[0]);
        const double v = std::sqrt(v2);
        const double v1 = dot(d[0], d[1]) / v;
        const Vec3 cr = cross_euclidean(d[0], d[1]);

        FrameSample& f = fs.samples[i];
        f.param = t;
        f.s = svals[i];
        f.speed = v;
        f.kappa = norm(cr) / (v2 * v);
        if (f.kappa < 1e-10)
            throw NonAdmissibleError(admissibility(c),
                                     "curvature vanishes at t = " + format_double(t) +
                                         "; Frenet frame undefined");
        f.tau = det3(d[0], d[1], d[2]) / dot(cr, cr);
        f.t = d[0] / v;
        const Vec3 dtds = d[1] / v2 - (v1 / (v2 * v)) * d[0];
        f.n = dtds / f.kappa;
        f.b = cross_euclidean(f.t, f.n);
    });
    return fs;
}

FrameSet rm_frame(FrameSet frenet, double tau0) {
    if (frenet.kind == SpaceKind::Euclidean)
        throw Error(ErrorCode::UnsupportedSpace,
                    "rm_frame handles the isotropic spaces; use rm_frame_euclidean");
    const double h = frenet.param_step();
    const std::size_t n = frenet.samples.size();

    // theta(s) = integral of tau ds + tau0; on the parameter grid the
    // integrand is tau * (ds/dt)
    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i)
        integrand[i] = frenet.samples[i].tau * frenet.samples[i].speed;
    const auto theta = cumulative_simpson(integrand, h);

    for (std::size_t i = 0; i < n; ++i) {
        FrameSample& f = frenet.samples[i];
        f.theta = theta[i] + tau0;
        f.n1 = f.n - f.theta * f.b;
        f.n2 = f.b;
        f.kappa1 = f.kappa;
        f.kappa2 = frenet.kind == SpaceKind::PseudoIsotropic ? f.eta * f.kappa * f.theta
                                                             : f.kappa * f.theta;
    }
    frenet.has_rm = true;
    frenet.tau0 = tau0;
    return frenet;
}

FrameSet rm_frame_euclidean(const Curve& c, const Vec3* initial_normal) {
    FrameSet fs = frenet_euclidean(c);
    const double h = fs.param_step();
    const std::size_t n = fs.samples.size();

    double theta0 = 0.0;
    if (initial_normal) {
        const Vec3 v = *initial_normal;
        const FrameSample& f0 = fs.samples.front();
        if (std::abs(norm(v) - 1.0) > 1e-8 || std::abs(dot(v, f0.t)) > 1e-8)
            throw Error(ErrorCode::InvalidInput,
                        "initial normal must be unit and orthogonal to the tangent");
        theta0 = std::atan2(-dot(v, f0.b), dot(v, f0.n));
    }

    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i) integrand[i] = fs.samples[i].tau * fs.samples[i].speed;
    const auto theta = cumulative_simpson(integrand, h);

    for (std::size_t i = 0; i < n; ++i) {
        FrameSample& f = fs.samples[i];
        f.theta = theta[i] + theta0;
        const double co = std::cos(f.theta), si = std::sin(f.theta);
        f.n1 = co * f.n - si * f.b;
        f.n2 = si * f.n + co * f.b;
        f.kappa1 = f.kappa * co;
        f.kappa2 = f.kappa * si;
    }
    fs.has_rm = true;
    fs.tau0 = theta0;
    return fs;
}

FrameSet bivector_frame(FrameSet frames) {
    if (frames.kind == SpaceKind::Euclidean)
        throw Error(ErrorCode::UnsupportedSpace, "bivector frames live in the isotropic spaces");
    if (!frames.has_rm)
        throw Error(ErrorCode::InvalidInput, "bivector_frame needs rm fields; call rm_frame first");
    for (auto& f : frames.samples) {
        f.bT = cross(frames.kind, f.n, f.b);
        f.bN1 = cross(frames.kind, f.b, f.t);
        f.bN2 = cross(frames.kind, f.t, f.n1);
        f.bB = cross(frames.kind, f.t, f.n);
    }
    frames.has_bivectors = true;
    return frames;
}

std::vector<Vec3> frame_derivative(const FrameSet& fs, const std::vector<Vec3>& field,
                                   int accuracy) {
    const double h = fs.param_step();
    const std::size_t n = field.size();
    std::vector<double> x(n), y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = field[i].x;
        y[i] = field[i].y;
        z[i] = field[i].z;
    }
    const auto dx = differentiate_sequence(x, h, 1, accuracy);
    const auto dy = differentiate_sequence(y, h, 1, accuracy);
    const auto dz = differentiate_sequence(z, h, 1, accuracy);
    std::vector<Vec3> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = Vec3{dx[i], dy[i], dz[i]} / fs.samples[i].speed;
    return out;
}

std::vector<double> frame_derivative(const FrameSet& fs, const std::vector<double>& field,
                                     int accuracy) {
    const auto d = differentiate_sequence(field, fs.param_step(), 1, accuracy);
    std::vector<double> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] / fs.samples[i].speed;
    return out;
}

void write_frames_csv(const FrameSet& fs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << "s,t.x,t.y,t.z,n1.x,n1.y,n1.z,n2.x,n2.y,n2.z,kappa,tau,kappa1,kappa2,theta\n";
    for (const auto& f : fs.samples) {
        out << format_double(f.s) << ',' << format_double(f.t.x) << ',' << format_double(f.t.y)
            << ',' << format_double(f.t.z) << ',' << format_double(f.n1.x) << ','
            << format_double(f.n1.y) << ',' << format_double(f.n1.z) << ','
            << format_double(f.n2.x) << ',' << format_double(f.n2.y) << ','
            << format_double(f.n2.z) << ',' << format_double(f.kappa) << ','
            << format_double(f.tau) << ',' << format_double(f.kappa1) << ','
            << format_double(f.kappa2) << ',' << format_double(f.theta) << '\n';
    }
}

nlohmann::json frames_to_json(const FrameSet& fs) {
    nlohmann::json j;
    j["space"] = space_name(fs.kind);
    j["samples"] = fs.samples.size();
    j["tau0"] = fs.tau0;
    auto column = [&fs](auto getter) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : fs.samples) arr.push_back(getter(f));
        return arr;
    };
    j["s"] = column([](const FrameSample& f) { return f.s; });
    j["kappa"] = column([](const FrameSample& f) { return f.kappa; });
    j["tau"] = column([](const FrameSample& f) { return f.tau; });
    j["t"] = column([](const FrameSample& f) { return nlohmann::json(f.t); });
    j["n"] = column([](const FrameSample& f) { return nlohmann::json(f.n); });
    j["b"] = column([](const FrameSample& f) { return nlohmann::json(f.b); });
    if (fs.has_rm) {
        j["n1"] = column([](const FrameSample& f) { return nlohmann::json(f.n1); });
        j["n2"] = column([](const FrameSample& f) { return nlohmann::json(f.n2); });
        j["kappa1"] = column([](const FrameSample& f) { return f.kappa1; });
        j["kappa2"] = column([](const FrameSample& f) { return f.kappa2; });
        j["theta"] = column([](const FrameSample& f) { return f.theta; });
    }
    if (fs.kind == SpaceKind::PseudoIsotropic) {
        j["eps"] = fs.samples.empty() ? 1 : fs.samples.front().eps;
        j["eta"] = fs.samples.empty() ? 1 : fs.samples.front().eta;
    }
    return j;
}

}  // namespace isokit
