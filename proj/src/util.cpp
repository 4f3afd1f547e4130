#include "isokit/util.hpp"

#include "isokit/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace isokit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnsupportedSpace: return "unsupported_space";
        case ErrorCode::SingularParameter: return "singular_parameter";
        case ErrorCode::NonAdmissible: return "non_admissible";
        case ErrorCode::NonAdmissibleSpeed: return "non_admissible_speed";
        case ErrorCode::DegenerateSphere: return "degenerate_sphere";
        case ErrorCode::InvalidInput: return "invalid_input";
        case ErrorCode::InsufficientData: return "insufficient_data";
        case ErrorCode::IoError: return "io_error";
        case ErrorCode::ValidationError: return "validation_error";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::vector<std::vector<double>> fornberg_weights(double xi, std::span<const double> nodes,
                                                  int max_order) {
    const int n = static_cast<int>(nodes.size()) - 1;
    const int m = max_order;
    if (n < 0 || m < 0 || m > n)
        throw Error(ErrorCode::InvalidInput, "fornberg_weights: need more nodes than derivative order");

    // B. Fornberg, Math. Comp. 51 (1988). c[k][j] = weight of f(nodes[j]) in f^(k)(xi).
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n + 1, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - xi;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - xi;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

int central_stencil_points(int deriv_order, int accuracy) {
    if (deriv_order < 1 || accuracy < 2 || accuracy % 2 != 0)
        throw Error(ErrorCode::InvalidInput, "central stencil: derivative order >= 1 and even accuracy required");
    return 2 * ((deriv_order + 1) / 2) - 1 + accuracy;
}

std::vector<double> differentiate_sequence(std::span<const double> values, double h,
                                           int deriv_order, int accuracy) {
    const int n = static_cast<int>(values.size());
    // d + accuracy nodes keep the full order for the one-sided windows at the
    // ends (an even-order centered stencil would drop one order there).
    const int np = std::max(deriv_order + accuracy, central_stencil_points(deriv_order, accuracy));
    if (n < np)
        throw Error(ErrorCode::InsufficientData, "differentiate_sequence: sequence shorter than stencil");
    const int half = np / 2;

    std::vector<double> nodes(np), out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        int lo = std::clamp(i - half, 0, n - np);
        for (int j = 0; j < np; ++j) nodes[j] = (lo + j - i) * h;
        auto w = fornberg_weights(0.0, nodes, deriv_order);
        double acc = 0.0;
        for (int j = 0; j < np; ++j) acc += w[deriv_order][j] * values[lo + j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> cumulative_simpson(std::span<const double> values, double h) {
    const int n = static_cast<int>(values.size());
    std::vector<double> out(n, 0.0);
    if (n < 3) {
        if (n == 2) out[1] = 0.5 * h * (values[0] + values[1]);
        return out;
    }
    for (int i = 0; i + 2 < n; i += 2)
        out[i + 2] = out[i] + h / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
    for (int i = 0; i + 1 < n; i += 2) {
        // half panel over [i, i+1] from the parabola through three contiguous nodes
        if (i + 2 < n)
            out[i + 1] = out[i] + h / 12.0 * (5.0 * values[i] + 8.0 * values[i + 1] - values[i + 2]);
        else  // right edge (n even): window shifts one node left
            out[i + 1] = out[i] + h / 12.0 * (-values[i - 1] + 8.0 * values[i] + 5.0 * values[i + 1]);
    }
    return out;
}

std::vector<double> cumulative_simpson_fn(const std::function<double(double)>& f, double a,
                                          double b, int n) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "cumulative_simpson_fn: need at least 2 nodes");
    const double h = (b - a) / (n - 1);
    std::vector<double> out(n, 0.0);
    double left = f(a);
    for (int i = 1; i < n; ++i) {
        const double t1 = a + i * h;
        const double mid = f(t1 - 0.5 * h);
        const double right = f(t1);
        out[i] = out[i - 1] + h / 6.0 * (left + 4.0 * mid + right);
        left = right;
    }
    return out;
}

int thread_cap() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("ISOKIT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int cap = thread_cap();
    if (cap <= 1 || n < 1024) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(cap, (n + 1023) / 1024);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace isokit
