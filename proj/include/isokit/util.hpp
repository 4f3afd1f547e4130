#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace isokit {

/// Shortest decimal representation of x that round-trips to the same double.
std::string format_double(double x);

/// Finite-difference weights on arbitrary nodes (Fornberg's recurrence).
/// Returns w[d][j] such that f^(d)(xi) ~= sum_j w[d][j] * f(nodes[j]),
/// for d = 0..max_order. Exact for polynomials of degree < nodes.size().
std::vector<std::vector<double>> fornberg_weights(double xi,
                                                  std::span<const double> nodes,
                                                  int max_order);

/// Stencil width of a centered difference of the given derivative order and
/// accuracy order (accuracy must be even).
int central_stencil_points(int deriv_order, int accuracy);

/// Derivative of a uniformly sampled sequence, one value per sample.
/// Centered stencils inside, one-sided near the ends, same accuracy order.
std::vector<double> differentiate_sequence(std::span<const double> values, double h,
                                           int deriv_order = 1, int accuracy = 4);

/// Cumulative integral of uniformly sampled values (step h), result[0] = 0.
/// Simpson pairs at even indices, a 3-point half-panel rule at odd ones;
/// global error O(h^4) for smooth integrands.
std::vector<double> cumulative_simpson(std::span<const double> values, double h);

/// Cumulative integral of f over [a, b] on n uniformly spaced nodes, using a
/// per-interval Simpson rule with midpoint evaluations. result[0] = 0.
std::vector<double> cumulative_simpson_fn(const std::function<double(double)>& f,
                                          double a, double b, int n);

/// Max worker threads: min(hardware, ISOKIT_THREADS if set). At least 1.
int thread_cap();

/// Runs fn(i) for i in [0, n). Parallelized when worthwhile and permitted by
/// thread_cap(); fn must be re-entrant and write only to its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace isokit
