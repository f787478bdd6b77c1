#pragma once

#include "juliareal/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace juliareal {

/// R = max(1, (2 + Σ_{i<d} |c_i|) / |c_d|). For |z| > R, |p(z)| >= 2|z|.
double escape_radius(const RealPolynomial& p);

enum class Membership {
    NotEscaped,  ///< stayed within the escape radius for the whole budget
    Escaped,
};

struct MembershipResult {
    Membership status = Membership::NotEscaped;
    int steps = 0;  ///< escape step, or the budget when not escaped
};

MembershipResult filled_julia_member(const RealPolynomial& p, Complex z, int max_iter);

struct Window {
    double re_min = -2.0, re_max = 2.0;
    double im_min = -2.0, im_max = 2.0;
};

/// 8-bit grey image, row 0 at the top (largest imaginary part).
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// Centre of pixel (x, y) in the complex plane.
Complex pixel_center(const Window& w, int width, int height, int x, int y);

/// Escape-time render: 255 for points that never escaped within max_iter,
/// otherwise floor(254 * k / max_iter) for escape step k.
Image render_filled_julia(const RealPolynomial& p, const Window& window, int width, int height, int max_iter);

inline constexpr std::size_t kDefaultOrbitCap = 59049;  // 3^10

struct BackwardOrbit {
    Complex alpha;
    int depth = 0;
    /// Level `depth` of the preimage tree, with multiplicity (d^depth points).
    std::vector<Complex> points;
    /// p(X) = alpha has a single distinct solution, so the preimage tree does
    /// not spread and measure comparisons are refused.
    bool totally_ramified_base = false;
};

/// f^-n(alpha), built breadth-first by solving p(X) = beta for every point
/// beta of the previous level.
BackwardOrbit backward_orbit(const RealPolynomial& p, Complex alpha, int n, std::size_t cap = kDefaultOrbitCap);

/// max |Im z| over the orbit points.
double max_imag_stat(const BackwardOrbit& orbit);

/// Largest |f^n(beta) - alpha| over the orbit, by forward evaluation.
double max_residual(const RealPolynomial& p, const BackwardOrbit& orbit);

/// True when p(X) = alpha has a single distinct solution (totally ramified).
bool is_totally_ramified(const RealPolynomial& p, Complex alpha);

/// Equal-weight measure on the real parts of a point sample.
struct EmpiricalMeasure {
    std::vector<double> values;  ///< sorted
    bool has_nonreal = false;

    double weight() const { return values.empty() ? 0.0 : 1.0 / static_cast<double>(values.size()); }

    static EmpiricalMeasure from_points(const std::vector<Complex>& points, double realness_tol = 1e-9);
    /// Throws DomainError for an orbit whose base point is totally ramified.
    static EmpiricalMeasure from_orbit(const BackwardOrbit& orbit, double realness_tol = 1e-9);
};

/// Two-sample Kolmogorov–Smirnov distance sup |F1 - F2|.
double empirical_cdf_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b);

/// One-sample Kolmogorov–Smirnov distance against a continuous CDF.
double empirical_cdf_distance(const EmpiricalMeasure& a, const std::function<double(double)>& cdf);

/// CDF of the equilibrium measure of [-2, 2] (invariant measure of X^2 - 2).
double arcsine_cdf(double x);

}  // namespace juliareal
