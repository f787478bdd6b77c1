#include "juliareal/orbit.hpp"

#include "juliareal/parallel.hpp"
#include "juliareal/roots.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace juliareal {

double escape_radius(const RealPolynomial& p)
{
    if (p.degree() < 2) throw DomainError("escape_radius: degree must be at least 2");
    double sum = 0.0;
    for (int i = 0; i < p.degree(); ++i) sum += std::fabs(p.coeff(i));
    return std::max(1.0, (2.0 + sum) / std::fabs(p.lead()));
}

MembershipResult filled_julia_member(const RealPolynomial& p, Complex z, int max_iter)
{
    const double R = escape_radius(p);
    for (int k = 0; k <= max_iter; ++k) {
        if (std::abs(z) > R) return {Membership::Escaped, k};
        if (k < max_iter) z = evaluate(p, z);
    }
    return {Membership::NotEscaped, max_iter};
}

Complex pixel_center(const Window& w, int width, int height, int x, int y)
{
    const double re = w.re_min + (w.re_max - w.re_min) * (x + 0.5) / width;
    const double im = w.im_max - (w.im_max - w.im_min) * (y + 0.5) / height;
    return {re, im};
}

Image render_filled_julia(const RealPolynomial& p, const Window& window, int width, int height, int max_iter)
{
    if (width <= 0 || height <= 0) throw DomainError("render_filled_julia: resolution must be positive");
    if (max_iter <= 0) throw DomainError("render_filled_julia: max_iter must be positive");
    Image img;
    img.width = width;
    img.height = height;
    img.pixels.assign(static_cast<std::size_t>(width) * height, 0);
    parallel_for(static_cast<std::size_t>(height), [&](std::size_t y) {
        for (int x = 0; x < width; ++x) {
            const auto m = filled_julia_member(p, pixel_center(window, width, height, x, static_cast<int>(y)), max_iter);
            std::uint8_t v = 255;
            if (m.status == Membership::Escaped)
                v = static_cast<std::uint8_t>(254.0 * m.steps / max_iter);
            img.pixels[y * static_cast<std::size_t>(width) + x] = v;
        }
    });
    return img;
}

namespace {

std::vector<Complex> preimages(const RealPolynomial& p, Complex beta)
{
    std::vector<Complex> out;
    if (beta.imag() == 0.0) {
        for (const auto& r : distinct_roots(p - RealPolynomial::constant(beta.real())))
            for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
        return out;
    }
    std::vector<Complex> coeffs(p.coeffs().begin(), p.coeffs().end());
    coeffs[0] -= beta;
    return complex_roots(coeffs);
}

}  // namespace

bool is_totally_ramified(const RealPolynomial& p, Complex alpha)
{
    if (p.degree() < 1) throw DomainError("is_totally_ramified: constant map");
    if (alpha.imag() == 0.0) return distinct_roots(p - RealPolynomial::constant(alpha.real())).size() == 1;
    std::vector<Complex> coeffs(p.coeffs().begin(), p.coeffs().end());
    coeffs[0] -= alpha;
    return root_clusters(coeffs).size() == 1;
}

BackwardOrbit backward_orbit(const RealPolynomial& p, Complex alpha, int n, std::size_t cap)
{
    const int d = p.degree();
    if (d < 1) throw DomainError("backward_orbit: constant map");
    if (n < 0) throw DomainError("backward_orbit: depth must be nonnegative");
    if (std::pow(static_cast<double>(d), n) > static_cast<double>(cap))
        throw CapacityError(fmt::format("backward_orbit: {}^{} points exceed the cap of {}", d, n, cap));

    BackwardOrbit orbit;
    orbit.alpha = alpha;
    orbit.depth = n;
    orbit.totally_ramified_base = d >= 2 && is_totally_ramified(p, alpha);
    std::vector<Complex> level{alpha};
    for (int depth = 1; depth <= n; ++depth) {
        std::vector<std::vector<Complex>> children(level.size());
        parallel_for(level.size(), [&](std::size_t i) {
            try {
                children[i] = preimages(p, level[i]);
            } catch (const RootFindingError& e) {
                throw RootFindingError(fmt::format("backward_orbit: level {}, branch {} (beta = {}{:+}i): {}", depth, i,
                                                   level[i].real(), level[i].imag(), e.what()),
                                       e.best_iterate());
            }
        });
        std::vector<Complex> next;
        next.reserve(level.size() * static_cast<std::size_t>(d));
        for (auto& c : children) next.insert(next.end(), c.begin(), c.end());
        level = std::move(next);
    }
    orbit.points = std::move(level);
    return orbit;
}

double max_imag_stat(const BackwardOrbit& orbit)
{
    double m = 0.0;
    for (const auto& z : orbit.points) m = std::max(m, std::fabs(z.imag()));
    return m;
}

double max_residual(const RealPolynomial& p, const BackwardOrbit& orbit)
{
    double worst = 0.0;
    for (auto z : orbit.points) {
        for (int k = 0; k < orbit.depth; ++k) z = evaluate(p, z);
        worst = std::max(worst, std::abs(z - orbit.alpha));
    }
    return worst;
}

EmpiricalMeasure EmpiricalMeasure::from_points(const std::vector<Complex>& points, double realness_tol)
{
    EmpiricalMeasure m;
    m.values.reserve(points.size());
    for (const auto& z : points) {
        m.values.push_back(z.real());
        if (std::fabs(z.imag()) > realness_tol * (1.0 + std::abs(z))) m.has_nonreal = true;
    }
    std::sort(m.values.begin(), m.values.end());
    return m;
}

EmpiricalMeasure EmpiricalMeasure::from_orbit(const BackwardOrbit& orbit, double realness_tol)
{
    if (orbit.totally_ramified_base)
        throw DomainError("base point has a single preimage; the preimage measures do not equidistribute");
    return from_points(orbit.points, realness_tol);
}

double empirical_cdf_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b)
{
    if (a.values.empty() || b.values.empty()) throw DomainError("empirical_cdf_distance: empty measure");
    const double na = static_cast<double>(a.values.size());
    const double nb = static_cast<double>(b.values.size());
    std::size_t i = 0, j = 0;
    double best = 0.0;
    while (i < a.values.size() || j < b.values.size()) {
        double x;
        if (j == b.values.size() || (i < a.values.size() && a.values[i] <= b.values[j]))
            x = a.values[i];
        else
            x = b.values[j];
        while (i < a.values.size() && a.values[i] == x) ++i;
        while (j < b.values.size() && b.values[j] == x) ++j;
        best = std::max(best, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return best;
}

double empirical_cdf_distance(const EmpiricalMeasure& a, const std::function<double(double)>& cdf)
{
    if (a.values.empty()) throw DomainError("empirical_cdf_distance: empty measure");
    const double n = static_cast<double>(a.values.size());
    double best = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double f = cdf(a.values[i]);
        best = std::max({best, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return best;
}

double arcsine_cdf(double x)
{
    if (x <= -2.0) return 0.0;
    if (x >= 2.0) return 1.0;
    return 0.5 + std::asin(x / 2.0) / std::numbers::pi;
}

}  // namespace juliareal
