#include "juliareal/cubic_region.hpp"

#include "juliareal/classifier.hpp"
#include "juliareal/parallel.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace juliareal {

bool in_region(double A, double B)
{
    return A <= -3.0 && B * B <= -4.0 * A * (A + 3.0) * (A + 3.0) / 27.0;
}

double b_zero(double a)
{
    if (!(a >= 1.0)) throw DomainError(fmt::format("b_zero: a = {} is below 1, no B keeps the Julia set real", a));
    return 2.0 * a * (a * a - 1.0);
}

bool has_three_real_fixed_points(double A, double B)
{
    // Exact on the dyadic inputs, so the verdict matches the roots found below.
    return all_roots_real(to_rational(RealPolynomial{B, A - 1.0, 0.0, 1.0}));
}

RealPolynomial cubic_family(double A, double B) { return RealPolynomial{B, A, 0.0, 1.0}; }

std::vector<TrajectoryRow> fixed_point_trajectory(double a, std::span<const double> b_grid)
{
    const double A = -3.0 * a * a;
    std::vector<TrajectoryRow> rows;
    rows.reserve(b_grid.size());
    for (double B : b_grid) {
        TrajectoryRow row;
        row.B = B;
        row.three_real = has_three_real_fixed_points(A, B);
        if (row.three_real) {
            const auto roots = real_roots(RealPolynomial{B, A - 1.0, 0.0, 1.0});
            row.alpha1 = roots.front().x;
            row.alpha2 = roots.back().x;
        } else {
            row.alpha1 = row.alpha2 = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

double curve_height(double s) { return 2.0 * std::fabs(s + 3.0) * std::sqrt(-s / 27.0); }

double squared_gap(double s, double A, double B) { return (s - A) * (s - A) + (curve_height(s) - B) * (curve_height(s) - B); }

}  // namespace

double boundary_distance(double A, double B)
{
    // By symmetry only the upper branch B = +height(s) matters.
    B = std::fabs(B);
    const double anchor = std::min(A, 0.0);
    const double reach = std::sqrt(squared_gap(anchor, A, B));
    const double lo = A - reach - 1.0;
    const double hi = 0.0;
    constexpr int kSamples = 400;
    const double h = (hi - lo) / kSamples;
    int best = 0;
    double best_val = squared_gap(lo, A, B);
    for (int k = 1; k <= kSamples; ++k) {
        const double v = squared_gap(lo + h * k, A, B);
        if (v < best_val) {
            best_val = v;
            best = k;
        }
    }
    double a = lo + h * std::max(0, best - 1);
    double b = std::min(hi, lo + h * (best + 1));
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = squared_gap(x1, A, B), f2 = squared_gap(x2, A, B);
    for (int it = 0; it < 100 && b - a > 1e-15 * (1.0 + std::fabs(a)); ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = squared_gap(x1, A, B);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = squared_gap(x2, A, B);
        }
    }
    return std::sqrt(std::min({best_val, f1, f2, squared_gap(0.0, A, B)}));
}

std::vector<double> grid(const Range& r, double step)
{
    if (!(step > 0.0)) throw DomainError("grid: step must be positive");
    if (r.hi < r.lo) throw DomainError("grid: empty range");
    const auto n = static_cast<std::size_t>(std::floor((r.hi - r.lo) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = r.lo + static_cast<double>(i) * step;
    return out;
}

std::size_t RegionScan::disagreements_beyond(double band) const
{
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [&](const ScanCell& c) { return !c.agree && c.boundary_distance > band; }));
}

ScanCell scan_cell(double A, double B)
{
    ScanCell c;
    c.A = A;
    c.B = B;
    c.analytic = in_region(A, B);
    const auto report = classify_real_julia(cubic_family(A, B));
    c.classifier = report.julia_real;
    c.marginal = report.marginal;
    c.agree = c.analytic == c.classifier;
    c.boundary_distance = boundary_distance(A, B);
    return c;
}

RegionScan region_scan(const Range& a_range, const Range& b_range, double step)
{
    RegionScan scan;
    scan.step = step;
    scan.a_values = grid(a_range, step);
    scan.b_values = grid(b_range, step);
    const std::size_t na = scan.a_values.size();
    scan.cells.resize(na * scan.b_values.size());
    parallel_for(scan.cells.size(), [&](std::size_t k) {
        scan.cells[k] = scan_cell(scan.a_values[k % na], scan.b_values[k / na]);
    });
    auto& s = scan.summary;
    for (const auto& c : scan.cells) {
        ++s.cells;
        s.analytic_true += c.analytic;
        s.classifier_true += c.classifier;
        s.marginal += c.marginal;
        if (!c.agree) {
            ++s.disagreements;
            s.max_disagreement_distance = std::max(s.max_disagreement_distance, c.boundary_distance);
        }
    }
    return scan;
}

void write_region_csv(std::ostream& out, const RegionScan& scan)
{
    out << "A,B,analytic,classifier,agree,boundary_distance\n";
    for (const auto& c : scan.cells)
        out << fmt::format("{},{},{},{},{},{}\n", c.A, c.B, c.analytic ? 1 : 0, c.classifier ? 1 : 0, c.agree ? 1 : 0,
                           c.boundary_distance);
}

Image region_mask(const RegionScan& scan)
{
    Image img;
    img.width = static_cast<int>(scan.a_values.size());
    img.height = static_cast<int>(scan.b_values.size());
    img.pixels.resize(scan.cells.size());
    for (int y = 0; y < img.height; ++y) {
        const auto j = static_cast<std::size_t>(img.height - 1 - y);
        for (int x = 0; x < img.width; ++x) {
            const auto& c = scan.at(static_cast<std::size_t>(x), j);
            img.pixels[static_cast<std::size_t>(y) * img.width + x] = !c.agree ? 128 : (c.analytic ? 255 : 0);
        }
    }
    return img;
}

}  // namespace juliareal
