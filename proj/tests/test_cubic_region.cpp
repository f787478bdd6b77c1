#include "juliareal/classifier.hpp"
#include "juliareal/cubic_region.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

using namespace juliareal;
using test_support::close;

namespace {

// Fixed points of X^3 - 3a^2 X + B solve X^3 - pX + B = 0 with p = 3a^2 + 1.
// Trigonometric form: X = 2 sqrt(p/3) cos(t), cos(3t) = -3sqrt(3)B / (2 p^1.5).
std::pair<double, double> trig_extreme_fixed_points(double a, double B)
{
    const double p = 3 * a * a + 1;
    const double r = 2 * std::sqrt(p / 3);
    const double arg = std::clamp(-3 * std::sqrt(3.0) * B / (2 * std::pow(p, 1.5)), -1.0, 1.0);
    const double t = std::acos(arg) / 3;
    double lo = INFINITY, hi = -INFINITY;
    for (int k = 0; k < 3; ++k) {
        const double x = r * std::cos(t - 2 * std::numbers::pi * k / 3);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return {lo, hi};
}

double curve_gap(double A, double B) { return std::fabs(B * B + 4 * A * (A + 3) * (A + 3) / 27); }

}  // namespace

TEST_SUITE("cubic_region")
{
    TEST_CASE("membership examples")
    {
        CHECK(in_region(-3, 0));
        CHECK_FALSE(in_region(-3, 0.01));
        CHECK_FALSE(in_region(1, 0));
        CHECK(in_region(-6, 2));
        CHECK_FALSE(in_region(-6, 3));
        CHECK_FALSE(in_region(-2.9, 0));
    }

    TEST_CASE("b_zero examples")
    {
        CHECK(b_zero(1) == 0.0);
        CHECK(b_zero(2) == 12.0);
        CHECK(in_region(-12, 12));
        CHECK_FALSE(in_region(-12, 12.0001));
        CHECK(close(b_zero(std::sqrt(2.0)), 2 * std::sqrt(2.0), 1e-15));
        CHECK_THROWS_AS(b_zero(0.99), DomainError);
    }

    TEST_CASE("b_zero sits on the boundary curve")
    {
        for (double a = 1.0; a <= 3.0 + 1e-12; a += 0.25) {
            const double A = -3 * a * a;
            const double B0 = b_zero(a);
            CHECK(in_region(A, B0));
            CHECK_FALSE(in_region(A, B0 + 1e-6));
            CHECK(close(B0 * B0, -4 * A * (A + 3) * (A + 3) / 27, 1e-12));
        }
    }

    TEST_CASE("three real fixed points")
    {
        CHECK(has_three_real_fixed_points(-3, 0));
        CHECK_FALSE(has_three_real_fixed_points(2, 0));
        // disc = -4(A-1)^3 - 27B^2 vanishes at A = -2, B = 2 (double root at 1)
        CHECK(has_three_real_fixed_points(-2, 2));
        CHECK_FALSE(has_three_real_fixed_points(-2, 2.001));
    }

    TEST_CASE("fixed point trajectory")
    {
        const std::vector<double> g{0.0, 0.1, 0.2, 0.3, 0.4};
        const auto rows = fixed_point_trajectory(1.0, g);
        REQUIRE(rows.size() == g.size());
        CHECK(rows[0].three_real);
        CHECK(close(rows[0].alpha1, -2.0, 1e-12));
        CHECK(close(rows[0].alpha2, 2.0, 1e-12));
        for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].alpha2 < rows[k - 1].alpha2);

        // mirror symmetry in B
        const std::vector<double> neg{-0.0, -0.1, -0.2, -0.3, -0.4};
        const auto mirrored = fixed_point_trajectory(1.0, neg);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            CHECK(close(mirrored[k].alpha1, -rows[k].alpha2, 1e-12));
            CHECK(close(mirrored[k].alpha2, -rows[k].alpha1, 1e-12));
        }

        // outside the closed three-real set rows are flagged, not fatal
        const std::vector<double> far{100.0};
        const auto out = fixed_point_trajectory(1.0, far);
        CHECK_FALSE(out[0].three_real);
        CHECK(std::isnan(out[0].alpha1));
    }

    TEST_CASE("property: fixed points decrease in B, matching the trigonometric formula")
    {
        std::mt19937_64 rng(41);
        std::uniform_real_distribution<double> ua(0.2, 3.0);
        for (int trial = 0; trial < 50; ++trial) {
            const double a = ua(rng);
            const double p = 3 * a * a + 1;
            const double bmax = 2 * std::pow(p / 3, 1.5);  // edge of the three-real set
            std::vector<double> g;
            for (int k = 0; k <= 40; ++k) g.push_back(-bmax + 2 * bmax * k / 40.0);
            const auto rows = fixed_point_trajectory(a, g);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (!rows[k].three_real) continue;
                INFO("a = ", a, " B = ", rows[k].B, " k = ", k);
                const auto [lo, hi] = trig_extreme_fixed_points(a, rows[k].B);
                CHECK(rows[k].alpha1 == doctest::Approx(lo).epsilon(1e-7));
                CHECK(rows[k].alpha2 == doctest::Approx(hi).epsilon(1e-7));
                if (k > 0 && rows[k - 1].three_real) {
                    CHECK(rows[k].alpha1 < rows[k - 1].alpha1);
                    CHECK(rows[k].alpha2 < rows[k - 1].alpha2);
                }
            }
        }
    }

    TEST_CASE("property: symmetry in B")
    {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> ua(-10, 2), ub(-20, 20);
        for (int k = 0; k < 10000; ++k) {
            const double A = ua(rng), B = ub(rng);
            CHECK(in_region(A, B) == in_region(A, -B));
        }
    }

    TEST_CASE("boundary distance")
    {
        CHECK(boundary_distance(-3, 0) < 1e-9);
        CHECK(boundary_distance(-12, 12) < 1e-9);
        CHECK(close(boundary_distance(-6, 2 * std::sqrt(2.0) + 0.0), 0.0, 1e-6));
        // (1, 0) is 1 away from the curve point (0, 0)
        CHECK(close(boundary_distance(1, 0), 1.0, 1e-6));
        // distance never exceeds the distance to any sampled curve point
        std::mt19937_64 rng(43);
        std::uniform_real_distribution<double> ua(-6, 1), ub(-4, 4), ut(-8, 0);
        for (int k = 0; k < 200; ++k) {
            const double A = ua(rng), B = ub(rng), t = ut(rng);
            const double bt = std::sqrt(-4 * t * (t + 3) * (t + 3) / 27);
            CHECK(boundary_distance(A, B) <= std::hypot(A - t, B - bt) + 1e-9);
        }
    }

    TEST_CASE("single cells")
    {
        const auto c = scan_cell(-3 * 1.5 * 1.5, 0);
        CHECK(c.agree);
        CHECK(c.analytic);
        CHECK(c.classifier);
        const auto d = scan_cell(0.5, 0);
        CHECK(d.agree);
        CHECK_FALSE(d.analytic);
        CHECK_FALSE(d.classifier);
    }

    TEST_CASE("grid")
    {
        const auto g = grid({-6, 1}, 0.05);
        CHECK(g.size() == 141);
        CHECK(g.front() == -6.0);
        CHECK(std::fabs(g.back() - 1.0) < 1e-12);
        CHECK_THROWS_AS(grid({0, 1}, 0.0), DomainError);
    }

    TEST_CASE("property: scan agrees away from the boundary")
    {
        const double step = 0.1;
        const auto scan = region_scan({-6, 1}, {-4, 4}, step);
        CHECK(scan.cells.size() == scan.a_values.size() * scan.b_values.size());
        for (const auto& cell : scan.cells) {
            CHECK(cell.analytic == in_region(cell.A, cell.B));
            CHECK(cell.classifier == classify_real_julia(cubic_family(cell.A, cell.B)).julia_real);
            if (curve_gap(cell.A, cell.B) > 10 * step) CHECK(cell.agree);
        }
        CHECK(scan.disagreements_beyond(2 * step) == 0);
        CHECK(scan.summary.analytic_true > 0);

        std::ostringstream csv;
        write_region_csv(csv, scan);
        const std::string text = csv.str();
        CHECK(text.rfind("A,B,analytic,classifier,agree,boundary_distance\n", 0) == 0);
        CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == scan.cells.size() + 1);

        const Image mask = region_mask(scan);
        CHECK(mask.width == static_cast<int>(scan.a_values.size()));
        CHECK(mask.height == static_cast<int>(scan.b_values.size()));
        for (std::size_t j = 0; j < scan.b_values.size(); ++j)
            for (std::size_t i = 0; i < scan.a_values.size(); ++i) {
                const auto& cell = scan.at(i, j);
                const int expected = !cell.agree ? 128 : (cell.analytic ? 255 : 0);
                CHECK(mask.at(static_cast<int>(i), mask.height - 1 - static_cast<int>(j)) == expected);
            }
    }
}
