#include "juliareal/classifier.hpp"
#include "juliareal/orbit.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace juliareal;
using test_support::close;

namespace {

// Brute-force oracle for I(p): exact realness of p - t over a t grid.
bool exact_real_rooted(const RealPolynomial& p, double t)
{
    return all_roots_real(to_rational(p) - RationalPolynomial::constant(exact_rational(t)));
}

// Polynomials with a real Julia set (X^2 + c with c < -2, X^3 - 3a^2 X with
// a > 1, and second iterates of the quadratics), conjugated by a random affine map.
RealPolynomial real_julia_sample(std::mt19937_64& rng, int degree)
{
    std::uniform_real_distribution<double> u(-2, 2);
    std::uniform_real_distribution<double> stretch(1.1, 2.0);
    RealPolynomial base;
    const double s = stretch(rng);
    switch (degree) {
    case 2: base = RealPolynomial{-2.0 * s, 0, 1}; break;
    case 3: base = RealPolynomial{0, -3.0 * s, 0, 1}; break;  // X^3 - 3a^2 X, a^2 = s > 1
    default: {
        const RealPolynomial g{-2.0 * s, 0, 1};
        base = compose(g, g);
        break;
    }
    }
    double h = u(rng);
    if (std::fabs(h) < 0.3) h = h < 0 ? -0.3 : 0.3;
    return conjugate(base, AffineMap(h, u(rng)));
}

RealPolynomial mixed_sample(std::mt19937_64& rng, int trial, int degree)
{
    if (trial % 3 == 0) return real_julia_sample(rng, degree);
    return test_support::random_poly(rng, degree, 3.0);
}

double largest_fixed_point_or_zero(const RealPolynomial& p)
{
    const auto fp = real_fixed_points(p, 1);
    return fp.empty() ? 0.0 : fp.back().x;
}

}  // namespace

TEST_SUITE("julia_classifier")
{
    TEST_CASE("critical interval of X^2 + c is [c, inf)")
    {
        for (double c : {-3.0, -2.0, 0.0, 0.25, 1.0}) {
            const auto I = critical_interval(RealPolynomial{c, 0, 1});
            CHECK_FALSE(I.empty);
            CHECK(I.lo == c);
            CHECK(std::isinf(I.hi));
            CHECK(I.hi > 0);
        }
        const auto neg = critical_interval(RealPolynomial{1, 0, -1});
        CHECK(std::isinf(neg.lo));
        CHECK(neg.hi == 1.0);
    }

    TEST_CASE("critical interval of X^3 - 3a^2 X + B is [B - 2a^3, B + 2a^3]")
    {
        const auto I = critical_interval(RealPolynomial{0, -3, 0, 1});
        CHECK(close(I.lo, -2.0, 1e-12));
        CHECK(close(I.hi, 2.0, 1e-12));
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> ua(0.1, 3), ub(-5, 5);
        for (int k = 0; k < 50; ++k) {
            const double a = ua(rng), B = ub(rng);
            const auto J = critical_interval(RealPolynomial{B, -3 * a * a, 0, 1});
            CHECK(close(J.lo, B - 2 * a * a * a, 1e-12));
            CHECK(close(J.hi, B + 2 * a * a * a, 1e-12));
        }
        // no real critical points
        CHECK(critical_interval(RealPolynomial{0, 1, 0, 1}).empty);
    }

    TEST_CASE("second iterate of -X^3+2X has an empty critical interval")
    {
        const RealPolynomial f{0, 2, 0, -1};
        const auto g = compose(f, f);
        CHECK(critical_interval(g).empty);
        // I(f) = [-(4/3)sqrt(2/3), (4/3)sqrt(2/3)] and I(f^2) must sit inside it
        const double r = (4.0 / 3.0) * std::sqrt(2.0 / 3.0);
        const auto If = critical_interval(f);
        CHECK(close(If.lo, -r, 1e-12));
        CHECK(close(If.hi, r, 1e-12));
        for (int k = -200; k <= 200; ++k) CHECK_FALSE(exact_real_rooted(g, k * 0.01));
    }

    TEST_CASE("second iterate of -X^3+3X has critical interval [-2, 2]")
    {
        const RealPolynomial f{0, 3, 0, -1};
        const auto I = critical_interval(compose(f, f));
        CHECK(std::fabs(I.lo + 2) <= 1e-9);
        CHECK(std::fabs(I.hi - 2) <= 1e-9);
    }

    TEST_CASE("degenerate single-point interval")
    {
        const auto I = critical_interval(RealPolynomial{0, 0, 0, 0, 1});
        CHECK(I.is_point());
        CHECK(I.lo == 0.0);
        const auto J = critical_interval(RealPolynomial{0, 0, 0, 1});
        CHECK(J.is_point());
    }

    TEST_CASE("critical interval matches a brute-force scan")
    {
        std::mt19937_64 rng(32);
        for (int trial = 0; trial < 60; ++trial) {
            const auto p = trial % 2 ? real_julia_sample(rng, 2 + trial % 3) : test_support::random_poly(rng, 2 + trial % 4, 3.0);
            const auto I = critical_interval(p);
            for (int k = 0; k < 41; ++k) {
                const double t = -10.0 + 0.5 * k;
                const double m = I.margin(t);
                if (std::fabs(m) < 1e-6) continue;
                CHECK(exact_real_rooted(p, t) == (m > 0));
            }
        }
    }

    TEST_CASE("real fixed points")
    {
        auto xs = [](const std::vector<RealRoot>& r) {
            std::vector<double> v;
            for (const auto& x : r) v.push_back(x.x);
            return v;
        };
        CHECK(xs(real_fixed_points(RealPolynomial{-2, 0, 1})) == std::vector<double>{-1.0, 2.0});
        CHECK(real_fixed_points(RealPolynomial{1, 0, 1}).empty());
        const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
        CHECK(test_support::same_sorted(xs(real_fixed_points(RealPolynomial{0, 3, 0, -1}, 2)),
                                        {0, 2, -2, s2, -s2, (1 + s5) / 2, (1 - s5) / 2, (-1 + s5) / 2, (-1 - s5) / 2},
                                        1e-12));
        const auto twice = real_fixed_points(RealPolynomial{0, 2, 0, -1}, 2);
        REQUIRE(twice.size() == 5);
        CHECK(twice[1].multiplicity == 3);
        CHECK_THROWS_AS(real_fixed_points(RealPolynomial{0, 2, 0, -1}, 3), DomainError);
    }

    TEST_CASE("worked cubic examples")
    {
        const auto yes = classify_real_julia(RealPolynomial{0, 3, 0, -1});
        CHECK(yes.julia_real);
        CHECK(yes.branch == Branch::OddNegative);
        CHECK(yes.fixed_point_iterate == 2);
        CHECK(yes.fixed_points.size() == 9);

        const auto no = classify_real_julia(RealPolynomial{0, 2, 0, -1});
        CHECK_FALSE(no.julia_real);
        CHECK_FALSE(no.marginal);
        REQUIRE(no.witness.has_value());
        CHECK(std::fabs(std::fabs(*no.witness) - std::sqrt(3.0)) < 1e-12);
    }

    TEST_CASE("quadratic family X^2 + c")
    {
        const auto c3 = classify_real_julia(RealPolynomial{-3, 0, 1});
        CHECK(c3.julia_real);
        CHECK_FALSE(c3.marginal);
        CHECK(c3.branch == Branch::EvenPositive);
        REQUIRE(c3.test_interval.has_value());
        // a2 = largest fixed point, a1 = -a2
        const double a2 = (1 + std::sqrt(13.0)) / 2;
        CHECK(close(c3.test_interval->second, a2, 1e-12));
        CHECK(close(c3.test_interval->first, -a2, 1e-12));

        const auto c2 = classify_real_julia(RealPolynomial{-2, 0, 1});
        CHECK(c2.julia_real);
        CHECK(c2.marginal);

        CHECK_FALSE(classify_real_julia(RealPolynomial{-1, 0, 1}).julia_real);
        const auto c1 = classify_real_julia(RealPolynomial{1, 0, 1});
        CHECK_FALSE(c1.julia_real);
        CHECK(c1.reason == "no real fixed point");

        // even/negative mirror: -X^2 - c is conjugate to X^2 + c by X -> -X
        CHECK(classify_real_julia(RealPolynomial{3, 0, -1}).julia_real);
        CHECK_FALSE(classify_real_julia(RealPolynomial{1, 0, -1}).julia_real);
        CHECK(classify_real_julia(RealPolynomial{3, 0, -1}).branch == Branch::EvenNegative);
    }

    TEST_CASE("odd positive branch")
    {
        CHECK(classify_real_julia(RealPolynomial{0, -3, 0, 1}).julia_real);
        CHECK(classify_real_julia(RealPolynomial{0, -4, 0, 1}).julia_real);
        CHECK_FALSE(classify_real_julia(RealPolynomial{0, -1, 0, 1}).julia_real);
        CHECK_THROWS_AS(classify_real_julia(RealPolynomial{1, 1}), DomainError);
    }

    TEST_CASE("forward escape")
    {
        CHECK(forward_escape_check(RealPolynomial{-2, 0, 1}, 2.001) == EscapeVerdict::PlusInfinity);
        CHECK(forward_escape_check(RealPolynomial{-2, 0, 1}, 1.9) == EscapeVerdict::Undecided);
        CHECK(forward_escape_check(RealPolynomial{0, 0, 0, 1}, 1.5) == EscapeVerdict::PlusInfinity);
        CHECK(forward_escape_check(RealPolynomial{0, 0, 0, 1}, -1.5) == EscapeVerdict::MinusInfinity);
        CHECK_THROWS_AS(forward_escape_check(RealPolynomial{0, 0, -1}, 1.0), DomainError);

        // anything beyond the largest real fixed point escapes
        std::mt19937_64 rng(33);
        for (int k = 0; k < 100; ++k) {
            auto p = test_support::random_poly(rng, 2 + k % 4, 3.0);
            if (p.lead() < 0) p = -p;
            const auto fp = real_fixed_points(p);
            if (fp.empty()) continue;
            CHECK(forward_escape_check(p, fp.back().x + 1e-3) == EscapeVerdict::PlusInfinity);
        }
    }

    TEST_CASE("property: iterate coherence and interval nesting")
    {
        std::mt19937_64 rng(34);
        int compared = 0, real_verdicts = 0;
        for (int trial = 0; trial < 500; ++trial) {
            const int d = 2 + trial % 3;
            const auto f = mixed_sample(rng, trial, d);
            const auto g = compose(f, f);
            const auto rf = classify_real_julia(f);
            const auto rg = classify_real_julia(g);

            const auto If = critical_interval(f);
            const auto Ig = critical_interval(g);
            double tol = 1e-7;
            if (!If.empty) tol *= std::max({1.0, std::isfinite(If.lo) ? std::fabs(If.lo) : 0.0, std::isfinite(If.hi) ? std::fabs(If.hi) : 0.0});
            CHECK(If.contains(Ig, tol));

            if (rf.marginal || rg.marginal) continue;
            CHECK_MESSAGE(rf.julia_real == rg.julia_real, to_string(f));
            ++compared;
            real_verdicts += rf.julia_real;
        }
        CHECK(compared > 400);
        CHECK(real_verdicts > 100);
    }

    TEST_CASE("property: conjugation invariance")
    {
        std::mt19937_64 rng(35);
        std::uniform_real_distribution<double> u(-2, 2);
        int compared = 0;
        for (int trial = 0; trial < 300; ++trial) {
            const auto f = mixed_sample(rng, trial, 2 + trial % 3);
            double h = u(rng);
            if (std::fabs(h) < 0.3) h = h < 0 ? -0.3 : 0.3;
            const AffineMap phi(h, u(rng));
            const auto g = conjugate(f, phi);
            const auto rf = classify_real_julia(f);
            const auto rg = classify_real_julia(g);
            if (rf.marginal || rg.marginal) continue;
            CHECK(rf.julia_real == rg.julia_real);
            ++compared;

            // interval endpoints move by phi (order reversed for negative scale)
            const auto If = critical_interval(f);
            const auto Ig = critical_interval(g);
            CHECK(If.empty == Ig.empty);
            if (If.empty || !std::isfinite(If.lo) || !std::isfinite(If.hi)) continue;
            const double lo = h > 0 ? phi(If.lo) : phi(If.hi);
            const double hi = h > 0 ? phi(If.hi) : phi(If.lo);
            CHECK(close(Ig.lo, lo, 1e-7));
            CHECK(close(Ig.hi, hi, 1e-7));
        }
        CHECK(compared > 250);
    }

    TEST_CASE("property: fixed points lie in the interval when the verdict is real")
    {
        std::mt19937_64 rng(36);
        for (int trial = 0; trial < 200; ++trial) {
            const auto f = mixed_sample(rng, trial, 3);
            const auto r = classify_real_julia(f);
            if (!r.julia_real) continue;
            for (double x : r.fixed_points) CHECK(r.interval.contains(x, 1e-7 * std::max(1.0, std::fabs(x))));
        }
    }

    TEST_CASE("property: verdict agrees with the backward-orbit oracle")
    {
        std::mt19937_64 rng(37);
        int compared = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const int d = 2 + trial % 2;
            const auto f = mixed_sample(rng, trial, d);
            const auto r = classify_real_julia(f);
            if (r.marginal) continue;
            const double alpha = largest_fixed_point_or_zero(f);
            if (is_totally_ramified(f, alpha)) continue;
            const auto orbit = backward_orbit(f, alpha, d == 2 ? 10 : 7);
            CHECK_MESSAGE(r.julia_real == (max_imag_stat(orbit) <= 1e-6), to_string(f));
            ++compared;
        }
        CHECK(compared > 40);
    }
}
