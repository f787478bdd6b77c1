#pragma once

#include "juliareal/polynomial.hpp"
#include "juliareal/roots.hpp"

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace juliareal {

/// Closed real interval with possibly infinite ends, or the empty set.
struct CriticalInterval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool empty = false;

    static CriticalInterval empty_set()
    {
        CriticalInterval out;
        out.empty = true;
        return out;
    }

    bool is_point() const noexcept { return !empty && lo == hi; }

    /// Signed distance of x from the outside: positive inside, negative
    /// outside, -inf for the empty set.
    double margin(double x) const noexcept
    {
        if (empty) return -std::numeric_limits<double>::infinity();
        return std::min(x - lo, hi - x);
    }

    bool contains(double x, double tol = 0.0) const noexcept { return margin(x) >= -tol; }
    bool contains(const CriticalInterval& inner, double tol = 0.0) const noexcept;
};

/// I(p): the closure of the set of real t for which p - t has deg p real roots
/// counted with multiplicity.
///
/// Computed from the critical values (max over local minima, min over local
/// maxima), then cross-checked with exact Sturm counts at 64 interior samples
/// and just inside / just outside each finite end. Throws Error when the two
/// disagree.
CriticalInterval critical_interval(const RealPolynomial& p);

/// Real roots of p^n(X) - X for n in {1, 2}, each listed once.
std::vector<RealRoot> real_fixed_points(const RealPolynomial& p, int of_iterate = 1);

enum class Branch { OddPositive, OddNegative, EvenPositive, EvenNegative };

std::string_view to_string(Branch b);

/// Endpoint tolerance for containment tests: 1e-8 * max(1, |x|).
inline constexpr double kBoundaryTol = 1e-8;

struct ClassificationReport {
    bool julia_real = false;
    Branch branch = Branch::OddPositive;
    int degree = 0;
    /// Real fixed points of p (or of p∘p on the odd/negative branch).
    std::vector<double> fixed_points;
    int fixed_point_iterate = 1;
    /// I(p), or I(p∘p) on the odd/negative branch.
    CriticalInterval interval;
    /// [a1, a2] on the even branches.
    std::optional<std::pair<double, double>> test_interval;
    /// A point that falls outside the interval when julia_real is false.
    std::optional<double> witness;
    bool marginal = false;
    std::string reason;
};

/// Decides whether the Julia set of a real polynomial lies in the real line.
ClassificationReport classify_real_julia(const RealPolynomial& p);

enum class EscapeVerdict { PlusInfinity, MinusInfinity, Undecided };

std::string_view to_string(EscapeVerdict v);

/// Iterates x under p until it leaves the escape disk. Needs a positive
/// leading coefficient.
EscapeVerdict forward_escape_check(const RealPolynomial& p, double x, int max_iter = 10000);

}  // namespace juliareal
