#pragma once

#include "juliareal/orbit_status.hpp"
#include "juliareal/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace juliareal {

/// y^2 = F(x) = x^3 + a x^2 + b x + c over the reals.
struct WeierstrassCurve {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    RealPolynomial F() const { return RealPolynomial{c, b, a, 1.0}; }
    double discriminant() const;
    /// Throws DomainError for a singular curve (disc(F) == 0).
    void require_nonsingular() const;
};

/// The same curve with exact rational coefficients.
struct ExactCurve {
    Rational a = 0;
    Rational b = 0;
    Rational c = 0;

    RationalPolynomial F() const { return RationalPolynomial{c, b, a, Rational(1)}; }
    Rational discriminant() const;
    WeierstrassCurve approx() const { return {a.get_d(), b.get_d(), c.get_d()}; }
};

/// N/D with real coefficients; the value at a pole is +inf (the point at
/// infinity of P^1).
struct RationalMap {
    RealPolynomial numerator;
    RealPolynomial denominator;

    int degree() const { return std::max(numerator.degree(), denominator.degree()); }
    double operator()(double x) const;
};

/// Resultant of numerator and denominator is nonzero.
bool coprime(const RationalMap& f);

/// x-coordinate map of doubling: (X^4 - 2bX^2 - 8cX + b^2 - 4ac) / (4F(X)).
RationalMap duplication_lattes(const WeierstrassCurve& curve);
ExactRationalMap duplication_lattes(const ExactCurve& curve);

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
    bool infinity = false;

    static CurvePoint at_infinity() { return {0.0, 0.0, true}; }
};

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& P, double rel_tol = 1e-9);

/// 2P by the tangent construction; points with y = 0 double to infinity.
CurvePoint double_point(const WeierstrassCurve& curve, const CurvePoint& P);

/// |f(x0) - x(2P)| for P = (x0, sqrt(F(x0))). Both sides at infinity give 0,
/// exactly one side at infinity gives +inf. Needs F(x0) >= 0.
double check_commutation(const WeierstrassCurve& curve, double x0);

struct LattesCriticalPoints {
    /// Real roots of N'D - ND', sorted.
    std::vector<double> points;
    /// Real x(Q) with 2Q a nonzero 2-torsion point: e +- sqrt(F'(e)), F(e) = 0.
    std::vector<double> torsion_points;
    double max_mismatch = 0.0;
};

/// Both routes, required to agree within 1e-8 (relative); throws Error otherwise.
LattesCriticalPoints lattes_critical_points(const WeierstrassCurve& curve);

/// Image of one monotone piece of f between consecutive breakpoints.
struct ImagePiece {
    double x_from = 0.0;
    double x_to = 0.0;
    double lo = 0.0;  ///< may be -inf
    double hi = 0.0;  ///< may be +inf
};

struct SurjectivityReport {
    bool surjective = false;
    double discriminant = 0.0;
    std::vector<double> poles;
    std::vector<double> critical_points;
    std::vector<double> critical_values;
    std::vector<ImagePiece> pieces;
    /// Open interval of real values that f never takes.
    std::optional<std::pair<double, double>> gap;
};

inline constexpr double kGapResolution = 1e-3;

/// Real surjectivity of the duplication map on P^1(R) by a union of the
/// images of its monotone pieces, confirmed on a tan-spaced sample.
SurjectivityReport real_surjectivity(const WeierstrassCurve& curve);

}  // namespace juliareal
