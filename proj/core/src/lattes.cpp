#include "juliareal/lattes.hpp"

#include "juliareal/roots.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace juliareal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class T>
Polynomial<T> lattes_numerator(const T& a, const T& b, const T& c)
{
    return Polynomial<T>{T(b * b - T(4) * a * c), T(T(-8) * c), T(T(-2) * b), T(0), T(1)};
}

}  // namespace

double WeierstrassCurve::discriminant() const { return juliareal::discriminant(F()); }

void WeierstrassCurve::require_nonsingular() const
{
    if (discriminant() == 0.0) throw DomainError(fmt::format("singular curve: disc(x^3 + {}x^2 + {}x + {}) = 0", a, b, c));
}

Rational ExactCurve::discriminant() const { return juliareal::discriminant(F()); }

double RationalMap::operator()(double x) const
{
    const double den = evaluate(denominator, x);
    if (den == 0.0) return kInf;
    return evaluate(numerator, x) / den;
}

bool coprime(const RationalMap& f)
{
    const double r = resultant(f.numerator, f.denominator);
    return r != 0.0 && std::isfinite(r);
}

RationalMap duplication_lattes(const WeierstrassCurve& curve)
{
    curve.require_nonsingular();
    RationalMap f{lattes_numerator(curve.a, curve.b, curve.c), curve.F() * 4.0};
    if (!coprime(f)) throw DomainError("duplication_lattes: numerator and denominator share a root");
    return f;
}

ExactRationalMap duplication_lattes(const ExactCurve& curve)
{
    if (curve.discriminant() == 0) throw DomainError("duplication_lattes: singular curve");
    ExactRationalMap f{lattes_numerator(curve.a, curve.b, curve.c), curve.F() * Rational(4)};
    if (resultant(f.numerator, f.denominator) == 0)
        throw DomainError("duplication_lattes: numerator and denominator share a root");
    return f;
}

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& P, double rel_tol)
{
    if (P.infinity) return true;
    const double lhs = P.y * P.y;
    const double rhs = evaluate(curve.F(), P.x);
    const double scale = 1.0 + std::fabs(P.x * P.x * P.x) + std::fabs(curve.a * P.x * P.x) +
                         std::fabs(curve.b * P.x) + std::fabs(curve.c);
    return std::fabs(lhs - rhs) <= rel_tol * scale;
}

CurvePoint double_point(const WeierstrassCurve& curve, const CurvePoint& P)
{
    if (P.infinity || P.y == 0.0) return CurvePoint::at_infinity();
    const double slope = evaluate(derivative(curve.F()), P.x) / (2.0 * P.y);
    const double x2 = slope * slope - curve.a - 2.0 * P.x;
    const double y2 = slope * (P.x - x2) - P.y;
    return {x2, y2, false};
}

double check_commutation(const WeierstrassCurve& curve, double x0)
{
    const RealPolynomial F = curve.F();
    double Fx = evaluate(F, x0);
    if (Fx < 0.0) {
        const double scale = 1.0 + std::fabs(x0 * x0 * x0) + std::fabs(curve.a * x0 * x0) + std::fabs(curve.b * x0) +
                             std::fabs(curve.c);
        if (Fx < -1e-12 * scale) throw DomainError(fmt::format("check_commutation: F({}) < 0, no real point", x0));
        Fx = 0.0;
    }
    const RationalMap f = duplication_lattes(curve);
    const double lhs = f(x0);
    const CurvePoint twice = double_point(curve, {x0, std::sqrt(Fx), false});
    const bool lhs_inf = std::isinf(lhs);
    if (lhs_inf && twice.infinity) return 0.0;
    if (lhs_inf || twice.infinity) return kInf;
    return std::fabs(lhs - twice.x);
}

LattesCriticalPoints lattes_critical_points(const WeierstrassCurve& curve)
{
    const RationalMap f = duplication_lattes(curve);
    const RealPolynomial& N = f.numerator;
    const RealPolynomial& D = f.denominator;
    LattesCriticalPoints out;
    for (const auto& r : real_roots(derivative(N) * D - N * derivative(D))) out.points.push_back(r.x);

    const RealPolynomial F = curve.F();
    const RealPolynomial dF = derivative(F);
    for (const auto& root : distinct_roots(F)) {
        const Complex e = root.value;
        const Complex s = std::sqrt(evaluate(dF, e));
        for (const Complex x : {e - s, e + s})
            if (std::fabs(x.imag()) <= 1e-9 * (1.0 + std::abs(x))) out.torsion_points.push_back(x.real());
    }
    std::sort(out.torsion_points.begin(), out.torsion_points.end());

    if (out.points.size() != out.torsion_points.size())
        throw Error(fmt::format("lattes_critical_points: derivative route finds {} real critical points, torsion route {}",
                                out.points.size(), out.torsion_points.size()));
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        const double gap = std::fabs(out.points[i] - out.torsion_points[i]);
        out.max_mismatch = std::max(out.max_mismatch, gap);
        if (gap > 1e-8 * (1.0 + std::fabs(out.points[i])))
            throw Error(fmt::format("lattes_critical_points: routes disagree at {} vs {}", out.points[i],
                                    out.torsion_points[i]));
    }
    return out;
}

SurjectivityReport real_surjectivity(const WeierstrassCurve& curve)
{
    const RationalMap f = duplication_lattes(curve);
    SurjectivityReport rep;
    rep.discriminant = curve.discriminant();
    for (const auto& r : real_roots(curve.F())) rep.poles.push_back(r.x);
    rep.critical_points = lattes_critical_points(curve).points;
    for (double c : rep.critical_points) rep.critical_values.push_back(f(c));

    struct Breakpoint {
        double x;
        bool pole;
    };
    std::vector<Breakpoint> bps;
    for (double x : rep.poles) bps.push_back({x, true});
    for (double x : rep.critical_points) bps.push_back({x, false});
    std::sort(bps.begin(), bps.end(), [](const Breakpoint& l, const Breakpoint& r) { return l.x < r.x; });

    // f(X) ~ X/4 at both ends of the line.
    auto end_value = [&](std::size_t k, bool from_right) {
        const Breakpoint& b = bps[k];
        if (!b.pole) return f(b.x);
        double room = 1.0 + std::fabs(b.x);
        if (from_right && k + 1 < bps.size()) room = std::min(room, bps[k + 1].x - b.x);
        if (!from_right && k > 0) room = std::min(room, b.x - bps[k - 1].x);
        const double probe = b.x + (from_right ? 1.0 : -1.0) * 1e-6 * room;
        return f(probe) > 0 ? kInf : -kInf;
    };
    for (std::size_t k = 0; k <= bps.size(); ++k) {
        ImagePiece piece;
        piece.x_from = k == 0 ? -kInf : bps[k - 1].x;
        piece.x_to = k == bps.size() ? kInf : bps[k].x;
        const double v_from = k == 0 ? -kInf : end_value(k - 1, true);
        const double v_to = k == bps.size() ? kInf : end_value(k, false);
        // interior sample must sit between the end values (monotone piece)
        double mid;
        if (std::isinf(piece.x_from) && std::isinf(piece.x_to))
            mid = 0.0;
        else if (std::isinf(piece.x_from))
            mid = piece.x_to - 1.0;
        else if (std::isinf(piece.x_to))
            mid = piece.x_from + 1.0;
        else
            mid = 0.5 * (piece.x_from + piece.x_to);
        const double v_mid = f(mid);
        piece.lo = std::min(v_from, v_to);
        piece.hi = std::max(v_from, v_to);
        const double slack = 1e-9 * (1.0 + std::fabs(v_mid));
        if (v_mid < piece.lo - slack || v_mid > piece.hi + slack)
            throw Error(fmt::format("real_surjectivity: f is not monotone on ({}, {})", piece.x_from, piece.x_to));
        rep.pieces.push_back(piece);
    }

    auto merged = rep.pieces;
    std::sort(merged.begin(), merged.end(), [](const ImagePiece& l, const ImagePiece& r) { return l.lo < r.lo; });
    double reach = merged.front().lo;
    std::optional<std::pair<double, double>> widest;
    if (reach > -kInf) widest = std::make_pair(-kInf, reach);
    for (const auto& p : merged) {
        if (p.lo > reach && (!widest || p.lo - reach > widest->second - widest->first)) widest = std::make_pair(reach, p.lo);
        reach = std::max(reach, p.hi);
    }
    if (reach < kInf) widest = std::make_pair(reach, kInf);

    rep.surjective = !(widest && widest->second - widest->first > kGapResolution);
    if (!rep.surjective) {
        rep.gap = widest;
        const double margin = 1e-9 * (1.0 + std::fabs(widest->first) + std::fabs(widest->second));
        auto inside_gap = [&](double v) { return v > widest->first + margin && v < widest->second - margin; };
        constexpr int kSamples = 200000;
        for (int k = 1; k < kSamples; ++k) {
            const double theta = std::numbers::pi * (static_cast<double>(k) / kSamples - 0.5);
            const double v = f(std::tan(theta));
            if (inside_gap(v))
                throw Error(fmt::format("real_surjectivity: sample f({}) = {} lands in the gap", std::tan(theta), v));
        }
        for (double c : rep.critical_points)
            if (inside_gap(f(c))) throw Error("real_surjectivity: a critical value lands in the gap");
    }
    return rep;
}

}  // namespace juliareal
