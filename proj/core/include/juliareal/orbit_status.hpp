#pragma once

#include "juliareal/polynomial.hpp"
#include "juliareal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace juliareal {

/// A point of P^1(Q): a rational, or infinity.
class QPoint {
public:
    QPoint() = default;
    QPoint(Rational value) : value_(std::move(value)) { value_->canonicalize(); }
    static QPoint infinity() { return QPoint(std::nullopt); }

    bool is_infinity() const noexcept { return !value_.has_value(); }
    const Rational& value() const;

    friend bool operator==(const QPoint& a, const QPoint& b) { return a.value_ == b.value_; }
    friend bool operator<(const QPoint& a, const QPoint& b);

private:
    explicit QPoint(std::optional<Rational> v) : value_(std::move(v)) {}
    std::optional<Rational> value_ = Rational(0);
};

std::string to_string(const QPoint& p);

/// Rational map N/D on P^1(Q) with exact coefficients.
struct ExactRationalMap {
    RationalPolynomial numerator;
    RationalPolynomial denominator = RationalPolynomial::constant(Rational(1));

    static ExactRationalMap polynomial(RationalPolynomial p) { return {std::move(p), RationalPolynomial::constant(Rational(1))}; }

    int degree() const { return std::max(numerator.degree(), denominator.degree()); }
    bool is_polynomial() const { return denominator.degree() == 0; }
    QPoint operator()(const QPoint& x) const;
};

enum class OrbitTag { Periodic, Preperiodic, Nonperiodic, Undecided };

enum class NonperiodicReason {
    None,
    Escape,             ///< left the escape radius, so |f^k| grows strictly
    DenominatorGrowth,  ///< monic integer polynomial, denominators grow as q^(d^k)
    ValuationGrowth,    ///< l-adic absolute value grows strictly at some prime l
};

struct OrbitStatus {
    OrbitTag tag = OrbitTag::Undecided;
    int period = 0;  ///< cycle length for periodic / preperiodic
    int tail = 0;    ///< steps before entering the cycle (preperiodic)
    NonperiodicReason reason = NonperiodicReason::None;
    unsigned long prime = 0;  ///< the prime l for ValuationGrowth
    /// Exact orbit alpha, f(alpha), ... as far as it was computed.
    std::vector<QPoint> prefix;

    /// Theorem-level hypothesis: the orbit never returns to alpha.
    bool alpha_nonperiodic() const { return tag == OrbitTag::Nonperiodic || (tag == OrbitTag::Preperiodic && tail >= 1); }
    std::string describe() const;
};

std::string to_string(OrbitTag t);
std::string to_string(NonperiodicReason r);

inline constexpr int kDefaultOrbitSteps = 64;

OrbitStatus orbit_status(const RationalPolynomial& p, const Rational& alpha, int max_steps = kDefaultOrbitSteps);
OrbitStatus orbit_status(const ExactRationalMap& f, const QPoint& alpha, int max_steps = kDefaultOrbitSteps);

}  // namespace juliareal
