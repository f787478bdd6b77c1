#include "juliareal/orbit_status.hpp"

#include <fmt/format.h>

#include <map>

namespace juliareal {

const Rational& QPoint::value() const
{
    if (!value_) throw DomainError("QPoint: the point at infinity has no affine value");
    return *value_;
}

bool operator<(const QPoint& a, const QPoint& b)
{
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    return *a.value_ < *b.value_;
}

std::string to_string(const QPoint& p) { return p.is_infinity() ? "inf" : to_string(p.value()); }

QPoint ExactRationalMap::operator()(const QPoint& x) const
{
    if (x.is_infinity()) {
        if (numerator.degree() > denominator.degree()) return QPoint::infinity();
        if (numerator.degree() < denominator.degree()) return Rational(0);
        return Rational(numerator.lead() / denominator.lead());
    }
    const Rational den = evaluate(denominator, x.value());
    const Rational num = evaluate(numerator, x.value());
    if (den == 0) return QPoint::infinity();
    return Rational(num / den);
}

std::string to_string(OrbitTag t)
{
    switch (t) {
    case OrbitTag::Periodic: return "periodic";
    case OrbitTag::Preperiodic: return "preperiodic";
    case OrbitTag::Nonperiodic: return "nonperiodic";
    case OrbitTag::Undecided: return "undecided";
    }
    return "undecided";
}

std::string to_string(NonperiodicReason r)
{
    switch (r) {
    case NonperiodicReason::None: return "none";
    case NonperiodicReason::Escape: return "escape";
    case NonperiodicReason::DenominatorGrowth: return "denominator-growth";
    case NonperiodicReason::ValuationGrowth: return "valuation-growth";
    }
    return "none";
}

std::string OrbitStatus::describe() const
{
    switch (tag) {
    case OrbitTag::Periodic: return fmt::format("periodic({})", period);
    case OrbitTag::Preperiodic: return fmt::format("preperiodic(tail={}, period={})", tail, period);
    case OrbitTag::Nonperiodic:
        if (reason == NonperiodicReason::ValuationGrowth) return fmt::format("nonperiodic(valuation-growth at {})", prime);
        return fmt::format("nonperiodic({})", to_string(reason));
    case OrbitTag::Undecided: return "undecided";
    }
    return "undecided";
}

namespace {

bool integral(const RationalPolynomial& p)
{
    for (const auto& c : p.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

Rational escape_bound(const RationalPolynomial& p)
{
    Rational sum = 2;
    for (int i = 0; i < p.degree(); ++i) sum += abs(p.coeff(i));
    Rational r = sum / abs(p.lead());
    return r < 1 ? Rational(1) : r;
}

// Both polynomials scaled by one positive integer so all coefficients are integers.
std::pair<RationalPolynomial, RationalPolynomial> clear_denominators(const ExactRationalMap& f)
{
    BigInt l = 1;
    for (const auto* p : {&f.numerator, &f.denominator})
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    const Rational s(l);
    return {f.numerator * s, f.denominator * s};
}

// Let e = -v_l(x) > 0. When the leading terms of N and D dominate l-adically
// and v(N_n) - v(D_m) < (n - m - 1) e, then v_l(f(x)) = -e' with e' > e, and
// the same conditions hold at e'. The orbit then has infinitely many distinct
// values, so it is not preperiodic.
bool valuation_certificate(const RationalPolynomial& N, const RationalPolynomial& D, const Rational& x, unsigned long l)
{
    if (x == 0) return false;
    const int e = -valuation(x, l);
    if (e <= 0) return false;
    const int n = N.degree(), m = D.degree();
    if (n <= m) return false;
    auto dominates = [&](const RationalPolynomial& P) {
        const int top = P.degree();
        const int lead_val = valuation(P.lead(), l) - top * e;
        for (int i = 0; i < top; ++i) {
            if (P.coeff(i) == 0) continue;
            if (lead_val >= valuation(P.coeff(i), l) - i * e) return false;
        }
        return true;
    };
    if (!dominates(N) || !dominates(D)) return false;
    return valuation(N.lead(), l) - valuation(D.lead(), l) < (n - m - 1) * e;
}

constexpr unsigned long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                          79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                                          163, 167, 173, 179, 181, 191, 193, 197, 199};

}  // namespace

OrbitStatus orbit_status(const RationalPolynomial& p, const Rational& alpha, int max_steps)
{
    return orbit_status(ExactRationalMap::polynomial(p), QPoint(alpha), max_steps);
}

OrbitStatus orbit_status(const ExactRationalMap& f, const QPoint& alpha, int max_steps)
{
    if (f.degree() < 2) throw DomainError("orbit_status: map degree must be at least 2");
    if (f.denominator.is_zero()) throw DomainError("orbit_status: zero denominator");

    const bool poly = f.is_polynomial();
    const RationalPolynomial as_poly = poly ? f.numerator * Rational(1 / f.denominator.lead()) : RationalPolynomial{};
    const bool monic_integral = poly && as_poly.lead() == 1 && integral(as_poly);
    const auto [N, D] = clear_denominators(f);
    const std::optional<Rational> radius = poly ? std::optional<Rational>(escape_bound(as_poly)) : std::nullopt;

    OrbitStatus st;
    std::map<QPoint, int> seen;
    QPoint x = alpha;
    for (int k = 0; k <= max_steps; ++k) {
        st.prefix.push_back(x);
        if (auto it = seen.find(x); it != seen.end()) {
            st.prefix.pop_back();
            st.period = k - it->second;
            st.tail = it->second;
            st.tag = st.tail == 0 ? OrbitTag::Periodic : OrbitTag::Preperiodic;
            return st;
        }
        seen.emplace(x, k);

        if (!x.is_infinity()) {
            const Rational& v = x.value();
            if (radius && abs(v) > *radius) {
                st.tag = OrbitTag::Nonperiodic;
                st.reason = NonperiodicReason::Escape;
                return st;
            }
            if (v.get_den() != 1) {
                if (monic_integral) {
                    st.tag = OrbitTag::Nonperiodic;
                    st.reason = NonperiodicReason::DenominatorGrowth;
                    // two more iterates as a visible check of the growth
                    for (int extra = 0; extra < 2 && bit_length(st.prefix.back().value().get_den()) < 4096; ++extra)
                        st.prefix.push_back(f(st.prefix.back()));
                    return st;
                }
                for (unsigned long l : kSmallPrimes) {
                    if (mpz_divisible_ui_p(v.get_den_mpz_t(), l) == 0) continue;
                    if (valuation_certificate(N, D, v, l)) {
                        st.tag = OrbitTag::Nonperiodic;
                        st.reason = NonperiodicReason::ValuationGrowth;
                        st.prime = l;
                        return st;
                    }
                }
            }
        }
        if (k < max_steps) x = f(x);
    }
    st.tag = OrbitTag::Undecided;
    return st;
}

}  // namespace juliareal
