#include "juliareal/classifier.hpp"

#include "juliareal/orbit.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace juliareal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kIntervalSamples = 64;

struct CriticalData {
    bool all_real = false;
    double lo = -kInf;
    double hi = kInf;
    std::vector<double> values;
};

CriticalData critical_data(const RealPolynomial& p)
{
    CriticalData out;
    const auto crit = real_roots(derivative(p));
    int total = 0;
    for (const auto& c : crit) {
        total += c.multiplicity;
        out.values.push_back(evaluate(p, c.x));
    }
    out.all_real = total == p.degree() - 1;
    if (!out.all_real) return out;

    // Sign of p' just right of the current critical point, walking leftwards.
    int sign = p.lead() > 0 ? 1 : -1;
    for (std::size_t k = crit.size(); k-- > 0;) {
        const double v = out.values[k];
        if (crit[k].multiplicity >= 2) {
            out.lo = std::max(out.lo, v);
            out.hi = std::min(out.hi, v);
        } else if (sign > 0) {
            out.lo = std::max(out.lo, v);
        } else {
            out.hi = std::min(out.hi, v);
        }
        if (crit[k].multiplicity % 2 == 1) sign = -sign;
    }
    return out;
}

class ShiftOracle {
public:
    explicit ShiftOracle(const RealPolynomial& p) : q_(to_rational(p)) {}

    bool real_rooted(double t) const
    {
        return all_roots_real(q_ - RationalPolynomial::constant(exact_rational(t)));
    }

private:
    RationalPolynomial q_;
};

[[noreturn]] void disagreement(const RealPolynomial& p, double t, bool expected)
{
    throw Error(fmt::format("critical interval cross-check failed for {}: at t = {} the exact count says p - t is{} "
                            "real-rooted",
                            to_string(p), t, expected ? " not" : ""));
}

void cross_check(const RealPolynomial& p, const CriticalData& data, const CriticalInterval& I)
{
    const ShiftOracle oracle(p);
    auto expect = [&](double t, bool expected) {
        if (oracle.real_rooted(t) != expected) disagreement(p, t, expected);
    };

    if (I.empty) {
        double m = evaluate(p, 0.0), M = m;
        if (!data.values.empty()) {
            m = *std::min_element(data.values.begin(), data.values.end());
            M = *std::max_element(data.values.begin(), data.values.end());
        }
        const double pad = std::max(1.0, M - m);
        for (int k = 0; k < kIntervalSamples; ++k) {
            const double t = (m - pad) + (M - m + 2.0 * pad) * (k + 0.5) / kIntervalSamples;
            expect(t, false);
        }
        return;
    }

    double scale = 1.0;
    if (std::isfinite(I.lo)) scale = std::max(scale, std::fabs(I.lo));
    if (std::isfinite(I.hi)) scale = std::max(scale, std::fabs(I.hi));
    const double delta = 1e-7 * scale;

    if (std::isfinite(I.lo)) expect(I.lo - delta, false);
    if (std::isfinite(I.hi)) expect(I.hi + delta, false);

    const double span = std::isfinite(I.lo) && std::isfinite(I.hi) ? I.hi - I.lo : kInf;
    if (span <= 2.0 * delta) return;

    const double width = std::max(scale, std::isfinite(span) ? span : 0.0);
    const double a = std::isfinite(I.lo) ? I.lo : I.hi - width;
    const double b = std::isfinite(I.hi) ? I.hi : I.lo + width;
    if (std::isfinite(I.lo)) expect(I.lo + delta, true);
    if (std::isfinite(I.hi)) expect(I.hi - delta, true);
    for (int k = 0; k < kIntervalSamples; ++k) expect(a + (b - a) * (k + 0.5) / kIntervalSamples, true);
}

double tol_at(double x) { return kBoundaryTol * std::max(1.0, std::fabs(x)); }

struct Check {
    double point;
    bool weak;  // the root itself sits near a realness boundary
};

// Containment of the check points in I, with the boundary rules.
void decide(ClassificationReport& r, const std::vector<Check>& checks)
{
    bool all_inside = true;
    bool near_edge = false;
    bool violators_all_soft = true;
    for (const auto& c : checks) {
        const double m = r.interval.margin(c.point);
        const double tol = tol_at(c.point);
        if (std::fabs(m) <= 10.0 * tol || c.weak) near_edge = true;
        if (m < -tol) {
            if (all_inside) r.witness = c.point;
            all_inside = false;
            if (!(m >= -10.0 * tol || c.weak)) violators_all_soft = false;
        }
    }
    r.julia_real = all_inside;
    r.marginal = all_inside ? near_edge : violators_all_soft;
}

std::vector<Check> as_checks(const std::vector<RealRoot>& roots)
{
    std::vector<Check> out;
    for (const auto& r : roots) out.push_back({r.x, r.marginal});
    return out;
}

std::vector<RealRoot> real_subset(const std::vector<Root>& roots)
{
    std::vector<RealRoot> out;
    for (const auto& r : roots)
        if (r.real) out.push_back({r.value.real(), r.multiplicity, r.marginal});
    std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.x < b.x; });
    return out;
}

bool any_marginal(const std::vector<Root>& roots)
{
    return std::any_of(roots.begin(), roots.end(), [](const Root& r) { return r.marginal; });
}

}  // namespace

bool CriticalInterval::contains(const CriticalInterval& inner, double tol) const noexcept
{
    if (inner.empty) return true;
    if (empty) return false;
    return inner.lo >= lo - tol && inner.hi <= hi + tol;
}

CriticalInterval critical_interval(const RealPolynomial& p)
{
    if (p.degree() < 2) throw DomainError("critical_interval: degree must be at least 2");
    const CriticalData data = critical_data(p);
    CriticalInterval out;
    if (!data.all_real) {
        out = CriticalInterval::empty_set();
    } else if (data.lo <= data.hi) {
        out.lo = data.lo;
        out.hi = data.hi;
    } else if (data.lo - data.hi <= 1e-9 * std::max({1.0, std::fabs(data.lo), std::fabs(data.hi)})) {
        out.lo = out.hi = 0.5 * (data.lo + data.hi);
    } else {
        out = CriticalInterval::empty_set();
    }
    cross_check(p, data, out);
    return out;
}

std::vector<RealRoot> real_fixed_points(const RealPolynomial& p, int of_iterate)
{
    if (p.degree() < 2) throw DomainError("real_fixed_points: degree must be at least 2");
    if (of_iterate != 1 && of_iterate != 2) throw DomainError("real_fixed_points: iterate must be 1 or 2");
    const RealPolynomial g = of_iterate == 1 ? p : compose(p, p);
    return real_roots(g - RealPolynomial::identity());
}

std::string_view to_string(Branch b)
{
    switch (b) {
    case Branch::OddPositive: return "odd-positive";
    case Branch::OddNegative: return "odd-negative";
    case Branch::EvenPositive: return "even-positive";
    case Branch::EvenNegative: return "even-negative";
    }
    return "unknown";
}

ClassificationReport classify_real_julia(const RealPolynomial& p)
{
    const int d = p.degree();
    if (d < 2) throw DomainError("classify_real_julia: degree must be at least 2");
    const bool odd = d % 2 == 1;
    const bool positive = p.lead() > 0;

    ClassificationReport r;
    r.degree = d;
    r.branch = odd ? (positive ? Branch::OddPositive : Branch::OddNegative)
                   : (positive ? Branch::EvenPositive : Branch::EvenNegative);

    if (odd) {
        r.fixed_point_iterate = positive ? 1 : 2;
        const RealPolynomial g = positive ? p : compose(p, p);
        const auto fixed_all = distinct_roots(g - RealPolynomial::identity());
        const auto fixed = real_subset(fixed_all);
        for (const auto& f : fixed) r.fixed_points.push_back(f.x);
        r.interval = critical_interval(g);
        decide(r, as_checks(fixed));
        if (r.julia_real && any_marginal(fixed_all)) r.marginal = true;
        r.reason = r.julia_real ? "every real fixed point lies in the critical interval"
                                : "a real fixed point lies outside the critical interval";
        if (r.fixed_point_iterate == 2) r.reason = fmt::format("{} (of the second iterate)", r.reason);
        return r;
    }

    const auto fixed_all = distinct_roots(p - RealPolynomial::identity());
    const auto fixed = real_subset(fixed_all);
    for (const auto& f : fixed) r.fixed_points.push_back(f.x);
    r.interval = critical_interval(p);
    if (fixed.empty()) {
        r.julia_real = false;
        r.marginal = any_marginal(fixed_all);
        r.reason = "no real fixed point";
        return r;
    }

    const RealRoot anchor = positive ? fixed.back() : fixed.front();
    const auto preimages = real_roots(p - RealPolynomial::constant(anchor.x));
    RealRoot other = anchor;
    if (!preimages.empty()) other = positive ? preimages.front() : preimages.back();
    const RealRoot a1 = positive ? other : anchor;
    const RealRoot a2 = positive ? anchor : other;
    r.test_interval = std::make_pair(a1.x, a2.x);
    decide(r, {{a1.x, a1.marginal}, {a2.x, a2.marginal}});
    if (r.julia_real && any_marginal(fixed_all)) r.marginal = true;
    r.reason = r.julia_real ? "[a1, a2] lies in the critical interval" : "[a1, a2] leaves the critical interval";
    return r;
}

std::string_view to_string(EscapeVerdict v)
{
    switch (v) {
    case EscapeVerdict::PlusInfinity: return "+inf";
    case EscapeVerdict::MinusInfinity: return "-inf";
    case EscapeVerdict::Undecided: return "undecided";
    }
    return "undecided";
}

EscapeVerdict forward_escape_check(const RealPolynomial& p, double x, int max_iter)
{
    if (p.degree() < 2) throw DomainError("forward_escape_check: degree must be at least 2");
    if (p.lead() <= 0) throw DomainError("forward_escape_check: needs a positive leading coefficient");
    const double R = escape_radius(p);
    for (int k = 0; k <= max_iter; ++k) {
        if (std::fabs(x) > R) return x > 0 ? EscapeVerdict::PlusInfinity : EscapeVerdict::MinusInfinity;
        x = evaluate(p, x);
    }
    return EscapeVerdict::Undecided;
}

}  // namespace juliareal
