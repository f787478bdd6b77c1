#include "juliareal/polynomial.hpp"

#include <fmt/format.h>

namespace juliareal {

RealPolynomial conjugate(const RealPolynomial& p, const AffineMap& phi)
{
    const AffineMap inv = phi.inverse();
    RealPolynomial inner = compose(p, inv.as_polynomial());
    return inner * phi.scale() + RealPolynomial::constant(phi.shift());
}

CubicNormalForm cubic_normal_form(const RealPolynomial& p)
{
    if (p.degree() != 3)
        throw DomainError("cubic_normal_form: expected a cubic, got degree " + std::to_string(p.degree()));
    const double c3 = p.coeff(3);
    const double c2 = p.coeff(2);
    // φ∘p∘φ⁻¹ has cubic coefficient c3/h² and quadratic coefficient c2/h - 3 c3 k / h²
    const double h = std::sqrt(std::fabs(c3));
    const double k = h * c2 / (3.0 * c3);
    const AffineMap phi(h, k);
    const RealPolynomial conj = conjugate(p, phi);

    CubicNormalForm out;
    out.sign = c3 > 0 ? 1 : -1;
    out.A = conj.coeff(1);
    out.B = conj.coeff(0);
    out.polynomial = RealPolynomial{out.B, out.A, 0.0, static_cast<double>(out.sign)};
    out.map = phi;
    if (!approx_equal(conj, out.polynomial, 1e-10, 1e-10))
        throw Error("cubic_normal_form: conjugated cubic failed to normalize: " + to_string(conj));
    return out;
}

RealPolynomial to_real(const RationalPolynomial& p)
{
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(q.get_d());
    return RealPolynomial(std::move(c));
}

RationalPolynomial to_rational(const RealPolynomial& p)
{
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (double x : p.coeffs()) c.push_back(exact_rational(x));
    return RationalPolynomial(std::move(c));
}

bool approx_equal(double a, double b, double rel, double abs)
{
    return std::fabs(a - b) <= std::max(rel * std::max(std::fabs(a), std::fabs(b)), abs);
}

bool approx_equal(const RealPolynomial& p, const RealPolynomial& q, double rel, double abs)
{
    const int n = std::max(p.degree(), q.degree());
    for (int i = 0; i <= n; ++i)
        if (!approx_equal(p.coeff(i), q.coeff(i), rel, abs)) return false;
    return true;
}

double fujiwara_bound(std::span<const Complex> coeffs)
{
    const auto d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) return 0.0;
    const double lead = std::abs(coeffs.back());
    double bound = 0.0;
    for (int k = 1; k <= d; ++k) {
        double ratio = std::abs(coeffs[static_cast<std::size_t>(d - k)]) / lead;
        if (k == d) ratio /= 2.0;
        bound = std::max(bound, std::pow(ratio, 1.0 / k));
    }
    return 2.0 * bound;
}

std::string to_string(const RealPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        double c = p.coeff(i);
        if (c == 0.0) continue;
        const bool negative = c < 0;
        double mag = std::fabs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1.0 || i == 0) out += fmt::format("{}", mag);
        if (i >= 1) out += "X";
        if (i >= 2) out += fmt::format("^{}", i);
    }
    return out;
}

}  // namespace juliareal
