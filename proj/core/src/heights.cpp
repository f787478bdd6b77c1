#include "juliareal/heights.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>

namespace juliareal {

double weil_height(const Rational& x)
{
    Rational q = x;
    q.canonicalize();
    if (q == 0) return 0.0;
    const BigInt num = abs(q.get_num());
    const BigInt& den = q.get_den();
    return log_abs(num > den ? num : den);
}

double height_constant(const RationalPolynomial& p)
{
    const int d = p.degree();
    if (d < 2) throw DomainError("height_constant: degree must be at least 2");
    if (p.lead() != 1) return std::numeric_limits<double>::infinity();
    Rational sum = 0;
    for (int i = 0; i < d; ++i) {
        if (p.coeff(i).get_den() != 1) return std::numeric_limits<double>::infinity();
        sum += abs(p.coeff(i));
    }
    return d * std::log1p(sum.get_d());
}

std::vector<Rational> exact_orbit(const RationalPolynomial& p, const Rational& x, int n, std::size_t bit_cap)
{
    const int d = p.degree();
    if (d < 2) throw DomainError("exact_orbit: degree must be at least 2");
    if (n < 0) throw DomainError("exact_orbit: depth must be nonnegative");
    std::size_t coeff_bits = 0;
    for (const auto& c : p.coeffs())
        coeff_bits = std::max({coeff_bits, bit_length(c.get_num()), bit_length(c.get_den())});

    std::vector<Rational> orbit{x};
    orbit.front().canonicalize();
    orbit.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) {
        const Rational& y = orbit.back();
        const std::size_t bits = std::max(bit_length(y.get_num()), bit_length(y.get_den()));
        const std::size_t predicted = static_cast<std::size_t>(d) * (bits + coeff_bits + 1);
        if (predicted > bit_cap)
            throw CapacityError(fmt::format("exact orbit step {} would need about {} bits (cap {}); use a smaller depth",
                                            k + 1, predicted, bit_cap));
        orbit.push_back(evaluate(p, y));
    }
    return orbit;
}

HeightEstimate canonical_height(const RationalPolynomial& p, const Rational& x, int n, std::size_t bit_cap)
{
    if (n < 0) throw DomainError("canonical_height: depth must be nonnegative");
    const auto orbit = exact_orbit(p, x, n, bit_cap);
    const double dn = std::pow(static_cast<double>(p.degree()), n);
    HeightEstimate h;
    h.depth = n;
    h.estimate = weil_height(orbit.back()) / dn;
    h.error_bound = height_constant(p) / dn;
    return h;
}

double functional_equation_residual(const RationalPolynomial& p, const Rational& x, int n, std::size_t bit_cap)
{
    if (n < 1) throw DomainError("functional_equation_residual: depth must be at least 1");
    const Rational fx = evaluate(p, x);
    const double shifted = canonical_height(p, fx, n - 1, bit_cap).estimate;
    const double scaled = p.degree() * canonical_height(p, x, n, bit_cap).estimate;
    return std::fabs(shifted - scaled);
}

}  // namespace juliareal
