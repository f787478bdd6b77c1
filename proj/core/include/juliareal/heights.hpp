#pragma once

#include "juliareal/polynomial.hpp"
#include "juliareal/rational.hpp"

#include <cstddef>

namespace juliareal {

/// log max(|num|, |den|) of a rational in lowest terms; h(0) = 0.
double weil_height(const Rational& q);

inline constexpr std::size_t kDefaultHeightBitCap = std::size_t{1} << 26;

struct HeightEstimate {
    double estimate = 0.0;     ///< h(f^n(x)) / d^n
    double error_bound = 0.0;  ///< |estimate - canonical height| <= error_bound
    int depth = 0;
};

/// Telescoping constant C with |h(f(y)) - d h(y)| <= C for all rational y.
/// For monic integer f this is d log(1 + Σ_{i<d} |c_i|); otherwise +inf.
double height_constant(const RationalPolynomial& p);

/// Exact orbit up to f^n(x) (inclusive). Throws CapacityError once an iterate
/// would exceed `bit_cap` bits in numerator or denominator.
std::vector<Rational> exact_orbit(const RationalPolynomial& p, const Rational& x, int n,
                                  std::size_t bit_cap = kDefaultHeightBitCap);

HeightEstimate canonical_height(const RationalPolynomial& p, const Rational& x, int n,
                                std::size_t bit_cap = kDefaultHeightBitCap);

/// |est(f(x), n-1) - d est(x, n)|, both built on the same terminal iterate.
double functional_equation_residual(const RationalPolynomial& p, const Rational& x, int n,
                                    std::size_t bit_cap = kDefaultHeightBitCap);

}  // namespace juliareal
