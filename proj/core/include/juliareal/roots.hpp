#pragma once

#include "juliareal/error.hpp"
#include "juliareal/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace juliareal {

/// Raised when simultaneous iteration fails to converge; carries the last iterate.
class RootFindingError : public Error {
public:
    RootFindingError(const std::string& what, std::vector<Complex> best)
        : Error(what), best_(std::move(best))
    {
    }
    const std::vector<Complex>& best_iterate() const noexcept { return best_; }

private:
    std::vector<Complex> best_;
};

/// Default realness tolerance, relative: |Im z| <= tol * (1 + |z|).
inline constexpr double kRealnessTol = 1e-9;
/// Float-domain cluster radius, relative, for complex-coefficient input.
inline constexpr double kClusterRadius = 1e-6;

struct Root {
    Complex value;
    int multiplicity = 1;
    bool real = false;
    /// Within 10x of a decision boundary: a nonreal root with tiny imaginary
    /// part, a repeated real root, or two real roots nearly touching.
    bool marginal = false;
    /// Float-domain only: this entry is a merged cluster of nearby iterates.
    bool clustered = false;
};

struct RealRoot {
    double x = 0.0;
    int multiplicity = 1;
    bool marginal = false;
};

/// Distinct roots of a real polynomial with exact multiplicities.
///
/// The double coefficients are taken as the exact dyadic rationals they
/// represent, split by square-free decomposition, and each square-free factor
/// is solved by Aberth iteration. Realness of every root is decided with
/// inclusion disks, falling back to an exact Sturm count when disks are
/// inconclusive, so real roots carry an imaginary part of exactly 0 and
/// nonreal roots come in exact conjugate pairs.
std::vector<Root> distinct_roots(const RealPolynomial& p);

/// Roots with multiplicity (exactly degree(p) entries).
std::vector<Complex> complex_roots(const RealPolynomial& p);

/// Roots of a complex-coefficient polynomial (ascending order). Iterates
/// closer than kClusterRadius (relative) are merged to their centroid and
/// reported with the cluster size as multiplicity.
std::vector<Root> root_clusters(std::span<const Complex> coeffs);
std::vector<Complex> complex_roots(std::span<const Complex> coeffs);

/// Sorted real roots, each listed once with its multiplicity.
std::vector<RealRoot> real_roots(const RealPolynomial& p);

/// True iff every root z has |Im z| <= tol (1 + |z|).
bool all_roots_real(const RealPolynomial& p, double tol = kRealnessTol);

/// Exact: true iff the degree equals the number of real roots counted with
/// multiplicity.
bool all_roots_real(const RationalPolynomial& p);

/// Yun's algorithm: p = c · Π a_i^i with each a_i monic, square-free and
/// pairwise coprime. Factors equal to 1 are omitted.
std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p);

/// Sturm chain p, p', -rem(...), ... (each term scaled by a positive constant).
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Number of distinct real roots in [lo, hi]; an empty optional means an
/// infinite endpoint.
int real_root_count(const RationalPolynomial& p, const std::optional<Rational>& lo,
                    const std::optional<Rational>& hi);

/// Number of distinct real roots on the whole line.
int real_root_count(const RationalPolynomial& p);

/// Number of real roots counted with multiplicity.
int real_root_count_with_multiplicity(const RationalPolynomial& p);

}  // namespace juliareal
