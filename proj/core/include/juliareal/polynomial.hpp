#pragma once

#include "juliareal/error.hpp"
#include "juliareal/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace juliareal {

using Complex = std::complex<double>;

/// Dense univariate polynomial with coefficients in ascending power order.
///
/// Trailing zero coefficients are trimmed on construction, so the last stored
/// coefficient is always the (nonzero) leading one. The zero polynomial has no
/// coefficients and degree -1.
template <class T>
class Polynomial {
public:
    using value_type = T;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    static Polynomial monomial(T c, int power)
    {
        std::vector<T> v(static_cast<std::size_t>(power) + 1, T(0));
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    static Polynomial identity() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const T> coeffs() const noexcept { return coeffs_; }

    T coeff(int i) const
    {
        if (i < 0 || i > degree()) return T(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const T& lead() const
    {
        if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Polynomial& operator+=(const Polynomial& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const T& s)
    {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator-(Polynomial a)
    {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using RealPolynomial = Polynomial<double>;
using RationalPolynomial = Polynomial<Rational>;

/// Horner evaluation; U may be T itself, a wider scalar, or std::complex.
template <class T, class U>
U evaluate(const Polynomial<T>& p, const U& z)
{
    auto c = p.coeffs();
    U acc(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * z;
        acc = acc + U(c[i]);
    }
    return acc;
}

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p)
{
    auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<T> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * T(static_cast<long>(i));
    return Polynomial<T>(std::move(out));
}

/// outer(inner(X)), Horner on polynomials.
template <class T>
Polynomial<T> compose(const Polynomial<T>& outer, const Polynomial<T>& inner)
{
    auto c = outer.coeffs();
    Polynomial<T> acc;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * inner + Polynomial<T>::constant(c[i]);
    return acc;
}

inline constexpr std::size_t kDefaultCoefficientCap = 1'000'000;

/// n-fold self composition f∘…∘f. Refuses results with more than `cap` coefficients.
template <class T>
Polynomial<T> iterate(const Polynomial<T>& p, int n, std::size_t cap = kDefaultCoefficientCap)
{
    if (n < 1) throw DomainError("iterate: n must be at least 1");
    const int d = p.degree();
    if (d >= 2) {
        double predicted = std::pow(static_cast<double>(d), n) + 1.0;
        if (predicted > static_cast<double>(cap))
            throw CapacityError("iterate: degree " + std::to_string(d) + "^" + std::to_string(n) +
                                " exceeds the coefficient cap of " + std::to_string(cap));
    }
    Polynomial<T> acc = p;
    for (int k = 1; k < n; ++k) acc = compose(p, acc);
    return acc;
}

/// Quotient and remainder of a / b over a field.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<T> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial<T>{}, a};
    std::vector<T> quo(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
    const T& lb = b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        T q = rem[static_cast<std::size_t>(k + db)] / lb;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

template <class T>
Polynomial<T> make_monic(const Polynomial<T>& p)
{
    if (p.is_zero()) return p;
    T inv = T(1) / p.lead();
    return p * inv;
}

/// Monic gcd over a field (exact coefficient types only).
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

/// Determinant of the Sylvester matrix of a and b.
template <class T>
T resultant(const Polynomial<T>& a, const Polynomial<T>& b)
{
    if (a.is_zero() || b.is_zero()) return T(0);
    const int m = a.degree();
    const int n = b.degree();
    const int size = m + n;
    if (size == 0) return T(1);
    std::vector<std::vector<T>> mat(static_cast<std::size_t>(size), std::vector<T>(static_cast<std::size_t>(size), T(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = b.coeff(n - j);

    T det(1);
    for (int col = 0; col < size; ++col) {
        auto c = static_cast<std::size_t>(col);
        std::size_t pivot = c;
        if constexpr (std::is_floating_point_v<T>) {
            for (std::size_t r = c + 1; r < mat.size(); ++r)
                if (std::fabs(mat[r][c]) > std::fabs(mat[pivot][c])) pivot = r;
        } else {
            while (pivot < mat.size() && mat[pivot][c] == 0) ++pivot;
            if (pivot == mat.size()) return T(0);
        }
        if (mat[pivot][c] == 0) return T(0);
        if (pivot != c) {
            std::swap(mat[pivot], mat[c]);
            det = -det;
        }
        det *= mat[c][c];
        for (std::size_t r = c + 1; r < mat.size(); ++r) {
            if (mat[r][c] == 0) continue;
            T factor = mat[r][c] / mat[c][c];
            for (std::size_t k = c; k < mat.size(); ++k) mat[r][k] -= factor * mat[c][k];
        }
    }
    return det;
}

/// Discriminant of a quadratic or cubic. Sign convention: positive iff all
/// roots are real and distinct.
template <class T>
T discriminant(const Polynomial<T>& p)
{
    if (p.degree() == 2) {
        const T a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        return T(b * b - T(4) * a * c);
    }
    if (p.degree() == 3) {
        const T a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
        return T(T(18) * a * b * c * d - T(4) * b * b * b * d + b * b * c * c - T(4) * a * c * c * c -
                 T(27) * a * a * d * d);
    }
    throw DomainError("discriminant: only degree 2 and 3 are supported, got degree " + std::to_string(p.degree()));
}

/// Affine change of coordinates x -> scale * x + shift.
class AffineMap {
public:
    AffineMap() = default;
    AffineMap(double scale, double shift) : scale_(scale), shift_(shift)
    {
        if (scale == 0.0 || !std::isfinite(scale) || !std::isfinite(shift))
            throw DomainError("affine map needs a finite nonzero scale");
    }

    static AffineMap identity() { return {}; }

    double scale() const noexcept { return scale_; }
    double shift() const noexcept { return shift_; }

    double operator()(double x) const noexcept { return scale_ * x + shift_; }
    AffineMap inverse() const { return {1.0 / scale_, -shift_ / scale_}; }
    RealPolynomial as_polynomial() const { return RealPolynomial{shift_, scale_}; }

    /// (*this) ∘ inner
    AffineMap after(const AffineMap& inner) const { return {scale_ * inner.scale_, scale_ * inner.shift_ + shift_}; }

private:
    double scale_ = 1.0;
    double shift_ = 0.0;
};

/// φ ∘ p ∘ φ⁻¹.
RealPolynomial conjugate(const RealPolynomial& p, const AffineMap& phi);

struct CubicNormalForm {
    RealPolynomial polynomial;  ///< ±X³ + A X + B
    AffineMap map;              ///< conjugate(input, map) == polynomial
    double A = 0.0;
    double B = 0.0;
    int sign = 1;
};

/// Conjugates a real cubic to ±X³ + AX + B with an affine map hX + k.
CubicNormalForm cubic_normal_form(const RealPolynomial& p);

RealPolynomial to_real(const RationalPolynomial& p);
RationalPolynomial to_rational(const RealPolynomial& p);

/// Shared coefficient comparison rule: |a-b| <= max(rel * max(|a|,|b|), abs).
inline constexpr double kCoeffRelTol = 1e-9;
inline constexpr double kCoeffAbsTol = 1e-12;

bool approx_equal(double a, double b, double rel = kCoeffRelTol, double abs = kCoeffAbsTol);
bool approx_equal(const RealPolynomial& p, const RealPolynomial& q, double rel = kCoeffRelTol,
                  double abs = kCoeffAbsTol);

/// Fujiwara's bound: every root z satisfies |z| <= the returned value.
double fujiwara_bound(std::span<const Complex> coeffs);

std::string to_string(const RealPolynomial& p);

}  // namespace juliareal
