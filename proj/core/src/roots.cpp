#include "juliareal/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace juliareal {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 1000;

struct HornerValue {
    Complex value;
    Complex slope;
    double magnitude;  // Σ |a_k| |z|^k, scale for the rounding bound
};

HornerValue horner(std::span<const Complex> a, Complex z)
{
    Complex p = a.back();
    Complex dp = 0.0;
    double s = std::abs(a.back());
    const double az = std::abs(z);
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[i];
        s = s * az + std::abs(a[i]);
    }
    return {p, dp, s};
}

double rounding_bound(double magnitude, std::size_t degree)
{
    return 4.0 * static_cast<double>(degree + 1) * kEps * magnitude;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct AberthResult {
    std::vector<Complex> roots;
    std::vector<double> radii;  // inclusion radii
};

// Simultaneous Aberth–Ehrlich iteration (Gauss–Seidel sweep) followed by a
// Newton polish. Requires a.front() != 0 and a.back() != 0.
AberthResult aberth(std::span<const Complex> a)
{
    const std::size_t d = a.size() - 1;
    std::vector<Complex> z(d);
    if (d == 1) {
        z[0] = -a[0] / a[1];
        return {z, {0.0}};
    }

    const double radius = fujiwara_bound(a);
    for (std::size_t k = 0; k < d; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
        const double wobble = 1.0 + 0.01 * std::sin(3.7 * static_cast<double>(k) + 1.0);
        z[k] = std::polar(radius * wobble, angle);
    }

    std::vector<bool> done(d, false);
    bool converged = false;
    for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
        converged = true;
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i]) continue;
            const auto hv = horner(a, z[i]);
            if (std::abs(hv.value) <= rounding_bound(hv.magnitude, d)) {
                done[i] = true;
                continue;
            }
            converged = false;
            if (hv.slope == 0.0) {
                z[i] *= Complex(1.0 + 1e-7, 1e-7);
                continue;
            }
            const Complex ratio = hv.value / hv.slope;
            Complex sum = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (diff == 0.0) diff = Complex(kEps, kEps) * (1.0 + std::abs(z[i]));
                sum += 1.0 / diff;
            }
            Complex w = ratio / (1.0 - ratio * sum);
            if (!finite(w)) w = ratio;
            z[i] -= w;
            if (std::abs(w) <= kEps * std::abs(z[i])) done[i] = true;
        }
    }

    for (auto& zi : z) {
        for (int step = 0; step < 2; ++step) {
            const auto hv = horner(a, zi);
            if (hv.slope == 0.0 || hv.value == 0.0) break;
            const Complex next = zi - hv.value / hv.slope;
            if (!finite(next) || std::abs(horner(a, next).value) >= std::abs(hv.value)) break;
            zi = next;
        }
    }

    std::vector<double> radii(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto hv = horner(a, z[i]);
        if (!finite(z[i]) || !finite(hv.value))
            throw RootFindingError("Aberth iteration diverged", z);
        double prod = std::abs(a.back());
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) prod *= std::abs(z[i] - z[j]);
        const double residual = std::abs(hv.value) + rounding_bound(hv.magnitude, d);
        radii[i] = prod > 0.0 ? static_cast<double>(d) * residual / prod : std::numeric_limits<double>::infinity();
        if (!converged && residual > 1e6 * rounding_bound(hv.magnitude, d))
            throw RootFindingError("Aberth iteration did not converge within " + std::to_string(kMaxIterations) +
                                       " sweeps (degree " + std::to_string(d) + ")",
                                   z);
    }
    return {std::move(z), std::move(radii)};
}

double relative_imag(Complex z) { return std::fabs(z.imag()) / (1.0 + std::abs(z)); }

// Pairs nonreal roots of a real polynomial into exact conjugate pairs.
std::vector<Complex> pair_conjugates(std::vector<Complex> nonreal)
{
    std::vector<Complex> out;
    out.reserve(nonreal.size());
    std::vector<bool> used(nonreal.size(), false);
    for (std::size_t i = 0; i < nonreal.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::size_t best = nonreal.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nonreal.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(std::conj(nonreal[i]) - nonreal[j]);
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best == nonreal.size()) throw Error("conjugate pairing failed: odd number of nonreal roots");
        used[best] = true;
        const Complex mean = 0.5 * (nonreal[i] + std::conj(nonreal[best]));
        const Complex upper(mean.real(), std::fabs(mean.imag()));
        out.push_back(upper);
        out.push_back(std::conj(upper));
    }
    return out;
}

double polish_real(const RealPolynomial& p, double x)
{
    const RealPolynomial dp = derivative(p);
    for (int step = 0; step < 4; ++step) {
        const double v = evaluate(p, x);
        const double s = evaluate(dp, x);
        if (v == 0.0 || s == 0.0) break;
        const double next = x - v / s;
        if (!std::isfinite(next) || std::fabs(evaluate(p, next)) >= std::fabs(v)) break;
        x = next;
    }
    return x;
}

// Roots of one exact square-free factor, realness decided rigorously.
std::vector<Root> solve_squarefree_real(const RationalPolynomial& exact)
{
    std::vector<Root> out;
    const int d = exact.degree();
    if (d < 1) return out;

    RationalPolynomial q = exact;
    if (q.coeff(0) == 0) {
        out.push_back({Complex(0.0, 0.0), 1, true});
        q = divmod(q, RationalPolynomial::identity()).first;
    }
    if (q.degree() < 1) return out;

    if (q.degree() == 1) {
        Rational r = -q.coeff(0) / q.coeff(1);
        out.push_back({Complex(r.get_d(), 0.0), 1, true});
        return out;
    }

    if (q.degree() == 2) {
        const Rational disc = discriminant(q);
        const double a = q.coeff(2).get_d(), b = q.coeff(1).get_d(), c = q.coeff(0).get_d();
        const double sd = std::sqrt(std::fabs(disc.get_d()));
        if (sgn(disc) > 0) {
            const double t = -0.5 * (b + std::copysign(sd, b));
            double x1 = t / a;
            double x2 = c / t;
            const RealPolynomial approx = to_real(q);
            x1 = polish_real(approx, x1);
            x2 = polish_real(approx, x2);
            out.push_back({Complex(std::min(x1, x2), 0.0), 1, true});
            out.push_back({Complex(std::max(x1, x2), 0.0), 1, true});
        } else {
            const Complex z(-b / (2.0 * a), sd / (2.0 * std::fabs(a)));
            out.push_back({z, 1, false});
            out.push_back({std::conj(z), 1, false});
        }
        return out;
    }

    const RealPolynomial approx = to_real(q);
    std::vector<Complex> a;
    a.reserve(approx.coeffs().size());
    for (double c : approx.coeffs()) {
        if (!std::isfinite(c)) throw RootFindingError("square-free factor has non-finite coefficients", {});
        a.emplace_back(c, 0.0);
    }
    auto [z, r] = aberth(a);
    const std::size_t n = z.size();

    // Inclusion disks D_i = disk(z_i, r_i); a disk isolated from all others
    // holds exactly one root. If it meets the real axis and its mirror image
    // meets no other disk, that root must equal its own conjugate.
    std::vector<int> status(n, 0);  // +1 real, -1 nonreal, 0 unknown
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= r[i] + r[j]) parent[find(i)] = find(j);

    std::vector<bool> component_touches_axis(n, false);
    for (std::size_t i = 0; i < n; ++i)
        if (std::fabs(z[i].imag()) <= r[i]) component_touches_axis[find(i)] = true;

    for (std::size_t i = 0; i < n; ++i) {
        if (!component_touches_axis[find(i)]) {
            status[i] = -1;
            continue;
        }
        bool isolated = true;
        bool mirror_isolated = true;
        for (std::size_t j = 0; j < n && (isolated || mirror_isolated); ++j) {
            if (j == i) continue;
            if (std::abs(z[i] - z[j]) <= r[i] + r[j]) isolated = false;
            if (std::abs(std::conj(z[i]) - z[j]) <= r[i] + r[j]) mirror_isolated = false;
        }
        if (isolated && mirror_isolated && std::fabs(z[i].imag()) <= r[i]) status[i] = 1;
    }

    const auto unknown = std::count(status.begin(), status.end(), 0);
    const auto nonreal_count = std::count(status.begin(), status.end(), -1);
    if (unknown > 0 || nonreal_count % 2 != 0) {
        const int real_count = real_root_count(q);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return relative_imag(z[x]) < relative_imag(z[y]); });
        for (std::size_t k = 0; k < n; ++k) status[order[k]] = static_cast<int>(k) < real_count ? 1 : -1;
    }

    std::vector<Complex> nonreal;
    for (std::size_t i = 0; i < n; ++i) {
        if (status[i] == 1)
            out.push_back({Complex(polish_real(approx, z[i].real()), 0.0), 1, true});
        else
            nonreal.push_back(z[i]);
    }
    for (const auto& w : pair_conjugates(std::move(nonreal))) out.push_back({w, 1, false});
    return out;
}

bool root_less(const Root& a, const Root& b)
{
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
}

void flag_marginal(std::vector<Root>& roots, double tol)
{
    std::vector<std::size_t> reals;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        auto& r = roots[i];
        if (r.real) {
            if (r.multiplicity >= 2) r.marginal = true;
            reals.push_back(i);
        } else if (relative_imag(r.value) <= 10.0 * tol) {
            r.marginal = true;
        }
    }
    std::sort(reals.begin(), reals.end(),
              [&](std::size_t x, std::size_t y) { return roots[x].value.real() < roots[y].value.real(); });
    for (std::size_t k = 1; k < reals.size(); ++k) {
        auto& lo = roots[reals[k - 1]];
        auto& hi = roots[reals[k]];
        const double gap = hi.value.real() - lo.value.real();
        const double scale = 1.0 + std::max(std::fabs(lo.value.real()), std::fabs(hi.value.real()));
        if (gap <= 20.0 * tol * scale) lo.marginal = hi.marginal = true;
    }
}

int sign_of(const Rational& q) { return sgn(q); }

int variations(const std::vector<RationalPolynomial>& chain, const std::optional<Rational>& at, bool plus_infinity)
{
    int count = 0;
    int last = 0;
    for (const auto& s : chain) {
        int sg;
        if (at) {
            sg = sign_of(evaluate(s, *at));
        } else {
            sg = sign_of(s.lead());
            if (!plus_infinity && s.degree() % 2 != 0) sg = -sg;
        }
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

RationalPolynomial squarefree_part(const RationalPolynomial& p)
{
    const RationalPolynomial g = gcd(p, derivative(p));
    if (g.degree() <= 0) return make_monic(p);
    return make_monic(divmod(p, g).first);
}

}  // namespace

std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p)
{
    std::vector<std::pair<RationalPolynomial, int>> out;
    if (p.degree() < 1) return out;
    const RationalPolynomial f = make_monic(p);
    const RationalPolynomial df = derivative(f);
    const RationalPolynomial a0 = gcd(f, df);
    RationalPolynomial b = divmod(f, a0).first;
    RationalPolynomial c = divmod(df, a0).first;
    RationalPolynomial dd = c - derivative(b);
    for (int i = 1; b.degree() >= 1; ++i) {
        RationalPolynomial a = gcd(b, dd);
        if (a.degree() >= 1) out.emplace_back(make_monic(a), i);
        b = divmod(b, a).first;
        c = divmod(dd, a).first;
        dd = c - derivative(b);
    }
    return out;
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p)
{
    std::vector<RationalPolynomial> chain;
    if (p.is_zero()) return chain;
    auto normalize = [](const RationalPolynomial& s) {
        Rational scale = abs(s.lead());
        return s * Rational(1 / scale);
    };
    chain.push_back(normalize(p));
    RationalPolynomial dp = derivative(p);
    if (dp.is_zero()) return chain;
    chain.push_back(normalize(dp));
    while (true) {
        RationalPolynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(normalize(-r));
    }
    return chain;
}

int real_root_count(const RationalPolynomial& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi)
{
    if (p.is_zero()) throw DomainError("real_root_count: zero polynomial");
    if (p.degree() == 0) return 0;
    if (lo && hi && *lo > *hi) return 0;
    const RationalPolynomial sf = squarefree_part(p);
    const auto chain = sturm_sequence(sf);
    int count = variations(chain, lo, false) - variations(chain, hi, true);
    if (lo && evaluate(sf, *lo) == 0) ++count;
    return count;
}

int real_root_count(const RationalPolynomial& p) { return real_root_count(p, std::nullopt, std::nullopt); }

int real_root_count_with_multiplicity(const RationalPolynomial& p)
{
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        const auto chain = sturm_sequence(factor);
        total += mult * (variations(chain, std::nullopt, false) - variations(chain, std::nullopt, true));
    }
    return total;
}

bool all_roots_real(const RationalPolynomial& p)
{
    if (p.is_zero()) throw DomainError("all_roots_real: zero polynomial");
    if (p.degree() <= 1) return true;
    // The chain of a non-square-free p ends in gcd(p, p') and still counts
    // distinct real roots; all roots are real iff that count is the number
    // of distinct roots, deg p - deg gcd(p, p').
    const auto chain = sturm_sequence(p);
    const int distinct_real = variations(chain, std::nullopt, false) - variations(chain, std::nullopt, true);
    return distinct_real == p.degree() - chain.back().degree();
}

std::vector<Root> distinct_roots(const RealPolynomial& p)
{
    if (p.is_zero()) throw DomainError("distinct_roots: zero polynomial");
    std::vector<Root> out;
    for (const auto& [factor, mult] : squarefree_decomposition(to_rational(p))) {
        for (auto r : solve_squarefree_real(factor)) {
            r.multiplicity = mult;
            out.push_back(r);
        }
    }
    flag_marginal(out, kRealnessTol);
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

std::vector<Complex> complex_roots(const RealPolynomial& p)
{
    std::vector<Complex> out;
    for (const auto& r : distinct_roots(p))
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    return out;
}

std::vector<Root> root_clusters(std::span<const Complex> coeffs)
{
    std::size_t end = coeffs.size();
    while (end > 0 && coeffs[end - 1] == 0.0) --end;
    if (end == 0) throw DomainError("root_clusters: zero polynomial");
    std::size_t begin = 0;
    while (coeffs[begin] == 0.0) ++begin;

    std::vector<Root> out;
    if (begin > 0) out.push_back({Complex(0.0, 0.0), static_cast<int>(begin), true});
    if (end - begin >= 2) {
        auto [z, radii] = aberth(coeffs.subspan(begin, end - begin));
        const std::size_t n = z.size();
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::abs(z[i] - z[j]) <= kClusterRadius * std::max(1.0, std::abs(z[i]))) parent[find(i)] = find(j);
        std::vector<Complex> sum(n, 0.0);
        std::vector<int> size(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            sum[find(i)] += z[i];
            ++size[find(i)];
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (size[i] == 0) continue;
            Root r;
            r.value = sum[i] / static_cast<double>(size[i]);
            r.multiplicity = size[i];
            r.clustered = size[i] > 1;
            r.real = relative_imag(r.value) <= kRealnessTol;
            out.push_back(r);
        }
    }
    for (auto& r : out)
        if (!r.real && relative_imag(r.value) <= 10.0 * kRealnessTol) r.marginal = true;
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

std::vector<Complex> complex_roots(std::span<const Complex> coeffs)
{
    std::vector<Complex> out;
    for (const auto& r : root_clusters(coeffs))
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    return out;
}

std::vector<RealRoot> real_roots(const RealPolynomial& p)
{
    std::vector<RealRoot> out;
    for (const auto& r : distinct_roots(p))
        if (r.real) out.push_back({r.value.real(), r.multiplicity, r.marginal});
    std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.x < b.x; });
    return out;
}

bool all_roots_real(const RealPolynomial& p, double tol)
{
    if (p.is_zero()) throw DomainError("all_roots_real: zero polynomial");
    for (const auto& r : distinct_roots(p))
        if (std::fabs(r.value.imag()) > tol * (1.0 + std::abs(r.value))) return false;
    return true;
}

}  // namespace juliareal
