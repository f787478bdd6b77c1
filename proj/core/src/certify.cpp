#include "juliareal/certify.hpp"

#include "juliareal/classifier.hpp"
#include "juliareal/roots.hpp"

#include <fmt/format.h>

namespace juliareal {

namespace {

std::string rational_poly_string(const RationalPolynomial& p)
{
    std::string out = "[";
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ",";
        out += "\"" + to_string(p.coeff(i)) + "\"";
    }
    return out + "]";
}

CheckResult surjectivity(const RationalPolynomial& p)
{
    if (p.degree() % 2 == 1) return {true, false, "odd degree: p(x) -> +-inf at both ends of the line"};
    // even degree: bounded on one side, the extreme critical value is the witness
    const RealPolynomial q = to_real(p);
    double extreme = evaluate(q, 0.0);
    bool first = true;
    for (const auto& c : real_roots(derivative(q))) {
        const double v = evaluate(q, c.x);
        if (first || (q.lead() > 0 ? v < extreme : v > extreme)) extreme = v;
        first = false;
    }
    return {false, false,
            fmt::format("even degree: every real value is {} {}", q.lead() > 0 ? ">=" : "<=", extreme)};
}

CheckResult surjectivity(const ExactCurve& curve)
{
    const auto rep = real_surjectivity(curve.approx());
    if (rep.surjective) {
        std::string pts;
        for (std::size_t i = 0; i < rep.critical_points.size(); ++i)
            pts += fmt::format("{}f({}) = {}", i ? ", " : "", rep.critical_points[i], rep.critical_values[i]);
        return {true, false, fmt::format("disc(F) = {}; monotone pieces cover R; {}", rep.discriminant, pts)};
    }
    return {false, false, fmt::format("values in ({}, {}) are never taken", rep.gap->first, rep.gap->second)};
}

CheckResult julia(const RationalPolynomial& p)
{
    const auto r = classify_real_julia(to_real(p));
    if (r.julia_real) return {false, false, fmt::format("Julia set is real ({})", r.reason)};
    if (r.marginal) return {false, false, fmt::format("verdict is marginal ({})", r.reason)};
    std::string detail = fmt::format("{} branch: {}", to_string(r.branch), r.reason);
    if (r.witness) detail += fmt::format(", witness {}", *r.witness);
    return {true, false, detail};
}

}  // namespace

int distinct_preimage_count(const ExactRationalMap& f, const Rational& alpha)
{
    const RationalPolynomial P = f.numerator - f.denominator * alpha;
    int count = P.degree() < f.degree() ? 1 : 0;
    if (P.degree() >= 1) {
        int sf = 0;
        for (const auto& [factor, mult] : squarefree_decomposition(P)) sf += factor.degree();
        count += sf;
    }
    return count;
}

std::string describe(const CertifyTarget& target)
{
    if (const auto* p = std::get_if<RationalPolynomial>(&target)) return "polynomial " + rational_poly_string(*p);
    const auto& c = std::get<ExactCurve>(target);
    return fmt::format("duplication map of y^2 = x^3 + ({})x^2 + ({})x + ({})", to_string(c.a), to_string(c.b),
                       to_string(c.c));
}

NonAbelianCertificate certify_nonabelian(const CertifyTarget& target, const Rational& alpha,
                                         const CertifyOptions& options)
{
    const ExactRationalMap f = std::holds_alternative<RationalPolynomial>(target)
                                   ? ExactRationalMap::polynomial(std::get<RationalPolynomial>(target))
                                   : duplication_lattes(std::get<ExactCurve>(target));
    if (f.degree() < 2) throw DomainError("certify_nonabelian: map degree must be at least 2");
    if (distinct_preimage_count(f, alpha) == 1)
        throw DomainError(fmt::format("certify_nonabelian: alpha = {} has a single preimage (exceptional)", to_string(alpha)));

    NonAbelianCertificate cert;
    cert.map = describe(target);
    cert.alpha = to_string(alpha);

    if (options.check_surjective)
        cert.surjective = std::visit([](const auto& t) { return surjectivity(t); }, target);
    else
        cert.surjective = {true, true, "skipped"};

    if (!options.check_julia)
        cert.julia_nonreal = {true, true, "skipped"};
    else if (const auto* p = std::get_if<RationalPolynomial>(&target))
        cert.julia_nonreal = julia(*p);
    else
        cert.julia_nonreal = {true, false, "Lattes map: the Julia set is the whole Riemann sphere"};

    cert.orbit = orbit_status(f, QPoint(alpha), options.max_steps);
    if (!options.check_nonperiodic) {
        cert.nonperiodic = {true, true, "skipped"};
    } else if (cert.orbit.tag == OrbitTag::Undecided) {
        cert.nonperiodic = {false, false, "periodicity undecided"};
    } else {
        cert.nonperiodic = {cert.orbit.alpha_nonperiodic(), false, cert.orbit.describe()};
    }

    cert.certified = cert.surjective.pass && cert.julia_nonreal.pass && cert.nonperiodic.pass;
    return cert;
}

}  // namespace juliareal
