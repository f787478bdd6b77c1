#include "juliareal/serialize.hpp"

#include <fmt/format.h>

#include <cmath>

namespace juliareal {

RationalPolynomial polynomial_from_json(const nlohmann::json& array)
{
    if (!array.is_array() || array.empty()) throw DomainError("polynomial must be a nonempty JSON array");
    std::vector<Rational> coeffs;
    for (const auto& v : array) {
        if (v.is_number_integer())
            coeffs.push_back(parse_rational(v.dump()));
        else if (v.is_number_float())
            coeffs.push_back(parse_rational(v.dump()));
        else if (v.is_string())
            coeffs.push_back(parse_rational(v.get<std::string>()));
        else
            throw DomainError("polynomial coefficients must be numbers or \"p/q\" strings, got " + v.dump());
    }
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial parse_polynomial(std::string_view json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(fmt::format("cannot parse polynomial '{}': {}", json_text, e.what()));
    }
    return polynomial_from_json(j);
}

Json to_json(const RationalPolynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs()) {
        if (c.get_den() == 1 && mpz_fits_slong_p(c.get_num_mpz_t()))
            out.push_back(c.get_num().get_si());
        else
            out.push_back(to_string(c));
    }
    return out;
}

Json to_json(const RealPolynomial& p)
{
    Json out = Json::array();
    for (double c : p.coeffs()) out.push_back(c);
    return out;
}

Json number_json(double x)
{
    if (std::isnan(x)) return nullptr;
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

Json to_json(const CriticalInterval& I)
{
    Json out;
    out["empty"] = I.empty;
    if (!I.empty) {
        out["lo"] = number_json(I.lo);
        out["hi"] = number_json(I.hi);
    }
    return out;
}

Json to_json(const ClassificationReport& r)
{
    Json out;
    out["julia_real"] = r.julia_real;
    out["branch"] = std::string(to_string(r.branch));
    out["degree"] = r.degree;
    out["fixed_points_of_iterate"] = r.fixed_point_iterate;
    out["fixed_points"] = r.fixed_points;
    out["interval"] = to_json(r.interval);
    if (r.test_interval) out["test_interval"] = {r.test_interval->first, r.test_interval->second};
    if (r.witness) out["witness"] = *r.witness;
    out["marginal"] = r.marginal;
    out["reason"] = r.reason;
    return out;
}

Json to_json(const OrbitStatus& s)
{
    Json out;
    out["tag"] = to_string(s.tag);
    out["summary"] = s.describe();
    if (s.tag == OrbitTag::Periodic || s.tag == OrbitTag::Preperiodic) {
        out["period"] = s.period;
        out["tail"] = s.tail;
    }
    if (s.tag == OrbitTag::Nonperiodic) out["reason"] = to_string(s.reason);
    if (s.reason == NonperiodicReason::ValuationGrowth) out["prime"] = s.prime;
    Json prefix = Json::array();
    for (const auto& x : s.prefix) prefix.push_back(to_string(x));
    out["prefix"] = prefix;
    return out;
}

Json to_json(const SurjectivityReport& r)
{
    Json out;
    out["surjective"] = r.surjective;
    out["discriminant"] = r.discriminant;
    out["poles"] = r.poles;
    out["critical_points"] = r.critical_points;
    out["critical_values"] = r.critical_values;
    Json pieces = Json::array();
    for (const auto& p : r.pieces)
        pieces.push_back({{"x_from", number_json(p.x_from)},
                          {"x_to", number_json(p.x_to)},
                          {"lo", number_json(p.lo)},
                          {"hi", number_json(p.hi)}});
    out["pieces"] = pieces;
    if (r.gap) out["gap"] = {number_json(r.gap->first), number_json(r.gap->second)};
    return out;
}

Json to_json(const NonAbelianCertificate& c)
{
    Json out;
    out["map"] = c.map;
    out["alpha"] = c.alpha;
    Json checks;
    checks["surjective"] = {{"pass", c.surjective.pass}, {"witness", c.surjective.detail}};
    checks["julia_nonreal"] = {{"pass", c.julia_nonreal.pass}, {"reason", c.julia_nonreal.detail}};
    checks["nonperiodic"] = {{"pass", c.nonperiodic.pass}, {"tag", c.nonperiodic.detail}};
    out["checks"] = checks;
    out["orbit"] = to_json(c.orbit);
    out["verdict"] = c.certified ? "certified" : "not-certified";
    return out;
}

void write_pgm(std::ostream& out, const Image& img, std::string_view comment)
{
    out << "P5\n";
    if (!comment.empty()) out << "# " << comment << "\n";
    out << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
}

void write_points_csv(std::ostream& out, const std::vector<Complex>& points)
{
    out << "re,im,weight\n";
    const double w = points.empty() ? 0.0 : 1.0 / static_cast<double>(points.size());
    for (const auto& z : points) out << fmt::format("{},{},{}\n", z.real(), z.imag(), w);
}

}  // namespace juliareal
