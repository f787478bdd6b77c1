#pragma once

#include "juliareal/certify.hpp"
#include "juliareal/classifier.hpp"
#include "juliareal/lattes.hpp"
#include "juliareal/orbit.hpp"
#include "juliareal/orbit_status.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string_view>

namespace juliareal {

using Json = nlohmann::ordered_json;

/// Ascending coefficients as a JSON array: integers, "p/q" strings, or
/// decimals (read as the exact decimal they spell).
RationalPolynomial parse_polynomial(std::string_view json_text);
RationalPolynomial polynomial_from_json(const nlohmann::json& array);

Json to_json(const RationalPolynomial& p);
Json to_json(const RealPolynomial& p);
/// Finite numbers as numbers, infinities as the strings "inf" / "-inf".
Json number_json(double x);
Json to_json(const CriticalInterval& I);
Json to_json(const ClassificationReport& r);
Json to_json(const OrbitStatus& s);
Json to_json(const SurjectivityReport& r);
Json to_json(const NonAbelianCertificate& c);

/// Binary PGM (P5); `comment` becomes a '#' line after the magic number.
void write_pgm(std::ostream& out, const Image& img, std::string_view comment = {});

/// CSV rows re,im,weight with a header row.
void write_points_csv(std::ostream& out, const std::vector<Complex>& points);

}  // namespace juliareal
