#pragma once

#include "juliareal/lattes.hpp"
#include "juliareal/orbit_status.hpp"
#include "juliareal/polynomial.hpp"

#include <string>
#include <variant>

namespace juliareal {

/// A polynomial over Q, or the duplication map of a curve over Q.
using CertifyTarget = std::variant<RationalPolynomial, ExactCurve>;

struct CertifyOptions {
    bool check_surjective = true;
    bool check_julia = true;
    bool check_nonperiodic = true;
    int max_steps = kDefaultOrbitSteps;
};

struct CheckResult {
    bool pass = false;
    bool skipped = false;
    std::string detail;  ///< witness, reason, or orbit tag
};

struct NonAbelianCertificate {
    std::string map;
    std::string alpha;
    CheckResult surjective;
    CheckResult julia_nonreal;
    CheckResult nonperiodic;
    OrbitStatus orbit;
    bool certified = false;
};

/// Checks the three hypotheses (real surjectivity, nonreal Julia set,
/// nonperiodic base point); certified iff all pass. Throws DomainError when
/// alpha has a single preimage.
NonAbelianCertificate certify_nonabelian(const CertifyTarget& target, const Rational& alpha,
                                         const CertifyOptions& options = {});

/// Distinct preimages of alpha in P^1, counting infinity.
int distinct_preimage_count(const ExactRationalMap& f, const Rational& alpha);

std::string describe(const CertifyTarget& target);

}  // namespace juliareal
