#pragma once

#include "juliareal/orbit.hpp"
#include "juliareal/polynomial.hpp"

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace juliareal {

/// (A, B) in the explicit region: A <= -3 and B^2 <= -4A(A+3)^2/27.
bool in_region(double A, double B);

/// 2a(a^2 - 1): the largest B >= 0 with (-3a^2, B) in the region. Needs a >= 1.
double b_zero(double a);

/// X^3 + (A-1)X + B has three real roots (with multiplicity):
/// -4(A-1)^3 - 27B^2 >= 0, decided exactly on the double inputs.
bool has_three_real_fixed_points(double A, double B);

/// X^3 + A X + B.
RealPolynomial cubic_family(double A, double B);

struct TrajectoryRow {
    double B = 0.0;
    bool three_real = false;  ///< false rows carry NaN fixed points
    double alpha1 = 0.0;      ///< smallest real fixed point
    double alpha2 = 0.0;      ///< largest real fixed point
};

/// Smallest and largest real fixed points of X^3 - 3a^2 X + B along a B grid.
std::vector<TrajectoryRow> fixed_point_trajectory(double a, std::span<const double> b_grid);

/// Euclidean distance from (A, B) to the curve B^2 = -4A(A+3)^2/27, A <= 0.
double boundary_distance(double A, double B);

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

/// Grid points lo, lo + step, ... up to hi (inclusive up to rounding).
std::vector<double> grid(const Range& r, double step);

struct ScanCell {
    double A = 0.0;
    double B = 0.0;
    bool analytic = false;
    bool classifier = false;
    bool agree = false;
    bool marginal = false;
    double boundary_distance = 0.0;
};

struct ScanSummary {
    std::size_t cells = 0;
    std::size_t analytic_true = 0;
    std::size_t classifier_true = 0;
    std::size_t disagreements = 0;
    std::size_t marginal = 0;
    double max_disagreement_distance = 0.0;
};

struct RegionScan {
    std::vector<double> a_values;
    std::vector<double> b_values;
    double step = 0.0;
    /// Row-major with A varying fastest: cells[j * a_values.size() + i].
    std::vector<ScanCell> cells;
    ScanSummary summary;

    const ScanCell& at(std::size_t i, std::size_t j) const { return cells[j * a_values.size() + i]; }
    /// Disagreements farther than `band` from the boundary curve.
    std::size_t disagreements_beyond(double band) const;
};

/// One cell of the scan: analytic test against the general classifier.
ScanCell scan_cell(double A, double B);

RegionScan region_scan(const Range& a_range, const Range& b_range, double step);

/// CSV with header A,B,analytic,classifier,agree,boundary_distance.
void write_region_csv(std::ostream& out, const RegionScan& scan);

/// Region mask: 255 in the region, 0 outside, 128 where the two tests
/// disagree. Rows run from the largest B down.
Image region_mask(const RegionScan& scan);

}  // namespace juliareal
