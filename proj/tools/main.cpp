// juliareal command-line tool.
#include "juliareal/certify.hpp"
#include "juliareal/classifier.hpp"
#include "juliareal/cubic_region.hpp"
#include "juliareal/heights.hpp"
#include "juliareal/lattes.hpp"
#include "juliareal/orbit.hpp"
#include "juliareal/orbit_status.hpp"
#include "juliareal/serialize.hpp"
#include "juliareal/version.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jr = juliareal;

namespace {

/// Malformed user input; exits with status 2 like a parse error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string g_invocation;

std::string provenance() { return fmt::format("juliareal {}: {}", jr::kVersion, g_invocation); }

jr::RationalPolynomial read_poly(const std::string& text)
{
    try {
        return jr::parse_polynomial(text);
    } catch (const jr::DomainError& e) {
        throw UsageError(e.what());
    }
}

jr::Rational read_rational(const std::string& text)
{
    try {
        return jr::parse_rational(text);
    } catch (const std::exception& e) {
        throw UsageError(fmt::format("cannot read rational '{}': {}", text, e.what()));
    }
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<double> read_numbers(const std::string& text, char sep, std::size_t expected, const char* what)
{
    std::vector<double> out;
    for (const auto& part : split(text, sep)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError(fmt::format("{}: cannot read number '{}'", what, part));
        }
    }
    if (expected != 0 && out.size() != expected)
        throw UsageError(fmt::format("{}: expected {} values separated by '{}', got '{}'", what, expected, sep, text));
    return out;
}

jr::Range read_range(const std::string& text, const char* what)
{
    const auto v = read_numbers(text, ':', 2, what);
    if (v[1] < v[0]) throw UsageError(fmt::format("{}: lower end above upper end", what));
    return {v[0], v[1]};
}

jr::ExactCurve read_curve(const std::string& text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw UsageError("--curve expects three coefficients a,b,c");
    return {read_rational(parts[0]), read_rational(parts[1]), read_rational(parts[2])};
}

std::ofstream open_output(const std::string& path, bool binary = false)
{
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw jr::Error("cannot open output file " + path);
    return out;
}

void print(const jr::Json& j) { std::cout << j.dump(2) << "\n"; }

int run_classify(const std::string& poly_text)
{
    const auto p = read_poly(poly_text);
    jr::Json out;
    out["polynomial"] = jr::to_json(p);
    out["report"] = jr::to_json(jr::classify_real_julia(jr::to_real(p)));
    print(out);
    return 0;
}

int run_region(const std::string& a_text, const std::string& b_text, double step, const std::string& csv_path,
               const std::string& pgm_path)
{
    if (!(step > 0)) throw UsageError("--step must be positive");
    const auto scan = jr::region_scan(read_range(a_text, "--a-range"), read_range(b_text, "--b-range"), step);
    if (!csv_path.empty()) {
        auto f = open_output(csv_path);
        f << "# " << provenance() << "\n";
        jr::write_region_csv(f, scan);
    }
    if (!pgm_path.empty()) {
        auto f = open_output(pgm_path, true);
        jr::write_pgm(f, jr::region_mask(scan), provenance());
    }
    const auto& s = scan.summary;
    jr::Json out;
    out["a_values"] = scan.a_values.size();
    out["b_values"] = scan.b_values.size();
    out["step"] = step;
    out["cells"] = s.cells;
    out["analytic_true"] = s.analytic_true;
    out["classifier_true"] = s.classifier_true;
    out["disagreements"] = s.disagreements;
    out["max_disagreement_distance"] = s.max_disagreement_distance;
    out["disagreements_beyond_two_steps"] = scan.disagreements_beyond(2.0 * step);
    out["marginal_cells"] = s.marginal;
    print(out);
    return 0;
}

int run_julia(const std::string& poly_text, const std::string& window_text, int width, int height, int max_iter,
              const std::string& out_path)
{
    const auto p = jr::to_real(read_poly(poly_text));
    const auto w = read_numbers(window_text, ':', 4, "--window");
    const jr::Window window{w[0], w[1], w[2], w[3]};
    if (!(window.re_min < window.re_max && window.im_min < window.im_max)) throw UsageError("--window is empty");
    if (width <= 0 || height <= 0 || max_iter <= 0) throw UsageError("--width, --height and --max-iter must be positive");
    const auto img = jr::render_filled_julia(p, window, width, height, max_iter);
    if (!out_path.empty()) {
        auto f = open_output(out_path, true);
        jr::write_pgm(f, img, provenance());
    }
    std::size_t inside = 0, off_axis = 0;
    const double pixel_h = (window.im_max - window.im_min) / height;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (img.at(x, y) == 255) {
                ++inside;
                if (std::fabs(jr::pixel_center(window, width, height, x, y).imag()) > pixel_h) ++off_axis;
            }
    jr::Json out;
    out["width"] = width;
    out["height"] = height;
    out["max_iter"] = max_iter;
    out["not_escaped_pixels"] = inside;
    out["off_axis_not_escaped_pixels"] = off_axis;
    print(out);
    return 0;
}

int run_equidist(const std::string& poly_text, const std::string& alpha_text, const std::string& levels_text,
                 const std::string& reference, const std::string& csv_path, std::size_t cap)
{
    const auto p = jr::to_real(read_poly(poly_text));
    const double alpha = read_rational(alpha_text).get_d();
    std::vector<int> levels;
    for (double v : read_numbers(levels_text, ',', 0, "--levels")) {
        if (v < 0 || v != static_cast<int>(v)) throw UsageError("--levels must be nonnegative integers");
        levels.push_back(static_cast<int>(v));
    }
    if (levels.empty()) throw UsageError("--levels is empty");
    std::sort(levels.begin(), levels.end());
    if (!reference.empty() && reference != "arcsine") throw UsageError("--reference supports only 'arcsine'");

    std::vector<jr::EmpiricalMeasure> measures;
    jr::Json rows = jr::Json::array();
    jr::BackwardOrbit last;
    for (int n : levels) {
        last = jr::backward_orbit(p, jr::Complex(alpha, 0.0), n, cap);
        measures.push_back(jr::EmpiricalMeasure::from_orbit(last));
        jr::Json row;
        row["level"] = n;
        row["points"] = last.points.size();
        row["max_imag"] = jr::max_imag_stat(last);
        row["has_nonreal"] = measures.back().has_nonreal;
        if (reference == "arcsine") row["ks_arcsine"] = jr::empirical_cdf_distance(measures.back(), jr::arcsine_cdf);
        rows.push_back(row);
    }
    for (std::size_t i = 0; i + 1 < measures.size(); ++i)
        rows[i]["ks_to_next_level"] = jr::empirical_cdf_distance(measures[i], measures[i + 1]);
    if (!csv_path.empty()) {
        auto f = open_output(csv_path);
        f << "# " << provenance() << "\n";
        jr::write_points_csv(f, last.points);
    }
    jr::Json out;
    out["polynomial"] = jr::to_json(p);
    out["alpha"] = alpha_text;
    out["levels"] = rows;
    print(out);
    return 0;
}

int run_heights(const std::string& poly_text, const std::string& x_text, int depth)
{
    const auto p = read_poly(poly_text);
    const auto x = read_rational(x_text);
    if (depth < 1) throw UsageError("--depth must be at least 1");
    jr::Json rows = jr::Json::array();
    for (int n = 0; n <= depth; ++n) {
        const auto h = jr::canonical_height(p, x, n);
        rows.push_back({{"depth", n}, {"estimate", h.estimate}, {"error_bound", jr::number_json(h.error_bound)}});
    }
    jr::Json out;
    out["polynomial"] = jr::to_json(p);
    out["x"] = jr::to_string(x);
    out["weil_height"] = jr::weil_height(x);
    out["height_constant"] = jr::number_json(jr::height_constant(p));
    out["table"] = rows;
    out["functional_equation_residual"] = jr::functional_equation_residual(p, x, depth);
    out["orbit"] = jr::to_json(jr::orbit_status(p, x));
    print(out);
    return 0;
}

int run_lattes(const std::string& curve_text, const std::string& x0_text)
{
    const auto exact = read_curve(curve_text);
    const auto curve = exact.approx();
    const auto f = jr::duplication_lattes(exact);
    const auto crit = jr::lattes_critical_points(curve);
    jr::Json out;
    out["curve"] = {jr::to_string(exact.a), jr::to_string(exact.b), jr::to_string(exact.c)};
    out["discriminant"] = jr::to_string(exact.discriminant());
    out["numerator"] = jr::to_json(f.numerator);
    out["denominator"] = jr::to_json(f.denominator);
    out["critical_points"] = crit.points;
    out["torsion_critical_points"] = crit.torsion_points;
    out["critical_point_mismatch"] = crit.max_mismatch;
    out["surjectivity"] = jr::to_json(jr::real_surjectivity(curve));
    if (!x0_text.empty()) {
        jr::Json rows = jr::Json::array();
        for (double x0 : read_numbers(x0_text, ',', 0, "--x0"))
            rows.push_back({{"x0", x0}, {"residual", jr::number_json(jr::check_commutation(curve, x0))}});
        out["commutation"] = rows;
    }
    print(out);
    return 0;
}

int run_certify(const std::string& poly_text, const std::string& curve_text, const std::string& alpha_text,
                const jr::CertifyOptions& options)
{
    if (poly_text.empty() == curve_text.empty()) throw UsageError("give exactly one of --poly and --curve");
    const jr::CertifyTarget target = poly_text.empty() ? jr::CertifyTarget(read_curve(curve_text))
                                                       : jr::CertifyTarget(read_poly(poly_text));
    print(jr::to_json(jr::certify_nonabelian(target, read_rational(alpha_text), options)));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    for (int i = 0; i < argc; ++i) g_invocation += (i ? " " : "") + std::string(i ? argv[i] : "juliareal");

    CLI::App app{"Real Julia sets, cubic regions, backward orbits, heights and Lattes maps"};
    app.set_version_flag("--version", std::string(jr::kVersion));
    app.require_subcommand(1);

    std::string poly, alpha, curve, a_range, b_range, csv, pgm, window = "-2:2:-2:2", levels = "6,8,10", reference,
                                                                      x_value, x0;
    double step = 0.05;
    int width = 512, height = 512, max_iter = 256, depth = 10;
    std::size_t cap = jr::kDefaultOrbitCap;
    jr::CertifyOptions copts;
    bool no_surjective = false, no_julia = false, no_nonperiodic = false;

    auto* classify = app.add_subcommand("classify", "Decide whether the Julia set of a real polynomial is real");
    classify->add_option("--poly", poly, "Ascending coefficients as a JSON array, e.g. [0,3,0,-1]")->required();

    auto* region = app.add_subcommand("region", "Scan X^3+AX+B against the explicit region");
    region->add_option("--a-range", a_range, "lo:hi")->required();
    region->add_option("--b-range", b_range, "lo:hi")->required();
    region->add_option("--step", step, "Grid step")->capture_default_str();
    region->add_option("--out", csv, "CSV output path");
    region->add_option("--pgm", pgm, "PGM mask output path");

    auto* julia = app.add_subcommand("julia", "Escape-time render of the filled Julia set");
    julia->add_option("--poly", poly, "Ascending coefficients as a JSON array")->required();
    julia->add_option("--window", window, "re_min:re_max:im_min:im_max")->capture_default_str();
    julia->add_option("--width", width)->capture_default_str();
    julia->add_option("--height", height)->capture_default_str();
    julia->add_option("--max-iter", max_iter)->capture_default_str();
    julia->add_option("--out", pgm, "PGM output path");

    auto* equidist = app.add_subcommand("equidist", "Backward-orbit measures and KS distances");
    equidist->add_option("--poly", poly, "Ascending coefficients as a JSON array")->required();
    equidist->add_option("--alpha", alpha, "Base point (rational)")->required();
    equidist->add_option("--levels", levels, "Comma-separated depths")->capture_default_str();
    equidist->add_option("--reference", reference, "Reference CDF: arcsine");
    equidist->add_option("--csv", csv, "Write the deepest level as re,im,weight CSV");
    equidist->add_option("--cap", cap, "Maximum number of orbit points")->capture_default_str();

    auto* heights = app.add_subcommand("heights", "Canonical height table for a rational point");
    heights->add_option("--poly", poly, "Ascending coefficients as a JSON array")->required();
    heights->add_option("--x", x_value, "Rational point")->required();
    heights->add_option("--depth", depth)->capture_default_str();

    auto* lattes = app.add_subcommand("lattes", "Duplication Lattes map of y^2 = x^3 + ax^2 + bx + c");
    lattes->add_option("--curve", curve, "a,b,c")->required();
    lattes->add_option("--x0", x0, "Comma-separated x0 values for the commutation check");

    auto* certify = app.add_subcommand("certify", "Check the non-abelian hypotheses for (map, alpha)");
    certify->add_option("--poly", poly, "Polynomial over Q as a JSON array");
    certify->add_option("--curve", curve, "Lattes map of the curve a,b,c");
    certify->add_option("--alpha", alpha, "Base point (rational)")->required();
    certify->add_option("--max-steps", copts.max_steps, "Exact orbit steps")->capture_default_str();
    certify->add_flag("--no-surjective", no_surjective, "Skip the surjectivity check");
    certify->add_flag("--no-julia", no_julia, "Skip the nonreal Julia set check");
    certify->add_flag("--no-nonperiodic", no_nonperiodic, "Skip the nonperiodicity check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify) return run_classify(poly);
        if (*region) return run_region(a_range, b_range, step, csv, pgm);
        if (*julia) return run_julia(poly, window, width, height, max_iter, pgm);
        if (*equidist) return run_equidist(poly, alpha, levels, reference, csv, cap);
        if (*heights) return run_heights(poly, x_value, depth);
        if (*lattes) return run_lattes(curve, x0);
        if (*certify) {
            copts.check_surjective = !no_surjective;
            copts.check_julia = !no_julia;
            copts.check_nonperiodic = !no_nonperiodic;
            return run_certify(poly, curve, alpha, copts);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
