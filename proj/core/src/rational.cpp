#include "juliareal/rational.hpp"

#include "juliareal/error.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace juliareal {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        throw DomainError("not an integer literal: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw DomainError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        exponent = parse_integer(text.substr(e + 1)).get_si();
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
        fraction_digits = static_cast<long>(mantissa.size() - dot - 1);
        if (digits == "-" || digits == "+" || digits.empty())
            throw DomainError("malformed number '" + std::string(text) + "'");
    } else {
        digits = std::string(mantissa);
    }
    BigInt num = parse_integer(digits);
    long shift = exponent - fraction_digits;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift >= 0 ? Rational(num * scale) : Rational(num, scale);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational exact_rational(double x)
{
    if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite double to a rational");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

double log_abs(const BigInt& n)
{
    if (n == 0) throw DomainError("log of zero");
    long exp2 = 0;
    // mantissa in [0.5, 1); rescale to [1, 2) so exact powers of two give log(1) = 0
    double mant = std::fabs(mpz_get_d_2exp(&exp2, n.get_mpz_t()));
    return std::log(2.0 * mant) + static_cast<double>(exp2 - 1) * std::numbers::ln2;
}

std::size_t bit_length(const BigInt& n)
{
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

int valuation(const BigInt& n, unsigned long p)
{
    if (n == 0) throw DomainError("valuation of zero");
    BigInt m = n;
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

int valuation(const Rational& q, unsigned long p)
{
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

}  // namespace juliareal
