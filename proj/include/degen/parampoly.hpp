#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace degen {

/// Number of symbolic parameters.  The alphabet is fixed: four hyperplane
/// coefficients and one family parameter.
inline constexpr int kNumParams = 5;

/// Parameter indices.  All printing/parsing uses the Greek names (UTF-8) with
/// ASCII aliases accepted on input.
enum Param : int { P_ALPHA = 0, P_BETA = 1, P_GAMMA = 2, P_DELTA = 3, P_S = 4 };

/// UTF-8 display name of a parameter.
const char* param_name(int idx);

/// Exponent vector of a parameter monomial.
using ParamExp = std::array<std::uint16_t, kNumParams>;

/// Descending lexicographic order on exponent vectors, so that map iteration
/// starts at the leading monomial.
struct LexDesc {
    bool operator()(const ParamExp& a, const ParamExp& b) const { return a > b; }
};

/// Sparse polynomial with integer coefficients in the fixed parameter
/// alphabet.  Zero coefficients are never stored, so representation equality
/// is arithmetic equality.
class ParamPoly {
public:
    using TermMap = std::map<ParamExp, mpz_class, LexDesc>;

    ParamPoly() = default;
    ParamPoly(long v);  // NOLINT(google-explicit-constructor) constants convert freely
    explicit ParamPoly(const mpz_class& v);

    /// The single parameter `idx` raised to `power`.
    static ParamPoly symbol(int idx, unsigned power = 1);

    /// Single-term polynomial c * x^e (zero if c == 0).
    static ParamPoly monomial(const ParamExp& e, mpz_class c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Requires is_constant().
    const mpz_class& constant_value() const;

    /// Largest exponent of parameter `idx` over all terms (0 for the zero
    /// polynomial).
    int degree(int idx) const;
    bool uses(int idx) const { return degree(idx) > 0; }
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }
    /// Leading (lex-greatest) term.  Requires a nonzero polynomial.
    const mpz_class& leading_coeff() const;
    const ParamExp& leading_exp() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly operator*(const ParamPoly& o) const;
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    ParamPoly pow(unsigned e) const;

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }
    /// Arbitrary but total order (for use as map keys).
    bool operator<(const ParamPoly& o) const;

    /// Nonnegative gcd of all integer coefficients; 0 for the zero polynomial.
    mpz_class int_content() const;

    /// Exact value at a rational point of the parameter space.
    mpq_class eval(const std::array<mpq_class, kNumParams>& at) const;

    /// Greatest common divisor over the integers (contents included),
    /// normalized to a positive leading coefficient.  gcd(0, p) = ±p.
    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

    /// Exact quotient a / b; throws std::logic_error if b does not divide a.
    static ParamPoly divexact(const ParamPoly& a, const ParamPoly& b);

    /// Like divexact, but reports inexact division by returning false.
    /// The quotient is written to `quot` when non-null and division succeeds.
    static bool try_divexact(const ParamPoly& a, const ParamPoly& b, ParamPoly* quot);

    /// Canonical textual form: terms in descending lex order, explicit `*`
    /// between factors, `^` for powers (e.g. "3*α^2*β - 2").
    std::string str() const;

    /// Parse the grammar: integer literals, parameter names (Greek or ASCII
    /// aliases alpha/beta/gamma/delta/s), `+ - * ^` and parentheses.
    static ParamPoly parse(std::string_view text);

private:
    void insert_term(const ParamExp& e, mpz_class c);
    TermMap terms_;

    friend class Scalar;
};

}  // namespace degen
