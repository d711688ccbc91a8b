#pragma once

#include <array>
#include <map>

#include "degen/mpoly.hpp"
#include "degen/scalar.hpp"

namespace degen {

/// Homogeneous degree-4 form in the coordinates x, y, z, w (slots 0..3) with
/// Scalar coefficients.  At most 35 monomials; zero coefficients are never
/// stored.
class QuarticForm {
public:
    using CoeffMap = std::map<Exp4, Scalar>;

    QuarticForm() = default;

    /// Sets a coefficient (replacing any previous value; erases on zero).
    /// Throws precondition_error if the exponents are negative or do not sum
    /// to 4.
    void set(const Exp4& e, Scalar c);
    Scalar coeff(const Exp4& e) const;

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }
    const CoeffMap& coeffs() const { return coeffs_; }

    /// True when every coefficient is a plain rational (no parameters).
    bool is_rational() const;

    QuarticForm& operator+=(const QuarticForm& o);
    QuarticForm& operator-=(const QuarticForm& o);
    QuarticForm operator*(const Scalar& c) const;
    friend QuarticForm operator+(QuarticForm a, const QuarticForm& b) { return a += b; }
    friend QuarticForm operator-(QuarticForm a, const QuarticForm& b) { return a -= b; }
    bool operator==(const QuarticForm& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QuarticForm& o) const { return !(*this == o); }

    /// As a 4-slot polynomial (slots x,y,z,w).
    Poly to_poly() const;

    Scalar eval(const std::array<Scalar, 4>& at) const;

    /// Restriction to the line {x_a = x_b = 0}: the binary quartic in the two
    /// surviving coordinates, still expressed in 4-slot exponents.
    Poly restrict_to_line(int zero_a, int zero_b) const;

    /// All 35 exponent vectors of degree-4 monomials, in lexicographic order.
    static const std::array<Exp4, 35>& monomial_basis();

    std::string str() const;

private:
    CoeffMap coeffs_;
};

}  // namespace degen
