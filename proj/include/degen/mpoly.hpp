#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "degen/scalar.hpp"

namespace degen {

/// Exponent vector over up to four variable slots.  What the slots mean is up
/// to the caller: homogeneous coordinates x,y,z,w for quartics, affine chart
/// coordinates for decompositions, or (branch coordinate, deformation
/// parameter) for series work.  Negative exponents are allowed so that
/// first-order pole terms can be carried in the same representation.
using Exp4 = std::array<std::int16_t, 4>;

/// Sparse (Laurent) polynomial in at most four variables with Scalar
/// coefficients.  Zero coefficients are never stored, so representation
/// equality is arithmetic equality.
class Poly {
public:
    using TermMap = std::map<Exp4, Scalar>;

    Poly() = default;
    Poly(Scalar c);  // NOLINT(google-explicit-constructor) constants convert freely
    Poly(long c) : Poly(Scalar(c)) {}

    /// The single variable `slot` raised to `power` (which may be negative).
    static Poly var(int slot, int power = 1);
    static Poly term(const Exp4& e, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the exact exponent vector e (zero if absent).
    Scalar coeff(const Exp4& e) const;

    /// Largest / smallest exponent of `slot` over all terms; 0 for the zero
    /// polynomial.
    int degree(int slot) const;
    int min_degree(int slot) const;
    bool uses(int slot) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Coefficient of slot^k, as a polynomial in the remaining slots.
    Poly coeff_of(int slot, int k) const;

    /// Substitute a polynomial for `slot`.  Requires every exponent of that
    /// slot to be nonnegative (pole substitution is not meaningful here).
    Poly subst(int slot, const Poly& value) const;

    /// Substitutes all four slots at once; the values may live in a different
    /// slot space than *this.  Every exponent of *this must be nonnegative.
    Poly subst_all(const std::array<Poly, 4>& values) const;

    /// Substitute an exact Scalar for `slot`; negative exponents invert the
    /// value (which must then be nonzero).
    Poly subst(int slot, const Scalar& value) const;

    /// Value at a full point, all four slots at once.
    Scalar eval(const std::array<Scalar, 4>& at) const;

    /// Display with the given slot names, e.g. {"x","y","z","w"}.
    std::string str(const std::array<std::string, 4>& names) const;

private:
    void insert_term(const Exp4& e, Scalar c);
    TermMap terms_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

}  // namespace degen
