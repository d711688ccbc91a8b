#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "degen/parampoly.hpp"

namespace degen {

/// The coefficient field of the whole engine: exact rational functions in the
/// fixed parameter alphabet, with plain rationals as the constant case.
///
/// Canonical form invariant: the denominator is a nonzero polynomial, the
/// fraction is fully reduced (polynomial gcd, integer contents included), and
/// the denominator's lex-leading coefficient is positive.  Consequently
/// equality of values is equality of representations.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpz_class& v) : num_(v), den_(1) {}
    explicit Scalar(const mpq_class& v);
    Scalar(ParamPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    /// Throws precondition_error when `den` is the zero polynomial.
    Scalar(ParamPoly num, ParamPoly den);

    static Scalar alpha() { return Scalar(ParamPoly::symbol(P_ALPHA)); }
    static Scalar beta() { return Scalar(ParamPoly::symbol(P_BETA)); }
    static Scalar gamma() { return Scalar(ParamPoly::symbol(P_GAMMA)); }
    static Scalar delta() { return Scalar(ParamPoly::symbol(P_DELTA)); }
    static Scalar s() { return Scalar(ParamPoly::symbol(P_S)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when no parameter occurs (a plain rational).
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    /// Requires is_rational().
    mpq_class rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Throws precondition_error when dividing by zero.
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Arbitrary total order (map keys, deterministic output ordering).
    bool operator<(const Scalar& o) const;

    /// Exact evaluation at a rational parameter point; throws
    /// precondition_error when the denominator vanishes there.
    mpq_class eval(const std::array<mpq_class, kNumParams>& at) const;

    /// "num" or "(num)/(den)".
    std::string str() const;
    /// Parses full field expressions: the polynomial grammar extended with `/`.
    static Scalar parse(std::string_view text);

private:
    void reduce();
    ParamPoly num_, den_;
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace degen
