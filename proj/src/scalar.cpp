#include "degen/scalar.hpp"

#include <sstream>

#include "degen/errors.hpp"

namespace degen {

namespace detail {
std::pair<ParamPoly, ParamPoly> parse_fraction(std::string_view text);  // parampoly.cpp
}

Scalar::Scalar(const mpq_class& v) : num_(v.get_num()), den_(v.get_den()) { reduce(); }

Scalar::Scalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw precondition_error("division by a polynomial that is identically zero");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = ParamPoly::divexact(num_, g);
        den_ = ParamPoly::divexact(den_, g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

mpq_class Scalar::rational_value() const {
    mpq_class q(num_.constant_value(), den_.constant_value());
    q.canonicalize();
    return q;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw precondition_error("division by a polynomial that is identically zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw precondition_error("division by a polynomial that is identically zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(unsigned e) const {
    Scalar r(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

mpq_class Scalar::eval(const std::array<mpq_class, kNumParams>& at) const {
    mpq_class d = den_.eval(at);
    if (d == 0) throw precondition_error("scalar evaluation hits a pole");
    mpq_class q = num_.eval(at) / d;
    q.canonicalize();
    return q;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream out;
    out << "(" << num_.str() << ")/(" << den_.str() << ")";
    return out.str();
}

Scalar Scalar::parse(std::string_view text) {
    auto [num, den] = detail::parse_fraction(text);
    if (den.is_zero()) throw parse_error("zero denominator in scalar expression");
    return Scalar(std::move(num), std::move(den));
}

}  // namespace degen
