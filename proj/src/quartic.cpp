#include "degen/quartic.hpp"

#include <sstream>

#include "degen/errors.hpp"

namespace degen {

void QuarticForm::set(const Exp4& e, Scalar c) {
    int sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (e[i] < 0) throw precondition_error("quartic exponent must be nonnegative");
        sum += e[i];
    }
    if (sum != 4) throw precondition_error("quartic exponents must sum to 4");
    if (c.is_zero()) {
        coeffs_.erase(e);
    } else {
        coeffs_[e] = std::move(c);
    }
}

Scalar QuarticForm::coeff(const Exp4& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

bool QuarticForm::is_rational() const {
    for (const auto& [e, c] : coeffs_)
        if (!c.is_rational()) return false;
    return true;
}

QuarticForm& QuarticForm::operator+=(const QuarticForm& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

QuarticForm& QuarticForm::operator-=(const QuarticForm& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

QuarticForm QuarticForm::operator*(const Scalar& c) const {
    QuarticForm r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
    return r;
}

Poly QuarticForm::to_poly() const {
    Poly p;
    for (const auto& [e, c] : coeffs_) p += Poly::term(e, c);
    return p;
}

Scalar QuarticForm::eval(const std::array<Scalar, 4>& at) const {
    Scalar total(0);
    for (const auto& [e, c] : coeffs_) {
        Scalar term = c;
        for (std::size_t i = 0; i < 4; ++i)
            for (int k = 0; k < e[i]; ++k) term *= at[i];
        total += term;
    }
    return total;
}

Poly QuarticForm::restrict_to_line(int zero_a, int zero_b) const {
    Poly p;
    for (const auto& [e, c] : coeffs_) {
        if (e[static_cast<std::size_t>(zero_a)] != 0 || e[static_cast<std::size_t>(zero_b)] != 0) continue;
        p += Poly::term(e, c);
    }
    return p;
}

const std::array<Exp4, 35>& QuarticForm::monomial_basis() {
    static const std::array<Exp4, 35> basis = [] {
        std::array<Exp4, 35> b{};
        std::size_t n = 0;
        for (std::int16_t ex = 4; ex >= 0; --ex)
            for (std::int16_t ey = static_cast<std::int16_t>(4 - ex); ey >= 0; --ey)
                for (std::int16_t ez = static_cast<std::int16_t>(4 - ex - ey); ez >= 0; --ez)
                    b[n++] = Exp4{ex, ey, ez, static_cast<std::int16_t>(4 - ex - ey - ez)};
        return b;
    }();
    return basis;
}

std::string QuarticForm::str() const { return to_poly().str({"x", "y", "z", "w"}); }

}  // namespace degen
