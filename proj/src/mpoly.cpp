#include "degen/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace degen {

namespace {
constexpr Exp4 kConstExp{0, 0, 0, 0};
}

Poly::Poly(Scalar c) {
    if (!c.is_zero()) terms_.emplace(kConstExp, std::move(c));
}

Poly Poly::var(int slot, int power) {
    Exp4 e = kConstExp;
    e[static_cast<std::size_t>(slot)] = static_cast<std::int16_t>(power);
    Poly p;
    p.terms_.emplace(e, Scalar(1));
    return p;
}

Poly Poly::term(const Exp4& e, Scalar c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
}

Scalar Poly::coeff(const Exp4& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::degree(int slot) const {
    int d = 0;
    bool any = false;
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(slot)];
        if (!any || k > d) d = k;
        any = true;
    }
    return any ? d : 0;
}

int Poly::min_degree(int slot) const {
    int d = 0;
    bool any = false;
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(slot)];
        if (!any || k < d) d = k;
        any = true;
    }
    return any ? d : 0;
}

bool Poly::uses(int slot) const {
    for (const auto& [e, c] : terms_)
        if (e[static_cast<std::size_t>(slot)] != 0) return true;
    return false;
}

void Poly::insert_term(const Exp4& e, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exp4 e;
            for (std::size_t i = 0; i < 4; ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Scalar(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Poly Poly::coeff_of(int slot, int k) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(slot)] != k) continue;
        Exp4 e2 = e;
        e2[static_cast<std::size_t>(slot)] = 0;
        r.insert_term(e2, c);
    }
    return r;
}

Poly Poly::subst(int slot, const Poly& value) const {
    // Cache value^k as k walks upward; exponents of `slot` must be >= 0.
    std::vector<Poly> powers{Poly(Scalar(1))};
    auto power = [&](int k) -> const Poly& {
        while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
        return powers[static_cast<std::size_t>(k)];
    };
    Poly r;
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(slot)];
        if (k < 0) throw std::logic_error("Poly::subst: negative exponent in substituted slot");
        Exp4 e2 = e;
        e2[static_cast<std::size_t>(slot)] = 0;
        r += Poly::term(e2, c) * power(k);
    }
    return r;
}

Poly Poly::subst_all(const std::array<Poly, 4>& values) const {
    std::array<std::vector<Poly>, 4> powers;
    for (auto& v : powers) v.push_back(Poly(Scalar(1)));
    auto power = [&](std::size_t slot, int k) -> const Poly& {
        auto& cache = powers[slot];
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * values[slot]);
        return cache[static_cast<std::size_t>(k)];
    };
    Poly r;
    for (const auto& [e, c] : terms_) {
        Poly t(c);
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0) throw std::logic_error("Poly::subst_all: negative exponent");
            t = t * power(i, e[i]);
        }
        r += t;
    }
    return r;
}

Poly Poly::subst(int slot, const Scalar& value) const {
    std::map<int, Scalar> powers;
    auto power = [&](int k) -> const Scalar& {
        auto it = powers.find(k);
        if (it != powers.end()) return it->second;
        Scalar p(1);
        for (int i = 0; i < k; ++i) p = p * value;
        for (int i = 0; i > k; --i) p = p / value;  // negative exponents divide
        return powers.emplace(k, std::move(p)).first->second;
    };
    Poly r;
    for (const auto& [e, c] : terms_) {
        Exp4 e2 = e;
        e2[static_cast<std::size_t>(slot)] = 0;
        r.insert_term(e2, c * power(e[static_cast<std::size_t>(slot)]));
    }
    return r;
}

Scalar Poly::eval(const std::array<Scalar, 4>& at) const {
    Poly p = *this;
    for (int i = 0; i < 4; ++i)
        if (p.uses(i)) p = p.subst(i, at[static_cast<std::size_t>(i)]);
    return p.is_zero() ? Scalar(0) : p.terms_.begin()->second;
}

std::string Poly::str(const std::array<std::string, 4>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            out << "*" << names[i];
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace degen
