#include "degen/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "degen/errors.hpp"

namespace degen {

namespace {

/// Brent-style Pollard rho; returns a nontrivial factor of composite odd n.
mpz_class pollard_rho(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff == 0) break;  // cycle without factor: retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const mpz_class& n, std::vector<std::pair<mpz_class, unsigned>>& out);

void split_composite(const mpz_class& n, std::vector<std::pair<mpz_class, unsigned>>& out) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out.emplace_back(n, 1);
        return;
    }
    const mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

void factor_into(const mpz_class& n, std::vector<std::pair<mpz_class, unsigned>>& out) {
    if (n == 1) return;
    split_composite(n, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
    if (n <= 0) throw std::logic_error("factorize: argument must be positive");
    std::vector<std::pair<mpz_class, unsigned>> out;
    mpz_class m = n;
    auto strip = [&](const mpz_class& p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (mpz_class p = 5; p * p <= m && p <= 1000000; p += (p % 6 == 5) ? 2 : 4) strip(p);
    if (m > 1) {
        std::vector<std::pair<mpz_class, unsigned>> rest;
        factor_into(m, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            unsigned e = 0;
            while (j < rest.size() && rest[j].first == rest[i].first) e += rest[j++].second;
            out.emplace_back(rest[i].first, e);
            i = j;
        }
    }
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t sz = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// Value of Σ c[d]·p^d·q^(deg-d) — the root test with denominators cleared.
mpz_class form_value(const std::vector<mpz_class>& c, const mpz_class& p, const mpz_class& q) {
    const std::size_t deg = c.size() - 1;
    mpz_class total = 0;
    mpz_class pp = 1;
    std::vector<mpz_class> qq(deg + 1);
    qq[0] = 1;
    for (std::size_t k = 1; k <= deg; ++k) qq[k] = qq[k - 1] * q;
    for (std::size_t d = 0; d <= deg; ++d) {
        total += c[d] * pp * qq[deg - d];
        pp *= p;
    }
    return total;
}

/// Exact quotient of the form by (q·u - p·v); requires the root to hold.
std::vector<mpz_class> deflate(const std::vector<mpz_class>& c, const mpz_class& p, const mpz_class& q) {
    const std::size_t deg = c.size() - 1;
    std::vector<mpz_class> b(deg);
    mpz_divexact(b[deg - 1].get_mpz_t(), c[deg].get_mpz_t(), q.get_mpz_t());
    for (std::size_t k = deg - 1; k >= 1; --k) {
        mpz_class t = c[k] + p * b[k];
        mpz_divexact(b[k - 1].get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
    }
    return b;
}

}  // namespace

RationalRootResult rational_roots_quartic(const std::vector<mpz_class>& c_in) {
    if (c_in.size() != 5) throw std::logic_error("rational_roots_quartic: need 5 coefficients");
    if (c_in[4] == 0 || c_in[0] == 0)
        throw precondition_error("binary quartic has a root at a coordinate vertex");

    std::vector<mpz_class> c = c_in;
    mpz_class content = 0;
    for (const auto& v : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());

    const std::vector<mpz_class> ps = divisors(abs(c[0]));
    const std::vector<mpz_class> qs = divisors(abs(c[4]));

    RationalRootResult res;
    for (const mpz_class& q : qs) {
        for (const mpz_class& p_abs : ps) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p_abs.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                const mpz_class p = sign == 0 ? p_abs : mpz_class(-p_abs);
                while (c.size() > 1 && form_value(c, p, q) == 0) {
                    res.roots.emplace_back(p, q);
                    c = deflate(c, p, q);
                }
            }
        }
    }
    std::sort(res.roots.begin(), res.roots.end(), [](const ProjRoot& a, const ProjRoot& b) {
        const mpz_class lhs = a.first * b.second, rhs = b.first * a.second;
        return lhs != rhs ? lhs < rhs : a.second < b.second;
    });
    res.complete = res.roots.size() == 4;
    return res;
}

}  // namespace degen
