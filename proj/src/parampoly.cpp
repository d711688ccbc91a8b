#include "degen/parampoly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "degen/errors.hpp"

namespace degen {

namespace {

constexpr ParamExp kConstExp{0, 0, 0, 0, 0};

const char* kGreek[kNumParams] = {"α", "β", "γ", "δ", "s"};
const char* kAscii[kNumParams] = {"alpha", "beta", "gamma", "delta", "s"};

}  // namespace

const char* param_name(int idx) { return kGreek[idx]; }

ParamPoly::ParamPoly(long v) {
    if (v != 0) terms_[kConstExp] = v;
}

ParamPoly::ParamPoly(const mpz_class& v) {
    if (v != 0) terms_[kConstExp] = v;
}

ParamPoly ParamPoly::symbol(int idx, unsigned power) {
    ParamPoly p;
    if (power == 0) return ParamPoly(1);
    ParamExp e = kConstExp;
    e[static_cast<std::size_t>(idx)] = static_cast<std::uint16_t>(power);
    p.terms_[e] = 1;
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kConstExp);
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == kConstExp && terms_.begin()->second == 1;
}

const mpz_class& ParamPoly::constant_value() const {
    static const mpz_class zero = 0;
    if (terms_.empty()) return zero;
    return terms_.begin()->second;
}

int ParamPoly::degree(int idx) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(idx)]));
    return d;
}

int ParamPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int i = 0; i < kNumParams; ++i) t += e[static_cast<std::size_t>(i)];
        d = std::max(d, t);
    }
    return d;
}

const mpz_class& ParamPoly::leading_coeff() const { return terms_.begin()->second; }
const ParamExp& ParamPoly::leading_exp() const { return terms_.begin()->first; }

void ParamPoly::insert_term(const ParamExp& e, mpz_class c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ParamExp e;
            for (int i = 0; i < kNumParams; ++i)
                e[static_cast<std::size_t>(i)] =
                    static_cast<std::uint16_t>(ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)]);
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly r(1);
    ParamPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

bool ParamPoly::operator<(const ParamPoly& o) const {
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return LexDesc{}(b->first, a->first);
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
}

mpz_class ParamPoly::int_content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpq_class ParamPoly::eval(const std::array<mpq_class, kNumParams>& at) const {
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term(c);
        for (int i = 0; i < kNumParams; ++i) {
            for (unsigned k = 0; k < e[static_cast<std::size_t>(i)]; ++k)
                term *= at[static_cast<std::size_t>(i)];
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

ParamPoly ParamPoly::monomial(const ParamExp& e, mpz_class c) {
    ParamPoly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

// --- gcd machinery -----------------------------------------------------------
//
// Primary algorithm: heuristic gcd.  Evaluate one variable at a large integer
// point ξ, take the gcd one level down, read the candidate divisor back off
// the balanced ξ-adic digits, and certify it by exact division.  An unlucky ξ
// just fails the division check and we retry with a larger point.  This keeps
// all the intermediate swell inside single big integers, which is exactly what
// GMP is good at; a primitive pseudo-remainder sequence is kept as the
// (practically unreachable) fallback.

namespace {

int deg_in(const ParamPoly& p, int v) { return p.degree(v); }

/// Coefficient of v^k, as a polynomial in the remaining parameters.
ParamPoly coeff_of(const ParamPoly& p, int v, int k) {
    ParamPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e[static_cast<std::size_t>(v)] != k) continue;
        ParamExp e2 = e;
        e2[static_cast<std::size_t>(v)] = 0;
        r += ParamPoly::monomial(e2, c);
    }
    return r;
}

/// Content of p viewed as univariate in v: gcd of its v-coefficients.
ParamPoly content_in(const ParamPoly& p, int v) {
    ParamPoly g;
    for (int k = 0; k <= deg_in(p, v); ++k) {
        ParamPoly c = coeff_of(p, v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? std::move(c) : ParamPoly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

/// One full pseudo-remainder: repeatedly kill the leading v-term.
ParamPoly prem(ParamPoly r, const ParamPoly& q, int v) {
    const int dq = deg_in(q, v);
    const ParamPoly lq = coeff_of(q, v, dq);
    while (!r.is_zero()) {
        const int dr = deg_in(r, v);
        if (dr < dq) break;
        const ParamPoly lr = coeff_of(r, v, dr);
        r = lq * r - lr * ParamPoly::symbol(v, static_cast<unsigned>(dr - dq)) * q;
    }
    return r;
}

ParamPoly normalize_sign(ParamPoly p) {
    if (!p.is_zero() && p.leading_coeff() < 0) p = -p;
    return p;
}

mpz_class max_norm(const ParamPoly& p) {
    mpz_class m = 0;
    for (const auto& [e, c] : p.terms())
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    return m;
}

/// Used variable with the smallest worst-case degree (fewest ξ-adic digits).
int pick_var(const ParamPoly& a, const ParamPoly& b) {
    int best = -1, best_deg = 0;
    for (int v = 0; v < kNumParams; ++v) {
        const int d = std::max(a.degree(v), b.degree(v));
        if (d > 0 && (best < 0 || d < best_deg)) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

/// Substitute the integer xi for variable v.
ParamPoly eval_var(const ParamPoly& p, int v, const mpz_class& xi) {
    std::vector<mpz_class> pw(static_cast<std::size_t>(p.degree(v)) + 1);
    pw[0] = 1;
    for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * xi;
    ParamPoly r;
    for (const auto& [e, c] : p.terms()) {
        ParamExp e2 = e;
        const unsigned k = e2[static_cast<std::size_t>(v)];
        e2[static_cast<std::size_t>(v)] = 0;
        r += ParamPoly::monomial(e2, c * pw[k]);
    }
    return r;
}

/// Exponent vector of the largest monomial dividing every term of p.
ParamExp monomial_content(const ParamPoly& p) {
    ParamExp m{};
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < kNumParams; ++i)
                m[static_cast<std::size_t>(i)] = std::min(m[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
        }
    }
    return m;
}

/// Exact division of p by the monomial x^m.
ParamPoly shift_down(const ParamPoly& p, const ParamExp& m) {
    ParamPoly r;
    for (const auto& [e, c] : p.terms()) {
        ParamExp e2;
        for (int i = 0; i < kNumParams; ++i)
            e2[static_cast<std::size_t>(i)] =
                static_cast<std::uint16_t>(e[static_cast<std::size_t>(i)] - m[static_cast<std::size_t>(i)]);
        r += ParamPoly::monomial(e2, c);
    }
    return r;
}

/// Splits off the balanced low ξ-adic digit of w; w becomes (w - digit) / ξ.
ParamPoly take_digit(ParamPoly& w, const mpz_class& xi) {
    const mpz_class half = xi / 2;
    ParamPoly digit, next;
    for (const auto& [e, c] : w.terms()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        mpz_class q = c - r;
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
        digit += ParamPoly::monomial(e, std::move(r));
        next += ParamPoly::monomial(e, std::move(q));
    }
    w = std::move(next);
    return digit;
}

/// Heuristic gcd (contents included).  std::nullopt when every evaluation
/// point was unlucky; the caller then falls back to the remainder sequence.
std::optional<ParamPoly> heu_gcd(const ParamPoly& a, const ParamPoly& b) {
    mpz_class ia = a.int_content(), ib = b.int_content(), ig;
    mpz_gcd(ig.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    const ParamPoly ap = ParamPoly::divexact(a, ParamPoly(ia));
    const ParamPoly bp = ParamPoly::divexact(b, ParamPoly(ib));
    const int v = pick_var(ap, bp);
    if (v < 0) return ParamPoly(ig);  // both constant after content split
    const int digit_cap = std::min(ap.degree(v), bp.degree(v));
    mpz_class xi = 2 * std::min(max_norm(ap), max_norm(bp)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 73794 / 27011) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) > 2000000) break;
        const ParamPoly A = eval_var(ap, v, xi);
        const ParamPoly B = eval_var(bp, v, xi);
        if (A.is_zero() || B.is_zero()) continue;
        const auto gh = heu_gcd(A, B);
        if (!gh) continue;
        ParamPoly G, w = *gh;
        bool degree_overrun = false;
        for (int i = 0; !w.is_zero(); ++i) {
            if (i > digit_cap) {
                degree_overrun = true;
                break;
            }
            const ParamPoly d = take_digit(w, xi);
            if (!d.is_zero()) G += d * ParamPoly::symbol(v, static_cast<unsigned>(i));
        }
        if (degree_overrun || G.is_zero()) continue;
        G = normalize_sign(std::move(G));
        const mpz_class c = G.int_content();
        if (c != 1) G = ParamPoly::divexact(G, ParamPoly(c));
        if (ParamPoly::try_divexact(ap, G, nullptr) && ParamPoly::try_divexact(bp, G, nullptr))
            return ParamPoly(ig) * G;
    }
    return std::nullopt;
}

/// Primitive pseudo-remainder sequence on integer-primitive inputs.
ParamPoly prs_gcd(const ParamPoly& a, const ParamPoly& b) {
    const int v = pick_var(a, b);
    if (v < 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
        return ParamPoly(g);
    }
    const ParamPoly ca = content_in(a, v);
    const ParamPoly cb = content_in(b, v);
    const ParamPoly cg = ParamPoly::gcd(ca, cb);
    ParamPoly p = ParamPoly::divexact(a, ca);
    ParamPoly q = ParamPoly::divexact(b, cb);
    if (deg_in(p, v) < deg_in(q, v)) std::swap(p, q);
    while (true) {
        if (q.is_zero()) return cg * p;
        if (deg_in(q, v) == 0) return cg;
        ParamPoly r = prem(p, q, v);
        if (!r.is_zero()) {
            const mpz_class c = r.int_content();
            if (c != 1) r = ParamPoly::divexact(r, ParamPoly(c));
            r = ParamPoly::divexact(r, content_in(r, v));
        }
        p = std::move(q);
        q = std::move(r);
    }
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    // Integer and monomial contents come off first; in this engine most gcds
    // are exactly of that shape (denominators are usually parameter powers).
    mpz_class ia = a.int_content(), ib = b.int_content(), ig;
    mpz_gcd(ig.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    ParamPoly ap = divexact(a, ParamPoly(ia));
    ParamPoly bp = divexact(b, ParamPoly(ib));
    const ParamExp ma = monomial_content(ap);
    const ParamExp mb = monomial_content(bp);
    ParamExp mg;
    for (int i = 0; i < kNumParams; ++i)
        mg[static_cast<std::size_t>(i)] = std::min(ma[static_cast<std::size_t>(i)], mb[static_cast<std::size_t>(i)]);
    ap = shift_down(ap, ma);
    bp = shift_down(bp, mb);
    const ParamPoly common = monomial(mg, ig);
    if (ap.is_constant() || bp.is_constant()) return common;  // a stripped input is ±1
    if (ap == bp || ap == -bp) return common * normalize_sign(std::move(ap));
    if (auto g = heu_gcd(ap, bp)) return common * normalize_sign(std::move(*g));
    return common * normalize_sign(prs_gcd(ap, bp));
}

bool ParamPoly::try_divexact(const ParamPoly& a, const ParamPoly& b, ParamPoly* quot) {
    if (b.is_zero()) return false;
    ParamPoly r = a;
    ParamPoly q;
    const ParamExp& eb = b.leading_exp();
    const mpz_class& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const ParamExp& er = r.leading_exp();
        ParamExp em;
        for (int i = 0; i < kNumParams; ++i) {
            if (er[static_cast<std::size_t>(i)] < eb[static_cast<std::size_t>(i)]) return false;
            em[static_cast<std::size_t>(i)] =
                static_cast<std::uint16_t>(er[static_cast<std::size_t>(i)] - eb[static_cast<std::size_t>(i)]);
        }
        mpz_class cm, rem;
        mpz_tdiv_qr(cm.get_mpz_t(), rem.get_mpz_t(), r.leading_coeff().get_mpz_t(), cb.get_mpz_t());
        if (rem != 0) return false;
        ParamPoly mono;
        mono.terms_[em] = std::move(cm);
        q += mono;
        r -= mono * b;
    }
    if (quot) *quot = std::move(q);
    return true;
}

ParamPoly ParamPoly::divexact(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw std::logic_error("ParamPoly::divexact: division by zero polynomial");
    if (b.is_one()) return a;
    ParamPoly q;
    if (!try_divexact(a, b, &q)) throw std::logic_error("ParamPoly::divexact: inexact division");
    return q;
}

// --- printing ----------------------------------------------------------------

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        mpz_class mag = neg ? mpz_class(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool has_sym = e != kConstExp;
        bool coeff_printed = false;
        if (!has_sym || mag != 1) {
            out << mag.get_str();
            coeff_printed = true;
        }
        bool any = false;
        for (int i = 0; i < kNumParams; ++i) {
            const unsigned p = e[static_cast<std::size_t>(i)];
            if (p == 0) continue;
            if (coeff_printed || any) out << "*";
            out << kGreek[i];
            if (p > 1) out << "^" << p;
            any = true;
        }
    }
    return out.str();
}

// --- parsing -----------------------------------------------------------------

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) != w) return false;
        // ASCII alias must not be a prefix of a longer identifier.
        if (std::isalpha(static_cast<unsigned char>(w[0]))) {
            const std::size_t end = pos + w.size();
            if (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) return false;
        }
        pos += w.size();
        return true;
    }
    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw parse_error("expected integer at offset " + std::to_string(start));
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }
};

struct PolyParser {
    Lexer lex;
    bool allow_div;

    // grammar:  expr   := ['-'] term (('+'|'-') term)*
    //           term   := factor (('*'|'/') factor)*        (`/` only for Scalar)
    //           factor := atom ['^' INT]
    //           atom   := INT | PARAM | '(' expr ')' | '-' factor
    // Division is resolved by the caller (numerator/denominator pairs).
    struct Frac {
        ParamPoly num, den;
    };

    Frac expr() {
        Frac acc = lex.accept('-') ? neg(term()) : term();
        while (true) {
            if (lex.accept('+')) {
                acc = add(acc, term());
            } else if (lex.accept('-')) {
                acc = add(acc, neg(term()));
            } else {
                return acc;
            }
        }
    }

    Frac term() {
        Frac acc = factor();
        while (true) {
            if (lex.accept('*')) {
                Frac f = factor();
                acc = Frac{acc.num * f.num, acc.den * f.den};
            } else if (allow_div && lex.peek() == '/') {
                lex.accept('/');
                Frac f = factor();
                if (f.num.is_zero()) throw parse_error("division by zero in scalar expression");
                acc = Frac{acc.num * f.den, acc.den * f.num};
            } else {
                return acc;
            }
        }
    }

    Frac factor() {
        Frac base = atom();
        if (lex.accept('^')) {
            mpz_class e = lex.integer();
            if (e < 0 || e > 64) throw parse_error("unsupported exponent");
            unsigned u = static_cast<unsigned>(e.get_ui());
            return Frac{base.num.pow(u), base.den.pow(u)};
        }
        return base;
    }

    Frac atom() {
        if (lex.accept('(')) {
            Frac inner = expr();
            if (!lex.accept(')')) throw parse_error("missing ')'");
            return inner;
        }
        if (lex.accept('-')) return neg(factor());
        for (int i = 0; i < kNumParams; ++i) {
            if (lex.accept_word(kGreek[i]) || (i != P_S && lex.accept_word(kAscii[i])))
                return Frac{ParamPoly::symbol(i), ParamPoly(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) return Frac{ParamPoly(lex.integer()), ParamPoly(1)};
        throw parse_error("unexpected token at offset " + std::to_string(lex.pos));
    }

    static Frac neg(Frac f) { return Frac{-f.num, f.den}; }
    static Frac add(const Frac& a, const Frac& b) { return Frac{a.num * b.den + b.num * a.den, a.den * b.den}; }
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text) {
    PolyParser p{Lexer{text}, /*allow_div=*/false};
    auto f = p.expr();
    if (!p.lex.eof()) throw parse_error("trailing input at offset " + std::to_string(p.lex.pos));
    if (!f.den.is_constant() || f.den.constant_value() != 1)
        throw parse_error("division not allowed in polynomial context");
    return f.num;
}

namespace detail {
// Shared with Scalar::parse (scalar.cpp).
std::pair<ParamPoly, ParamPoly> parse_fraction(std::string_view text) {
    PolyParser p{Lexer{text}, /*allow_div=*/true};
    auto f = p.expr();
    if (!p.lex.eof()) throw parse_error("trailing input at offset " + std::to_string(p.lex.pos));
    return {f.num, f.den};
}
}  // namespace detail

}  // namespace degen
