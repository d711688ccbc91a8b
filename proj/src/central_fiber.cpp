#include "degen/central_fiber.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "degen/errors.hpp"
#include "degen/linalg.hpp"

namespace degen {

namespace {
const char* kCoordNames[4] = {"x", "y", "z", "w"};
}

const char* coord_name(int i) { return kCoordNames[i]; }

int coord_index(const std::string& name) {
    for (int i = 0; i < 4; ++i)
        if (name == kCoordNames[i]) return i;
    return -1;
}

// --- tetrahedron combinatorics -------------------------------------------------

const std::array<std::pair<int, int>, 6>& CentralFiber::edges() {
    static const std::array<std::pair<int, int>, 6> e{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return e;
}

int CentralFiber::edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    const auto& es = edges();
    for (int i = 0; i < kEdges; ++i)
        if (es[static_cast<std::size_t>(i)] == std::make_pair(a, b)) return i;
    return -1;
}

std::pair<int, int> CentralFiber::surviving(int edge) {
    const auto [a, b] = edges()[static_cast<std::size_t>(edge)];
    std::array<int, 2> s{};
    int n = 0;
    for (int i = 0; i < 4; ++i)
        if (i != a && i != b) s[static_cast<std::size_t>(n++)] = i;
    return {s[0], s[1]};
}

std::array<int, 3> CentralFiber::plane_edges(int plane) {
    std::array<int, 3> out{};
    int n = 0;
    for (int i = 0; i < kEdges; ++i) {
        const auto [a, b] = edges()[static_cast<std::size_t>(i)];
        if (a == plane || b == plane) out[static_cast<std::size_t>(n++)] = i;
    }
    return out;
}

std::array<int, 2> CentralFiber::edge_vertices(int edge) {
    const auto [k, l] = surviving(edge);
    return {k, l};
}

std::array<int, 3> CentralFiber::plane_coords(int plane) {
    std::array<int, 3> out{};
    int n = 0;
    for (int i = 0; i < 4; ++i)
        if (i != plane) out[static_cast<std::size_t>(n++)] = i;
    return out;
}

bool CentralFiber::check() {
    // Each plane touches 3 edges and 3 vertices, each edge 2 vertices, and
    // the Euler count of the tetrahedron boundary holds.
    for (int p = 0; p < kComponents; ++p) {
        const auto es = plane_edges(p);
        std::set<int> vs;
        for (int e : es) {
            const auto [a, b] = edges()[static_cast<std::size_t>(e)];
            if (a != p && b != p) return false;
            for (int v : edge_vertices(e))
                if (v != p) vs.insert(v);
        }
        if (vs.size() != 3 || vs.count(p) != 0) return false;
    }
    for (int e = 0; e < kEdges; ++e) {
        const auto [a, b] = edges()[static_cast<std::size_t>(e)];
        const auto [k, l] = surviving(e);
        std::set<int> all{a, b, k, l};
        if (all.size() != 4) return false;
    }
    return kComponents - kEdges + kVertices == 2;
}

// --- points and lines ----------------------------------------------------------

bool ProjPoint::is_rational() const {
    for (const auto& c : x)
        if (!c.is_rational()) return false;
    return true;
}

std::vector<int> ProjPoint::zero_coords() const {
    std::vector<int> out;
    for (int i = 0; i < 4; ++i)
        if (x[static_cast<std::size_t>(i)].is_zero()) out.push_back(i);
    return out;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) os << (i ? " : " : "") << x[static_cast<std::size_t>(i)].str();
    os << "]";
    return os.str();
}

bool proj_equal(const ProjPoint& a, const ProjPoint& b) {
    bool a_zero = true, b_zero = true;
    for (int i = 0; i < 4; ++i) {
        a_zero = a_zero && a.x[static_cast<std::size_t>(i)].is_zero();
        b_zero = b_zero && b.x[static_cast<std::size_t>(i)].is_zero();
    }
    if (a_zero || b_zero) return a_zero == b_zero;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const Scalar m = a.x[static_cast<std::size_t>(i)] * b.x[static_cast<std::size_t>(j)] -
                             a.x[static_cast<std::size_t>(j)] * b.x[static_cast<std::size_t>(i)];
            if (!m.is_zero()) return false;
        }
    return true;
}

bool LineInPlane::well_formed() const {
    if (plane < 0 || plane > 3) return false;
    for (int i = 0; i < 4; ++i)
        if (i != plane && !h[static_cast<std::size_t>(i)].is_zero()) return true;
    return false;
}

Scalar LineInPlane::form_at(const ProjPoint& p) const {
    Scalar v(0);
    for (int i = 0; i < 4; ++i) v += h[static_cast<std::size_t>(i)] * p.x[static_cast<std::size_t>(i)];
    return v;
}

LineInPlane line_in_plane(const std::array<Scalar, 4>& hyperplane, int plane) {
    LineInPlane l;
    l.plane = plane;
    l.h = hyperplane;
    return l;
}

bool check_torically_transverse(const LineInPlane& line) {
    for (int i = 0; i < 4; ++i)
        if (i != line.plane && line.h[static_cast<std::size_t>(i)].is_zero()) return false;
    return true;
}

ProjPoint line_edge_point(const LineInPlane& line, int other_plane) {
    const int e = CentralFiber::edge_index(line.plane, other_plane);
    if (e < 0) throw precondition_error("line_edge_point: invalid plane pair");
    const auto [k, l] = CentralFiber::surviving(e);
    ProjPoint p{{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
    p.x[static_cast<std::size_t>(k)] = line.h[static_cast<std::size_t>(l)];
    p.x[static_cast<std::size_t>(l)] = -line.h[static_cast<std::size_t>(k)];
    if (p.x[static_cast<std::size_t>(k)].is_zero() && p.x[static_cast<std::size_t>(l)].is_zero())
        throw precondition_error("line_edge_point: line contains the edge");
    return p;
}

// --- singular locus ------------------------------------------------------------

namespace {

std::string edge_name(int e) {
    const auto [a, b] = CentralFiber::edges()[static_cast<std::size_t>(e)];
    return std::string("{") + coord_name(a) + "," + coord_name(b) + "}";
}

/// Integer coefficient vector (index = exponent of the first surviving
/// coordinate) of f restricted to an edge; denominators cleared.
std::vector<mpz_class> edge_form_coeffs(const QuarticForm& f, int edge) {
    const auto [a, b] = CentralFiber::edges()[static_cast<std::size_t>(edge)];
    const auto [k, l] = CentralFiber::surviving(edge);
    const Poly rest = f.restrict_to_line(a, b);
    std::vector<mpq_class> q(5, 0);
    for (const auto& [e, c] : rest.terms()) {
        if (!c.is_rational()) throw precondition_error("singular locus needs plain-rational coefficients");
        q[static_cast<std::size_t>(e[static_cast<std::size_t>(k)])] = c.rational_value();
    }
    mpz_class lcm = 1;
    for (const auto& v : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> c(5);
    for (int d = 0; d <= 4; ++d) {
        mpq_class scaled = q[static_cast<std::size_t>(d)] * lcm;
        c[static_cast<std::size_t>(d)] = scaled.get_num();
    }
    return c;
}

}  // namespace

SingularLocus singular_locus(const QuarticForm& f) {
    if (!f.is_rational()) throw precondition_error("singular locus needs plain-rational coefficients");
    SingularLocus locus;
    locus.complete = true;
    for (int e = 0; e < CentralFiber::kEdges; ++e) {
        SingularEdge se;
        se.edge = e;
        se.form = edge_form_coeffs(f, e);
        if (se.form[4] == 0 || se.form[0] == 0)
            throw precondition_error("genericity violation on edge " + edge_name(e) +
                                     ": restricted quartic has a root at a vertex or degree < 4");
        const RationalRootResult rr = rational_roots_quartic(se.form);
        se.roots = rr.roots;
        se.complete = rr.complete;
        locus.complete = locus.complete && se.complete;
        locus.edges[static_cast<std::size_t>(e)] = std::move(se);
    }
    return locus;
}

bool on_singular_locus(const QuarticForm& f, const ProjPoint& p) {
    const auto zeros = p.zero_coords();
    if (zeros.size() != 2) throw precondition_error("on_singular_locus: point not on an edge interior");
    return f.eval(p.x).is_zero();
}

ProjPoint edge_point(int edge, const ProjRoot& root) {
    const auto [k, l] = CentralFiber::surviving(edge);
    ProjPoint p{{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
    p.x[static_cast<std::size_t>(k)] = Scalar(root.first);
    p.x[static_cast<std::size_t>(l)] = Scalar(root.second);
    return p;
}

// --- the designer ----------------------------------------------------------

namespace {

ProjRoot canonical_root(ProjRoot r) {
    if (r.second < 0 || (r.second == 0 && r.first < 0)) {
        r.first = -r.first;
        r.second = -r.second;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.first.get_mpz_t(), r.second.get_mpz_t());
    if (g > 1) {
        mpz_divexact(r.first.get_mpz_t(), r.first.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r.second.get_mpz_t(), r.second.get_mpz_t(), g.get_mpz_t());
    }
    return r;
}

/// Expands Π(bᵢ·u - aᵢ·v); result[d] is the u^d·v^(4-d) coefficient.
std::vector<mpz_class> expand_prescribed_form(const std::vector<ProjRoot>& roots) {
    std::vector<mpz_class> p{1};
    for (const auto& [a, b] : roots) {
        std::vector<mpz_class> next(p.size() + 1, 0);
        for (std::size_t d = 0; d < p.size(); ++d) {
            next[d + 1] += p[d] * b;
            next[d] -= p[d] * a;
        }
        p = std::move(next);
    }
    return p;
}

std::size_t monomial_index(const Exp4& e) {
    static const std::map<Exp4, std::size_t> index = [] {
        std::map<Exp4, std::size_t> m;
        const auto& basis = QuarticForm::monomial_basis();
        for (std::size_t i = 0; i < basis.size(); ++i) m[basis[i]] = i;
        return m;
    }();
    return index.at(e);
}

}  // namespace

DesignResult design_f(const Prescription& prescription) {
    // Group and sanity-check the prescription.
    std::array<std::vector<ProjRoot>, 6> per_edge;
    for (const auto& pt : prescription.points) {
        if (pt.edge < 0 || pt.edge >= 6) throw precondition_error("designer: bad edge id");
        const ProjRoot r = canonical_root(pt.root);
        if (r.first == 0 || r.second == 0)
            throw precondition_error("designer: prescribed root is a vertex on edge " + edge_name(pt.edge));
        per_edge[static_cast<std::size_t>(pt.edge)].push_back(r);
    }
    for (int e = 0; e < 6; ++e) {
        auto& roots = per_edge[static_cast<std::size_t>(e)];
        if (roots.size() != 4)
            throw precondition_error("designer: edge " + edge_name(e) + " needs exactly 4 prescribed points");
        std::set<ProjRoot> uniq(roots.begin(), roots.end());
        if (uniq.size() != 4)
            throw precondition_error("designer: repeated prescribed point on edge " + edge_name(e));
    }

    // 30 equations: restriction coefficient d of f on edge e equals λₑ times
    // the prescribed coefficient.  Unknowns: 35 quartic coefficients then 6 λ.
    constexpr std::size_t kCols = 41;
    linalg::Matrix<mpq_class> m;
    for (int e = 0; e < 6; ++e) {
        const auto [k, l] = CentralFiber::surviving(e);
        const auto p = expand_prescribed_form(per_edge[static_cast<std::size_t>(e)]);
        for (int d = 0; d <= 4; ++d) {
            std::vector<mpq_class> row(kCols, 0);
            Exp4 exp{0, 0, 0, 0};
            exp[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(d);
            exp[static_cast<std::size_t>(l)] = static_cast<std::int16_t>(4 - d);
            row[monomial_index(exp)] = 1;
            row[35 + static_cast<std::size_t>(e)] = -mpq_class(p[static_cast<std::size_t>(d)]);
            m.push_back(std::move(row));
        }
    }
    const auto basis = linalg::kernel_basis(m, kCols);

    // If some λₑ vanishes on the whole solution space, the prescription is
    // unrealizable (the triangle consistency conditions on the pure
    // fourth-power coefficients fail).
    for (int e = 0; e < 6; ++e) {
        bool reachable = false;
        for (const auto& v : basis) reachable = reachable || v[35 + static_cast<std::size_t>(e)] != 0;
        if (!reachable)
            throw precondition_error("designer: no solution with all edge scales nonzero (scale for edge " +
                                     edge_name(e) + " is forced to 0)");
    }

    // Deterministic search for a combination with every λₑ ≠ 0.
    std::vector<mpq_class> sol;
    for (unsigned attempt = 1; attempt <= 64 && sol.empty(); ++attempt) {
        std::vector<mpq_class> cand(kCols, 0);
        mpq_class w = 1;
        for (const auto& v : basis) {
            for (std::size_t j = 0; j < kCols; ++j) cand[j] += w * v[j];
            w *= attempt;  // attempt 1 = plain sum; later tries de-correlate
        }
        bool ok = true;
        for (int e = 0; e < 6; ++e) ok = ok && cand[35 + static_cast<std::size_t>(e)] != 0;
        if (ok) sol = std::move(cand);
    }
    if (sol.empty())
        throw precondition_error("designer: no solution with all edge scales nonzero");

    // Normalize so the first edge scale is 1 (f is defined up to scale).
    const mpq_class scale = sol[35];
    for (auto& v : sol) v /= scale;

    DesignResult result;
    result.solution_dim = static_cast<int>(basis.size());
    const auto& mono = QuarticForm::monomial_basis();
    for (std::size_t i = 0; i < 35; ++i)
        if (sol[i] != 0) result.f.set(mono[i], Scalar(sol[i]));
    for (int e = 0; e < 6; ++e) result.lambda[static_cast<std::size_t>(e)] = Scalar(sol[35 + static_cast<std::size_t>(e)]);
    return result;
}

namespace {

/// Small nonzero rationals used as root slots by the prescription generator.
const std::vector<std::pair<long, long>>& root_pool() {
    static const std::vector<std::pair<long, long>> pool{
        {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {3, 1}, {-3, 1}, {1, 2}, {-1, 2},
        {1, 3}, {-1, 3}, {4, 1}, {-4, 1}, {3, 2}, {-3, 2}, {2, 3}, {-2, 3}};
    return pool;
}

}  // namespace

Prescription realizable_prescription(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Pure fourth-power coefficients A_x..A_w: the root products on every
    // edge must satisfy Π(aᵢ/bᵢ) = A_second/A_first, which makes all triangle
    // consistency conditions hold automatically.
    std::array<mpq_class, 4> A;
    A[0] = 1;
    for (int i = 1; i < 4; ++i) A[static_cast<std::size_t>(i)] = 2 + static_cast<long>(rng() % 7);

    Prescription pr;
    for (int e = 0; e < 6; ++e) {
        const auto [k, l] = CentralFiber::surviving(e);
        const mpq_class target = A[static_cast<std::size_t>(l)] / A[static_cast<std::size_t>(k)];
        const auto& pool = root_pool();
        while (true) {
            std::set<mpq_class> used;
            mpq_class prod = 1;
            std::vector<mpq_class> roots;
            for (int i = 0; i < 3; ++i) {
                const auto [n, d] = pool[rng() % pool.size()];
                mpq_class t(n, d);
                t.canonicalize();
                if (used.count(t)) break;
                used.insert(t);
                roots.push_back(t);
                prod *= t;
            }
            if (roots.size() != 3) continue;
            mpq_class last = target / prod;
            if (used.count(last)) continue;
            roots.push_back(last);
            for (const auto& t : roots)
                pr.points.push_back({e, canonical_root({t.get_num(), t.get_den()})});
            break;
        }
    }
    return pr;
}

Prescription symmetric_prescription() {
    Prescription pr;
    for (int e = 0; e < 6; ++e) {
        pr.points.push_back({e, {1, 1}});
        pr.points.push_back({e, {-1, 1}});
        pr.points.push_back({e, {2, 1}});
        pr.points.push_back({e, {-2, 1}});
    }
    return pr;
}

// --- hyperplanes through points --------------------------------------------

HyperplaneThroughResult hyperplane_through(const std::vector<ProjPoint>& points) {
    if (points.size() > 3) throw precondition_error("hyperplane_through: at most 3 points");
    linalg::Matrix<mpq_class> m;
    for (const auto& p : points) {
        if (!p.is_rational()) throw precondition_error("hyperplane_through: points must be rational");
        std::vector<mpq_class> row(4);
        bool all_zero = true;
        for (int i = 0; i < 4; ++i) {
            row[static_cast<std::size_t>(i)] = p.x[static_cast<std::size_t>(i)].rational_value();
            all_zero = all_zero && row[static_cast<std::size_t>(i)] == 0;
        }
        if (all_zero) throw precondition_error("hyperplane_through: zero vector is not a point");
        m.push_back(std::move(row));
    }
    HyperplaneThroughResult res;
    if (m.empty()) {
        for (int i = 0; i < 4; ++i) {
            std::array<mpq_class, 4> v{0, 0, 0, 0};
            v[static_cast<std::size_t>(i)] = 1;
            res.basis.push_back(std::move(v));
        }
    } else {
        for (auto& v : linalg::kernel_basis(m, 4)) {
            std::array<mpq_class, 4> arr;
            std::copy(v.begin(), v.end(), arr.begin());
            res.basis.push_back(std::move(arr));
        }
    }
    if (res.basis.size() != 4 - points.size())
        throw precondition_error("hyperplane_through: degenerate configuration (dependent point conditions)");

    if (points.size() == 3) {
        res.spread_checked = true;
        res.spread_ok = true;
        for (int plane = 0; plane < 4; ++plane) {
            bool all_in = true;
            for (const auto& p : points) all_in = all_in && p.x[static_cast<std::size_t>(plane)].is_zero();
            if (all_in) res.spread_ok = false;
        }
    }
    return res;
}

std::array<Scalar, 4> pick_hyperplane(const HyperplaneThroughResult& solutions) {
    const auto& basis = solutions.basis;
    if (basis.empty()) throw precondition_error("pick_hyperplane: empty solution space");
    for (int i = 0; i < 4; ++i) {
        bool coord_reachable = false;
        for (const auto& v : basis) coord_reachable = coord_reachable || v[static_cast<std::size_t>(i)] != 0;
        if (!coord_reachable)
            throw precondition_error("pick_hyperplane: coefficient of " + std::string(coord_name(i)) +
                                     " vanishes on the whole solution space");
    }
    for (unsigned attempt = 1; attempt <= 64; ++attempt) {
        std::vector<mpq_class> cand(4, 0);
        mpq_class w = 1;
        for (const auto& v : basis) {
            for (std::size_t j = 0; j < 4; ++j) cand[j] += w * v[j];
            w *= attempt;
        }
        bool ok = true;
        for (const auto& c : cand) ok = ok && c != 0;
        if (!ok) continue;
        // Canonical integer representative: clear denominators, divide by the
        // content, make the first entry positive.
        mpz_class lcm = 1;
        for (const auto& c : cand) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::array<mpz_class, 4> ints;
        mpz_class g = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            mpq_class s = cand[j] * lcm;
            ints[j] = s.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
        }
        std::array<Scalar, 4> out;
        const bool flip = ints[0] < 0;
        for (std::size_t j = 0; j < 4; ++j) {
            mpz_class v;
            mpz_divexact(v.get_mpz_t(), ints[j].get_mpz_t(), g.get_mpz_t());
            out[j] = Scalar(flip ? mpz_class(-v) : v);
        }
        return out;
    }
    throw precondition_error("pick_hyperplane: no member with all coefficients nonzero found");
}

}  // namespace degen
