// Quartic forms, chart decompositions at nodes of the coordinate
// tetrahedron, and the truncated lift machinery built on them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "degen/chart.hpp"
#include "degen/errors.hpp"
#include "degen/lift.hpp"

using namespace degen;

namespace {

Scalar A() { return Scalar::alpha(); }
Scalar B() { return Scalar::beta(); }
Scalar G() { return Scalar::gamma(); }

QuarticForm random_quartic(std::mt19937_64& rng) {
    QuarticForm f;
    for (const auto& e : QuarticForm::monomial_basis()) {
        if (rng() % 3 == 0) continue;
        long num = (long)(rng() % 15) - 7;
        if (num == 0) num = 2;
        mpq_class q(num);
        q /= (long)(1 + rng() % 3);
        f.set(e, Scalar(q));
    }
    if (f.is_zero()) f.set({4, 0, 0, 0}, Scalar(1));
    return f;
}

// Node of the {z,w} edge where the symbolic hyperplane (alpha,beta,gamma,1)
// meets it.
ProjPoint lk_node() { return ProjPoint{{B(), -A(), Scalar(0), Scalar(0)}}; }

}  // namespace

TEST_CASE("quartic form container") {
    QuarticForm f;
    CHECK(f.is_zero());
    f.set({4, 0, 0, 0}, Scalar(3));
    f.set({1, 1, 1, 1}, A());
    CHECK(f.term_count() == 2);
    CHECK(f.coeff({4, 0, 0, 0}) == Scalar(3));
    CHECK(f.coeff({0, 4, 0, 0}).is_zero());
    CHECK_FALSE(f.is_rational());
    f.set({1, 1, 1, 1}, Scalar(0));  // setting zero erases
    CHECK(f.term_count() == 1);
    CHECK(f.is_rational());

    CHECK_THROWS_AS(f.set({5, 0, 0, 0}, Scalar(1)), precondition_error);
    CHECK_THROWS_AS(f.set({2, 1, 0, 0}, Scalar(1)), precondition_error);
    CHECK(QuarticForm::monomial_basis().size() == 35);
}

TEST_CASE("quartic evaluation and line restriction") {
    QuarticForm f;
    f.set({2, 2, 0, 0}, Scalar(3));
    f.set({0, 0, 4, 0}, Scalar(1));
    f.set({1, 0, 2, 1}, Scalar(-2));

    const std::array<Scalar, 4> at{Scalar(1), Scalar(2), Scalar(-1), Scalar(5)};
    // 3*1*4 + 1 - 2*1*1*5 = 3
    CHECK(f.eval(at) == Scalar(3));

    // On the edge {x = y = 0} only z^4 survives.
    const Poly rz = f.restrict_to_line(0, 1);
    CHECK(rz == Poly::var(2, 4));
    // On {z = w = 0} only the x^2 y^2 term survives.
    const Poly rx = f.restrict_to_line(2, 3);
    CHECK(rx == Poly::var(0, 2) * Poly::var(1, 2) * Scalar(3));
}

TEST_CASE("chart decomposition routes monomials deterministically") {
    const ProjPoint p = lk_node();

    QuarticForm f;  // pure pivot power: everything lands in the remainder
    f.set({4, 0, 0, 0}, Scalar(1));
    auto d = chart_decompose(f, 0, p);
    CHECK(d.pivot == 0);
    CHECK(d.run == 1);
    CHECK(d.lo == 2);
    CHECK(d.hi == 3);
    CHECK(d.b == -A() / B());
    CHECK(d.c0 == Scalar(1));
    CHECK(d.g1.is_zero());
    CHECK(d.g2.is_zero());
    CHECK(d.g3.is_zero());

    QuarticForm fw;  // divisible by hi = w -> g3
    fw.set({3, 0, 0, 1}, Scalar(1));
    d = chart_decompose(fw, 0, p);
    CHECK(d.c0.is_zero());
    CHECK(d.g3 == Poly(Scalar(1)));

    QuarticForm fz;  // divisible by lo = z but not hi -> g2
    fz.set({2, 1, 1, 0}, Scalar(1));
    d = chart_decompose(fz, 0, p);
    CHECK(d.g2 == Poly::var(0));  // the surviving y/x factor
    CHECK(d.g3.is_zero());

    QuarticForm fzw;  // divisible by both: hi wins
    fzw.set({2, 0, 1, 1}, Scalar(1));
    d = chart_decompose(fzw, 0, p);
    CHECK(d.g2.is_zero());
    CHECK(d.g3 == Poly::var(1));  // z/x remains inside g3
}

TEST_CASE("chart reassembly is exact and linear") {
    std::mt19937_64 rng(11);
    const ProjPoint p = lk_node();
    for (int trial = 0; trial < 6; ++trial) {
        const QuarticForm f = random_quartic(rng);
        const QuarticForm g = random_quartic(rng);
        const auto df = chart_decompose(f, 0, p);
        CHECK(chart_reassemble(df) == dehomogenize(f, 0));

        // Linearity: the split of f+g is the split of f plus the split of g.
        const auto dg = chart_decompose(g, 0, p);
        const auto dsum = chart_decompose(f + g, 0, p);
        CHECK(dsum.c0 == df.c0 + dg.c0);
        CHECK(dsum.g1 == df.g1 + dg.g1);
        CHECK(dsum.g2 == df.g2 + dg.g2);
        CHECK(dsum.g3 == df.g3 + dg.g3);
    }
}

TEST_CASE("chart decomposition rejects malformed bases") {
    QuarticForm f;
    f.set({4, 0, 0, 0}, Scalar(1));
    // three zero coordinates: a vertex, not an edge point
    const ProjPoint vertex{{Scalar(1), Scalar(0), Scalar(0), Scalar(0)}};
    CHECK_THROWS_AS(chart_decompose(f, 0, vertex), precondition_error);
    // pivot vanishes at the base
    const ProjPoint p = lk_node();
    CHECK_THROWS_AS(chart_decompose(f, 2, p), precondition_error);
}

TEST_CASE("series collection of the family equation") {
    // For f = x^4 in chart x, the equation is y z w + t (the chart constant 1
    // contributes t^1 u^0 after substituting a lift).
    QuarticForm f;
    f.set({4, 0, 0, 0}, Scalar(1));
    const Poly eq = chart_equation(f, 0);
    CHECK(eq == Poly::var(0) * Poly::var(1) * Poly::var(2) + Poly::var(3));

    // Unsolved ansatz with a symbolic pole coefficient s: the t^1 u^0
    // equation must read alpha*s + c0.
    const ProjPoint p = lk_node();
    const std::array<Scalar, 4> H{A(), B(), G(), Scalar(1)};
    const LineInPlane l = line_in_plane(H, 3);
    const NodeBranchLift solved = local_lift_solve(f, l, p, 1);
    LiftSeries probe = solved.series;
    const Poly delta = Poly::var(0, -1) * Scalar::s();
    const int srun = solved.chart.slot_of(solved.chart.run);
    const int splane = solved.chart.slot_of(solved.plane_coord);
    probe.tracks[(std::size_t)srun][1] = delta;
    probe.tracks[(std::size_t)splane][1] = delta * solved.mu;
    const auto table = series_collect(chart_equation(f, 0), probe, 1);
    CHECK(table.at({1, 0}) == A() * Scalar::s() + solved.chart.c0);
}

TEST_CASE("branch lift closed forms at the l^k node") {
    const ProjPoint p = lk_node();
    const std::array<Scalar, 4> H{A(), B(), G(), Scalar(1)};
    const LineInPlane l = line_in_plane(H, 3);
    REQUIRE(l.form_at(p).is_zero());

    auto check_closed_form = [&](const QuarticForm& f) {
        const NodeBranchLift lift = local_lift_solve(f, l, p, 1);
        const ChartDecomposition& d = lift.chart;
        const Scalar b = -A() / B();
        const std::array<Scalar, 4> at{b, Scalar(0), Scalar(0), Scalar(0)};
        CHECK(lift.lambda == -(G() / B()));
        CHECK(lift.mu == -B());
        CHECK(lift.eps1() == -(d.c0 / A()));
        CHECK(lift.a1() == G() / (A() * A()) * d.c0 + G() / (A() * B()) * d.g1.eval(at) -
                               Scalar(1) / A() * d.g2.eval(at));
    };

    for (Exp4 e : {Exp4{4, 0, 0, 0}, Exp4{3, 0, 1, 0}, Exp4{2, 1, 1, 0}, Exp4{1, 1, 1, 1},
                   Exp4{0, 4, 0, 0}, Exp4{2, 0, 0, 2}, Exp4{1, 2, 1, 0}}) {
        QuarticForm f;
        f.set(e, Scalar(1));
        check_closed_form(f);
    }
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 4; ++trial) check_closed_form(random_quartic(rng));
}

TEST_CASE("branch lift is triangular in the order") {
    const ProjPoint p = lk_node();
    const std::array<Scalar, 4> H{A(), B(), G(), Scalar(1)};
    const LineInPlane l = line_in_plane(H, 3);

    QuarticForm f;
    f.set({2, 1, 1, 0}, Scalar(1));
    f.set({1, 1, 1, 1}, Scalar(4));
    f.set({0, 2, 0, 2}, Scalar(-3));
    const NodeBranchLift l1 = local_lift_solve(f, l, p, 1);
    const NodeBranchLift l3 = local_lift_solve(f, l, p, 3);
    CHECK(l1.eps1() == l3.eps1());
    CHECK(l1.a1() == l3.a1());
    CHECK(l3.delta.size() == 4);
    CHECK(l3.series.check());

    // Zero quartic: nothing to correct.
    const NodeBranchLift trivial = local_lift_solve(QuarticForm(), l, p, 2);
    for (const auto& c : trivial.delta) CHECK(c.is_zero());
}

TEST_CASE("branch lift preconditions") {
    const std::array<Scalar, 4> H{A(), B(), G(), Scalar(1)};
    const LineInPlane l = line_in_plane(H, 3);
    QuarticForm f;
    f.set({4, 0, 0, 0}, Scalar(1));

    CHECK_THROWS_AS(local_lift_solve(f, l, lk_node(), 0), precondition_error);
    // point not on the line
    const ProjPoint off{{Scalar(1), Scalar(1), Scalar(0), Scalar(0)}};
    CHECK_THROWS_AS(local_lift_solve(f, l, off, 1), precondition_error);
    // point not on an edge
    const ProjPoint generic{{Scalar(1), Scalar(1), Scalar(1), Scalar(1)}};
    CHECK_THROWS_AS(local_lift_solve(f, l, generic, 1), precondition_error);
    // line's plane does not vanish at the point: l sits in {w=0} but the
    // point below has w != 0
    const ProjPoint wpoint{{G(), Scalar(0), Scalar(0), -A()}};
    CHECK_THROWS_AS(local_lift_solve(f, l, wpoint, 1), precondition_error);
}

TEST_CASE("local model lift solves XY + tZ = 0") {
    const std::vector<Scalar> p{Scalar(1), Scalar(-2), Scalar(3), Scalar(5)};
    const std::vector<Scalar> q{Scalar(2), Scalar(7), Scalar(-1), Scalar(4)};
    const LocalModelLift m = local_model_lift(p, q, Scalar(9), 3);
    CHECK(m.smoothes_node);
    CHECK(m.branch1.check());
    CHECK(m.branch2.check());

    const Poly model_eq = Poly::var(0) * Poly::var(1) + Poly::var(3) * Poly::var(2);
    CHECK(series_collect(model_eq, m.branch1, 3).empty());
    CHECK(series_collect(model_eq, m.branch2, 3).empty());

    // r0 = 0: the node is not smoothed, and branch 1 degenerates to
    // (u, -t*p(u)/u, p(u)).
    const LocalModelLift flat = local_model_lift({Scalar(1)}, {Scalar(1)}, Scalar(0), 1);
    CHECK_FALSE(flat.smoothes_node);
    CHECK(flat.branch1.tracks[1][1] == Poly(Scalar(-1)));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Scalar> ps, qs;
        for (int i = 0; i < 4; ++i) {
            ps.push_back(Scalar((long)(rng() % 13) - 6));
            qs.push_back(Scalar((long)(rng() % 13) - 6));
        }
        const Scalar r0((long)(rng() % 7) - 3);
        const LocalModelLift mm = local_model_lift(ps, qs, r0, 3);
        CHECK(mm.smoothes_node == !r0.is_zero());
        CHECK(series_collect(model_eq, mm.branch1, 3).empty());
        CHECK(series_collect(model_eq, mm.branch2, 3).empty());
    }
}
